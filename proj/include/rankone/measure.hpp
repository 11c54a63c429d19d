#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

#include "rankone/params.hpp"

namespace rankone {

// Exact rationals are GMP's mpq_class, always kept canonical (reduced, den > 0).
mpq_class make_rational(const mpz_class& num, const mpz_class& den);
std::string to_string(const mpq_class& q);  // "3/2", "2"

struct NormalizerResult {
  enum class Kind { Exact, LowerBound };
  Kind kind = Kind::Exact;
  mpq_class value;
  std::size_t depth = 0;  // only meaningful for LowerBound

  bool exact() const noexcept { return kind == Kind::Exact; }
};

// Z_n = |v_n| / #zeros(v_n).
mpq_class partial_normalizer(const ParamSpec& params, std::size_t n);

// Total mass of the invariant measure giving the 0-cylinder mass 1. Exact for
// periodic tails (geometric series over one cycle), else Z_P for prefix length P.
NormalizerResult normalizer(const ParamSpec& params);

// mu(E_{v_n,i}) = 1 / (P_n Z). Throws UnspecifiedTail.
mpq_class cylinder_measure(const ParamSpec& params, std::size_t n);

// |v_n| mu(E_{v_n,0}) = Z_n / Z. Throws UnspecifiedTail.
mpq_class tower_mass(const ParamSpec& params, std::size_t n);

struct SymbolMeasures {
  mpq_class zero;
  mpq_class one;
};

SymbolMeasures symbol_measures(const ParamSpec& params);

}  // namespace rankone
