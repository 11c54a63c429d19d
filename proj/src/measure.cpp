#include "rankone/measure.hpp"

#include "rankone/error.hpp"

namespace rankone {

mpq_class make_rational(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

mpq_class partial_normalizer(const ParamSpec& params, std::size_t n) {
  return make_rational(word_length(params, n), zero_count(params, n));
}

NormalizerResult normalizer(const ParamSpec& params) {
  const std::size_t p = params.prefix_length();
  if (!params.is_periodic()) {
    return {NormalizerResult::Kind::LowerBound, partial_normalizer(params, p), p};
  }
  // Z = Z_P + (1/P_P) * A * rho / (rho - 1), where A = sum_j sum(t_j) / Q_{j+1}
  // over one cycle t_0..t_{c-1}, Q_j the partial cut products and rho = Q_c.
  mpq_class cycle_mass = 0;
  mpz_class q = 1;
  for (const auto& level : *params.cycle) {
    q *= static_cast<unsigned long>(level.r);
    cycle_mass += make_rational(mpz_class(std::to_string(level.s.sum())), q);
  }
  const mpz_class& rho = q;
  mpq_class tail = cycle_mass * make_rational(rho, rho - 1) / mpq_class(zero_count(params, p));
  mpq_class z = partial_normalizer(params, p) + tail;
  z.canonicalize();
  return {NormalizerResult::Kind::Exact, z, 0};
}

namespace {

mpq_class exact_normalizer(const ParamSpec& params, const char* op) {
  if (!params.is_periodic()) {
    throw Error(ErrorCode::UnspecifiedTail, std::string(op) + " needs an exact normalizer (periodic tail)");
  }
  return normalizer(params).value;
}

}  // namespace

mpq_class cylinder_measure(const ParamSpec& params, std::size_t n) {
  const mpq_class z = exact_normalizer(params, "cylinder_measure");
  mpq_class m = 1 / (mpq_class(zero_count(params, n)) * z);
  m.canonicalize();
  return m;
}

mpq_class tower_mass(const ParamSpec& params, std::size_t n) {
  const mpq_class z = exact_normalizer(params, "tower_mass");
  mpq_class m = partial_normalizer(params, n) / z;
  m.canonicalize();
  return m;
}

SymbolMeasures symbol_measures(const ParamSpec& params) {
  const mpq_class z = exact_normalizer(params, "symbol_measures");
  SymbolMeasures out{1 / z, 0};
  out.zero.canonicalize();
  out.one = 1 - out.zero;
  out.one.canonicalize();
  return out;
}

}  // namespace rankone
