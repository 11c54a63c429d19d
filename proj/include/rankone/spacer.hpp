#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rankone {

using Spacer = std::uint64_t;

// Spacer counts s(1), ..., s(r-1) for a level with r cuts. Never empty.
class SpacerTuple {
 public:
  SpacerTuple(std::initializer_list<Spacer> values);
  explicit SpacerTuple(std::vector<Spacer> values);

  // Number of cuts r implied by the tuple (size + 1).
  std::size_t cuts() const noexcept { return values_.size() + 1; }
  std::size_t size() const noexcept { return values_.size(); }

  // 1-based access matching the s(i), 0 < i < r convention.
  Spacer at(std::size_t i) const;
  Spacer operator[](std::size_t zero_based) const noexcept { return values_[zero_based]; }

  std::span<const Spacer> values() const noexcept { return values_; }
  Spacer sum() const noexcept;
  Spacer max() const noexcept;

  std::string to_string() const;  // "0,1,0"

  friend bool operator==(const SpacerTuple&, const SpacerTuple&) = default;
  friend auto operator<=>(const SpacerTuple&, const SpacerTuple&) = default;

 private:
  std::vector<Spacer> values_;
};

// Parses "0,1,0" (whitespace tolerated). Throws InvalidTuple.
SpacerTuple parse_tuple(std::string_view text);

// Spacer tuple of the level obtained by deleting the intermediate word between
// a level with tuple `lower` and the next level with tuple `upper`.
SpacerTuple star(const SpacerTuple& upper, const SpacerTuple& lower);

SpacerTuple reverse(const SpacerTuple& s);
bool is_palindrome(const SpacerTuple& s);
bool is_constant(const SpacerTuple& s);

enum class Verdict { Compatible, Incompatible };

struct CompatibilityResult {
  Verdict verdict = Verdict::Incompatible;
  // Set only when Compatible.
  std::size_t offset = 0;
  // Empty means the middle value is free (the window misses it).
  std::optional<Spacer> forced_middle;

  bool compatible() const noexcept { return verdict == Verdict::Compatible; }
  friend bool operator==(const CompatibilityResult&, const CompatibilityResult&) = default;
};

// Looks for a window of length r-1 in (s', c, s') equal to s, for offsets
// k = 0..r in increasing order. Returns the first hit. Throws LengthMismatch.
CompatibilityResult compatibility(const SpacerTuple& s, const SpacerTuple& s_prime);

// True iff s is incompatible with s_prime.
bool perp(const SpacerTuple& s, const SpacerTuple& s_prime);

// Recomputes whether star(s2, s1) is incompatible with its reverse.
// Throws PremiseViolation if s1 is a palindrome or s2 is constant.
bool lemma22_check(const SpacerTuple& s1, const SpacerTuple& s2);

// Lexicographic odometer over all tuples of length r-1 with entries in [0, max_value].
class TupleEnumerator {
 public:
  TupleEnumerator(std::size_t r, Spacer max_value);

  // Writes the next tuple into out; false once exhausted.
  bool next(SpacerTuple& out);
  std::uint64_t total() const noexcept { return total_; }

 private:
  std::vector<Spacer> current_;
  Spacer max_value_;
  std::uint64_t total_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<SpacerTuple> enumerate_tuples(std::size_t r, Spacer max_value);

}  // namespace rankone
