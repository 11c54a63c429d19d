#include "rankone/spacer.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "rankone/error.hpp"

namespace rankone {

SpacerTuple::SpacerTuple(std::initializer_list<Spacer> values) : SpacerTuple(std::vector<Spacer>(values)) {}

SpacerTuple::SpacerTuple(std::vector<Spacer> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(ErrorCode::InvalidTuple, "spacer tuple must have at least one entry (r >= 2)");
  }
}

Spacer SpacerTuple::at(std::size_t i) const {
  if (i == 0 || i > values_.size()) {
    throw Error(ErrorCode::InvalidTuple,
                "index " + std::to_string(i) + " outside 1.." + std::to_string(values_.size()));
  }
  return values_[i - 1];
}

Spacer SpacerTuple::sum() const noexcept { return std::accumulate(values_.begin(), values_.end(), Spacer{0}); }

Spacer SpacerTuple::max() const noexcept { return *std::max_element(values_.begin(), values_.end()); }

std::string SpacerTuple::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

SpacerTuple parse_tuple(std::string_view text) {
  std::vector<Spacer> values;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    Spacer v = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc{} || end != field.data() + field.size()) {
      throw Error(ErrorCode::InvalidTuple, "cannot parse spacer tuple '" + std::string(text) + "'");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return SpacerTuple(std::move(values));
}

SpacerTuple star(const SpacerTuple& upper, const SpacerTuple& lower) {
  const std::size_t r1 = lower.cuts();
  const std::size_t r = upper.cuts() * r1;
  std::vector<Spacer> out;
  out.reserve(r - 1);
  for (std::size_t i = 1; i < r; ++i) {
    const std::size_t k = i % r1;
    out.push_back(k == 0 ? upper.at(i / r1) : lower.at(k));
  }
  return SpacerTuple(std::move(out));
}

SpacerTuple reverse(const SpacerTuple& s) {
  std::vector<Spacer> out(s.values().rbegin(), s.values().rend());
  return SpacerTuple(std::move(out));
}

bool is_palindrome(const SpacerTuple& s) {
  auto v = s.values();
  return std::equal(v.begin(), v.begin() + v.size() / 2, v.rbegin());
}

bool is_constant(const SpacerTuple& s) {
  auto v = s.values();
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>{}) == v.end();
}

CompatibilityResult compatibility(const SpacerTuple& s, const SpacerTuple& s_prime) {
  if (s.size() != s_prime.size()) {
    throw Error(ErrorCode::LengthMismatch, "compatibility needs equal lengths, got " + std::to_string(s.size()) +
                                               " and " + std::to_string(s_prime.size()));
  }
  const std::size_t r = s.cuts();
  // c * s' has entries at positions 1..2r-1 with the free value c at position r.
  for (std::size_t k = 0; k <= r; ++k) {
    std::optional<Spacer> middle;
    bool ok = true;
    for (std::size_t l = 1; l < r && ok; ++l) {
      const std::size_t pos = k + l;
      if (pos == r) {
        middle = s.at(l);
      } else {
        ok = s.at(l) == s_prime.at(pos < r ? pos : pos - r);
      }
    }
    if (ok) return {Verdict::Compatible, k, middle};
  }
  return {};
}

bool perp(const SpacerTuple& s, const SpacerTuple& s_prime) { return !compatibility(s, s_prime).compatible(); }

bool lemma22_check(const SpacerTuple& s1, const SpacerTuple& s2) {
  if (is_palindrome(s1)) throw Error(ErrorCode::PremiseViolation, "s1 = (" + s1.to_string() + ") is a palindrome");
  if (is_constant(s2)) throw Error(ErrorCode::PremiseViolation, "s2 = (" + s2.to_string() + ") is constant");
  const SpacerTuple combined = star(s2, s1);
  return perp(combined, reverse(combined));
}

TupleEnumerator::TupleEnumerator(std::size_t r, Spacer max_value) : max_value_(max_value) {
  if (r < 2) throw Error(ErrorCode::InvalidCutCount, "cut count must be >= 2, got " + std::to_string(r));
  current_.assign(r - 1, 0);
  total_ = 1;
  for (std::size_t i = 0; i + 1 < r; ++i) total_ *= max_value + 1;
}

bool TupleEnumerator::next(SpacerTuple& out) {
  if (done_) return false;
  if (started_) {
    std::size_t i = current_.size();
    while (i > 0 && current_[i - 1] == max_value_) current_[--i] = 0;
    if (i == 0) {
      done_ = true;
      return false;
    }
    ++current_[i - 1];
  }
  started_ = true;
  out = SpacerTuple(current_);
  return true;
}

std::vector<SpacerTuple> enumerate_tuples(std::size_t r, Spacer max_value) {
  TupleEnumerator it(r, max_value);
  std::vector<SpacerTuple> out;
  out.reserve(it.total());
  SpacerTuple t{0};
  while (it.next(t)) out.push_back(t);
  return out;
}

}  // namespace rankone
