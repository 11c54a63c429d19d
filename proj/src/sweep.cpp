#include "rankone/sweep.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace rankone {

namespace {

std::vector<SpacerTuple> tuples_up_to(std::size_t r_max, Spacer s_max) {
  std::vector<SpacerTuple> out;
  for (std::size_t r = 2; r <= r_max; ++r) {
    auto batch = enumerate_tuples(r, s_max);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

// Runs body(i, partial) for i in [0, count) striped over workers, then
// concatenates partial results in index order.
SweepResult striped(std::size_t count, unsigned threads,
                    const std::function<void(std::size_t, SweepResult&)>& body) {
  threads = std::max(1u, threads);
  std::vector<std::vector<SweepResult>> per_index(threads);
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) {
        SweepResult partial;
        body(i, partial);
        per_index[t].push_back(std::move(partial));
      }
    });
  }
  for (auto& w : workers) w.join();
  SweepResult total;
  for (std::size_t i = 0; i < count; ++i) {
    SweepResult& part = per_index[i % threads][i / threads];
    total.checked += part.checked;
    for (auto& ce : part.counterexamples) total.counterexamples.push_back(std::move(ce));
  }
  return total;
}

}  // namespace

SweepResult lemma_sweep(std::size_t r_max, Spacer s_max, unsigned threads) {
  std::vector<SpacerTuple> lower;
  std::vector<SpacerTuple> upper;
  for (const auto& t : tuples_up_to(r_max, s_max)) {
    if (!is_palindrome(t)) lower.push_back(t);
    if (!is_constant(t)) upper.push_back(t);
  }
  return striped(lower.size(), threads, [&](std::size_t i, SweepResult& out) {
    for (const auto& s2 : upper) {
      ++out.checked;
      if (!lemma22_check(lower[i], s2)) out.counterexamples.emplace_back(lower[i], s2);
    }
  });
}

SweepResult perp_symmetry_sweep(std::size_t r_max, Spacer s_max, unsigned threads) {
  const std::vector<SpacerTuple> all = tuples_up_to(r_max, s_max);
  return striped(all.size(), threads, [&](std::size_t i, SweepResult& out) {
    for (const auto& other : all) {
      if (other.size() != all[i].size()) continue;
      ++out.checked;
      if (perp(all[i], other) != perp(other, all[i])) out.counterexamples.emplace_back(all[i], other);
    }
  });
}

}  // namespace rankone
