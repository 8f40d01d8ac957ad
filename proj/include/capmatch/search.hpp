#pragma once

// Bounded enumeration of capacity vectors and a deterministic first-match
// driver shared by the exhaustive solvers.

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "capmatch/core.hpp"

namespace capmatch {

inline constexpr std::uint64_t kDefaultSearchGuard = 10'000'000;

struct SearchOptions {
  std::uint64_t guard = kDefaultSearchGuard;  // candidate vectors examined
  int threads = 1;
};

/// Per-school enumeration bounds: min(useful_increase(w), clip).
std::vector<int> useful_bounds(const Instance& inst, int clip = INT_MAX);

/// Sum of the useful bounds; enough seats to give every student a first choice.
long long full_useful_budget(const Instance& inst);

/// Visits every vector with 0 <= r[w] <= bound[w] and sum exactly `total`.
/// Order: decreasing lexicographic, so earlier schools receive seats first.
/// Returns false iff the visitor stopped the walk.
bool for_each_vector_with_sum(std::span<const int> bound, long long total,
                              const std::function<bool(std::span<const int>)>& visit);

/// Feeds candidates in a fixed order to a test and keeps the first success.
/// With several threads, candidates are evaluated in batches and the lowest
/// successful index of a batch wins, so results do not depend on the thread
/// count. Throws GuardExceeded once more than `guard` candidates are offered.
template <class Payload>
class FirstMatch {
 public:
  using Test = std::function<std::optional<Payload>(const CapacityVector&)>;

  FirstMatch(SearchOptions options, Test test)
      : options_(options), test_(std::move(test)) {
    options_.threads = std::max(1, options_.threads);
  }

  /// Returns false once a match is known; the caller should stop offering.
  bool offer(CapacityVector r) {
    if (found_) return false;
    if (++offered_ > options_.guard)
      throw GuardExceeded("search examined more than " + std::to_string(options_.guard) +
                          " capacity vectors");
    if (options_.threads == 1) {
      if (auto payload = test_(r)) found_.emplace(std::move(r), std::move(*payload));
      return !found_;
    }
    batch_.push_back(std::move(r));
    if (batch_.size() >= batch_limit()) flush();
    return !found_;
  }

  /// Evaluates any buffered candidates.
  void flush() {
    if (batch_.empty() || found_) {
      batch_.clear();
      return;
    }
    std::vector<std::optional<Payload>> results(batch_.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{batch_.size()};
    auto worker = [&] {
      for (std::size_t i = next++; i < batch_.size(); i = next++) {
        if (i > best.load()) break;
        results[i] = test_(batch_[i]);
        if (results[i]) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < options_.threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    const std::size_t hit = best.load();
    if (hit < batch_.size()) found_.emplace(std::move(batch_[hit]), std::move(*results[hit]));
    batch_.clear();
  }

  const std::optional<std::pair<CapacityVector, Payload>>& found() const { return found_; }
  std::uint64_t offered() const { return offered_; }

 private:
  std::size_t batch_limit() const { return static_cast<std::size_t>(options_.threads) * 64; }

  SearchOptions options_;
  Test test_;
  std::vector<CapacityVector> batch_;
  std::optional<std::pair<CapacityVector, Payload>> found_;
  std::uint64_t offered_ = 0;
};

}  // namespace capmatch
