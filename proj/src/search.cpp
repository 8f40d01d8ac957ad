#include "capmatch/search.hpp"

namespace capmatch {

std::vector<int> useful_bounds(const Instance& inst, int clip) {
  std::vector<int> out(static_cast<std::size_t>(inst.num_schools()));
  for (SchoolId w = 0; w < inst.num_schools(); ++w) out[w] = std::min(inst.useful_increase(w), clip);
  return out;
}

long long full_useful_budget(const Instance& inst) {
  long long total = 0;
  for (SchoolId w = 0; w < inst.num_schools(); ++w) total += inst.useful_increase(w);
  return total;
}

namespace {

struct SumWalk {
  std::span<const int> bound;
  std::vector<long long> tail;  // tail[i] = sum of bound[i..]
  std::vector<int> current;
  const std::function<bool(std::span<const int>)>& visit;

  bool run(std::size_t i, long long remaining) {
    if (i == bound.size()) return remaining != 0 || visit(current);
    if (remaining > tail[i]) return true;
    const long long hi = std::min<long long>(bound[i], remaining);
    const long long lo = std::max<long long>(0, remaining - tail[i + 1]);
    for (long long x = hi; x >= lo; --x) {
      current[i] = static_cast<int>(x);
      if (!run(i + 1, remaining - x)) return false;
    }
    current[i] = 0;
    return true;
  }
};

}  // namespace

bool for_each_vector_with_sum(std::span<const int> bound, long long total,
                              const std::function<bool(std::span<const int>)>& visit) {
  if (total < 0) return true;
  SumWalk walk{bound, std::vector<long long>(bound.size() + 1, 0),
               std::vector<int>(bound.size(), 0), visit};
  for (std::size_t i = bound.size(); i > 0; --i) walk.tail[i - 1] = walk.tail[i] + bound[i - 1];
  return walk.run(0, total);
}

}  // namespace capmatch
