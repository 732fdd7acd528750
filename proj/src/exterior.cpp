#include "syzygy/exterior.hpp"

#include "syzygy/polynomial.hpp"

namespace syz {

std::uint64_t subset_rank(Subset t) {
  std::uint64_t r = 0;
  int k = 1;
  for (int v : subset_elements(t)) r += binomial(v, k++);
  return r;
}

std::vector<Subset> subsets_of_size(int e, int size) {
  std::vector<Subset> out;
  if (size < 0 || size > e) return out;
  if (size == 0) return {0};
  // Gosper's hack walks masks of fixed popcount in increasing order.
  Subset t = (Subset{1} << size) - 1;
  const Subset limit = Subset{1} << e;
  while (t < limit) {
    out.push_back(t);
    Subset c = t & (~t + 1);
    Subset r = t + c;
    t = (((r ^ t) >> 2) / c) | r;
  }
  return out;
}

int shuffle_sign(Subset i, Subset j) {
  if (i & j) return 0;
  int inversions = 0;
  for (Subset rest = j; rest; rest &= rest - 1) {
    int b = std::countr_zero(rest);
    Subset above = b >= 31 ? 0 : ~((Subset{2} << b) - 1);
    inversions += std::popcount(i & above);
  }
  return inversions % 2 ? -1 : 1;
}

std::vector<int> subset_elements(Subset t) {
  std::vector<int> out;
  for (; t; t &= t - 1) out.push_back(std::countr_zero(t));
  return out;
}

}  // namespace syz
