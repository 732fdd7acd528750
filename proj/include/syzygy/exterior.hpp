#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace syz {

/// Subsets of {0..e-1} are bitmasks. Subsets of a fixed size are ordered
/// colexicographically (increasing mask value); rank(T) = sum_k C(t_k, k+1)
/// for t_0 < t_1 < ...
using Subset = std::uint32_t;

inline int subset_size(Subset t) { return std::popcount(t); }

std::uint64_t subset_rank(Subset t);
std::vector<Subset> subsets_of_size(int e, int size);

/// Sign of the shuffle placing the elements of I before those of J, i.e.
/// e_I e_J = sign(I, J) e_{I u J}. Zero when I and J overlap.
int shuffle_sign(Subset i, Subset j);

/// Elements of T in increasing order.
std::vector<int> subset_elements(Subset t);

}  // namespace syz
