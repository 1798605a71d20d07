#pragma once
// Minimal zero-sum sequences over a finite abelian group. Sequences over a
// fixed support list are stored as multiplicity vectors; a sequence is an
// atom when it sums to zero and no proper nonempty subsequence does.

#include <cstdint>
#include <vector>

#include "factorlab/group.hpp"

namespace factorlab {

using MultVector = std::vector<std::int64_t>;

GroupElem weighted_sum(const AbelianGroup& g, const std::vector<GroupElem>& support,
                       const MultVector& mult);

// true iff some nonempty proper subvector of mult sums to zero
bool has_proper_zero_subsum(const AbelianGroup& g, const std::vector<GroupElem>& support,
                            const MultVector& mult);

// All minimal zero-sum sequences over the support, sorted by
// (total length, entries lexicographic). Exhaustive: a minimal zero-sum
// sequence never exceeds length |G|, and the multiplicity of any element
// g in one never exceeds ord(g).
std::vector<MultVector> minimal_zero_sums(const AbelianGroup& g,
                                          const std::vector<GroupElem>& support);

// All vectors over the support with weighted sum zero and total length in
// [1, bound], sorted by (length, entries lexicographic).
std::vector<MultVector> zero_sum_scope(const AbelianGroup& g,
                                       const std::vector<GroupElem>& support,
                                       std::int64_t bound);

// max length over minimal zero-sum sequences with full support G
std::int64_t davenport_constant(const AbelianGroup& g, std::int64_t order_cap = 10000);

inline std::int64_t total_length(const MultVector& v) {
  std::int64_t s = 0;
  for (auto m : v) s += m;
  return s;
}

}  // namespace factorlab
