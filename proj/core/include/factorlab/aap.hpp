#pragma once
// Structure fits for finite sets of lengths. A set L fits the single-period
// shape for difference d when L = y + (head ∪ core ∪ tail) with the core an
// arithmetic progression {0, d, ..., t} inside L - y, head ⊆ [-M, -1],
// tail ⊆ t + [1, M], and all of L in one residue class mod d. The
// multi-period variant replaces the core's single residue class by a period
// set P with {0, d} ⊆ P ⊆ [0, d]: the core is then (P + d Z) ∩ [0, t] and L
// must lie in y + P + d Z.

#include <cstdint>
#include <set>
#include <vector>

namespace factorlab {

struct ProgressionFit {
  bool ok = false;
  std::int64_t y = 0;
  std::int64_t bound = 0;    // minimal M over all anchors
  std::int64_t core_max = 0;  // t, offset from y
  std::vector<std::int64_t> head;  // offsets in [-M, -1]
  std::vector<std::int64_t> core;  // offsets in [0, t]
  std::vector<std::int64_t> tail;  // offsets in t + [1, M]
};

// Minimal-bound fit with a single residue class. ok is false when L is
// empty or its elements are not all congruent mod d. Ties on the bound
// prefer the larger core, then the smaller anchor y.
ProgressionFit fit_aap(const std::set<std::int64_t>& L, std::int64_t d);

// Decides whether L admits the multi-period shape for the given period set
// and bound. Throws std::invalid_argument unless d >= 1 and
// {0, d} <= period <= [0, d].
bool fit_aamp(const std::set<std::int64_t>& L, std::int64_t d,
              const std::set<std::int64_t>& period, std::int64_t M);

struct PeriodFit {
  bool ok = false;
  std::int64_t y = 0;
  std::int64_t bound = 0;
  std::set<std::int64_t> period;  // the minimal admissible period set used
};

// Minimal bound over anchors using the smallest period set that covers the
// residues of L mod d. Enlarging the period set never lowers the bound, so
// this is the minimum over all admissible period sets as well.
PeriodFit fit_aamp_min(const std::set<std::int64_t>& L, std::int64_t d);

}  // namespace factorlab
