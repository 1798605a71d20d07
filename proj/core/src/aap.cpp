#include "factorlab/aap.hpp"

#include <algorithm>
#include <stdexcept>

namespace factorlab {

namespace {

std::int64_t mod_pos(std::int64_t x, std::int64_t d) {
  std::int64_t r = x % d;
  return r < 0 ? r + d : r;
}

}  // namespace

ProgressionFit fit_aap(const std::set<std::int64_t>& L, std::int64_t d) {
  if (d < 1) throw std::invalid_argument("fit_aap: difference must be >= 1");
  ProgressionFit best;
  if (L.empty()) return best;
  auto first = *L.begin();
  for (auto x : L) {
    if (mod_pos(x - first, d) != 0) return best;  // not one residue class
  }
  for (auto y : L) {
    // longest run {0, d, ..., t} inside L - y; maximal t minimizes the bound
    std::int64_t t = 0;
    while (L.count(y + t + d)) t += d;
    std::int64_t lo = *L.begin() - y;
    std::int64_t hi = *L.rbegin() - y;
    std::int64_t M = std::max<std::int64_t>({0, -lo, hi - t});
    std::int64_t core_size = t / d + 1;
    bool better = !best.ok || M < best.bound ||
                  (M == best.bound && core_size > best.core_max / d + 1);
    if (better) {
      best.ok = true;
      best.y = y;
      best.bound = M;
      best.core_max = t;
      best.head.clear();
      best.core.clear();
      best.tail.clear();
      for (auto x : L) {
        std::int64_t off = x - y;
        if (off < 0)
          best.head.push_back(off);
        else if (off <= t)
          best.core.push_back(off);
        else
          best.tail.push_back(off);
      }
    }
  }
  return best;
}

namespace {

// residue classes mod d that the period set allows
std::set<std::int64_t> period_residues(std::int64_t d, const std::set<std::int64_t>& period) {
  std::set<std::int64_t> r;
  for (auto p : period) r.insert(mod_pos(p, d));
  return r;
}

// minimal bound for a fixed period set: for each anchor walk the allowed
// values upward while present, then measure the overhangs
bool fit_with_period(const std::set<std::int64_t>& L, std::int64_t d,
                     const std::set<std::int64_t>& residues, std::int64_t max_M,
                     std::int64_t* out_y, std::int64_t* out_M) {
  bool found = false;
  std::int64_t best_M = 0, best_y = 0;
  for (auto y : L) {
    bool congruent = true;
    for (auto x : L) {
      if (!residues.count(mod_pos(x - y, d))) {
        congruent = false;
        break;
      }
    }
    if (!congruent) continue;
    std::int64_t t = 0;  // 0 is allowed (0 is in every period set) and present
    while (true) {
      // next allowed value above t
      std::int64_t nxt = t + 1;
      while (!residues.count(mod_pos(nxt, d))) ++nxt;
      if (!L.count(y + nxt)) break;
      t = nxt;
    }
    std::int64_t lo = *L.begin() - y;
    std::int64_t hi = *L.rbegin() - y;
    std::int64_t M = std::max<std::int64_t>({0, -lo, hi - t});
    if (!found || M < best_M) {
      found = true;
      best_M = M;
      best_y = y;
    }
  }
  if (!found || best_M > max_M) return false;
  *out_y = best_y;
  *out_M = best_M;
  return true;
}

}  // namespace

bool fit_aamp(const std::set<std::int64_t>& L, std::int64_t d,
              const std::set<std::int64_t>& period, std::int64_t M) {
  if (d < 1) throw std::invalid_argument("fit_aamp: difference must be >= 1");
  if (!period.count(0) || !period.count(d) || *period.begin() < 0 || *period.rbegin() > d)
    throw std::invalid_argument("fit_aamp: period set must satisfy {0,d} <= P <= [0,d]");
  if (M < 0) throw std::invalid_argument("fit_aamp: bound must be >= 0");
  if (L.empty()) return false;
  std::int64_t y = 0, got = 0;
  return fit_with_period(L, d, period_residues(d, period), M, &y, &got);
}

PeriodFit fit_aamp_min(const std::set<std::int64_t>& L, std::int64_t d) {
  if (d < 1) throw std::invalid_argument("fit_aamp_min: difference must be >= 1");
  PeriodFit r;
  if (L.empty()) return r;
  // Each anchor gets its own smallest admissible period set: the residues L
  // occupies relative to that anchor. Enlarging a period set never lowers
  // the bound, so minimizing over these per-anchor sets is a true minimum.
  for (auto y : L) {
    std::set<std::int64_t> residues;
    for (auto x : L) residues.insert(mod_pos(x - y, d));
    std::int64_t t = 0;
    while (true) {
      std::int64_t nxt = t + 1;
      while (!residues.count(mod_pos(nxt, d))) ++nxt;
      if (!L.count(y + nxt)) break;
      t = nxt;
    }
    std::int64_t lo = *L.begin() - y;
    std::int64_t hi = *L.rbegin() - y;
    std::int64_t M = std::max<std::int64_t>({0, -lo, hi - t});
    if (!r.ok || M < r.bound) {
      r.ok = true;
      r.y = y;
      r.bound = M;
      r.period.clear();
      for (auto res : residues) r.period.insert(res);
      r.period.insert(d);
    }
  }
  return r;
}

}  // namespace factorlab
