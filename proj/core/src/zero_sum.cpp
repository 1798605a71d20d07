#include "factorlab/zero_sum.hpp"

#include <algorithm>
#include <stdexcept>

namespace factorlab {

GroupElem weighted_sum(const AbelianGroup& g, const std::vector<GroupElem>& support,
                       const MultVector& mult) {
  GroupElem s = g.zero();
  for (size_t i = 0; i < support.size(); ++i) {
    if (mult[i] != 0) s = g.add(s, g.scale(mult[i], support[i]));
  }
  return s;
}

bool has_proper_zero_subsum(const AbelianGroup& g, const std::vector<GroupElem>& support,
                            const MultVector& mult) {
  // odometer over all subvectors 0 <= v <= mult
  MultVector v(mult.size(), 0);
  while (true) {
    size_t i = 0;
    while (i < v.size() && v[i] == mult[i]) {
      v[i] = 0;
      ++i;
    }
    if (i == v.size()) return false;  // wrapped past mult itself
    ++v[i];
    if (v == mult) continue;  // proper only
    if (g.is_zero(weighted_sum(g, support, v))) return true;
  }
}

namespace {

void dfs_sequences(const AbelianGroup& g, const std::vector<GroupElem>& support,
                   const std::vector<std::int64_t>& mult_cap, size_t idx, std::int64_t budget,
                   MultVector& cur, GroupElem& running, std::vector<MultVector>& out) {
  if (idx == support.size()) {
    if (g.is_zero(running) && total_length(cur) > 0) out.push_back(cur);
    return;
  }
  GroupElem saved = running;
  for (std::int64_t m = 0; m <= std::min<std::int64_t>(mult_cap[idx], budget); ++m) {
    cur[idx] = m;
    dfs_sequences(g, support, mult_cap, idx + 1, budget - m, cur, running, out);
    running = g.add(running, support[idx]);
  }
  cur[idx] = 0;
  running = saved;
}

}  // namespace

std::vector<MultVector> minimal_zero_sums(const AbelianGroup& g,
                                          const std::vector<GroupElem>& support) {
  std::vector<std::int64_t> mult_cap(support.size());
  for (size_t i = 0; i < support.size(); ++i) mult_cap[i] = g.order_of(support[i]);

  std::vector<MultVector> zero_sums;
  MultVector cur(support.size(), 0);
  GroupElem running = g.zero();
  dfs_sequences(g, support, mult_cap, 0, g.order(), cur, running, zero_sums);

  std::vector<MultVector> atoms;
  for (const auto& u : zero_sums) {
    if (!has_proper_zero_subsum(g, support, u)) atoms.push_back(u);
  }
  std::sort(atoms.begin(), atoms.end(), [](const MultVector& a, const MultVector& b) {
    auto la = total_length(a), lb = total_length(b);
    if (la != lb) return la < lb;
    return a < b;
  });
  return atoms;
}

std::vector<MultVector> zero_sum_scope(const AbelianGroup& g,
                                       const std::vector<GroupElem>& support,
                                       std::int64_t bound) {
  std::vector<std::int64_t> mult_cap(support.size(), bound);
  std::vector<MultVector> out;
  MultVector cur(support.size(), 0);
  GroupElem running = g.zero();
  dfs_sequences(g, support, mult_cap, 0, bound, cur, running, out);
  std::sort(out.begin(), out.end(), [](const MultVector& a, const MultVector& b) {
    auto la = total_length(a), lb = total_length(b);
    if (la != lb) return la < lb;
    return a < b;
  });
  return out;
}

std::int64_t davenport_constant(const AbelianGroup& g, std::int64_t order_cap) {
  if (g.order() > order_cap) throw std::length_error("davenport: group order over cap");
  auto atoms = minimal_zero_sums(g, g.elements());
  std::int64_t d = 0;
  for (const auto& u : atoms) d = std::max(d, total_length(u));
  return d;
}

}  // namespace factorlab
