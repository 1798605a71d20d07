#include "factorlab/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace factorlab {

namespace {

// Merge orders pairwise into (gcd, lcm) until every pair divides; this
// yields the invariant factor list, since C_a x C_b = C_gcd x C_lcm.
std::vector<int> to_invariant_factors(std::vector<int> orders) {
  std::erase_if(orders, [](int n) { return n == 1; });
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < orders.size(); ++i) {
      for (size_t j = i + 1; j < orders.size(); ++j) {
        if (orders[i] % orders[j] == 0 || orders[j] % orders[i] == 0) continue;
        int g = std::gcd(orders[i], orders[j]);
        long l = static_cast<long>(orders[i]) / g * orders[j];
        if (l > INT32_MAX) throw std::overflow_error("group: order too large");
        orders[i] = g;
        orders[j] = static_cast<int>(l);
        changed = true;
      }
    }
  }
  std::erase_if(orders, [](int n) { return n == 1; });
  std::sort(orders.begin(), orders.end());
  for (size_t i = 0; i + 1 < orders.size(); ++i) {
    if (orders[i + 1] % orders[i] != 0)
      throw std::logic_error("group: invariant factor normalization failed");
  }
  return orders;
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<int> moduli) : moduli_(std::move(moduli)) {
  for (int n : moduli_) {
    if (n < 1) throw std::invalid_argument("group: cyclic order must be >= 1");
  }
  invariants_ = to_invariant_factors(moduli_);
  order_ = 1;
  for (int n : moduli_) order_ *= n;
}

GroupElem AbelianGroup::add(const GroupElem& a, const GroupElem& b) const {
  GroupElem r(moduli_.size());
  for (size_t i = 0; i < moduli_.size(); ++i) r[i] = (a[i] + b[i]) % moduli_[i];
  return r;
}

GroupElem AbelianGroup::neg(const GroupElem& a) const {
  GroupElem r(moduli_.size());
  for (size_t i = 0; i < moduli_.size(); ++i) r[i] = (moduli_[i] - a[i]) % moduli_[i];
  return r;
}

GroupElem AbelianGroup::scale(std::int64_t k, const GroupElem& a) const {
  GroupElem r(moduli_.size());
  for (size_t i = 0; i < moduli_.size(); ++i) {
    std::int64_t v = (k % moduli_[i]) * a[i] % moduli_[i];
    if (v < 0) v += moduli_[i];
    r[i] = static_cast<int>(v);
  }
  return r;
}

bool AbelianGroup::is_zero(const GroupElem& a) const {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

std::int64_t AbelianGroup::order_of(const GroupElem& a) const {
  std::int64_t ord = 1;
  for (size_t i = 0; i < moduli_.size(); ++i) {
    std::int64_t oi = moduli_[i] / std::gcd(static_cast<std::int64_t>(moduli_[i]),
                                            static_cast<std::int64_t>(a[i]));
    ord = std::lcm(ord, oi);
  }
  return ord;
}

std::vector<GroupElem> AbelianGroup::elements(std::int64_t cap) const {
  if (order_ > cap) throw std::length_error("group: element enumeration over cap");
  std::vector<GroupElem> out;
  out.reserve(static_cast<size_t>(order_));
  GroupElem cur(moduli_.size(), 0);
  out.push_back(cur);
  while (true) {
    int i = static_cast<int>(moduli_.size()) - 1;
    while (i >= 0 && cur[i] + 1 == moduli_[i]) {
      cur[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++cur[i];
    out.push_back(cur);
  }
  return out;
}

bool AbelianGroup::is_p_group() const {
  if (invariants_.empty()) return true;
  int n = invariants_.back();
  int p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;
  for (int f : invariants_) {
    while (f % p == 0) f /= p;
    if (f != 1) return false;
  }
  return true;
}

std::int64_t AbelianGroup::davenport_formula_value() const {
  std::int64_t d = 1;
  for (int n : invariants_) d += n - 1;
  return d;
}

std::string AbelianGroup::name() const {
  if (invariants_.empty()) return "C1";
  std::string s;
  for (size_t i = 0; i < invariants_.size(); ++i) {
    if (i) s += "x";
    s += "C" + std::to_string(invariants_[i]);
  }
  return s;
}

}  // namespace factorlab
