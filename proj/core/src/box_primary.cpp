#include "factorlab/box_primary.hpp"

#include <algorithm>
#include <stdexcept>

namespace factorlab {

BoxPrimary::BoxPrimary(std::int64_t bound) : bound_(bound) {
  if (bound_ < 1) throw std::invalid_argument("box_primary: bound must be >= 1");
  for (std::int64_t y = 1; y <= bound_; ++y) atoms_.push_back({1, y});
  for (std::int64_t x = 2; x <= bound_; ++x) atoms_.push_back({x, 1});
  std::sort(atoms_.begin(), atoms_.end(), [](const Element& a, const Element& b) {
    auto sa = a[0] + a[1], sb = b[0] + b[1];
    if (sa != sb) return sa < sb;
    return a < b;
  });
}

std::string BoxPrimary::describe() const {
  return "positive pairs with coordinates up to " + std::to_string(bound_) +
         ", plus the identity";
}

bool BoxPrimary::contains(const Element& a) const {
  if (a.size() != 2) return false;
  if (a[0] == 0 && a[1] == 0) return true;
  return a[0] >= 1 && a[1] >= 1 && a[0] <= bound_ && a[1] <= bound_;
}

std::int64_t BoxPrimary::strong_primary_bound(const Element& a) const {
  if (a[0] == 0 && a[1] == 0)
    throw ScopeError("strong primary bound is defined for non-units only");
  return std::max(a[0], a[1]) + 1;
}

std::int64_t BoxPrimary::strong_primary_bound_brute(const Element& a) const {
  if (a[0] == 0 && a[1] == 0)
    throw ScopeError("strong primary bound is defined for non-units only");
  // sums of n non-units are exactly the pairs at or above (n, n), so the
  // test stays faithful as long as the corner (n, n) and the witnesses just
  // outside the divisor cone fit in the box
  if (std::max(a[0], a[1]) + 1 > bound_)
    throw ScopeError("box too small to certify the strong primary bound");
  auto in_cone = [&](std::int64_t x, std::int64_t y) {
    if (x == a[0] && y == a[1]) return true;
    return x >= a[0] + 1 && y >= a[1] + 1;
  };
  for (std::int64_t n = 1; n <= bound_; ++n) {
    bool all_in = true;
    for (std::int64_t x = n; x <= bound_ && all_in; ++x) {
      for (std::int64_t y = n; y <= bound_ && all_in; ++y) {
        if (!in_cone(x, y)) all_in = false;
      }
    }
    if (all_in) return n;
  }
  throw ScopeError("box too small to certify the strong primary bound");
}

std::string BoxPrimary::atom_name(int id) const { return element_repr(atoms_[id]); }

std::vector<int> BoxPrimary::atoms_dividing(const Element& a) const {
  std::vector<int> out;
  for (int id = 0; id < atom_count(); ++id) {
    const auto& u = atoms_[id];
    std::int64_t cx = a[0] - u[0], cy = a[1] - u[1];
    if ((cx == 0 && cy == 0) || (cx >= 1 && cy >= 1)) out.push_back(id);
  }
  return out;
}

std::vector<Element> BoxPrimary::cofactors(const Element& a, int atom_id) const {
  const auto& u = atoms_[atom_id];
  return {{a[0] - u[0], a[1] - u[1]}};
}

std::vector<Element> BoxPrimary::scope_elements(std::int64_t bound) const {
  std::int64_t cap = std::min(bound, bound_);
  std::vector<Element> out;
  for (std::int64_t x = 1; x <= cap; ++x) {
    for (std::int64_t y = 1; y <= cap; ++y) out.push_back({x, y});
  }
  std::sort(out.begin(), out.end(), [](const Element& a, const Element& b) {
    auto sa = a[0] + a[1], sb = b[0] + b[1];
    if (sa != sb) return sa < sb;
    return a < b;
  });
  return out;
}

std::string BoxPrimary::element_repr(const Element& a) const {
  return "(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + ")";
}

nlohmann::ordered_json BoxPrimary::element_json(const Element& a) const {
  return nlohmann::ordered_json::array({a[0], a[1]});
}

Element BoxPrimary::parse_element(const nlohmann::ordered_json& j) const {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw std::invalid_argument("box element: expected [x, y]");
  Element a = {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
  if (a[0] == 0 && a[1] == 0) return a;
  if (a[0] < 1 || a[1] < 1)
    throw std::invalid_argument("box element: coordinates must both be >= 1, or both 0");
  if (a[0] > bound_ || a[1] > bound_)
    throw ScopeError("box element: coordinate exceeds the box bound " +
                     std::to_string(bound_));
  return a;
}

}  // namespace factorlab
