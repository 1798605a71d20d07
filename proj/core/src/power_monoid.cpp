#include "factorlab/power_monoid.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace factorlab {

namespace {

int max_bit(std::uint64_t m) { return 63 - std::countl_zero(m); }

std::vector<int> mask_values(std::uint64_t m) {
  std::vector<int> v;
  for (int i = 0; m >> i; ++i) {
    if ((m >> i) & 1) v.push_back(i);
  }
  return v;
}

// (max element, value list lexicographic)
bool mask_before(std::uint64_t a, std::uint64_t b) {
  int ma = max_bit(a), mb = max_bit(b);
  if (ma != mb) return ma < mb;
  return mask_values(a) < mask_values(b);
}

}  // namespace

std::uint64_t PowerMonoid0::sumset(std::uint64_t a, std::uint64_t b) {
  std::uint64_t acc = 0;
  for (int v = 0; b >> v; ++v) {
    if ((b >> v) & 1) acc |= a << v;
  }
  return acc;
}

PowerMonoid0::PowerMonoid0(int max_value) : max_value_(max_value) {
  if (max_value_ < 1 || max_value_ > 16)
    throw std::invalid_argument("power0: max_value must be in [1, 16]");
  std::uint64_t universe = (std::uint64_t{1} << (max_value_ + 1)) - 1;

  // atom sweep: A is an atom when no proper B gives sumset(B, Cmax) == A,
  // where Cmax is the largest candidate cofactor; sumsets grow with the
  // cofactor, so testing the largest one decides existence
  for (std::uint64_t a = 1; a <= universe; a += 2) {
    if (a == 1) continue;  // identity {0}
    bool atom = true;
    for (std::uint64_t s = (a - 1) & a; s; s = (s - 1) & a) {
      std::uint64_t b = s | 1;  // submask of a containing 0
      if (b == a || b == 1) continue;
      std::uint64_t cmax = 0;
      int room = max_bit(a) - max_bit(b);
      for (int c = 0; c <= room; ++c) {
        if (((b << c) & ~a) == 0) cmax |= std::uint64_t{1} << c;
      }
      if (sumset(b, cmax) == a) {
        atom = false;
        break;
      }
    }
    if (atom) atoms_.push_back(a);
  }
  std::sort(atoms_.begin(), atoms_.end(), mask_before);

  // smallest witness of failed cancellation, searched in element order
  int cap = std::min(max_value_, 6);
  std::vector<std::uint64_t> small;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << (cap + 1)); m += 2) {
    if (m != 1) small.push_back(m);
  }
  std::sort(small.begin(), small.end(), mask_before);
  for (std::uint64_t a : small) {
    if (!nc_a_.empty()) break;
    for (std::uint64_t b : small) {
      if (b == a || !mask_before(a, b)) continue;
      for (std::uint64_t c : small) {
        std::uint64_t sac = sumset(a, c), sbc = sumset(b, c);
        if (sac == sbc && sac <= universe) {
          nc_a_ = {static_cast<std::int64_t>(a)};
          nc_b_ = {static_cast<std::int64_t>(b)};
          nc_c_ = {static_cast<std::int64_t>(c)};
          break;
        }
      }
      if (!nc_a_.empty()) break;
    }
  }
}

std::string PowerMonoid0::describe() const {
  return "subsets of [0," + std::to_string(max_value_) + "] containing 0, under sumset";
}

bool PowerMonoid0::contains(const Element& a) const {
  if (a.size() != 1) return false;
  auto m = static_cast<std::uint64_t>(a[0]);
  if (!(m & 1)) return false;
  return a[0] > 0 && max_bit(m) <= max_value_;
}

std::string PowerMonoid0::atom_name(int id) const {
  return element_repr({static_cast<std::int64_t>(atoms_[id])});
}

std::vector<int> PowerMonoid0::atoms_dividing(const Element& a) const {
  auto m = static_cast<std::uint64_t>(a[0]);
  std::vector<int> out;
  for (int id = 0; id < atom_count(); ++id) {
    std::uint64_t u = atoms_[id];
    if ((u & ~m) != 0) continue;  // cofactors contain 0, so divisors are subsets
    std::uint64_t cmax = 0;
    int room = max_bit(m) - max_bit(u);
    for (int c = 0; c <= room; ++c) {
      if (((u << c) & ~m) == 0) cmax |= std::uint64_t{1} << c;
    }
    if (sumset(u, cmax) == m) out.push_back(id);
  }
  return out;
}

std::vector<Element> PowerMonoid0::cofactors(const Element& a, int atom_id) const {
  auto m = static_cast<std::uint64_t>(a[0]);
  std::uint64_t u = atoms_[atom_id];
  std::vector<Element> out;
  if ((u & ~m) != 0) return out;
  std::uint64_t cmax = 0;
  int room = max_bit(m) - max_bit(u);
  for (int c = 0; c <= room; ++c) {
    if (((u << c) & ~m) == 0) cmax |= std::uint64_t{1} << c;
  }
  // every cofactor contains 0 and lies inside cmax
  std::vector<std::uint64_t> hits;
  std::uint64_t rest = cmax & ~std::uint64_t{1};
  std::uint64_t s = rest;
  while (true) {
    std::uint64_t c = s | 1;
    if (sumset(u, c) == m) hits.push_back(c);
    if (s == 0) break;
    s = (s - 1) & rest;
  }
  std::sort(hits.begin(), hits.end(), mask_before);
  for (auto h : hits) out.push_back({static_cast<std::int64_t>(h)});
  return out;
}

std::int64_t PowerMonoid0::element_size(const Element& a) const {
  return max_bit(static_cast<std::uint64_t>(a[0]));
}

std::vector<Element> PowerMonoid0::scope_elements(std::int64_t bound) const {
  int cap = static_cast<int>(std::min<std::int64_t>(bound, max_value_));
  std::vector<std::uint64_t> masks;
  if (cap >= 1) {
    for (std::uint64_t m = 3; m < (std::uint64_t{1} << (cap + 1)); m += 2) masks.push_back(m);
  }
  std::sort(masks.begin(), masks.end(), mask_before);
  std::vector<Element> out;
  for (auto m : masks) out.push_back({static_cast<std::int64_t>(m)});
  return out;
}

std::string PowerMonoid0::element_repr(const Element& a) const {
  auto vals = mask_values(static_cast<std::uint64_t>(a[0]));
  std::string s = "{";
  for (size_t i = 0; i < vals.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vals[i]);
  }
  return s + "}";
}

nlohmann::ordered_json PowerMonoid0::element_json(const Element& a) const {
  return mask_values(static_cast<std::uint64_t>(a[0]));
}

Element PowerMonoid0::parse_element(const nlohmann::ordered_json& j) const {
  if (!j.is_array()) throw std::invalid_argument("power0 element: expected a sorted array");
  std::uint64_t m = 0;
  std::int64_t prev = -1;
  for (const auto& x : j) {
    if (!x.is_number_integer())
      throw std::invalid_argument("power0 element: values must be integers");
    std::int64_t v = x.get<std::int64_t>();
    if (v < 0) throw std::invalid_argument("power0 element: values must be >= 0");
    if (v <= prev)
      throw std::invalid_argument("power0 element: values must be strictly increasing");
    prev = v;
    if (v > max_value_)
      throw ScopeError("power0 element: value " + std::to_string(v) +
                       " exceeds the window max_value " + std::to_string(max_value_));
    m |= std::uint64_t{1} << v;
  }
  if (!(m & 1)) throw std::invalid_argument("power0 element: the set must contain 0");
  return {static_cast<std::int64_t>(m)};
}

}  // namespace factorlab
