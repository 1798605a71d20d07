#include "factorlab/length_system.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace factorlab {

LengthSystemKind parse_system_descriptor(const std::string& name) {
  if (name == "C1") return LengthSystemKind::C1;
  if (name == "C2") return LengthSystemKind::C2;
  if (name == "C3") return LengthSystemKind::C3;
  if (name == "C22") return LengthSystemKind::C22;
  if (name == "C4") return LengthSystemKind::C4;
  if (name == "C23") return LengthSystemKind::C23;
  if (name == "C33") return LengthSystemKind::C33;
  throw std::invalid_argument("length system: unknown descriptor " + name);
}

std::string system_descriptor_name(LengthSystemKind k) {
  switch (k) {
    case LengthSystemKind::C1: return "C1";
    case LengthSystemKind::C2: return "C2";
    case LengthSystemKind::C3: return "C3";
    case LengthSystemKind::C22: return "C22";
    case LengthSystemKind::C4: return "C4";
    case LengthSystemKind::C23: return "C23";
    case LengthSystemKind::C33: return "C33";
  }
  throw std::logic_error("length system: bad kind");
}

namespace {

bool is_interval(const std::vector<std::int64_t>& v) {
  return v.back() - v.front() + 1 == static_cast<std::int64_t>(v.size());
}

// {m, m+2, ..., M}; singletons count
bool is_ap2(const std::vector<std::int64_t>& v) {
  std::int64_t s = v.back() - v.front();
  if (s % 2 != 0) return false;
  return static_cast<std::int64_t>(v.size()) == s / 2 + 1 &&
         std::adjacent_find(v.begin(), v.end(), [](auto a, auto b) { return b - a != 2; }) ==
             v.end();
}

}  // namespace

bool system_member(LengthSystemKind k, const std::vector<std::int64_t>& v) {
  if (v.empty() || v.front() < 0) return false;
  std::int64_t m = v.front(), M = v.back(), s = M - m;
  switch (k) {
    case LengthSystemKind::C1:
    case LengthSystemKind::C2:
      return v.size() == 1;
    case LengthSystemKind::C3:
    case LengthSystemKind::C22:
      return is_interval(v) && m >= 2 * s;
    case LengthSystemKind::C4:
      return (is_interval(v) && m >= s + 1) || (is_ap2(v) && m >= s);
    case LengthSystemKind::C23:
      if (is_interval(v) && s <= 2 && m >= s + 1) return true;
      if (is_interval(v) && s >= 3 && m >= s) return true;
      return is_ap2(v) && m >= s;
    case LengthSystemKind::C33:
      if (m == 0) return M == 0;
      if (m == 1) return M == 1;
      if (!is_interval(v)) return false;
      return m % 2 == 0 ? 2 * M <= 5 * m : 2 * M <= 5 * m - 1;
  }
  return false;
}

std::vector<std::vector<std::int64_t>> system_members(LengthSystemKind k, std::int64_t cap) {
  // every member of every family here is a singleton, an interval, or a
  // difference-2 progression, so shape enumeration is exhaustive
  std::set<std::vector<std::int64_t>> seen;
  for (std::int64_t a = 0; a <= cap; ++a) {
    for (std::int64_t b = a; b <= cap; ++b) {
      std::vector<std::int64_t> interval;
      for (std::int64_t x = a; x <= b; ++x) interval.push_back(x);
      if (system_member(k, interval)) seen.insert(interval);
      if ((b - a) % 2 == 0) {
        std::vector<std::int64_t> ap;
        for (std::int64_t x = a; x <= b; x += 2) ap.push_back(x);
        if (system_member(k, ap)) seen.insert(ap);
      }
    }
  }
  std::vector<std::vector<std::int64_t>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.back() != y.back()) return x.back() < y.back();
    return x < y;
  });
  return out;
}

std::vector<std::int64_t> sumset_sorted(const std::vector<std::int64_t>& a,
                                        const std::vector<std::int64_t>& b) {
  std::set<std::int64_t> s;
  for (auto x : a) {
    for (auto y : b) s.insert(x + y);
  }
  return {s.begin(), s.end()};
}

LengthSystemMonoid::LengthSystemMonoid(LengthSystemKind kind, std::int64_t atom_cap)
    : kind_(kind), atom_cap_(atom_cap) {
  if (atom_cap_ < 10)
    throw std::invalid_argument(
        "length system: atom cap too small, a cap below 10 can miss atoms");
  members_by_max_.resize(kUniverseCap + 1);
  for (auto& m : system_members(kind_, kUniverseCap))
    members_by_max_[static_cast<std::size_t>(m.back())].push_back(m);

  // atom sweep within the cap: no split into two members above the identity
  for (std::int64_t mx = 1; mx <= atom_cap_; ++mx) {
    for (const auto& u : members_by_max_[static_cast<std::size_t>(mx)]) {
      bool atom = true;
      for (std::int64_t ax = 1; ax < mx && atom; ++ax) {
        for (const auto& a : members_by_max_[static_cast<std::size_t>(ax)]) {
          for (const auto& b : members_by_max_[static_cast<std::size_t>(mx - ax)]) {
            if (sumset_sorted(a, b) == u) {
              atom = false;
              break;
            }
          }
          if (!atom) break;
        }
      }
      if (atom) atoms_.push_back(u);
    }
  }
}

std::string LengthSystemMonoid::describe() const {
  return "length set system " + system_descriptor_name(kind_) + " under sumset";
}

bool LengthSystemMonoid::cancellative() const {
  return kind_ != LengthSystemKind::C4 && kind_ != LengthSystemKind::C23;
}

bool LengthSystemMonoid::contains(const Element& a) const {
  if (a.empty() || a.back() > kUniverseCap) return false;
  for (size_t i = 0; i + 1 < a.size(); ++i) {
    if (a[i] >= a[i + 1]) return false;
  }
  return system_member(kind_, a);
}

std::string LengthSystemMonoid::atom_name(int id) const { return element_repr(atoms_[id]); }

std::vector<int> LengthSystemMonoid::atoms_dividing(const Element& a) const {
  std::vector<int> out;
  for (int id = 0; id < atom_count(); ++id) {
    if (!cofactors(a, id).empty()) out.push_back(id);
  }
  return out;
}

std::vector<Element> LengthSystemMonoid::cofactors(const Element& a, int atom_id) const {
  const auto& u = atoms_[atom_id];
  std::vector<Element> out;
  std::int64_t target = a.back() - u.back();  // sumset maxima add
  if (target < 0) return out;
  for (const auto& c : members_by_max_[static_cast<std::size_t>(target)]) {
    if (sumset_sorted(u, c) == a) out.push_back(c);
  }
  return out;
}

std::vector<Element> LengthSystemMonoid::scope_elements(std::int64_t bound) const {
  std::vector<Element> out;
  std::int64_t cap = std::min(bound, kUniverseCap);
  for (std::int64_t mx = 1; mx <= cap; ++mx) {
    for (const auto& m : members_by_max_[static_cast<std::size_t>(mx)]) out.push_back(m);
  }
  return out;
}

std::string LengthSystemMonoid::element_repr(const Element& a) const {
  std::string s = "{";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + "}";
}

nlohmann::ordered_json LengthSystemMonoid::element_json(const Element& a) const { return a; }

Element LengthSystemMonoid::parse_element(const nlohmann::ordered_json& j) const {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("length system element: expected a nonempty sorted array");
  Element a;
  std::int64_t prev = -1;
  for (const auto& x : j) {
    if (!x.is_number_integer())
      throw std::invalid_argument("length system element: values must be integers");
    std::int64_t v = x.get<std::int64_t>();
    if (v < 0) throw std::invalid_argument("length system element: values must be >= 0");
    if (v <= prev)
      throw std::invalid_argument("length system element: values must be strictly increasing");
    prev = v;
    a.push_back(v);
  }
  if (a.back() > kUniverseCap)
    throw ScopeError("length system element: max value exceeds the materialized universe " +
                     std::to_string(kUniverseCap));
  if (!system_member(kind_, a))
    throw std::invalid_argument("length system element: not a member of the " +
                                system_descriptor_name(kind_) + " family");
  return a;
}

}  // namespace factorlab
