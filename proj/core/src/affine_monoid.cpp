#include "factorlab/affine_monoid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace factorlab {

namespace {

bool leq(const Element& u, const Element& a) {
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i] > a[i]) return false;
  }
  return true;
}

Element sub(const Element& a, const Element& u) {
  Element r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - u[i];
  return r;
}

// membership by descent over the generators, memoized per top-level call
bool solvable(const std::vector<Element>& gens, const Element& v,
              std::map<Element, bool>& memo) {
  if (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; })) return true;
  auto it = memo.find(v);
  if (it != memo.end()) return it->second;
  bool ok = false;
  for (const auto& g : gens) {
    if (leq(g, v) && solvable(gens, sub(v, g), memo)) {
      ok = true;
      break;
    }
  }
  memo.emplace(v, ok);
  return ok;
}

}  // namespace

AffineMonoid::AffineMonoid(std::vector<std::vector<std::int64_t>> generators, std::size_t dim)
    : dim_(dim) {
  if (dim_ == SIZE_MAX) {
    if (generators.empty())
      throw std::invalid_argument("affine: empty generator list needs an explicit dimension");
    dim_ = generators.front().size();
  }
  for (const auto& g : generators) {
    if (g.size() != dim_) throw std::invalid_argument("affine: generator dimension mismatch");
    bool zero = true;
    for (auto x : g) {
      if (x < 0) throw std::invalid_argument("affine: generator coordinates must be >= 0");
      if (x > 0) zero = false;
    }
    if (zero) throw std::invalid_argument("affine: zero vector is not a valid generator");
    generators_.push_back(g);
  }
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
  // a generator is an atom unless it splits into two nonzero members
  for (const auto& g : generators_) {
    bool decomposable = false;
    std::map<Element, bool> memo;
    for (const auto& h : generators_) {
      if (h != g && leq(h, g)) {
        if (solvable(generators_, sub(g, h), memo)) {
          // g = h + rest with rest a member; rest nonzero unless h == g
          decomposable = true;
          break;
        }
      }
    }
    if (!decomposable) atoms_.push_back(g);
  }
}

std::string AffineMonoid::describe() const {
  return "affine monoid with " + std::to_string(generators_.size()) + " generators in dim " +
         std::to_string(dim_);
}

bool AffineMonoid::contains(const Element& a) const {
  if (a.size() != dim_) return false;
  for (auto x : a) {
    if (x < 0) return false;
  }
  std::map<Element, bool> memo;
  return solvable(generators_, a, memo);
}

std::string AffineMonoid::atom_name(int id) const { return element_repr(atoms_[id]); }

std::vector<int> AffineMonoid::atoms_dividing(const Element& a) const {
  std::vector<int> out;
  std::map<Element, bool> memo;
  for (int id = 0; id < atom_count(); ++id) {
    if (leq(atoms_[id], a) && solvable(generators_, sub(a, atoms_[id]), memo))
      out.push_back(id);
  }
  return out;
}

std::vector<Element> AffineMonoid::cofactors(const Element& a, int atom_id) const {
  return {sub(a, atoms_[atom_id])};
}

std::int64_t AffineMonoid::element_size(const Element& a) const {
  std::int64_t s = 0;
  for (auto x : a) s += x;
  return s;
}

std::vector<Element> AffineMonoid::scope_elements(std::int64_t bound) const {
  // breadth-first closure under adding generators, kept within the size bound
  std::set<Element> seen;
  std::vector<Element> frontier = {identity()};
  seen.insert(identity());
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& v : frontier) {
      for (const auto& g : generators_) {
        Element w(v.size());
        for (size_t i = 0; i < v.size(); ++i) w[i] = v[i] + g[i];
        if (element_size(w) <= bound && seen.insert(w).second) next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Element> out;
  for (const auto& v : seen) {
    if (!is_identity(v)) out.push_back(v);
  }
  std::sort(out.begin(), out.end(), [this](const Element& x, const Element& y) {
    auto sx = element_size(x), sy = element_size(y);
    if (sx != sy) return sx < sy;
    return x < y;
  });
  return out;
}

std::string AffineMonoid::element_repr(const Element& a) const {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

nlohmann::ordered_json AffineMonoid::element_json(const Element& a) const { return a; }

Element AffineMonoid::parse_element(const nlohmann::ordered_json& j) const {
  if (!j.is_array()) throw std::invalid_argument("affine element: expected a coordinate array");
  Element a;
  for (const auto& x : j) {
    if (!x.is_number_integer())
      throw std::invalid_argument("affine element: coordinates must be integers");
    a.push_back(x.get<std::int64_t>());
  }
  if (!contains(a)) throw std::invalid_argument("affine element: not in the monoid");
  return a;
}

}  // namespace factorlab
