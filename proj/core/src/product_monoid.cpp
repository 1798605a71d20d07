#include "factorlab/product_monoid.hpp"

#include <algorithm>
#include <stdexcept>

namespace factorlab {

ProductMonoid::ProductMonoid(std::vector<std::unique_ptr<PresentedMonoid>> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("product: need at least one factor");
  atom_offset_.push_back(0);
  for (const auto& f : factors_) {
    total_atoms_ += f->atom_count();
    atom_offset_.push_back(total_atoms_);
  }
}

std::vector<Element> ProductMonoid::split(const Element& a) const {
  std::vector<Element> parts;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (pos >= a.size()) throw std::invalid_argument("product element: truncated encoding");
    auto w = static_cast<std::size_t>(a[pos]);
    if (pos + 1 + w > a.size())
      throw std::invalid_argument("product element: truncated encoding");
    parts.emplace_back(a.begin() + pos + 1, a.begin() + pos + 1 + w);
    pos += 1 + w;
  }
  if (pos != a.size()) throw std::invalid_argument("product element: trailing data");
  return parts;
}

Element ProductMonoid::join(const std::vector<Element>& parts) const {
  Element a;
  for (const auto& p : parts) {
    a.push_back(static_cast<std::int64_t>(p.size()));
    a.insert(a.end(), p.begin(), p.end());
  }
  return a;
}

std::string ProductMonoid::describe() const {
  std::string s = "product of " + std::to_string(factors_.size()) + " factors:";
  for (const auto& f : factors_) s += " [" + f->describe() + "]";
  return s;
}

bool ProductMonoid::cancellative() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const auto& f) { return f->cancellative(); });
}

Element ProductMonoid::identity() const {
  std::vector<Element> parts;
  for (const auto& f : factors_) parts.push_back(f->identity());
  return join(parts);
}

bool ProductMonoid::contains(const Element& a) const {
  std::vector<Element> parts;
  try {
    parts = split(a);
  } catch (const std::invalid_argument&) {
    return false;
  }
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (!factors_[i]->contains(parts[i])) return false;
  }
  return true;
}

std::pair<std::size_t, int> ProductMonoid::locate_atom(int id) const {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (id < atom_offset_[i + 1]) return {i, id - atom_offset_[i]};
  }
  throw std::out_of_range("product: atom id out of range");
}

Element ProductMonoid::atom(int id) const {
  auto [fi, local] = locate_atom(id);
  std::vector<Element> parts;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    parts.push_back(i == fi ? factors_[i]->atom(local) : factors_[i]->identity());
  return join(parts);
}

std::string ProductMonoid::atom_name(int id) const {
  auto [fi, local] = locate_atom(id);
  return "f" + std::to_string(fi + 1) + ":" + factors_[fi]->atom_name(local);
}

std::vector<int> ProductMonoid::atoms_dividing(const Element& a) const {
  auto parts = split(a);
  std::vector<int> out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    for (int local : factors_[i]->atoms_dividing(parts[i]))
      out.push_back(atom_offset_[i] + local);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> ProductMonoid::cofactors(const Element& a, int atom_id) const {
  auto [fi, local] = locate_atom(atom_id);
  auto parts = split(a);
  std::vector<Element> out;
  for (auto& c : factors_[fi]->cofactors(parts[fi], local)) {
    auto rebuilt = parts;
    rebuilt[fi] = std::move(c);
    out.push_back(join(rebuilt));
  }
  return out;
}

std::int64_t ProductMonoid::element_size(const Element& a) const {
  auto parts = split(a);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    s += factors_[i]->element_size(parts[i]);
  return s;
}

std::vector<Element> ProductMonoid::scope_elements(std::int64_t bound) const {
  // per-factor choices include the identity; combinations are filtered by
  // total size, and the all-identity combination is dropped
  std::vector<std::vector<Element>> choices;
  for (const auto& f : factors_) {
    std::vector<Element> c = {f->identity()};
    auto more = f->scope_elements(bound);
    c.insert(c.end(), more.begin(), more.end());
    choices.push_back(std::move(c));
  }
  std::vector<Element> out;
  std::vector<Element> parts(factors_.size());
  struct Rec {
    const ProductMonoid& m;
    std::vector<std::vector<Element>>& choices;
    std::vector<Element>& parts;
    std::vector<Element>& out;
    std::int64_t bound;
    void go(std::size_t i, std::int64_t used) {
      if (i == choices.size()) {
        Element e = m.join(parts);
        if (!m.is_identity(e)) out.push_back(e);
        return;
      }
      for (const auto& c : choices[i]) {
        auto s = m.factors_[i]->element_size(c);
        if (used + s > bound) continue;
        parts[i] = c;
        go(i + 1, used + s);
      }
    }
  } rec{*this, choices, parts, out, bound};
  rec.go(0, 0);
  std::sort(out.begin(), out.end(), [this](const Element& x, const Element& y) {
    auto sx = element_size(x), sy = element_size(y);
    if (sx != sy) return sx < sy;
    return x < y;
  });
  return out;
}

std::optional<std::int64_t> ProductMonoid::witness_bound(std::int64_t k) const {
  // compose factor bounds over all splittings of k atoms across factors
  std::vector<std::int64_t> best(static_cast<std::size_t>(k) + 1, 0);
  for (std::int64_t v = 0; v <= k; ++v) {
    auto b = factors_[0]->witness_bound(v);
    if (!b) return std::nullopt;
    best[v] = *b;
  }
  for (std::size_t i = 1; i < factors_.size(); ++i) {
    std::vector<std::int64_t> next(static_cast<std::size_t>(k) + 1, 0);
    for (std::int64_t total = 0; total <= k; ++total) {
      std::int64_t m = 0;
      for (std::int64_t v = 0; v <= total; ++v) {
        auto b = factors_[i]->witness_bound(v);
        if (!b) return std::nullopt;
        m = std::max(m, best[total - v] + *b);
      }
      next[total] = m;
    }
    best = std::move(next);
  }
  return best[static_cast<std::size_t>(k)];
}

std::string ProductMonoid::element_repr(const Element& a) const {
  auto parts = split(a);
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ", ";
    s += factors_[i]->element_repr(parts[i]);
  }
  return s + ")";
}

nlohmann::ordered_json ProductMonoid::element_json(const Element& a) const {
  auto parts = split(a);
  auto arr = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < parts.size(); ++i)
    arr.push_back(factors_[i]->element_json(parts[i]));
  return arr;
}

Element ProductMonoid::parse_element(const nlohmann::ordered_json& j) const {
  if (!j.is_array() || j.size() != factors_.size())
    throw std::invalid_argument("product element: expected one literal per factor");
  std::vector<Element> parts;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    parts.push_back(factors_[i]->parse_element(j[i]));
  return join(parts);
}

}  // namespace factorlab
