#include "factorlab/block_monoid.hpp"

#include <algorithm>
#include <stdexcept>

namespace factorlab {

namespace {

std::vector<GroupElem> sorted_support(const AbelianGroup& g, std::vector<GroupElem> support) {
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  for (const auto& e : support) {
    if (e.size() != g.moduli().size())
      throw std::invalid_argument("block: support element has wrong rank");
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] >= g.moduli()[i])
        throw std::invalid_argument("block: support coordinate out of range");
    }
  }
  return support;
}

std::string group_elem_str(const GroupElem& e) {
  std::string s = "(";
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

}  // namespace

BlockMonoid::BlockMonoid(AbelianGroup g, std::vector<GroupElem> support)
    : group_(std::move(g)), support_(sorted_support(group_, std::move(support))) {
  atoms_ = minimal_zero_sums(group_, support_);
  for (const auto& u : atoms_) max_atom_len_ = std::max(max_atom_len_, total_length(u));
}

BlockMonoid::BlockMonoid(AbelianGroup g, std::vector<GroupElem> support,
                         std::vector<MultVector> atom_table)
    : group_(std::move(g)),
      support_(sorted_support(group_, std::move(support))),
      atoms_(std::move(atom_table)) {
  for (const auto& u : atoms_) {
    if (u.size() != support_.size())
      throw std::invalid_argument("block: atom table entry has wrong width");
    max_atom_len_ = std::max(max_atom_len_, total_length(u));
  }
}

BlockMonoid BlockMonoid::over_group(const AbelianGroup& g) {
  return BlockMonoid(g, g.elements());
}

BlockMonoid BlockMonoid::over_nonzero(const AbelianGroup& g) {
  std::vector<GroupElem> support;
  for (auto& e : g.elements()) {
    if (!g.is_zero(e)) support.push_back(e);
  }
  return BlockMonoid(g, std::move(support));
}

std::string BlockMonoid::describe() const {
  return "zero-sum multisets over " + std::to_string(support_.size()) +
         " support elements of " + group_.name();
}

bool BlockMonoid::contains(const Element& a) const {
  if (a.size() != support_.size()) return false;
  for (auto m : a) {
    if (m < 0) return false;
  }
  return group_.is_zero(weighted_sum(group_, support_, a));
}

std::string BlockMonoid::atom_name(int id) const { return element_repr(atoms_[id]); }

std::vector<int> BlockMonoid::atoms_dividing(const Element& a) const {
  std::vector<int> out;
  for (int id = 0; id < atom_count(); ++id) {
    const auto& u = atoms_[id];
    bool le = true;
    for (size_t i = 0; i < u.size(); ++i) {
      if (u[i] > a[i]) {
        le = false;
        break;
      }
    }
    if (le) out.push_back(id);
  }
  return out;
}

std::vector<Element> BlockMonoid::cofactors(const Element& a, int atom_id) const {
  const auto& u = atoms_[atom_id];
  Element b(a.size());
  for (size_t i = 0; i < a.size(); ++i) b[i] = a[i] - u[i];
  return {std::move(b)};
}

std::vector<Element> BlockMonoid::scope_elements(std::int64_t bound) const {
  return zero_sum_scope(group_, support_, bound);
}

std::optional<std::int64_t> BlockMonoid::witness_bound(std::int64_t k) const {
  // a product of k atoms never exceeds k times the longest atom
  return k * max_atom_len_;
}

std::string BlockMonoid::element_repr(const Element& a) const {
  std::string s;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    s += group_elem_str(support_[i]);
    if (a[i] > 1) s += "^" + std::to_string(a[i]);
  }
  return s.empty() ? "1" : s;
}

nlohmann::ordered_json BlockMonoid::element_json(const Element& a) const {
  auto arr = nlohmann::ordered_json::array();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    arr.push_back({support_[i], a[i]});
  }
  return arr;
}

Element BlockMonoid::parse_element(const nlohmann::ordered_json& j) const {
  if (!j.is_array()) throw std::invalid_argument("block element: expected an array of pairs");
  Element a(support_.size(), 0);
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array() ||
        !entry[1].is_number_integer())
      throw std::invalid_argument("block element: entries must be [[coords], mult]");
    GroupElem e = entry[0].get<GroupElem>();
    std::int64_t mult = entry[1].get<std::int64_t>();
    if (mult < 1) throw std::invalid_argument("block element: multiplicity must be >= 1");
    auto it = std::find(support_.begin(), support_.end(), e);
    if (it == support_.end())
      throw std::invalid_argument("block element: " + group_elem_str(e) + " not in support");
    a[it - support_.begin()] += mult;
  }
  if (!contains(a)) throw std::invalid_argument("block element: multiset is not zero-sum");
  return a;
}

}  // namespace factorlab
