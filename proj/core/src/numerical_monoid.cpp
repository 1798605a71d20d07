#include "factorlab/numerical_monoid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace factorlab {

NumericalMonoid::NumericalMonoid(std::vector<std::int64_t> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty()) throw std::invalid_argument("numerical: need at least one generator");
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
  std::int64_t g = 0;
  for (auto n : generators_) {
    if (n < 1) throw std::invalid_argument("numerical: generators must be >= 1");
    g = std::gcd(g, n);
  }
  if (g != 1) throw std::invalid_argument("numerical: generators must have gcd 1");

  // Grow the membership table until it ends in a run of min-generator many
  // consecutive members; from the start of that run on, everything is a
  // member (keep adding the smallest generator). gcd 1 guarantees the run.
  std::int64_t gmin = generators_.front();
  std::size_t limit = static_cast<std::size_t>(std::max<std::int64_t>(64, 4 * generators_.back()));
  while (true) {
    member_.assign(limit, 0);
    member_[0] = 1;
    for (std::size_t n = 1; n < limit; ++n) {
      for (auto gen : generators_) {
        if (static_cast<std::int64_t>(n) >= gen && member_[n - gen]) {
          member_[n] = 1;
          break;
        }
      }
    }
    std::int64_t run = 0;
    conductor_ = -1;
    for (std::size_t n = 0; n < limit; ++n) {
      run = member_[n] ? run + 1 : 0;
      if (run == gmin) {
        conductor_ = static_cast<std::int64_t>(n) - gmin + 1;
        break;
      }
    }
    if (conductor_ >= 0) break;
    limit *= 2;
  }

  for (auto gen : generators_) {
    bool decomposable = false;
    for (std::int64_t m = gmin; m <= gen - gmin; ++m) {
      if (is_member(m) && is_member(gen - m)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) atom_values_.push_back(gen);
  }
}

bool NumericalMonoid::is_member(std::int64_t n) const {
  if (n < 0) return false;
  if (n >= conductor_) return true;
  return member_[static_cast<std::size_t>(n)] != 0;
}

std::string NumericalMonoid::describe() const {
  std::string s = "numerical monoid <";
  for (size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(generators_[i]);
  }
  return s + ">";
}

std::string NumericalMonoid::atom_name(int id) const {
  return std::to_string(atom_values_[id]);
}

std::vector<int> NumericalMonoid::atoms_dividing(const Element& a) const {
  std::vector<int> out;
  for (int id = 0; id < atom_count(); ++id) {
    if (is_member(a[0] - atom_values_[id])) out.push_back(id);
  }
  return out;
}

std::vector<Element> NumericalMonoid::cofactors(const Element& a, int atom_id) const {
  return {{a[0] - atom_values_[atom_id]}};
}

std::vector<Element> NumericalMonoid::scope_elements(std::int64_t bound) const {
  std::vector<Element> out;
  for (std::int64_t n = 1; n <= bound; ++n) {
    if (is_member(n)) out.push_back({n});
  }
  return out;
}

std::optional<std::int64_t> NumericalMonoid::witness_bound(std::int64_t k) const {
  // k atoms sum to at most k times the largest atom
  return k * (atom_values_.empty() ? 0 : atom_values_.back());
}

std::string NumericalMonoid::element_repr(const Element& a) const {
  return std::to_string(a[0]);
}

nlohmann::ordered_json NumericalMonoid::element_json(const Element& a) const { return a[0]; }

Element NumericalMonoid::parse_element(const nlohmann::ordered_json& j) const {
  if (!j.is_number_integer())
    throw std::invalid_argument("numerical element: expected an integer");
  std::int64_t n = j.get<std::int64_t>();
  if (!is_member(n))
    throw std::invalid_argument("numerical element: " + std::to_string(n) +
                                " is not in the monoid");
  return {n};
}

}  // namespace factorlab
