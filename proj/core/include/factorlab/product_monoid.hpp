#pragma once
// Finite direct product of monoids. Elements are the factor elements
// concatenated, each preceded by its length, so factors with
// variable-width encodings compose cleanly. Atoms are factor atoms placed
// at the identity of every other coordinate, numbered factor by factor.

#include <cstdint>
#include <memory>
#include <vector>

#include "factorlab/monoid.hpp"

namespace factorlab {

class ProductMonoid : public PresentedMonoid {
 public:
  explicit ProductMonoid(std::vector<std::unique_ptr<PresentedMonoid>> factors);

  std::size_t factor_count() const { return factors_.size(); }
  const PresentedMonoid& factor(std::size_t i) const { return *factors_[i]; }
  std::vector<Element> split(const Element& a) const;
  Element join(const std::vector<Element>& parts) const;

  std::string family() const override { return "product"; }
  std::string describe() const override;
  bool cancellative() const override;
  Element identity() const override;
  bool contains(const Element& a) const override;
  int atom_count() const override { return total_atoms_; }
  Element atom(int id) const override;
  std::string atom_name(int id) const override;
  std::vector<int> atoms_dividing(const Element& a) const override;
  std::vector<Element> cofactors(const Element& a, int atom_id) const override;
  std::int64_t element_size(const Element& a) const override;
  std::vector<Element> scope_elements(std::int64_t bound) const override;
  std::optional<std::int64_t> witness_bound(std::int64_t k) const override;
  std::string element_repr(const Element& a) const override;
  nlohmann::ordered_json element_json(const Element& a) const override;
  Element parse_element(const nlohmann::ordered_json& j) const override;

 private:
  std::pair<std::size_t, int> locate_atom(int id) const;  // (factor, local id)
  std::vector<std::unique_ptr<PresentedMonoid>> factors_;
  std::vector<int> atom_offset_;  // prefix sums of factor atom counts
  int total_atoms_ = 0;
};

}  // namespace factorlab
