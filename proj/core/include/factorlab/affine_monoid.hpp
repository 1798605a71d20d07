#pragma once
// Finitely generated submonoid of a nonnegative integer lattice. An empty
// generator list gives the trivial monoid, usable as a product factor.
// Carries no witness-bound certificate: unions computed here are reported
// as partial.

#include <cstdint>
#include <vector>

#include "factorlab/monoid.hpp"

namespace factorlab {

class AffineMonoid : public PresentedMonoid {
 public:
  // generators: nonzero vectors of equal dimension dim (dim may be given
  // explicitly to allow an empty list)
  explicit AffineMonoid(std::vector<std::vector<std::int64_t>> generators,
                        std::size_t dim = SIZE_MAX);

  const std::vector<Element>& generator_vectors() const { return generators_; }
  std::size_t dimension() const { return dim_; }

  std::string family() const override { return "affine"; }
  std::string describe() const override;
  bool cancellative() const override { return true; }
  Element identity() const override { return Element(dim_, 0); }
  bool contains(const Element& a) const override;
  int atom_count() const override { return static_cast<int>(atoms_.size()); }
  Element atom(int id) const override { return atoms_[id]; }
  std::string atom_name(int id) const override;
  std::vector<int> atoms_dividing(const Element& a) const override;
  std::vector<Element> cofactors(const Element& a, int atom_id) const override;
  std::int64_t element_size(const Element& a) const override;
  std::vector<Element> scope_elements(std::int64_t bound) const override;
  std::string element_repr(const Element& a) const override;
  nlohmann::ordered_json element_json(const Element& a) const override;
  Element parse_element(const nlohmann::ordered_json& j) const override;

 private:
  std::size_t dim_;
  std::vector<Element> generators_;  // sorted lexicographically
  std::vector<Element> atoms_;       // minimal generators, same order
};

}  // namespace factorlab
