#pragma once
// Monoid of zero-sum multisets over a chosen support inside a finite
// abelian group, under multiset union. Reduced, cancellative, finitely
// generated; its atoms are the minimal zero-sum sequences.

#include <memory>
#include <string>
#include <vector>

#include "factorlab/group.hpp"
#include "factorlab/monoid.hpp"
#include "factorlab/zero_sum.hpp"

namespace factorlab {

class BlockMonoid : public PresentedMonoid {
 public:
  BlockMonoid(AbelianGroup g, std::vector<GroupElem> support);
  // Trusts the given atom table instead of computing one. Intended for
  // perturbation tests that need a deliberately wrong table.
  BlockMonoid(AbelianGroup g, std::vector<GroupElem> support,
              std::vector<MultVector> atom_table);

  static BlockMonoid over_group(const AbelianGroup& g);    // support = G
  static BlockMonoid over_nonzero(const AbelianGroup& g);  // support = G minus 0

  const AbelianGroup& group() const { return group_; }
  const std::vector<GroupElem>& support() const { return support_; }
  // max atom length; the Davenport constant when the support is all of G
  std::int64_t max_atom_length() const { return max_atom_len_; }

  std::string family() const override { return "block"; }
  std::string describe() const override;
  bool cancellative() const override { return true; }
  Element identity() const override { return Element(support_.size(), 0); }
  bool contains(const Element& a) const override;
  int atom_count() const override { return static_cast<int>(atoms_.size()); }
  Element atom(int id) const override { return atoms_[id]; }
  std::string atom_name(int id) const override;
  std::vector<int> atoms_dividing(const Element& a) const override;
  std::vector<Element> cofactors(const Element& a, int atom_id) const override;
  std::int64_t element_size(const Element& a) const override { return total_length(a); }
  std::vector<Element> scope_elements(std::int64_t bound) const override;
  std::optional<std::int64_t> witness_bound(std::int64_t k) const override;
  std::string element_repr(const Element& a) const override;
  nlohmann::ordered_json element_json(const Element& a) const override;
  Element parse_element(const nlohmann::ordered_json& j) const override;

 private:
  AbelianGroup group_;
  std::vector<GroupElem> support_;
  std::vector<MultVector> atoms_;
  std::int64_t max_atom_len_ = 0;
};

}  // namespace factorlab
