#pragma once
// The primary monoid {(0,0)} plus all strictly positive integer pairs,
// truncated to a coordinate box. Divisors never leave the box, so
// factorizations inside it are exact. Atoms are the pairs with a
// coordinate equal to 1. The strong-primariness bound of an element a is
// max(a1, a2) + 1: every sum of that many non-units lands in a's divisor
// cone, and one fewer does not.

#include <cstdint>

#include "factorlab/monoid.hpp"

namespace factorlab {

class BoxPrimary : public PresentedMonoid {
 public:
  explicit BoxPrimary(std::int64_t bound);

  std::int64_t box_bound() const { return bound_; }

  // max(a1, a2) + 1 by the cone argument; throws ScopeError for (0,0)
  std::int64_t strong_primary_bound(const Element& a) const;
  // the same value measured inside the box by exhaustive search; throws
  // ScopeError when the box is too small to certify it
  std::int64_t strong_primary_bound_brute(const Element& a) const;

  std::string family() const override { return "box_primary"; }
  std::string describe() const override;
  bool cancellative() const override { return true; }
  Element identity() const override { return {0, 0}; }
  bool contains(const Element& a) const override;
  int atom_count() const override { return static_cast<int>(atoms_.size()); }
  Element atom(int id) const override { return atoms_[id]; }
  std::string atom_name(int id) const override;
  std::vector<int> atoms_dividing(const Element& a) const override;
  std::vector<Element> cofactors(const Element& a, int atom_id) const override;
  std::int64_t element_size(const Element& a) const override { return a[0] + a[1]; }
  // the bound caps coordinates here, so a scan at the box bound covers the
  // whole truncated universe
  std::vector<Element> scope_elements(std::int64_t bound) const override;
  std::string element_repr(const Element& a) const override;
  nlohmann::ordered_json element_json(const Element& a) const override;
  Element parse_element(const nlohmann::ordered_json& j) const override;

 private:
  std::int64_t bound_;
  std::vector<Element> atoms_;  // sorted by (coordinate sum, lex)
};

}  // namespace factorlab
