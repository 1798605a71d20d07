#pragma once
// Additive submonoid of the nonnegative integers generated by a finite set
// with gcd 1. Elements are one-entry vectors; membership is decided by a
// table up to the conductor, beyond which everything belongs.

#include <cstdint>
#include <vector>

#include "factorlab/monoid.hpp"

namespace factorlab {

class NumericalMonoid : public PresentedMonoid {
 public:
  explicit NumericalMonoid(std::vector<std::int64_t> generators);

  const std::vector<std::int64_t>& generators() const { return generators_; }
  // generators that are not sums of two nonzero members
  const std::vector<std::int64_t>& atom_values() const { return atom_values_; }
  std::int64_t conductor() const { return conductor_; }
  bool is_member(std::int64_t n) const;

  std::string family() const override { return "numerical"; }
  std::string describe() const override;
  bool cancellative() const override { return true; }
  Element identity() const override { return {0}; }
  bool contains(const Element& a) const override {
    return a.size() == 1 && is_member(a[0]);
  }
  int atom_count() const override { return static_cast<int>(atom_values_.size()); }
  Element atom(int id) const override { return {atom_values_[id]}; }
  std::string atom_name(int id) const override;
  std::vector<int> atoms_dividing(const Element& a) const override;
  std::vector<Element> cofactors(const Element& a, int atom_id) const override;
  std::int64_t element_size(const Element& a) const override { return a[0]; }
  std::vector<Element> scope_elements(std::int64_t bound) const override;
  std::optional<std::int64_t> witness_bound(std::int64_t k) const override;
  std::string element_repr(const Element& a) const override;
  nlohmann::ordered_json element_json(const Element& a) const override;
  Element parse_element(const nlohmann::ordered_json& j) const override;

 private:
  std::vector<std::int64_t> generators_;
  std::vector<std::int64_t> atom_values_;
  std::vector<char> member_;     // membership for [0, conductor_)
  std::int64_t conductor_ = 0;   // all n >= conductor_ are members
};

}  // namespace factorlab
