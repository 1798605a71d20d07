#pragma once
// Finite subsets of the nonnegative integers that contain 0, under sumset.
// Not cancellative. The max_value parameter is a window, not a submonoid:
// divisors of a set never exceed its maximum, so atom tables, sets of
// lengths, and factorizations computed inside the window are exact for
// every element that fits in it.
//
// Elements are encoded as one-entry bitmask vectors (bit v = "v is in the
// set"), so max_value is capped at 16 to keep subset sweeps cheap.

#include <cstdint>
#include <vector>

#include "factorlab/monoid.hpp"

namespace factorlab {

class PowerMonoid0 : public PresentedMonoid {
 public:
  explicit PowerMonoid0(int max_value);

  int max_value() const { return max_value_; }
  static std::uint64_t sumset(std::uint64_t a, std::uint64_t b);

  // A + C = B + C with A != B, all within the window; found during
  // construction, empty vectors if the window is too small to show one
  const Element& noncancellative_a() const { return nc_a_; }
  const Element& noncancellative_b() const { return nc_b_; }
  const Element& noncancellative_c() const { return nc_c_; }

  std::string family() const override { return "power0"; }
  std::string describe() const override;
  bool cancellative() const override { return false; }
  Element identity() const override { return {1}; }  // {0}
  bool contains(const Element& a) const override;
  int atom_count() const override { return static_cast<int>(atoms_.size()); }
  Element atom(int id) const override { return {static_cast<std::int64_t>(atoms_[id])}; }
  std::string atom_name(int id) const override;
  std::vector<int> atoms_dividing(const Element& a) const override;
  std::vector<Element> cofactors(const Element& a, int atom_id) const override;
  std::int64_t element_size(const Element& a) const override;  // max of the set
  std::vector<Element> scope_elements(std::int64_t bound) const override;
  std::string element_repr(const Element& a) const override;
  nlohmann::ordered_json element_json(const Element& a) const override;
  Element parse_element(const nlohmann::ordered_json& j) const override;

 private:
  int max_value_;
  std::vector<std::uint64_t> atoms_;  // sorted by (max, value list lex)
  Element nc_a_, nc_b_, nc_c_;
};

}  // namespace factorlab
