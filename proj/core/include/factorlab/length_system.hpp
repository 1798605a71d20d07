#pragma once
// Families of finite length sets closed under sumset, one family per small
// class-group descriptor. Members are singletons, intervals, or
// difference-2 progressions subject to a floor on the minimum; the family
// is the whole system of sets of lengths of the corresponding zero-sum
// monoid, so the adapter exposes the system itself as a monoid and lets
// the engine factor inside it.

#include <cstdint>
#include <string>
#include <vector>

#include "factorlab/monoid.hpp"

namespace factorlab {

enum class LengthSystemKind { C1, C2, C3, C22, C4, C23, C33 };

LengthSystemKind parse_system_descriptor(const std::string& name);
std::string system_descriptor_name(LengthSystemKind k);

// membership test for a sorted, duplicate-free, nonempty value list
bool system_member(LengthSystemKind k, const std::vector<std::int64_t>& vals);
// all members with max value <= cap, sorted by (max, lexicographic)
std::vector<std::vector<std::int64_t>> system_members(LengthSystemKind k, std::int64_t cap);
std::vector<std::int64_t> sumset_sorted(const std::vector<std::int64_t>& a,
                                        const std::vector<std::int64_t>& b);

class LengthSystemMonoid : public PresentedMonoid {
 public:
  // atom_cap bounds the max value scanned for atoms; below 10 the table
  // could silently miss atoms, so smaller caps are rejected
  explicit LengthSystemMonoid(LengthSystemKind kind, std::int64_t atom_cap = 10);

  LengthSystemKind kind() const { return kind_; }
  // elements are materialized only up to this max value; parse_element
  // reports a ScopeError beyond it
  static constexpr std::int64_t kUniverseCap = 64;

  std::string family() const override { return "length_system"; }
  std::string describe() const override;
  bool cancellative() const override;
  Element identity() const override { return {0}; }
  bool contains(const Element& a) const override;
  int atom_count() const override { return static_cast<int>(atoms_.size()); }
  Element atom(int id) const override { return atoms_[id]; }
  std::string atom_name(int id) const override;
  std::vector<int> atoms_dividing(const Element& a) const override;
  std::vector<Element> cofactors(const Element& a, int atom_id) const override;
  std::int64_t element_size(const Element& a) const override { return a.back(); }
  std::vector<Element> scope_elements(std::int64_t bound) const override;
  std::string element_repr(const Element& a) const override;
  nlohmann::ordered_json element_json(const Element& a) const override;
  Element parse_element(const nlohmann::ordered_json& j) const override;

 private:
  LengthSystemKind kind_;
  std::int64_t atom_cap_;
  std::vector<std::vector<Element>> members_by_max_;  // index = max value
  std::vector<Element> atoms_;
};

}  // namespace factorlab
