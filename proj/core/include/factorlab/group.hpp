#pragma once
// Finite abelian groups presented as a product of cyclic moduli. Elements
// are bare coordinate vectors over the moduli exactly as given, so user
// coordinates never get rebased; invariant factors are computed on the side
// for naming and for the structural predicates.

#include <cstdint>
#include <string>
#include <vector>

namespace factorlab {

using GroupElem = std::vector<int>;

class AbelianGroup {
 public:
  // Any list of cyclic orders >= 1; an empty list is the trivial group.
  explicit AbelianGroup(std::vector<int> moduli);

  // coordinate moduli, exactly as constructed
  const std::vector<int>& moduli() const { return moduli_; }
  // normalized n_1 | n_2 | ... | n_r with every n_i >= 2
  const std::vector<int>& invariant_factors() const { return invariants_; }
  int rank() const { return static_cast<int>(invariants_.size()); }
  std::int64_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  GroupElem zero() const { return GroupElem(moduli_.size(), 0); }
  GroupElem add(const GroupElem& a, const GroupElem& b) const;
  GroupElem neg(const GroupElem& a) const;
  GroupElem scale(std::int64_t k, const GroupElem& a) const;
  bool is_zero(const GroupElem& a) const;
  std::int64_t order_of(const GroupElem& a) const;

  // all elements in lexicographic coordinate order, guarded by the cap
  std::vector<GroupElem> elements(std::int64_t cap = 10000) const;

  std::int64_t exponent() const { return invariants_.empty() ? 1 : invariants_.back(); }

  bool is_p_group() const;
  // 1 + sum (n_i - 1) equals the Davenport constant for p-groups and for
  // rank <= 2; callers must gate on this predicate
  bool davenport_formula_applies() const { return rank() <= 2 || is_p_group(); }
  std::int64_t davenport_formula_value() const;

  std::string name() const;  // from invariant factors, e.g. "C6", "C2xC4"

  bool operator==(const AbelianGroup& o) const { return moduli_ == o.moduli_; }

 private:
  std::vector<int> moduli_;
  std::vector<int> invariants_;
  std::int64_t order_;
};

}  // namespace factorlab
