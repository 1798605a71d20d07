#pragma once
// Monoid presented by named prime divisors mapped into a finite abelian
// class group: elements are prime multisets whose class-weighted sum is
// zero. Sending a prime to its class collapses the presentation onto the
// zero-sum monoid over the occupied classes; verify_transfer checks that
// this collapse preserves sets of lengths element by element and that every
// collapsed factorization lifts back.

#include <string>
#include <utility>
#include <vector>

#include "factorlab/block_monoid.hpp"
#include "factorlab/group.hpp"
#include "factorlab/monoid.hpp"
#include "factorlab/zero_sum.hpp"

namespace factorlab {

class KrullMonoid : public PresentedMonoid {
 public:
  KrullMonoid(AbelianGroup g, std::vector<std::pair<std::string, GroupElem>> primes);

  const AbelianGroup& group() const { return group_; }
  const std::vector<std::pair<std::string, GroupElem>>& primes() const { return primes_; }
  // distinct occupied classes, sorted; the support of the collapsed monoid
  const std::vector<GroupElem>& class_support() const { return class_support_; }
  BlockMonoid class_block() const { return BlockMonoid(group_, class_support_); }
  // class multiset of a, as an element of class_block()
  Element transfer(const Element& a) const;
  // canonical preimage: all multiplicity on the first prime of each class
  Element section_preimage(const Element& b) const;

  std::string family() const override { return "krull"; }
  std::string describe() const override;
  bool cancellative() const override { return true; }
  Element identity() const override { return Element(primes_.size(), 0); }
  bool contains(const Element& a) const override;
  int atom_count() const override { return static_cast<int>(atoms_.size()); }
  Element atom(int id) const override { return atoms_[id]; }
  std::string atom_name(int id) const override;
  std::vector<int> atoms_dividing(const Element& a) const override;
  std::vector<Element> cofactors(const Element& a, int atom_id) const override;
  std::int64_t element_size(const Element& a) const override { return total_length(a); }
  std::vector<Element> scope_elements(std::int64_t bound) const override;
  std::string element_repr(const Element& a) const override;
  nlohmann::ordered_json element_json(const Element& a) const override;
  Element parse_element(const nlohmann::ordered_json& j) const override;

 private:
  AbelianGroup group_;
  std::vector<std::pair<std::string, GroupElem>> primes_;  // sorted by name
  std::vector<GroupElem> prime_classes_;                   // class per prime
  std::vector<GroupElem> class_support_;
  std::vector<MultVector> atoms_;
};

struct TransferReport {
  bool lengths_ok = true;
  bool lifts_ok = true;
  std::int64_t elements_checked = 0;
  std::int64_t lifts_checked = 0;
  Element first_failure;  // H-side element of the first mismatch, if any
  std::string detail;
};

// Checks, for every H element within the size bound, that the sets of
// lengths agree across the transfer and that each collapsed factorization
// lifts to an H factorization through greedy prime assignment.
TransferReport verify_transfer(const KrullMonoid& H, std::int64_t bound, int workers);

}  // namespace factorlab
