#pragma once
// Factorization engine over a PresentedMonoid. One Engine instance owns a
// lengths memo table and must not be shared across threads; parallel scans
// give each worker its own instance.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "factorlab/monoid.hpp"
#include "factorlab/rational.hpp"

namespace factorlab {

// multiset of atoms as (atom id, multiplicity) pairs sorted by id
using Factorization = std::vector<std::pair<int, std::int64_t>>;

std::int64_t factorization_length(const Factorization& z);
// cancel the common part, then take the larger remaining length
std::int64_t factorization_distance(const Factorization& x, const Factorization& y);
std::string factorization_str(const PresentedMonoid& m, const Factorization& z);

std::set<std::int64_t> delta_set(const std::set<std::int64_t>& lengths);
// sup L / min L over the positive part; 1 when no positive length exists
Rational elasticity(const std::set<std::int64_t>& lengths);
bool is_interval(const std::set<std::int64_t>& s);

struct UnionResult {
  std::set<std::int64_t> values;
  bool exact = false;
  std::int64_t scope_used = 0;  // element_size bound that was enumerated
};

struct TameResult {
  std::int64_t value = 0;
  bool empty_scope = true;  // no multiple of the atom in scope
  Element witness_element;
  Factorization witness_from;  // z farthest from every atom-containing z'
  Factorization witness_to;    // its nearest atom-containing z'
};

class Engine {
 public:
  explicit Engine(const PresentedMonoid& m) : m_(m) {}
  const PresentedMonoid& monoid() const { return m_; }

  // all factorizations, sorted by (length, lexicographic)
  std::vector<Factorization> factorizations(const Element& a);
  std::int64_t factorization_count(const Element& a);
  const std::set<std::int64_t>& lengths(const Element& a);  // memoized
  // bottleneck over the complete distance graph on Z(a); 0 when |Z(a)| <= 1
  std::int64_t catenary_degree(const Element& a);

  // U_k over elements with element_size within scope_bound. Exact when the
  // monoid certifies a witness bound that fits under scope_bound; k = 0 and
  // k = 1 are exact unconditionally.
  UnionResult union_of_lengths(std::int64_t k, std::int64_t scope_bound);

  // sup over scoped multiples a of the atom of
  // max_z min { d(z, z') : z' in Z(a) containing the atom }
  TameResult tame_degree(int atom_id, std::int64_t scope_bound);

 private:
  const PresentedMonoid& m_;
  std::map<Element, std::set<std::int64_t>> lengths_memo_;
  void collect(const Element& a, int min_atom, Factorization& cur,
               std::vector<Factorization>& out);
};

// Per-element results of a scope scan, in scope order.
struct ElementReport {
  Element a;
  std::set<std::int64_t> len;
  std::int64_t z_count = 0;
  std::int64_t catenary = 0;
  std::set<std::int64_t> delta;
  Rational rho = Rational(1);
  // every factorization pair met d(z,z') >= 1 + | |z|-|z'| |
  bool pair_bound_ok = true;
};

struct ScanAggregate {
  std::vector<ElementReport> per_element;
  std::set<std::int64_t> delta_union;
  std::set<std::int64_t> catenary_values;  // nonzero c(a) values seen
  std::int64_t max_catenary = 0;
  Rational max_elasticity = Rational(1);
  std::size_t max_elasticity_index = SIZE_MAX;  // first attaining element
  bool all_pair_bounds_ok = true;
};

// Deterministic for any worker count: per-index results are pure functions
// folded in scope order.
ScanAggregate scan_elements(const PresentedMonoid& m, const std::vector<Element>& scope,
                            int workers);

}  // namespace factorlab
