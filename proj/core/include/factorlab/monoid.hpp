#pragma once
// Uniform adapter interface for reduced atomic monoids. Every concrete
// monoid encodes its elements as integer vectors and exposes just enough
// structure for the factorization engine: the atom table, divisibility by
// an atom, and the set of cofactors an atom division leaves behind.
//
// Cofactors are a set, not a single value: in a non-cancellative monoid
// a = u + b may hold for several distinct b. The engine relies on the
// product map being a function (each factorization leaves a unique
// remaining product), which every adapter here guarantees.

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace factorlab {

using Element = std::vector<std::int64_t>;

// A well-formed element that falls outside the configured enumeration
// window (a truncated family's max_value or box bound).
struct ScopeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class PresentedMonoid {
 public:
  virtual ~PresentedMonoid() = default;

  virtual std::string family() const = 0;
  virtual std::string describe() const = 0;
  virtual bool cancellative() const = 0;

  virtual Element identity() const = 0;
  bool is_identity(const Element& a) const { return a == identity(); }
  virtual bool contains(const Element& a) const = 0;

  // Atom table in a fixed canonical order; ids are indices into it.
  virtual int atom_count() const = 0;
  virtual Element atom(int id) const = 0;
  virtual std::string atom_name(int id) const = 0;

  // Ids of atoms u such that a = u + b for some b in the monoid.
  virtual std::vector<int> atoms_dividing(const Element& a) const = 0;
  // All b with atom(id) + b == a, in a deterministic order.
  virtual std::vector<Element> cofactors(const Element& a, int atom_id) const = 0;

  // Size measure used to define enumeration scopes; additive or at least
  // monotone under the operation in every adapter.
  virtual std::int64_t element_size(const Element& a) const = 0;
  // Non-identity elements selected by the bound (element_size <= bound for
  // most families; box-shaped universes cap coordinates at the bound
  // instead), sorted canonically.
  virtual std::vector<Element> scope_elements(std::int64_t bound) const = 0;

  // When present: a size bound B(k) such that every element a with
  // k in L(a) satisfies element_size(a) <= B(k), making U_k computed over
  // that scope exact. Adapters without a proof return nullopt.
  virtual std::optional<std::int64_t> witness_bound(std::int64_t k) const {
    (void)k;
    return std::nullopt;
  }

  virtual std::string element_repr(const Element& a) const = 0;
  virtual nlohmann::ordered_json element_json(const Element& a) const = 0;
  // Parses the element literal for this family; throws std::invalid_argument
  // on malformed input or an element outside the monoid.
  virtual Element parse_element(const nlohmann::ordered_json& j) const = 0;
};

}  // namespace factorlab
