#pragma once
// Catalog of mechanically verifiable statements about the implemented monoid
// families: length set shapes, Davenport constants, elasticities, unions of
// length sets, distance and catenary inequalities, transfer of length sets,
// primary bounds, and almost arithmetical structure. Each check enumerates a
// declared finite scope exactly and reports PASS, FAIL, or PARTIAL. PARTIAL
// means the scope shown supports but cannot decide the statement.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "factorlab/block_monoid.hpp"
#include "factorlab/group.hpp"
#include "factorlab/report.hpp"

namespace factorlab {

struct CheckOptions {
  int workers = 1;
  std::uint64_t seed = 7;
  // Davenport battery covers every abelian group of order <= dav_order_cap.
  std::int64_t dav_order_cap = 9;
  // Substitution point: checks that scan block monoids build them through
  // this factory, so tests can inject a perturbed atom table and confirm
  // the affected checks go red.
  std::function<BlockMonoid(const AbelianGroup&)> block_factory;

  BlockMonoid make_block(const AbelianGroup& g) const;
};

// Fixed catalog order; names are stable identifiers for the CLI.
const std::vector<std::string>& check_names();
bool is_check_name(const std::string& name);

CheckResult run_check(const std::string& name, const CheckOptions& opt);
std::vector<CheckResult> run_checks(const std::vector<std::string>& names,
                                    const CheckOptions& opt);

// Every abelian group of a given order, as moduli lists of prime power
// cyclic factors (one list per isomorphism class).
std::vector<std::vector<int>> abelian_groups_of_order(int order);

}  // namespace factorlab
