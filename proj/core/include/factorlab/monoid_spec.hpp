#pragma once
// JSON descriptions of monoids, one object per monoid with a "kind" tag.
// Malformed descriptions raise std::invalid_argument with a message naming
// the offending field.

#include <memory>
#include <string>

#include "factorlab/monoid.hpp"

namespace factorlab {

// {"kind": "block",         "group": [n...], "g0": "all" | "nonzero" | [[coords]...]}
// {"kind": "numerical",     "generators": [n...]}
// {"kind": "affine",        "generators": [[v...]...]}
// {"kind": "power0",        "max_value": N}
// {"kind": "product",       "factors": [spec...]}
// {"kind": "krull",         "group": [n...], "primes": {"p": [coords]...}}
// {"kind": "box_primary",   "bound": B}
// {"kind": "length_system", "descriptor": "C4", "atom_cap": 10}
std::unique_ptr<PresentedMonoid> make_monoid(const nlohmann::ordered_json& spec);

// reads a spec from a file path, or from stdin when the path is "-"
nlohmann::ordered_json load_spec(const std::string& path);

}  // namespace factorlab
