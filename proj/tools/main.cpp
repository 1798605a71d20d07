// Command line front end: inspect atoms, analyze single elements, scan scopes,
// and run the verification catalog. Exit codes: 0 success (PARTIAL counts as
// success), 1 a verification check failed, 2 usage or spec error, 3 malformed
// element, 4 element outside the configured window.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include <nlohmann/json.hpp>

#include "factorlab/checks.hpp"
#include "factorlab/engine.hpp"
#include "factorlab/monoid.hpp"
#include "factorlab/monoid_spec.hpp"
#include "factorlab/report.hpp"
#include "factorlab/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadElement = 3;
constexpr int kExitScope = 4;

struct Options {
  std::string spec_path;
  bool json = false;
  int workers = 1;
  std::uint64_t seed = 7;
  std::int64_t bound = 0;
  std::vector<std::int64_t> ks;
  std::int64_t cap_order = 9;
  bool timings = false;
  std::string element_text;
  std::vector<std::string> what;
  std::vector<std::string> names;
};

double since_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

void emit(nlohmann::ordered_json j) { std::cout << j.dump(2) << "\n"; }

int cmd_atoms(const Options& o) {
  nlohmann::ordered_json spec = factorlab::load_spec(o.spec_path);
  std::unique_ptr<factorlab::PresentedMonoid> m = factorlab::make_monoid(spec);
  if (o.json) {
    nlohmann::ordered_json res;
    res["family"] = m->family();
    res["describe"] = m->describe();
    res["cancellative"] = m->cancellative();
    res["atom_count"] = m->atom_count();
    nlohmann::ordered_json atoms = nlohmann::ordered_json::array();
    for (int i = 0; i < m->atom_count(); ++i) {
      nlohmann::ordered_json a;
      a["id"] = i;
      a["name"] = m->atom_name(i);
      a["element"] = m->element_json(m->atom(i));
      atoms.push_back(a);
    }
    res["atoms"] = atoms;
    emit(factorlab::envelope(spec, nlohmann::ordered_json::object(), res, "ok"));
  } else {
    std::cout << m->describe() << "\n";
    std::cout << "atoms: " << m->atom_count() << "\n";
    for (int i = 0; i < m->atom_count(); ++i)
      std::cout << "  [" << i << "] " << m->atom_name(i) << "\n";
  }
  return kExitOk;
}

int cmd_element(const Options& o) {
  nlohmann::ordered_json spec = factorlab::load_spec(o.spec_path);
  std::unique_ptr<factorlab::PresentedMonoid> m = factorlab::make_monoid(spec);

  nlohmann::ordered_json ej;
  try {
    ej = nlohmann::ordered_json::parse(o.element_text);
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "error: element is not valid JSON: " << e.what() << "\n";
    return kExitBadElement;
  }
  factorlab::Element a;
  try {
    a = m->parse_element(ej);
  } catch (const factorlab::ScopeError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadElement;
  }

  std::vector<std::string> what = o.what;
  if (what.empty())
    what = {"factorizations", "lengths", "catenary", "delta", "elasticity"};

  factorlab::Engine eng(*m);
  nlohmann::ordered_json res;
  res["element"] = m->element_repr(a);
  res["element_value"] = m->element_json(a);
  for (const std::string& w : what) {
    if (w == "factorizations") {
      std::vector<factorlab::Factorization> zs = eng.factorizations(a);
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const factorlab::Factorization& z : zs) {
        nlohmann::ordered_json f;
        f["length"] = factorlab::factorization_length(z);
        f["text"] = factorlab::factorization_str(*m, z);
        f["atoms"] = factorlab::factorization_json(z);
        arr.push_back(f);
      }
      res["factorization_count"] = static_cast<std::int64_t>(zs.size());
      res["factorizations"] = arr;
    } else if (w == "lengths") {
      res["lengths"] = factorlab::set_json(eng.lengths(a));
    } else if (w == "catenary") {
      res["catenary"] = eng.catenary_degree(a);
    } else if (w == "delta") {
      res["delta"] = factorlab::set_json(factorlab::delta_set(eng.lengths(a)));
    } else if (w == "elasticity") {
      res["elasticity"] = factorlab::rational_json(factorlab::elasticity(eng.lengths(a)));
    }
  }
  if (o.json) {
    emit(factorlab::envelope(spec, nlohmann::ordered_json::object(), res, "ok"));
  } else {
    std::cout << "element: " << m->element_repr(a) << "\n";
    for (const std::string& w : what) {
      if (w == "factorizations") {
        std::cout << "factorizations: " << res["factorization_count"].get<std::int64_t>()
                  << "\n";
        for (const auto& f : res["factorizations"])
          std::cout << "  len " << f["length"].get<std::int64_t>() << ": "
                    << f["text"].get<std::string>() << "\n";
      } else if (res.contains(w)) {
        std::cout << w << ": " << res[w].dump() << "\n";
      }
    }
  }
  return kExitOk;
}

int cmd_scan(const Options& o) {
  nlohmann::ordered_json spec = factorlab::load_spec(o.spec_path);
  std::unique_ptr<factorlab::PresentedMonoid> m = factorlab::make_monoid(spec);

  auto t0 = std::chrono::steady_clock::now();
  std::vector<factorlab::Element> scope = m->scope_elements(o.bound);
  factorlab::ScanAggregate agg = factorlab::scan_elements(*m, scope, o.workers);
  double scan_ms = since_ms(t0);

  factorlab::Engine eng(*m);
  nlohmann::ordered_json unions = nlohmann::ordered_json::array();
  for (std::int64_t k : o.ks) {
    factorlab::UnionResult u = eng.union_of_lengths(k, o.bound);
    nlohmann::ordered_json ju;
    ju["k"] = k;
    ju["values"] = factorlab::set_json(u.values);
    ju["exact"] = u.exact;
    ju["scope_used"] = u.scope_used;
    unions.push_back(ju);
  }

  nlohmann::ordered_json res;
  res["elements"] = static_cast<std::int64_t>(agg.per_element.size());
  res["delta_union"] = factorlab::set_json(agg.delta_union);
  res["catenary_values"] = factorlab::set_json(agg.catenary_values);
  res["max_catenary"] = agg.max_catenary;
  res["max_elasticity"] = factorlab::rational_json(agg.max_elasticity);
  if (agg.max_elasticity_index < agg.per_element.size())
    res["max_elasticity_element"] =
        m->element_repr(agg.per_element[agg.max_elasticity_index].a);
  else
    res["max_elasticity_element"] = nullptr;
  res["pair_floor_ok"] = agg.all_pair_bounds_ok;
  if (!o.ks.empty()) res["unions"] = unions;

  nlohmann::ordered_json scope_j;
  scope_j["bound"] = o.bound;
  if (o.json) {
    nlohmann::ordered_json out =
        factorlab::envelope(spec, scope_j, res, "ok");
    if (o.timings) out["timings"] = {{"scan_ms", scan_ms}};
    emit(out);
  } else {
    std::cout << m->describe() << "\n";
    std::cout << "scope bound " << o.bound << ": " << agg.per_element.size()
              << " elements\n";
    std::cout << "delta union: " << res["delta_union"].dump() << "\n";
    std::cout << "catenary values: " << res["catenary_values"].dump()
              << " (max " << agg.max_catenary << ")\n";
    std::cout << "max elasticity: " << agg.max_elasticity.str();
    if (!res["max_elasticity_element"].is_null())
      std::cout << " at " << res["max_elasticity_element"].get<std::string>();
    std::cout << "\n";
    std::cout << "pair distance floor: " << (agg.all_pair_bounds_ok ? "ok" : "VIOLATED")
              << "\n";
    for (const auto& ju : unions)
      std::cout << "U_" << ju["k"].get<std::int64_t>() << " = " << ju["values"].dump()
                << (ju["exact"].get<bool>() ? " (exact)" : " (scope-limited)") << "\n";
    if (o.timings) std::cout << "scan time: " << scan_ms << " ms\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& o) {
  std::vector<std::string> names = o.names;
  bool all = names.empty();
  for (const std::string& n : names)
    if (n == "all") all = true;
  if (all) {
    names = factorlab::check_names();
  } else {
    for (const std::string& n : names)
      if (!factorlab::is_check_name(n))
        throw std::invalid_argument("verify: unknown check: " + n);
  }

  factorlab::CheckOptions co;
  co.workers = o.workers;
  co.seed = o.seed;
  co.dav_order_cap = o.cap_order;

  auto t0 = std::chrono::steady_clock::now();
  std::vector<factorlab::CheckResult> results = factorlab::run_checks(names, co);
  double total_ms = since_ms(t0);

  factorlab::CheckStatus overall = factorlab::overall_status(results);
  if (o.json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const factorlab::CheckResult& c : results) arr.push_back(factorlab::check_json(c));
    nlohmann::ordered_json spec_j;
    spec_j["command"] = "verify";
    spec_j["checks"] = names;
    nlohmann::ordered_json scope_j;
    scope_j["seed"] = o.seed;
    scope_j["cap_order"] = o.cap_order;
    nlohmann::ordered_json out =
        factorlab::envelope(spec_j, scope_j, arr, factorlab::status_name(overall));
    if (o.timings) out["timings"] = {{"total_ms", total_ms}};
    emit(out);
  } else {
    for (const factorlab::CheckResult& c : results) {
      std::cout << "[" << factorlab::status_name(c.status) << "] " << c.name << ": "
                << c.summary << "\n";
    }
    std::cout << "status: " << factorlab::status_name(overall) << "\n";
    if (o.timings) std::cout << "total time: " << total_ms << " ms\n";
  }
  return overall == factorlab::CheckStatus::Fail ? kExitCheckFailed : kExitOk;
}

int cmd_checks(const Options& o) {
  if (o.json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const std::string& n : factorlab::check_names()) arr.push_back(n);
    nlohmann::ordered_json spec_j;
    spec_j["command"] = "checks";
    emit(factorlab::envelope(spec_j, nlohmann::ordered_json::object(), arr, "ok"));
  } else {
    for (const std::string& n : factorlab::check_names()) std::cout << n << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"exact factorization workbench for commutative monoids"};
  app.set_version_flag("--version", std::string(factorlab::kToolVersion));
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "emit a JSON envelope instead of text");
  app.add_option("--workers", o.workers, "worker threads for scans")
      ->default_val(1)
      ->check(CLI::Range(1, 256));
  app.add_option("--seed", o.seed, "seed for randomized verification inputs")
      ->default_val(7);
  app.add_flag("--timings", o.timings, "include wall-clock timings in the output");

  CLI::App* atoms = app.add_subcommand("atoms", "list the atoms of a monoid");
  atoms->fallthrough();
  atoms->add_option("--spec", o.spec_path, "monoid spec JSON file, - for stdin")
      ->required();

  CLI::App* element = app.add_subcommand("element", "analyze a single element");
  element->fallthrough();
  element->add_option("--spec", o.spec_path, "monoid spec JSON file, - for stdin")
      ->required();
  element->add_option("element", o.element_text, "element as a JSON literal")->required();
  element
      ->add_option("--what", o.what,
                   "any of factorizations, lengths, catenary, delta, elasticity "
                   "(default: all)")
      ->check(CLI::IsMember(
          {"factorizations", "lengths", "catenary", "delta", "elasticity"}));

  CLI::App* scan = app.add_subcommand("scan", "scan all scope elements");
  scan->fallthrough();
  scan->add_option("--spec", o.spec_path, "monoid spec JSON file, - for stdin")
      ->required();
  scan->add_option("--bound", o.bound, "scope bound (element size, or box cap)")
      ->required()
      ->check(CLI::PositiveNumber);
  scan->add_option("--k", o.ks, "also report U_k for these k (repeatable)");

  CLI::App* verify = app.add_subcommand("verify", "run verification checks");
  verify->fallthrough();
  verify->add_option("checks", o.names, "check names, or 'all' (default: all)");
  verify->add_option("--cap-order", o.cap_order,
                     "largest group order for the Davenport battery")
      ->default_val(9)
      ->check(CLI::Range(static_cast<std::int64_t>(1), static_cast<std::int64_t>(12)));

  CLI::App* checks = app.add_subcommand("checks", "list the verification catalog");
  checks->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand("atoms")) return cmd_atoms(o);
    if (app.got_subcommand("element")) return cmd_element(o);
    if (app.got_subcommand("scan")) return cmd_scan(o);
    if (app.got_subcommand("verify")) return cmd_verify(o);
    if (app.got_subcommand("checks")) return cmd_checks(o);
  } catch (const factorlab::ScopeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitScope;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
