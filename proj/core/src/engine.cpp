#include "factorlab/engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <stdexcept>

#include "factorlab/parallel.hpp"

namespace factorlab {

std::int64_t factorization_length(const Factorization& z) {
  std::int64_t n = 0;
  for (const auto& [id, m] : z) n += m;
  return n;
}

std::int64_t factorization_distance(const Factorization& x, const Factorization& y) {
  std::int64_t rx = 0, ry = 0;
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      rx += x[i].second;
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      ry += y[j].second;
      ++j;
    } else {
      std::int64_t c = std::min(x[i].second, y[j].second);
      rx += x[i].second - c;
      ry += y[j].second - c;
      ++i;
      ++j;
    }
  }
  return std::max(rx, ry);
}

std::string factorization_str(const PresentedMonoid& m, const Factorization& z) {
  if (z.empty()) return "(empty)";
  std::string s;
  for (const auto& [id, mult] : z) {
    if (!s.empty()) s += " ";
    s += m.atom_name(id);
    if (mult > 1) s += "^" + std::to_string(mult);
  }
  return s;
}

std::set<std::int64_t> delta_set(const std::set<std::int64_t>& lengths) {
  std::set<std::int64_t> d;
  auto it = lengths.begin();
  if (it == lengths.end()) return d;
  auto prev = *it;
  for (++it; it != lengths.end(); ++it) {
    d.insert(*it - prev);
    prev = *it;
  }
  return d;
}

Rational elasticity(const std::set<std::int64_t>& lengths) {
  std::int64_t lo = 0, hi = 0;
  for (auto l : lengths) {
    if (l >= 1) {
      if (lo == 0) lo = l;
      hi = l;
    }
  }
  if (lo == 0) return Rational(1);
  return Rational(hi, lo);
}

bool is_interval(const std::set<std::int64_t>& s) {
  if (s.empty()) return true;
  return *s.rbegin() - *s.begin() + 1 == static_cast<std::int64_t>(s.size());
}

void Engine::collect(const Element& a, int min_atom, Factorization& cur,
                     std::vector<Factorization>& out) {
  if (m_.is_identity(a)) {
    out.push_back(cur);
    return;
  }
  for (int id : m_.atoms_dividing(a)) {
    if (id < min_atom) continue;
    for (const auto& b : m_.cofactors(a, id)) {
      if (!cur.empty() && cur.back().first == id)
        ++cur.back().second;
      else
        cur.push_back({id, 1});
      collect(b, id, cur, out);
      if (--cur.back().second == 0) cur.pop_back();
    }
  }
}

std::vector<Factorization> Engine::factorizations(const Element& a) {
  std::vector<Factorization> out;
  Factorization cur;
  collect(a, 0, cur, out);
  std::sort(out.begin(), out.end(), [](const Factorization& x, const Factorization& y) {
    auto lx = factorization_length(x), ly = factorization_length(y);
    if (lx != ly) return lx < ly;
    return x < y;
  });
  return out;
}

std::int64_t Engine::factorization_count(const Element& a) {
  return static_cast<std::int64_t>(factorizations(a).size());
}

const std::set<std::int64_t>& Engine::lengths(const Element& a) {
  auto it = lengths_memo_.find(a);
  if (it != lengths_memo_.end()) return it->second;
  std::set<std::int64_t> ls;
  if (m_.is_identity(a)) {
    ls.insert(0);
  } else {
    // every cofactor is strictly smaller under element_size, so this
    // recursion bottoms out
    for (int id : m_.atoms_dividing(a)) {
      for (const auto& b : m_.cofactors(a, id)) {
        for (auto l : lengths(b)) ls.insert(l + 1);
      }
    }
  }
  return lengths_memo_.emplace(a, std::move(ls)).first->second;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

std::int64_t Engine::catenary_degree(const Element& a) {
  auto zs = factorizations(a);
  std::size_t n = zs.size();
  if (n <= 1) return 0;
  struct Edge {
    std::int64_t w;
    int u, v;
  };
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      edges.push_back({factorization_distance(zs[i], zs[j]), static_cast<int>(i),
                       static_cast<int>(j)});
  std::sort(edges.begin(), edges.end(),
            [](const Edge& x, const Edge& y) { return x.w < y.w; });
  // bottleneck spanning tree: the last edge weight that merges components is
  // the least N for which the <=N distance graph is connected
  Dsu dsu(n);
  std::int64_t c = 0;
  std::size_t merged = 0;
  for (const auto& e : edges) {
    if (dsu.unite(e.u, e.v)) {
      c = e.w;
      if (++merged == n - 1) break;
    }
  }
  return c;
}

UnionResult Engine::union_of_lengths(std::int64_t k, std::int64_t scope_bound) {
  if (k < 0) throw std::invalid_argument("union_of_lengths: k must be >= 0");
  UnionResult r;
  if (k == 0) {
    r.values = {0};
    r.exact = true;
    return r;
  }
  if (k == 1) {
    // atoms factor only as themselves, so their sets of lengths are {1}
    if (m_.atom_count() > 0) r.values = {1};
    r.exact = true;
    return r;
  }
  auto wb = m_.witness_bound(k);
  std::int64_t used = scope_bound;
  bool exact = false;
  if (wb && *wb <= scope_bound) {
    used = *wb;
    exact = true;
  }
  r.scope_used = used;
  r.exact = exact;
  for (const auto& a : m_.scope_elements(used)) {
    const auto& L = lengths(a);
    if (L.count(k)) r.values.insert(L.begin(), L.end());
  }
  return r;
}

TameResult Engine::tame_degree(int atom_id, std::int64_t scope_bound) {
  TameResult r;
  for (const auto& a : m_.scope_elements(scope_bound)) {
    auto div = m_.atoms_dividing(a);
    if (std::find(div.begin(), div.end(), atom_id) == div.end()) continue;
    r.empty_scope = false;
    auto zs = factorizations(a);
    std::vector<const Factorization*> with_atom;
    for (const auto& z : zs) {
      for (const auto& [id, mult] : z) {
        if (id == atom_id) {
          with_atom.push_back(&z);
          break;
        }
      }
    }
    // a is a multiple of the atom, so at least one factorization uses it
    for (const auto& z : zs) {
      std::int64_t best = -1;
      const Factorization* nearest = nullptr;
      for (const auto* w : with_atom) {
        auto d = factorization_distance(z, *w);
        if (best < 0 || d < best) {
          best = d;
          nearest = w;
        }
      }
      if (best > r.value) {
        r.value = best;
        r.witness_element = a;
        r.witness_from = z;
        r.witness_to = *nearest;
      }
    }
  }
  return r;
}

ScanAggregate scan_elements(const PresentedMonoid& m, const std::vector<Element>& scope,
                            int workers) {
  ScanAggregate agg;
  agg.per_element.resize(scope.size());
  int w = std::max(1, workers);
  std::vector<std::unique_ptr<Engine>> engines;
  for (int i = 0; i < std::max<int>(1, std::min<std::size_t>(w, scope.size())); ++i)
    engines.push_back(std::make_unique<Engine>(m));
  parallel_for_indexed(scope.size(), w, [&](int wid, std::size_t i) {
    Engine& eng = *engines[wid];
    ElementReport& rep = agg.per_element[i];
    rep.a = scope[i];
    rep.len = eng.lengths(scope[i]);
    auto zs = eng.factorizations(scope[i]);
    rep.z_count = static_cast<std::int64_t>(zs.size());
    rep.delta = delta_set(rep.len);
    rep.rho = elasticity(rep.len);
    // catenary and the pairwise distance floor share one pass over Z(a)
    std::size_t n = zs.size();
    if (n >= 2) {
      struct Edge {
        std::int64_t w;
        int u, v;
      };
      std::vector<Edge> edges;
      edges.reserve(n * (n - 1) / 2);
      for (std::size_t x = 0; x < n; ++x) {
        auto lx = factorization_length(zs[x]);
        for (std::size_t y = x + 1; y < n; ++y) {
          auto d = factorization_distance(zs[x], zs[y]);
          auto gap = std::abs(lx - factorization_length(zs[y]));
          if (d < 1 + gap) rep.pair_bound_ok = false;
          edges.push_back({d, static_cast<int>(x), static_cast<int>(y)});
        }
      }
      std::sort(edges.begin(), edges.end(),
                [](const Edge& a, const Edge& b) { return a.w < b.w; });
      Dsu dsu(n);
      std::size_t merged = 0;
      for (const auto& e : edges) {
        if (dsu.unite(e.u, e.v)) {
          rep.catenary = e.w;
          if (++merged == n - 1) break;
        }
      }
    }
  });
  for (std::size_t i = 0; i < agg.per_element.size(); ++i) {
    const auto& rep = agg.per_element[i];
    agg.delta_union.insert(rep.delta.begin(), rep.delta.end());
    if (rep.catenary > 0) {
      agg.catenary_values.insert(rep.catenary);
      agg.max_catenary = std::max(agg.max_catenary, rep.catenary);
    }
    if (rep.rho > agg.max_elasticity) {
      agg.max_elasticity = rep.rho;
      agg.max_elasticity_index = i;
    }
    if (!rep.pair_bound_ok) agg.all_pair_bounds_ok = false;
  }
  return agg;
}

}  // namespace factorlab
