#include "factorlab/krull_monoid.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "factorlab/engine.hpp"
#include "factorlab/parallel.hpp"

namespace factorlab {

KrullMonoid::KrullMonoid(AbelianGroup g, std::vector<std::pair<std::string, GroupElem>> primes)
    : group_(std::move(g)), primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 0; i + 1 < primes_.size(); ++i) {
    if (primes_[i].first == primes_[i + 1].first)
      throw std::invalid_argument("krull: duplicate prime name " + primes_[i].first);
  }
  for (const auto& [name, cls] : primes_) {
    if (cls.size() != group_.moduli().size())
      throw std::invalid_argument("krull: class of " + name + " has wrong rank");
    for (size_t i = 0; i < cls.size(); ++i) {
      if (cls[i] < 0 || cls[i] >= group_.moduli()[i])
        throw std::invalid_argument("krull: class coordinate of " + name + " out of range");
    }
    prime_classes_.push_back(cls);
  }
  class_support_ = prime_classes_;
  std::sort(class_support_.begin(), class_support_.end());
  class_support_.erase(std::unique(class_support_.begin(), class_support_.end()),
                       class_support_.end());
  atoms_ = minimal_zero_sums(group_, prime_classes_);
}

Element KrullMonoid::transfer(const Element& a) const {
  Element b(class_support_.size(), 0);
  for (size_t i = 0; i < primes_.size(); ++i) {
    auto it = std::lower_bound(class_support_.begin(), class_support_.end(), prime_classes_[i]);
    b[it - class_support_.begin()] += a[i];
  }
  return b;
}

Element KrullMonoid::section_preimage(const Element& b) const {
  Element a(primes_.size(), 0);
  for (size_t c = 0; c < class_support_.size(); ++c) {
    if (b[c] == 0) continue;
    for (size_t i = 0; i < primes_.size(); ++i) {
      if (prime_classes_[i] == class_support_[c]) {
        a[i] += b[c];
        break;
      }
    }
  }
  return a;
}

std::string KrullMonoid::describe() const {
  return "presented monoid with " + std::to_string(primes_.size()) + " primes over " +
         group_.name();
}

bool KrullMonoid::contains(const Element& a) const {
  if (a.size() != primes_.size()) return false;
  for (auto m : a) {
    if (m < 0) return false;
  }
  return group_.is_zero(weighted_sum(group_, prime_classes_, a));
}

std::string KrullMonoid::atom_name(int id) const { return element_repr(atoms_[id]); }

std::vector<int> KrullMonoid::atoms_dividing(const Element& a) const {
  std::vector<int> out;
  for (int id = 0; id < atom_count(); ++id) {
    const auto& u = atoms_[id];
    bool le = true;
    for (size_t i = 0; i < u.size(); ++i) {
      if (u[i] > a[i]) {
        le = false;
        break;
      }
    }
    if (le) out.push_back(id);
  }
  return out;
}

std::vector<Element> KrullMonoid::cofactors(const Element& a, int atom_id) const {
  const auto& u = atoms_[atom_id];
  Element b(a.size());
  for (size_t i = 0; i < a.size(); ++i) b[i] = a[i] - u[i];
  return {std::move(b)};
}

std::vector<Element> KrullMonoid::scope_elements(std::int64_t bound) const {
  return zero_sum_scope(group_, prime_classes_, bound);
}

std::string KrullMonoid::element_repr(const Element& a) const {
  std::string s;
  for (size_t i = 0; i < primes_.size(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += " ";
    s += primes_[i].first;
    if (a[i] > 1) s += "^" + std::to_string(a[i]);
  }
  return s.empty() ? "1" : s;
}

nlohmann::ordered_json KrullMonoid::element_json(const Element& a) const {
  auto obj = nlohmann::ordered_json::object();
  for (size_t i = 0; i < primes_.size(); ++i) {
    if (a[i] > 0) obj[primes_[i].first] = a[i];
  }
  return obj;
}

Element KrullMonoid::parse_element(const nlohmann::ordered_json& j) const {
  if (!j.is_object())
    throw std::invalid_argument("krull element: expected an object of prime multiplicities");
  Element a(primes_.size(), 0);
  for (const auto& [key, val] : j.items()) {
    auto it = std::find_if(primes_.begin(), primes_.end(),
                           [&](const auto& p) { return p.first == key; });
    if (it == primes_.end())
      throw std::invalid_argument("krull element: unknown prime " + key);
    if (!val.is_number_integer() || val.get<std::int64_t>() < 1)
      throw std::invalid_argument("krull element: multiplicity of " + key +
                                  " must be an integer >= 1");
    a[it - primes_.begin()] = val.get<std::int64_t>();
  }
  if (!contains(a))
    throw std::invalid_argument("krull element: class-weighted sum is not zero");
  return a;
}

TransferReport verify_transfer(const KrullMonoid& H, std::int64_t bound, int workers) {
  TransferReport rep;
  auto block = H.class_block();
  auto scope = H.scope_elements(bound);
  rep.elements_checked = static_cast<std::int64_t>(scope.size());

  struct Slot {
    bool lengths_ok = true;
    bool lifts_ok = true;
    std::int64_t lifts = 0;
    std::string detail;
  };
  std::vector<Slot> slots(scope.size());
  int w = std::max(1, workers);
  std::vector<std::unique_ptr<Engine>> h_engines, b_engines;
  std::size_t nworkers = std::max<std::size_t>(1, std::min<std::size_t>(w, scope.size()));
  for (std::size_t i = 0; i < nworkers; ++i) {
    h_engines.push_back(std::make_unique<Engine>(H));
    b_engines.push_back(std::make_unique<Engine>(block));
  }

  // expand a factorization into the listed atoms, one entry per copy
  auto expand = [](const Factorization& z) {
    std::vector<int> ids;
    for (const auto& [id, m] : z) {
      for (std::int64_t i = 0; i < m; ++i) ids.push_back(id);
    }
    return ids;
  };

  parallel_for_indexed(scope.size(), w, [&](int wid, std::size_t i) {
    const Element& a = scope[i];
    Slot& slot = slots[i];
    Element beta = H.transfer(a);
    const auto& lh = h_engines[wid]->lengths(a);
    const auto& lb = b_engines[wid]->lengths(beta);
    if (lh != lb) {
      slot.lengths_ok = false;
      slot.detail = "lengths differ at " + H.element_repr(a);
      return;
    }
    // lift every collapsed factorization: hand each collapsed atom the
    // first remaining primes of each class it needs
    auto zs = b_engines[wid]->factorizations(beta);
    for (const auto& z : zs) {
      ++slot.lifts;
      Element remaining = a;
      Element product = H.identity();
      std::int64_t atoms_used = 0;
      bool ok = true;
      for (int uid : expand(z)) {
        Element block_atom = block.atom(uid);
        Element lifted(remaining.size(), 0);
        for (size_t c = 0; c < block_atom.size() && ok; ++c) {
          std::int64_t need = block_atom[c];
          for (size_t p = 0; p < remaining.size() && need > 0; ++p) {
            if (H.primes()[p].second != H.class_support()[c]) continue;
            std::int64_t take = std::min(need, remaining[p]);
            lifted[p] += take;
            remaining[p] -= take;
            need -= take;
          }
          if (need > 0) ok = false;
        }
        if (!ok) break;
        // the lift of a collapsed atom must itself be an atom upstairs
        bool found = false;
        for (int hid = 0; hid < H.atom_count(); ++hid) {
          if (H.atom(hid) == lifted) {
            found = true;
            break;
          }
        }
        if (!found) {
          ok = false;
          break;
        }
        for (size_t p = 0; p < product.size(); ++p) product[p] += lifted[p];
        ++atoms_used;
      }
      if (ok) {
        ok = product == a && atoms_used == factorization_length(z);
      }
      if (!ok) {
        slot.lifts_ok = false;
        slot.detail = "lift failed at " + H.element_repr(a);
        return;
      }
    }
  });

  for (std::size_t i = 0; i < slots.size(); ++i) {
    rep.lifts_checked += slots[i].lifts;
    if ((!slots[i].lengths_ok || !slots[i].lifts_ok) && rep.lengths_ok && rep.lifts_ok) {
      rep.first_failure = scope[i];
      rep.detail = slots[i].detail;
    }
    if (!slots[i].lengths_ok) rep.lengths_ok = false;
    if (!slots[i].lifts_ok) rep.lifts_ok = false;
  }
  return rep;
}

}  // namespace factorlab
