// Copyright 2026 the aftkit authors

#ifndef AFT_STRAT_PRODUCT_HPP
#define AFT_STRAT_PRODUCT_HPP

#include <optional>
#include <vector>

#include "lat/lattice.hpp"
#include "strat/poset.hpp"

namespace aft::strat {

/// A total assignment of one factor element per stratum.
template <class T>
using ProdElem = std::vector<T>;

/// An assignment on a downward-closed index subset (typically the strict
/// predecessors of some stratum).
template <class T>
using PartialElem = std::vector<std::optional<T>>;

/// Product lattice over a poset of stratum indices.
template <class T>
struct ProductLattice {
  Poset poset;
  std::vector<lat::Lattice<T>> factors;

  int size() const { return poset.size(); }

  /// The product as a plain lattice (componentwise order), enumeration by
  /// odometer over the factor universes in index order.
  lat::Lattice<ProdElem<T>> as_lattice() const {
    lat::Lattice<ProdElem<T>> l;
    auto fs = factors;
    l.leq = [fs](const ProdElem<T>& a, const ProdElem<T>& b) {
      for (std::size_t i = 0; i < fs.size(); ++i)
        if (!fs[i].leq(a[i], b[i])) return false;
      return true;
    };
    l.meet = [fs](const ProdElem<T>& a, const ProdElem<T>& b) {
      ProdElem<T> r;
      r.reserve(fs.size());
      for (std::size_t i = 0; i < fs.size(); ++i) r.push_back(fs[i].meet(a[i], b[i]));
      return r;
    };
    l.join = [fs](const ProdElem<T>& a, const ProdElem<T>& b) {
      ProdElem<T> r;
      r.reserve(fs.size());
      for (std::size_t i = 0; i < fs.size(); ++i) r.push_back(fs[i].join(a[i], b[i]));
      return r;
    };
    for (const auto& f : fs) {
      l.bottom.push_back(f.bottom);
      l.top.push_back(f.top);
    }
    l.universe_size = 1;
    bool enumerable = true;
    for (const auto& f : fs) {
      l.universe_size = sat_mul(l.universe_size, f.universe_size);
      enumerable = enumerable && static_cast<bool>(f.enumerate) && f.universe_size != ~0ull;
    }
    if (enumerable && !fs.empty()) {
      l.enumerate = [fs]() {
        std::vector<std::vector<T>> us;
        us.reserve(fs.size());
        for (const auto& f : fs) us.push_back(f.enumerate());
        std::vector<ProdElem<T>> out;
        ProdElem<T> cur;
        for (const auto& u : us) cur.push_back(u.front());
        std::vector<std::size_t> idx(us.size(), 0);
        for (;;) {
          out.push_back(cur);
          std::size_t i = us.size();
          while (i-- > 0) {
            if (++idx[i] < us[i].size()) {
              cur[i] = us[i][idx[i]];
              break;
            }
            idx[i] = 0;
            cur[i] = us[i][0];
            if (i == 0) return out;
          }
        }
      };
    }
    return l;
  }

  /// The same poset with each factor replaced by its bilattice; this is the
  /// product-of-bilattices view of the bilattice of the product.
  ProductLattice<lat::Pair<T>> bilattice_factors() const {
    ProductLattice<lat::Pair<T>> out;
    out.poset = poset;
    out.factors.reserve(factors.size());
    for (const auto& f : factors) out.factors.push_back(lat::bilattice(f));
    return out;
  }
};

/// Restriction of a total element to the strict predecessors of stratum i.
template <class T>
PartialElem<T> restrict_below(const ProdElem<T>& x, const Poset& poset, int i) {
  PartialElem<T> u(x.size());
  for (int j = 0; j < poset.size(); ++j)
    if (poset.lt(j, i)) u[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)];
  return u;
}

template <class T>
ProdElem<lat::Pair<T>> zip_pair(const lat::Pair<ProdElem<T>>& p) {
  ProdElem<lat::Pair<T>> out;
  out.reserve(p.lower.size());
  for (std::size_t i = 0; i < p.lower.size(); ++i)
    out.push_back(lat::Pair<T>{p.lower[i], p.upper[i]});
  return out;
}

template <class T>
lat::Pair<ProdElem<T>> unzip_pair(const ProdElem<lat::Pair<T>>& x) {
  lat::Pair<ProdElem<T>> out;
  out.lower.reserve(x.size());
  out.upper.reserve(x.size());
  for (const auto& p : x) {
    out.lower.push_back(p.lower);
    out.upper.push_back(p.upper);
  }
  return out;
}

}  // namespace aft::strat

#endif
