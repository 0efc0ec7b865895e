// Copyright 2026 the aftkit authors

#ifndef AFT_STRAT_INCREMENTAL_HPP
#define AFT_STRAT_INCREMENTAL_HPP

#include <algorithm>
#include <functional>
#include <future>
#include <vector>

#include "lat/lattice.hpp"
#include "strat/product.hpp"

namespace aft::strat {

/// How the deterministic stratum-by-stratum constructions are scheduled.
/// Results are required to be identical either way; Parallel evaluates
/// incomparable strata concurrently once their predecessors are done.
enum class Exec { Sequential, Parallel };

/// Supplies the operator of stratum i given the values chosen for its strict
/// predecessors.  The generic factory below derives it from a monolithic
/// operator; frontends plug in syntactic constructions instead.
template <class T>
using ComponentFactory = std::function<lat::Op<T>(int, const PartialElem<T>&)>;

template <class T>
using ApproxComponentFactory =
    std::function<lat::Approx<T>(int, const PartialElem<lat::Pair<T>>&)>;

/// Stratifiability test, by definition: agreeing below-or-at i forces the
/// images to agree below-or-at i.  Exhaustive at oracle scale.
template <class T>
bool is_stratifiable(const lat::Op<ProdElem<T>>& op, const ProductLattice<T>& prod,
                     const Budget& budget = Budget{}) {
  auto lattice = prod.as_lattice();
  std::vector<ProdElem<T>> xs = lattice.universe(budget);
  const Poset& po = prod.poset;
  auto agree_upto = [&](const ProdElem<T>& a, const ProdElem<T>& b, int i) {
    for (int j = 0; j < po.size(); ++j)
      if (po.leq(j, i) && !(a[static_cast<std::size_t>(j)] == b[static_cast<std::size_t>(j)]))
        return false;
    return true;
  };
  std::vector<ProdElem<T>> images;
  images.reserve(xs.size());
  for (const auto& x : xs) images.push_back(op.apply(x));
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = a + 1; b < xs.size(); ++b)
      for (int i = 0; i < po.size(); ++i)
        if (agree_upto(xs[a], xs[b], i) && !agree_upto(images[a], images[b], i))
          return false;
  return true;
}

/// The component O_i^u of a stratifiable operator, realized by evaluating O on
/// the canonical extension of u |_| a that fills all other strata with factor
/// bottoms.  Any extension gives the same answer when O is stratifiable.
template <class T>
lat::Op<T> component(const lat::Op<ProdElem<T>>& op, const ProductLattice<T>& prod, int i,
                     const PartialElem<T>& u) {
  auto poset = prod.poset;
  std::vector<T> fill;
  fill.reserve(prod.factors.size());
  for (const auto& f : prod.factors) fill.push_back(f.bottom);
  return lat::Op<T>{[op, poset, i, u, fill](const T& a) {
                      ProdElem<T> y = fill;
                      for (int j = 0; j < poset.size(); ++j)
                        if (u[static_cast<std::size_t>(j)])
                          y[static_cast<std::size_t>(j)] = *u[static_cast<std::size_t>(j)];
                      y[static_cast<std::size_t>(i)] = a;
                      return op.apply(y)[static_cast<std::size_t>(i)];
                    },
                    op.monotone_declared};
}

template <class T>
ComponentFactory<T> generic_components(const lat::Op<ProdElem<T>>& op,
                                       const ProductLattice<T>& prod) {
  return [op, prod](int i, const PartialElem<T>& u) { return component(op, prod, i, u); };
}

/// Component of an approximation on the bilattice of a product, seen through
/// the product-of-bilattices isomorphism.
template <class T>
lat::Approx<T> approx_component(const lat::Approx<ProdElem<T>>& a,
                                const ProductLattice<T>& prod, int i,
                                const PartialElem<lat::Pair<T>>& u) {
  auto prod2 = prod.bilattice_factors();
  lat::Op<ProdElem<lat::Pair<T>>> zipped{
      [a](const ProdElem<lat::Pair<T>>& x) { return zip_pair(a.apply(unzip_pair(x))); },
      true};
  lat::Op<lat::Pair<T>> comp = component(zipped, prod2, i, u);
  return lat::Approx<T>{[comp](const lat::Pair<T>& p) { return comp.apply(p); }};
}

template <class T>
ApproxComponentFactory<T> generic_approx_components(const lat::Approx<ProdElem<T>>& a,
                                                    const ProductLattice<T>& prod) {
  return [a, prod](int i, const PartialElem<lat::Pair<T>>& u) {
    return approx_component(a, prod, i, u);
  };
}

namespace detail {

/// DFS over the topological linearization, branching on the per-stratum
/// candidate sets produced by `branch`.  `keep` prunes candidates (used by
/// frontends that only assemble consistent per-stratum values).
template <class T>
void stratum_dfs(const ProductLattice<T>& prod,
                 const std::function<std::vector<T>(int, const PartialElem<T>&)>& branch,
                 const std::function<bool(int, const T&)>& keep, std::size_t depth,
                 PartialElem<T>& acc, std::vector<ProdElem<T>>& out) {
  const std::vector<int>& order = prod.poset.topo_order();
  if (depth == order.size()) {
    ProdElem<T> x;
    x.reserve(acc.size());
    for (const auto& v : acc) x.push_back(*v);
    out.push_back(x);
    return;
  }
  int i = order[depth];
  PartialElem<T> u(acc.size());
  for (int j = 0; j < prod.poset.size(); ++j)
    if (prod.poset.lt(j, i)) u[static_cast<std::size_t>(j)] = acc[static_cast<std::size_t>(j)];
  for (const T& cand : branch(i, u)) {
    if (keep && !keep(i, cand)) continue;
    acc[static_cast<std::size_t>(i)] = cand;
    stratum_dfs(prod, branch, keep, depth + 1, acc, out);
    acc[static_cast<std::size_t>(i)].reset();
  }
}

/// Deterministic stratum-by-stratum construction; Parallel mode evaluates a
/// wave of ready strata concurrently.  The per-stratum value may only depend
/// on strict predecessors, which makes the schedule unobservable.
template <class T>
ProdElem<T> stratum_schedule(const ProductLattice<T>& prod,
                             const std::function<T(int, const PartialElem<T>&)>& eval,
                             Exec exec) {
  int n = prod.poset.size();
  PartialElem<T> acc(static_cast<std::size_t>(n));
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  auto context_of = [&](int i) {
    PartialElem<T> u(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      if (prod.poset.lt(j, i)) u[static_cast<std::size_t>(j)] = acc[static_cast<std::size_t>(j)];
    return u;
  };
  if (exec == Exec::Sequential) {
    for (int i : prod.poset.topo_order())
      acc[static_cast<std::size_t>(i)] = eval(i, context_of(i));
  } else {
    int remaining = n;
    while (remaining > 0) {
      std::vector<int> ready;
      for (int i = 0; i < n; ++i) {
        if (done[static_cast<std::size_t>(i)]) continue;
        bool ok = true;
        for (int j = 0; j < n; ++j)
          if (prod.poset.lt(j, i) && !done[static_cast<std::size_t>(j)]) ok = false;
        if (ok) ready.push_back(i);
      }
      std::vector<std::future<T>> futs;
      futs.reserve(ready.size());
      for (int i : ready)
        futs.push_back(std::async(std::launch::async,
                                  [&eval, i, u = context_of(i)]() { return eval(i, u); }));
      for (std::size_t r = 0; r < ready.size(); ++r) {
        acc[static_cast<std::size_t>(ready[r])] = futs[r].get();
        done[static_cast<std::size_t>(ready[r])] = 1;
        --remaining;
      }
    }
  }
  ProdElem<T> x;
  x.reserve(acc.size());
  for (const auto& v : acc) x.push_back(*v);
  return x;
}

}  // namespace detail

/// All fixpoints of a stratifiable operator, built by branching on each
/// stratum's component fixpoints.  Equals all_fixpoints of the monolithic
/// operator.
template <class T>
std::vector<ProdElem<T>> incremental_fixpoints(const ProductLattice<T>& prod,
                                               const ComponentFactory<T>& comp_at,
                                               const Budget& budget = Budget{}) {
  std::function<std::vector<T>(int, const PartialElem<T>&)> branch =
      [&](int i, const PartialElem<T>& u) {
        return lat::all_fixpoints(comp_at(i, u), prod.factors[static_cast<std::size_t>(i)],
                                  budget);
      };
  std::vector<ProdElem<T>> out;
  PartialElem<T> acc(static_cast<std::size_t>(prod.poset.size()));
  detail::stratum_dfs<T>(prod, branch, nullptr, 0, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// Least fixpoint of a stratifiable monotone operator: x(i) is the least
/// fixpoint of the stratum-i component under the accumulated context.
template <class T>
ProdElem<T> incremental_lfp(const ProductLattice<T>& prod, const ComponentFactory<T>& comp_at,
                            Exec exec = Exec::Sequential, const Budget& budget = Budget{}) {
  return detail::stratum_schedule<T>(
      prod,
      [&](int i, const PartialElem<T>& u) {
        return lat::lfp(comp_at(i, u), prod.factors[static_cast<std::size_t>(i)], budget);
      },
      exec);
}

/// Stable fixpoints of a stratifiable approximation, branching per stratum on
/// the fixpoints of the partial stable operator of the component
/// approximation.  Note the component of C_A is not C of the component; the
/// construction below applies C to the component approximations, which is the
/// characterization that does hold.
template <class T>
std::vector<ProdElem<lat::Pair<T>>> incremental_stable_fixpoints(
    const ProductLattice<T>& prod, const ApproxComponentFactory<T>& acomp_at,
    const Budget& budget = Budget{},
    const std::function<bool(int, const lat::Pair<T>&)>& keep = nullptr) {
  auto prod2 = prod.bilattice_factors();
  std::function<std::vector<lat::Pair<T>>(int, const PartialElem<lat::Pair<T>>&)> branch =
      [&](int i, const PartialElem<lat::Pair<T>>& u) {
        lat::Approx<T> a = acomp_at(i, u);
        return lat::stable_fixpoints(a, prod.factors[static_cast<std::size_t>(i)], budget);
      };
  std::vector<ProdElem<lat::Pair<T>>> out;
  PartialElem<lat::Pair<T>> acc(static_cast<std::size_t>(prod.poset.size()));
  detail::stratum_dfs<lat::Pair<T>>(prod2, branch, keep, 0, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// Well-founded fixpoint, stratum by stratum: (x,y)(i) = lfp(C of component).
template <class T>
ProdElem<lat::Pair<T>> incremental_well_founded(const ProductLattice<T>& prod,
                                                const ApproxComponentFactory<T>& acomp_at,
                                                Exec exec = Exec::Sequential,
                                                const Budget& budget = Budget{}) {
  auto prod2 = prod.bilattice_factors();
  return detail::stratum_schedule<lat::Pair<T>>(
      prod2,
      [&](int i, const PartialElem<lat::Pair<T>>& u) {
        lat::Approx<T> a = acomp_at(i, u);
        return lat::well_founded(a, prod.factors[static_cast<std::size_t>(i)], budget);
      },
      exec);
}

/// Kripke-Kleene fixpoint, stratum by stratum: (x,y)(i) = lfp of component.
template <class T>
ProdElem<lat::Pair<T>> incremental_kripke_kleene(const ProductLattice<T>& prod,
                                                 const ApproxComponentFactory<T>& acomp_at,
                                                 Exec exec = Exec::Sequential,
                                                 const Budget& budget = Budget{}) {
  auto prod2 = prod.bilattice_factors();
  return detail::stratum_schedule<lat::Pair<T>>(
      prod2,
      [&](int i, const PartialElem<lat::Pair<T>>& u) {
        lat::Approx<T> a = acomp_at(i, u);
        return lat::kripke_kleene(a, prod.factors[static_cast<std::size_t>(i)], budget);
      },
      exec);
}

}  // namespace aft::strat

#endif
