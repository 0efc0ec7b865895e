// Copyright 2026 the aftkit authors

#ifndef AFT_LAT_LATTICE_HPP
#define AFT_LAT_LATTICE_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "common/bitset.hpp"
#include "common/budget.hpp"
#include "common/error.hpp"

namespace aft::lat {

/// An element of the bilattice L^2, read as an under/over-estimate interval.
template <class T>
struct Pair {
  T lower;
  T upper;

  bool exact() const { return lower == upper; }
  bool operator==(const Pair&) const = default;
  auto operator<=>(const Pair&) const = default;
};

/// A finite complete lattice, represented intensionally by its order and
/// meet/join, with an optional explicit enumeration for oracle operations.
/// universe_size == 0 means the universe is not enumerable; ~0ull means it is
/// finite but too large to count in 64 bits.
template <class T>
struct Lattice {
  std::function<bool(const T&, const T&)> leq;
  std::function<T(const T&, const T&)> meet;
  std::function<T(const T&, const T&)> join;
  T bottom{};
  T top{};
  std::uint64_t universe_size = 0;
  std::function<std::vector<T>()> enumerate;

  std::vector<T> universe(const Budget& budget) const {
    if (universe_size == 0 || !enumerate)
      throw BudgetError("lattice universe is not enumerable", ~0ull, budget.max_universe);
    if (universe_size > budget.max_universe)
      throw BudgetError("lattice universe enumeration", universe_size, budget.max_universe);
    return enumerate();
  }

  bool consistent(const Pair<T>& p) const { return leq(p.lower, p.upper); }
};

/// An operator on a lattice.
template <class T>
struct Op {
  std::function<T(const T&)> apply;
  bool monotone_declared = false;

  T operator()(const T& x) const { return apply(x); }
};

/// A candidate approximation: an operator on the bilattice.  Whether it really
/// is one (precision-monotone) is checkable at oracle scale, not assumed.
template <class T>
struct Approx {
  std::function<Pair<T>(const Pair<T>&)> apply;

  Pair<T> operator()(const Pair<T>& p) const { return apply(p); }
  T a1(const T& x, const T& y) const { return apply(Pair<T>{x, y}).lower; }
  T a2(const T& x, const T& y) const { return apply(Pair<T>{x, y}).upper; }
};

// ---------------------------------------------------------------------------
// Lattice factories

inline Lattice<Bitset> powerset_lattice(std::size_t nbits) {
  Lattice<Bitset> l;
  l.leq = [](const Bitset& a, const Bitset& b) { return a.subset_of(b); };
  l.meet = [](const Bitset& a, const Bitset& b) { return a & b; };
  l.join = [](const Bitset& a, const Bitset& b) { return a | b; };
  l.bottom = Bitset::zeros(nbits);
  l.top = Bitset::ones(nbits);
  l.universe_size = sat_pow2(nbits);
  if (nbits < 28) {
    l.enumerate = [nbits]() {
      std::vector<Bitset> out;
      out.reserve(std::size_t{1} << nbits);
      for (std::uint64_t v = 0; v < (1ull << nbits); ++v)
        out.push_back(Bitset::from_value(nbits, v));
      return out;
    };
  }
  return l;
}

/// Possible-world-structure lattice over 2^natoms interpretation indices.
/// Knowledge order is reverse inclusion: fewer worlds, more knowledge.
inline Lattice<Bitset> pws_lattice(std::size_t natoms) {
  std::size_t nworlds = std::size_t{1} << natoms;
  Lattice<Bitset> l;
  l.leq = [](const Bitset& a, const Bitset& b) { return b.subset_of(a); };
  l.meet = [](const Bitset& a, const Bitset& b) { return a | b; };
  l.join = [](const Bitset& a, const Bitset& b) { return a & b; };
  l.bottom = Bitset::ones(nworlds);
  l.top = Bitset::zeros(nworlds);
  l.universe_size = sat_pow2(nworlds);
  if (nworlds < 28) {
    l.enumerate = [nworlds]() {
      std::vector<Bitset> out;
      out.reserve(std::size_t{1} << nworlds);
      for (std::uint64_t v = 0; v < (1ull << nworlds); ++v)
        out.push_back(Bitset::from_value(nworlds, v));
      return out;
    };
  }
  return l;
}

/// The bilattice of `base` under the precision order.
template <class T>
Lattice<Pair<T>> bilattice(const Lattice<T>& base) {
  Lattice<Pair<T>> l;
  l.leq = [base](const Pair<T>& a, const Pair<T>& b) {
    return base.leq(a.lower, b.lower) && base.leq(b.upper, a.upper);
  };
  l.meet = [base](const Pair<T>& a, const Pair<T>& b) {
    return Pair<T>{base.meet(a.lower, b.lower), base.join(a.upper, b.upper)};
  };
  l.join = [base](const Pair<T>& a, const Pair<T>& b) {
    return Pair<T>{base.join(a.lower, b.lower), base.meet(a.upper, b.upper)};
  };
  l.bottom = Pair<T>{base.bottom, base.top};
  l.top = Pair<T>{base.top, base.bottom};
  l.universe_size = sat_mul(base.universe_size, base.universe_size);
  if (base.enumerate && base.universe_size != 0 && base.universe_size != ~0ull) {
    auto en = base.enumerate;
    l.enumerate = [en]() {
      std::vector<T> xs = en();
      std::vector<Pair<T>> out;
      out.reserve(xs.size() * xs.size());
      for (const T& x : xs)
        for (const T& y : xs) out.push_back(Pair<T>{x, y});
      return out;
    };
  }
  return l;
}

// ---------------------------------------------------------------------------
// Fixpoint operations

/// Least fixpoint by Kleene iteration from bottom.  A descent step means the
/// operator is not monotone on the iteration path; that fails loudly instead
/// of converging to garbage.
template <class T>
T lfp(const Op<T>& op, const Lattice<T>& lat, const Budget& budget = Budget{}) {
  T cur = lat.bottom;
  for (std::uint64_t step = 0; step < budget.max_steps; ++step) {
    T next = op.apply(cur);
    if (next == cur) return cur;
    if (!lat.leq(cur, next))
      throw MonotonicityError("descent observed during least-fixpoint iteration");
    cur = std::move(next);
  }
  throw BudgetError("least-fixpoint iteration", budget.max_steps + 1, budget.max_steps);
}

/// Exact fixpoint set by exhaustive scan of the universe, sorted canonically.
template <class T>
std::vector<T> all_fixpoints(const Op<T>& op, const Lattice<T>& lat,
                             const Budget& budget = Budget{}) {
  std::vector<T> out;
  for (const T& x : lat.universe(budget))
    if (op.apply(x) == x) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

/// C-down: lfp of A^1(.,y).  Anti-monotone in y.
template <class T>
T lower_stable(const Approx<T>& a, const T& y, const Lattice<T>& lat,
               const Budget& budget = Budget{}) {
  Op<T> frozen{[&a, y](const T& x) { return a.a1(x, y); }, true};
  return lfp(frozen, lat, budget);
}

/// C-up: lfp of A^2(x,.).  Anti-monotone in x.
template <class T>
T upper_stable(const Approx<T>& a, const T& x, const Lattice<T>& lat,
               const Budget& budget = Budget{}) {
  Op<T> frozen{[&a, x](const T& y) { return a.a2(x, y); }, true};
  return lfp(frozen, lat, budget);
}

/// The partial stable operator C_A.
template <class T>
Approx<T> partial_stable(const Approx<T>& a, const Lattice<T>& lat,
                         const Budget& budget = Budget{}) {
  return Approx<T>{[a, lat, budget](const Pair<T>& p) {
    return Pair<T>{lower_stable(a, p.upper, lat, budget),
                   upper_stable(a, p.lower, lat, budget)};
  }};
}

/// Least fixpoint of the approximation under the precision order.
template <class T>
Pair<T> kripke_kleene(const Approx<T>& a, const Lattice<T>& lat,
                      const Budget& budget = Budget{}) {
  Op<Pair<T>> op{[a](const Pair<T>& p) { return a.apply(p); }, true};
  return lfp(op, bilattice(lat), budget);
}

/// Least fixpoint of C_A.
template <class T>
Pair<T> well_founded(const Approx<T>& a, const Lattice<T>& lat,
                     const Budget& budget = Budget{}) {
  Approx<T> c = partial_stable(a, lat, budget);
  Op<Pair<T>> op{[c](const Pair<T>& p) { return c.apply(p); }, true};
  return lfp(op, bilattice(lat), budget);
}

/// All fixpoints of C_A, by exhausting the bilattice.  Stratified callers get
/// the per-stratum route from stratify instead.
template <class T>
std::vector<Pair<T>> stable_fixpoints(const Approx<T>& a, const Lattice<T>& lat,
                                      const Budget& budget = Budget{}) {
  Approx<T> c = partial_stable(a, lat, budget);
  Op<Pair<T>> op{[c](const Pair<T>& p) { return c.apply(p); }, true};
  return all_fixpoints(op, bilattice(lat), budget);
}

/// The unique operator approximated by an exact approximation; errors with a
/// witness when A is not exact.
template <class T>
Op<T> exact_operator(const Approx<T>& a, const Lattice<T>& lat,
                     const Budget& budget = Budget{}) {
  for (const T& x : lat.universe(budget)) {
    Pair<T> img = a.apply(Pair<T>{x, x});
    if (!(img.lower == img.upper))
      throw ValidationError("approximation is not exact: A(x,x) has distinct components");
  }
  return Op<T>{[a](const T& x) { return a.apply(Pair<T>{x, x}).lower; }, false};
}

// ---------------------------------------------------------------------------
// Oracle-scale law checks (exhaustive on the enumerated universe)

template <class T>
bool is_monotone(const Op<T>& op, const Lattice<T>& lat, const Budget& budget = Budget{}) {
  std::vector<T> xs = lat.universe(budget);
  for (const T& x : xs)
    for (const T& y : xs)
      if (lat.leq(x, y) && !lat.leq(op.apply(x), op.apply(y))) return false;
  return true;
}

template <class T>
bool is_precision_monotone(const Approx<T>& a, const Lattice<T>& lat,
                           const Budget& budget = Budget{}) {
  Op<Pair<T>> op{[a](const Pair<T>& p) { return a.apply(p); }, false};
  return is_monotone(op, bilattice(lat), budget);
}

template <class T>
bool is_symmetric(const Approx<T>& a, const Lattice<T>& lat, const Budget& budget = Budget{}) {
  auto bl = bilattice(lat);
  for (const Pair<T>& p : bl.universe(budget)) {
    Pair<T> img = a.apply(p);
    Pair<T> swapped = a.apply(Pair<T>{p.upper, p.lower});
    if (!(swapped.lower == img.upper && swapped.upper == img.lower)) return false;
  }
  return true;
}

template <class T>
bool is_exact(const Approx<T>& a, const Lattice<T>& lat, const Budget& budget = Budget{}) {
  for (const T& x : lat.universe(budget)) {
    Pair<T> img = a.apply(Pair<T>{x, x});
    if (!(img.lower == img.upper)) return false;
  }
  return true;
}

/// Consistent pairs map to consistent pairs.
template <class T>
bool is_consistent_approx(const Approx<T>& a, const Lattice<T>& lat,
                          const Budget& budget = Budget{}) {
  auto bl = bilattice(lat);
  for (const Pair<T>& p : bl.universe(budget)) {
    if (!lat.consistent(p)) continue;
    if (!lat.consistent(a.apply(p))) return false;
  }
  return true;
}

}  // namespace aft::lat

#endif
