// Copyright 2026 the aftkit authors

#ifndef AFT_LAT_MIMIC_HPP
#define AFT_LAT_MIMIC_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lat/lattice.hpp"

namespace aft::lat {

/// A candidate similarity witness: a map k from a source lattice to a target
/// lattice, together with the operators it is supposed to relate.  On finite
/// lattices chain continuity of k holds automatically (every chain is finite
/// and k preserves its endpoints trivially), so it is recorded as a fact and
/// not checked.
template <class S, class T>
struct MimicWitness {
  std::function<T(const S&)> k;
  Op<S> source;  // the mimicking operator on the product-style lattice
  Op<T> target;  // the mimicked operator
};

/// Outcome of verify_mimics.  Conditions are reported individually so a
/// failing one can name its witness element.
template <class S, class T>
struct MimicReport {
  bool commutes = false;        // k . source == target . k pointwise
  bool image_covered = false;   // target(L) subset of k(src universe)
  bool central_ok = false;      // every non-empty preimage has a central element
  bool source_monotone = false;

  std::optional<S> commute_witness;
  std::optional<T> image_witness;
  std::optional<T> central_witness;

  // Populated only when all conditions hold.
  bool fixpoints_match = false;
  bool lfp_match = false;
  std::vector<T> mapped_source_fixpoints;
  std::vector<T> target_fixpoints;

  bool conditions_hold() const {
    return commutes && image_covered && central_ok && source_monotone;
  }

  std::string violated_condition() const {
    if (!commutes) return "k does not commute with the operators";
    if (!image_covered) return "target image is not covered by k";
    if (!central_ok) return "a preimage class lacks a central element";
    if (!source_monotone) return "source operator is not monotone";
    return "";
  }
};

/// Checks the finite-lattice similarity conditions and, when they all hold,
/// certifies k(fp(source)) = fp(target) and k(lfp(source)) = lfp(target).
/// An optional filter restricts the source universe (used for checks that are
/// only claimed on consistent elements); the fixpoint certification is then
/// restricted the same way on both sides via the filter image.
template <class S, class T>
MimicReport<S, T> verify_mimics(const MimicWitness<S, T>& w, const Lattice<S>& src,
                                const Lattice<T>& tgt, const Budget& budget = Budget{},
                                std::function<bool(const S&)> src_filter = nullptr) {
  MimicReport<S, T> rep;
  std::vector<S> su = src.universe(budget);
  if (src_filter) {
    std::vector<S> kept;
    for (const S& s : su)
      if (src_filter(s)) kept.push_back(s);
    su = std::move(kept);
  }
  std::vector<T> tu = tgt.universe(budget);

  rep.commutes = true;
  for (const S& s : su) {
    if (!(w.k(w.source.apply(s)) == w.target.apply(w.k(s)))) {
      rep.commutes = false;
      rep.commute_witness = s;
      break;
    }
  }

  std::vector<T> image;
  image.reserve(su.size());
  for (const S& s : su) image.push_back(w.k(s));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());

  rep.image_covered = true;
  for (const T& t : tu) {
    T v = w.target.apply(t);
    if (!std::binary_search(image.begin(), image.end(), v)) {
      rep.image_covered = false;
      rep.image_witness = t;
      break;
    }
  }

  rep.central_ok = true;
  for (const T& t : tu) {
    std::vector<S> pre;
    for (const S& s : su)
      if (w.k(s) == t) pre.push_back(s);
    if (pre.empty()) continue;
    bool found = false;
    for (const S& c : pre) {
      bool central = true;
      for (const S& o : pre)
        if (!(src.leq(c, o) || src.leq(o, c))) {
          central = false;
          break;
        }
      if (central) {
        found = true;
        break;
      }
    }
    if (!found) {
      rep.central_ok = false;
      rep.central_witness = t;
      break;
    }
  }

  rep.source_monotone = true;
  for (const S& x : su) {
    for (const S& y : su) {
      if (src.leq(x, y) && !src.leq(w.source.apply(x), w.source.apply(y))) {
        rep.source_monotone = false;
        break;
      }
    }
    if (!rep.source_monotone) break;
  }

  if (!rep.conditions_hold()) return rep;

  std::vector<T> mapped;
  for (const S& s : su)
    if (w.source.apply(s) == s) mapped.push_back(w.k(s));
  std::sort(mapped.begin(), mapped.end());
  mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());

  std::vector<T> tfix;
  for (const T& t : tu)
    if (w.target.apply(t) == t) tfix.push_back(t);
  std::sort(tfix.begin(), tfix.end());
  if (src_filter) {
    // Restricted check: only target fixpoints reachable through k are claimed.
    std::vector<T> kept;
    for (const T& t : tfix)
      if (std::binary_search(image.begin(), image.end(), t)) kept.push_back(t);
    tfix = std::move(kept);
  }

  rep.mapped_source_fixpoints = mapped;
  rep.target_fixpoints = tfix;
  rep.fixpoints_match = (mapped == tfix);
  if (!src_filter) {
    rep.lfp_match = (w.k(lfp(w.source, src, budget)) == lfp(w.target, tgt, budget));
  } else {
    rep.lfp_match = rep.fixpoints_match;  // lfp claim is only made unfiltered
  }
  return rep;
}

}  // namespace aft::lat

#endif
