// Copyright 2026 the aftkit authors

#ifndef AFT_AEL_FORMULA_HPP
#define AFT_AEL_FORMULA_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "common/alphabet.hpp"
#include "common/split_spec.hpp"

namespace aft::ael {

struct Formula;
using FRef = std::shared_ptr<const Formula>;

/// Modal propositional formula over atoms, truth constants, negation,
/// n-ary conjunction/disjunction and the modal operator K.
struct Formula {
  enum class Kind { Atom, True, False, Not, And, Or, K };
  Kind kind = Kind::True;
  int atom = -1;           // Kind::Atom
  std::vector<FRef> kids;  // Not/K: one; And/Or: two or more
};

FRef f_atom(int id);
FRef f_true();
FRef f_false();
FRef f_const(bool v);
FRef f_not(FRef a);
FRef f_and(std::vector<FRef> kids);  // empty -> true, singleton -> the kid
FRef f_or(std::vector<FRef> kids);   // empty -> false, singleton -> the kid
FRef f_k(FRef a);
/// A => B as not A or B.
FRef f_implies(FRef a, FRef b);

/// Total structural order; equality of normalized formulas is formula
/// equality modulo associativity/commutativity of and/or.
int compare(const FRef& a, const FRef& b);
bool equal(const FRef& a, const FRef& b);

/// Negation normal form with flattened, sorted, deduplicated and/or.
/// Negation is pushed down to atoms and stops at K; arguments of K are
/// normalized recursively.  Truth constants are not folded away.
FRef normalize(FRef f);

std::set<int> atoms_of(const FRef& f);
/// Atoms with at least one occurrence outside the scope of K.
std::set<int> objective_atoms_of(const FRef& f);
bool is_objective(const FRef& f);
bool contains_k(const FRef& f);

/// Maximal modal subformulas (K-nodes not nested inside another K), with the
/// polarity of each occurrence: parity of enclosing negations.
void modal_occurrences(const FRef& f, std::vector<std::pair<FRef, bool>>& out,
                       bool positive = true);

std::string to_string(const Alphabet& sigma, const FRef& f);

/// A modal theory; `split` is the stratification exactly as declared by the
/// user (if any), validated and materialized on the engine side.
struct ModalTheory {
  Alphabet sigma;
  std::vector<FRef> formulas;
  std::optional<SplitSpec> split;
};

std::string to_string(const ModalTheory& t);

}  // namespace aft::ael

#endif
