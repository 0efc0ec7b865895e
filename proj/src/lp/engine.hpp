// Copyright 2026 the aftkit authors

#ifndef AFT_LP_ENGINE_HPP
#define AFT_LP_ENGINE_HPP

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "common/bitset.hpp"
#include "common/budget.hpp"
#include "lat/lattice.hpp"
#include "lp/program.hpp"
#include "strat/incremental.hpp"
#include "strat/product.hpp"

namespace aft::lp {

/// A splitting of a program: a partition of the alphabet indexed by a poset,
/// plus the induced clause partition P_i (clauses whose head is in stratum i).
struct LpSplitting {
  strat::Poset poset;
  std::vector<std::string> names;
  std::vector<std::vector<int>> atoms;             // per stratum, ascending atom ids
  std::vector<int> stratum_of;                     // atom id -> stratum index
  std::vector<std::vector<std::size_t>> clause_idx;  // per stratum, clause indices
};

// Counts clause-body evaluations; the primitive-operation measure reported by
// the benchmark.
std::uint64_t op_counter();
void reset_op_counter();

/// H_{(X,Y)} over a conjunction of body literals.  Negation evaluates its atom
/// against Y (the argument swap of the four-valued truth definition).
bool eval_body(const Bitset& x, const Bitset& y, const std::vector<BodyLit>& body);

/// U_P(X,Y): heads of all clauses whose body holds under (X,Y).
Bitset up(const Program& p, const Bitset& x, const Bitset& y);

/// The four-valued immediate-consequence approximation (U_P(X,Y), U_P(Y,X)).
lat::Approx<Bitset> fitting(const Program& p);

/// The two-valued operator X -> U_P(X,X).
lat::Op<Bitset> tp2(const Program& p);

/// The interpretation lattice 2^Sigma of the program.
lat::Lattice<Bitset> interp_lattice(const Program& p);

/// Edges p <=dep q: p occurs in the body of a clause with head q.
std::vector<std::pair<int, int>> dependency_edges(const Program& p);

/// Finest valid splitting: the condensation of the dependency digraph.
LpSplitting compute_splitting(const Program& p);

/// Builds and validates a user-supplied splitting; throws ValidationError
/// naming the violating dependency edge.
LpSplitting make_splitting(const Program& p, const std::vector<std::string>& names,
                           const std::vector<std::vector<int>>& atoms,
                           const std::vector<std::pair<int, int>>& order_edges);

void validate_splitting(const Program& p, const LpSplitting& s);

/// Interpretation embedding between stratum-local and global bitmasks.
Bitset embed_local(const LpSplitting& s, int i, const Bitset& local, std::size_t nglobal);
Bitset restrict_global(const LpSplitting& s, int i, const Bitset& global);

/// The partial evaluation of P_i under a belief pair (U,V) on the lower
/// strata: lower-stratum literals become their truth constant; with
/// simplify, clauses containing f are dropped and t literals are omitted.
/// The result is a program over the stratum alphabet.
Program partial_evaluate(const Program& p, const LpSplitting& s, int i, const Bitset& u,
                         const Bitset& v, bool simplify = true);

/// The syntactic component of the four-valued operator at stratum i:
/// (A,B) -> (U_{P'}(A,B), U_{P''}(B,A)) with P' = eval(P_i,(U,V)) and
/// P'' = eval(P_i,(V,U)).
struct LpComponent {
  Program conservative;  // evaluated under (U,V)
  Program liberal;       // evaluated under (V,U)
  lat::Approx<Bitset> approx;
};
LpComponent component_approximation(const Program& p, const LpSplitting& s, int i,
                                    const Bitset& u, const Bitset& v);

/// Product lattice of per-stratum powersets.
strat::ProductLattice<Bitset> splitting_product(const Program& p, const LpSplitting& s);

Bitset assemble(const LpSplitting& s, const strat::ProdElem<Bitset>& parts,
                std::size_t nglobal);
lat::Pair<Bitset> assemble_pair(const LpSplitting& s,
                                const strat::ProdElem<lat::Pair<Bitset>>& parts,
                                std::size_t nglobal);

// --- Semantics.  Split modes route through the stratify machinery with the
// syntactic components and must return exactly the monolithic results.

std::vector<Bitset> supported_models(const Program& p, const Budget& budget = Budget{});
std::vector<Bitset> supported_models_split(const Program& p, const LpSplitting& s,
                                           const Budget& budget = Budget{});

lat::Pair<Bitset> kripke_kleene_model(const Program& p, const Budget& budget = Budget{});
lat::Pair<Bitset> kripke_kleene_model_split(const Program& p, const LpSplitting& s,
                                            strat::Exec exec = strat::Exec::Sequential,
                                            const Budget& budget = Budget{});

std::vector<lat::Pair<Bitset>> stable_models(const Program& p, const Budget& budget = Budget{});
std::vector<lat::Pair<Bitset>> stable_models_split(const Program& p, const LpSplitting& s,
                                                   const Budget& budget = Budget{});

lat::Pair<Bitset> well_founded_model(const Program& p, const Budget& budget = Budget{});
lat::Pair<Bitset> well_founded_model_split(const Program& p, const LpSplitting& s,
                                           strat::Exec exec = strat::Exec::Sequential,
                                           const Budget& budget = Budget{});

}  // namespace aft::lp

#endif
