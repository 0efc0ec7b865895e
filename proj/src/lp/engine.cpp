// Copyright 2026 the aftkit authors

#include "lp/engine.hpp"

#include <algorithm>
#include <functional>

#include "common/error.hpp"
#include "common/scc.hpp"

namespace aft::lp {

namespace {
std::atomic<std::uint64_t> g_body_evals{0};
}

std::uint64_t op_counter() { return g_body_evals.load(); }
void reset_op_counter() { g_body_evals.store(0); }

bool eval_body(const Bitset& x, const Bitset& y, const std::vector<BodyLit>& body) {
  for (const BodyLit& l : body) {
    switch (l.kind) {
      case BodyLit::Kind::Pos:
        if (!x.test(static_cast<std::size_t>(l.atom))) return false;
        break;
      case BodyLit::Kind::Neg:
        if (y.test(static_cast<std::size_t>(l.atom))) return false;
        break;
      case BodyLit::Kind::True: break;
      case BodyLit::Kind::False: return false;
    }
  }
  return true;
}

Bitset up(const Program& p, const Bitset& x, const Bitset& y) {
  g_body_evals.fetch_add(p.clauses.size(), std::memory_order_relaxed);
  Bitset out(static_cast<std::size_t>(p.sigma.size()));
  for (const Clause& c : p.clauses)
    if (eval_body(x, y, c.body)) out.set(static_cast<std::size_t>(c.head));
  return out;
}

lat::Approx<Bitset> fitting(const Program& p) {
  return lat::Approx<Bitset>{[p](const lat::Pair<Bitset>& xy) {
    return lat::Pair<Bitset>{up(p, xy.lower, xy.upper), up(p, xy.upper, xy.lower)};
  }};
}

lat::Op<Bitset> tp2(const Program& p) {
  return lat::Op<Bitset>{[p](const Bitset& x) { return up(p, x, x); }, false};
}

lat::Lattice<Bitset> interp_lattice(const Program& p) {
  return lat::powerset_lattice(static_cast<std::size_t>(p.sigma.size()));
}

std::vector<std::pair<int, int>> dependency_edges(const Program& p) {
  std::vector<std::pair<int, int>> out;
  for (const Clause& c : p.clauses)
    for (const BodyLit& l : c.body)
      if (l.has_atom()) out.emplace_back(l.atom, c.head);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

LpSplitting finish_splitting(const Program& p, const strat::Poset& poset,
                             std::vector<std::string> names,
                             std::vector<std::vector<int>> atoms) {
  LpSplitting s;
  s.poset = poset;
  s.names = std::move(names);
  s.atoms = std::move(atoms);
  s.stratum_of.assign(static_cast<std::size_t>(p.sigma.size()), -1);
  for (std::size_t i = 0; i < s.atoms.size(); ++i) {
    std::sort(s.atoms[i].begin(), s.atoms[i].end());
    for (int a : s.atoms[i]) s.stratum_of[static_cast<std::size_t>(a)] = static_cast<int>(i);
  }
  s.clause_idx.assign(s.atoms.size(), {});
  for (std::size_t c = 0; c < p.clauses.size(); ++c) {
    int i = s.stratum_of[static_cast<std::size_t>(p.clauses[c].head)];
    s.clause_idx[static_cast<std::size_t>(i)].push_back(c);
  }
  return s;
}

}  // namespace

LpSplitting compute_splitting(const Program& p) {
  std::vector<int> comp_of;
  std::vector<std::vector<int>> atoms;
  std::vector<std::pair<int, int>> cedges;
  scc_condense(p.sigma.size(), dependency_edges(p), comp_of, atoms, cedges);
  strat::Poset poset(static_cast<int>(atoms.size()), cedges);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < atoms.size(); ++k) names.push_back("s" + std::to_string(k));
  return finish_splitting(p, poset, std::move(names), std::move(atoms));
}

LpSplitting make_splitting(const Program& p, const std::vector<std::string>& names,
                           const std::vector<std::vector<int>>& atoms,
                           const std::vector<std::pair<int, int>>& order_edges) {
  strat::Poset poset(static_cast<int>(atoms.size()), order_edges);
  LpSplitting s = finish_splitting(p, poset, names, atoms);
  validate_splitting(p, s);
  return s;
}

void validate_splitting(const Program& p, const LpSplitting& s) {
  std::vector<char> seen(static_cast<std::size_t>(p.sigma.size()), 0);
  for (const auto& group : s.atoms)
    for (int a : group) {
      if (a < 0 || a >= p.sigma.size())
        throw ValidationError("splitting mentions an atom outside the alphabet");
      if (seen[static_cast<std::size_t>(a)])
        throw ValidationError("splitting repeats atom '" + p.sigma.name(a) + "'");
      seen[static_cast<std::size_t>(a)] = 1;
    }
  for (int a = 0; a < p.sigma.size(); ++a)
    if (!seen[static_cast<std::size_t>(a)])
      throw ValidationError("splitting does not cover atom '" + p.sigma.name(a) + "'");
  for (const Clause& c : p.clauses) {
    int j = s.stratum_of[static_cast<std::size_t>(c.head)];
    for (const BodyLit& l : c.body) {
      if (!l.has_atom()) continue;
      int i = s.stratum_of[static_cast<std::size_t>(l.atom)];
      if (!s.poset.leq(i, j))
        throw ValidationError(
            "splitting disagrees with the dependency order: " + p.sigma.name(l.atom) +
            " <=dep " + p.sigma.name(c.head) + " but stratum " + s.names[static_cast<std::size_t>(i)] +
            " does not precede stratum " + s.names[static_cast<std::size_t>(j)]);
    }
  }
}

Bitset embed_local(const LpSplitting& s, int i, const Bitset& local, std::size_t nglobal) {
  Bitset out(nglobal);
  const auto& atoms = s.atoms[static_cast<std::size_t>(i)];
  for (std::size_t k = 0; k < atoms.size(); ++k)
    if (local.test(k)) out.set(static_cast<std::size_t>(atoms[k]));
  return out;
}

Bitset restrict_global(const LpSplitting& s, int i, const Bitset& global) {
  const auto& atoms = s.atoms[static_cast<std::size_t>(i)];
  Bitset out(atoms.size());
  for (std::size_t k = 0; k < atoms.size(); ++k)
    if (global.test(static_cast<std::size_t>(atoms[k]))) out.set(k);
  return out;
}

Program partial_evaluate(const Program& p, const LpSplitting& s, int i, const Bitset& u,
                         const Bitset& v, bool simplify) {
  Program out;
  for (int a : s.atoms[static_cast<std::size_t>(i)]) out.sigma.intern(p.sigma.name(a));
  for (std::size_t ci : s.clause_idx[static_cast<std::size_t>(i)]) {
    const Clause& c = p.clauses[ci];
    Clause nc;
    nc.head = out.sigma.find(p.sigma.name(c.head));
    bool dropped = false;
    for (const BodyLit& l : c.body) {
      BodyLit nl = l;
      if (l.has_atom()) {
        if (s.stratum_of[static_cast<std::size_t>(l.atom)] == i) {
          nl.atom = out.sigma.find(p.sigma.name(l.atom));
        } else {
          bool val = l.kind == BodyLit::Kind::Pos
                         ? u.test(static_cast<std::size_t>(l.atom))
                         : !v.test(static_cast<std::size_t>(l.atom));
          nl = val ? BodyLit::t() : BodyLit::f();
        }
      }
      if (simplify) {
        if (nl.kind == BodyLit::Kind::True) continue;
        if (nl.kind == BodyLit::Kind::False) {
          dropped = true;
          break;
        }
      }
      nc.body.push_back(nl);
    }
    if (!dropped) out.clauses.push_back(std::move(nc));
  }
  return out;
}

LpComponent component_approximation(const Program& p, const LpSplitting& s, int i,
                                    const Bitset& u, const Bitset& v) {
  LpComponent comp;
  comp.conservative = partial_evaluate(p, s, i, u, v);
  comp.liberal = partial_evaluate(p, s, i, v, u);
  Program pc = comp.conservative, pl = comp.liberal;
  comp.approx = lat::Approx<Bitset>{[pc, pl](const lat::Pair<Bitset>& ab) {
    return lat::Pair<Bitset>{up(pc, ab.lower, ab.upper), up(pl, ab.upper, ab.lower)};
  }};
  return comp;
}

strat::ProductLattice<Bitset> splitting_product(const Program& p, const LpSplitting& s) {
  (void)p;
  strat::ProductLattice<Bitset> prod;
  prod.poset = s.poset;
  for (const auto& group : s.atoms)
    prod.factors.push_back(lat::powerset_lattice(group.size()));
  return prod;
}

Bitset assemble(const LpSplitting& s, const strat::ProdElem<Bitset>& parts,
                std::size_t nglobal) {
  Bitset out(nglobal);
  for (std::size_t i = 0; i < parts.size(); ++i)
    out = out | embed_local(s, static_cast<int>(i), parts[i], nglobal);
  return out;
}

lat::Pair<Bitset> assemble_pair(const LpSplitting& s,
                                const strat::ProdElem<lat::Pair<Bitset>>& parts,
                                std::size_t nglobal) {
  lat::Pair<Bitset> out{Bitset(nglobal), Bitset(nglobal)};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out.lower = out.lower | embed_local(s, static_cast<int>(i), parts[i].lower, nglobal);
    out.upper = out.upper | embed_local(s, static_cast<int>(i), parts[i].upper, nglobal);
  }
  return out;
}

namespace {

// Global (U,V) context from the accumulated per-stratum pairs.
lat::Pair<Bitset> context_pair(const LpSplitting& s,
                               const strat::PartialElem<lat::Pair<Bitset>>& u,
                               std::size_t nglobal) {
  lat::Pair<Bitset> ctx{Bitset(nglobal), Bitset(nglobal)};
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (!u[j]) continue;
    ctx.lower = ctx.lower | embed_local(s, static_cast<int>(j), u[j]->lower, nglobal);
    ctx.upper = ctx.upper | embed_local(s, static_cast<int>(j), u[j]->upper, nglobal);
  }
  return ctx;
}

strat::ApproxComponentFactory<Bitset> lp_acomp(const Program& p, const LpSplitting& s) {
  std::size_t n = static_cast<std::size_t>(p.sigma.size());
  return [p, s, n](int i, const strat::PartialElem<lat::Pair<Bitset>>& u) {
    lat::Pair<Bitset> ctx = context_pair(s, u, n);
    return component_approximation(p, s, i, ctx.lower, ctx.upper).approx;
  };
}

}  // namespace

std::vector<Bitset> supported_models(const Program& p, const Budget& budget) {
  return lat::all_fixpoints(tp2(p), interp_lattice(p), budget);
}

std::vector<Bitset> supported_models_split(const Program& p, const LpSplitting& s,
                                           const Budget& budget) {
  std::size_t n = static_cast<std::size_t>(p.sigma.size());
  auto prod = splitting_product(p, s);
  strat::ComponentFactory<Bitset> comp = [p, s, n](int i,
                                                   const strat::PartialElem<Bitset>& u) {
    Bitset ctx(n);
    for (std::size_t j = 0; j < u.size(); ++j)
      if (u[j]) ctx = ctx | embed_local(s, static_cast<int>(j), *u[j], n);
    Program prog = partial_evaluate(p, s, i, ctx, ctx);
    return tp2(prog);
  };
  std::vector<Bitset> out;
  for (const auto& parts : strat::incremental_fixpoints(prod, comp, budget))
    out.push_back(assemble(s, parts, n));
  std::sort(out.begin(), out.end());
  return out;
}

lat::Pair<Bitset> kripke_kleene_model(const Program& p, const Budget& budget) {
  return lat::kripke_kleene(fitting(p), interp_lattice(p), budget);
}

lat::Pair<Bitset> kripke_kleene_model_split(const Program& p, const LpSplitting& s,
                                            strat::Exec exec, const Budget& budget) {
  auto prod = splitting_product(p, s);
  auto parts = strat::incremental_kripke_kleene(prod, lp_acomp(p, s), exec, budget);
  return assemble_pair(s, parts, static_cast<std::size_t>(p.sigma.size()));
}

std::vector<lat::Pair<Bitset>> stable_models(const Program& p, const Budget& budget) {
  return lat::stable_fixpoints(fitting(p), interp_lattice(p), budget);
}

std::vector<lat::Pair<Bitset>> stable_models_split(const Program& p, const LpSplitting& s,
                                                   const Budget& budget) {
  std::size_t n = static_cast<std::size_t>(p.sigma.size());
  auto prod = splitting_product(p, s);
  std::vector<lat::Pair<Bitset>> out;
  for (const auto& parts : strat::incremental_stable_fixpoints(prod, lp_acomp(p, s), budget))
    out.push_back(assemble_pair(s, parts, n));
  std::sort(out.begin(), out.end());
  return out;
}

lat::Pair<Bitset> well_founded_model(const Program& p, const Budget& budget) {
  return lat::well_founded(fitting(p), interp_lattice(p), budget);
}

lat::Pair<Bitset> well_founded_model_split(const Program& p, const LpSplitting& s,
                                           strat::Exec exec, const Budget& budget) {
  auto prod = splitting_product(p, s);
  auto parts = strat::incremental_well_founded(prod, lp_acomp(p, s), exec, budget);
  return assemble_pair(s, parts, static_cast<std::size_t>(p.sigma.size()));
}

}  // namespace aft::lp
