// Copyright 2026 the aftkit authors

#include "ael/formula.hpp"

#include <algorithm>

namespace aft::ael {

namespace {
FRef make(Formula::Kind k, int atom, std::vector<FRef> kids) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->atom = atom;
  f->kids = std::move(kids);
  return f;
}
}  // namespace

FRef f_atom(int id) { return make(Formula::Kind::Atom, id, {}); }
FRef f_true() {
  static FRef t = make(Formula::Kind::True, -1, {});
  return t;
}
FRef f_false() {
  static FRef f = make(Formula::Kind::False, -1, {});
  return f;
}
FRef f_const(bool v) { return v ? f_true() : f_false(); }
FRef f_not(FRef a) { return make(Formula::Kind::Not, -1, {std::move(a)}); }
FRef f_k(FRef a) { return make(Formula::Kind::K, -1, {std::move(a)}); }

FRef f_and(std::vector<FRef> kids) {
  if (kids.empty()) return f_true();
  if (kids.size() == 1) return kids.front();
  return make(Formula::Kind::And, -1, std::move(kids));
}

FRef f_or(std::vector<FRef> kids) {
  if (kids.empty()) return f_false();
  if (kids.size() == 1) return kids.front();
  return make(Formula::Kind::Or, -1, std::move(kids));
}

FRef f_implies(FRef a, FRef b) { return f_or({f_not(std::move(a)), std::move(b)}); }

int compare(const FRef& a, const FRef& b) {
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  if (a->kind == Formula::Kind::Atom) return a->atom == b->atom ? 0 : (a->atom < b->atom ? -1 : 1);
  if (a->kids.size() != b->kids.size()) return a->kids.size() < b->kids.size() ? -1 : 1;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (int c = compare(a->kids[i], b->kids[i]); c != 0) return c;
  return 0;
}

bool equal(const FRef& a, const FRef& b) { return compare(a, b) == 0; }

namespace {

FRef nnf(const FRef& f, bool negated);

FRef nnf_children(const FRef& f, Formula::Kind kind, bool negated) {
  std::vector<FRef> kids;
  kids.reserve(f->kids.size());
  for (const FRef& k : f->kids) kids.push_back(nnf(k, negated));
  // Flatten same-kind children, sort, dedup.
  std::vector<FRef> flat;
  for (FRef& k : kids) {
    if (k->kind == kind)
      flat.insert(flat.end(), k->kids.begin(), k->kids.end());
    else
      flat.push_back(std::move(k));
  }
  std::sort(flat.begin(), flat.end(), [](const FRef& a, const FRef& b) { return compare(a, b) < 0; });
  flat.erase(std::unique(flat.begin(), flat.end(),
                         [](const FRef& a, const FRef& b) { return compare(a, b) == 0; }),
             flat.end());
  return kind == Formula::Kind::And ? f_and(std::move(flat)) : f_or(std::move(flat));
}

FRef nnf(const FRef& f, bool negated) {
  switch (f->kind) {
    case Formula::Kind::Atom: return negated ? f_not(f) : f;
    case Formula::Kind::True: return negated ? f_false() : f_true();
    case Formula::Kind::False: return negated ? f_true() : f_false();
    case Formula::Kind::Not: return nnf(f->kids[0], !negated);
    case Formula::Kind::And:
      return nnf_children(f, negated ? Formula::Kind::Or : Formula::Kind::And, negated);
    case Formula::Kind::Or:
      return nnf_children(f, negated ? Formula::Kind::And : Formula::Kind::Or, negated);
    case Formula::Kind::K: {
      FRef inner = f_k(nnf(f->kids[0], false));
      return negated ? f_not(inner) : inner;
    }
  }
  return f;
}

}  // namespace

FRef normalize(FRef f) { return nnf(f, false); }

namespace {
void collect_atoms(const FRef& f, std::set<int>& out, bool objective_only, bool under_k) {
  if (f->kind == Formula::Kind::Atom) {
    if (!objective_only || !under_k) out.insert(f->atom);
    return;
  }
  bool k = under_k || f->kind == Formula::Kind::K;
  for (const FRef& kid : f->kids) collect_atoms(kid, out, objective_only, k);
}
}  // namespace

std::set<int> atoms_of(const FRef& f) {
  std::set<int> out;
  collect_atoms(f, out, false, false);
  return out;
}

std::set<int> objective_atoms_of(const FRef& f) {
  std::set<int> out;
  collect_atoms(f, out, true, false);
  return out;
}

bool contains_k(const FRef& f) {
  if (f->kind == Formula::Kind::K) return true;
  for (const FRef& kid : f->kids)
    if (contains_k(kid)) return true;
  return false;
}

bool is_objective(const FRef& f) { return !contains_k(f); }

void modal_occurrences(const FRef& f, std::vector<std::pair<FRef, bool>>& out, bool positive) {
  switch (f->kind) {
    case Formula::Kind::K: out.emplace_back(f, positive); return;
    case Formula::Kind::Not: modal_occurrences(f->kids[0], out, !positive); return;
    default:
      for (const FRef& kid : f->kids) modal_occurrences(kid, out, positive);
  }
}

namespace {
// Precedence: or < and < unary.
int prec(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Or: return 1;
    case Formula::Kind::And: return 2;
    default: return 3;
  }
}

void print(const Alphabet& sigma, const FRef& f, int outer, std::string& out) {
  int self = prec(f->kind);
  bool paren = self < outer;
  if (paren) out += '(';
  switch (f->kind) {
    case Formula::Kind::Atom: out += sigma.name(f->atom); break;
    case Formula::Kind::True: out += "true"; break;
    case Formula::Kind::False: out += "false"; break;
    case Formula::Kind::Not:
      out += '~';
      print(sigma, f->kids[0], 3, out);
      break;
    case Formula::Kind::K:
      out += "K(";
      print(sigma, f->kids[0], 0, out);
      out += ')';
      break;
    case Formula::Kind::And:
      for (std::size_t i = 0; i < f->kids.size(); ++i) {
        if (i) out += " & ";
        print(sigma, f->kids[i], self + 1, out);
      }
      break;
    case Formula::Kind::Or:
      for (std::size_t i = 0; i < f->kids.size(); ++i) {
        if (i) out += " | ";
        print(sigma, f->kids[i], self + 1, out);
      }
      break;
  }
  if (paren) out += ')';
}
}  // namespace

std::string to_string(const Alphabet& sigma, const FRef& f) {
  std::string out;
  print(sigma, f, 0, out);
  return out;
}

std::string to_string(const ModalTheory& t) {
  std::string out;
  for (const FRef& f : t.formulas) {
    out += to_string(t.sigma, f);
    out += ".\n";
  }
  return out;
}

}  // namespace aft::ael
