// Copyright 2026 the aftkit authors

#include "lp/program.hpp"

namespace aft::lp {

std::string clause_to_string(const Program& p, const Clause& c) {
  std::string out = p.sigma.name(c.head);
  if (c.body.empty()) return out + ".";
  out += " :- ";
  for (std::size_t i = 0; i < c.body.size(); ++i) {
    if (i) out += ", ";
    const BodyLit& l = c.body[i];
    switch (l.kind) {
      case BodyLit::Kind::Pos: out += p.sigma.name(l.atom); break;
      case BodyLit::Kind::Neg: out += "not " + p.sigma.name(l.atom); break;
      case BodyLit::Kind::True: out += "true"; break;
      case BodyLit::Kind::False: out += "false"; break;
    }
  }
  return out + ".";
}

std::string to_string(const Program& p) {
  std::string out;
  for (const Clause& c : p.clauses) {
    out += clause_to_string(p, c);
    out += '\n';
  }
  return out;
}

Program even_prefix(int n) {
  Program p;
  std::vector<int> even(static_cast<std::size_t>(n) + 1), odd(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    even[static_cast<std::size_t>(k)] = p.sigma.intern("even(" + std::to_string(k) + ")");
    odd[static_cast<std::size_t>(k)] = p.sigma.intern("odd(" + std::to_string(k) + ")");
  }
  p.clauses.push_back(Clause{even[0], {}});
  for (int k = 0; k < n; ++k) {
    p.clauses.push_back(
        Clause{odd[static_cast<std::size_t>(k) + 1], {BodyLit::pos(even[static_cast<std::size_t>(k)])}});
    p.clauses.push_back(
        Clause{even[static_cast<std::size_t>(k) + 1], {BodyLit::pos(odd[static_cast<std::size_t>(k)])}});
  }
  return p;
}

}  // namespace aft::lp
