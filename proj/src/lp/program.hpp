// Copyright 2026 the aftkit authors

#ifndef AFT_LP_PROGRAM_HPP
#define AFT_LP_PROGRAM_HPP

#include <string>
#include <vector>

#include "common/alphabet.hpp"

namespace aft::lp {

/// A body literal: an atom with a polarity, or a truth-constant placeholder
/// left behind by partial evaluation.
struct BodyLit {
  enum class Kind { Pos, Neg, True, False };
  Kind kind = Kind::Pos;
  int atom = -1;

  static BodyLit pos(int a) { return {Kind::Pos, a}; }
  static BodyLit neg(int a) { return {Kind::Neg, a}; }
  static BodyLit t() { return {Kind::True, -1}; }
  static BodyLit f() { return {Kind::False, -1}; }

  bool has_atom() const { return kind == Kind::Pos || kind == Kind::Neg; }
  bool operator==(const BodyLit&) const = default;
};

struct Clause {
  int head = -1;
  std::vector<BodyLit> body;
  bool operator==(const Clause&) const = default;
};

/// A ground propositional program over an ordered alphabet.
struct Program {
  Alphabet sigma;
  std::vector<Clause> clauses;
};

std::string to_string(const Program& p);
std::string clause_to_string(const Program& p, const Clause& c);

/// Ground prefix of the even/odd program: atoms even(k), odd(k) for k <= n.
Program even_prefix(int n);

}  // namespace aft::lp

#endif
