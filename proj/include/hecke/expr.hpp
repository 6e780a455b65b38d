#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "hecke/hypergeometric.hpp"
#include "hecke/power_series.hpp"
#include "hecke/scalar.hpp"

namespace hecke {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// A pFq literal, possibly with an x^j prefix folded into the term's shift.
// Parsed literals always carry c0 = 1 (scalar multipliers become Scale
// nodes).
struct HypLitNode {
  HypergeometricTerm term;
};

struct PolyLogNode {
  std::int64_t i = 0;
};

struct GeomNode {};

struct UOpNode {
  std::int64_t n = 1;
  ExprPtr child;
};

struct VOpNode {
  std::int64_t n = 1;
  ExprPtr child;
};

struct EulerNode {
  std::int64_t count = 1;
  ExprPtr child;
};

// x^j applied to a non-literal atom. The parser folds x^j directly into
// HypLit shifts, so in parsed trees the child is never a HypLitNode; the
// formatter performs the same fold when given one programmatically.
struct ShiftNode {
  std::int64_t j = 0;
  ExprPtr child;
};

struct HadamardNode {
  ExprPtr lhs;
  ExprPtr rhs;
};

struct SumNode {
  ExprPtr lhs;
  ExprPtr rhs;
};

struct ScaleNode {
  GaussianRational c;
  ExprPtr child;
};

struct Expr {
  std::variant<HypLitNode, PolyLogNode, GeomNode, UOpNode, VOpNode, EulerNode, ShiftNode,
               HadamardNode, SumNode, ScaleNode>
      node;
};

struct ParseError {
  std::size_t byte_offset = 0;
  std::string expected;
  std::string found;

  std::string render() const;
};

// Recursive-descent parser for the expression grammar:
//
//   expr     := sum ;
//   sum      := prod (('+'|'-') prod)* ;
//   prod     := scalar '*' prefix | prefix ;
//   prefix   := 'U' '(' nat ')' prefix | 'V' '(' nat ')' prefix
//             | 'euler' ('^' nat)? prefix | atom ;
//   atom     := 'pFq' '(' '[' scalars? ']' ',' '[' scalars? ']'
//                     (',' 'scale' '=' scalar)? ')'
//             | 'x^' nat '*' atom | 'polylog' '(' int ')' | 'geom'
//             | 'hadamard' '(' expr ',' expr ')' | '(' expr ')' ;
//   scalars  := scalar (',' scalar)* ;
//
// Whitespace is insignificant between tokens. The pFq lower list is the
// mathematical one; the k! slot entry 1 is appended automatically. On
// failure the error points at the furthest byte the grammar could not
// extend past.
std::variant<ExprPtr, ParseError> parse(std::string_view text);

// Canonical rendering; parse(format(e)) yields a tree equal(,) to e for any
// parser-produced e.
std::string format(const Expr& e);

bool equal(const Expr& a, const Expr& b);

// Exact truncated evaluation: the result is known to at least `order`
// exponents, with inner truncation depths widened as needed (U(n) requests
// n-fold deeper expansion from its child). order >= 1.
PowerSeries eval_series(const Expr& e, std::int64_t order);

// Closed-form evaluation: succeeds for Scale/Shift/UOp chains over a
// HypLit/PolyLog/Geom leaf (UOp applies the closed-form transform and
// normalizes). Sum, Hadamard, VOp, and Euler leave the hypergeometric class,
// so expressions containing them yield nullopt.
std::optional<HypergeometricTerm> eval_symbolic(const Expr& e);

}  // namespace hecke
