#include "hecke/expr.hpp"

#include <cctype>
#include <charconv>
#include <utility>
#include <vector>

#include "hecke/error.hpp"
#include "hecke/transform.hpp"

namespace hecke {

namespace {

template <typename Node>
ExprPtr make_expr(Node&& n) {
  return std::make_shared<const Expr>(Expr{std::forward<Node>(n)});
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  std::variant<ExprPtr, ParseError> run() {
    ExprPtr e = parse_expr();
    if (e) {
      skip_ws();
      if (pos_ == src_.size()) return e;
      miss(pos_, "end of input");
    }
    return make_error();
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t best_pos_ = 0;
  std::string best_expected_ = "an expression";

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool at(char c) const { return pos_ < src_.size() && src_[pos_] == c; }

  // Records a failed expectation. The furthest position wins; on ties the
  // most recent alternative's message survives, which favors the deepest
  // grammar rule that was still viable.
  void miss(std::size_t where, std::string expected) {
    if (where >= best_pos_) {
      best_pos_ = where;
      best_expected_ = std::move(expected);
    }
  }

  ParseError make_error() const {
    ParseError err;
    err.byte_offset = best_pos_;
    err.expected = best_expected_;
    if (best_pos_ >= src_.size()) {
      err.found = "end of input";
    } else {
      std::size_t end = best_pos_;
      const auto tokenish = [](char c) {
        return ident_char(c) || c == '-' || c == '/' || c == '*';
      };
      while (end < src_.size() && end - best_pos_ < 16 && tokenish(src_[end])) ++end;
      if (end == best_pos_) end = best_pos_ + 1;
      err.found = std::string(src_.substr(best_pos_, end - best_pos_));
    }
    return err;
  }

  bool lit(char c) {
    skip_ws();
    if (at(c)) {
      ++pos_;
      return true;
    }
    miss(pos_, std::string("'") + c + "'");
    return false;
  }

  // Keyword token; keywords ending in a letter must not be followed by an
  // identifier character.
  bool keyword(std::string_view word) {
    skip_ws();
    if (src_.substr(pos_, word.size()) != word) return false;
    const std::size_t end = pos_ + word.size();
    if (std::isalpha(static_cast<unsigned char>(word.back())) && end < src_.size() &&
        ident_char(src_[end])) {
      return false;
    }
    pos_ = end;
    return true;
  }

  std::optional<std::int64_t> parse_numeral(const char* what, std::size_t* start = nullptr) {
    skip_ws();
    const std::size_t s = pos_;
    if (start) *start = s;
    std::size_t e = s;
    while (e < src_.size() && std::isdigit(static_cast<unsigned char>(src_[e]))) ++e;
    if (e == s || (src_[s] == '0' && e - s > 1)) {
      miss(s, what);
      return std::nullopt;
    }
    std::int64_t v = 0;
    const auto res = std::from_chars(src_.data() + s, src_.data() + e, v);
    if (res.ec != std::errc() || res.ptr != src_.data() + e) {
      miss(s, "a smaller number");
      return std::nullopt;
    }
    pos_ = e;
    return v;
  }

  std::optional<GaussianRational> scalar_token(const char* what, std::size_t* start = nullptr) {
    skip_ws();
    if (start) *start = pos_;
    std::size_t p = pos_;
    std::optional<GaussianRational> v = parse_scalar_prefix(src_, p);
    if (!v) {
      miss(pos_, what);
      return std::nullopt;
    }
    pos_ = p;
    return v;
  }

  ExprPtr parse_expr() { return parse_sum(); }

  ExprPtr parse_sum() {
    ExprPtr lhs = parse_prod();
    if (!lhs) return nullptr;
    for (;;) {
      skip_ws();
      if (!at('+') && !at('-')) return lhs;
      const char op = src_[pos_++];
      ExprPtr rhs = parse_prod();
      if (!rhs) return nullptr;
      if (op == '-') rhs = make_expr(ScaleNode{GaussianRational(-1), std::move(rhs)});
      lhs = make_expr(SumNode{std::move(lhs), std::move(rhs)});
    }
  }

  ExprPtr parse_prod() {
    skip_ws();
    const std::size_t save = pos_;
    std::size_t p = pos_;
    if (std::optional<GaussianRational> c = parse_scalar_prefix(src_, p)) {
      pos_ = p;
      skip_ws();
      if (at('*')) {
        ++pos_;
        ExprPtr child = parse_prefix();
        if (!child) return nullptr;
        return make_expr(ScaleNode{std::move(*c), std::move(child)});
      }
      miss(pos_, "'*'");
      pos_ = save;
    }
    return parse_prefix();
  }

  ExprPtr parse_prefix() {
    skip_ws();
    const bool is_u = keyword("U");
    if (is_u || keyword("V")) {
      if (!lit('(')) return nullptr;
      std::size_t nat_start = 0;
      const std::optional<std::int64_t> n = parse_numeral("a positive operator index", &nat_start);
      if (!n) return nullptr;
      if (*n < 1) {
        miss(nat_start, "a positive operator index");
        return nullptr;
      }
      if (!lit(')')) return nullptr;
      ExprPtr child = parse_prefix();
      if (!child) return nullptr;
      if (is_u) return make_expr(UOpNode{*n, std::move(child)});
      return make_expr(VOpNode{*n, std::move(child)});
    }
    if (keyword("euler")) {
      std::int64_t count = 1;
      skip_ws();
      if (at('^')) {
        ++pos_;
        const std::optional<std::int64_t> n = parse_numeral("a repetition count");
        if (!n) return nullptr;
        count = *n;
      }
      ExprPtr child = parse_prefix();
      if (!child) return nullptr;
      return make_expr(EulerNode{count, std::move(child)});
    }
    return parse_atom();
  }

  ExprPtr parse_atom() {
    skip_ws();
    if (at('(')) {
      ++pos_;
      ExprPtr inner = parse_expr();
      if (!inner) return nullptr;
      if (!lit(')')) return nullptr;
      return inner;
    }
    if (keyword("pFq")) return parse_hyp_literal();
    if (src_.substr(pos_, 2) == "x^") {
      pos_ += 2;
      const std::optional<std::int64_t> j = parse_numeral("an exponent");
      if (!j) return nullptr;
      if (!lit('*')) return nullptr;
      ExprPtr child = parse_atom();
      if (!child) return nullptr;
      if (const auto* hyp = std::get_if<HypLitNode>(&child->node)) {
        HypLitNode folded = *hyp;
        folded.term.shift += *j;
        return make_expr(std::move(folded));
      }
      return make_expr(ShiftNode{*j, std::move(child)});
    }
    if (keyword("polylog")) {
      if (!lit('(')) return nullptr;
      skip_ws();
      const std::size_t s = pos_;
      bool neg = false;
      if (at('-')) {
        neg = true;
        ++pos_;
      }
      std::size_t num_start = 0;
      const std::optional<std::int64_t> v = parse_numeral("an integer", &num_start);
      if (!v) return nullptr;
      if (neg && (*v == 0 || num_start != s + 1)) {
        miss(s, "an integer");
        return nullptr;
      }
      if (!lit(')')) return nullptr;
      return make_expr(PolyLogNode{neg ? -*v : *v});
    }
    if (keyword("geom")) return make_expr(GeomNode{});
    if (keyword("hadamard")) {
      if (!lit('(')) return nullptr;
      ExprPtr lhs = parse_expr();
      if (!lhs) return nullptr;
      if (!lit(',')) return nullptr;
      ExprPtr rhs = parse_expr();
      if (!rhs) return nullptr;
      if (!lit(')')) return nullptr;
      return make_expr(HadamardNode{std::move(lhs), std::move(rhs)});
    }
    miss(pos_, "an atom");
    return nullptr;
  }

  // 'pFq' has been consumed. The lower list is the mathematical one; the k!
  // slot is appended after validating that no listed entry is a nonpositive
  // integer (errors point at the offending scalar).
  ExprPtr parse_hyp_literal() {
    if (!lit('(')) return nullptr;
    if (!lit('[')) return nullptr;
    std::vector<GaussianRational> upper;
    if (!scalar_list(upper, nullptr)) return nullptr;
    if (!lit(']')) return nullptr;
    if (!lit(',')) return nullptr;
    if (!lit('[')) return nullptr;
    std::vector<GaussianRational> lower;
    std::vector<std::size_t> offsets;
    if (!scalar_list(lower, &offsets)) return nullptr;
    if (!lit(']')) return nullptr;
    GaussianRational arg_scale(1);
    skip_ws();
    if (at(',')) {
      ++pos_;
      if (!keyword("scale")) {
        skip_ws();
        miss(pos_, "'scale'");
        return nullptr;
      }
      if (!lit('=')) return nullptr;
      std::size_t scale_start = 0;
      const std::optional<GaussianRational> s = scalar_token("a scalar", &scale_start);
      if (!s) return nullptr;
      if (s->is_zero()) {
        miss(scale_start, "a nonzero scale");
        return nullptr;
      }
      arg_scale = *s;
    }
    if (!lit(')')) return nullptr;
    for (std::size_t i = 0; i < lower.size(); ++i) {
      if (is_nonpositive_integer(lower[i])) {
        miss(offsets[i], "a lower parameter that is not a nonpositive integer");
        return nullptr;
      }
    }
    HypergeometricTerm t;
    t.upper = std::move(upper);
    t.lower_full = std::move(lower);
    t.lower_full.push_back(GaussianRational(1));
    t.arg_scale = std::move(arg_scale);
    return make_expr(HypLitNode{std::move(t)});
  }

  bool scalar_list(std::vector<GaussianRational>& out, std::vector<std::size_t>* offsets) {
    skip_ws();
    if (at(']')) return true;
    for (;;) {
      std::size_t start = 0;
      const std::optional<GaussianRational> v = scalar_token("a scalar", &start);
      if (!v) return false;
      out.push_back(*v);
      if (offsets) offsets->push_back(start);
      skip_ws();
      if (!at(',')) return true;
      ++pos_;
    }
  }
};

// Formatting levels mirror the grammar's precedence ladder; a node printed
// where a tighter level is required gets wrapped in parentheses.
enum Level : int { kSum = 0, kProd = 1, kPrefix = 2, kAtom = 3 };

int natural_level(const Expr& e) {
  return std::visit(
      [](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, SumNode>) {
          return kSum;
        } else if constexpr (std::is_same_v<T, ScaleNode>) {
          return kProd;
        } else if constexpr (std::is_same_v<T, UOpNode> || std::is_same_v<T, VOpNode> ||
                             std::is_same_v<T, EulerNode>) {
          return kPrefix;
        } else if constexpr (std::is_same_v<T, HypLitNode>) {
          return n.term.c0 == GaussianRational(1) ? kAtom : kProd;
        } else if constexpr (std::is_same_v<T, ShiftNode>) {
          // Folded literal rendering inherits the literal's scalar prefix.
          if (const auto* hyp = std::get_if<HypLitNode>(&n.child->node)) {
            return hyp->term.c0 == GaussianRational(1) ? kAtom : kProd;
          }
          return kAtom;
        } else {
          return kAtom;
        }
      },
      e.node);
}

std::string render(const Expr& e, int required);

std::string render_hyp(const HypergeometricTerm& t) {
  std::string out;
  if (!(t.c0 == GaussianRational(1))) out += format_scalar(t.c0) + "*";
  if (t.shift != 0) out += "x^" + std::to_string(t.shift) + "*";
  out += "pFq([";
  for (std::size_t i = 0; i < t.upper.size(); ++i) {
    if (i) out += ",";
    out += format_scalar(t.upper[i]);
  }
  out += "],[";
  std::size_t slot = t.lower_full.size();
  for (std::size_t i = t.lower_full.size(); i-- > 0;) {
    if (t.lower_full[i] == GaussianRational(1)) {
      slot = i;
      break;
    }
  }
  bool first = true;
  for (std::size_t i = 0; i < t.lower_full.size(); ++i) {
    if (i == slot) continue;
    if (!first) out += ",";
    first = false;
    out += format_scalar(t.lower_full[i]);
  }
  out += "]";
  if (!(t.arg_scale == GaussianRational(1))) out += ",scale=" + format_scalar(t.arg_scale);
  out += ")";
  return out;
}

std::string render_body(const Expr& e) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, HypLitNode>) {
          return render_hyp(n.term);
        } else if constexpr (std::is_same_v<T, PolyLogNode>) {
          return "polylog(" + std::to_string(n.i) + ")";
        } else if constexpr (std::is_same_v<T, GeomNode>) {
          return "geom";
        } else if constexpr (std::is_same_v<T, UOpNode>) {
          return "U(" + std::to_string(n.n) + ") " + render(*n.child, kPrefix);
        } else if constexpr (std::is_same_v<T, VOpNode>) {
          return "V(" + std::to_string(n.n) + ") " + render(*n.child, kPrefix);
        } else if constexpr (std::is_same_v<T, EulerNode>) {
          std::string head =
              n.count == 1 ? "euler " : "euler^" + std::to_string(n.count) + " ";
          return head + render(*n.child, kPrefix);
        } else if constexpr (std::is_same_v<T, ShiftNode>) {
          if (const auto* hyp = std::get_if<HypLitNode>(&n.child->node)) {
            HypergeometricTerm folded = hyp->term;
            folded.shift += n.j;
            return render_hyp(folded);
          }
          return "x^" + std::to_string(n.j) + "*" + render(*n.child, kAtom);
        } else if constexpr (std::is_same_v<T, HadamardNode>) {
          return "hadamard(" + render(*n.lhs, kSum) + ", " + render(*n.rhs, kSum) + ")";
        } else if constexpr (std::is_same_v<T, SumNode>) {
          if (const auto* sc = std::get_if<ScaleNode>(&n.rhs->node)) {
            if (sc->c == GaussianRational(-1)) {
              return render(*n.lhs, kSum) + " - " + render(*sc->child, kProd);
            }
          }
          return render(*n.lhs, kSum) + " + " + render(*n.rhs, kProd);
        } else {
          static_assert(std::is_same_v<T, ScaleNode>);
          return format_scalar(n.c) + "*" + render(*n.child, kPrefix);
        }
      },
      e.node);
}

std::string render(const Expr& e, int required) {
  if (natural_level(e) < required) return "(" + render_body(e) + ")";
  return render_body(e);
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  const std::int64_t q = a / b;
  return q + ((a % b != 0 && (a > 0) == (b > 0)) ? 1 : 0);
}

}  // namespace

std::string ParseError::render() const {
  return "parse error at byte " + std::to_string(byte_offset) + ": expected " + expected +
         ", found " + found;
}

std::variant<ExprPtr, ParseError> parse(std::string_view text) { return Parser(text).run(); }

std::string format(const Expr& e) { return render_body(e); }

bool equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&b](const auto& na) -> bool {
        using T = std::decay_t<decltype(na)>;
        const auto& nb = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, HypLitNode>) {
          return na.term == nb.term;
        } else if constexpr (std::is_same_v<T, PolyLogNode>) {
          return na.i == nb.i;
        } else if constexpr (std::is_same_v<T, GeomNode>) {
          return true;
        } else if constexpr (std::is_same_v<T, UOpNode> || std::is_same_v<T, VOpNode>) {
          return na.n == nb.n && equal(*na.child, *nb.child);
        } else if constexpr (std::is_same_v<T, EulerNode>) {
          return na.count == nb.count && equal(*na.child, *nb.child);
        } else if constexpr (std::is_same_v<T, ShiftNode>) {
          return na.j == nb.j && equal(*na.child, *nb.child);
        } else if constexpr (std::is_same_v<T, HadamardNode> || std::is_same_v<T, SumNode>) {
          return equal(*na.lhs, *nb.lhs) && equal(*na.rhs, *nb.rhs);
        } else {
          static_assert(std::is_same_v<T, ScaleNode>);
          return na.c == nb.c && equal(*na.child, *nb.child);
        }
      },
      a.node);
}

PowerSeries eval_series(const Expr& e, std::int64_t order) {
  if (order < 1) fail(errc::insufficient_order, "evaluation order must be at least 1");
  return std::visit(
      [order](const auto& n) -> PowerSeries {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, HypLitNode>) {
          return to_series(n.term, std::max<std::int64_t>(order - n.term.shift, 0));
        } else if constexpr (std::is_same_v<T, PolyLogNode>) {
          return polylog_series(n.i, order);
        } else if constexpr (std::is_same_v<T, GeomNode>) {
          return geometric_series(order);
        } else if constexpr (std::is_same_v<T, UOpNode>) {
          return u_apply(n.n, eval_series(*n.child, n.n * order));
        } else if constexpr (std::is_same_v<T, VOpNode>) {
          return v_apply(n.n, eval_series(*n.child, ceil_div(order - 1, n.n) + 1));
        } else if constexpr (std::is_same_v<T, EulerNode>) {
          PowerSeries s = eval_series(*n.child, order);
          for (std::int64_t i = 0; i < n.count; ++i) s = euler_apply(s);
          return s;
        } else if constexpr (std::is_same_v<T, ShiftNode>) {
          PowerSeries s = eval_series(*n.child, std::max<std::int64_t>(order - n.j, 1));
          s.shift += n.j;
          return s;
        } else if constexpr (std::is_same_v<T, HadamardNode>) {
          return hadamard(eval_series(*n.lhs, order), eval_series(*n.rhs, order));
        } else if constexpr (std::is_same_v<T, SumNode>) {
          return add(eval_series(*n.lhs, order), eval_series(*n.rhs, order));
        } else {
          static_assert(std::is_same_v<T, ScaleNode>);
          return scale(n.c, eval_series(*n.child, order));
        }
      },
      e.node);
}

std::optional<HypergeometricTerm> eval_symbolic(const Expr& e) {
  return std::visit(
      [](const auto& n) -> std::optional<HypergeometricTerm> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, HypLitNode>) {
          return n.term;
        } else if constexpr (std::is_same_v<T, PolyLogNode>) {
          return polylog_term(n.i);
        } else if constexpr (std::is_same_v<T, GeomNode>) {
          return geometric_term();
        } else if constexpr (std::is_same_v<T, ScaleNode>) {
          std::optional<HypergeometricTerm> t = eval_symbolic(*n.child);
          if (t) t->c0 *= n.c;
          return t;
        } else if constexpr (std::is_same_v<T, ShiftNode>) {
          std::optional<HypergeometricTerm> t = eval_symbolic(*n.child);
          if (t) t->shift += n.j;
          return t;
        } else if constexpr (std::is_same_v<T, UOpNode>) {
          std::optional<HypergeometricTerm> t = eval_symbolic(*n.child);
          if (!t) return std::nullopt;
          return normalize(u_closed_form(n.n, *t).output);
        } else {
          return std::nullopt;
        }
      },
      e.node);
}

}  // namespace hecke
