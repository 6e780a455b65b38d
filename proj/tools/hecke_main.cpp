#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hecke/error.hpp"
#include "hecke/expr.hpp"
#include "hecke/hypergeometric.hpp"
#include "hecke/json_out.hpp"
#include "hecke/power_series.hpp"
#include "hecke/spectral.hpp"
#include "hecke/transform.hpp"
#include "hecke/verify.hpp"

using namespace hecke;
using nlohmann::json;

namespace {

// Exit codes: 0 success, 1 verification failure or violated internal
// invariant, 2 usage / parse / input errors, 3 transformation impossible for
// the given expression.

std::optional<ExprPtr> parse_or_report(const std::string& text) {
  auto result = parse(text);
  if (const auto* err = std::get_if<ParseError>(&result)) {
    std::cerr << "error: " << err->render() << "\n";
    return std::nullopt;
  }
  return std::get<ExprPtr>(result);
}

std::string term_text(const HypergeometricTerm& t) { return format(Expr{HypLitNode{t}}); }

void print_series_table(const PowerSeries& s) {
  std::cout << "# shift=" << s.shift << " known_to=" << s.known_to() << "\n";
  for (std::int64_t e = s.shift; e < s.known_to(); ++e) {
    std::cout << "x^" << e << "\t" << format_scalar(s.coeff(e)) << "\n";
  }
}

void print_eigen_table(const json& j) {
  std::cout << "is_eigen: " << (j.at("is_eigen").get<bool>() ? "true" : "false") << "\n";
  if (j.contains("eigenvalue")) {
    std::cout << "eigenvalue: " << j.at("eigenvalue").get<std::string>() << "\n";
  }
  if (j.contains("witness")) std::cout << "witness: " << j.at("witness") << "\n";
  std::cout << "checked_to: " << j.at("checked_to") << "\n";
  if (j.contains("gamma_a")) {
    std::cout << "gamma_a: " << j.at("gamma_a") << "\ngamma_b: " << j.at("gamma_b") << "\n";
  }
  if (j.contains("class")) {
    std::cout << "class: " << j.at("class").at("kind").get<std::string>() << "("
              << j.at("class").at("a") << ")\n";
  }
}

std::optional<std::vector<GaussianRational>> parse_list_text(const std::string& text,
                                                             const char* which) {
  std::vector<GaussianRational> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string token =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    const std::optional<GaussianRational> v = parse_scalar(token);
    if (!v) {
      std::cerr << "error: invalid scalar '" << token << "' in the " << which
                << " parameter list\n";
      return std::nullopt;
    }
    out.push_back(*v);
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

int do_expand(const std::string& text, std::int64_t order, bool as_json) {
  const auto e = parse_or_report(text);
  if (!e) return 2;
  const PowerSeries s = truncated(eval_series(**e, order), order);
  if (as_json) {
    std::cout << dump_json(json(s));
  } else {
    print_series_table(s);
  }
  return 0;
}

int do_transform(const std::string& text, std::int64_t n, const std::string& mode,
                 std::int64_t order, bool as_json) {
  const auto e = parse_or_report(text);
  if (!e) return 2;
  std::optional<TransformReport> rep;
  std::optional<PowerSeries> termwise;
  if (mode != "termwise") {
    const std::optional<HypergeometricTerm> sym = eval_symbolic(**e);
    if (!sym) {
      std::cerr << "error: the expression does not reduce to a single hypergeometric term; "
                   "use --mode termwise\n";
      return 3;
    }
    rep = u_closed_form(n, *sym);
  }
  if (mode != "closed") {
    termwise = truncated(u_apply(n, eval_series(**e, n * order)), order);
  }

  int rc = 0;
  json j;
  if (rep) j["report"] = *rep;
  if (termwise) j["termwise"] = *termwise;
  if (rep && termwise) {
    const PowerSeries closed = to_series(
        rep->output, std::max<std::int64_t>(order - rep->output.shift, std::int64_t{0}));
    const std::int64_t common = std::min(closed.known_to(), termwise->known_to());
    const bool agrees = !first_mismatch(closed, *termwise, common).has_value();
    j["agrees"] = agrees;
    if (!agrees) rc = 1;
  }

  if (as_json) {
    std::cout << dump_json(j);
  } else {
    if (rep) {
      std::cout << "n: " << rep->n << "\n"
                << "case_divides: " << (rep->case_divides ? "true" : "false") << "\n"
                << "r: " << rep->r << "\n"
                << "input: " << term_text(rep->input) << "\n"
                << "output: " << term_text(rep->output) << "\n";
    }
    if (termwise) print_series_table(*termwise);
    if (j.contains("agrees")) {
      std::cout << "agrees: " << (j.at("agrees").get<bool>() ? "true" : "false") << "\n";
    }
  }
  return rc;
}

int do_eigen(const std::string& text, std::int64_t n, std::int64_t order, bool as_json) {
  const auto e = parse_or_report(text);
  if (!e) return 2;
  const PowerSeries f = eval_series(**e, n * order);
  const EigenReport numeric = eigen_check_numeric(f, n);
  json j = numeric;
  if (const std::optional<HypergeometricTerm> sym = eval_symbolic(**e)) {
    const auto [cls, rep] = eigen_classify(*sym, n);
    j["class"] = cls;
    if (rep.gamma) {
      j["gamma_a"] = rep.gamma->gamma_a;
      j["gamma_b"] = rep.gamma->gamma_b;
    }
  }
  if (as_json) {
    std::cout << dump_json(j);
  } else {
    print_eigen_table(j);
  }
  return 0;
}

int do_inner(const std::string& lhs, const std::string& rhs, std::int64_t order, bool as_json) {
  const auto le = parse_or_report(lhs);
  if (!le) return 2;
  const auto re = parse_or_report(rhs);
  if (!re) return 2;
  const std::vector<GaussianRational> pairing =
      inner_product(eval_series(**le, order), eval_series(**re, order));
  if (as_json) {
    std::cout << dump_json(json{{"coeffs", pairing}});
  } else {
    std::cout << "# pairing coefficients in R^2\n";
    for (std::size_t k = 0; k < pairing.size(); ++k) {
      std::cout << k << "\t" << format_scalar(pairing[k]) << "\n";
    }
  }
  return 0;
}

int do_classify_cm(const std::string& a_text, const std::string& b_text, std::int64_t bound,
                   bool as_json) {
  const auto upper = parse_list_text(a_text, "upper");
  if (!upper) return 2;
  auto lower = parse_list_text(b_text, "lower");
  if (!lower) return 2;
  lower->push_back(GaussianRational(1));  // the factorial slot
  const CmReport cm = multiplicative_classify(*upper, *lower, bound);
  json j = cm;
  j["bound"] = bound;
  if (as_json) {
    std::cout << dump_json(j);
  } else {
    std::cout << "is_cm: " << (cm.is_cm ? "true" : "false") << "\n";
    if (cm.exponent) std::cout << "exponent: " << *cm.exponent << "\n";
    if (cm.witness) {
      std::cout << "witness: (" << cm.witness->first << ", " << cm.witness->second << ")\n";
    }
    std::cout << "bound: " << bound << "\n";
  }
  return 0;
}

int do_verify(const std::string& suite, const VerifyOptions& opts, bool as_json) {
  const std::vector<VerificationRun> runs = run_verify(suite, opts);
  bool ok = true;
  for (const VerificationRun& run : runs) ok = ok && run.ok;
  if (as_json) {
    std::cout << dump_json(runs.size() == 1 ? json(runs.front()) : json(runs));
  } else {
    for (const VerificationRun& run : runs) {
      std::cout << "suite " << run.suite << ": " << (run.ok ? "ok" : "FAILED")
                << " (seed=" << run.seed << ", trials=" << run.trials
                << ", order=" << run.order << ", failures=" << run.failures.size() << ")\n";
      for (const TrialFailure& f : run.failures) {
        std::cout << "  trial " << f.trial << ": " << f.description << "\n"
                  << "    reproduce: " << f.reproduction << "\n";
      }
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hecke-operator engine for formal power series"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 success, 1 verification failure, 2 usage or parse error,\n"
      "3 transformation impossible for the given expression.\n"
      "Expressions starting with '-' need a '--' separator before them.");

  std::string format_name = "json";
  std::int64_t order = 64;
  std::uint64_t seed = 0;
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--order", order, "truncation order for series evaluation (default 64)")
      ->check(CLI::Range(std::int64_t{0}, std::int64_t{1} << 40));
  app.add_option("--seed", seed, "seed for randomized verification (default 0)");

  std::string expr_text;
  std::string lhs_text;
  std::string rhs_text;
  std::string mode = "both";
  std::string suite = "all";
  std::string a_text;
  std::string b_text;
  std::int64_t op_n = 2;
  std::int64_t bound = 24;
  std::int64_t trials = -1;

  CLI::App* expand = app.add_subcommand("expand", "evaluate an expression to a power series");
  expand->fallthrough();
  expand->add_option("expr", expr_text, "expression to evaluate")->required();

  CLI::App* transform =
      app.add_subcommand("transform", "apply U(n) in closed form and/or termwise");
  transform->fallthrough();
  transform->add_option("expr", expr_text, "expression to transform")->required();
  transform->add_option("--n", op_n, "operator index (>= 1)")
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 20))
      ->required();
  transform->add_option("--mode", mode, "closed, termwise or both (default both)")
      ->check(CLI::IsMember({"closed", "termwise", "both"}));

  CLI::App* eigen = app.add_subcommand("eigen", "check eigenfunction status under U(n)");
  eigen->fallthrough();
  eigen->add_option("expr", expr_text, "expression to check")->required();
  eigen->add_option("--n", op_n, "operator index (>= 2)")
      ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 20))
      ->required();

  CLI::App* inner = app.add_subcommand("inner", "pairing coefficients of two series");
  inner->fallthrough();
  inner->add_option("--lhs", lhs_text, "left expression")->required();
  inner->add_option("--rhs", rhs_text, "right expression")->required();

  CLI::App* classify =
      app.add_subcommand("classify-cm", "bounded multiplicativity of a coefficient ratio");
  classify->fallthrough();
  classify->add_option("--a", a_text, "comma-separated upper parameters (may be empty)");
  classify->add_option("--b", b_text,
                       "comma-separated lower parameters, factorial slot implied");
  classify->add_option("--bound", bound, "multiplicativity bound (default 24)")
      ->check(CLI::Range(std::int64_t{4}, std::int64_t{1} << 20));

  CLI::App* verify = app.add_subcommand("verify", "run randomized property suites");
  verify->fallthrough();
  verify->add_option("--suite", suite,
                     "algebra, pochhammer, transform, adjoint, eigen, spectrum, "
                     "multiplicative or all (default all)");
  verify->add_option("--trials", trials, "trial count override")
      ->check(CLI::Range(std::int64_t{0}, std::int64_t{1} << 32));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const bool as_json = format_name == "json";
  const int engine_error_exit = transform->parsed() ? 3 : 2;
  try {
    if (expand->parsed()) return do_expand(expr_text, order, as_json);
    if (transform->parsed()) return do_transform(expr_text, op_n, mode, order, as_json);
    if (eigen->parsed()) return do_eigen(expr_text, op_n, order, as_json);
    if (inner->parsed()) return do_inner(lhs_text, rhs_text, order, as_json);
    if (classify->parsed()) return do_classify_cm(a_text, b_text, bound, as_json);
    if (verify->parsed()) {
      VerifyOptions opts;
      if (trials >= 0) opts.trials = static_cast<std::uint64_t>(trials);
      if (app.count("--order") > 0) opts.order = order;
      opts.seed = seed;
      return do_verify(suite, opts, as_json);
    }
  } catch (const EngineError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return engine_error_exit;
  } catch (const std::logic_error& e) {
    std::cerr << "error: internal invariant violated: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
