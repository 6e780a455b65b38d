#include "hecke/json_out.hpp"

namespace hecke {

using nlohmann::json;

void to_json(json& j, const GaussianRational& x) { j = format_scalar(x); }

void to_json(json& j, const PowerSeries& s) {
  json coeffs = json::array();
  for (const GaussianRational& c : s.coeffs) {
    coeffs.push_back(json::array({format_rational(c.re), format_rational(c.im)}));
  }
  j = json{{"shift", s.shift}, {"known_to", s.known_to()}, {"coeffs", std::move(coeffs)}};
}

void to_json(json& j, const HypergeometricTerm& t) {
  j = json{{"c0", format_scalar(t.c0)},
           {"shift", t.shift},
           {"upper", t.upper},
           {"lower", t.lower_full},
           {"arg_scale", format_scalar(t.arg_scale)}};
}

void to_json(json& j, const TransformReport& r) {
  j = json{{"n", r.n},
           {"case_divides", r.case_divides},
           {"r", r.r},
           {"input", r.input},
           {"output", r.output}};
}

void to_json(json& j, const GammaCounts& g) {
  j = json{{"gamma_a", g.gamma_a}, {"gamma_b", g.gamma_b}};
}

void to_json(json& j, const EigenReport& r) {
  j = json{{"is_eigen", r.is_eigen}, {"checked_to", r.checked_to}};
  if (r.eigenvalue) j["eigenvalue"] = format_scalar(*r.eigenvalue);
  if (r.gamma) {
    j["gamma_a"] = r.gamma->gamma_a;
    j["gamma_b"] = r.gamma->gamma_b;
  }
  if (r.witness) j["witness"] = *r.witness;
}

void to_json(json& j, const EigenClass& c) {
  j = json{{"kind", eigen_kind_name(c.kind)}, {"a", c.a}};
}

void to_json(json& j, const CmReport& r) {
  j = json{{"is_cm", r.is_cm}};
  if (r.exponent) j["exponent"] = *r.exponent;
  if (r.witness) j["witness"] = json::array({r.witness->first, r.witness->second});
}

void to_json(json& j, const Expr& e) {
  std::visit(
      [&j](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, HypLitNode>) {
          j = json{{"node", "HypLit"},
                   {"c0", format_scalar(n.term.c0)},
                   {"j", n.term.shift},
                   {"upper", n.term.upper},
                   {"lower", n.term.lower_full},
                   {"arg_scale", format_scalar(n.term.arg_scale)}};
        } else if constexpr (std::is_same_v<T, PolyLogNode>) {
          j = json{{"node", "PolyLog"}, {"i", n.i}};
        } else if constexpr (std::is_same_v<T, GeomNode>) {
          j = json{{"node", "Geom"}};
        } else if constexpr (std::is_same_v<T, UOpNode>) {
          j = json{{"node", "UOp"}, {"n", n.n}, {"child", *n.child}};
        } else if constexpr (std::is_same_v<T, VOpNode>) {
          j = json{{"node", "VOp"}, {"n", n.n}, {"child", *n.child}};
        } else if constexpr (std::is_same_v<T, EulerNode>) {
          j = json{{"node", "Euler"}, {"count", n.count}, {"child", *n.child}};
        } else if constexpr (std::is_same_v<T, ShiftNode>) {
          j = json{{"node", "Shift"}, {"j", n.j}, {"child", *n.child}};
        } else if constexpr (std::is_same_v<T, HadamardNode>) {
          j = json{{"node", "Hadamard"}, {"lhs", *n.lhs}, {"rhs", *n.rhs}};
        } else if constexpr (std::is_same_v<T, SumNode>) {
          j = json{{"node", "Sum"}, {"lhs", *n.lhs}, {"rhs", *n.rhs}};
        } else {
          static_assert(std::is_same_v<T, ScaleNode>);
          j = json{{"node", "Scale"}, {"c", format_scalar(n.c)}, {"child", *n.child}};
        }
      },
      e.node);
}

void to_json(json& j, const TrialFailure& f) {
  j = json{{"trial", f.trial}, {"description", f.description}, {"reproduction", f.reproduction}};
}

void to_json(json& j, const VerificationRun& run) {
  j = json{{"suite", run.suite}, {"seed", run.seed},         {"trials", run.trials},
           {"order", run.order}, {"failures", run.failures}, {"ok", run.ok}};
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace hecke
