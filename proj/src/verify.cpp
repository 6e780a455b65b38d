#include "hecke/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hecke/error.hpp"
#include "hecke/hypergeometric.hpp"
#include "hecke/power_series.hpp"
#include "hecke/randgen.hpp"
#include "hecke/spectral.hpp"
#include "hecke/transform.hpp"

namespace hecke {

namespace {

// Thrown by a trial body when a property check fails; converted by the
// runner into a TrialFailure entry. Anything else a trial throws is recorded
// as an unexpected exception, so triple-agreement aborts (std::logic_error)
// surface loudly instead of vanishing.
struct CheckFailed {
  std::string description;
};

void require(bool ok, const std::string& description) {
  if (!ok) throw CheckFailed{description};
}

std::string repro_command(const std::string& suite, std::uint64_t seed, std::uint64_t trial,
                          std::int64_t order) {
  return "hecke verify --suite " + suite + " --seed " + std::to_string(seed) + " --trials " +
         std::to_string(trial + 1) + " --order " + std::to_string(order);
}

PowerSeries random_series(SplitMix64& rng, std::int64_t order, std::int64_t max_shift = 3) {
  PowerSeries f;
  f.shift = rng.range(0, max_shift);
  const std::int64_t len = std::max<std::int64_t>(order - f.shift, 1);
  f.coeffs.reserve(static_cast<std::size_t>(len));
  for (std::int64_t i = 0; i < len; ++i) {
    f.coeffs.push_back(rng.chance(1, 5) ? GaussianRational() : rng.scalar(5));
  }
  return f;
}

GaussianRational lower_safe(SplitMix64& rng, std::int64_t mag) {
  GaussianRational v = rng.scalar(mag);
  while (is_nonpositive_integer(v)) v += GaussianRational(make_rational(1, 2));
  return v;
}

GaussianRational random_delta(SplitMix64& rng) {
  static const long nums[] = {1, 1, 2, 3};
  static const long dens[] = {2, 3, 5, 7};
  const std::int64_t pick = rng.range(0, 3);
  return GaussianRational(make_rational(nums[pick], dens[pick]));
}

// ---------------------------------------------------------------------------
// algebra: composition laws of the coefficient-selection and substitution
// operators, plus the divisibility projection.

void algebra_trial(std::uint64_t, SplitMix64& rng, std::int64_t order) {
  const PowerSeries f = random_series(rng, order);
  const std::int64_t n = rng.range(1, 12);
  const std::int64_t m = rng.range(1, 12);
  const std::int64_t k = rng.range(1, 12);
  const std::int64_t j = rng.range(1, 12);
  const auto tag = [&](const char* law) {
    std::ostringstream os;
    os << law << " with n=" << n << ", m=" << m << ", k=" << k << ", j=" << j
       << ", input shift " << f.shift;
    return os.str();
  };

  require(u_apply(n, u_apply(m, f)) == u_apply(n * m, f),
          tag("U(n) after U(m) differs from U(n*m)"));
  require(v_apply(n, v_apply(m, f)) == v_apply(n * m, f),
          tag("V(n) after V(m) differs from V(n*m)"));
  require(u_apply(n, v_apply(n, f)) == f, tag("U(n) after V(n) is not the identity"));

  const PowerSeries lhs = u_apply(n, v_apply(m, f));
  const std::int64_t g = std::gcd(n, m);
  const PowerSeries rhs = v_apply(m / g, u_apply(n / g, f));
  const std::int64_t common = std::min(lhs.known_to(), rhs.known_to());
  require(common >= 1 && !first_mismatch(lhs, rhs, common).has_value(),
          tag("U(n) after V(m) differs from V(m/g) after U(n/g)"));

  const PowerSeries w = v_apply(m, f);
  require(u_apply(k * j, w) == u_apply(k, u_apply(j, w)),
          tag("U(k*j) on a substituted series differs from U(k) after U(j)"));

  const PowerSeries proj = vnun_projection(n, f);
  require(proj == vnun_projection(n, proj), tag("projection is not idempotent"));
  const PowerSeries vu = v_apply(n, u_apply(n, f));
  const std::int64_t common_p = std::min(proj.known_to(), vu.known_to());
  require(!first_mismatch(proj, vu, common_p).has_value(),
          tag("V(n) after U(n) differs from the mod-n projection"));
  for (std::int64_t e = 0; e < proj.known_to(); ++e) {
    require(proj.coeff(e) == (e % n == 0 ? f.coeff(e) : GaussianRational()),
            tag("projection kept or dropped the wrong coefficient"));
  }
}

// ---------------------------------------------------------------------------
// pochhammer: splitting and offset identities for rising factorials.

void pochhammer_trial(std::uint64_t, SplitMix64& rng, std::int64_t) {
  const GaussianRational a = rng.scalar(7);
  const std::int64_t n = rng.range(1, 6);
  const std::int64_t k = rng.range(0, 12);
  std::int64_t j = rng.range(1, 6 * n);
  if (n > 1) {
    while (j % n == 0) ++j;  // the offset identity needs an index n does not divide
  }
  const auto tag = [&](const char* what) {
    std::ostringstream os;
    os << what << " at a=" << format_scalar(a) << ", n=" << n << ", k=" << k << ", j=" << j;
    return os.str();
  };

  require(pochhammer_split(a, n, k) == pochhammer(a, n * k),
          tag("length-n*k splitting identity failed"));
  if (n > 1) {
    const std::int64_t N = n * (k + 1) - (j % n);
    require(pochhammer_offset(a, n, k, j) == pochhammer(a, N),
            tag("offset splitting identity failed"));
  }
  require(pochhammer(a, k + 1) == pochhammer(a, k) * (a + GaussianRational(k)),
          tag("rising-factorial recurrence failed"));
}

// ---------------------------------------------------------------------------
// transform: closed-form images against the coefficient filter.

void transform_trial(std::uint64_t, SplitMix64& rng, std::int64_t order) {
  std::vector<GaussianRational> upper;
  std::vector<GaussianRational> lower;
  for (std::int64_t i = rng.range(0, 3); i > 0; --i) upper.push_back(rng.scalar(6));
  for (std::int64_t i = rng.range(0, 3); i > 0; --i) lower.push_back(lower_safe(rng, 6));
  const HypergeometricTerm t = make_term(rng.scalar(5), rng.range(0, 6), upper, lower,
                                         rng.scalar(4));
  const std::int64_t n = rng.range(1, 5);
  const auto tag = [&](const char* what) {
    std::ostringstream os;
    os << what << " for n=" << n << ", shift=" << t.shift << ", p=" << t.upper.size()
       << ", q_full=" << t.lower_full.size();
    return os.str();
  };

  const TransformReport rep = u_closed_form(n, t);
  require(rep.n == n && rep.case_divides == (t.shift % n == 0), tag("case flag wrong"));
  require(rep.r == (t.shift % n == 0 ? 0 : n - 1 - t.shift % n), tag("offset index wrong"));
  require(rep.output.shift == (t.shift + n - 1) / n, tag("image shift wrong"));
  require(rep.output.upper.size() == t.upper.size() * static_cast<std::size_t>(n),
          tag("image upper list has the wrong size"));
  require(rep.output.lower_full.size() == t.lower_full.size() * static_cast<std::size_t>(n),
          tag("image lower list has the wrong size"));
  const std::int64_t p = static_cast<std::int64_t>(t.upper.size());
  const std::int64_t q1 = static_cast<std::int64_t>(t.lower_full.size());
  require(rep.output.arg_scale ==
              int_pow(t.arg_scale, n) * int_pow(GaussianRational(n), n * (p - q1)),
          tag("image argument scale wrong"));

  const PowerSeries direct = u_apply(n, to_series(t, n * order));
  const PowerSeries closed = to_series(rep.output, order);
  require(closed == direct, tag("closed-form image differs from the coefficient filter"));

  const HypergeometricTerm nt = normalize(rep.output);
  require(to_series(nt, 16) == to_series(rep.output, 16),
          tag("normalization changed the series"));

  HypergeometricTerm aligned = t;
  aligned.shift = n * rng.range(0, 5);
  require(sum_invariant_check(aligned, n), tag("parameter-sum invariant drifted"));
}

// ---------------------------------------------------------------------------
// adjoint: the substitution operator is adjoint to coefficient selection
// under the circle pairing.

void adjoint_trial(std::uint64_t, SplitMix64& rng, std::int64_t order) {
  const PowerSeries f = random_series(rng, order);
  const PowerSeries g = random_series(rng, order);
  const std::int64_t n = rng.range(1, 8);
  std::ostringstream os;
  os << "n=" << n << ", shifts " << f.shift << "/" << g.shift;
  const std::string where = os.str();

  require(adjoint_check(n, f, g), "adjunction pairing failed at " + where);

  const std::vector<GaussianRational> fg = inner_product(f, g);
  const std::vector<GaussianRational> gf = inner_product(g, f);
  require(fg.size() == gf.size(), "pairing lengths differ at " + where);
  for (std::size_t i = 0; i < fg.size(); ++i) {
    require(fg[i] == conj(gf[i]), "pairing is not conjugate-symmetric at " + where);
  }
}

// ---------------------------------------------------------------------------
// eigen: classifier, numeric check and root multisets must tell one story.

void eigen_trial(std::uint64_t trial, SplitMix64& rng, std::int64_t) {
  if (trial == 0) {
    // Fixed anchor: the weight-2 polylogarithm under U(2).
    const HypergeometricTerm li2 = polylog_term(-2);
    const auto [cls, rep] = eigen_classify(li2, 2);
    require(cls.kind == EigenKind::Polylog && cls.a == 2, "dilogarithm misclassified");
    require(rep.is_eigen && rep.eigenvalue &&
                *rep.eigenvalue == GaussianRational(make_rational(1, 4)),
            "dilogarithm eigenvalue is not 1/4");
    require(rep.gamma && rep.gamma->gamma_a == 3 && rep.gamma->gamma_b == 1,
            "dilogarithm unit-parameter counts are not (3,1)");
    require(root_multiset_check(li2, 2), "dilogarithm root multisets differ");
    require(simultaneous_eigen_check(li2, {2, 3, 4, 5}),
            "dilogarithm is not simultaneously recognized");
    return;
  }

  static const std::int64_t kNs[] = {2, 3, 4, 5, 7};
  const std::int64_t n = kNs[rng.range(0, 4)];
  const std::int64_t mode = rng.range(0, 3);

  HypergeometricTerm t;
  EigenKind expect_kind = EigenKind::NotEigen;
  std::int64_t expect_a = 0;
  GaussianRational expect_lambda(1);
  GammaCounts expect_gamma;
  if (mode == 0) {
    expect_a = rng.range(1, 4);
    t = polylog_term(expect_a);
    expect_kind = EigenKind::RationalEuler;
    expect_lambda = int_pow(GaussianRational(n), expect_a);
    expect_gamma = {0, expect_a};
  } else if (mode == 1) {
    expect_a = rng.range(1, 4);
    t = polylog_term(-expect_a);
    expect_kind = EigenKind::Polylog;
    expect_lambda = int_pow(GaussianRational(n), -expect_a);
    expect_gamma = {expect_a + 1, 1};
  } else if (mode == 2) {
    t = geometric_term();
    expect_kind = EigenKind::Geometric;
    expect_gamma = {1, 1};
  } else {
    t = polylog_term(-2);
    t.shift = 2;  // a shifted copy is no longer an eigenfunction
  }
  t.c0 = rng.scalar(5);

  bool perturbed = false;
  if (mode != 3 && rng.chance(1, 2)) {
    perturbed = true;
    expect_kind = EigenKind::NotEigen;
    const GaussianRational d = random_delta(rng);
    bool use_upper = rng.chance(1, 2);
    if (!use_upper) {
      // Keep at least one unit entry alive so the term stays well formed.
      const GaussianRational one(1);
      std::size_t ones = 0;
      for (const GaussianRational& v : t.lower_full) ones += (v == one) ? 1u : 0u;
      std::vector<std::size_t> movable;
      for (std::size_t i = 0; i < t.lower_full.size(); ++i) {
        if (!(t.lower_full[i] == one) || ones >= 2) movable.push_back(i);
      }
      if (movable.empty()) {
        use_upper = true;
      } else {
        t.lower_full[movable[static_cast<std::size_t>(
            rng.range(0, static_cast<std::int64_t>(movable.size()) - 1))]] += d;
      }
    }
    if (use_upper) {
      t.upper[static_cast<std::size_t>(
          rng.range(0, static_cast<std::int64_t>(t.upper.size()) - 1))] += d;
    }
  }

  const auto tag = [&](const char* what) {
    std::ostringstream os;
    os << what << " for n=" << n << ", mode=" << mode << ", a=" << expect_a
       << (perturbed ? ", perturbed" : "");
    return os.str();
  };

  const auto [cls, rep] = eigen_classify(t, n);
  require(cls.kind == expect_kind, tag("classification kind mismatch"));
  if (expect_kind != EigenKind::NotEigen) {
    require(cls.a == expect_a, tag("classification parameter mismatch"));
    require(rep.is_eigen, tag("planted eigenfunction rejected numerically"));
    require(rep.eigenvalue && *rep.eigenvalue == expect_lambda, tag("eigenvalue mismatch"));
    require(rep.gamma && rep.gamma->gamma_a == expect_gamma.gamma_a &&
                rep.gamma->gamma_b == expect_gamma.gamma_b,
            tag("unit-parameter counts mismatch"));
    if (t.shift == 1) require(root_multiset_check(t, n), tag("root multisets differ"));
    require(simultaneous_eigen_check(t, {2, 3, 4, 5}),
            tag("simultaneous recognition failed"));
  } else {
    require(!rep.is_eigen, tag("non-eigenfunction accepted numerically"));
    require(rep.witness.has_value(), tag("numeric rejection carries no witness"));
    if (perturbed && t.shift == 1) {
      require(!root_multiset_check(t, n), tag("root multisets match on a perturbed term"));
    }
    require(!simultaneous_eigen_check(t, {2, 3, 4, 5}),
            tag("simultaneous recognition accepted a non-eigenfunction"));
  }
}

// ---------------------------------------------------------------------------
// multiplicative: bounded multiplicativity of the coefficient ratio against
// shape classification, cross-linked with the eigen classifier.

void multiplicative_trial(std::uint64_t trial, SplitMix64& rng, std::int64_t bound) {
  const GaussianRational one(1);
  if (trial == 0) {
    const CmReport sq = multiplicative_classify({GaussianRational(2), GaussianRational(2)},
                                                {one, one}, bound);
    require(sq.is_cm && sq.exponent && *sq.exponent == 2,
            "squares example is not multiplicative with exponent 2");
    const CmReport inv = multiplicative_classify(
        {one, one, one}, {GaussianRational(2), GaussianRational(2), one}, bound);
    require(inv.is_cm && inv.exponent && *inv.exponent == -2,
            "inverse-squares example is not multiplicative with exponent -2");
    const CmReport half =
        multiplicative_classify({GaussianRational(make_rational(1, 2))}, {one}, bound);
    require(!half.is_cm && half.witness && half.witness->first == 2 && half.witness->second == 2,
            "half-parameter example did not fail at the (2,2) pair");
    return;
  }

  const std::int64_t a = rng.range(1, 3);
  const bool positive_exponent = rng.chance(1, 2);
  HypergeometricTerm base = polylog_term(positive_exponent ? a : -a);
  std::vector<GaussianRational> upper = base.upper;
  std::vector<GaussianRational> lower = base.lower_full;
  const std::size_t shape_upper = upper.size();
  for (std::int64_t i = rng.range(0, 2); i > 0; --i) {
    const GaussianRational v = lower_safe(rng, 5);
    upper.push_back(v);
    lower.push_back(v);
  }

  bool planted_cm = true;
  if (rng.chance(1, 2)) {
    planted_cm = false;
    upper[static_cast<std::size_t>(
        rng.range(0, static_cast<std::int64_t>(shape_upper) - 1))] += random_delta(rng);
  }

  const auto tag = [&](const char* what) {
    std::ostringstream os;
    os << what << " for a=" << (positive_exponent ? a : -a) << ", padded to " << upper.size()
       << " upper entries" << (planted_cm ? "" : ", perturbed");
    return os.str();
  };

  const CmReport cm = multiplicative_classify(upper, lower, bound);
  require(cm.is_cm == planted_cm, tag("multiplicativity verdict mismatch"));
  if (planted_cm) {
    require(cm.exponent && *cm.exponent == (positive_exponent ? a : -a),
            tag("multiplicative exponent mismatch"));
  } else {
    require(cm.witness.has_value(), tag("no witness pair on a perturbed term"));
  }

  HypergeometricTerm probe;
  probe.shift = 1;
  probe.upper = upper;
  probe.lower_full = lower;
  const auto [cls, rep] = eigen_classify(probe, 2);
  (void)rep;
  require((cls.kind != EigenKind::NotEigen) == cm.is_cm,
          tag("eigen classification disagrees with multiplicativity"));
}

// ---------------------------------------------------------------------------
// Runner plumbing.

using TrialFn = void (*)(std::uint64_t, SplitMix64&, std::int64_t);

VerificationRun execute(const std::string& name, std::uint64_t seed, std::uint64_t trials,
                        std::int64_t order, TrialFn body) {
  VerificationRun run;
  run.suite = name;
  run.seed = seed;
  run.trials = trials;
  run.order = order;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    SplitMix64 rng(trial_seed(seed, trial));
    try {
      body(trial, rng, order);
    } catch (const CheckFailed& f) {
      run.failures.push_back({trial, f.description, repro_command(name, seed, trial, order)});
    } catch (const std::exception& ex) {
      run.failures.push_back({trial, std::string("unexpected exception: ") + ex.what(),
                              repro_command(name, seed, trial, order)});
    }
  }
  run.ok = run.failures.empty();
  return run;
}

VerificationRun spectrum_run(std::uint64_t seed, std::int64_t order) {
  VerificationRun run;
  run.suite = "spectrum";
  run.seed = seed;
  run.order = order;
  static const std::int64_t kNs[] = {2, 3, 4, 5, 7};
  const std::string repro = "hecke verify --suite spectrum --seed " + std::to_string(seed) +
                            " --order " + std::to_string(order);
  std::uint64_t cell = 0;
  for (const std::int64_t n : kNs) {
    for (std::int64_t i = -4; i <= 4; ++i, ++cell) {
      ++run.trials;
      try {
        const auto reports = spectrum_witness(n, i, i, order);
        const EigenReport& rep = reports.at(0).second;
        std::ostringstream os;
        os << "exponent-" << i << " series under U(" << n << ")";
        require(rep.is_eigen, os.str() + " was rejected");
        require(rep.eigenvalue && *rep.eigenvalue == int_pow(GaussianRational(n), i),
                os.str() + " has the wrong eigenvalue");
        require(rep.checked_to == order, os.str() + " was not checked to the requested order");
      } catch (const CheckFailed& f) {
        run.failures.push_back({cell, f.description, repro});
      } catch (const std::exception& ex) {
        run.failures.push_back({cell, std::string("unexpected exception: ") + ex.what(), repro});
      }
    }
  }
  run.ok = run.failures.empty();
  return run;
}

struct SuiteSpec {
  const char* name;
  std::uint64_t default_trials;
  std::int64_t default_order;
  TrialFn body;
};

constexpr SuiteSpec kSuites[] = {
    {"algebra", 100, 240, algebra_trial},
    {"pochhammer", 500, 0, pochhammer_trial},
    {"transform", 300, 40, transform_trial},
    {"adjoint", 200, 48, adjoint_trial},
    {"eigen", 200, 64, eigen_trial},
    {"spectrum", 45, 128, nullptr},
    {"multiplicative", 200, 24, multiplicative_trial},
};

VerificationRun run_one(const SuiteSpec& spec, const VerifyOptions& opts) {
  const std::uint64_t trials = opts.trials.value_or(spec.default_trials);
  const std::int64_t order = opts.order.value_or(spec.default_order);
  if (std::string_view(spec.name) == "spectrum") {
    if (order < 2) fail(errc::invalid_parameter, "spectrum verification needs order >= 2");
    return spectrum_run(opts.seed, order);  // fixed grid; the trials option is ignored
  }
  if (std::string_view(spec.name) == "multiplicative" && order < 4) {
    fail(errc::invalid_parameter, "multiplicative verification needs order >= 4");
  }
  if (order < 0) fail(errc::invalid_parameter, "verification order must not be negative");
  return execute(spec.name, opts.seed, trials, order, spec.body);
}

}  // namespace

std::vector<VerificationRun> run_verify(const std::string& suite, const VerifyOptions& opts) {
  std::vector<VerificationRun> runs;
  if (suite == "all") {
    for (const SuiteSpec& spec : kSuites) runs.push_back(run_one(spec, opts));
    return runs;
  }
  for (const SuiteSpec& spec : kSuites) {
    if (suite == spec.name) {
      runs.push_back(run_one(spec, opts));
      return runs;
    }
  }
  fail(errc::invalid_parameter, "unknown verification suite: " + suite);
}

}  // namespace hecke
