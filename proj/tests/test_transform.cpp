#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hecke/error.hpp"
#include "hecke/randgen.hpp"
#include "hecke/transform.hpp"

using namespace hecke;

namespace {

GaussianRational gr(long nr, long dr = 1, long ni = 0, long di = 1) {
  return GaussianRational(make_rational(nr, dr), make_rational(ni, di));
}

using ScalarList = std::vector<GaussianRational>;

// Random term matching the oracle-equivalence corpus: p,q <= 3, rational
// parameters of magnitude <= 9, shift <= 7.
HypergeometricTerm random_term(SplitMix64& rng) {
  HypergeometricTerm t;
  t.c0 = GaussianRational(rng.rational());
  t.shift = rng.range(0, 7);
  const std::int64_t p = rng.range(0, 3);
  const std::int64_t q = rng.range(0, 3);
  for (std::int64_t i = 0; i < p; ++i) t.upper.push_back(GaussianRational(rng.rational()));
  for (std::int64_t i = 0; i < q; ++i) {
    GaussianRational b{rng.rational()};
    while (is_nonpositive_integer(b)) b += GaussianRational(1);
    t.lower_full.push_back(b);
  }
  t.lower_full.push_back(GaussianRational(1));
  t.arg_scale = GaussianRational(rng.rational(4));
  return t;
}

}  // namespace

TEST_CASE("parameter maps reproduce hand-computed images") {
  auto [u2, l2] = parameter_map_divides({gr(1)}, {gr(1)}, 2);
  CHECK(u2 == ScalarList{gr(1, 2), gr(1)});
  CHECK(l2 == ScalarList{gr(1, 2), gr(1)});

  auto [u3, l3] = parameter_map_divides({}, {gr(1)}, 3);
  CHECK(u3.empty());
  CHECK(l3 == ScalarList{gr(1, 3), gr(2, 3), gr(1)});

  // n=1 is the identity map.
  auto [u1, l1] = parameter_map_divides({gr(5, 2)}, {gr(1)}, 1);
  CHECK(u1 == ScalarList{gr(5, 2)});
  CHECK(l1 == ScalarList{gr(1)});

  NondividesMap m1 = parameter_map_nondivides({gr(1)}, {gr(1)}, 2, 1);
  CHECK(m1.r == 0);
  CHECK(m1.upper == ScalarList{gr(1), gr(3, 2)});
  CHECK(m1.lower == ScalarList{gr(1), gr(3, 2)});

  // Only j mod n matters: j=3 behaves like j=1.
  NondividesMap m3 = parameter_map_nondivides({gr(1)}, {gr(1)}, 2, 3);
  CHECK(m3.r == m1.r);
  CHECK(m3.upper == m1.upper);

  NondividesMap m23 = parameter_map_nondivides({gr(2)}, {gr(1)}, 3, 2);
  CHECK(m23.r == 0);
  CHECK(m23.upper == ScalarList{gr(1), gr(4, 3), gr(5, 3)});

  CHECK_THROWS_AS(parameter_map_nondivides({gr(1)}, {gr(1)}, 2, 4), EngineError);
  CHECK_THROWS_AS(parameter_map_divides({}, {gr(-2), gr(1)}, 2), EngineError);
}

TEST_CASE("dilogarithm transforms to a quarter of itself under U_2") {
  HypergeometricTerm li2 = polylog_term(-2);
  TransformReport rep = u_closed_form(2, li2);

  CHECK(rep.n == 2);
  CHECK_FALSE(rep.case_divides);
  CHECK(rep.r == 0);
  CHECK(rep.input == li2);
  CHECK(rep.output.shift == 1);
  CHECK(rep.output.c0 == gr(1, 4));
  CHECK(rep.output.arg_scale == gr(1));
  CHECK(rep.output.upper ==
        ScalarList{gr(1), gr(3, 2), gr(1), gr(3, 2), gr(1), gr(3, 2)});
  CHECK(rep.output.lower_full ==
        ScalarList{gr(3, 2), gr(2), gr(3, 2), gr(2), gr(1), gr(3, 2)});

  // Raw shape: lists grow by the factor n.
  CHECK(rep.output.upper.size() == 2 * li2.upper.size());
  CHECK(rep.output.lower_full.size() == 2 * li2.lower_full.size());

  // Normalization recovers the dilogarithm term scaled by 1/4.
  HypergeometricTerm norm = normalize(rep.output);
  CHECK(norm.c0 == gr(1, 4));
  CHECK(norm.shift == 1);
  CHECK(norm.upper == ScalarList{gr(1), gr(1), gr(1)});
  CHECK(norm.lower_full == ScalarList{gr(1), gr(2), gr(2)});

  // And the series agrees with the operator applied to the expansion.
  PowerSeries direct = u_apply(2, to_series(li2, 40));
  CHECK(equal_to_order(to_series(rep.output, 18), direct, 18));
}

TEST_CASE("a shifted 1F0 under U_2, computed by hand") {
  // x * sum_k (1/2)_k x^k / k! : shift 1, upper (1/2).
  HypergeometricTerm t = make_term(gr(1), 1, {gr(1, 2)}, {});
  TransformReport rep = u_closed_form(2, t);
  CHECK_FALSE(rep.case_divides);
  CHECK(rep.r == 0);
  CHECK(rep.output.shift == 1);
  CHECK(rep.output.c0 == gr(1, 2));
  CHECK(rep.output.upper == ScalarList{gr(3, 4), gr(5, 4)});
  CHECK(rep.output.lower_full == ScalarList{gr(1), gr(3, 2)});
  CHECK(rep.output.arg_scale == gr(1));
  // Coefficient of x^2 in the output: (1/2)(3/4)(5/4)/(1 * 3/2) = 5/16.
  CHECK(coefficient(rep.output, 1) == gr(5, 16));
  CHECK(equal_to_order(to_series(rep.output, 20), u_apply(2, to_series(t, 42)), 20));
}

TEST_CASE("geometric series is fixed by every U_n") {
  HypergeometricTerm geom = geometric_term();
  for (std::int64_t n : {1, 2, 3, 5}) {
    TransformReport rep = u_closed_form(n, geom);
    CHECK(rep.case_divides);
    CHECK(rep.output.shift == 0);
    CHECK(rep.output.arg_scale == gr(1));
    CHECK(normalize(rep.output) == geometric_term());
    PowerSeries s = to_series(rep.output, 10);
    for (const auto& c : s.coeffs) CHECK(c == gr(1));
  }
}

TEST_CASE("U_1 is the identity transform") {
  SplitMix64 rng(trial_seed(201, 0));
  for (int trial = 0; trial < 20; ++trial) {
    HypergeometricTerm t = random_term(rng);
    TransformReport rep = u_closed_form(1, t);
    CHECK(rep.case_divides);
    CHECK(rep.output == t);
  }
}

TEST_CASE("closed form agrees with the series operator") {
  SplitMix64 rng(trial_seed(202, 0));
  for (int trial = 0; trial < 50; ++trial) {
    HypergeometricTerm t = random_term(rng);
    std::int64_t n = rng.range(1, 5);
    TransformReport rep = u_closed_form(n, t);
    PowerSeries closed = to_series(rep.output, 40);
    PowerSeries direct = u_apply(n, to_series(t, 200 + t.shift));
    CHECK(equal_to_order(closed, direct, 40));

    // Shape and scale invariants of the report.
    CHECK(rep.output.upper.size() == t.upper.size() * static_cast<std::size_t>(n));
    CHECK(rep.output.lower_full.size() == t.lower_full.size() * static_cast<std::size_t>(n));
    const std::int64_t p = static_cast<std::int64_t>(t.upper.size());
    const std::int64_t q1 = static_cast<std::int64_t>(t.lower_full.size());
    CHECK(rep.output.arg_scale ==
          int_pow(t.arg_scale, n) * int_pow(gr(n), n * (p - q1)));
    if (is_balanced(t)) CHECK(is_balanced(rep.output));
  }
}

TEST_CASE("composition matches the single transform of the product index") {
  SplitMix64 rng(trial_seed(203, 0));
  for (int trial = 0; trial < 25; ++trial) {
    HypergeometricTerm t = random_term(rng);
    std::int64_t n = rng.range(2, 3);
    std::int64_t m = rng.range(2, 3);
    HypergeometricTerm two_step = u_closed_form(n, u_closed_form(m, t).output).output;
    HypergeometricTerm one_step = u_closed_form(n * m, t).output;
    CHECK(equal_to_order(to_series(normalize(two_step), 40), to_series(normalize(one_step), 40),
                         40));
  }
}

TEST_CASE("parameter sums obey the balanced-offset identity") {
  // Balanced terms: the correction vanishes, so the delta is preserved.
  HypergeometricTerm li2 = polylog_term(-2);
  li2.shift = 2;
  CHECK(sum_invariant_check(li2, 2));
  CHECK(param_sum_delta(u_closed_form(2, li2).output) == param_sum_delta(li2));

  SplitMix64 rng(trial_seed(204, 0));
  for (int trial = 0; trial < 50; ++trial) {
    HypergeometricTerm t = random_term(rng);
    std::int64_t n = rng.range(1, 5);
    t.shift = n * rng.range(0, 3);
    CHECK(sum_invariant_check(t, n));
  }

  // n = 1 always qualifies and always holds.
  HypergeometricTerm g = geometric_term();
  CHECK(sum_invariant_check(g, 1));

  // The identity is only stated when n divides the exponent.
  HypergeometricTerm shifted = polylog_term(0);
  CHECK_THROWS_AS(sum_invariant_check(shifted, 2), EngineError);
}
