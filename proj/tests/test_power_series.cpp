#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "hecke/power_series.hpp"
#include "hecke/randgen.hpp"

using namespace hecke;

namespace {

GaussianRational gr(long num, long den = 1) { return GaussianRational(make_rational(num, den)); }

PowerSeries series(std::int64_t shift, std::vector<GaussianRational> coeffs) {
  PowerSeries f;
  f.shift = shift;
  f.coeffs = std::move(coeffs);
  return f;
}

PowerSeries random_series(SplitMix64& rng, std::int64_t len) {
  PowerSeries f;
  f.shift = rng.range(0, 3);
  for (std::int64_t i = 0; i < len; ++i) {
    f.coeffs.push_back(rng.chance(1, 4) ? GaussianRational() : rng.scalar(6));
  }
  return f;
}

// Independent oracle: select coefficients whose exponent is divisible by n by
// walking the exponent range directly.
PowerSeries u_brute(std::int64_t n, const PowerSeries& f) {
  PowerSeries out;
  out.shift = (f.shift + n - 1) / n;
  const std::int64_t kt = (f.known_to() + n - 1) / n;
  for (std::int64_t k = out.shift; k < kt; ++k) out.coeffs.push_back(f.coeff(n * k));
  return out;
}

}  // namespace

TEST_CASE("coefficient access respects the known window") {
  const PowerSeries f = series(2, {gr(5), gr(7)});
  CHECK(f.known_to() == 4);
  CHECK(f.coeff(0) == gr(0));
  CHECK(f.coeff(1) == gr(0));
  CHECK(f.coeff(2) == gr(5));
  CHECK(f.coeff(3) == gr(7));
  CHECK_THROWS_AS(f.coeff(4), EngineError);
}

TEST_CASE("coefficient selection matches the exponent filter") {
  // x^3 * (1 + x + x^2 + ...) under n = 2 keeps exponents 4, 6, 8, ...
  PowerSeries shifted_ones = series(3, std::vector<GaussianRational>(9, gr(1)));
  const PowerSeries u2 = u_apply(2, shifted_ones);
  CHECK(u2.shift == 2);
  CHECK(u2.known_to() == 6);
  for (std::int64_t e = 2; e < 6; ++e) CHECK(u2.coeff(e) == gr(1));

  CHECK(u_apply(5, geometric_series(21)) == geometric_series(5));
  CHECK(u_apply(1, shifted_ones) == shifted_ones);

  for (std::uint64_t trial = 0; trial < 60; ++trial) {
    SplitMix64 rng(trial_seed(11, trial));
    const PowerSeries f = random_series(rng, rng.range(1, 30));
    const std::int64_t n = rng.range(1, 7);
    CHECK(u_apply(n, f) == u_brute(n, f));
  }

  CHECK_THROWS_AS(u_apply(0, geometric_series(4)), EngineError);
}

TEST_CASE("substitution spreads coefficients to multiples") {
  const PowerSeries f = series(0, {gr(1), gr(1), gr(1)});
  const PowerSeries v = v_apply(2, f);
  CHECK(v.shift == 0);
  CHECK(v.known_to() == 5);
  CHECK(v.coeffs == std::vector<GaussianRational>{gr(1), gr(0), gr(1), gr(0), gr(1)});

  const PowerSeries w = v_apply(3, series(2, {gr(4), gr(5)}));
  CHECK(w.shift == 6);
  CHECK(w.known_to() == 10);
  CHECK(w.coeff(6) == gr(4));
  CHECK(w.coeff(9) == gr(5));
  CHECK(w.coeff(7) == gr(0));

  CHECK_THROWS_AS(v_apply(0, f), EngineError);
}

TEST_CASE("selection undoes substitution") {
  for (std::uint64_t trial = 0; trial < 40; ++trial) {
    SplitMix64 rng(trial_seed(12, trial));
    const PowerSeries f = random_series(rng, rng.range(1, 25));
    const std::int64_t n = rng.range(1, 9);
    CHECK(u_apply(n, v_apply(n, f)) == f);
  }
}

TEST_CASE("dilation eigenrelation for polylogarithm series") {
  CHECK(u_apply(3, polylog_series(-2, 120)) == scale(gr(1, 9), polylog_series(-2, 40)));
  CHECK(u_apply(2, polylog_series(3, 64)) == scale(gr(8), polylog_series(3, 32)));
}

TEST_CASE("polylogarithm series values") {
  const PowerSeries li2 = polylog_series(-2, 6);
  CHECK(li2.shift == 1);
  CHECK(li2.known_to() == 6);
  CHECK(li2.coeff(1) == gr(1));
  CHECK(li2.coeff(4) == gr(1, 16));
  const PowerSeries k2 = polylog_series(2, 5);
  CHECK(k2.coeff(3) == gr(9));
  CHECK(polylog_series(0, 4).coeffs == std::vector<GaussianRational>{gr(1), gr(1), gr(1)});
  CHECK_THROWS_AS(polylog_series(1, 0), EngineError);
}

TEST_CASE("coefficientwise product") {
  const PowerSeries h = hadamard(polylog_series(-1, 8), polylog_series(-1, 8));
  CHECK(h == polylog_series(-2, 8));

  // known range is the smaller of the two
  const PowerSeries a = series(0, {gr(2), gr(3)});
  const PowerSeries b = series(1, {gr(5), gr(7), gr(11)});
  const PowerSeries ab = hadamard(a, b);
  CHECK(ab.known_to() == 2);
  CHECK(ab.coeff(0) == gr(0));
  CHECK(ab.coeff(1) == gr(15));
}

TEST_CASE("pairing sequence conjugates the right factor") {
  const PowerSeries f = series(0, {GaussianRational(make_rational(1), make_rational(1)), gr(2)});
  const PowerSeries g = series(0, {gr(3), GaussianRational(make_rational(0), make_rational(1))});
  const auto s = inner_product(f, g);
  REQUIRE(s.size() == 2);
  CHECK(s[0] == GaussianRational(make_rational(3), make_rational(3)));
  CHECK(s[1] == GaussianRational(make_rational(0), make_rational(-2)));

  const auto t = inner_product(series(1, {gr(5)}), geometric_series(4));
  REQUIRE(t.size() == 2);
  CHECK(t[0] == gr(0));
  CHECK(t[1] == gr(5));
}

TEST_CASE("substitution is adjoint to selection under the pairing") {
  CHECK(adjoint_check(2, geometric_series(8), geometric_series(8)));
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    SplitMix64 rng(trial_seed(13, trial));
    const PowerSeries f = random_series(rng, rng.range(2, 30));
    const PowerSeries g = random_series(rng, rng.range(2, 30));
    CHECK(adjoint_check(rng.range(1, 6), f, g));
  }
}

TEST_CASE("euler operator multiplies by the exponent") {
  const PowerSeries e = euler_apply(geometric_series(6));
  CHECK(e.shift == 1);  // the constant term drops out
  CHECK(e.known_to() == 6);
  for (std::int64_t k = 1; k < 6; ++k) CHECK(e.coeff(k) == gr(k));
  CHECK(e == polylog_series(1, 6));

  // iterating matches higher polylogarithm weights
  CHECK(euler_apply(euler_apply(geometric_series(6))) == polylog_series(2, 6));
}

TEST_CASE("divisibility projection") {
  const PowerSeries f = series(0, {gr(1), gr(2), gr(3), gr(4), gr(5), gr(6), gr(7)});
  const PowerSeries p = vnun_projection(3, f);
  CHECK(p.known_to() == f.known_to());
  CHECK(p.coeffs == std::vector<GaussianRational>{gr(1), gr(0), gr(0), gr(4), gr(0), gr(0), gr(7)});
  CHECK(vnun_projection(3, p) == p);

  for (std::uint64_t trial = 0; trial < 30; ++trial) {
    SplitMix64 rng(trial_seed(14, trial));
    const PowerSeries h = random_series(rng, rng.range(1, 24));
    const std::int64_t n = rng.range(1, 6);
    const PowerSeries q = vnun_projection(n, h);
    CHECK(q == vnun_projection(n, q));
    const PowerSeries vu = v_apply(n, u_apply(n, h));
    const std::int64_t common = std::min(q.known_to(), vu.known_to());
    CHECK(!first_mismatch(q, vu, common).has_value());
  }
}

TEST_CASE("linear combinations align shifts") {
  const PowerSeries sum = add(series(2, {gr(1), gr(1)}), series(0, {gr(3), gr(0), gr(5)}));
  CHECK(sum.known_to() == 3);
  CHECK(sum.coeff(0) == gr(3));
  CHECK(sum.coeff(2) == gr(6));

  const PowerSeries sc = scale(gr(-1, 2), series(1, {gr(4), gr(6)}));
  CHECK(sc.shift == 1);
  CHECK(sc.coeffs == std::vector<GaussianRational>{gr(-2), gr(-3)});

  const PowerSeries zero = scale(gr(0), geometric_series(5));
  for (std::int64_t e = 0; e < 5; ++e) CHECK(zero.coeff(e) == gr(0));
}

TEST_CASE("bounded comparison and first mismatch") {
  const PowerSeries a = series(0, {gr(1), gr(2), gr(3)});
  const PowerSeries b = series(0, {gr(1), gr(2), gr(4)});
  CHECK(equal_to_order(a, b, 2));
  CHECK(!equal_to_order(a, b, 3));
  CHECK(first_mismatch(a, b, 3) == 2);
  CHECK(!first_mismatch(a, b, 2).has_value());
  CHECK_THROWS_AS(equal_to_order(a, b, 4), EngineError);

  // a zero-padded representation equals its stripped form
  const PowerSeries padded = series(0, {gr(0), gr(0), gr(9)});
  const PowerSeries tight = series(2, {gr(9)});
  CHECK(!first_mismatch(padded, tight, 3).has_value());
}

TEST_CASE("normalization strips known leading zeros") {
  const PowerSeries f = normalized(series(1, {gr(0), gr(0), gr(7), gr(0)}));
  CHECK(f.shift == 3);
  CHECK(f.known_to() == 5);
  CHECK(f.coeffs == std::vector<GaussianRational>{gr(7), gr(0)});

  const PowerSeries z = normalized(series(4, {gr(0), gr(0)}));
  CHECK(z.shift == 0);
  CHECK(z.known_to() == 6);
  for (const auto& c : z.coeffs) CHECK(c == gr(0));
}

TEST_CASE("truncation forgets high coefficients") {
  const PowerSeries t = truncated(geometric_series(10), 4);
  CHECK(t == geometric_series(4));
  CHECK(truncated(series(6, {gr(1)}), 3).known_to() == 3);
  CHECK(truncated(geometric_series(3), 8) == geometric_series(3));
}
