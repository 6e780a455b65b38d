#include "hecke/hypergeometric.hpp"

#include <algorithm>
#include <string>

#include "hecke/error.hpp"

namespace hecke {

void validate_term(const HypergeometricTerm& t) {
  if (t.lower_full.empty()) {
    fail(errc::invalid_parameter, "lower parameter list must contain the k! slot");
  }
  bool has_slot = false;
  for (const auto& b : t.lower_full) {
    if (b == GaussianRational(1)) has_slot = true;
    if (is_nonpositive_integer(b)) {
      fail(errc::invalid_parameter,
           "lower parameter " + format_scalar(b) + " is a nonpositive integer");
    }
  }
  if (!has_slot) {
    fail(errc::invalid_parameter, "lower parameter list must contain an entry equal to 1");
  }
  if (t.arg_scale.is_zero()) {
    fail(errc::invalid_parameter, "argument scale must be nonzero");
  }
}

HypergeometricTerm make_term(GaussianRational c0, std::int64_t shift,
                             std::vector<GaussianRational> upper,
                             std::vector<GaussianRational> lower,
                             GaussianRational arg_scale) {
  HypergeometricTerm t;
  t.c0 = std::move(c0);
  t.shift = shift;
  t.upper = std::move(upper);
  t.lower_full = std::move(lower);
  t.lower_full.push_back(GaussianRational(1));
  t.arg_scale = std::move(arg_scale);
  validate_term(t);
  return t;
}

GaussianRational pochhammer(const GaussianRational& a, std::int64_t k) {
  if (k < 0) fail(errc::invalid_parameter, "Pochhammer index must be nonnegative");
  GaussianRational acc(1);
  GaussianRational factor = a;
  const GaussianRational one(1);
  for (std::int64_t i = 0; i < k; ++i) {
    acc *= factor;
    factor += one;
  }
  return acc;
}

GaussianRational pochhammer_split(const GaussianRational& a, std::int64_t n, std::int64_t k) {
  if (n < 1) fail(errc::invalid_operator, "splitting modulus must be positive");
  if (k < 0) fail(errc::invalid_parameter, "Pochhammer index must be nonnegative");
  const GaussianRational gn{make_rational(n)};
  GaussianRational acc = int_pow(gn, k * n);
  for (std::int64_t j = 0; j < n; ++j) {
    acc *= pochhammer((a + GaussianRational(make_rational(j))) / gn, k);
  }
  return acc;
}

GaussianRational pochhammer_offset(const GaussianRational& a, std::int64_t n, std::int64_t k,
                                   std::int64_t j) {
  if (n < 1) fail(errc::invalid_operator, "splitting modulus must be positive");
  if (k < 0) fail(errc::invalid_parameter, "Pochhammer index must be nonnegative");
  if (j % n == 0) {
    fail(errc::invalid_operator, "offset form requires an exponent not divisible by n");
  }
  const std::int64_t r = n - 1 - (j % n);
  const GaussianRational gn{make_rational(n)};
  GaussianRational acc = int_pow(gn, n * k) * pochhammer(a, r + 1);
  for (std::int64_t i = r + 1; i <= r + n; ++i) {
    acc *= pochhammer((a + GaussianRational(make_rational(i))) / gn, k);
  }
  return acc;
}

GaussianRational coefficient(const HypergeometricTerm& t, std::int64_t k) {
  validate_term(t);
  if (k < 0) fail(errc::invalid_parameter, "coefficient index must be nonnegative");
  GaussianRational acc = t.c0 * int_pow(t.arg_scale, k);
  for (const auto& a : t.upper) acc *= pochhammer(a, k);
  for (const auto& b : t.lower_full) acc /= pochhammer(b, k);
  return acc;
}

PowerSeries to_series(const HypergeometricTerm& t, std::int64_t order) {
  validate_term(t);
  if (order < 0) fail(errc::invalid_parameter, "series order must be nonnegative");
  PowerSeries out;
  out.shift = t.shift;
  out.coeffs.reserve(static_cast<std::size_t>(order));
  if (order == 0) return out;
  // Term ratio recurrence: A_{k+1} = A_k * s * prod(a_i + k) / prod(b_i + k).
  GaussianRational acc = t.c0;
  for (std::int64_t k = 0; k < order; ++k) {
    out.coeffs.push_back(acc);
    if (k + 1 == order) break;
    const GaussianRational gk{make_rational(k)};
    acc *= t.arg_scale;
    for (const auto& a : t.upper) acc *= a + gk;
    for (const auto& b : t.lower_full) acc /= b + gk;
  }
  return out;
}

HypergeometricTerm normalize(const HypergeometricTerm& t) {
  validate_term(t);
  HypergeometricTerm out;
  out.c0 = t.c0;
  out.shift = t.shift;
  out.arg_scale = t.arg_scale;

  // Multiset cancellation of equal upper/lower values. One lower entry equal
  // to 1 (the k! slot) is set aside first so it can never be cancelled.
  std::vector<GaussianRational> upper = t.upper;
  std::vector<GaussianRational> lower = t.lower_full;
  const GaussianRational one(1);
  lower.erase(std::find(lower.begin(), lower.end(), one));
  for (auto it = upper.begin(); it != upper.end();) {
    auto match = std::find(lower.begin(), lower.end(), *it);
    if (match != lower.end()) {
      lower.erase(match);
      it = upper.erase(it);
    } else {
      ++it;
    }
  }
  lower.push_back(one);
  std::sort(upper.begin(), upper.end(), scalar_less);
  std::sort(lower.begin(), lower.end(), scalar_less);
  out.upper = std::move(upper);
  out.lower_full = std::move(lower);
  return out;
}

GammaCounts gamma_counts(const HypergeometricTerm& t) {
  GammaCounts g;
  const GaussianRational one(1);
  for (const auto& a : t.upper) {
    if (a == one) ++g.gamma_a;
  }
  for (const auto& b : t.lower_full) {
    if (b == one) ++g.gamma_b;
  }
  return g;
}

GaussianRational param_sum_delta(const HypergeometricTerm& t) {
  GaussianRational acc(0);
  for (const auto& a : t.upper) acc += a;
  for (const auto& b : t.lower_full) acc -= b;
  return acc;
}

bool is_balanced(const HypergeometricTerm& t) { return t.upper.size() == t.lower_full.size(); }

HypergeometricTerm polylog_term(std::int64_t i) {
  HypergeometricTerm t;
  t.shift = 1;
  if (i >= 1) {
    t.upper.assign(static_cast<std::size_t>(i), GaussianRational(2));
    t.lower_full.assign(static_cast<std::size_t>(i), GaussianRational(1));
  } else if (i <= -1) {
    t.upper.assign(static_cast<std::size_t>(-i) + 1, GaussianRational(1));
    t.lower_full.assign(static_cast<std::size_t>(-i), GaussianRational(2));
    t.lower_full.push_back(GaussianRational(1));
  } else {
    t.upper.assign(1, GaussianRational(1));
    t.lower_full.assign(1, GaussianRational(1));
  }
  validate_term(t);
  return t;
}

HypergeometricTerm geometric_term() {
  HypergeometricTerm t;
  t.upper.assign(1, GaussianRational(1));
  t.lower_full.assign(1, GaussianRational(1));
  return t;
}

}  // namespace hecke
