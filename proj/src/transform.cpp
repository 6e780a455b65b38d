#include "hecke/transform.hpp"

#include <string>

#include "hecke/error.hpp"

namespace hecke {

namespace {

// Mathematical residue in [0, n), also for negative j.
std::int64_t residue(std::int64_t j, std::int64_t n) { return ((j % n) + n) % n; }

std::int64_t floor_div(std::int64_t j, std::int64_t n) { return (j - residue(j, n)) / n; }

// Shared mapper: images (a + offset + l)/n for l = 1..n per entry.
// Lower images are checked against the nonpositive-integer ban.
std::vector<GaussianRational> map_list(const std::vector<GaussianRational>& params,
                                       std::int64_t offset, std::int64_t n, bool is_lower) {
  std::vector<GaussianRational> out;
  out.reserve(params.size() * static_cast<std::size_t>(n));
  const GaussianRational gn{make_rational(n)};
  for (const auto& p : params) {
    for (std::int64_t l = 1; l <= n; ++l) {
      GaussianRational image = (p + GaussianRational(make_rational(offset + l))) / gn;
      if (is_lower && is_nonpositive_integer(image)) {
        fail(errc::invalid_parameter, "lower parameter " + format_scalar(p) + " maps to " +
                                          format_scalar(image) + " at l=" + std::to_string(l));
      }
      out.push_back(std::move(image));
    }
  }
  return out;
}

}  // namespace

std::pair<std::vector<GaussianRational>, std::vector<GaussianRational>> parameter_map_divides(
    const std::vector<GaussianRational>& upper, const std::vector<GaussianRational>& lower_full,
    std::int64_t n) {
  if (n < 1) fail(errc::invalid_operator, "operator index must be positive");
  return {map_list(upper, -1, n, false), map_list(lower_full, -1, n, true)};
}

NondividesMap parameter_map_nondivides(const std::vector<GaussianRational>& upper,
                                       const std::vector<GaussianRational>& lower_full,
                                       std::int64_t n, std::int64_t j) {
  if (n < 1) fail(errc::invalid_operator, "operator index must be positive");
  const std::int64_t em = residue(j, n);
  if (em == 0) {
    fail(errc::invalid_operator, "offset map requires an exponent not divisible by n");
  }
  NondividesMap out;
  out.r = n - 1 - em;
  out.upper = map_list(upper, out.r, n, false);
  out.lower = map_list(lower_full, out.r, n, true);
  return out;
}

TransformReport u_closed_form(std::int64_t n, const HypergeometricTerm& t) {
  if (n < 1) fail(errc::invalid_operator, "operator index must be positive");
  validate_term(t);

  TransformReport rep;
  rep.input = t;
  rep.n = n;

  const std::int64_t j = t.shift;
  const std::int64_t em = residue(j, n);
  rep.case_divides = (em == 0);

  HypergeometricTerm out;
  if (rep.case_divides) {
    out.shift = j / n;
    auto mapped = parameter_map_divides(t.upper, t.lower_full, n);
    out.upper = std::move(mapped.first);
    out.lower_full = std::move(mapped.second);
    out.c0 = t.c0;
  } else {
    out.shift = 1 + floor_div(j, n);
    NondividesMap mapped = parameter_map_nondivides(t.upper, t.lower_full, n, j);
    rep.r = mapped.r;
    out.upper = std::move(mapped.upper);
    out.lower_full = std::move(mapped.lower);
    // The picked-out leading coefficient of the decimated series: the
    // argument scale and each Pochhammer symbol advance r+1 steps before the
    // n-fold splitting takes over.
    GaussianRational c = t.c0 * int_pow(t.arg_scale, rep.r + 1);
    for (const auto& a : t.upper) c *= pochhammer(a, rep.r + 1);
    for (const auto& b : t.lower_full) c /= pochhammer(b, rep.r + 1);
    out.c0 = std::move(c);
  }

  const std::int64_t p = static_cast<std::int64_t>(t.upper.size());
  const std::int64_t q1 = static_cast<std::int64_t>(t.lower_full.size());
  out.arg_scale = int_pow(t.arg_scale, n) *
                  int_pow(GaussianRational(make_rational(n)), n * (p - q1));

  validate_term(out);
  rep.output = std::move(out);
  return rep;
}

bool sum_invariant_check(const HypergeometricTerm& t, std::int64_t n) {
  if (n < 1) fail(errc::invalid_operator, "operator index must be positive");
  if (residue(t.shift, n) != 0) {
    fail(errc::invalid_operator, "sum invariant is stated for exponents divisible by n");
  }
  TransformReport rep = u_closed_form(n, t);
  const std::int64_t p = static_cast<std::int64_t>(t.upper.size());
  const std::int64_t q1 = static_cast<std::int64_t>(t.lower_full.size());
  const GaussianRational correction{make_rational((n - 1) * (p - q1), 2)};
  return param_sum_delta(rep.output) == param_sum_delta(t) + correction;
}

}  // namespace hecke
