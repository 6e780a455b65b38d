#include "hecke/power_series.hpp"

#include <algorithm>
#include <string>

namespace hecke {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

void require_op(std::int64_t n) {
  if (n < 1) fail(errc::invalid_operator, "operator index must be a positive integer, got " + std::to_string(n));
}

}  // namespace

GaussianRational PowerSeries::coeff(std::int64_t e) const {
  if (e < shift) return GaussianRational(0);
  if (e >= known_to())
    fail(errc::truncation_too_short,
         "coefficient at exponent " + std::to_string(e) + " requested, series known to " +
             std::to_string(known_to()));
  return coeffs[static_cast<std::size_t>(e - shift)];
}

PowerSeries u_apply(std::int64_t n, const PowerSeries& f) {
  require_op(n);
  PowerSeries out;
  out.shift = ceil_div(f.shift, n);
  std::int64_t kt = ceil_div(f.known_to(), n);
  out.coeffs.reserve(static_cast<std::size_t>(kt - out.shift));
  for (std::int64_t m = out.shift; m < kt; ++m) out.coeffs.push_back(f.coeff(n * m));
  return out;
}

PowerSeries v_apply(std::int64_t n, const PowerSeries& f) {
  require_op(n);
  PowerSeries out;
  out.shift = n * f.shift;
  if (f.coeffs.empty()) return out;
  std::int64_t kt = n * (f.known_to() - 1) + 1;
  out.coeffs.assign(static_cast<std::size_t>(kt - out.shift), GaussianRational(0));
  for (std::size_t t = 0; t < f.coeffs.size(); ++t)
    out.coeffs[static_cast<std::size_t>(n) * t] = f.coeffs[t];
  return out;
}

PowerSeries hadamard(const PowerSeries& f, const PowerSeries& g) {
  PowerSeries out;
  std::int64_t kt = std::min(f.known_to(), g.known_to());
  out.shift = std::min(std::max(f.shift, g.shift), kt);
  out.coeffs.reserve(static_cast<std::size_t>(kt - out.shift));
  for (std::int64_t e = out.shift; e < kt; ++e) out.coeffs.push_back(f.coeff(e) * g.coeff(e));
  return out;
}

std::vector<GaussianRational> inner_product(const PowerSeries& f, const PowerSeries& g) {
  std::int64_t kt = std::min(f.known_to(), g.known_to());
  std::vector<GaussianRational> s;
  s.reserve(static_cast<std::size_t>(std::max<std::int64_t>(kt, 0)));
  for (std::int64_t k = 0; k < kt; ++k) s.push_back(f.coeff(k) * conj(g.coeff(k)));
  return s;
}

bool adjoint_check(std::int64_t n, const PowerSeries& f, const PowerSeries& g) {
  require_op(n);
  std::vector<GaussianRational> lhs = inner_product(f, v_apply(n, g));
  std::vector<GaussianRational> rhs = inner_product(u_apply(n, f), g);
  // rhs entry k lives at index n*k after R -> R^n; exponents past n*(|rhs|-1)
  // are beyond its known range.
  std::int64_t m_known =
      rhs.empty() ? 0 : n * (static_cast<std::int64_t>(rhs.size()) - 1) + 1;
  std::int64_t m = std::min<std::int64_t>(static_cast<std::int64_t>(lhs.size()), m_known);
  for (std::int64_t k = 0; k < m; ++k) {
    GaussianRational expect =
        (k % n == 0) ? rhs[static_cast<std::size_t>(k / n)] : GaussianRational(0);
    if (!(lhs[static_cast<std::size_t>(k)] == expect)) return false;
  }
  return true;
}

PowerSeries euler_apply(const PowerSeries& f) {
  PowerSeries out;
  out.shift = f.shift;
  out.coeffs.reserve(f.coeffs.size());
  for (std::size_t t = 0; t < f.coeffs.size(); ++t)
    out.coeffs.push_back(GaussianRational(f.shift + static_cast<std::int64_t>(t)) * f.coeffs[t]);
  return normalized(out);
}

PowerSeries polylog_series(std::int64_t i, std::int64_t order) {
  if (order < 1) fail(errc::insufficient_order, "series order must be >= 1");
  PowerSeries out;
  out.shift = 1;
  out.coeffs.reserve(static_cast<std::size_t>(order - 1));
  for (std::int64_t k = 1; k < order; ++k) out.coeffs.push_back(int_pow(GaussianRational(k), i));
  return out;
}

PowerSeries vnun_projection(std::int64_t n, const PowerSeries& f) {
  require_op(n);
  PowerSeries out;
  out.shift = f.shift;
  out.coeffs.reserve(f.coeffs.size());
  for (std::size_t t = 0; t < f.coeffs.size(); ++t) {
    std::int64_t e = f.shift + static_cast<std::int64_t>(t);
    out.coeffs.push_back(e % n == 0 ? f.coeffs[t] : GaussianRational(0));
  }
  return out;
}

PowerSeries add(const PowerSeries& f, const PowerSeries& g) {
  PowerSeries out;
  std::int64_t kt = std::min(f.known_to(), g.known_to());
  out.shift = std::min({f.shift, g.shift, kt});
  out.coeffs.reserve(static_cast<std::size_t>(kt - out.shift));
  for (std::int64_t e = out.shift; e < kt; ++e) out.coeffs.push_back(f.coeff(e) + g.coeff(e));
  return out;
}

PowerSeries scale(const GaussianRational& c, const PowerSeries& f) {
  PowerSeries out;
  out.shift = f.shift;
  out.coeffs.reserve(f.coeffs.size());
  for (const auto& x : f.coeffs) out.coeffs.push_back(c * x);
  return out;
}

std::optional<std::int64_t> first_mismatch(const PowerSeries& f, const PowerSeries& g,
                                           std::int64_t M) {
  if (M > f.known_to() || M > g.known_to())
    fail(errc::truncation_too_short,
         "comparison to exponent " + std::to_string(M) + " exceeds a known range (" +
             std::to_string(f.known_to()) + ", " + std::to_string(g.known_to()) + ")");
  for (std::int64_t e = 0; e < M; ++e)
    if (!(f.coeff(e) == g.coeff(e))) return e;
  return std::nullopt;
}

bool equal_to_order(const PowerSeries& f, const PowerSeries& g, std::int64_t M) {
  return !first_mismatch(f, g, M).has_value();
}

PowerSeries normalized(const PowerSeries& f) {
  auto it = std::find_if(f.coeffs.begin(), f.coeffs.end(),
                         [](const GaussianRational& c) { return !c.is_zero(); });
  if (it == f.coeffs.end()) {
    PowerSeries zero;
    zero.coeffs.assign(static_cast<std::size_t>(f.known_to()), GaussianRational(0));
    return zero;
  }
  PowerSeries out;
  out.shift = f.shift + (it - f.coeffs.begin());
  out.coeffs.assign(it, f.coeffs.end());
  return out;
}

PowerSeries truncated(const PowerSeries& f, std::int64_t order) {
  if (order >= f.known_to()) return f;
  PowerSeries out;
  if (order <= f.shift) {
    out.shift = std::max<std::int64_t>(order, 0);
    return out;
  }
  out.shift = f.shift;
  out.coeffs.assign(f.coeffs.begin(), f.coeffs.begin() + (order - f.shift));
  return out;
}

PowerSeries geometric_series(std::int64_t order) {
  if (order < 1) fail(errc::insufficient_order, "series order must be >= 1");
  PowerSeries out;
  out.coeffs.assign(static_cast<std::size_t>(order), GaussianRational(1));
  return out;
}

}  // namespace hecke
