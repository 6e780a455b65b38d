#include "hecke/spectral.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hecke/error.hpp"

namespace hecke {

namespace {

// Matches sorted, normalized parameter lists against the two shift-1 eigen
// shapes. Geometric (shift 0) is handled by the callers.
EigenClass shape_class(const std::vector<GaussianRational>& upper,
                       const std::vector<GaussianRational>& lower_full) {
  const GaussianRational one(1);
  const GaussianRational two(2);
  const auto all_equal = [](const std::vector<GaussianRational>& v, const GaussianRational& x) {
    return std::all_of(v.begin(), v.end(), [&](const GaussianRational& e) { return e == x; });
  };
  const auto count_of = [](const std::vector<GaussianRational>& v, const GaussianRational& x) {
    return static_cast<std::int64_t>(std::count(v.begin(), v.end(), x));
  };

  if (!upper.empty() && all_equal(upper, two) && all_equal(lower_full, one) &&
      upper.size() == lower_full.size()) {
    return {EigenKind::RationalEuler, static_cast<std::int64_t>(upper.size())};
  }
  if (!upper.empty() && all_equal(upper, one) && upper.size() == lower_full.size() &&
      count_of(lower_full, one) == 1 &&
      count_of(lower_full, two) == static_cast<std::int64_t>(lower_full.size()) - 1) {
    return {EigenKind::Polylog, static_cast<std::int64_t>(upper.size()) - 1};
  }
  return {EigenKind::NotEigen, 0};
}

GaussianRational pochhammer_product(const std::vector<GaussianRational>& v, std::int64_t k) {
  GaussianRational acc(1);
  for (const auto& x : v) acc *= pochhammer(x, k);
  return acc;
}

}  // namespace

const char* eigen_kind_name(EigenKind k) noexcept {
  switch (k) {
    case EigenKind::Geometric:
      return "Geometric";
    case EigenKind::RationalEuler:
      return "RationalEuler";
    case EigenKind::Polylog:
      return "Polylog";
    case EigenKind::NotEigen:
      return "NotEigen";
  }
  return "NotEigen";
}

EigenReport eigen_check_numeric(const PowerSeries& f, std::int64_t n) {
  if (n < 2) fail(errc::invalid_operator, "eigen check requires n >= 2");

  std::int64_t e0 = f.shift;
  bool found = false;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (!f.coeffs[i].is_zero()) {
      e0 = f.shift + static_cast<std::int64_t>(i);
      found = true;
      break;
    }
  }
  if (!found) fail(errc::zero_series, "series has no nonzero known coefficient");

  const PowerSeries uf = u_apply(n, f);
  const std::int64_t M = std::min(uf.known_to(), f.known_to());
  if (M < 2) fail(errc::insufficient_order, "fewer than 2 comparable coefficients");
  if (e0 >= M) {
    fail(errc::insufficient_order,
         "leading exponent " + std::to_string(e0) + " is beyond the comparable range");
  }

  EigenReport rep;
  rep.checked_to = M;
  const GaussianRational lambda = uf.coeff(e0) / f.coeff(e0);

  const std::int64_t lo = std::min(f.shift, uf.shift);
  for (std::int64_t e = lo; e < M; ++e) {
    if (uf.coeff(e) != lambda * f.coeff(e)) {
      rep.is_eigen = false;
      rep.witness = e;
      return rep;
    }
  }
  rep.is_eigen = true;
  rep.eigenvalue = lambda;
  return rep;
}

std::pair<EigenClass, EigenReport> eigen_classify(const HypergeometricTerm& t, std::int64_t n) {
  if (n < 2) fail(errc::invalid_operator, "eigen classification requires n >= 2");
  const HypergeometricTerm nt = normalize(t);
  const GammaCounts gamma = gamma_counts(nt);

  if (nt.c0.is_zero()) {
    EigenReport rep;
    rep.is_eigen = false;
    rep.gamma = gamma;
    rep.checked_to = 0;
    return {EigenClass{EigenKind::NotEigen, 0}, rep};
  }

  EigenReport numeric = eigen_check_numeric(to_series(nt, 64 * n), n);
  numeric.gamma = gamma;

  EigenClass cls{EigenKind::NotEigen, 0};
  const bool plain = nt.arg_scale == GaussianRational(1);
  if (plain && nt.shift == 0) {
    if (nt.upper == std::vector<GaussianRational>{GaussianRational(1)} &&
        nt.lower_full == std::vector<GaussianRational>{GaussianRational(1)}) {
      cls = {EigenKind::Geometric, 0};
    }
  } else if (plain && nt.shift == 1) {
    cls = shape_class(nt.upper, nt.lower_full);
  }
  if (cls.kind == EigenKind::NotEigen) return {cls, numeric};

  // Accepted: the three eigenvalue routes must coincide exactly.
  const GaussianRational gn{make_rational(n)};
  const GaussianRational lambda_structural = int_pow(gn, gamma.gamma_b - gamma.gamma_a);
  const GaussianRational lambda_formula =
      pochhammer_product(nt.upper, n - 1) / pochhammer_product(nt.lower_full, n - 1);
  if (!numeric.is_eigen || !numeric.eigenvalue.has_value() ||
      *numeric.eigenvalue != lambda_structural || lambda_formula != lambda_structural) {
    throw std::logic_error("eigenvalue routes disagree for an accepted eigen shape");
  }
  // Product identity: n^gamma_a prod (a_i)_{n-1} = n^gamma_b prod (b_i)_{n-1}.
  if (int_pow(gn, gamma.gamma_a) * pochhammer_product(nt.upper, n - 1) !=
      int_pow(gn, gamma.gamma_b) * pochhammer_product(nt.lower_full, n - 1)) {
    throw std::logic_error("eigen product identity violated for an accepted shape");
  }
  if (!is_balanced(nt)) {
    throw std::logic_error("accepted eigen shape is not balanced");
  }
  return {cls, numeric};
}

bool root_multiset_check(const HypergeometricTerm& t, std::int64_t n) {
  if (n < 1) fail(errc::invalid_operator, "root multiset check requires n >= 1");
  if (!is_balanced(t) || t.shift != 1) {
    fail(errc::invalid_operator, "root multiset check requires a balanced term with shift 1");
  }
  const GaussianRational gn{make_rational(n)};
  const GaussianRational one(1);
  std::vector<GaussianRational> lhs, rhs;
  for (const auto& a : t.upper) {
    lhs.push_back(a - one);
    for (std::int64_t l = -1; l <= n - 2; ++l) {
      rhs.push_back((a + GaussianRational(make_rational(l))) / gn);
    }
  }
  for (const auto& b : t.lower_full) {
    rhs.push_back(b - one);
    for (std::int64_t l = -1; l <= n - 2; ++l) {
      lhs.push_back((b + GaussianRational(make_rational(l))) / gn);
    }
  }
  std::sort(lhs.begin(), lhs.end(), scalar_less);
  std::sort(rhs.begin(), rhs.end(), scalar_less);
  return lhs == rhs;
}

std::vector<std::pair<std::int64_t, EigenReport>> spectrum_witness(std::int64_t n,
                                                                   std::int64_t i_lo,
                                                                   std::int64_t i_hi,
                                                                   std::int64_t order) {
  if (n < 2) fail(errc::invalid_operator, "spectrum witnesses require n >= 2");
  if (order < 2) fail(errc::insufficient_order, "spectrum witnesses require order >= 2");
  std::vector<std::pair<std::int64_t, EigenReport>> out;
  for (std::int64_t i = i_lo; i <= i_hi; ++i) {
    EigenReport rep = eigen_check_numeric(polylog_series(i, n * order), n);
    const GaussianRational expected = int_pow(GaussianRational(make_rational(n)), i);
    if (!rep.is_eigen || !rep.eigenvalue.has_value() || *rep.eigenvalue != expected) {
      throw std::logic_error("power-sum series failed its spectrum witness at i=" +
                             std::to_string(i));
    }
    out.emplace_back(i, std::move(rep));
  }
  return out;
}

bool simultaneous_eigen_check(const HypergeometricTerm& t, const std::vector<std::int64_t>& ns) {
  if (ns.empty()) fail(errc::invalid_operator, "simultaneous check requires at least one n");
  for (std::int64_t n : ns) {
    if (n < 2) fail(errc::invalid_operator, "simultaneous check requires every n >= 2");
  }
  std::vector<EigenClass> classes;
  classes.reserve(ns.size());
  for (std::int64_t n : ns) {
    classes.push_back(eigen_classify(t, n).first);
  }
  const bool first_accepted = classes.front().kind != EigenKind::NotEigen;
  for (const auto& c : classes) {
    if ((c.kind != EigenKind::NotEigen) != first_accepted || (first_accepted && c != classes.front())) {
      throw std::logic_error("eigen structure unexpectedly depends on n");
    }
  }
  if (!first_accepted) return false;

  // Coefficient law of a simultaneous eigenfunction: c_k = k^(gamma_b -
  // gamma_a) c_1 for k >= 1.
  const HypergeometricTerm nt = normalize(t);
  const GammaCounts gamma = gamma_counts(nt);
  const std::int64_t e = gamma.gamma_b - gamma.gamma_a;
  const PowerSeries f = to_series(nt, 66);
  const GaussianRational c1 = f.coeff(1);
  for (std::int64_t k = 1; k <= 64; ++k) {
    if (f.coeff(k) != int_pow(GaussianRational(make_rational(k)), e) * c1) {
      throw std::logic_error("simultaneous eigenfunction violates c_k = k^e c_1");
    }
  }
  return true;
}

CmReport multiplicative_classify(const std::vector<GaussianRational>& upper,
                                 const std::vector<GaussianRational>& lower_full,
                                 std::int64_t bound) {
  if (bound < 4) fail(errc::invalid_parameter, "bound must be at least 4");
  for (const auto& b : lower_full) {
    if (is_nonpositive_integer(b)) {
      fail(errc::invalid_parameter,
           "lower parameter " + format_scalar(b) + " is a nonpositive integer");
    }
  }

  // c(m) = prod (a_i)_{m-1} / prod (b_i)_{m-1}, advanced incrementally via
  // c(m+1) = c(m) prod (a_i + m - 1) / prod (b_i + m - 1).
  std::vector<GaussianRational> c(static_cast<std::size_t>(bound) + 1, GaussianRational(1));
  for (std::int64_t m = 1; m < bound; ++m) {
    GaussianRational step(1);
    const GaussianRational gm{make_rational(m - 1)};
    for (const auto& a : upper) step *= a + gm;
    for (const auto& b : lower_full) step /= b + gm;
    c[static_cast<std::size_t>(m + 1)] = c[static_cast<std::size_t>(m)] * step;
  }

  CmReport rep;
  std::optional<std::pair<std::int64_t, std::int64_t>> witness;
  for (std::int64_t m = 2; m * 2 <= bound && !witness; ++m) {
    for (std::int64_t k = 2; m * k <= bound; ++k) {
      if (c[static_cast<std::size_t>(m * k)] !=
          c[static_cast<std::size_t>(m)] * c[static_cast<std::size_t>(k)]) {
        witness = {m, k};
        break;
      }
    }
  }

  // Independent structural verdict: the normalized lists must be one of the
  // eigen shapes (the k!-slot form of the geometric counts as Polylog(0)).
  bool structural = false;
  std::int64_t exponent = 0;
  if (std::find(lower_full.begin(), lower_full.end(), GaussianRational(1)) != lower_full.end()) {
    HypergeometricTerm probe;
    probe.shift = 1;
    probe.upper = upper;
    probe.lower_full = lower_full;
    const HypergeometricTerm nt = normalize(probe);
    if (shape_class(nt.upper, nt.lower_full).kind != EigenKind::NotEigen) {
      structural = true;
      const GammaCounts gamma = gamma_counts(nt);
      exponent = gamma.gamma_b - gamma.gamma_a;
    }
  }

  if (structural == witness.has_value()) {
    throw std::logic_error("bounded multiplicativity and shape classification disagree");
  }

  rep.is_cm = structural;
  if (rep.is_cm) {
    rep.exponent = exponent;
    for (std::int64_t m = 1; m <= bound; ++m) {
      if (c[static_cast<std::size_t>(m)] !=
          int_pow(GaussianRational(make_rational(m)), exponent)) {
        throw std::logic_error("multiplicative coefficients are not the expected power of m");
      }
    }
  } else {
    rep.witness = witness;
  }
  return rep;
}

}  // namespace hecke
