#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hecke/hypergeometric.hpp"
#include "hecke/power_series.hpp"

namespace hecke {

/// Outcome of testing U_n f = λ f coefficientwise on a known range.
struct EigenReport {
  bool is_eigen = false;
  std::optional<GaussianRational> eigenvalue;
  std::optional<GammaCounts> gamma;
  // First exponent e with (U_n f)(e) != λ f(e); absent when is_eigen or when
  // the series itself is identically zero on the checked range.
  std::optional<std::int64_t> witness;
  std::int64_t checked_to = 0;
};

enum class EigenKind { Geometric, RationalEuler, Polylog, NotEigen };

const char* eigen_kind_name(EigenKind k) noexcept;

/// Structural classification of an eigenfunction: Geometric is c/(1-x);
/// RationalEuler(a) generates sum k^a x^k (upper all 2s, lower all 1s);
/// Polylog(a) generates sum x^k / k^a (upper all 1s, lower 2s plus the k!
/// slot). `a` is 0 for Geometric and NotEigen.
struct EigenClass {
  EigenKind kind = EigenKind::NotEigen;
  std::int64_t a = 0;

  friend bool operator==(const EigenClass&, const EigenClass&) = default;
};

// Determines λ from the first nonzero coefficient ratio (U_n f)(e0) / f(e0)
// and verifies (U_n f)(e) = λ f(e) for every exponent on the common known
// range. Throws zero_series when f has no nonzero known coefficient,
// insufficient_order when fewer than 2 coefficients are comparable or the
// leading exponent lies beyond the comparable range.
EigenReport eigen_check_numeric(const PowerSeries& f, std::int64_t n);

// Structural + numeric classification of a term under U_n. The term is
// normalized first. Accepted shapes (arg_scale 1, c0 nonzero): shift 0 and
// geometric, or shift 1 and one of the RationalEuler/Polylog parameter
// patterns. On acceptance the eigenvalue n^(gamma_b - gamma_a) is
// cross-checked against prod (a_i)_{n-1} / prod (b_i)_{n-1} and against the
// numeric check to order 64; any disagreement aborts via std::logic_error.
// Rejected terms return NotEigen together with the honest numeric report
// (which can be is_eigen = true for degenerate inputs such as terminating
// series, where λ = 0 on the whole checked range).
std::pair<EigenClass, EigenReport> eigen_classify(const HypergeometricTerm& t, std::int64_t n);

// Multiset equality of {a_i - 1} ∪ {(b_i + l)/n : l = -1..n-2} and the same
// with the roles of upper and lower swapped. Requires a balanced term with
// shift 1; holds for every accepted eigen-shape.
bool root_multiset_check(const HypergeometricTerm& t, std::int64_t n);

// For each i in [i_lo, i_hi], numerically confirms that sum k^i x^k is an
// eigenfunction of U_n with eigenvalue n^i, using a series long enough that
// checked_to >= order. A failed confirmation aborts via std::logic_error.
std::vector<std::pair<std::int64_t, EigenReport>> spectrum_witness(std::int64_t n,
                                                                   std::int64_t i_lo,
                                                                   std::int64_t i_hi,
                                                                   std::int64_t order = 128);

// True iff eigen_classify yields the same non-NotEigen kind for every n in
// the list. Eigenness is n-independent, so a mixed outcome aborts via
// std::logic_error; on acceptance the coefficient law c_k = k^(gamma_b -
// gamma_a) c_1 is asserted for k up to 64.
bool simultaneous_eigen_check(const HypergeometricTerm& t, const std::vector<std::int64_t>& ns);

/// Outcome of testing whether c(m) = prod (a_i)_{m-1} / prod (b_i)_{m-1} is
/// completely multiplicative.
struct CmReport {
  bool is_cm = false;
  // Present when is_cm: c(m) = m^exponent for all checked m.
  std::optional<std::int64_t> exponent;
  // Present when !is_cm: lexicographically first (m, k) with
  // c(mk) != c(m) c(k).
  std::optional<std::pair<std::int64_t, std::int64_t>> witness;
};

// Checks c(mk) = c(m) c(k) for all 2 <= m, k with mk <= bound, and
// independently matches the normalized lists against the eigen shapes; the
// two verdicts must agree (std::logic_error otherwise). bound >= 4; lower
// entries must not be nonpositive integers.
CmReport multiplicative_classify(const std::vector<GaussianRational>& upper,
                                 const std::vector<GaussianRational>& lower_full,
                                 std::int64_t bound);

}  // namespace hecke
