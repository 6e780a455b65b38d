#pragma once

#include <cstdint>
#include <vector>

#include "hecke/power_series.hpp"
#include "hecke/scalar.hpp"

namespace hecke {

/// Symbolic hypergeometric term
///
///     c0 * x^shift * sum_k  (prod_i (upper_i)_k / prod_i (lower_full_i)_k) * (arg_scale * x)^k
///
/// lower_full always materializes the conventional extra lower parameter 1
/// that absorbs the 1/k! factor, so the coefficient formula above is the
/// whole story: there is no separate factorial. Invariants: lower_full is
/// nonempty, contains at least one entry equal to 1 (the k! slot), and no
/// entry is a nonpositive integer; arg_scale != 0. Upper entries may be
/// nonpositive integers (the series then terminates).
struct HypergeometricTerm {
  GaussianRational c0 = GaussianRational(1);
  std::int64_t shift = 0;
  std::vector<GaussianRational> upper;
  std::vector<GaussianRational> lower_full;
  GaussianRational arg_scale = GaussianRational(1);

  friend bool operator==(const HypergeometricTerm&, const HypergeometricTerm&) = default;
};

// Counts of parameters equal to 1 on each side; gamma_b is counted over
// lower_full (k! slot included).
struct GammaCounts {
  std::int64_t gamma_a = 0;
  std::int64_t gamma_b = 0;

  friend bool operator==(const GammaCounts&, const GammaCounts&) = default;
};

// Throws invalid_parameter when an invariant fails.
void validate_term(const HypergeometricTerm& t);

// Builds a term from the mathematical lower list (without the k! slot); the
// trailing 1 is materialized here. Validates.
HypergeometricTerm make_term(GaussianRational c0, std::int64_t shift,
                             std::vector<GaussianRational> upper,
                             std::vector<GaussianRational> lower,
                             GaussianRational arg_scale = GaussianRational(1));

// Ascending factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.
GaussianRational pochhammer(const GaussianRational& a, std::int64_t k);

// Right-hand side of the splitting identity
//   (a)_{kn} = n^{kn} * prod_{j=0}^{n-1} ((a+j)/n)_k ,
// which groups the factors of (a)_{kn} by residue class mod n.
GaussianRational pochhammer_split(const GaussianRational& a, std::int64_t n, std::int64_t k);

// Right-hand side of the offset splitting identity, for n not dividing j and
// r = n - 1 - (j mod n), N = n(k+1) - (j mod n) = nk + r + 1:
//   (a)_N = n^{nk} * (a)_{r+1} * prod_{i=r+1}^{r+n} ((a+i)/n)_k .
GaussianRational pochhammer_offset(const GaussianRational& a, std::int64_t n, std::int64_t k,
                                   std::int64_t j);

// Coefficient of x^(shift+k): c0 * arg_scale^k * prod (a_i)_k / prod (b_i)_k.
// Computed by direct Pochhammer products; to_series uses the term ratio
// recurrence instead, so the two are independent routes to the same numbers.
GaussianRational coefficient(const HypergeometricTerm& t, std::int64_t k);

// Truncated expansion with window length `order` starting at x^shift.
PowerSeries to_series(const HypergeometricTerm& t, std::int64_t order);

// Cancels equal upper/lower pairs (multiset cancellation) except that one
// lower entry equal to 1, the k! slot, is always retained; sorts both lists
// canonically. The generated series is unchanged to all orders.
HypergeometricTerm normalize(const HypergeometricTerm& t);

GammaCounts gamma_counts(const HypergeometricTerm& t);

// sum(upper) - sum(lower_full), over the materialized lists.
GaussianRational param_sum_delta(const HypergeometricTerm& t);

// |upper| = |lower_full|: the shape preserved by the U_n closed form.
bool is_balanced(const HypergeometricTerm& t);

// x * sum_k k^i x^k as a term: i >= 1 gives upper all 2s over lower all 1s,
// i <= -1 gives upper all 1s over lower all 2s (plus the k! slot), i = 0 the
// shifted geometric series.
HypergeometricTerm polylog_term(std::int64_t i);

// 1/(1-x) as a term: upper (1) over lower_full (1), shift 0.
HypergeometricTerm geometric_term();

}  // namespace hecke
