#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hecke/scalar.hpp"

namespace hecke {

/// Truncated shifted formal power series
///
///     x^shift * (coeffs[0] + coeffs[1] x + coeffs[2] x^2 + ...)
///
/// coeffs[t] is the coefficient of x^(shift + t). Exponents below shift are
/// zero; exponents at or beyond known_to() = shift + coeffs.size() are
/// unknown (the truncation boundary). Operations track known_to explicitly
/// and never fabricate coefficients beyond it. The zero series is written
/// with shift 0 and an all-zero window; normalization to the true vanishing
/// order is an explicit operation, not an invariant.
struct PowerSeries {
  std::int64_t shift = 0;
  std::vector<GaussianRational> coeffs;

  std::int64_t known_to() const { return shift + static_cast<std::int64_t>(coeffs.size()); }

  // Coefficient of x^e; throws truncation_too_short for e >= known_to().
  GaussianRational coeff(std::int64_t e) const;

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.shift == b.shift && a.coeffs == b.coeffs;
  }
};

// Keeps every n-th coefficient: output coefficient at exponent m is the input
// coefficient at exponent n*m. Output shift = ceil(shift/n), known_to =
// ceil(known_to/n). n >= 1.
PowerSeries u_apply(std::int64_t n, const PowerSeries& f);

// Substitution x -> x^n: output coefficient at n*k is the input coefficient
// at k, all others zero. Output shift = n*shift, known_to = n*(known_to-1)+1
// on a nonempty window. n >= 1.
PowerSeries v_apply(std::int64_t n, const PowerSeries& f);

// Coefficientwise product; known_to is the smaller of the two.
PowerSeries hadamard(const PowerSeries& f, const PowerSeries& g);

// Sequence s_k = c_k * conj(d_k) for k < min(known_to): the coefficients of
// the polynomial in R^2 given by pairing f against g on the circle of radius
// R (the constant 2*pi*i unit is a documented convention, not stored).
std::vector<GaussianRational> inner_product(const PowerSeries& f, const PowerSeries& g);

// Verifies <f, V_n g>_R = <U_n f, g>_{R^n} as R^2-coefficient sequences on
// the common known range: the right-hand sequence has its index k re-placed
// at n*k (the substitution R -> R^n).
bool adjoint_check(std::int64_t n, const PowerSeries& f, const PowerSeries& g);

// x d/dx: coefficient at exponent e becomes e * c_e; known_to unchanged,
// leading zeros stripped so the shift is recomputed.
PowerSeries euler_apply(const PowerSeries& f);

// sum_{k>=1} k^i x^k truncated to known_to = order (order >= 1).
PowerSeries polylog_series(std::int64_t i, std::int64_t order);

// V_n(U_n(f)): keeps coefficients at exponents divisible by n, zeroes the
// rest. Known range is preserved (a zeroed coefficient is known exactly),
// and the operation is idempotent.
PowerSeries vnun_projection(std::int64_t n, const PowerSeries& f);

PowerSeries add(const PowerSeries& f, const PowerSeries& g);
PowerSeries scale(const GaussianRational& c, const PowerSeries& f);

// Exact comparison of all coefficients at exponents < M; M must not exceed
// either known range (throws truncation_too_short).
bool equal_to_order(const PowerSeries& f, const PowerSeries& g, std::int64_t M);
std::optional<std::int64_t> first_mismatch(const PowerSeries& f, const PowerSeries& g,
                                           std::int64_t M);

// Strips known leading zeros so a nonzero window starts with a nonzero
// coefficient; an all-zero window collapses to the canonical zero form
// (shift 0, zeros up to the same known_to).
PowerSeries normalized(const PowerSeries& f);

// Forgets coefficients at exponents >= order (known_to becomes min(known_to,
// order)); used to trim display output.
PowerSeries truncated(const PowerSeries& f, std::int64_t order);

// 1 + x + x^2 + ... with known_to = order.
PowerSeries geometric_series(std::int64_t order);

}  // namespace hecke
