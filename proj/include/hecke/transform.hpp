#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hecke/hypergeometric.hpp"

namespace hecke {

/// Result of rewriting U_n applied to a hypergeometric term as another
/// hypergeometric term. `output` is deliberately un-normalized so the raw
/// shape claims hold: |output.upper| = n·|input.upper| and
/// |output.lower_full| = n·|input.lower_full| (the last including the
/// re-designated k! slot). `r` = n − 1 − (shift mod n) is meaningful only
/// when !case_divides and is 0 otherwise.
struct TransformReport {
  HypergeometricTerm input;
  std::int64_t n = 1;
  bool case_divides = true;
  std::int64_t r = 0;
  HypergeometricTerm output;
};

// Parameter images for the case n | shift: every entry a contributes
// (a + l - 1)/n for l = 1..n, in input order. The k! slot's image at l = n is
// exactly 1 and becomes the output's k! slot. Throws invalid_parameter when a
// produced lower entry is a nonpositive integer (possible only for raw lists
// that would not pass validate_term).
std::pair<std::vector<GaussianRational>, std::vector<GaussianRational>> parameter_map_divides(
    const std::vector<GaussianRational>& upper, const std::vector<GaussianRational>& lower_full,
    std::int64_t n);

struct NondividesMap {
  std::vector<GaussianRational> upper;
  std::vector<GaussianRational> lower;
  std::int64_t r = 0;
};

// Parameter images for the case n ∤ shift: entry a contributes (a + r + l)/n
// for l = 1..n with r = n - 1 - (shift mod n). The k! slot's image at
// l = shift mod n is exactly 1. Throws invalid_operator when n | shift,
// invalid_parameter as above.
NondividesMap parameter_map_nondivides(const std::vector<GaussianRational>& upper,
                                       const std::vector<GaussianRational>& lower_full,
                                       std::int64_t n, std::int64_t j);

// Closed form for U_n on a hypergeometric term: the output term generates
// exactly the series u_apply(n, to_series(t, ·)). Case n | shift: new shift
// shift/n, parameters from parameter_map_divides, c0 unchanged. Case
// n ∤ shift: new shift 1 + floor(shift/n), parameters from
// parameter_map_nondivides, c0 multiplied by
// arg_scale^{r+1} · prod (a_i)_{r+1} / prod (b_i)_{r+1}. Both cases:
// arg_scale' = arg_scale^n · n^{n(p-q-1)} with p = |upper|,
// q + 1 = |lower_full|; for balanced terms the power of n is 1 and the
// output is balanced again.
TransformReport u_closed_form(std::int64_t n, const HypergeometricTerm& t);

// Verifies the parameter-sum identity for the case n | shift:
//   param_sum_delta(output) = param_sum_delta(t) + (n-1)(p-q-1)/2 .
// Throws invalid_operator unless n | t.shift.
bool sum_invariant_check(const HypergeometricTerm& t, std::int64_t n);

}  // namespace hecke
