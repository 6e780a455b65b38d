#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hecke {

/// One failed randomized trial. `reproduction` is a complete CLI invocation
/// that replays the failing trial (as the last trial of a shorter run; trial
/// streams are derived independently per index, so truncating a run never
/// changes earlier trials).
struct TrialFailure {
  std::uint64_t trial = 0;
  std::string description;
  std::string reproduction;
};

struct VerificationRun {
  std::string suite;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::int64_t order = 0;
  std::vector<TrialFailure> failures;
  bool ok = true;
};

/// Absent fields fall back to per-suite defaults (see run_verify).
struct VerifyOptions {
  std::optional<std::uint64_t> trials;
  std::optional<std::int64_t> order;
  std::uint64_t seed = 0;
};

/// Runs one named property suite, or every suite in a fixed order for
/// "all". Outcomes depend only on (suite, seed, trials, order), never on
/// wall clock or environment, so equal inputs produce identical reports.
///
/// Suites and their (trials, order) defaults:
///   algebra        (100, 240)  operator composition and projection laws
///   pochhammer     (500, 0)    rising-factorial splitting identities;
///                              the order parameter is unused
///   transform      (300, 40)   closed-form U_n images against the
///                              coefficient-filter oracle, plus the
///                              parameter-sum invariant on aligned shifts
///   adjoint        (200, 48)   inner-product adjunction between U_n and V_n
///   eigen          (200, 64)   classifier / numeric / root-multiset
///                              agreement on planted and perturbed inputs
///   spectrum       (fixed 45 grid, 128)  eigenvalue n^i across n and i;
///                              the trials parameter is ignored
///   multiplicative (200, 24)   bounded multiplicativity of coefficient
///                              ratios against shape classification; order
///                              doubles as the multiplicativity bound
///
/// Unknown suite names throw invalid_parameter.
std::vector<VerificationRun> run_verify(const std::string& suite, const VerifyOptions& opts);

}  // namespace hecke
