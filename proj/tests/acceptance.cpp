// Acceptance harness: end-to-end checks over the built engine, one line per
// criterion.  Run through ctest (which points HECKE_BIN at the CLI binary) or
// by hand:
//
//   HECKE_BIN=build/hecke ./acceptance
//
// Exit status is 0 only when every criterion passes.
#include <sys/wait.h>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hecke/hypergeometric.hpp"
#include "hecke/power_series.hpp"
#include "hecke/randgen.hpp"
#include "hecke/scalar.hpp"
#include "hecke/spectral.hpp"
#include "hecke/transform.hpp"
#include "hecke/verify.hpp"
#include "json.hpp"

using namespace hecke;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("HECKE_BIN");
  if (bin == nullptr) return {-2, "HECKE_BIN is not set"};
  const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-3, "popen failed"};
  RunResult r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  if (status >= 0 && WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// Library verification suites are run once each (default options, seed 0) and
// shared between the criteria that consult them.
const VerificationRun& suite(const std::string& name) {
  static std::map<std::string, VerificationRun> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    std::vector<VerificationRun> runs = run_verify(name, VerifyOptions{});
    it = cache.emplace(name, runs.at(0)).first;
  }
  return it->second;
}

std::string suite_blurb(const VerificationRun& run) {
  char buf[160];
  if (run.ok) {
    std::snprintf(buf, sizeof buf, "%llu trials at order %lld, no failures",
                  static_cast<unsigned long long>(run.trials),
                  static_cast<long long>(run.order));
    return buf;
  }
  std::string s = std::to_string(run.failures.size()) + " failures; first: ";
  s += run.failures.empty() ? std::string("?") : run.failures.front().description;
  return s;
}

bool all_pass = true;

void criterion(int id, const std::function<std::pair<bool, std::string>()>& body) {
  bool pass = false;
  std::string note;
  try {
    std::pair<bool, std::string> r = body();
    pass = r.first;
    note = r.second;
  } catch (const std::exception& e) {
    note = std::string("unexpected exception: ") + e.what();
  }
  if (note.size() > 240) note = note.substr(0, 240) + "...";
  std::printf("criterion %d: %s - %s\n", id, pass ? "PASS" : "FAIL",
              note.c_str());
  std::fflush(stdout);
  all_pass = all_pass && pass;
}

GaussianRational gv(long n, long d = 1) {
  return GaussianRational(make_rational(n, d));
}

}  // namespace

int main() {
  // 1. The dilogarithm is recognized as a U_2 eigenfunction with eigenvalue
  //    1/4 through the CLI, to order >= 128, in under a second.
  criterion(1, []() -> std::pair<bool, std::string> {
    const auto t0 = std::chrono::steady_clock::now();
    const RunResult r = run_cli("eigen 'polylog(-2)' --n 2 --order 128");
    const double secs = seconds_since(t0);
    if (r.exit_code != 0) return std::make_pair(false, "exit code " + std::to_string(r.exit_code) + " " + r.out);
    const json j = json::parse(r.out);
    const bool pass = j.at("is_eigen") == true && j.at("eigenvalue") == "1/4" &&
                      j.at("checked_to").get<long long>() >= 128 &&
                      j.at("class").at("kind") == "Polylog" &&
                      j.at("class").at("a") == 2 && secs < 1.0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "eigenvalue %s at n=2, checked to %lld, class %s(%lld), %.2fs",
                  j.at("eigenvalue").get<std::string>().c_str(),
                  j.at("checked_to").get<long long>(),
                  j.at("class").at("kind").get<std::string>().c_str(),
                  j.at("class").at("a").get<long long>(), secs);
    return std::make_pair(pass, std::string(buf));
  });

  // 2. The eigenvalue grid n in {2,3,4,5,7} x exponent -4..4 is verified in
  //    under five seconds (45 checks at the suite's default order).
  criterion(2, []() -> std::pair<bool, std::string> {
    const auto t0 = std::chrono::steady_clock::now();
    const RunResult r = run_cli("verify --suite spectrum");
    const double secs = seconds_since(t0);
    if (r.exit_code != 0) return std::make_pair(false, "exit code " + std::to_string(r.exit_code));
    const json j = json::parse(r.out);
    const bool pass = j.at("ok") == true && j.at("trials") == 45 &&
                      j.at("failures").empty() && secs < 5.0;
    char buf[120];
    std::snprintf(buf, sizeof buf, "%lld grid cells at order %lld in %.2fs",
                  j.at("trials").get<long long>(),
                  j.at("order").get<long long>(), secs);
    return std::make_pair(pass, std::string(buf));
  });

  // 3. Eigenfunction recognition: the randomized suite passes, and the
  //    dilogarithm term classifies as Polylog(2) with unit counts (3,1).
  criterion(3, []() -> std::pair<bool, std::string> {
    const VerificationRun& run = suite("eigen");
    const auto [cls, rep] = eigen_classify(polylog_term(-2), 2);
    const bool li2 = cls.kind == EigenKind::Polylog && cls.a == 2 &&
                     rep.is_eigen && rep.eigenvalue &&
                     *rep.eigenvalue == gv(1, 4) && rep.gamma &&
                     rep.gamma->gamma_a == 3 && rep.gamma->gamma_b == 1;
    return std::make_pair(run.ok && li2,
                          "suite: " + suite_blurb(run) +
                              (li2 ? "; Li_2 -> Polylog(2), gamma (3,1)"
                                   : "; Li_2 misclassified"));
  });

  // 4. Closed-form transformation suite: 300 randomized terms cross-checked
  //    against direct coefficient extraction in under a minute.
  criterion(4, []() -> std::pair<bool, std::string> {
    const auto t0 = std::chrono::steady_clock::now();
    const VerificationRun& run = suite("transform");
    const double secs = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s, %.2fs", suite_blurb(run).c_str(), secs);
    return std::make_pair(run.ok && run.trials == 300 && secs < 60.0,
                          std::string(buf));
  });

  // 5. Operator algebra laws (composition, inversion, gcd commutation,
  //    factorization) hold on randomized series.
  criterion(5, []() -> std::pair<bool, std::string> {
    const VerificationRun& run = suite("algebra");
    return std::make_pair(run.ok, suite_blurb(run));
  });

  // 6. Pochhammer splitting and offset identities hold on randomized
  //    parameters.
  criterion(6, []() -> std::pair<bool, std::string> {
    const VerificationRun& run = suite("pochhammer");
    return std::make_pair(run.ok, suite_blurb(run));
  });

  // 7. The adjoint pairing <f, V_n g> = <U_n f, g> holds on randomized
  //    series.
  criterion(7, []() -> std::pair<bool, std::string> {
    const VerificationRun& run = suite("adjoint");
    return std::make_pair(run.ok, suite_blurb(run));
  });

  // 8. Parameter-sum invariant: verified inside the transform suite, plus 200
  //    direct trials on aligned shifts.
  criterion(8, []() -> std::pair<bool, std::string> {
    const VerificationRun& run = suite("transform");
    const std::vector<GaussianRational> pool = {gv(1),    gv(2),    gv(3, 2),
                                                gv(5, 2), gv(1, 3), gv(7, 2)};
    std::uint64_t checked = 0;
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
      SplitMix64 rng(trial_seed(77, trial));
      const std::int64_t n = static_cast<std::int64_t>(rng.range(1, 5));
      std::vector<GaussianRational> upper, lower;
      const std::uint64_t nu = rng.range(0, 3);
      const std::uint64_t nl = rng.range(0, 3);
      for (std::uint64_t i = 0; i < nu; ++i) upper.push_back(rng.scalar(6));
      for (std::uint64_t i = 0; i < nl; ++i)
        lower.push_back(pool[rng.range(0, pool.size() - 1)]);
      const HypergeometricTerm t =
          make_term(rng.scalar(5), n * static_cast<std::int64_t>(rng.range(0, 6)),
                    upper, lower, rng.scalar(4));
      if (!sum_invariant_check(t, n)) {
        return std::make_pair(false, "direct trial " + std::to_string(trial) +
                                         " violated the sum invariant");
      }
      ++checked;
    }
    return std::make_pair(run.ok && checked == 200,
                          "suite: " + suite_blurb(run) + "; " +
                              std::to_string(checked) + " direct trials");
  });

  // 9. The eigenfunction suite also rejects perturbed parameter lists
  //    (covered by its randomized perturbation arm).
  criterion(9, []() -> std::pair<bool, std::string> {
    const VerificationRun& run = suite("eigen");
    return std::make_pair(run.ok, suite_blurb(run));
  });

  // 10. Bounded multiplicativity: the randomized suite passes and the three
  //     reference classifications come out right.
  criterion(10, []() -> std::pair<bool, std::string> {
    const VerificationRun& run = suite("multiplicative");
    const CmReport sq = multiplicative_classify({gv(2), gv(2)}, {gv(1), gv(1)}, 16);
    const CmReport inv =
        multiplicative_classify({gv(1), gv(1), gv(1)}, {gv(2), gv(2), gv(1)}, 16);
    const CmReport half = multiplicative_classify({gv(1, 2)}, {gv(1)}, 16);
    const bool fixed = sq.is_cm && sq.exponent && *sq.exponent == 2 &&
                       inv.is_cm && inv.exponent && *inv.exponent == -2 &&
                       !half.is_cm && half.witness && half.witness->first == 2 &&
                       half.witness->second == 2;
    return std::make_pair(run.ok && fixed,
                          "suite: " + suite_blurb(run) +
                              (fixed ? "; reference terms classified"
                                     : "; reference terms misclassified"));
  });

  // 11. V_n U_n acts as the coefficient filter onto exponents divisible by n:
  //     the algebra suite plus 100 direct coefficientwise trials.
  criterion(11, []() -> std::pair<bool, std::string> {
    const VerificationRun& run = suite("algebra");
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
      SplitMix64 rng(trial_seed(88, trial));
      const std::int64_t n = static_cast<std::int64_t>(rng.range(1, 8));
      PowerSeries f;
      f.shift = static_cast<std::int64_t>(rng.range(0, 3));
      const std::int64_t len = 32 - f.shift;
      for (std::int64_t i = 0; i < len; ++i)
        f.coeffs.push_back(rng.chance(1, 5) ? GaussianRational() : rng.scalar(5));
      const PowerSeries p = vnun_projection(n, f);
      if (p.known_to() != f.known_to())
        return std::make_pair(false, "projection changed the known range");
      for (std::int64_t e = 0; e < f.known_to(); ++e) {
        const GaussianRational want =
            (e % n == 0) ? f.coeff(e) : GaussianRational();
        if (!(p.coeff(e) == want))
          return std::make_pair(false,
                                "trial " + std::to_string(trial) +
                                    ": filter mismatch at exponent " +
                                    std::to_string(e));
      }
      const PowerSeries vu = v_apply(n, u_apply(n, f));
      const std::int64_t m = std::min(p.known_to(), vu.known_to());
      if (first_mismatch(p, vu, m))
        return std::make_pair(false, "projection disagrees with V after U");
    }
    return std::make_pair(run.ok,
                          "suite: " + suite_blurb(run) + "; 100 direct trials");
  });

  // 12. Repeated full verification runs with a pinned seed produce
  //     byte-identical output and succeed.
  criterion(12, []() -> std::pair<bool, std::string> {
    const auto t0 = std::chrono::steady_clock::now();
    const RunResult r1 = run_cli("verify --suite all --seed 42");
    const RunResult r2 = run_cli("verify --suite all --seed 42");
    const double secs = seconds_since(t0);
    const bool pass = r1.exit_code == 0 && r2.exit_code == 0 &&
                      !r1.out.empty() && r1.out == r2.out;
    char buf[120];
    std::snprintf(buf, sizeof buf,
                  "two runs, exit codes %d/%d, outputs %s, %.2fs",
                  r1.exit_code, r2.exit_code,
                  r1.out == r2.out ? "identical" : "DIFFER", secs);
    return std::make_pair(pass, std::string(buf));
  });

  return all_pass ? 0 : 1;
}
