#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

enum class errc {
  division_by_zero,
  invalid_operator,     // bad operator index, e.g. U_0, or a violated operator precondition
  invalid_parameter,    // lower hypergeometric parameter that is a nonpositive integer, etc.
  truncation_too_short, // asked for coefficients beyond the known range
  zero_series,          // operation needs a nonzero coefficient and found none
  insufficient_order,   // known range too short to decide the question
};

const char* errc_name(errc c) noexcept;

/// Exception carrying a machine-readable kind next to the human message.
class EngineError : public std::runtime_error {
 public:
  EngineError(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw EngineError(code, what);
}

}  // namespace hecke
