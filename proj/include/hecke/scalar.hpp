#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hecke/error.hpp"

namespace hecke {

// Exact rational scalar. mpq_class arithmetic keeps results canonical, but
// the (num, den) constructor does not reduce; every construction path below
// canonicalizes, so a Rational is always reduced with positive denominator.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
bool is_integer(const Rational& r);

/// Complex number with exact rational real and imaginary parts: the scalar
/// field for every series coefficient and hypergeometric parameter in this
/// library. Components stay reduced, so equality is componentwise.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(long n) : re(n), im(0) {}         // NOLINT: implicit by design
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

GaussianRational operator+(const GaussianRational& x, const GaussianRational& y);
GaussianRational operator-(const GaussianRational& x, const GaussianRational& y);
GaussianRational operator-(const GaussianRational& x);
GaussianRational operator*(const GaussianRational& x, const GaussianRational& y);
// throws division_by_zero when y = 0
GaussianRational operator/(const GaussianRational& x, const GaussianRational& y);

GaussianRational& operator+=(GaussianRational& x, const GaussianRational& y);
GaussianRational& operator-=(GaussianRational& x, const GaussianRational& y);
GaussianRational& operator*=(GaussianRational& x, const GaussianRational& y);
GaussianRational& operator/=(GaussianRational& x, const GaussianRational& y);

GaussianRational conj(const GaussianRational& x);

// Exact integer power; e may be negative (throws division_by_zero on x = 0).
GaussianRational int_pow(const GaussianRational& x, std::int64_t e);

// True iff x is real, integral and <= 0. Lower hypergeometric parameters must
// never satisfy this (the series denominators would eventually vanish).
bool is_nonpositive_integer(const GaussianRational& x);

// Total order used to sort parameter lists canonically: by real part, then
// imaginary part.
bool scalar_less(const GaussianRational& a, const GaussianRational& b);

// Textual syntax, accepted everywhere scalars appear (never any whitespace
// inside a token):
//   0   5   -5   1/2   -3/4   2*i   -7/2*i   1/2+3*i   5-1/3*i
// Only canonical spellings parse: fractions in lowest terms with denominator
// >= 2, no leading zeros, no "-0", zero written exactly "0", complex forms
// only with both parts nonzero, imaginary coefficient always explicit.
// Formatting emits exactly this canonical form, so parse and format are
// mutually inverse.
std::string format_rational(const Rational& r);
std::string format_scalar(const GaussianRational& x);

// Consumes one scalar token starting at pos. On success advances pos past the
// token and returns the value; on failure leaves pos untouched.
std::optional<GaussianRational> parse_scalar_prefix(std::string_view text, std::size_t& pos);
// Whole-string variant: the token must span the entire input.
std::optional<GaussianRational> parse_scalar(std::string_view text);

}  // namespace hecke
