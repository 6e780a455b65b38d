#include "hecke/scalar.hpp"

#include <cctype>

namespace hecke {

const char* errc_name(errc c) noexcept {
  switch (c) {
    case errc::division_by_zero: return "division by zero";
    case errc::invalid_operator: return "invalid operator";
    case errc::invalid_parameter: return "invalid parameter";
    case errc::truncation_too_short: return "truncation too short";
    case errc::zero_series: return "zero series";
    case errc::insufficient_order: return "insufficient order";
  }
  return "unknown error";
}

Rational make_rational(long num, long den) {
  if (den == 0) fail(errc::division_by_zero, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
  return {x.re + y.re, x.im + y.im};
}

GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
  return {x.re - y.re, x.im - y.im};
}

GaussianRational operator-(const GaussianRational& x) { return {-x.re, -x.im}; }

GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

GaussianRational operator/(const GaussianRational& x, const GaussianRational& y) {
  if (y.is_zero()) fail(errc::division_by_zero, "division by zero scalar");
  Rational n = y.re * y.re + y.im * y.im;
  return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
}

GaussianRational& operator+=(GaussianRational& x, const GaussianRational& y) { return x = x + y; }
GaussianRational& operator-=(GaussianRational& x, const GaussianRational& y) { return x = x - y; }
GaussianRational& operator*=(GaussianRational& x, const GaussianRational& y) { return x = x * y; }
GaussianRational& operator/=(GaussianRational& x, const GaussianRational& y) { return x = x / y; }

GaussianRational conj(const GaussianRational& x) { return {x.re, -x.im}; }

GaussianRational int_pow(const GaussianRational& x, std::int64_t e) {
  if (x.is_zero()) {
    if (e < 0) fail(errc::division_by_zero, "negative power of zero");
    return e == 0 ? GaussianRational(1) : GaussianRational(0);
  }
  GaussianRational base = e < 0 ? GaussianRational(1) / x : x;
  std::uint64_t k = e < 0 ? -static_cast<std::uint64_t>(e) : static_cast<std::uint64_t>(e);
  GaussianRational acc(1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

bool is_nonpositive_integer(const GaussianRational& x) {
  return x.im == 0 && is_integer(x.re) && x.re <= 0;
}

bool scalar_less(const GaussianRational& a, const GaussianRational& b) {
  int c = cmp(a.re, b.re);
  if (c != 0) return c < 0;
  return cmp(a.im, b.im) < 0;
}

std::string format_rational(const Rational& r) { return r.get_str(); }

std::string format_scalar(const GaussianRational& x) {
  if (x.im == 0) return format_rational(x.re);
  std::string im_part = format_rational(abs(x.im)) + "*i";
  if (x.re == 0) return (x.im < 0 ? "-" : "") + im_part;
  return format_rational(x.re) + (x.im < 0 ? "-" : "+") + im_part;
}

namespace {

// Canonical integer numeral: "0" or a nonzero digit followed by digits.
bool parse_numeral(std::string_view s, std::size_t& pos, mpz_class& out) {
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start || (s[start] == '0' && pos - start > 1)) {
    pos = start;
    return false;
  }
  out = mpz_class(std::string(s.substr(start, pos - start)), 10);
  return true;
}

// Unsigned rational in lowest terms, denominator >= 2 when present.
bool parse_urat(std::string_view s, std::size_t& pos, Rational& out) {
  std::size_t p = pos;
  mpz_class num;
  if (!parse_numeral(s, p, num)) return false;
  if (p < s.size() && s[p] == '/') {
    std::size_t q = p + 1;
    mpz_class den;
    if (!parse_numeral(s, q, den) || den <= 1 || gcd(num, den) != 1) return false;
    out = Rational(num) / Rational(den);
    pos = q;
    return true;
  }
  out = Rational(num);
  pos = p;
  return true;
}

// s[pos..pos+1] == "*i" with nothing word-like glued after the i.
bool at_imag_marker(std::string_view s, std::size_t pos) {
  return pos + 1 < s.size() && s[pos] == '*' && s[pos + 1] == 'i' &&
         (pos + 2 == s.size() || !std::isalnum(static_cast<unsigned char>(s[pos + 2])));
}

}  // namespace

std::optional<GaussianRational> parse_scalar_prefix(std::string_view text, std::size_t& pos) {
  std::size_t p = pos;
  bool neg = p < text.size() && text[p] == '-';
  if (neg) ++p;
  Rational r1;
  if (!parse_urat(text, p, r1)) return std::nullopt;
  if (neg && r1 == 0) return std::nullopt;  // "-0" is not canonical
  if (neg) r1 = -r1;

  if (at_imag_marker(text, p)) {
    if (r1 == 0) return std::nullopt;  // zero is written "0", never "0*i"
    pos = p + 2;
    return GaussianRational(Rational(0), r1);
  }
  if (r1 != 0 && p < text.size() && (text[p] == '+' || text[p] == '-')) {
    std::size_t q = p + 1;
    bool ineg = text[p] == '-';
    Rational r2;
    if (parse_urat(text, q, r2) && r2 != 0 && at_imag_marker(text, q)) {
      pos = q + 2;
      return GaussianRational(r1, ineg ? Rational(-r2) : r2);
    }
  }
  pos = p;
  return GaussianRational(r1);
}

std::optional<GaussianRational> parse_scalar(std::string_view text) {
  std::size_t pos = 0;
  auto v = parse_scalar_prefix(text, pos);
  if (!v || pos != text.size()) return std::nullopt;
  return v;
}

}  // namespace hecke
