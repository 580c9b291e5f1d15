#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace donaldson {

/// Arbitrary-precision rational, always kept in canonical form by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (whitespace tolerated). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text; integers print without a denominator.
std::string to_string(const Rational& q);

/// 2^e for any signed exponent.
Rational pow2(long e);

/// (-1)^e.
int sign_pow(long e);

/// Exact conversion to a machine integer. Throws std::domain_error when the
/// value is not an integer or does not fit.
long to_long(const Rational& q);

bool is_integer(const Rational& q);

/// Exact complex number with rational real and imaginary parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(implicit)
  GaussianRational(long re) : re_(re) {}                 // NOLINT(implicit)
  GaussianRational(int re) : re_(re) {}                  // NOLINT(implicit)
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  // Lexicographic on (re, im); the fixed total order used for exponents.
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b);

 private:
  Rational re_{0};
  Rational im_{0};
};

/// i^n for any integer n.
GaussianRational i_pow(long n);

/// z^n, n >= 0.
GaussianRational pow(const GaussianRational& z, unsigned long n);

/// Text form "re+imi" / "re-imi"; purely real values print as a rational.
std::string to_string(const GaussianRational& z);

/// Accepts the to_string form, plain rationals, "i", "-i", "p/q i" and "a+b i".
GaussianRational parse_gaussian(std::string_view text);

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace donaldson
