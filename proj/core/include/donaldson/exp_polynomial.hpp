#pragma once

#include <map>
#include <vector>

#include "donaldson/rational.hpp"

namespace donaldson {

enum class QuadSign { None, Plus, Minus };

/// Symbolic prefactor e^{sign * Q(tD)/2}; `square` holds Q(D) = D.D.
/// Never expanded except by expand().
struct QuadMarker {
  QuadSign sign = QuadSign::None;
  Rational square{0};

  static QuadMarker none() { return {}; }
  static QuadMarker plus(Rational q) { return {QuadSign::Plus, std::move(q)}; }
  static QuadMarker minus(Rational q) { return {QuadSign::Minus, std::move(q)}; }

  friend bool operator==(const QuadMarker& a, const QuadMarker& b) {
    if (a.sign != b.sign) return false;
    return a.sign == QuadSign::None || a.square == b.square;
  }
};

/// Finite sum  marker(t) * sum_k c_k e^{lambda_k t}  with Gaussian-rational
/// exponents and coefficients. Exponents are distinct; zero coefficients are
/// pruned, so the zero polynomial has no terms.
class ExpPolynomial {
 public:
  using TermMap = std::map<GaussianRational, GaussianRational>;

  ExpPolynomial() = default;
  explicit ExpPolynomial(QuadMarker marker) : marker_(std::move(marker)) {}

  static ExpPolynomial monomial(const GaussianRational& lambda, const GaussianRational& c,
                                QuadMarker marker = {});

  const QuadMarker& marker() const { return marker_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of e^{lambda t} (zero when absent).
  GaussianRational coefficient(const GaussianRational& lambda) const;

  void add_term(const GaussianRational& lambda, const GaussianRational& c);

  ExpPolynomial& operator+=(const ExpPolynomial& o);
  ExpPolynomial& operator-=(const ExpPolynomial& o);
  ExpPolynomial& operator*=(const GaussianRational& c);

  friend ExpPolynomial operator+(ExpPolynomial a, const ExpPolynomial& b) { return a += b; }
  friend ExpPolynomial operator-(ExpPolynomial a, const ExpPolynomial& b) { return a -= b; }
  friend ExpPolynomial operator*(ExpPolynomial a, const GaussianRational& c) { return a *= c; }
  friend ExpPolynomial operator*(const GaussianRational& c, ExpPolynomial a) { return a *= c; }
  /// Markers combine additively in Q: (+,q1)(+,q2) = (+,q1+q2). Mixed signs throw.
  friend ExpPolynomial operator*(const ExpPolynomial& a, const ExpPolynomial& b);

  /// f(t) -> f(s t).
  ExpPolynomial rescaled(const Rational& s) const;
  /// f(t) -> f(-i t): exponents lambda -> -i lambda, marker sign flips.
  ExpPolynomial rotated() const;
  /// f(t) -> f(-t).
  ExpPolynomial reflected() const;
  /// Same terms, different marker.
  ExpPolynomial with_marker(QuadMarker marker) const;

  /// Zero polynomials compare equal whatever their marker.
  friend bool operator==(const ExpPolynomial& a, const ExpPolynomial& b);

 private:
  QuadMarker marker_;
  TermMap terms_;
};

/// Exact quotient num / den in the exponential-polynomial ring, by leading
/// exponent elimination under the lexicographic order on exponents.
/// Throws InexactDivision on a non-zero remainder and on a zero divisor.
ExpPolynomial divide(const ExpPolynomial& num, const ExpPolynomial& den);

/// Taylor coefficients [t^0 .. t^order] with the quadratic marker expanded.
/// Display-only path.
std::vector<GaussianRational> expand(const ExpPolynomial& f, unsigned order);

}  // namespace donaldson
