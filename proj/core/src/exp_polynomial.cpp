#include "donaldson/exp_polynomial.hpp"

#include <string>

#include "donaldson/error.hpp"

namespace donaldson {

namespace {

void merge_marker(QuadMarker& mine, bool mine_zero, const QuadMarker& theirs, bool theirs_zero) {
  if (theirs_zero) {
    if (mine_zero && mine.sign == QuadSign::None) mine = theirs;
    return;
  }
  if (mine_zero) {
    mine = theirs;
    return;
  }
  if (!(mine == theirs)) {
    throw PreconditionError("adding exponential polynomials with different quadratic markers");
  }
}

QuadMarker multiply_markers(const QuadMarker& a, const QuadMarker& b) {
  if (a.sign == QuadSign::None) return b;
  if (b.sign == QuadSign::None) return a;
  if (a.sign != b.sign) {
    throw PreconditionError("product of +Q/2 and -Q/2 marked polynomials is not representable");
  }
  return {a.sign, a.square + b.square};
}

}  // namespace

ExpPolynomial ExpPolynomial::monomial(const GaussianRational& lambda, const GaussianRational& c,
                                      QuadMarker marker) {
  ExpPolynomial p(std::move(marker));
  p.add_term(lambda, c);
  return p;
}

GaussianRational ExpPolynomial::coefficient(const GaussianRational& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void ExpPolynomial::add_term(const GaussianRational& lambda, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExpPolynomial& ExpPolynomial::operator+=(const ExpPolynomial& o) {
  merge_marker(marker_, is_zero(), o.marker_, o.is_zero());
  for (const auto& [lambda, c] : o.terms_) add_term(lambda, c);
  return *this;
}

ExpPolynomial& ExpPolynomial::operator-=(const ExpPolynomial& o) {
  merge_marker(marker_, is_zero(), o.marker_, o.is_zero());
  for (const auto& [lambda, c] : o.terms_) add_term(lambda, -c);
  return *this;
}

ExpPolynomial& ExpPolynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, coeff] : terms_) coeff *= c;
  return *this;
}

ExpPolynomial operator*(const ExpPolynomial& a, const ExpPolynomial& b) {
  ExpPolynomial out(multiply_markers(a.marker_, b.marker_));
  for (const auto& [la, ca] : a.terms_)
    for (const auto& [lb, cb] : b.terms_) out.add_term(la + lb, ca * cb);
  return out;
}

ExpPolynomial ExpPolynomial::rescaled(const Rational& s) const {
  QuadMarker m = marker_;
  m.square *= s * s;
  ExpPolynomial out(std::move(m));
  for (const auto& [lambda, c] : terms_) out.add_term(lambda * GaussianRational(s), c);
  return out;
}

ExpPolynomial ExpPolynomial::rotated() const {
  QuadMarker m = marker_;
  if (m.sign == QuadSign::Plus) m.sign = QuadSign::Minus;
  else if (m.sign == QuadSign::Minus) m.sign = QuadSign::Plus;
  ExpPolynomial out(std::move(m));
  const GaussianRational minus_i(Rational(0), Rational(-1));
  for (const auto& [lambda, c] : terms_) out.add_term(lambda * minus_i, c);
  return out;
}

ExpPolynomial ExpPolynomial::reflected() const {
  ExpPolynomial out(marker_);
  for (const auto& [lambda, c] : terms_) out.add_term(-lambda, c);
  return out;
}

ExpPolynomial ExpPolynomial::with_marker(QuadMarker marker) const {
  ExpPolynomial out = *this;
  out.marker_ = std::move(marker);
  return out;
}

bool operator==(const ExpPolynomial& a, const ExpPolynomial& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.marker_ == b.marker_ && a.terms_ == b.terms_;
}

ExpPolynomial divide(const ExpPolynomial& num, const ExpPolynomial& den) {
  if (den.is_zero()) throw InexactDivision("division by the zero exponential polynomial");

  QuadMarker marker;
  const QuadMarker& nm = num.marker();
  const QuadMarker& dm = den.marker();
  if (num.is_zero()) return ExpPolynomial();
  if (dm.sign == QuadSign::None) {
    marker = nm;
  } else if (nm == dm) {
    marker = QuadMarker::none();
  } else {
    throw InexactDivision("quadratic markers of numerator and divisor do not cancel");
  }

  const auto& den_lead = *den.terms().rbegin();
  const GaussianRational lower_bound =
      num.terms().begin()->first - den.terms().begin()->first;

  ExpPolynomial quotient(marker);
  ExpPolynomial remainder = num.with_marker({});
  const ExpPolynomial divisor = den.with_marker({});
  const std::size_t max_steps = 64 + 16 * (num.size() + 1) * (den.size() + 1);
  for (std::size_t step = 0; !remainder.is_zero(); ++step) {
    const auto& lead = *remainder.terms().rbegin();
    GaussianRational q_lambda = lead.first - den_lead.first;
    if (q_lambda < lower_bound || step >= max_steps) {
      throw InexactDivision("exponential polynomial division leaves a remainder");
    }
    GaussianRational q_coeff = lead.second / den_lead.second;
    quotient.add_term(q_lambda, q_coeff);
    remainder -= ExpPolynomial::monomial(q_lambda, q_coeff) * divisor;
  }
  return quotient;
}

std::vector<GaussianRational> expand(const ExpPolynomial& f, unsigned order) {
  // Taylor coefficients of e^{lambda t}: lambda^j / j!.
  std::vector<GaussianRational> series(order + 1);
  std::vector<Rational> inv_fact(order + 1);
  inv_fact[0] = 1;
  for (unsigned j = 1; j <= order; ++j) inv_fact[j] = inv_fact[j - 1] / j;

  for (const auto& [lambda, c] : f.terms()) {
    GaussianRational power(Rational(1));
    for (unsigned j = 0; j <= order; ++j) {
      series[j] += c * power * GaussianRational(inv_fact[j]);
      power *= lambda;
    }
  }
  if (f.marker().sign == QuadSign::None) return series;

  // e^{s q t^2 / 2} = sum_m (s q / 2)^m t^{2m} / m!.
  Rational half_q = f.marker().square / 2;
  if (f.marker().sign == QuadSign::Minus) half_q = -half_q;
  std::vector<GaussianRational> gauss(order + 1);
  Rational term(1);
  for (unsigned m = 0; 2 * m <= order; ++m) {
    gauss[2 * m] = GaussianRational(term);
    term = term * half_q / (m + 1);
  }
  std::vector<GaussianRational> out(order + 1);
  for (unsigned a = 0; a <= order; ++a) {
    if (gauss[a].is_zero()) continue;
    for (unsigned b = 0; a + b <= order; ++b) out[a + b] += gauss[a] * series[b];
  }
  return out;
}

}  // namespace donaldson
