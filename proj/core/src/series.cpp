#include "donaldson/series.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "donaldson/error.hpp"

namespace donaldson {

namespace {

// K.Sigma as an integer; both classes are integral here.
long sigma_pairing(const HClass& k, const MarkedSurface& s) { return to_long(pairing(k, s.cls())); }

long mod4(long v) { return ((v % 4) + 4) % 4; }

void require_split_hypotheses(const DonaldsonSeries& series, const HClass& w,
                              const MarkedSurface& s) {
  if (!same_lattice(series.lattice(), w.lattice()) ||
      !same_lattice(series.lattice(), s.cls().lattice())) {
    throw LatticeMismatch("series, w and Sigma must live on the same lattice");
  }
  if (!is_allowable(w, s)) {
    throw PreconditionError("(w, Sigma) is not allowable: w.Sigma must be odd and Sigma^2 = 0");
  }
  if (!series.simple_type()) throw PreconditionError("series is not of simple type");
  if (series.b_one() != 0) throw PreconditionError("the two-sector split needs b1 = 0");
  if (series.b_plus() <= 1 || series.b_plus() % 2 == 0) {
    throw PreconditionError("the two-sector split needs b+ > 1 and odd");
  }
}

}  // namespace

DonaldsonSeries::DonaldsonSeries(LatticePtr lattice, std::vector<SeriesEntry> entries,
                                 bool simple_type)
    : lattice_(std::move(lattice)), simple_type_(simple_type) {
  if (!lattice_) throw PreconditionError("series without a lattice");
  entries_.reserve(entries.size());
  for (auto& e : entries) {
    if (!same_lattice(e.k.lattice(), lattice_)) {
      throw LatticeMismatch("series entry on lattice " + e.k.lattice()->name() +
                            " does not belong to " + lattice_->name());
    }
    if (!e.k.is_integral()) throw PreconditionError("basic classes must be integral");
    if (sgn(e.a) == 0) continue;
    entries_.push_back({e.k.rebind(lattice_), e.a});
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const SeriesEntry& x, const SeriesEntry& y) { return x.k < y.k; });
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i - 1].k == entries_[i].k) {
      throw PreconditionError("duplicate basic class in series on " + lattice_->name());
    }
  }
}

Rational DonaldsonSeries::coefficient(const HClass& k) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                             [](const SeriesEntry& e, const HClass& c) { return e.k < c; });
  if (it != entries_.end() && it->k == k) return it->a;
  return Rational(0);
}

DonaldsonSeries DonaldsonSeries::rebind(LatticePtr lattice) const {
  std::vector<SeriesEntry> moved;
  moved.reserve(entries_.size());
  for (const auto& e : entries_) moved.push_back({e.k.rebind(lattice), e.a});
  return DonaldsonSeries(std::move(lattice), std::move(moved), simple_type_);
}

int twist_sign(const HClass& k, const HClass& w) {
  Rational exponent = pairing(k, w) + square(w);
  if (!is_integer(exponent) || mpz_odd_p(exponent.get_num().get_mpz_t()) != 0) {
    throw ParityError("K.w + w^2 is odd: K is not characteristic or w is not integral");
  }
  Integer half = exponent.get_num() / 2;
  return mpz_odd_p(half.get_mpz_t()) != 0 ? -1 : 1;
}

std::vector<SeriesEntry> twist(const DonaldsonSeries& series, const HClass& w) {
  if (!same_lattice(series.lattice(), w.lattice())) {
    throw LatticeMismatch("twist class is on a different lattice");
  }
  std::vector<SeriesEntry> out;
  out.reserve(series.size());
  for (const auto& e : series.entries()) {
    out.push_back({e.k, twist_sign(e.k, w) * e.a});
  }
  return out;
}

SplitSeries split_wS(const DonaldsonSeries& series, const HClass& w, const MarkedSurface& s) {
  require_split_hypotheses(series, w, s);
  SplitSeries split{series.lattice(), w, s, d_zero(w), series.simple_type(), {}, {}};
  const GaussianRational n_factor = i_pow(-split.d0);
  for (auto& e : twist(series, w)) {
    const long ks = sigma_pairing(e.k, s);
    switch (mod4(ks)) {
      case 2:
        split.p_terms.push_back({e.k, GaussianRational(e.a)});
        break;
      case 0:
        split.n_terms.push_back({e.k, n_factor * GaussianRational(e.a)});
        break;
      default:
        throw ParityError("basic class with odd pairing against Sigma");
    }
  }
  return split;
}

DonaldsonSeries unsplit(const SplitSeries& split) {
  std::vector<SeriesEntry> entries;
  for (const auto& t : split.p_terms) {
    if (mod4(sigma_pairing(t.k, split.surface)) != 2 || !t.c.is_real()) {
      throw PreconditionError("malformed P-sector term");
    }
    entries.push_back({t.k, t.c.re()});
  }
  const GaussianRational undo = i_pow(split.d0);
  for (const auto& t : split.n_terms) {
    GaussianRational c = t.c * undo;
    if (mod4(sigma_pairing(t.k, split.surface)) != 0 || !c.is_real()) {
      throw PreconditionError("malformed N-sector term");
    }
    entries.push_back({t.k, c.re()});
  }
  return DonaldsonSeries(split.lattice, std::move(entries), split.simple_type);
}

SectorPair eval_insert(const SplitSeries& split, const HClass& d, unsigned x_power,
                       unsigned sigma_power) {
  if (!same_lattice(split.lattice, d.lattice())) {
    throw LatticeMismatch("probe class is on a different lattice");
  }
  const Rational d_sq = square(d);
  const Rational d_sigma = pairing(d, split.surface.cls());
  SectorPair out{ExpPolynomial(QuadMarker::plus(d_sq)), ExpPolynomial(QuadMarker::minus(d_sq))};

  const GaussianRational x_plus = pow(GaussianRational(2), x_power);
  const GaussianRational x_minus = pow(GaussianRational(-2), x_power);
  for (const auto& t : split.p_terms) {
    GaussianRational insert = pow(GaussianRational(d_sigma + pairing(t.k, split.surface.cls())),
                                  sigma_power);
    out.plus.add_term(GaussianRational(pairing(t.k, d)), t.c * x_plus * insert);
  }
  for (const auto& t : split.n_terms) {
    GaussianRational base(-d_sigma, pairing(t.k, split.surface.cls()));
    GaussianRational lambda(Rational(0), pairing(t.k, d));
    out.minus.add_term(lambda, t.c * x_minus * pow(base, sigma_power));
  }
  return out;
}

SectorPair eval_insert(const DonaldsonSeries& series, const HClass& w, const MarkedSurface& s,
                       const HClass& d, unsigned x_power, unsigned sigma_power) {
  return eval_insert(split_wS(series, w, s), d, x_power, sigma_power);
}

RelationPoly RelationPoly::constant(const Rational& c) {
  RelationPoly p;
  p.add({0, 0}, c);
  return p;
}

RelationPoly RelationPoly::sigma() {
  RelationPoly p;
  p.add({1, 0}, Rational(1));
  return p;
}

RelationPoly RelationPoly::x() {
  RelationPoly p;
  p.add({0, 1}, Rational(1));
  return p;
}

void RelationPoly::add(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

unsigned RelationPoly::sigma_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.first);
  return d;
}

unsigned RelationPoly::x_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.second);
  return d;
}

RelationPoly& RelationPoly::operator+=(const RelationPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

RelationPoly& RelationPoly::operator-=(const RelationPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

RelationPoly operator*(const RelationPoly& a, const RelationPoly& b) {
  RelationPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      out.add({ma.first + mb.first, ma.second + mb.second}, ca * cb);
  return out;
}

RelationPoly operator*(const Rational& c, const RelationPoly& p) {
  return RelationPoly::constant(c) * p;
}

RelationPoly RelationPoly::pow(unsigned n) const {
  RelationPoly out = constant(Rational(1));
  for (unsigned k = 0; k < n; ++k) out = out * *this;
  return out;
}

GaussianRational RelationPoly::evaluate(const GaussianRational& sigma_value,
                                        const GaussianRational& x_value) const {
  GaussianRational acc;
  for (const auto& [m, c] : terms_) {
    acc += GaussianRational(c) * donaldson::pow(sigma_value, m.first) *
           donaldson::pow(x_value, m.second);
  }
  return acc;
}

RelationPoly simple_type_relation() {
  return RelationPoly::x() * RelationPoly::x() - RelationPoly::constant(Rational(4));
}

RelationPoly relation_poly(int genus) {
  if (genus < 2) throw PreconditionError("relation polynomial needs genus >= 2");
  const RelationPoly one = RelationPoly::constant(Rational(1));
  const RelationPoly half_x = Rational(1, 2) * RelationPoly::x();
  const RelationPoly s1 = RelationPoly::sigma() + one;

  if (genus % 2 == 0) {
    RelationPoly z = (one - half_x) * s1;
    for (int k = 1; k <= (genus - 2) / 2; ++k) {
      z = z * (s1 * s1 + RelationPoly::constant(Rational(16 * k * k)));
    }
    return z;
  }
  // Roots -1, 3, -5, 7, ..., alternating in sign, ending at 2g-3.
  RelationPoly z = one + half_x;
  for (int m = 1; m <= genus - 1; ++m) {
    long root = (m % 2 == 1 ? -1 : 1) * (2L * m - 1);
    z = z * (RelationPoly::sigma() - RelationPoly::constant(Rational(root)));
  }
  return z;
}

RelationResult apply_relation(const DonaldsonSeries& series, const HClass& w,
                              const MarkedSurface& s, const RelationPoly& z, const HClass& d) {
  const SplitSeries split = split_wS(series, w, s);
  const Rational d_sq = square(d);
  RelationResult result{
      {ExpPolynomial(QuadMarker::plus(d_sq)), ExpPolynomial(QuadMarker::minus(d_sq))},
      pairing(d, s.cls()) == 1};
  for (const auto& [m, c] : z.terms()) {
    SectorPair part = eval_insert(split, d, m.second, m.first);
    result.value.plus += part.plus * GaussianRational(c);
    result.value.minus += part.minus * GaussianRational(c);
  }
  return result;
}

std::vector<HClass> default_probes(const LatticePtr& lattice, const MarkedSurface& s) {
  std::vector<HClass> base;
  for (const auto& nc : lattice->named_classes()) base.emplace_back(lattice, nc.coords);
  for (std::size_t i = 0; i < lattice->rank(); ++i) base.push_back(HClass::basis(lattice, i));

  std::vector<HClass> probes;
  auto push_unique = [&](HClass c) {
    if (std::find(probes.begin(), probes.end(), c) == probes.end()) probes.push_back(std::move(c));
  };
  for (auto& d : base) {
    if (pairing(d, s.cls()) != 1) continue;
    push_unique(d);
    push_unique(d + s.cls());
    push_unique(d - s.cls());
  }
  return probes;
}

int finite_type_order(const DonaldsonSeries& series, const HClass& w, const MarkedSurface& s,
                      const std::vector<HClass>& probes, int max_order) {
  const SplitSeries split = split_wS(series, w, s);
  const RelationPoly step = simple_type_relation();
  RelationPoly z = RelationPoly::constant(Rational(1));
  for (int n = 0; n <= max_order; ++n) {
    bool vanishes = true;
    for (const auto& d : probes) {
      SectorPair total{ExpPolynomial(QuadMarker::plus(square(d))),
                       ExpPolynomial(QuadMarker::minus(square(d)))};
      for (const auto& [m, c] : z.terms()) {
        SectorPair part = eval_insert(split, d, m.second, m.first);
        total.plus += part.plus * GaussianRational(c);
        total.minus += part.minus * GaussianRational(c);
      }
      if (!total.is_zero()) {
        vanishes = false;
        break;
      }
    }
    if (vanishes) return n;
    z = z * step;
  }
  throw PreconditionError("series is not of finite type of order <= " + std::to_string(max_order));
}

AdjunctionReport check_adjunction(const DonaldsonSeries& series, const MarkedSurface& s) {
  AdjunctionReport report;
  const Rational bound = Rational(2 * s.genus() - 2) - square(s.cls());
  for (const auto& e : series.entries()) {
    Rational ks = pairing(e.k, s.cls());
    if (abs(ks) > bound) {
      report.holds = false;
      report.violators.push_back(e);
    }
  }
  return report;
}

long untwisted_d_zero(const DonaldsonSeries& series) {
  return d_zero(Rational(0), series.b_one(), series.b_plus());
}

std::vector<SeriesEntry> involution_violations(const DonaldsonSeries& series) {
  const int sign = sign_pow(untwisted_d_zero(series));
  std::vector<SeriesEntry> bad;
  for (const auto& e : series.entries()) {
    if (series.coefficient(-e.k) != sign * e.a) bad.push_back(e);
  }
  return bad;
}

std::vector<SeriesEntry> non_characteristic_entries(const DonaldsonSeries& series) {
  std::vector<SeriesEntry> bad;
  for (const auto& e : series.entries()) {
    if (!is_characteristic(e.k)) bad.push_back(e);
  }
  return bad;
}

bool has_parity(const SectorPair& value, long d0) {
  const GaussianRational sign(sign_pow(d0));
  for (const ExpPolynomial* p : {&value.plus, &value.minus}) {
    for (const auto& [lambda, c] : p->terms()) {
      if (p->coefficient(-lambda) != sign * c) return false;
    }
  }
  return true;
}

}  // namespace donaldson
