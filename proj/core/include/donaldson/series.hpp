#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "donaldson/exp_polynomial.hpp"
#include "donaldson/lattice.hpp"

namespace donaldson {

/// One basic class K_j with its rational coefficient a_j.
struct SeriesEntry {
  HClass k;
  Rational a;
};

/// e^{Q/2} * sum_j a_j e^{K_j . alpha}: the Donaldson series of a
/// simple-type manifold, stored with untwisted (w = 0) coefficients.
class DonaldsonSeries {
 public:
  /// Entries are sorted lexicographically by class coordinates and zero
  /// coefficients dropped. Throws on duplicate, non-integral or foreign
  /// classes.
  DonaldsonSeries(LatticePtr lattice, std::vector<SeriesEntry> entries, bool simple_type = true);

  static DonaldsonSeries zero(LatticePtr lattice) { return DonaldsonSeries(std::move(lattice), {}); }

  const LatticePtr& lattice() const { return lattice_; }
  const std::vector<SeriesEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  bool simple_type() const { return simple_type_; }
  int b_plus() const { return lattice_->b_plus(); }
  int b_one() const { return lattice_->b_one(); }

  /// Coefficient of a class, zero when absent.
  Rational coefficient(const HClass& k) const;

  /// Same coordinates on a structurally identical or renamed lattice.
  DonaldsonSeries rebind(LatticePtr lattice) const;

 private:
  LatticePtr lattice_;
  std::vector<SeriesEntry> entries_;
  bool simple_type_;
};

/// a_{j,w} = (-1)^{(K_j.w + w^2)/2} a_j. Classes unchanged; applying the
/// same w twice is the identity. Throws ParityError when K_j.w + w^2 is odd.
std::vector<SeriesEntry> twist(const DonaldsonSeries& series, const HClass& w);

/// Sign (-1)^{(k.w + w^2)/2}.
int twist_sign(const HClass& k, const HClass& w);

struct SplitTerm {
  HClass k;
  GaussianRational c;
};

/// Two-sector form of D^{(w,Sigma)}: P terms (K.Sigma = 2 mod 4) carry
/// a_{j,w} under e^{+Q/2}; N terms (K.Sigma = 0 mod 4) carry i^{-d0} a_{j,w}
/// under e^{-Q/2} and are evaluated on i K.
struct SplitSeries {
  LatticePtr lattice;
  HClass w;
  MarkedSurface surface;
  long d0 = 0;
  bool simple_type = true;
  std::vector<SplitTerm> p_terms;
  std::vector<SplitTerm> n_terms;
};

SplitSeries split_wS(const DonaldsonSeries& series, const HClass& w, const MarkedSurface& s);

/// Inverse of split_wS: returns the w-twisted series (coefficients a_{j,w}).
/// Throws PreconditionError on malformed sector data.
DonaldsonSeries unsplit(const SplitSeries& split);

/// The +Q/2 and -Q/2 marked parts of an evaluation.
struct SectorPair {
  ExpPolynomial plus;
  ExpPolynomial minus;

  bool is_zero() const { return plus.is_zero() && minus.is_zero(); }
  friend bool operator==(const SectorPair& a, const SectorPair& b) {
    return a.plus == b.plus && a.minus == b.minus;
  }
};

/// D^{(w,Sigma)}(Sigma^b x^a e^{tD}). The x insertion acts as 2 on the P
/// sector and -2 on the N sector; the Sigma insertion contributes
/// ((D+K).Sigma)^b resp. ((-D+iK).Sigma)^b.
SectorPair eval_insert(const SplitSeries& split, const HClass& d, unsigned x_power,
                       unsigned sigma_power);
SectorPair eval_insert(const DonaldsonSeries& series, const HClass& w, const MarkedSurface& s,
                       const HClass& d, unsigned x_power, unsigned sigma_power);

/// Element of the polynomial algebra in Sigma and x.
class RelationPoly {
 public:
  using Monomial = std::pair<unsigned, unsigned>;  // (Sigma power, x power)

  RelationPoly() = default;
  static RelationPoly constant(const Rational& c);
  static RelationPoly sigma();
  static RelationPoly x();

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned sigma_degree() const;
  unsigned x_degree() const;

  RelationPoly& operator+=(const RelationPoly& o);
  RelationPoly& operator-=(const RelationPoly& o);
  friend RelationPoly operator+(RelationPoly a, const RelationPoly& b) { return a += b; }
  friend RelationPoly operator-(RelationPoly a, const RelationPoly& b) { return a -= b; }
  friend RelationPoly operator*(const RelationPoly& a, const RelationPoly& b);
  friend RelationPoly operator*(const Rational& c, const RelationPoly& p);
  RelationPoly pow(unsigned n) const;

  GaussianRational evaluate(const GaussianRational& sigma_value,
                            const GaussianRational& x_value) const;

  friend bool operator==(const RelationPoly& a, const RelationPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

/// x^2 - 4.
RelationPoly simple_type_relation();

/// The relation killing D^{(w,Sigma)}(e^{tD} z) for D.Sigma = 1 on genus-g
/// data:
///   g even: (1 - x/2)(Sigma+1) prod_{k=1}^{(g-2)/2} ((Sigma+1)^2 + (4k)^2)
///   g odd:  (1 + x/2)(Sigma+1)(Sigma-3)(Sigma+5)...(Sigma-(2g-3))
/// Throws PreconditionError for g < 2.
RelationPoly relation_poly(int genus);

struct RelationResult {
  SectorPair value;
  /// False when D.Sigma != 1, where the vanishing statement does not apply.
  bool vanishing_guaranteed = true;
};

RelationResult apply_relation(const DonaldsonSeries& series, const HClass& w,
                              const MarkedSurface& s, const RelationPoly& z, const HClass& d);

/// Named and basis classes with D.Sigma = 1, plus their shifts D +- Sigma.
std::vector<HClass> default_probes(const LatticePtr& lattice, const MarkedSurface& s);

/// Smallest n with D^{(w,Sigma)}((x^2-4)^n e^{tD}) = 0 on every probe.
/// Throws PreconditionError if no n <= max_order works.
int finite_type_order(const DonaldsonSeries& series, const HClass& w, const MarkedSurface& s,
                      const std::vector<HClass>& probes, int max_order = 8);

struct AdjunctionReport {
  bool holds = true;
  std::vector<SeriesEntry> violators;
};

/// 2g - 2 >= Sigma^2 + |K.Sigma| for every entry.
AdjunctionReport check_adjunction(const DonaldsonSeries& series, const MarkedSurface& s);

/// d0 of the underlying manifold with w = 0.
long untwisted_d_zero(const DonaldsonSeries& series);

/// Entries whose mirror -K is missing or has coefficient other than
/// (-1)^{d0} a_K.
std::vector<SeriesEntry> involution_violations(const DonaldsonSeries& series);

std::vector<SeriesEntry> non_characteristic_entries(const DonaldsonSeries& series);

/// Term-wise lambda -> -lambda symmetry with sign (-1)^{d0} in both sectors.
bool has_parity(const SectorPair& value, long d0);

}  // namespace donaldson
