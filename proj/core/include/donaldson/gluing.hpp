#pragma once

#include <string>
#include <vector>

#include "donaldson/constructions.hpp"
#include "donaldson/exp_polynomial.hpp"

namespace donaldson {

/// One side of a fibre sum: a catalog entry, the surface glued along and the w
/// used on that side.
struct GluingSide {
  CatalogEntry entry;
  std::string surface_label;
  HClass w;

  const MarkedSurface& surface() const { return entry.surface(surface_label).surface; }
  const DonaldsonSeries& series() const { return entry.series; }
};

/// Builds a side from the surface label; w defaults to the surface's w label.
GluingSide make_side(CatalogEntry entry, const std::string& surface_label);

struct GluingSpec {
  GluingSide left;
  GluingSide right;
  int genus = 2;
  /// w^2 of the glued w; only its difference with w1^2 + w2^2 matters.
  Rational w_square{0};
};

/// Spec with w^2 = w1^2 + w2^2, gluing the first surfaces of genus g.
GluingSpec make_spec(CatalogEntry left, CatalogEntry right, int genus);

enum class Sector { Plus, Minus, Zero };
enum class GluingKind { Theorem, Torus, Conjectural };

std::string to_string(Sector s);
Sector parse_sector(const std::string& text);
std::string to_string(GluingKind k);
GluingKind parse_kind(const std::string& text);

/// Left entry index j, right entry index k (into the sorted series entries).
struct GluedEntry {
  std::size_t j = 0;
  std::size_t k = 0;
  Sector sector = Sector::Plus;
  Rational coeff;

  friend bool operator==(const GluedEntry&, const GluedEntry&) = default;
};

/// Basic classes of the fibre sum, known only through their parents and sector.
struct GluedSeries {
  GluingKind kind = GluingKind::Theorem;
  GluingSpec spec;
  std::vector<GluedEntry> entries;
  /// Simple type of the glued manifold is assumed, never inferred.
  bool simple_type_assumed = true;

  int b_plus() const;
  long d0() const;
};

/// D on the fibre sum given by its parts with D1.Sigma1 = D2.Sigma2 = sigma_pairing.
struct SplitClass {
  HClass d1;
  HClass d2;
  Rational sigma_pairing;
};

/// Checks the parts lie on the spec's lattices and pair with Sigma as stated.
void validate_split(const GluingSpec& spec, const SplitClass& d);

/// (-1)^{(g-1)(w^2 - w1^2 - w2^2)/2}.
int epsilon(const GluingSpec& spec);

/// b+ of the fibre sum: b+1 + b+2 + 2g - 1.
int glued_b_plus(const GluingSpec& spec);

/// d0(X, w) = d0(X1, w1) + d0(X2, w2) + g - 1 (mod 2).
bool d0_congruence_holds(const GluingSpec& spec);

/// Pairs with K.Sigma = L.Sigma = 2g-2 get -2^{7g-9} a b, pairs at -(2g-2) get
/// (-1)^g 2^{7g-9} a b, all times epsilon; a, b are w-twisted.
GluedSeries glue(const GluingSpec& spec);

/// g = 1: every pair contributes -1/4, -1/4, -1/2 times a b in sectors +, -, 0.
GluedSeries glue_torus(const GluingSpec& spec);

/// Experimental: inputs are the stabilized series X_i #_Sigma B_g. Coefficients
/// -2^{-3g+5} and (-1)^g 2^{-3g+5} times epsilon, no 2 Sigma.D shift.
GluedSeries glue_conjectural(const GluingSpec& spec);

/// +Q/2-marked evaluation on e^{tD}: one term per entry with exponent
/// K_j.D1 + L_k.D2 + 2(Sigma.D), -2(Sigma.D) or 0 according to sector.
ExpPolynomial eval_glued(const GluedSeries& gs, const SplitClass& d);

/// (D1 + r Sigma1, D2 - r Sigma2).
SplitClass rshift(const GluingSpec& spec, const SplitClass& d, const Rational& r);

struct CoefficientMatch {
  Rational grouped_sum;
  Rational predicted;
  Sector sector = Sector::Plus;
  bool attaining = false;

  bool holds() const { return grouped_sum == predicted; }
};

/// Groups untwisted glued coefficients whose parents restrict like K and L
/// (equal modulo Q.Sigma) and compares with (+-1)^{g-1} 2^{7g-9} (sum a)(sum b).
/// Non-attaining (K, L) give (0, 0). Requires g >= 2 and w^2 = w1^2 + w2^2 mod 4.
CoefficientMatch coefficient_match(const GluedSeries& gs, const HClass& k, const HClass& l);

/// Every distinct restriction pair (K, L) of parent classes, for exhaustive checks.
std::vector<std::pair<HClass, HClass>> restriction_pairs(const GluedSeries& gs);

}  // namespace donaldson
