#pragma once

#include <map>
#include <vector>

#include "donaldson/gluing.hpp"

namespace donaldson {

/// Index alpha = 1 .. 2g-1  <->  p = g-1, -(g-1), g-2, -(g-2), ..., 0.
long alpha_to_p(int genus, int alpha);
int p_to_alpha(int genus, long p);

/// c_{X,alpha}(t) for alpha = 1..2g-1 (stored at alpha-1). Odd p: +Q/2 marker,
/// real exponents. Even p: -Q/2 marker, i^{-d0} absorbed, imaginary exponents.
struct BasisCoordinates {
  int genus = 2;
  long d0 = 0;
  std::vector<ExpPolynomial> coords;

  const ExpPolynomial& at(int alpha) const { return coords.at(static_cast<std::size_t>(alpha - 1)); }
};

/// Requires D.Sigma = 1 and |K.Sigma| <= 2g-2 for every basic class.
BasisCoordinates basis_coordinates(const DonaldsonSeries& series, const HClass& w,
                                   const MarkedSurface& s, const HClass& d);

/// Coordinates of a fibre sum from its glued series, probed with d (Sigma.D = 1).
BasisCoordinates glued_coordinates(const GluedSeries& gs, const SplitClass& d);

/// Back to the e^{+Q/2}, real-exponent form: even-p coordinates get i^{d0}
/// and t -> -it.
std::vector<ExpPolynomial> to_series_form(const BasisCoordinates& c);

struct ReferenceTriple {
  BasisCoordinates left;
  BasisCoordinates right;
  BasisCoordinates glued;
};

/// The surface's w when it pairs to 1 with Sigma, else the first named or basis
/// class that does. Throws PreconditionError if none exists.
HClass unit_probe(const CatalogEntry& entry, const LabeledSurface& s);

/// Reference whose glued side is a known entry evaluated at d_target
/// (d_target.Sigma = 1), with the pieces probed by d.
ReferenceTriple target_reference(const GluingSpec& spec, const SplitClass& d,
                                 const CatalogEntry& target, const std::string& target_surface,
                                 const HClass& d_target);

/// Reference whose glued side comes from glue(spec), probed by d.
ReferenceTriple glued_reference(const GluingSpec& spec, const SplitClass& d);

using PairingDiagonal = std::map<int, ExpPolynomial>;

/// M_aa = c_X / (c_1 c_2) for each sought alpha, normalized so even-p entries
/// are comparable with odd-p ones (i^{g-1} absorbed, t -> -it). Throws
/// InsufficientData when no reference has c_1 c_2 != 0 at some alpha, and
/// InexactDivision when a division is inexact or references disagree.
PairingDiagonal fit_diagonal(const std::vector<ReferenceTriple>& refs,
                             const std::vector<int>& alphas);

/// sum_alpha c_1(t) M_aa(t (D.Sigma)) c_2(t), in series form.
ExpPolynomial predict_glued(const BasisCoordinates& left, const BasisCoordinates& right,
                            const PairingDiagonal& m, const Rational& sigma_d);

}  // namespace donaldson
