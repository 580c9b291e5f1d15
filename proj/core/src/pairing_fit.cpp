#include "donaldson/pairing_fit.hpp"

#include <cstdlib>
#include <optional>

#include "donaldson/error.hpp"

namespace donaldson {

namespace {

bool p_is_odd(long p) { return p % 2 != 0; }

BasisCoordinates empty_coordinates(int genus, long d0, const Rational& d_square) {
  BasisCoordinates c{genus, d0, {}};
  for (int alpha = 1; alpha <= 2 * genus - 1; ++alpha) {
    const long p = alpha_to_p(genus, alpha);
    c.coords.emplace_back(p_is_odd(p) ? QuadMarker::plus(d_square) : QuadMarker::minus(d_square));
  }
  return c;
}

/// Adds a_w e^{lambda t} to the coordinate of p, in its sector-native form.
void add_to_coordinate(BasisCoordinates& c, long p, const Rational& lambda, const Rational& a_w) {
  ExpPolynomial& target = c.coords.at(static_cast<std::size_t>(p_to_alpha(c.genus, p) - 1));
  if (p_is_odd(p)) {
    target.add_term(GaussianRational(lambda), GaussianRational(a_w));
  } else {
    target.add_term(GaussianRational(Rational(0), lambda), i_pow(-c.d0) * GaussianRational(a_w));
  }
}

}  // namespace

long alpha_to_p(int genus, int alpha) {
  if (alpha < 1 || alpha > 2 * genus - 1) {
    throw PreconditionError("alpha " + std::to_string(alpha) + " out of range 1.." +
                            std::to_string(2 * genus - 1));
  }
  const long mag = genus - 1 - (alpha - 1) / 2;
  return alpha % 2 == 1 ? mag : -mag;
}

int p_to_alpha(int genus, long p) {
  const long mag = std::labs(p);
  if (mag > genus - 1) {
    throw PreconditionError("p = " + std::to_string(p) + " exceeds g - 1 = " +
                            std::to_string(genus - 1));
  }
  if (p == 0) return 2 * genus - 1;
  return static_cast<int>(2 * (genus - 1 - mag) + (p > 0 ? 1 : 2));
}

BasisCoordinates basis_coordinates(const DonaldsonSeries& series, const HClass& w,
                                   const MarkedSurface& s, const HClass& d) {
  if (pairing(d, s.cls()) != 1) throw PreconditionError("basis coordinates need D.Sigma = 1");
  if (!is_allowable(w, s)) throw PreconditionError("(w, Sigma) is not allowable");
  const int g = s.genus();
  BasisCoordinates c = empty_coordinates(g, d_zero(w), square(d));
  for (const auto& e : twist(series, w)) {
    const long ks = to_long(pairing(e.k, s.cls()));
    if (ks % 2 != 0) throw ParityError("basic class with odd pairing against Sigma");
    if (std::labs(ks) > 2L * g - 2) {
      throw PreconditionError("basic class violates the adjunction inequality for Sigma");
    }
    add_to_coordinate(c, ks / 2, pairing(e.k, d), e.a);
  }
  return c;
}

BasisCoordinates glued_coordinates(const GluedSeries& gs, const SplitClass& d) {
  if (gs.kind != GluingKind::Theorem) {
    throw PreconditionError("glued coordinates need a genus >= 2 fibre sum");
  }
  if (d.sigma_pairing != 1) throw PreconditionError("basis coordinates need Sigma.D = 1");
  const int g = gs.spec.genus;
  validate_split(gs.spec, d);
  BasisCoordinates c = empty_coordinates(g, gs.d0(), square(d.d1) + square(d.d2));
  // Each glued class pairs with Sigma as +-(2g-2); recover the sector from the
  // entry and the exponent from the evaluation rule.
  const auto& ks = gs.spec.left.series().entries();
  const auto& ls = gs.spec.right.series().entries();
  for (const auto& e : gs.entries) {
    const long p = e.sector == Sector::Plus ? g - 1 : -(g - 1);
    Rational lambda = pairing(ks[e.j].k, d.d1) + pairing(ls[e.k].k, d.d2);
    lambda += (p > 0 ? 2 : -2) * d.sigma_pairing;
    add_to_coordinate(c, p, lambda, e.coeff);
  }
  return c;
}

std::vector<ExpPolynomial> to_series_form(const BasisCoordinates& c) {
  std::vector<ExpPolynomial> out;
  out.reserve(c.coords.size());
  for (int alpha = 1; alpha <= 2 * c.genus - 1; ++alpha) {
    const ExpPolynomial& f = c.at(alpha);
    if (p_is_odd(alpha_to_p(c.genus, alpha))) out.push_back(f);
    else out.push_back((f * i_pow(c.d0)).rotated());
  }
  return out;
}

HClass unit_probe(const CatalogEntry& entry, const LabeledSurface& s) {
  const HClass& sigma = s.surface.cls();
  HClass w = entry.w_for(s);
  if (pairing(w, sigma) == 1) return w;
  for (const auto& nc : entry.lattice()->named_classes()) {
    HClass d(entry.lattice(), nc.coords);
    if (pairing(d, sigma) == 1) return d;
  }
  for (std::size_t i = 0; i < entry.lattice()->rank(); ++i) {
    HClass d = HClass::basis(entry.lattice(), i);
    if (pairing(d, sigma) == 1) return d;
  }
  throw PreconditionError("entry " + entry.name + " has no class D with D.Sigma = 1");
}

ReferenceTriple target_reference(const GluingSpec& spec, const SplitClass& d,
                                 const CatalogEntry& target, const std::string& target_surface,
                                 const HClass& d_target) {
  validate_split(spec, d);
  const LabeledSurface& ts = target.surface(target_surface);
  if (ts.surface.genus() != spec.genus) {
    throw PreconditionError("target surface genus does not match the gluing genus");
  }
  return {basis_coordinates(spec.left.series(), spec.left.w, spec.left.surface(), d.d1),
          basis_coordinates(spec.right.series(), spec.right.w, spec.right.surface(), d.d2),
          basis_coordinates(target.series, target.w_for(ts), ts.surface, d_target)};
}

ReferenceTriple glued_reference(const GluingSpec& spec, const SplitClass& d) {
  return {basis_coordinates(spec.left.series(), spec.left.w, spec.left.surface(), d.d1),
          basis_coordinates(spec.right.series(), spec.right.w, spec.right.surface(), d.d2),
          glued_coordinates(glue(spec), d)};
}

PairingDiagonal fit_diagonal(const std::vector<ReferenceTriple>& refs,
                             const std::vector<int>& alphas) {
  for (const auto& r : refs) {
    const int g = r.glued.genus;
    if (r.left.genus != g || r.right.genus != g) {
      throw PreconditionError("reference triple mixes genera");
    }
    const long gap = r.glued.d0 - r.left.d0 - r.right.d0 - (g - 1);
    if (gap % 4 != 0) {
      throw PreconditionError("reference triple violates d0(X) = d0(X1) + d0(X2) + g - 1 mod 4");
    }
  }

  PairingDiagonal out;
  for (int alpha : alphas) {
    std::optional<ExpPolynomial> found;
    for (const auto& r : refs) {
      const int g = r.glued.genus;
      if (alpha < 1 || alpha > 2 * g - 1) continue;
      const ExpPolynomial den = r.left.at(alpha) * r.right.at(alpha);
      if (den.is_zero()) continue;
      ExpPolynomial m = divide(r.glued.at(alpha), den);
      if (!p_is_odd(alpha_to_p(g, alpha))) m = (m * i_pow(g - 1)).rotated();
      if (found && !(*found == m)) {
        throw InexactDivision("reference triples disagree on M_" + std::to_string(alpha) +
                              std::to_string(alpha));
      }
      found = std::move(m);
    }
    if (!found) {
      throw InsufficientData("no reference triple has c1 c2 != 0 at alpha = " +
                             std::to_string(alpha));
    }
    out.emplace(alpha, std::move(*found));
  }
  return out;
}

ExpPolynomial predict_glued(const BasisCoordinates& left, const BasisCoordinates& right,
                            const PairingDiagonal& m, const Rational& sigma_d) {
  if (left.genus != right.genus || left.coords.size() != right.coords.size()) {
    throw PreconditionError("coordinate vectors are indexed by different genera");
  }
  const auto l = to_series_form(left);
  const auto r = to_series_form(right);
  ExpPolynomial out;
  for (const auto& [alpha, mm] : m) {
    if (alpha < 1 || alpha > static_cast<int>(l.size())) {
      throw PreconditionError("pairing entry alpha = " + std::to_string(alpha) + " out of range");
    }
    const auto idx = static_cast<std::size_t>(alpha - 1);
    out += l[idx] * mm.rescaled(sigma_d) * r[idx];
  }
  return out;
}

}  // namespace donaldson
