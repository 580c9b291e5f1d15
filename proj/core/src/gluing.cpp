#include "donaldson/gluing.hpp"

#include <cstdlib>

#include "donaldson/error.hpp"

namespace donaldson {

namespace {

bool is_multiple_of(const HClass& v, const HClass& sigma) {
  const Coords& s = sigma.coords();
  std::size_t pivot = 0;
  while (pivot < s.size() && sgn(s[pivot]) == 0) ++pivot;
  if (pivot == s.size()) return v.is_zero();
  const Rational c = v.coords()[pivot] / s[pivot];
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (v.coords()[i] != c * s[i]) return false;
  }
  return true;
}

/// (-1)^{e/2} for an even integer e.
int twist_sign_value(const Rational& e) {
  if (!is_integer(e) || mpz_odd_p(e.get_num().get_mpz_t()) != 0) {
    throw ParityError("kappa.w + w^2 is odd for a glued class");
  }
  return sign_pow(to_long(e) / 2);
}

bool restricts_like(const HClass& a, const HClass& b, const HClass& sigma) {
  return is_multiple_of(a - b, sigma);
}

void require_side(const GluingSide& side, int genus, const char* which) {
  const std::string tag = std::string(which) + " side (" + side.entry.name + ")";
  const MarkedSurface& s = side.surface();
  if (s.genus() != genus) {
    throw PreconditionError(tag + ": surface genus " + std::to_string(s.genus()) +
                            " does not match g = " + std::to_string(genus));
  }
  if (!same_lattice(side.w.lattice(), side.series().lattice())) {
    throw LatticeMismatch(tag + ": w is not on the entry's lattice");
  }
  if (!is_allowable(side.w, s)) throw PreconditionError(tag + ": (w, Sigma) is not allowable");
  const DonaldsonSeries& series = side.series();
  if (!series.simple_type()) throw PreconditionError(tag + ": series is not of simple type");
  if (series.b_one() != 0) throw PreconditionError(tag + ": b1 must vanish");
  if (series.b_plus() <= 1 || series.b_plus() % 2 == 0) {
    throw PreconditionError(tag + ": b+ must be odd and > 1");
  }
}

void require_spec(const GluingSpec& spec) {
  require_side(spec.left, spec.genus, "left");
  require_side(spec.right, spec.genus, "right");
  if (!is_integer(spec.w_square)) throw ParityError("w^2 must be an integer");
  const Rational diff = spec.w_square - square(spec.left.w) - square(spec.right.w);
  if (mpz_odd_p(diff.get_num().get_mpz_t()) != 0) {
    throw ParityError("w^2 must agree with w1^2 + w2^2 mod 2");
  }
}

std::vector<Rational> twisted_coefficients(const GluingSide& side) {
  std::vector<Rational> out;
  for (auto& e : twist(side.series(), side.w)) out.push_back(e.a);
  return out;
}

long sigma_pairing(const HClass& k, const GluingSide& side) {
  return to_long(pairing(k, side.surface().cls()));
}

}  // namespace

GluingSide make_side(CatalogEntry entry, const std::string& surface_label) {
  const LabeledSurface& s = entry.surface(surface_label);
  HClass w = entry.w_for(s);
  return {std::move(entry), surface_label, std::move(w)};
}

GluingSpec make_spec(CatalogEntry left, CatalogEntry right, int genus) {
  const std::string ll = left.surface_of_genus(genus).label;
  const std::string rl = right.surface_of_genus(genus).label;
  GluingSide l = make_side(std::move(left), ll);
  GluingSide r = make_side(std::move(right), rl);
  Rational w_sq = square(l.w) + square(r.w);
  return {std::move(l), std::move(r), genus, w_sq};
}

std::string to_string(Sector s) {
  switch (s) {
    case Sector::Plus: return "+";
    case Sector::Minus: return "-";
    case Sector::Zero: return "0";
  }
  return "?";
}

Sector parse_sector(const std::string& text) {
  if (text == "+") return Sector::Plus;
  if (text == "-") return Sector::Minus;
  if (text == "0") return Sector::Zero;
  throw PreconditionError("unknown sector '" + text + "'");
}

std::string to_string(GluingKind k) {
  switch (k) {
    case GluingKind::Theorem: return "theorem";
    case GluingKind::Torus: return "torus";
    case GluingKind::Conjectural: return "conjectural";
  }
  return "?";
}

GluingKind parse_kind(const std::string& text) {
  if (text == "theorem") return GluingKind::Theorem;
  if (text == "torus") return GluingKind::Torus;
  if (text == "conjectural") return GluingKind::Conjectural;
  throw PreconditionError("unknown gluing kind '" + text + "'");
}

int GluedSeries::b_plus() const { return glued_b_plus(spec); }

long GluedSeries::d0() const { return d_zero(spec.w_square, 0, b_plus()); }

void validate_split(const GluingSpec& spec, const SplitClass& d) {
  if (!same_lattice(d.d1.lattice(), spec.left.series().lattice()) ||
      !same_lattice(d.d2.lattice(), spec.right.series().lattice())) {
    throw LatticeMismatch("split class parts are not on the glued pieces' lattices");
  }
  if (pairing(d.d1, spec.left.surface().cls()) != d.sigma_pairing ||
      pairing(d.d2, spec.right.surface().cls()) != d.sigma_pairing) {
    throw PreconditionError("split class: D1.Sigma1 and D2.Sigma2 must both equal Sigma.D = " +
                            to_string(d.sigma_pairing));
  }
}

int epsilon(const GluingSpec& spec) {
  const Rational diff = spec.w_square - square(spec.left.w) - square(spec.right.w);
  if (!is_integer(diff) || mpz_odd_p(diff.get_num().get_mpz_t()) != 0) {
    throw ParityError("w^2 - w1^2 - w2^2 must be even");
  }
  const long half = to_long(diff) / 2;
  return sign_pow(static_cast<long>(spec.genus - 1) * half);
}

int glued_b_plus(const GluingSpec& spec) {
  return spec.left.series().b_plus() + spec.right.series().b_plus() + 2 * spec.genus - 1;
}

bool d0_congruence_holds(const GluingSpec& spec) {
  const long d0 = d_zero(spec.w_square, 0, glued_b_plus(spec));
  const long d1 = d_zero(spec.left.w);
  const long d2 = d_zero(spec.right.w);
  return (d0 - d1 - d2 - (spec.genus - 1)) % 2 == 0;
}

GluedSeries glue(const GluingSpec& spec) {
  if (spec.genus == 1) throw PreconditionError("g = 1 gluing along tori: use glue_torus");
  if (spec.genus < 1) throw PreconditionError("genus must be positive");
  require_spec(spec);

  const long g = spec.genus;
  const Rational eps(epsilon(spec));
  const Rational plus = -pow2(7 * g - 9) * eps;
  const Rational minus = sign_pow(g) * pow2(7 * g - 9) * eps;
  const auto a = twisted_coefficients(spec.left);
  const auto b = twisted_coefficients(spec.right);
  const auto& ks = spec.left.series().entries();
  const auto& ls = spec.right.series().entries();

  GluedSeries out{GluingKind::Theorem, spec, {}, true};
  for (std::size_t j = 0; j < ks.size(); ++j) {
    const long kp = sigma_pairing(ks[j].k, spec.left);
    if (std::labs(kp) != 2 * g - 2) continue;
    for (std::size_t k = 0; k < ls.size(); ++k) {
      if (sigma_pairing(ls[k].k, spec.right) != kp) continue;
      if (kp > 0) out.entries.push_back({j, k, Sector::Plus, plus * a[j] * b[k]});
      else out.entries.push_back({j, k, Sector::Minus, minus * a[j] * b[k]});
    }
  }
  return out;
}

GluedSeries glue_torus(const GluingSpec& spec) {
  if (spec.genus != 1) throw PreconditionError("torus gluing needs g = 1");
  require_spec(spec);
  for (const GluingSide* side : {&spec.left, &spec.right}) {
    for (const auto& e : side->series().entries()) {
      if (sigma_pairing(e.k, *side) != 0) {
        throw PreconditionError("torus gluing: every basic class must pair to 0 with the torus");
      }
    }
  }
  const auto a = twisted_coefficients(spec.left);
  const auto b = twisted_coefficients(spec.right);
  GluedSeries out{GluingKind::Torus, spec, {}, true};
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      const Rational ab = a[j] * b[k];
      out.entries.push_back({j, k, Sector::Plus, Rational(-1, 4) * ab});
      out.entries.push_back({j, k, Sector::Minus, Rational(-1, 4) * ab});
      out.entries.push_back({j, k, Sector::Zero, Rational(-1, 2) * ab});
    }
  }
  return out;
}

GluedSeries glue_conjectural(const GluingSpec& spec) {
  if (spec.genus < 2) throw PreconditionError("conjectural gluing needs g >= 2");
  require_spec(spec);
  const long g = spec.genus;
  const Rational eps(epsilon(spec));
  const Rational plus = -pow2(-3 * g + 5) * eps;
  const Rational minus = sign_pow(g) * pow2(-3 * g + 5) * eps;
  const auto a = twisted_coefficients(spec.left);
  const auto b = twisted_coefficients(spec.right);
  const auto& ks = spec.left.series().entries();
  const auto& ls = spec.right.series().entries();

  GluedSeries out{GluingKind::Conjectural, spec, {}, true};
  for (std::size_t j = 0; j < ks.size(); ++j) {
    const long kp = sigma_pairing(ks[j].k, spec.left);
    if (std::labs(kp) != 2 * g - 2) continue;
    for (std::size_t k = 0; k < ls.size(); ++k) {
      if (sigma_pairing(ls[k].k, spec.right) != kp) continue;
      if (kp > 0) out.entries.push_back({j, k, Sector::Plus, plus * a[j] * b[k]});
      else out.entries.push_back({j, k, Sector::Minus, minus * a[j] * b[k]});
    }
  }
  return out;
}

ExpPolynomial eval_glued(const GluedSeries& gs, const SplitClass& d) {
  validate_split(gs.spec, d);
  ExpPolynomial out(QuadMarker::plus(square(d.d1) + square(d.d2)));
  const auto& ks = gs.spec.left.series().entries();
  const auto& ls = gs.spec.right.series().entries();
  const Rational shift = gs.kind == GluingKind::Conjectural ? Rational(0) : 2 * d.sigma_pairing;
  for (const auto& e : gs.entries) {
    Rational lambda = pairing(ks.at(e.j).k, d.d1) + pairing(ls.at(e.k).k, d.d2);
    if (e.sector == Sector::Plus) lambda += shift;
    else if (e.sector == Sector::Minus) lambda -= shift;
    out.add_term(GaussianRational(lambda), GaussianRational(e.coeff));
  }
  return out;
}

SplitClass rshift(const GluingSpec& spec, const SplitClass& d, const Rational& r) {
  return {d.d1 + r * spec.left.surface().cls(), d.d2 - r * spec.right.surface().cls(),
          d.sigma_pairing};
}

CoefficientMatch coefficient_match(const GluedSeries& gs, const HClass& k, const HClass& l) {
  if (gs.kind != GluingKind::Theorem) {
    throw PreconditionError("coefficient matching applies to genus >= 2 fibre sums only");
  }
  const GluingSpec& spec = gs.spec;
  const HClass& s1 = spec.left.surface().cls();
  const HClass& s2 = spec.right.surface().cls();
  const Rational diff = spec.w_square - square(spec.left.w) - square(spec.right.w);
  if (!is_integer(diff) || mpz_divisible_ui_p(diff.get_num().get_mpz_t(), 4) == 0) {
    throw PreconditionError("coefficient matching needs w^2 = w1^2 + w2^2 mod 4");
  }

  const long g = spec.genus;
  const Rational kp = pairing(k, s1);
  const Rational lp = pairing(l, s2);
  CoefficientMatch out;
  if (kp != lp || abs(kp) != 2 * g - 2) return out;
  out.attaining = true;
  out.sector = sgn(kp) > 0 ? Sector::Plus : Sector::Minus;

  const auto& ks = spec.left.series().entries();
  const auto& ls = spec.right.series().entries();
  const Rational w_sigma = pairing(spec.left.w, s1);
  for (const auto& e : gs.entries) {
    if (e.sector != out.sector) continue;
    if (!restricts_like(ks[e.j].k, k, s1) || !restricts_like(ls[e.k].k, l, s2)) continue;
    // kappa.w for the glued class, read off the parents.
    Rational kw = pairing(ks[e.j].k, spec.left.w) + pairing(ls[e.k].k, spec.right.w);
    kw += (out.sector == Sector::Plus ? 2 : -2) * w_sigma;
    out.grouped_sum += twist_sign_value(kw + spec.w_square) * e.coeff;
  }

  Rational sum_a, sum_b;
  for (const auto& e : ks)
    if (restricts_like(e.k, k, s1)) sum_a += e.a;
  for (const auto& e : ls)
    if (restricts_like(e.k, l, s2)) sum_b += e.a;
  const int sign = out.sector == Sector::Plus ? 1 : sign_pow(g - 1);
  out.predicted = sign * pow2(7 * g - 9) * sum_a * sum_b;
  return out;
}

std::vector<std::pair<HClass, HClass>> restriction_pairs(const GluedSeries& gs) {
  const auto reps = [](const DonaldsonSeries& series, const HClass& sigma) {
    std::vector<HClass> out;
    for (const auto& e : series.entries()) {
      bool seen = false;
      for (const auto& r : out) {
        if (restricts_like(e.k, r, sigma)) {
          seen = true;
          break;
        }
      }
      if (!seen) out.push_back(e.k);
    }
    return out;
  };
  const auto left = reps(gs.spec.left.series(), gs.spec.left.surface().cls());
  const auto right = reps(gs.spec.right.series(), gs.spec.right.surface().cls());
  std::vector<std::pair<HClass, HClass>> out;
  out.reserve(left.size() * right.size());
  for (const auto& a : left)
    for (const auto& b : right) out.emplace_back(a, b);
  return out;
}

}  // namespace donaldson
