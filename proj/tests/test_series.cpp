#include <gtest/gtest.h>

#include <random>

#include "donaldson/constructions.hpp"
#include "donaldson/error.hpp"
#include "donaldson/series.hpp"
#include "oracles/oracles.hpp"

using namespace donaldson;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::vector<std::pair<HClass, Rational>> as_pairs(const std::vector<SeriesEntry>& es) {
  std::vector<std::pair<HClass, Rational>> out;
  for (const auto& e : es) out.emplace_back(e.k, e.a);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

/// F + sigma/7 + Sigma/11 + sum r_i E_i with sum r_i = 0: pairs to 1 with
/// Sigma_g and separates every basic class of B_g by its exponent.
HClass generic_probe(const CatalogEntry& bg, int g) {
  const auto& lat = bg.lattice();
  HClass d = HClass::named(lat, "F") + q(1, 7) * HClass::named(lat, "sigma") +
             q(1, 11) * HClass::named(lat, "Sigma");
  Rational total(0);
  for (int i = 1; i < g; ++i) {
    const Rational r = q(1, 2 * i + 1);
    d += r * HClass::named(lat, "E" + std::to_string(i));
    total += r;
  }
  d += -total * HClass::named(lat, "E" + std::to_string(g));
  return d;
}

}  // namespace

TEST(Series, ConstructorSortsAndRejectsDuplicates) {
  const auto k3 = elliptic_surface(4);
  const auto& lat = k3.lattice();
  const HClass f = HClass::named(lat, "F");
  DonaldsonSeries s(lat, {{f, q(1)}, {-f, q(2)}, {HClass::zero(lat), q(0)}});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_TRUE(s.entries()[0].k < s.entries()[1].k);
  EXPECT_EQ(s.coefficient(-f), q(2));
  EXPECT_EQ(s.coefficient(HClass::zero(lat)), q(0));
  EXPECT_THROW(DonaldsonSeries(lat, {{f, q(1)}, {f, q(2)}}), PreconditionError);
  EXPECT_THROW(DonaldsonSeries(lat, {{q(1, 2) * f, q(1)}}), PreconditionError);
}

TEST(Twist, ZeroClassIsIdentity) {
  const auto b3 = build_bg(3);
  const auto t = twist(b3.series, HClass::zero(b3.lattice()));
  EXPECT_EQ(as_pairs(t), as_pairs(b3.series.entries()));
}

TEST(Twist, FibreClassLeavesBgUnchanged) {
  for (int g = 2; g <= 5; ++g) {
    const auto bg = build_bg(g);
    const auto t = twist(bg.series, HClass::named(bg.lattice(), "T1"));
    EXPECT_EQ(as_pairs(t), as_pairs(bg.series.entries())) << "g=" << g;
  }
}

TEST(Twist, ExceptionalClassFlipsSign) {
  const auto blown = blow_up(elliptic_surface(2));
  const HClass e = HClass::named(blown.lattice(), "E1");
  DonaldsonSeries single(blown.lattice(), {{e, q(1)}});
  EXPECT_EQ(twist_sign(e, e), -1);
  const auto t = twist(single, e);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].a, q(-1));
}

TEST(Twist, IsAnInvolutionAndRejectsOddParity) {
  const auto b4 = build_bg(4);
  const HClass w = HClass::named(b4.lattice(), "E2") + HClass::named(b4.lattice(), "sigma");
  const auto once = twist(b4.series, w);
  const auto twice = twist(DonaldsonSeries(b4.lattice(), once), w);
  EXPECT_EQ(as_pairs(twice), as_pairs(b4.series.entries()));

  const auto k3 = elliptic_surface(2);
  DonaldsonSeries bad(k3.lattice(), {{HClass::named(k3.lattice(), "F"), q(1)}});
  EXPECT_THROW(twist(bad, HClass::named(k3.lattice(), "sigma")), ParityError);
}

TEST(Split, K3HasOnlyTheNSector) {
  const auto k3 = elliptic_surface(2);
  const auto& fib = k3.surface("F");
  const auto& lat = k3.lattice();
  // w^2 = 0 leaves the coefficient 1; w = sigma (w^2 = -2) twists it to -1.
  const HClass w0 = HClass::named(lat, "sigma") + HClass::named(lat, "F");
  const HClass w1 = HClass::named(lat, "sigma");
  for (const auto& [w, a] : {std::pair{w0, q(1)}, std::pair{w1, q(-1)}}) {
    const auto split = split_wS(k3.series, w, fib.surface);
    EXPECT_TRUE(split.p_terms.empty());
    ASSERT_EQ(split.n_terms.size(), 1u);
    EXPECT_TRUE(split.n_terms[0].k.is_zero());
    EXPECT_EQ(split.n_terms[0].c, i_pow(-d_zero(w)) * GaussianRational(a));
  }
}

TEST(Split, B2SectorsFollowSigmaPairing) {
  const auto b2 = build_bg(2);
  const auto& lat = b2.lattice();
  const auto& s = b2.surface("Sigma");
  const auto split = split_wS(b2.series, b2.w_for(s), s.surface);
  const HClass e1 = HClass::named(lat, "E1"), e2 = HClass::named(lat, "E2");
  std::vector<HClass> p, n;
  for (const auto& t : split.p_terms) p.push_back(t.k);
  for (const auto& t : split.n_terms) n.push_back(t.k);
  std::sort(p.begin(), p.end());
  std::sort(n.begin(), n.end());
  std::vector<HClass> want_p{-e1 - e2, e1 + e2}, want_n{-e1 + e2, e1 - e2};
  std::sort(want_p.begin(), want_p.end());
  std::sort(want_n.begin(), want_n.end());
  EXPECT_EQ(p, want_p);
  EXPECT_EQ(n, want_n);
}

TEST(Split, RoundTripRecoversTwistedSeries) {
  std::vector<std::pair<CatalogEntry, std::string>> cases{
      {elliptic_surface(2), "F"}, {build_bg(2), "Sigma"}, {build_bg(3), "Sigma"},
      {build_dia2_example(2, 3), "Sigma1"}, {closed_form_cg(3), "Sigma"}};
  for (const auto& [entry, label] : cases) {
    const auto& s = entry.surface(label);
    const HClass w = entry.w_for(s);
    for (const HClass& ww : {w, w + s.surface.cls()}) {
      const auto back = unsplit(split_wS(entry.series, ww, s.surface));
      EXPECT_EQ(as_pairs(back.entries()), as_pairs(twist(entry.series, ww))) << entry.name;
    }
  }
}

TEST(Split, RejectsNonAllowablePair) {
  const auto b2 = build_bg(2);
  const auto& s = b2.surface("Sigma").surface;
  EXPECT_THROW(split_wS(b2.series, HClass::zero(b2.lattice()), s), PreconditionError);
}

TEST(Split, UnsplitRejectsMisplacedTerms) {
  const auto b2 = build_bg(2);
  const auto& s = b2.surface("Sigma");
  auto split = split_wS(b2.series, b2.w_for(s), s.surface);
  std::swap(split.p_terms[0], split.n_terms[0]);
  EXPECT_THROW(unsplit(split), PreconditionError);
}

TEST(EvalInsert, XSquaredActsAsFour) {
  for (int g = 2; g <= 5; ++g) {
    const auto bg = build_bg(g);
    const auto& s = bg.surface("Sigma");
    const HClass w = bg.w_for(s);
    const HClass d = generic_probe(bg, g);
    const auto base = eval_insert(bg.series, w, s.surface, d, 0, 0);
    const auto x2 = eval_insert(bg.series, w, s.surface, d, 2, 0);
    EXPECT_EQ(x2.plus, base.plus * GaussianRational(4));
    EXPECT_EQ(x2.minus, base.minus * GaussianRational(4));
    EXPECT_EQ(base.plus.marker(), QuadMarker::plus(square(d)));
    EXPECT_EQ(base.minus.marker(), QuadMarker::minus(square(d)));
  }
}

TEST(EvalInsert, CanonicalClassTopTerm) {
  for (int g = 2; g <= 6; ++g) {
    const auto bg = build_bg(g);
    const auto& s = bg.surface("Sigma");
    const HClass w = bg.w_for(s);
    const HClass d = generic_probe(bg, g);
    const HClass k = HClass::named(bg.lattice(), "K");
    ASSERT_EQ(pairing(d, s.surface.cls()), q(1));
    const auto v = eval_insert(bg.series, w, s.surface, d, 0, 1);
    const Rational a = pow2(-(2 * g - 2));
    if (g % 2 == 0) {
      // K.Sigma = 2g-2 = 2 mod 4: P sector, factor (D+K).Sigma = 1 + 2g - 2
      EXPECT_EQ(v.plus.coefficient(pairing(k, d)), GaussianRational(a * (2 * g - 1)));
    } else {
      const GaussianRational factor(Rational(-1), Rational(2 * g - 2));
      const GaussianRational lambda(Rational(0), pairing(k, d));
      EXPECT_EQ(v.minus.coefficient(lambda), i_pow(3 * g) * GaussianRational(a) * factor);
    }
  }
}

TEST(EvalInsert, ParityFollowsD0) {
  for (const auto& entry : {elliptic_surface(3), build_bg(3), build_bg(4), closed_form_cg(2)}) {
    const auto& s = entry.surfaces.front();
    const HClass w = entry.w_for(s);
    for (const auto& d : default_probes(entry.lattice(), s.surface)) {
      const auto v = eval_insert(entry.series, w, s.surface, d, 0, 0);
      EXPECT_TRUE(has_parity(v, d_zero(w))) << entry.name;
    }
  }
  SectorPair lopsided{ExpPolynomial::monomial(GaussianRational(1), GaussianRational(1)), {}};
  EXPECT_FALSE(has_parity(lopsided, 0));
  EXPECT_FALSE(has_parity(lopsided, 1));
}

TEST(RelationPoly, ClosedForms) {
  const auto S = RelationPoly::sigma(), X = RelationPoly::x();
  const auto one = RelationPoly::constant(q(1));
  const auto half = q(1, 2);
  EXPECT_EQ(relation_poly(2), (one - half * X) * (S + one));
  EXPECT_EQ(relation_poly(3), (one + half * X) * (S + one) * (S - RelationPoly::constant(q(3))));
  EXPECT_EQ(relation_poly(4),
            (one - half * X) * (S + one) * ((S + one).pow(2) + RelationPoly::constant(q(16))));
  for (int g = 2; g <= 8; ++g) {
    EXPECT_EQ(relation_poly(g).sigma_degree(), static_cast<unsigned>(g - 1));
    EXPECT_EQ(relation_poly(g).x_degree(), 1u);
  }
  EXPECT_THROW(relation_poly(1), PreconditionError);
  EXPECT_EQ(simple_type_relation(), X * X - RelationPoly::constant(q(4)));
}

TEST(RelationPoly, ExpandedFormMatchesFactoredOracle) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int g = 2; g <= 8; ++g) {
    const auto z = relation_poly(g);
    for (int trial = 0; trial < 25; ++trial) {
      const GaussianRational s(q(d(rng), 1 + std::abs(d(rng))), q(d(rng), 3));
      const GaussianRational x(q(d(rng), 2), q(d(rng), 5));
      EXPECT_EQ(z.evaluate(s, x), oracle::factored_relation(g, s, x)) << "g=" << g;
    }
  }
}

TEST(ApplyRelation, VanishesOnBg) {
  for (int g = 2; g <= 6; ++g) {
    const auto bg = build_bg(g);
    const auto& s = bg.surface("Sigma");
    const HClass w = bg.w_for(s);
    const auto z = relation_poly(g);
    for (const HClass& ww : {w, w + s.surface.cls()}) {
      auto probes = default_probes(bg.lattice(), s.surface);
      probes.push_back(generic_probe(bg, g));
      for (const auto& d : probes) {
        const auto r = apply_relation(bg.series, ww, s.surface, z, d);
        EXPECT_TRUE(r.vanishing_guaranteed);
        EXPECT_TRUE(r.value.is_zero()) << "g=" << g;
      }
    }
  }
}

TEST(ApplyRelation, TrivialRelations) {
  const auto b3 = build_bg(3);
  const auto& s = b3.surface("Sigma");
  const HClass w = b3.w_for(s);
  const HClass d = generic_probe(b3, 3);
  EXPECT_TRUE(apply_relation(b3.series, w, s.surface, simple_type_relation(), d).value.is_zero());
  const auto one = apply_relation(b3.series, w, s.surface, RelationPoly::constant(q(1)), d);
  EXPECT_EQ(one.value, eval_insert(b3.series, w, s.surface, d, 0, 0));
  const HClass off = d + HClass::named(b3.lattice(), "E1");
  EXPECT_FALSE(apply_relation(b3.series, w, s.surface, relation_poly(3), off).vanishing_guaranteed);
}

TEST(FiniteType, Orders) {
  const auto k3 = elliptic_surface(2);
  const auto& f = k3.surface("F");
  const auto probes = default_probes(k3.lattice(), f.surface);
  ASSERT_FALSE(probes.empty());
  EXPECT_EQ(finite_type_order(DonaldsonSeries::zero(k3.lattice()), k3.w_for(f), f.surface, probes), 0);
  EXPECT_EQ(finite_type_order(k3.series, k3.w_for(f), f.surface, probes), 1);
  for (int g = 2; g <= 5; ++g) {
    const auto bg = build_bg(g);
    const auto& s = bg.surface("Sigma");
    EXPECT_EQ(finite_type_order(bg.series, bg.w_for(s), s.surface,
                                default_probes(bg.lattice(), s.surface)),
              1);
  }
}

TEST(Adjunction, DetectsViolators) {
  const auto b2 = build_bg(2);
  const auto& s = b2.surface("Sigma").surface;
  EXPECT_TRUE(check_adjunction(b2.series, s).holds);
  EXPECT_TRUE(check_adjunction(DonaldsonSeries::zero(b2.lattice()), s).holds);
  const auto& lat = b2.lattice();
  const HClass big = HClass::named(lat, "K") + q(2) * HClass::named(lat, "F");
  ASSERT_EQ(pairing(big, s.cls()), q(4));
  const auto report = check_adjunction(DonaldsonSeries(lat, {{big, q(1)}}), s);
  EXPECT_FALSE(report.holds);
  ASSERT_EQ(report.violators.size(), 1u);
  EXPECT_EQ(report.violators[0].k, big);
}

TEST(Involution, CatalogSeriesAreInvariant) {
  for (const auto& e : {elliptic_surface(2), elliptic_surface(3), build_bg(3), build_bg(4),
                        build_dia2_example(2, 4), closed_form_cg(3), closed_form_cg(4)}) {
    EXPECT_TRUE(involution_violations(e.series).empty()) << e.name;
    EXPECT_TRUE(non_characteristic_entries(e.series).empty()) << e.name;
  }
  const auto s3 = elliptic_surface(3);
  const HClass f = HClass::named(s3.lattice(), "F");
  // b+ = 5 gives d0 = -9, so -F must carry -a.
  EXPECT_EQ(untwisted_d_zero(s3.series), -9);
  DonaldsonSeries broken(s3.lattice(), {{f, q(1, 2)}, {-f, q(1, 2)}});
  EXPECT_EQ(involution_violations(broken).size(), 2u);
}
