#include <gtest/gtest.h>

#include <random>

#include "donaldson/error.hpp"
#include "donaldson/gluing.hpp"
#include "oracles/oracles.hpp"
#include "support/gluings.hpp"

using namespace donaldson;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

GluingSpec bg_double(int g) { return make_spec(build_bg(g), build_bg(g), g); }

SplitClass fibre_split(const GluingSpec& spec) {
  return {HClass::named(spec.left.entry.lattice(), "T1"),
          HClass::named(spec.right.entry.lattice(), "T1"), q(1)};
}

const std::vector<CatalogEntry>& entries() {
  static const auto e = support::standard_entries();
  return e;
}

}  // namespace

TEST(Glue, ReproducesClosedForm) {
  for (int g = 2; g <= 6; ++g) {
    const auto gs = glue(bg_double(g));
    ASSERT_EQ(gs.entries.size(), 2u) << "g=" << g;
    std::map<Sector, Rational> by;
    for (const auto& e : gs.entries) by[e.sector] = e.coeff;
    EXPECT_EQ(by.at(Sector::Plus), -pow2(3 * g - 5));
    EXPECT_EQ(by.at(Sector::Minus), sign_pow(g) * pow2(3 * g - 5));

    const auto v = eval_glued(gs, fibre_split(gs.spec));
    EXPECT_EQ(v.size(), 2u);
    EXPECT_EQ(v.coefficient(GaussianRational(2)), GaussianRational(-pow2(3 * g - 5)));
    EXPECT_EQ(v.coefficient(GaussianRational(-2)), GaussianRational(sign_pow(g) * pow2(3 * g - 5)));
  }
}

TEST(Glue, MatchesClosedFormEntryUnderTwist) {
  for (int g = 2; g <= 6; ++g) {
    const auto gs = glue(bg_double(g));
    const auto cg = closed_form_cg(g);
    const DonaldsonSeries t(cg.lattice(), twist(cg.series, HClass::named(cg.lattice(), "Sigma2hat")));
    const HClass k = HClass::named(cg.lattice(), "K");
    for (const auto& e : gs.entries) {
      EXPECT_EQ(e.coeff, t.coefficient(e.sector == Sector::Plus ? k : -k));
    }
  }
}

TEST(Glue, VanishingDoubles) {
  for (int g = 2; g <= 5; ++g)
    for (int gp = 1; gp < g; ++gp) {
      const auto d = build_dia2_example(gp, g);
      EXPECT_TRUE(glue(make_spec(d, d, g)).entries.empty()) << gp << "," << g;
      // K3 carrying a genus-g surface against B_g: nothing reaches 2g-2.
      EXPECT_TRUE(glue(make_spec(build_dia2_example(1, g), build_bg(g), g)).entries.empty());
    }
}

TEST(Glue, RejectsBadSpecs) {
  const auto k3 = elliptic_surface(2);
  EXPECT_THROW(glue(make_spec(k3, k3, 1)), PreconditionError);
  auto spec = bg_double(3);
  spec.w_square += 1;
  EXPECT_THROW(glue(spec), ParityError);
  auto mixed = bg_double(3);
  mixed.right = make_side(build_bg(4), "Sigma");
  EXPECT_THROW(glue(mixed), PreconditionError);
}

TEST(Glue, EvaluationAgainstSigma) {
  for (int g = 2; g <= 5; ++g) {
    const auto gs = glue(bg_double(g));
    const SplitClass d{gs.spec.left.surface().cls(), HClass::zero(gs.spec.right.entry.lattice()), q(0)};
    const auto v = eval_glued(gs, d);
    for (const auto& e : gs.entries) {
      const GaussianRational lambda(q(e.sector == Sector::Plus ? 2 * g - 2 : -(2 * g - 2)));
      EXPECT_EQ(v.coefficient(lambda), GaussianRational(e.coeff));
    }
  }
  const auto empty = glue(make_spec(build_dia2_example(1, 3), build_dia2_example(1, 3), 3));
  EXPECT_TRUE(eval_glued(empty, support::unit_split(empty.spec)).is_zero());
}

TEST(Glue, RshiftInvariance) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 12);
  for (const auto& spec : support::catalog_gluings(entries(), 2, 4)) {
    const auto gs = glue(spec);
    const auto d = support::unit_split(spec);
    const auto base = eval_glued(gs, d);
    EXPECT_EQ(eval_glued(gs, rshift(spec, d, q(0))), base);
    for (int i = 0; i < 100; ++i) {
      const auto r = q(num(rng), den(rng));
      EXPECT_EQ(eval_glued(gs, rshift(spec, d, r)), base) << support::describe(spec) << " r=" << r;
    }
  }
}

TEST(Glue, SwapSymmetry) {
  for (const auto& spec : support::catalog_gluings(entries(), 2, 4)) {
    const GluingSpec swapped{spec.right, spec.left, spec.genus, spec.w_square};
    auto a = glue(spec).entries;
    auto b = glue(swapped).entries;
    for (auto& e : b) std::swap(e.j, e.k);
    const auto key = [](const GluedEntry& x, const GluedEntry& y) {
      return std::tie(x.j, x.k, x.sector) < std::tie(y.j, y.k, y.sector);
    };
    std::sort(a.begin(), a.end(), key);
    std::sort(b.begin(), b.end(), key);
    EXPECT_EQ(a, b) << support::describe(spec);
  }
}

TEST(Glue, EpsilonVariant) {
  for (int g = 2; g <= 5; ++g) {
    const auto spec = bg_double(g);
    auto shifted = spec;
    shifted.w_square += 2;
    EXPECT_EQ(epsilon(spec), 1);
    EXPECT_EQ(epsilon(shifted), sign_pow(g - 1));
    const auto a = glue(spec), b = glue(shifted);
    ASSERT_EQ(a.entries.size(), b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i)
      EXPECT_EQ(b.entries[i].coeff, epsilon(shifted) * a.entries[i].coeff);
    EXPECT_THROW(coefficient_match(b, HClass::named(spec.left.entry.lattice(), "K"),
                                   HClass::named(spec.right.entry.lattice(), "K")),
                 PreconditionError);
  }
}

TEST(Glue, D0Congruence) {
  for (const auto& spec : support::catalog_gluings(entries())) EXPECT_TRUE(d0_congruence_holds(spec));
}

TEST(CoefficientMatch, CanonicalClasses) {
  for (int g = 2; g <= 5; ++g) {
    const auto gs = glue(bg_double(g));
    const HClass k = HClass::named(gs.spec.left.entry.lattice(), "K");
    const HClass l = HClass::named(gs.spec.right.entry.lattice(), "K");
    const auto plus = coefficient_match(gs, k, l);
    EXPECT_TRUE(plus.attaining);
    EXPECT_EQ(plus.sector, Sector::Plus);
    EXPECT_TRUE(plus.holds());
    EXPECT_EQ(Rational(abs(plus.grouped_sum)), pow2(3 * g - 5));
    const auto minus = coefficient_match(gs, -k, -l);
    EXPECT_EQ(minus.sector, Sector::Minus);
    EXPECT_TRUE(minus.holds());
    const auto off = coefficient_match(gs, k, -l);
    EXPECT_FALSE(off.attaining);
    EXPECT_EQ(off.grouped_sum, 0);
    EXPECT_EQ(off.predicted, 0);
  }
}

TEST(CoefficientMatch, AllCatalogGluings) {
  for (const auto& spec : support::catalog_gluings(entries(), 2, 4)) {
    const auto gs = glue(spec);
    for (const auto& [k, l] : restriction_pairs(gs)) {
      const auto m = coefficient_match(gs, k, l);
      EXPECT_TRUE(m.holds()) << support::describe(spec);
      if (!m.attaining) {
        EXPECT_EQ(m.grouped_sum, 0);
      }
    }
  }
}

TEST(CoefficientMatch, TorusRejected) {
  const auto k3 = elliptic_surface(2);
  const auto gs = glue_torus(make_spec(k3, k3, 1));
  EXPECT_THROW(coefficient_match(gs, HClass::zero(k3.lattice()), HClass::zero(k3.lattice())),
               PreconditionError);
}

TEST(CoefficientMatch, QuarterTurnEvaluation) {
  // At t = pi i / 2 each exponential becomes i^lambda; check against floating point.
  for (const auto& spec : support::catalog_gluings(entries(), 2, 4)) {
    const auto v = eval_glued(glue(spec), support::unit_split(spec));
    GaussianRational exact;
    std::complex<double> numeric = 0;
    double scale = 1;
    for (const auto& [lambda, c] : v.terms()) {
      ASSERT_TRUE(lambda.is_real() && is_integer(lambda.re()));
      exact += c * i_pow(to_long(lambda.re()));
      numeric += oracle::to_complex(c) * oracle::quarter_turn(lambda);
      scale += std::abs(oracle::to_complex(c));
    }
    EXPECT_NEAR(std::abs(oracle::to_complex(exact) - numeric), 0.0, 1e-12 * scale);
  }
}

TEST(Torus, K3WithK3) {
  const auto k3 = elliptic_surface(2);
  const auto gs = glue_torus(make_spec(k3, k3, 1));
  ASSERT_EQ(gs.entries.size(), 3u);
  std::map<Sector, Rational> by;
  Rational total;
  for (const auto& e : gs.entries) {
    by[e.sector] = e.coeff;
    total += e.coeff;
  }
  EXPECT_EQ(by.at(Sector::Plus), q(-1, 4));
  EXPECT_EQ(by.at(Sector::Minus), q(-1, 4));
  EXPECT_EQ(by.at(Sector::Zero), q(-1, 2));
  EXPECT_EQ(total, q(-1));

  const SplitClass d{HClass::named(k3.lattice(), "sigma"), HClass::named(k3.lattice(), "sigma"), q(1)};
  const auto v = eval_glued(gs, d);
  EXPECT_EQ(v.coefficient(GaussianRational(2)), GaussianRational(q(-1, 4)));
  EXPECT_EQ(v.coefficient(GaussianRational(-2)), GaussianRational(q(-1, 4)));
  EXPECT_EQ(v.coefficient(GaussianRational(0)), GaussianRational(q(-1, 2)));

  auto zero = k3;
  zero.series = DonaldsonSeries::zero(k3.lattice());
  EXPECT_TRUE(glue_torus(make_spec(zero, k3, 1)).entries.empty());
  EXPECT_THROW(glue_torus(bg_double(2)), PreconditionError);
}

TEST(Conjectural, ClosedFormInputs) {
  for (int g = 2; g <= 4; ++g) {
    const auto cg = closed_form_cg(g);
    const auto spec = make_spec(cg, cg, g);
    const auto gs = glue_conjectural(spec);
    ASSERT_EQ(gs.entries.size(), 2u);
    const Rational a = pow2(3 * g - 5);  // |twisted coefficient|
    for (const auto& e : gs.entries) {
      if (e.sector == Sector::Plus) EXPECT_EQ(e.coeff, -pow2(-3 * g + 5) * a * a);
      else EXPECT_EQ(e.coeff, sign_pow(g) * pow2(-3 * g + 5) * a * a);
    }
    auto shifted = spec;
    shifted.w_square += 2;
    const auto eps = glue_conjectural(shifted);
    for (std::size_t i = 0; i < 2; ++i)
      EXPECT_EQ(eps.entries[i].coeff, sign_pow(g - 1) * gs.entries[i].coeff);

    // No 2 Sigma.D shift in the exponents.
    const auto d = support::unit_split(spec);
    const auto v = eval_glued(gs, d);
    const auto& k = cg.series.entries();
    for (const auto& e : gs.entries) {
      const Rational lambda = pairing(k[e.j].k, d.d1) + pairing(k[e.k].k, d.d2);
      EXPECT_EQ(v.coefficient(GaussianRational(lambda)), GaussianRational(e.coeff));
    }
  }
  EXPECT_EQ(pow2(-3 * 2 + 5), q(1, 2));
  const auto k3g = build_dia2_example(1, 3);
  EXPECT_TRUE(glue_conjectural(make_spec(k3g, k3g, 3)).entries.empty());
}
