#include <gtest/gtest.h>

#include <random>

#include "donaldson/catalog.hpp"
#include "donaldson/error.hpp"
#include "donaldson/json_io.hpp"

using namespace donaldson;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

template <class T, class To, class From>
void expect_round_trip(const T& x, To to, From from) {
  const Json j = to(x);
  const Json reparsed = Json::parse(j.dump());
  EXPECT_EQ(from(reparsed), x);
  EXPECT_EQ(to(from(reparsed)).dump(), j.dump());
}

}  // namespace

TEST(JsonIo, Scalars) {
  for (const auto& r : {q(0), q(-7), q(3, 8), q(-22, 7)})
    expect_round_trip(r, [](const Rational& x) { return to_json(x); }, rational_from_json);
  EXPECT_EQ(to_json(q(-1, 4)).get<std::string>(), "-1/4");
  EXPECT_EQ(rational_from_json(Json(5)), q(5));
  for (const auto& z : {GaussianRational(q(1, 2), q(-3)), GaussianRational::i(), GaussianRational(q(4))})
    expect_round_trip(z, [](const GaussianRational& x) { return to_json(x); }, gaussian_from_json);
  EXPECT_THROW(rational_from_json(Json(1.5)), PreconditionError);
  EXPECT_EQ(coords_to_json({q(1), q(-1, 2)}).dump(), "[1,\"-1/2\"]");
  EXPECT_EQ(coords_from_json(Json::parse("[1,\"-1/2\"]")), (Coords{q(1), q(-1, 2)}));
}

TEST(JsonIo, ExpPolynomials) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    QuadMarker m = trial % 3 == 0 ? QuadMarker::none()
                                  : trial % 3 == 1 ? QuadMarker::plus(q(d(rng), 3))
                                                   : QuadMarker::minus(q(d(rng)));
    ExpPolynomial f(m);
    for (int k = 0; k < 4; ++k)
      f.add_term(GaussianRational(q(d(rng), 2), q(d(rng))), GaussianRational(q(d(rng)), q(d(rng), 7)));
    const Json j = exp_to_json(f);
    const auto back = exp_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back, f);
    EXPECT_EQ(back.marker(), f.marker());
  }
  EXPECT_THROW(exp_from_json(Json::parse(R"({"marker":"?","terms":[]})")), PreconditionError);
}

TEST(JsonIo, CatalogEntries) {
  for (const auto& r : standard_recipes()) {
    const auto e = build_recipe(r);
    const auto back = entry_from_json(Json::parse(entry_text(e)));
    EXPECT_EQ(entry_text(back), entry_text(e));
    EXPECT_EQ(back.series.size(), e.series.size());
    for (std::size_t i = 0; i < e.series.size(); ++i) {
      EXPECT_EQ(back.series.entries()[i].a, e.series.entries()[i].a);
      EXPECT_EQ(back.series.entries()[i].k.coords(), e.series.entries()[i].k.coords());
    }
  }
}

TEST(JsonIo, SeriesRejectsForeignLattice) {
  const auto b2 = build_bg(2), b3 = build_bg(3);
  EXPECT_THROW(series_from_json(series_to_json(b2.series), b3.lattice()), LatticeMismatch);
}

TEST(JsonIo, GluedSeries) {
  const EntryResolver resolve = [](const std::string& r) { return build_recipe(r); };
  std::vector<GluedSeries> cases{glue(make_spec(build_bg(3), build_bg(3), 3)),
                                 glue(make_spec(build_bg(4), closed_form_cg(4), 4)),
                                 glue(make_spec(build_dia2_example(2, 3), build_dia2_example(2, 3), 3)),
                                 glue_torus(make_spec(elliptic_surface(2), elliptic_surface(2), 1)),
                                 glue_conjectural(make_spec(closed_form_cg(2), closed_form_cg(2), 2))};
  auto eps = make_spec(build_bg(2), build_bg(2), 2);
  eps.w_square += 2;
  cases.push_back(glue(eps));
  for (const auto& gs : cases) {
    const Json j = glued_to_json(gs);
    const auto back = glued_from_json(Json::parse(j.dump()), resolve);
    EXPECT_EQ(back.entries, gs.entries);
    EXPECT_EQ(back.kind, gs.kind);
    EXPECT_EQ(back.spec.w_square, gs.spec.w_square);
    EXPECT_EQ(back.spec.genus, gs.spec.genus);
    EXPECT_EQ(glued_to_json(back).dump(), j.dump());
  }
  Json bad = glued_to_json(cases[0]);
  bad["pairs"][0][0] = 10000;
  EXPECT_THROW(glued_from_json(bad, resolve), PreconditionError);
  bad = glued_to_json(cases[0]);
  bad["w1_sq"] = 3;
  EXPECT_THROW(glued_from_json(bad, resolve), PreconditionError);
}

TEST(JsonIo, FitOutput) {
  PairingDiagonal m;
  m.emplace(1, ExpPolynomial::monomial(GaussianRational(2), GaussianRational(-32)));
  m.emplace(2, ExpPolynomial::monomial(GaussianRational(-2), GaussianRational(32)));
  m.emplace(3, ExpPolynomial());
  const auto back = fit_from_json(Json::parse(fit_to_json(m).dump()));
  EXPECT_EQ(back, m);
}
