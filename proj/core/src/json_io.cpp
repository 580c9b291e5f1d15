#include "donaldson/json_io.hpp"

#include "donaldson/error.hpp"

namespace donaldson {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError("malformed JSON: " + what);
}

const Json& field(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string marker_tag(QuadSign s) {
  switch (s) {
    case QuadSign::Plus: return "+Q/2";
    case QuadSign::Minus: return "-Q/2";
    case QuadSign::None: return "none";
  }
  return "none";
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  require(j.is_string(), "rational must be a string or integer");
  return parse_rational(j.get<std::string>());
}

Json to_json(const GaussianRational& z) { return to_string(z); }

GaussianRational gaussian_from_json(const Json& j) {
  if (j.is_number_integer()) return GaussianRational(j.get<long>());
  require(j.is_string(), "Gaussian rational must be a string or integer");
  return parse_gaussian(j.get<std::string>());
}

Json coords_to_json(const Coords& c) {
  Json out = Json::array();
  for (const auto& q : c) {
    if (is_integer(q) && q.get_num().fits_slong_p()) out.push_back(q.get_num().get_si());
    else out.push_back(to_string(q));
  }
  return out;
}

Coords coords_from_json(const Json& j) {
  require(j.is_array(), "coordinates must be an array");
  Coords c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return c;
}

Json lattice_to_json(const Lattice& lattice) {
  Json classes = Json::object();
  for (const auto& nc : lattice.named_classes()) classes[nc.label] = coords_to_json(nc.coords);
  return Json{{"name", lattice.name()},
              {"rank", lattice.rank()},
              {"gram", lattice.gram()},
              {"b_plus", lattice.b_plus()},
              {"b_one", lattice.b_one()},
              {"classes", classes},
              {"model", lattice.model() == LatticeModel::Full ? "full" : "partial"}};
}

LatticePtr lattice_from_json(const Json& j) {
  const auto gram = field(j, "gram").get<std::vector<std::vector<long>>>();
  if (j.contains("rank")) {
    require(j.at("rank").get<std::size_t>() == gram.size(), "rank does not match gram size");
  }
  std::vector<NamedClass> classes;
  if (j.contains("classes")) {
    for (const auto& [label, coords] : j.at("classes").items()) {
      classes.push_back({label, coords_from_json(coords)});
    }
  }
  const std::string model = j.value("model", std::string("partial"));
  require(model == "full" || model == "partial", "model must be \"full\" or \"partial\"");
  return make_lattice(field(j, "name").get<std::string>(), gram, field(j, "b_plus").get<int>(),
                      field(j, "b_one").get<int>(), std::move(classes),
                      model == "full" ? LatticeModel::Full : LatticeModel::Partial);
}

Json series_to_json(const DonaldsonSeries& series) {
  Json entries = Json::array();
  for (const auto& e : series.entries()) {
    entries.push_back(Json{{"k", coords_to_json(e.k.coords())}, {"a", to_json(e.a)}});
  }
  return Json{{"lattice", series.lattice()->name()},
              {"entries", entries},
              {"simple_type", series.simple_type()}};
}

DonaldsonSeries series_from_json(const Json& j, const LatticePtr& lattice) {
  const auto name = field(j, "lattice").get<std::string>();
  if (name != lattice->name()) {
    throw LatticeMismatch("series refers to lattice " + name + ", expected " + lattice->name());
  }
  std::vector<SeriesEntry> entries;
  for (const auto& e : field(j, "entries")) {
    entries.push_back({HClass(lattice, coords_from_json(field(e, "k"))),
                       rational_from_json(field(e, "a"))});
  }
  return DonaldsonSeries(lattice, std::move(entries), j.value("simple_type", true));
}

Json exp_to_json(const ExpPolynomial& f) {
  Json out{{"marker", marker_tag(f.marker().sign)}};
  if (f.marker().sign != QuadSign::None) out["square"] = to_json(f.marker().square);
  Json terms = Json::array();
  for (const auto& [lambda, c] : f.terms()) {
    terms.push_back(Json{{"lambda", to_json(lambda)}, {"c", to_json(c)}});
  }
  out["terms"] = terms;
  return out;
}

ExpPolynomial exp_from_json(const Json& j) {
  const auto tag = field(j, "marker").get<std::string>();
  QuadMarker marker;
  if (tag == "+Q/2") marker = QuadMarker::plus(rational_from_json(j.value("square", Json(0))));
  else if (tag == "-Q/2") marker = QuadMarker::minus(rational_from_json(j.value("square", Json(0))));
  else require(tag == "none", "unknown marker \"" + tag + "\"");
  ExpPolynomial f(std::move(marker));
  for (const auto& t : field(j, "terms")) {
    f.add_term(gaussian_from_json(field(t, "lambda")), gaussian_from_json(field(t, "c")));
  }
  return f;
}

Json entry_to_json(const CatalogEntry& entry) {
  Json surfaces = Json::array();
  for (const auto& s : entry.surfaces) {
    surfaces.push_back(Json{{"label", s.label},
                            {"class", coords_to_json(s.surface.cls().coords())},
                            {"genus", s.surface.genus()},
                            {"w", s.w_label}});
  }
  return Json{{"name", entry.name},
              {"recipe", entry.recipe},
              {"provenance", entry.provenance},
              {"lattice", lattice_to_json(*entry.lattice())},
              {"series", series_to_json(entry.series)},
              {"surfaces", surfaces}};
}

CatalogEntry entry_from_json(const Json& j) {
  LatticePtr lattice = lattice_from_json(field(j, "lattice"));
  CatalogEntry entry{field(j, "name").get<std::string>(), j.value("recipe", std::string()),
                     j.value("provenance", std::string()),
                     series_from_json(field(j, "series"), lattice),
                     {}};
  if (j.contains("surfaces")) {
    for (const auto& s : j.at("surfaces")) {
      entry.surfaces.push_back(
          {field(s, "label").get<std::string>(),
           MarkedSurface(HClass(lattice, coords_from_json(field(s, "class"))),
                         field(s, "genus").get<int>()),
           field(s, "w").get<std::string>()});
    }
  }
  return entry;
}

std::string entry_text(const CatalogEntry& entry) { return entry_to_json(entry).dump(2) + "\n"; }

Json glued_to_json(const GluedSeries& gs) {
  Json pairs = Json::array();
  for (const auto& e : gs.entries) {
    pairs.push_back(Json::array({e.j, e.k, to_string(e.sector), to_string(e.coeff)}));
  }
  const GluingSpec& s = gs.spec;
  return Json{{"left", s.left.entry.recipe},
              {"right", s.right.entry.recipe},
              {"g", s.genus},
              {"w1_sq", to_long(square(s.left.w))},
              {"w2_sq", to_long(square(s.right.w))},
              {"w_sq", to_long(s.w_square)},
              {"pairs", pairs},
              {"kind", to_string(gs.kind)},
              {"left_surface", s.left.surface_label},
              {"right_surface", s.right.surface_label}};
}

GluedSeries glued_from_json(const Json& j, const EntryResolver& resolve) {
  const int g = field(j, "g").get<int>();
  CatalogEntry left = resolve(field(j, "left").get<std::string>());
  CatalogEntry right = resolve(field(j, "right").get<std::string>());
  const std::string ls = j.contains("left_surface") ? j.at("left_surface").get<std::string>()
                                                    : left.surface_of_genus(g).label;
  const std::string rs = j.contains("right_surface") ? j.at("right_surface").get<std::string>()
                                                     : right.surface_of_genus(g).label;
  GluingSpec spec{make_side(std::move(left), ls), make_side(std::move(right), rs), g,
                  Rational(field(j, "w_sq").get<long>())};
  if (j.contains("w1_sq")) {
    require(Rational(j.at("w1_sq").get<long>()) == square(spec.left.w), "w1_sq does not match");
  }
  if (j.contains("w2_sq")) {
    require(Rational(j.at("w2_sq").get<long>()) == square(spec.right.w), "w2_sq does not match");
  }

  GluedSeries gs{parse_kind(j.value("kind", std::string("theorem"))), std::move(spec), {}, true};
  const std::size_t nl = gs.spec.left.series().size();
  const std::size_t nr = gs.spec.right.series().size();
  for (const auto& p : field(j, "pairs")) {
    require(p.is_array() && p.size() == 4, "pair must be [j, k, sector, coefficient]");
    GluedEntry e{p[0].get<std::size_t>(), p[1].get<std::size_t>(),
                 parse_sector(p[2].get<std::string>()), rational_from_json(p[3])};
    require(e.j < nl && e.k < nr, "pair index out of range");
    gs.entries.push_back(std::move(e));
  }
  return gs;
}

Json fit_to_json(const PairingDiagonal& m) {
  Json out = Json::array();
  for (const auto& [alpha, f] : m) out.push_back(Json{{"alpha", alpha}, {"M", exp_to_json(f)}});
  return out;
}

PairingDiagonal fit_from_json(const Json& j) {
  require(j.is_array(), "fit output must be an array");
  PairingDiagonal m;
  for (const auto& x : j) m.emplace(field(x, "alpha").get<int>(), exp_from_json(field(x, "M")));
  return m;
}

}  // namespace donaldson
