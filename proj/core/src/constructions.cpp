#include "donaldson/constructions.hpp"

#include <algorithm>
#include <cctype>

#include "donaldson/error.hpp"

namespace donaldson {

namespace {

Rational binomial(long n, long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

Coords extended(const Coords& c, std::size_t extra = 1) {
  Coords out = c;
  out.resize(c.size() + extra, Rational(0));
  return out;
}

int count_exceptional(const Lattice& lattice) {
  int count = 0;
  for (const auto& nc : lattice.named_classes()) {
    const auto& l = nc.label;
    if (l.size() > 1 && l[0] == 'E' &&
        std::all_of(l.begin() + 1, l.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
      ++count;
    }
  }
  return count;
}

std::vector<LabeledSurface> rebind_surfaces(const std::vector<LabeledSurface>& surfaces,
                                            const LatticePtr& lattice) {
  std::vector<LabeledSurface> out;
  out.reserve(surfaces.size());
  for (const auto& s : surfaces) {
    Coords c = s.surface.cls().coords();
    c.resize(lattice->rank(), Rational(0));
    out.push_back({s.label, MarkedSurface(HClass(lattice, std::move(c)), s.surface.genus()),
                   s.w_label});
  }
  return out;
}

/// Same gram and Betti numbers under a new name, with `extra` named classes
/// appended to the existing ones.
CatalogEntry relabel(const CatalogEntry& entry, const std::string& lattice_name,
                     const std::vector<NamedClass>& extra) {
  const Lattice& old = *entry.lattice();
  std::vector<NamedClass> classes = old.named_classes();
  classes.insert(classes.end(), extra.begin(), extra.end());
  LatticePtr lattice = make_lattice(lattice_name, old.gram(), old.b_plus(), old.b_one(),
                                    std::move(classes), old.model());
  return {entry.name, entry.recipe, entry.provenance, entry.series.rebind(lattice),
          rebind_surfaces(entry.surfaces, lattice)};
}

Coords coords_of(const Lattice& lattice, const std::string& label) {
  const Coords* c = lattice.find(label);
  if (c == nullptr) throw UnknownEntry("no class named '" + label + "' on " + lattice.name());
  return *c;
}

}  // namespace

const LabeledSurface& CatalogEntry::surface(const std::string& label) const {
  for (const auto& s : surfaces)
    if (s.label == label) return s;
  throw UnknownEntry("entry " + name + " has no surface '" + label + "'");
}

const LabeledSurface& CatalogEntry::surface_of_genus(int genus) const {
  for (const auto& s : surfaces)
    if (s.surface.genus() == genus) return s;
  throw UnknownEntry("entry " + name + " has no surface of genus " + std::to_string(genus));
}

CatalogEntry elliptic_surface(int n) {
  if (n == 1) {
    throw PreconditionError("E(1) has b+ = 1: the invariants depend on a chamber, not supported");
  }
  if (n < 2) throw PreconditionError("elliptic surface needs n >= 2, got " + std::to_string(n));

  const std::string name = n == 2 ? "K3" : "S" + std::to_string(n);
  LatticePtr lattice = make_lattice(name, {{0, 1}, {1, -n}}, 2 * n - 1, 0,
                                    {{"F", {1, 0}}, {"sigma", {0, 1}}});

  // (sinh F)^{n-2} = 2^{-(n-2)} sum_m (-1)^m C(n-2, m) e^{(n-2-2m)F}
  std::vector<SeriesEntry> entries;
  const Rational scale = pow2(-(n - 2));
  for (int m = 0; m <= n - 2; ++m) {
    entries.push_back({HClass(lattice, {n - 2 - 2 * m, 0}),
                       sign_pow(m) * binomial(n - 2, m) * scale});
  }
  MarkedSurface fibre(HClass::named(lattice, "F"), 1);
  CatalogEntry entry{name, "elliptic:" + std::to_string(n),
                     "minimal elliptic surface E(" + std::to_string(n) +
                         "), series e^{Q/2} sinh(F)^" + std::to_string(n - 2),
                     DonaldsonSeries(lattice, std::move(entries)),
                     {{"F", fibre, "sigma"}}};
  validate_entry(entry);
  return entry;
}

CatalogEntry blow_up(const CatalogEntry& entry, std::string lattice_name) {
  const Lattice& old = *entry.lattice();
  const std::size_t n = old.rank();
  if (lattice_name.empty()) lattice_name = old.name() + "#CP2bar";

  std::vector<std::vector<long>> gram = old.gram();
  for (auto& row : gram) row.push_back(0);
  gram.emplace_back(n + 1, 0);
  gram[n][n] = -1;

  std::vector<NamedClass> classes;
  for (const auto& nc : old.named_classes()) classes.push_back({nc.label, extended(nc.coords)});
  Coords e(n + 1, Rational(0));
  e[n] = 1;
  classes.push_back({"E" + std::to_string(count_exceptional(old) + 1), e});

  LatticePtr lattice = make_lattice(lattice_name, std::move(gram), old.b_plus(), old.b_one(),
                                    std::move(classes), old.model());
  const HClass E(lattice, e);
  std::vector<SeriesEntry> entries;
  for (const auto& s : entry.series.entries()) {
    HClass k(lattice, extended(s.k.coords()));
    entries.push_back({k + E, s.a / 2});
    entries.push_back({k - E, s.a / 2});
  }
  return {entry.name, entry.recipe, entry.provenance + ", blown up",
          DonaldsonSeries(lattice, std::move(entries), entry.series.simple_type()),
          rebind_surfaces(entry.surfaces, lattice)};
}

CatalogEntry build_bg(int g) {
  if (g < 2) throw PreconditionError("B_g needs g >= 2, got " + std::to_string(g));
  CatalogEntry e = elliptic_surface(g);
  for (int i = 0; i < g; ++i) e = blow_up(e);

  const Lattice& raw = *e.lattice();
  const Coords f = coords_of(raw, "F");
  const Coords sigma = coords_of(raw, "sigma");
  Coords big_sigma(raw.rank()), k(raw.rank());
  for (std::size_t i = 0; i < raw.rank(); ++i) {
    big_sigma[i] = sigma[i] + g * f[i];
    k[i] = (g - 2) * f[i];
  }
  for (int i = 1; i <= g; ++i) {
    const Coords ei = coords_of(raw, "E" + std::to_string(i));
    for (std::size_t j = 0; j < raw.rank(); ++j) {
      big_sigma[j] -= ei[j];
      k[j] += ei[j];
    }
  }

  const std::string name = "B" + std::to_string(g);
  CatalogEntry out =
      relabel(e, name, {{"T1", f}, {"Sigma", big_sigma}, {"K", k}});
  out.name = name;
  out.recipe = "bg:" + std::to_string(g);
  out.provenance = "E(" + std::to_string(g) + ") # " + std::to_string(g) +
                   " CP2bar with Sigma = sigma + gF - sum E_i of genus " + std::to_string(g);
  out.surfaces.clear();
  out.surfaces.push_back({"Sigma", MarkedSurface(HClass(out.lattice(), big_sigma), g), "T1"});
  out.surfaces.push_back({"T1", MarkedSurface(HClass(out.lattice(), f), 1), "sigma"});

  // The canonical class is the only class attaining the adjunction bound.
  const HClass kb(out.lattice(), k);
  const HClass& s = out.surfaces.front().surface.cls();
  for (const auto& entry : out.series.entries()) {
    if (pairing(entry.k, s) == 2 * g - 2 && !(entry.k == kb)) {
      throw PreconditionError("B_g: a second class attains K.Sigma = 2g-2");
    }
  }
  if (out.series.coefficient(kb) != pow2(-(2 * g - 2))) {
    throw PreconditionError("B_g: canonical class coefficient is not 2^{-(2g-2)}");
  }
  validate_entry(out);
  return out;
}

CatalogEntry build_dia2_example(int g_prime, int g) {
  if (g_prime < 1) throw PreconditionError("dia2 needs g' >= 1");
  if (g <= g_prime) throw PreconditionError("dia2 needs g > g'");
  CatalogEntry e = elliptic_surface(2);
  const int blowups = 2 * g_prime - 2;
  for (int i = 0; i < blowups; ++i) e = blow_up(e);

  const Lattice& raw = *e.lattice();
  const Coords t = coords_of(raw, "F");
  const Coords s = coords_of(raw, "sigma");
  Coords sigma1(raw.rank());
  for (std::size_t i = 0; i < raw.rank(); ++i) sigma1[i] = s[i] + g_prime * t[i];
  for (int i = 1; i <= blowups; ++i) {
    const Coords ei = coords_of(raw, "E" + std::to_string(i));
    for (std::size_t j = 0; j < raw.rank(); ++j) sigma1[j] += ei[j];
  }

  const std::string tag = std::to_string(g_prime) + ":" + std::to_string(g);
  const std::string name = "dia2_" + std::to_string(g_prime) + "_" + std::to_string(g);
  CatalogEntry out = relabel(e, name, {{"S", s}, {"T", t}, {"Sigma1", sigma1}});
  out.name = name;
  out.recipe = "dia2:" + tag;
  out.provenance = "K3 # " + std::to_string(blowups) +
                   " CP2bar with Sigma1 = S + g'T + sum E_i of genus " + std::to_string(g) +
                   ", g' = " + std::to_string(g_prime);
  out.surfaces.clear();
  out.surfaces.push_back({"Sigma1", MarkedSurface(HClass(out.lattice(), sigma1), g), "T"});
  out.surfaces.push_back({"T", MarkedSurface(HClass(out.lattice(), t), 1), "S"});
  validate_entry(out);
  return out;
}

CatalogEntry closed_form_cg(int g) {
  if (g < 2) throw PreconditionError("C_g needs g >= 2, got " + std::to_string(g));
  const std::string name = "C" + std::to_string(g);
  LatticePtr lattice = make_lattice(
      name, {{6L * g - 8, 2, 2L * g - 2}, {2, 0, 1}, {2L * g - 2, 1, 0}}, 6 * g - 3, 0,
      {{"K", {1, 0, 0}}, {"Sigma2hat", {0, 1, 0}}, {"Sigma", {0, 0, 1}}});
  const HClass k = HClass::named(lattice, "K");
  const Rational c = pow2(3L * g - 5);
  CatalogEntry out{name, "cg:" + std::to_string(g),
                   "closed form for B" + std::to_string(g) + " #_Sigma B" + std::to_string(g) +
                       ", twisted by Sigma2hat: -2^{3g-5} on K, (-1)^g 2^{3g-5} on -K",
                   DonaldsonSeries(lattice, {{k, c}, {-k, sign_pow(g + 1) * c}}),
                   {{"Sigma", MarkedSurface(HClass::named(lattice, "Sigma"), g), "Sigma2hat"},
                    {"Sigma2hat", MarkedSurface(HClass::named(lattice, "Sigma2hat"), 2), "Sigma"}}};
  validate_entry(out);
  return out;
}

void validate_entry(const CatalogEntry& entry) {
  const auto fail = [&](const std::string& what) {
    throw PreconditionError("catalog entry " + entry.name + ": " + what);
  };
  validate_metadata(*entry.lattice(), true);
  if (!non_characteristic_entries(entry.series).empty()) fail("non-characteristic basic class");
  if (!involution_violations(entry.series).empty()) fail("K -> -K involution sign rule fails");
  for (const auto& s : entry.surfaces) {
    if (!same_lattice(s.surface.cls().lattice(), entry.lattice())) fail("surface on wrong lattice");
    if (!check_adjunction(entry.series, s.surface).holds) {
      fail("adjunction inequality fails for surface " + s.label);
    }
    if (!is_allowable(entry.w_for(s), s.surface)) {
      fail("w = " + s.w_label + " is not allowable for surface " + s.label);
    }
  }
}

}  // namespace donaldson
