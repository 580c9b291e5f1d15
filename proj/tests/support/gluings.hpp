#pragma once

// Enumerates the genus >= 2 fibre sums available from the shipped catalog:
// every ordered pair of entries carrying a surface of the same genus g.

#include <string>
#include <vector>

#include "donaldson/catalog.hpp"
#include "donaldson/gluing.hpp"
#include "donaldson/pairing_fit.hpp"

namespace support {

inline std::vector<donaldson::GluingSpec> catalog_gluings(
    const std::vector<donaldson::CatalogEntry>& entries, int min_g = 2, int max_g = 6) {
  std::vector<donaldson::GluingSpec> out;
  for (int g = min_g; g <= max_g; ++g) {
    std::vector<const donaldson::CatalogEntry*> with;
    for (const auto& e : entries)
      for (const auto& s : e.surfaces)
        if (s.surface.genus() == g) {
          with.push_back(&e);
          break;
        }
    for (const auto* a : with)
      for (const auto* b : with) out.push_back(donaldson::make_spec(*a, *b, g));
  }
  return out;
}

inline std::vector<donaldson::CatalogEntry> standard_entries() {
  std::vector<donaldson::CatalogEntry> out;
  for (const auto& r : donaldson::standard_recipes()) out.push_back(donaldson::build_recipe(r));
  return out;
}

/// Split class (D1, D2) with D1.Sigma1 = D2.Sigma2 = 1 from each side's unit probe.
inline donaldson::SplitClass unit_split(const donaldson::GluingSpec& spec) {
  using donaldson::unit_probe;
  return {unit_probe(spec.left.entry, spec.left.entry.surface(spec.left.surface_label)),
          unit_probe(spec.right.entry, spec.right.entry.surface(spec.right.surface_label)),
          donaldson::Rational(1)};
}

inline std::string describe(const donaldson::GluingSpec& spec) {
  return spec.left.entry.recipe + " #_" + std::to_string(spec.genus) + " " + spec.right.entry.recipe;
}

}  // namespace support
