#pragma once

#include <functional>
#include <string>

#include "json.hpp"

#include "donaldson/constructions.hpp"
#include "donaldson/gluing.hpp"
#include "donaldson/pairing_fit.hpp"

namespace donaldson {

// Insertion-ordered so output is deterministic and diffable.
using Json = nlohmann::ordered_json;

/// Rationals as strings ("3", "-1/4"); input also accepts JSON integers.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// "a+bi" / "a-bi" / "a"; input also accepts JSON integers.
Json to_json(const GaussianRational& z);
GaussianRational gaussian_from_json(const Json& j);

/// Integral coordinates as numbers, the others as "p/q" strings.
Json coords_to_json(const Coords& c);
Coords coords_from_json(const Json& j);

Json lattice_to_json(const Lattice& lattice);
LatticePtr lattice_from_json(const Json& j);

Json series_to_json(const DonaldsonSeries& series);
/// The "lattice" field must name `lattice`.
DonaldsonSeries series_from_json(const Json& j, const LatticePtr& lattice);

Json exp_to_json(const ExpPolynomial& f);
ExpPolynomial exp_from_json(const Json& j);

/// {"name", "recipe", "provenance", "lattice", "series", "surfaces"}.
Json entry_to_json(const CatalogEntry& entry);
CatalogEntry entry_from_json(const Json& j);

/// Canonical text of an entry: two-space indented JSON plus trailing newline.
std::string entry_text(const CatalogEntry& entry);

/// {"left", "right", "g", "w1_sq", "w2_sq", "w_sq", "pairs", "kind",
///  "left_surface", "right_surface"}; left/right hold the entry recipes.
Json glued_to_json(const GluedSeries& gs);

/// Rebuilds the spec through `resolve` (recipe -> entry) and restores the pairs.
using EntryResolver = std::function<CatalogEntry(const std::string&)>;
GluedSeries glued_from_json(const Json& j, const EntryResolver& resolve);

/// [{"alpha", "M"}].
Json fit_to_json(const PairingDiagonal& m);
PairingDiagonal fit_from_json(const Json& j);

}  // namespace donaldson
