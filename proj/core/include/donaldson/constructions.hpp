#pragma once

#include <string>
#include <vector>

#include "donaldson/lattice.hpp"
#include "donaldson/series.hpp"

namespace donaldson {

/// A marked surface together with the label of the w class it is used with.
struct LabeledSurface {
  std::string label;
  MarkedSurface surface;
  std::string w_label;
};

struct CatalogEntry {
  std::string name;
  std::string recipe;
  std::string provenance;
  DonaldsonSeries series;
  std::vector<LabeledSurface> surfaces;

  const LatticePtr& lattice() const { return series.lattice(); }
  /// Throws UnknownEntry when no surface carries the label.
  const LabeledSurface& surface(const std::string& label) const;
  /// First surface of the given genus; throws UnknownEntry if none.
  const LabeledSurface& surface_of_genus(int genus) const;
  HClass w_for(const LabeledSurface& s) const { return HClass::named(lattice(), s.w_label); }
};

/// Minimal elliptic surface E(n), n >= 2, on the span of fibre F and section
/// sigma. Series: expansion of (sinh F)^{n-2}.
CatalogEntry elliptic_surface(int n);

/// Tensor with cosh E for a new (-1)-class E; b+, b1 unchanged. Surfaces are
/// carried over with E-coordinate zero. `lattice_name` defaults to
/// "<old>#CP2bar".
CatalogEntry blow_up(const CatalogEntry& entry, std::string lattice_name = {});

/// E(g) blown up g times, with Sigma = sigma + gF - E1 - ... - Eg (genus g, w = T1 = F)
/// and the fibre T1 (genus 1, w = sigma).
CatalogEntry build_bg(int g);

/// K3 blown up 2g'-2 times with a genus-g surface Sigma1 = S + g'T + E1 + ... + E_{2g'-2}.
CatalogEntry build_dia2_example(int g_prime, int g);

/// Abstract two-class entry on the span of K, Sigma2hat, Sigma; stores the
/// untwisted coefficients 2^{3g-5} on K and (-1)^{g+1} 2^{3g-5} on -K.
CatalogEntry closed_form_cg(int g);

/// Runs characteristic, involution, adjunction and lattice-metadata checks;
/// throws PreconditionError naming the first failure.
void validate_entry(const CatalogEntry& entry);

}  // namespace donaldson
