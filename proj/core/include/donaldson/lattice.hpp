#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "donaldson/rational.hpp"

namespace donaldson {

/// Whether the gram matrix is the whole second homology or only the span of
/// the classes a construction names. Partial models keep b_plus/b_one as
/// declared metadata.
enum class LatticeModel { Full, Partial };

using Coords = std::vector<Rational>;

struct NamedClass {
  std::string label;
  Coords coords;
};

/// Working model of H^2(X; Z) with its intersection form.
class Lattice {
 public:
  Lattice(std::string name, std::vector<std::vector<long>> gram, int b_plus, int b_one,
          std::vector<NamedClass> classes, LatticeModel model);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return gram_.size(); }
  const std::vector<std::vector<long>>& gram() const { return gram_; }
  int b_plus() const { return b_plus_; }
  int b_one() const { return b_one_; }
  LatticeModel model() const { return model_; }
  const std::vector<NamedClass>& named_classes() const { return classes_; }

  /// Coordinates of a named class, if present.
  const Coords* find(const std::string& label) const;

  /// u^T * gram * v on raw coordinates.
  Rational form(const Coords& u, const Coords& v) const;

  /// Structural equality (name, gram, metadata); named classes ignored.
  bool same_structure(const Lattice& other) const;

 private:
  std::string name_;
  std::vector<std::vector<long>> gram_;
  int b_plus_;
  int b_one_;
  std::vector<NamedClass> classes_;
  LatticeModel model_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

LatticePtr make_lattice(std::string name, std::vector<std::vector<long>> gram, int b_plus,
                        int b_one, std::vector<NamedClass> classes,
                        LatticeModel model = LatticeModel::Partial);

/// A (co)homology class on a given lattice. Integral classes have integer
/// coordinates; the rescaled probe classes D may be rational.
class HClass {
 public:
  HClass(LatticePtr lattice, Coords coords);

  static HClass zero(LatticePtr lattice);
  static HClass basis(LatticePtr lattice, std::size_t index);
  /// Throws UnknownEntry when the label is not a named class of the lattice.
  static HClass named(LatticePtr lattice, const std::string& label);

  const LatticePtr& lattice() const { return lattice_; }
  const Coords& coords() const { return coords_; }
  std::size_t rank() const { return coords_.size(); }

  bool is_integral() const;
  bool is_zero() const;
  /// Reduction mod 2 is non-zero. Requires an integral class.
  bool is_odd() const;

  HClass& operator+=(const HClass& o);
  HClass& operator-=(const HClass& o);
  friend HClass operator+(HClass a, const HClass& b) { return a += b; }
  friend HClass operator-(HClass a, const HClass& b) { return a -= b; }
  HClass operator-() const;
  friend HClass operator*(const Rational& r, const HClass& c);

  friend bool operator==(const HClass& a, const HClass& b);
  /// Lexicographic on coordinates (the deterministic output order).
  friend std::strong_ordering operator<=>(const HClass& a, const HClass& b);

  /// Same coordinates re-attached to a structurally identical lattice.
  HClass rebind(LatticePtr lattice) const;

 private:
  LatticePtr lattice_;
  Coords coords_;
};

bool same_lattice(const LatticePtr& a, const LatticePtr& b);

/// Evaluates the intersection form. Throws LatticeMismatch.
Rational pairing(const HClass& u, const HClass& v);
inline Rational square(const HClass& u) { return pairing(u, u); }

/// k.v == v.v (mod 2) for every basis vector v of the modeled lattice.
bool is_characteristic(const HClass& k);

/// Embedded surface data: the class [Sigma] and its genus.
class MarkedSurface {
 public:
  /// Validates Sigma^2 = 0, integrality, oddness and genus >= 1.
  MarkedSurface(HClass cls, int genus);

  const HClass& cls() const { return cls_; }
  int genus() const { return genus_; }

 private:
  HClass cls_;
  int genus_;
};

/// w.Sigma odd and Sigma^2 = 0.
bool is_allowable(const HClass& w, const MarkedSurface& s);

/// d0 = -w^2 - 3/2 (1 - b1 + b+). Throws ParityError when 1 - b1 + b+ is odd.
long d_zero(const Rational& w_square, int b_one, int b_plus);
long d_zero(const HClass& w);

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// Sign counts from exact rational congruence diagonalization of the gram.
Signature signature(const Lattice& lattice);

/// Checks the metadata invariants: b+ equals the positive count for full
/// models and bounds it for partial ones; b+ - b1 odd when the lattice
/// carries a Donaldson series. Throws PreconditionError.
void validate_metadata(const Lattice& lattice, bool carries_series);

}  // namespace donaldson
