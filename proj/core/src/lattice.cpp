#include "donaldson/lattice.hpp"

#include <algorithm>

#include "donaldson/error.hpp"

namespace donaldson {

Lattice::Lattice(std::string name, std::vector<std::vector<long>> gram, int b_plus, int b_one,
                 std::vector<NamedClass> classes, LatticeModel model)
    : name_(std::move(name)),
      gram_(std::move(gram)),
      b_plus_(b_plus),
      b_one_(b_one),
      classes_(std::move(classes)),
      model_(model) {
  const std::size_t n = gram_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n) {
      throw PreconditionError("lattice " + name_ + ": gram matrix is not square");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (gram_[i][j] != gram_[j][i]) {
        throw PreconditionError("lattice " + name_ + ": gram matrix is not symmetric");
      }
    }
  }
  if (b_plus_ < 0 || b_one_ < 0) {
    throw PreconditionError("lattice " + name_ + ": negative Betti number");
  }
  for (const auto& c : classes_) {
    if (c.coords.size() != n) {
      throw PreconditionError("lattice " + name_ + ": class '" + c.label +
                              "' has wrong length");
    }
  }
}

const Coords* Lattice::find(const std::string& label) const {
  auto it = std::find_if(classes_.begin(), classes_.end(),
                         [&](const NamedClass& c) { return c.label == label; });
  return it == classes_.end() ? nullptr : &it->coords;
}

Rational Lattice::form(const Coords& u, const Coords& v) const {
  Rational acc(0);
  const std::size_t n = rank();
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(u[i]) == 0) continue;
    Rational row(0);
    for (std::size_t j = 0; j < n; ++j) {
      if (gram_[i][j] != 0 && sgn(v[j]) != 0) row += gram_[i][j] * v[j];
    }
    acc += u[i] * row;
  }
  return acc;
}

bool Lattice::same_structure(const Lattice& other) const {
  return name_ == other.name_ && gram_ == other.gram_ && b_plus_ == other.b_plus_ &&
         b_one_ == other.b_one_;
}

LatticePtr make_lattice(std::string name, std::vector<std::vector<long>> gram, int b_plus,
                        int b_one, std::vector<NamedClass> classes, LatticeModel model) {
  return std::make_shared<const Lattice>(std::move(name), std::move(gram), b_plus, b_one,
                                         std::move(classes), model);
}

bool same_lattice(const LatticePtr& a, const LatticePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_structure(*b);
}

HClass::HClass(LatticePtr lattice, Coords coords)
    : lattice_(std::move(lattice)), coords_(std::move(coords)) {
  if (!lattice_) throw PreconditionError("class without a lattice");
  if (coords_.size() != lattice_->rank()) {
    throw PreconditionError("class length " + std::to_string(coords_.size()) +
                            " does not match rank of " + lattice_->name());
  }
}

HClass HClass::zero(LatticePtr lattice) {
  const std::size_t n = lattice->rank();
  return HClass(std::move(lattice), Coords(n, Rational(0)));
}

HClass HClass::basis(LatticePtr lattice, std::size_t index) {
  HClass c = zero(std::move(lattice));
  c.coords_.at(index) = 1;
  return c;
}

HClass HClass::named(LatticePtr lattice, const std::string& label) {
  const Coords* coords = lattice->find(label);
  if (coords == nullptr) {
    throw UnknownEntry("lattice " + lattice->name() + " has no class named '" + label + "'");
  }
  return HClass(lattice, *coords);
}

bool HClass::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return is_integer(q); });
}

bool HClass::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool HClass::is_odd() const {
  if (!is_integral()) throw ParityError("parity of a non-integral class");
  return std::any_of(coords_.begin(), coords_.end(), [](const Rational& q) {
    return mpz_odd_p(q.get_num().get_mpz_t()) != 0;
  });
}

HClass& HClass::operator+=(const HClass& o) {
  if (!same_lattice(lattice_, o.lattice_)) {
    throw LatticeMismatch("adding classes of " + lattice_->name() + " and " + o.lattice_->name());
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

HClass& HClass::operator-=(const HClass& o) {
  if (!same_lattice(lattice_, o.lattice_)) {
    throw LatticeMismatch("subtracting classes of " + lattice_->name() + " and " +
                          o.lattice_->name());
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

HClass HClass::operator-() const {
  HClass c = *this;
  for (auto& q : c.coords_) q = -q;
  return c;
}

HClass operator*(const Rational& r, const HClass& c) {
  HClass out = c;
  for (auto& q : out.coords_) q *= r;
  return out;
}

bool operator==(const HClass& a, const HClass& b) {
  return same_lattice(a.lattice_, b.lattice_) && a.coords_ == b.coords_;
}

std::strong_ordering operator<=>(const HClass& a, const HClass& b) {
  const std::size_t n = std::min(a.coords_.size(), b.coords_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a.coords_[i], b.coords_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return a.coords_.size() <=> b.coords_.size();
}

HClass HClass::rebind(LatticePtr lattice) const { return HClass(std::move(lattice), coords_); }

Rational pairing(const HClass& u, const HClass& v) {
  if (!same_lattice(u.lattice(), v.lattice())) {
    throw LatticeMismatch("pairing classes of " + u.lattice()->name() + " and " +
                          v.lattice()->name());
  }
  return u.lattice()->form(u.coords(), v.coords());
}

bool is_characteristic(const HClass& k) {
  if (!k.is_integral()) return false;
  const auto& lattice = k.lattice();
  for (std::size_t i = 0; i < lattice->rank(); ++i) {
    Rational kv(0);
    for (std::size_t j = 0; j < lattice->rank(); ++j) kv += lattice->gram()[i][j] * k.coords()[j];
    Integer diff = kv.get_num() - lattice->gram()[i][i];
    if (mpz_odd_p(diff.get_mpz_t()) != 0) return false;
  }
  return true;
}

MarkedSurface::MarkedSurface(HClass cls, int genus) : cls_(std::move(cls)), genus_(genus) {
  if (genus_ < 1) throw PreconditionError("surface genus must be at least 1");
  if (!cls_.is_integral()) throw PreconditionError("surface class must be integral");
  if (sgn(square(cls_)) != 0) {
    throw PreconditionError("surface class must have self-intersection zero, got " +
                            to_string(square(cls_)));
  }
  if (!cls_.is_odd()) throw PreconditionError("surface class must be odd (non-zero mod 2)");
}

bool is_allowable(const HClass& w, const MarkedSurface& s) {
  if (!w.is_integral()) return false;
  if (sgn(square(s.cls())) != 0) return false;
  Rational ws = pairing(w, s.cls());
  return mpz_odd_p(ws.get_num().get_mpz_t()) != 0;
}

long d_zero(const Rational& w_square, int b_one, int b_plus) {
  long chi = 1 - b_one + b_plus;
  if (chi % 2 != 0) {
    throw ParityError("d0 is not an integer: 1 - b1 + b+ = " + std::to_string(chi) +
                      " is odd");
  }
  return -to_long(w_square) - 3 * (chi / 2);
}

long d_zero(const HClass& w) {
  return d_zero(square(w), w.lattice()->b_one(), w.lattice()->b_plus());
}

Signature signature(const Lattice& lattice) {
  const std::size_t n = lattice.rank();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = lattice.gram()[i][j];

  Signature sig;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    // Prefer a non-zero diagonal pivot; otherwise create one with the
    // congruence e_i -> e_i + e_j, which turns A_ii into 2 A_ij.
    std::optional<std::size_t> pivot;
    for (std::size_t i = 0; i < n && !pivot; ++i)
      if (!done[i] && sgn(a[i][i]) != 0) pivot = i;
    if (!pivot) {
      for (std::size_t i = 0; i < n && !pivot; ++i) {
        if (done[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i || done[j] || sgn(a[i][j]) == 0) continue;
          for (std::size_t k = 0; k < n; ++k) a[i][k] += a[j][k];
          for (std::size_t k = 0; k < n; ++k) a[k][i] += a[k][j];
          pivot = i;
          break;
        }
      }
    }
    if (!pivot) break;
    const std::size_t p = *pivot;
    done[p] = true;
    const Rational d = a[p][p];
    if (sgn(d) > 0) ++sig.positive; else ++sig.negative;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || sgn(a[i][p]) == 0) continue;
      Rational f = a[i][p] / d;
      for (std::size_t k = 0; k < n; ++k) a[i][k] -= f * a[p][k];
      for (std::size_t k = 0; k < n; ++k) a[k][i] -= f * a[k][p];
    }
  }
  sig.zero = static_cast<int>(n) - sig.positive - sig.negative;
  return sig;
}

void validate_metadata(const Lattice& lattice, bool carries_series) {
  Signature sig = signature(lattice);
  if (lattice.model() == LatticeModel::Full) {
    if (sig.positive != lattice.b_plus()) {
      throw PreconditionError("lattice " + lattice.name() + ": declared b+ = " +
                              std::to_string(lattice.b_plus()) + " but the form has " +
                              std::to_string(sig.positive) + " positive directions");
    }
  } else if (sig.positive > lattice.b_plus()) {
    throw PreconditionError("lattice " + lattice.name() + ": modeled block has " +
                            std::to_string(sig.positive) + " positive directions, more than b+ = " +
                            std::to_string(lattice.b_plus()));
  }
  if (carries_series && (lattice.b_plus() - lattice.b_one()) % 2 == 0) {
    throw PreconditionError("lattice " + lattice.name() +
                            ": b+ - b1 must be odd for a manifold carrying a Donaldson series");
  }
}

}  // namespace donaldson
