#pragma once

#include <cstddef>
#include <vector>

#include "torkit/matrix.hpp"
#include "torkit/scalars.hpp"

namespace torkit {

// Period lattice Λ ⊂ ℂ^g presented by 2g generators. Construction validates
// that the generators are ℝ-linearly independent (exact rational test), so a
// live instance always describes a genuine torus ℂ^g/Λ.
class PeriodLattice {
 public:
  PeriodLattice(std::size_t g, std::vector<Vector> generators);

  std::size_t g() const { return g_; }
  const std::vector<Vector>& generators() const { return generators_; }
  const Vector& generator(std::size_t j) const { return generators_[j]; }

  // 2g×2g rational matrix; column j stacks (Re λ_j, Im λ_j).
  ExactMatrix real_generator_matrix() const;

  // Real coordinates of v in the generator basis: v = Σ_j c_j λ_j, c rational.
  std::vector<Rational> lattice_coordinates(const Vector& v) const;

  // Σ_j coeffs_j λ_j back in ℂ^g.
  Vector combination(const std::vector<Rational>& coeffs) const;

  friend bool operator==(const PeriodLattice& a, const PeriodLattice& b) {
    return a.g_ == b.g_ && a.generators_ == b.generators_;
  }

 private:
  std::size_t g_;
  std::vector<Vector> generators_;
};

// ℓ_c(z) = Σ_j c_j·conj(z_j): the coefficient vector fixes the functional.
struct AntilinearFunctional {
  Vector coeffs;
};

GaussianRational antilinear_value(const AntilinearFunctional& f, const Vector& z);

// Duality pairing ⟨ℓ, v⟩ := Im ℓ(v). This single convention underlies every
// identification between the torus and its dual in the rest of the library.
Rational pairing(const AntilinearFunctional& f, const Vector& v);

// Integral dual lattice Λ̄ ⊂ V̄*: generators ℓ^(k) with ⟨ℓ^(k), λ_j⟩ = δ_{kj},
// returned as a PeriodLattice whose vectors are antilinear coefficient vectors.
PeriodLattice dual_lattice(const PeriodLattice& lattice);

// Point of the torus with order dividing some n, stored by its 2g lattice
// coordinates in [0,1).
struct TorsionPoint {
  std::vector<Rational> coeffs;

  Integer order() const;  // least n with n·coeffs integral
  friend bool operator==(const TorsionPoint& a, const TorsionPoint& b) {
    return a.coeffs == b.coeffs;
  }
};

// All n^{2g} points of (1/n)Λ/Λ in mixed-radix order (last coordinate fastest).
std::vector<TorsionPoint> torsion_points(const PeriodLattice& lattice, const Integer& n);

// A representative in ℂ^g (coefficients applied to the generators).
Vector torsion_lift(const PeriodLattice& lattice, const TorsionPoint& point);

// True iff the two generator lists span the same ℤ-lattice (coordinates of
// each basis in the other are integral).
bool same_integer_span(const PeriodLattice& a, const PeriodLattice& b);

}  // namespace torkit
