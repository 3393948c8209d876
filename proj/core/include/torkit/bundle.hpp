#pragma once

#include <string>
#include <vector>

#include "torkit/lattice.hpp"
#include "torkit/matrix.hpp"
#include "torkit/scalars.hpp"

namespace torkit {

// Hermitian form with the slot convention H(v,w) = Σ_{j,k} H_{jk} v_j conj(w_k)
// (linear in the first argument). E := Im H is the associated alternating form.
struct HermitianForm {
  ExactMatrix matrix;
};

GaussianRational hermitian_value(const HermitianForm& h, const Vector& v, const Vector& w);

// E(v, w) = Im H(v, w).
Rational alternating_value(const HermitianForm& h, const Vector& v, const Vector& w);

// Line bundle on ℂ^g/Λ presented by (H, χ). The semicharacter is stored by its
// exponents on the generators, χ(λ_j) = e^{πi·a_j}, each a_j reduced into
// [0, 2); values extend to all of Λ by χ(λ+μ) = χ(λ)χ(μ)e^{πiE(λ,μ)}.
struct AppellHumbertBundle {
  PeriodLattice lattice;
  HermitianForm form;
  std::vector<Rational> chi;
};

// Shape-checks and reduces the exponents; throws std::invalid_argument.
AppellHumbertBundle make_bundle(PeriodLattice lattice, ExactMatrix h,
                                std::vector<Rational> chi);

struct ValidationResult {
  bool ok = false;
  std::string message;
};

// Existence condition for the data: H Hermitian and E integer-valued on all
// generator pairs. The diagnostic names the first violation.
ValidationResult validate(const AppellHumbertBundle& b);

AppellHumbertBundle tensor(const AppellHumbertBundle& a, const AppellHumbertBundle& b);
AppellHumbertBundle dual(const AppellHumbertBundle& b);

// Pullback along translation by x: H is unchanged and the exponent on λ_j
// shifts by 2E(x̃, λ_j) for a lift x̃ of x.
AppellHumbertBundle translate(const AppellHumbertBundle& b, const TorsionPoint& x);

// Appell–Humbert data is a complete invariant for a fixed lattice, so this is
// equality of H together with equality of reduced exponents.
bool isomorphic(const AppellHumbertBundle& a, const AppellHumbertBundle& b);

struct Subspace {
  std::vector<Vector> basis;
  std::size_t dim() const { return basis.size(); }
};

// Complex kernel {v : H(v,·) = 0}.
Subspace radical(const HermitianForm& h);

// Real kernel of E on ℝ^{2g} (basis e_1,…,e_g, ie_1,…,ie_g), returned in
// complex coordinates. Coincides with radical(h) as a set.
Subspace real_radical(const HermitianForm& h);

// Matrix of φ : V → V̄*, v ↦ H(v,·), in (standard, antilinear) coordinates.
ExactMatrix phi_from_hermitian(const AppellHumbertBundle& b);

// Same map recovered from translation data: the order-n points λ_j/n are
// pushed through x ↦ τ*_x b ⊗ dual(b), the resulting degree-0 bundles are read
// as dual-torus points, scaled by n, and assembled into a linear map. The twist
// exponents are carried unreduced so the lift of each sample is pinned down.
// Inconsistent samples (non-integral scaled values, failure of antisymmetry or
// ℂ-linearity) throw std::logic_error.
ExactMatrix phi_from_translations(const AppellHumbertBundle& b, const Integer& n);

// Reads a degree-0 bundle (H = 0) as the point of the dual torus with
// dual-lattice coordinates a_k/2 mod 1.
TorsionPoint chi_to_dual_point(const AppellHumbertBundle& b);

struct StabilizerInfo {
  Subspace direction;             // identity-component direction = real_radical
  std::vector<Integer> divisors;  // all 2g elementary divisors of E on Λ (paired)
  Integer component_order;        // product of the nonzero divisors
};

// Describes Λ(ξ) = {v : E(v,Λ) ⊆ ℤ}: its continuous direction and the finite
// component group Λ(ξ)/(Λ + direction).
StabilizerInfo stabilizer(const AppellHumbertBundle& b);

// Matrix of φ restricted to radical(H); identically zero, which is exactly the
// existence of a connection along the radical foliation.
ExactMatrix partial_connection_obstruction(const AppellHumbertBundle& b);

bool has_holomorphic_connection(const AppellHumbertBundle& b);

}  // namespace torkit
