#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "torkit/bundle.hpp"
#include "torkit/matrix.hpp"

namespace torkit {

// Which torus a cohomology class lives on. The coordinate conventions below
// fix every identification once and for all:
//   H¹(A, O)     = V̄*  (θ ↦ θ̄ on invariant forms),
//   H¹(A^∨, O)   = V    (coefficientwise conjugate-dual of V̄*),
//   H⁰(A, Ω¹)    = V*,
//   H⁰(A^∨, Ω¹)  = V̄   (coordinate functionals of antilinear coefficients).
enum class TorusSide { primal, dual };

std::string torus_side_name(TorusSide side);

struct SpaceDesc {
  std::string name;
  std::size_t dim = 0;
};

// Extension class of a sequence with trivial kernel bundle, stored as its
// invariant representative: a matrix with rows indexed by H¹(X, O_X)
// coordinates and columns by the kernel fiber.
struct ExtClass {
  TorusSide base = TorusSide::primal;
  SpaceDesc fiber;
  ExactMatrix matrix;

  friend bool operator==(const ExtClass& a, const ExtClass& b) {
    return a.base == b.base && a.matrix == b.matrix;
  }
};

// Translation-invariant (p,q)-form with exact coefficients over the sorted
// multi-index basis of Λ^p V* ⊗ Λ^q V̄*.
struct InvariantForm {
  std::size_t g = 0;
  std::size_t p = 0;
  std::size_t q = 0;
  std::vector<GaussianRational> coeffs;  // (J, K) pairs, lexicographic, J-major
};

InvariantForm zero_form(std::size_t g, std::size_t p, std::size_t q);

// Strictly increasing k-tuples in {0,…,g−1}, lexicographic.
std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t g, std::size_t k);

// The invariant (1,1) representative of c₁: coefficient grid equal to H.
// The normalization constant between this form and Im H is fixed so the
// extension-class identities below hold with their stated signs.
InvariantForm chern_form(const AppellHumbertBundle& b);

// Interior product with v followed by (0,1)-projection and the Dolbeault
// identification; returns H¹(X, O_X) coordinates. Requires bidegree (1,1).
Vector contract_and_project(const InvariantForm& form, const Vector& v);

// φ as assembled from the contraction route: column m is the contraction of
// the c₁ form with the m-th coordinate vector.
ExactMatrix phi_from_chern(const AppellHumbertBundle& b);

// Extension class of the moduli sequence over the dual torus: −Id of V.
ExtClass moduli_extension_class(const PeriodLattice& lattice);

// The canonical identification class (+Id), recorded separately because the
// sign relative to moduli_extension_class is the content being tested.
ExtClass canonical_identification_class(const PeriodLattice& lattice);

// c₁(b) as a tensor in H¹(X, O_X) ⊗ (invariant 1-forms), matrix H^T under the
// fixed conventions.
ExtClass chern_class_tensor(const AppellHumbertBundle& b, TorusSide side);

// (Id ⊗ f) applied to the class; f maps the old fiber into new_fiber and its
// matrix has one column per old fiber coordinate.
ExtClass pushforward(const ExtClass& e, const ExactMatrix& f, SpaceDesc new_fiber);

struct Prop1Result {
  bool holds = false;
  ExtClass delta_pushed;  // moduli class pushed along φ*
  ExtClass chern;         // c₁ via the contraction route
};

// Checks δ̃ = −c̃ for a bundle living on the dual torus: the pushforward of the
// moduli extension class along φ* must be the negative of the c₁ tensor.
Prop1Result prop1_check(const AppellHumbertBundle& bundle_on_dual);

}  // namespace torkit
