#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "torkit/lattice.hpp"

namespace torkit {

// Floating-point boundary of the library: everything in this header works in
// double-precision complex numbers; the default comparison tolerance is
// 1e-9 per generator. All other modules stay exact.
using Complex = std::complex<double>;

inline constexpr double kMonodromyTolerance = 1e-9;

struct NumericLattice {
  std::size_t g = 0;
  std::vector<std::vector<Complex>> generators;  // 2g vectors in ℂ^g
};

NumericLattice numeric_lattice(const PeriodLattice& lattice);

// Σ_k x_k·conj(z_k) — numeric twin of the exact antilinear evaluation.
Complex antilinear_eval(const std::vector<Complex>& x, const std::vector<Complex>& z);

// Σ_k ω_k·z_k.
Complex linear_eval(const std::vector<Complex>& omega, const std::vector<Complex>& z);

// Triple (L, c, D): base point x represents L in the dual torus, c is the
// scale, ω shifts the flat unitary connection of L.
struct LambdaConnection {
  std::vector<Complex> x;
  Complex c{0.0, 0.0};
  std::vector<Complex> omega;
};

// Monodromy character: values on the 2g lattice generators, all nonzero.
struct Character {
  std::vector<Complex> values;
};

// Fiberwise vector-space structure over a fixed base point;
// mismatched base points throw.
LambdaConnection add(const LambdaConnection& a, const LambdaConnection& b);
LambdaConnection scale(const Complex& alpha, const LambdaConnection& a);

// The scale c: the one algebraic invariant of the triple.
Complex forgetful(const LambdaConnection& a);

// t(λ_j) = u_x(λ_j)·e^{−ω(λ_j)} with unitary part u_x(λ) = e^{2πi·Im x(λ)}.
// Requires c = 1.
Character monodromy(const NumericLattice& lattice, const LambdaConnection& conn);

// Inverse of monodromy up to the lattice action on x: Re ω is recovered from
// the moduli −log|t_j|, then x from the residual unit character with principal
// argument in [0, 2π). Zero character values throw.
LambdaConnection character_to_connection(const NumericLattice& lattice, const Character& t);

// Point of the dual torus carrying the unitary character λ ↦ e^{−2i·Im ω(λ)},
// returned as antilinear coefficients with Im x(λ_j) ∈ [0, 1).
std::vector<Complex> psi_cover(const NumericLattice& lattice,
                               const std::vector<Complex>& omega);

// Deck criterion for psi_cover: same image iff Im(ω−ω′)(λ_j) ∈ πℤ for all j.
bool deck_equivalent(const NumericLattice& lattice, const std::vector<Complex>& omega1,
                     const std::vector<Complex>& omega2, double tol = kMonodromyTolerance);

// Coset equality in the dual torus: x − x′ lies in the dual lattice iff every
// Im(x−x′)(λ_j) is an integer (to tolerance).
bool same_dual_point(const NumericLattice& lattice, const std::vector<Complex>& x1,
                     const std::vector<Complex>& x2, double tol = kMonodromyTolerance);

// max_j |a_j − b_j|.
double character_distance(const Character& a, const Character& b);

}  // namespace torkit
