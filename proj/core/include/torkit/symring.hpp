#pragma once

#include <cstddef>
#include <vector>

#include "torkit/bundle.hpp"
#include "torkit/matrix.hpp"
#include "torkit/scalars.hpp"

namespace torkit {

Integer binomial(std::size_t n, std::size_t k);

// Monomial basis of Sym^d(ℂ^g): exponent vectors of total degree d in
// lexicographic order. |basis| = C(g+d−1, d).
struct SymBasis {
  std::size_t g = 0;
  std::size_t degree = 0;
  std::vector<std::vector<std::size_t>> exponents;
};

SymBasis sym_basis(std::size_t g, std::size_t degree);

// β_d : Sym^d(W) → W̄* ⊗ Sym^{d−1}(W), the derivation extension of v ↦ H(v,·):
// a monomial goes to Σ_j (multiplicity of w_j)·H(w_j,·) ⊗ (monomial/w_j).
// Rows are (conjugate-dual coordinate k, degree-(d−1) monomial), k-major;
// shape (g·C(g+d−2, d−1)) × C(g+d−1, d).
struct BetaMatrix {
  std::size_t degree = 0;
  ExactMatrix matrix;
};

BetaMatrix beta_matrix(const HermitianForm& h, std::size_t d);  // d ≥ 1

// Exact kernel dimension of β_d; internally asserted against C(k+d−1, d)
// for k = dim radical(h), computed by an independent route.
std::size_t beta_kernel_dim(const HermitianForm& h, std::size_t d);

// 1 + Σ_{i=1..d} beta_kernel_dim(h, i): the degree-d upper bound.
std::size_t h0_dimension_bound(const HermitianForm& h, std::size_t d);

// dim Sym^d(ℂ^k ⊕ ℂ) = C(k+d, d): the degree-d lower bound.
std::size_t sym_lower_dimension(std::size_t k, std::size_t d);

struct RingDimensionCertificate {
  std::size_t degree = 0;
  std::size_t radical_dim = 0;
  std::vector<std::size_t> kernel_dims;  // β-kernel dimension per degree 1..d
  std::size_t upper_bound = 0;
  std::size_t lower_bound = 0;
  std::size_t dimension = 0;  // the certified common value
};

// Certified graded dimension: computes both bounds by their own routes and
// throws std::logic_error when they disagree (which would mean a bug here,
// not a counterexample).
RingDimensionCertificate function_ring_dimension(const AppellHumbertBundle& b, std::size_t d);

// The fixed splitting used to present the ring: orthogonal projection onto the
// radical with respect to the standard Hermitian inner product, transposed to
// act on covector coordinates.
struct RhoProjection {
  ExactMatrix matrix;      // g×g on V* coordinates
  std::size_t rank = 0;
};

RhoProjection rho_projection(const AppellHumbertBundle& b);

}  // namespace torkit
