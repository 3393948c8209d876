#include "torkit/symring.hpp"

#include <map>
#include <stdexcept>

namespace torkit {

Integer binomial(std::size_t n, std::size_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

namespace {

std::size_t binomial_size(std::size_t n, std::size_t k) {
  return static_cast<std::size_t>(binomial(n, k).get_ui());
}

}  // namespace

SymBasis sym_basis(std::size_t g, std::size_t degree) {
  SymBasis basis;
  basis.g = g;
  basis.degree = degree;
  std::vector<std::size_t> cur(g, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
    if (pos + 1 == g) {
      cur[pos] = left;
      basis.exponents.push_back(cur);
      return;
    }
    for (std::size_t e = 0; e <= left; ++e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  if (g > 0) {
    rec(rec, 0, degree);
  } else if (degree == 0) {
    basis.exponents.push_back({});
  }
  return basis;
}

BetaMatrix beta_matrix(const HermitianForm& h, std::size_t d) {
  if (d == 0) {
    throw std::invalid_argument("beta is defined for degree at least 1");
  }
  std::size_t g = h.matrix.rows();
  SymBasis dom = sym_basis(g, d);
  SymBasis codom = sym_basis(g, d - 1);
  std::map<std::vector<std::size_t>, std::size_t> codom_index;
  for (std::size_t i = 0; i < codom.exponents.size(); ++i) {
    codom_index.emplace(codom.exponents[i], i);
  }
  ExactMatrix m(g * codom.exponents.size(), dom.exponents.size());
  for (std::size_t col = 0; col < dom.exponents.size(); ++col) {
    const auto& alpha = dom.exponents[col];
    for (std::size_t j = 0; j < g; ++j) {
      if (alpha[j] == 0) {
        continue;
      }
      std::vector<std::size_t> reduced = alpha;
      --reduced[j];
      std::size_t gamma = codom_index.at(reduced);
      GaussianRational mult(static_cast<long>(alpha[j]));
      for (std::size_t k = 0; k < g; ++k) {
        // H(e_j, ·) has antilinear coefficient H_{jk} on the k-th coordinate.
        m.at(k * codom.exponents.size() + gamma, col) += mult * h.matrix.at(j, k);
      }
    }
  }
  return {d, std::move(m)};
}

std::size_t beta_kernel_dim(const HermitianForm& h, std::size_t d) {
  std::size_t computed = kernel_basis(beta_matrix(h, d).matrix).size();
  std::size_t k = radical(h).dim();
  std::size_t predicted = static_cast<std::size_t>(binomial(k + d - 1, d).get_ui());
  if (computed != predicted) {
    throw std::logic_error("beta kernel dimension disagrees with the radical count");
  }
  return computed;
}

std::size_t h0_dimension_bound(const HermitianForm& h, std::size_t d) {
  if (d == 0) {
    throw std::invalid_argument("bound is defined for degree at least 1");
  }
  std::size_t total = 1;
  for (std::size_t i = 1; i <= d; ++i) {
    total += beta_kernel_dim(h, i);
  }
  return total;
}

std::size_t sym_lower_dimension(std::size_t k, std::size_t d) {
  return binomial_size(k + d, d);
}

RingDimensionCertificate function_ring_dimension(const AppellHumbertBundle& b, std::size_t d) {
  RingDimensionCertificate cert;
  cert.degree = d;
  cert.radical_dim = radical(b.form).dim();
  cert.upper_bound = 1;
  for (std::size_t i = 1; i <= d; ++i) {
    std::size_t dim = beta_kernel_dim(b.form, i);
    cert.kernel_dims.push_back(dim);
    cert.upper_bound += dim;
  }
  cert.lower_bound = sym_lower_dimension(cert.radical_dim, d);
  if (cert.upper_bound != cert.lower_bound) {
    throw std::logic_error("ring dimension bounds disagree; certification failed");
  }
  cert.dimension = cert.upper_bound;
  return cert;
}

RhoProjection rho_projection(const AppellHumbertBundle& b) {
  std::size_t g = b.lattice.g();
  Subspace rad = radical(b.form);
  ExactMatrix basis = ExactMatrix::from_columns(rad.basis);
  if (rad.dim() == 0) {
    return {ExactMatrix(g, g), 0};
  }
  ExactMatrix bh = basis.conjugate_transpose();
  ExactMatrix gram_inv = inverse(bh * basis);
  ExactMatrix proj = basis * gram_inv * bh;  // orthogonal projector onto the radical
  return {proj.transpose(), rad.dim()};
}

}  // namespace torkit
