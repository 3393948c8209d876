#include "torkit/bundle.hpp"

#include <stdexcept>
#include <utility>

#include "torkit/smith.hpp"

namespace torkit {

namespace {

Rational reduce_mod2(const Rational& a) { return mod_positive(a, Rational(2)); }

// Real 2g×2g matrix of multiplication by i on (e, ie) coordinates.
ExactMatrix complex_structure(std::size_t g) {
  ExactMatrix j(2 * g, 2 * g);
  for (std::size_t k = 0; k < g; ++k) {
    j.at(k, g + k) = GaussianRational(-1);
    j.at(g + k, k) = GaussianRational(1);
  }
  return j;
}

}  // namespace

GaussianRational hermitian_value(const HermitianForm& h, const Vector& v, const Vector& w) {
  std::size_t g = h.matrix.rows();
  if (v.size() != g || w.size() != g || h.matrix.cols() != g) {
    throw std::invalid_argument("hermitian form dimension mismatch");
  }
  GaussianRational acc;
  for (std::size_t j = 0; j < g; ++j) {
    if (v[j].is_zero()) {
      continue;
    }
    for (std::size_t k = 0; k < g; ++k) {
      acc += h.matrix.at(j, k) * v[j] * w[k].conj();
    }
  }
  return acc;
}

Rational alternating_value(const HermitianForm& h, const Vector& v, const Vector& w) {
  return hermitian_value(h, v, w).im();
}

AppellHumbertBundle make_bundle(PeriodLattice lattice, ExactMatrix h,
                                std::vector<Rational> chi) {
  std::size_t g = lattice.g();
  if (h.rows() != g || h.cols() != g) {
    throw std::invalid_argument("Hermitian matrix must be g×g");
  }
  if (chi.size() != 2 * g) {
    throw std::invalid_argument("need 2g semicharacter exponents");
  }
  for (Rational& a : chi) {
    a = reduce_mod2(a);
  }
  return AppellHumbertBundle{std::move(lattice), HermitianForm{std::move(h)}, std::move(chi)};
}

ValidationResult validate(const AppellHumbertBundle& b) {
  std::size_t g = b.lattice.g();
  if (b.form.matrix.rows() != g || b.form.matrix.cols() != g) {
    return {false, "H has shape " + std::to_string(b.form.matrix.rows()) + "×" +
                       std::to_string(b.form.matrix.cols()) + ", expected g×g"};
  }
  if (b.chi.size() != 2 * g) {
    return {false, "expected 2g semicharacter exponents"};
  }
  if (!b.form.matrix.is_hermitian()) {
    return {false, "H is not conjugate-symmetric"};
  }
  for (std::size_t j = 0; j < 2 * g; ++j) {
    for (std::size_t k = j + 1; k < 2 * g; ++k) {
      Rational e = alternating_value(b.form, b.lattice.generator(j), b.lattice.generator(k));
      if (!is_integer(e)) {
        return {false, "E(λ_" + std::to_string(j + 1) + ", λ_" + std::to_string(k + 1) +
                           ") = " + rational_str(e) + " is not an integer"};
      }
    }
  }
  return {true, "ok"};
}

AppellHumbertBundle tensor(const AppellHumbertBundle& a, const AppellHumbertBundle& b) {
  if (!(a.lattice == b.lattice)) {
    throw std::invalid_argument("tensor requires bundles on the same lattice");
  }
  std::vector<Rational> chi(a.chi.size());
  for (std::size_t j = 0; j < chi.size(); ++j) {
    chi[j] = reduce_mod2(a.chi[j] + b.chi[j]);
  }
  return {a.lattice, HermitianForm{a.form.matrix + b.form.matrix}, std::move(chi)};
}

AppellHumbertBundle dual(const AppellHumbertBundle& b) {
  std::vector<Rational> chi(b.chi.size());
  for (std::size_t j = 0; j < chi.size(); ++j) {
    chi[j] = reduce_mod2(-b.chi[j]);
  }
  return {b.lattice, HermitianForm{-b.form.matrix}, std::move(chi)};
}

AppellHumbertBundle translate(const AppellHumbertBundle& b, const TorsionPoint& x) {
  Vector lift = torsion_lift(b.lattice, x);
  std::vector<Rational> chi(b.chi.size());
  for (std::size_t j = 0; j < chi.size(); ++j) {
    Rational twist = 2 * alternating_value(b.form, lift, b.lattice.generator(j));
    chi[j] = reduce_mod2(b.chi[j] + twist);
  }
  return {b.lattice, b.form, std::move(chi)};
}

bool isomorphic(const AppellHumbertBundle& a, const AppellHumbertBundle& b) {
  if (!(a.lattice == b.lattice)) {
    throw std::invalid_argument("isomorphism test requires the same lattice presentation");
  }
  if (a.form.matrix != b.form.matrix) {
    return false;
  }
  for (std::size_t j = 0; j < a.chi.size(); ++j) {
    if (reduce_mod2(a.chi[j]) != reduce_mod2(b.chi[j])) {
      return false;
    }
  }
  return true;
}

Subspace radical(const HermitianForm& h) {
  return Subspace{kernel_basis(h.matrix.transpose())};
}

Subspace real_radical(const HermitianForm& h) {
  std::size_t g = h.matrix.rows();
  // E on the real basis (e, ie): blocks [[Im H, -Re H], [Re H, Im H]].
  ExactMatrix em(2 * g, 2 * g);
  for (std::size_t j = 0; j < g; ++j) {
    for (std::size_t k = 0; k < g; ++k) {
      GaussianRational s(h.matrix.at(j, k).re());
      GaussianRational t(h.matrix.at(j, k).im());
      em.at(j, k) = t;
      em.at(j, g + k) = -s;
      em.at(g + j, k) = s;
      em.at(g + j, g + k) = t;
    }
  }
  Subspace out;
  for (const Vector& c : kernel_basis(em)) {
    Vector v(g);
    for (std::size_t k = 0; k < g; ++k) {
      v[k] = c[k] + GaussianRational::i() * c[g + k];
    }
    out.basis.push_back(std::move(v));
  }
  return out;
}

ExactMatrix phi_from_hermitian(const AppellHumbertBundle& b) {
  // φ(v) = H(v,·) has antilinear coefficients (H^T v)_k.
  return b.form.matrix.transpose();
}

ExactMatrix phi_from_translations(const AppellHumbertBundle& b, const Integer& n) {
  if (n < 2) {
    throw std::invalid_argument("sample order must be at least 2");
  }
  std::size_t g = b.lattice.g();
  Rational inv_n(1, n);

  // Sample the translation map on x̃_j = λ_j/n. The twist exponent of the
  // degree-0 bundle τ*_x b ⊗ dual(b) on generator λ_k is 2E(x̃_j, λ_k); kept
  // unreduced, its dual-point coordinate is E(x̃_j, λ_k) and the n-fold scale
  // must land in ℤ.
  ExactMatrix m(2 * g, 2 * g);
  for (std::size_t j = 0; j < 2 * g; ++j) {
    Vector lift(g);
    for (std::size_t c = 0; c < g; ++c) {
      lift[c] = GaussianRational(inv_n) * b.lattice.generator(j)[c];
    }
    for (std::size_t k = 0; k < 2 * g; ++k) {
      Rational coord = alternating_value(b.form, lift, b.lattice.generator(k));
      Rational scaled = Rational(n) * coord;
      if (!is_integer(scaled)) {
        throw std::logic_error("translation sample is not an n-division point of the dual");
      }
      m.at(j, k) = GaussianRational(scaled);
    }
  }
  if (m.transpose() != -m) {
    throw std::logic_error("translation samples violate antisymmetry");
  }

  // φ(λ_j) = Σ_k m_{jk} ℓ^(k) in the dual lattice basis.
  PeriodLattice dual_lat = dual_lattice(b.lattice);
  std::vector<Vector> images(2 * g, Vector(g));
  for (std::size_t j = 0; j < 2 * g; ++j) {
    for (std::size_t k = 0; k < 2 * g; ++k) {
      if (m.at(j, k).is_zero()) {
        continue;
      }
      for (std::size_t c = 0; c < g; ++c) {
        images[j][c] += m.at(j, k) * dual_lat.generator(k)[c];
      }
    }
  }

  // Assemble the ℝ-linear map generators → images and demand ℂ-linearity.
  ExactMatrix w_real(2 * g, 2 * g);
  for (std::size_t j = 0; j < 2 * g; ++j) {
    for (std::size_t c = 0; c < g; ++c) {
      w_real.at(c, j) = GaussianRational(images[j][c].re());
      w_real.at(g + c, j) = GaussianRational(images[j][c].im());
    }
  }
  ExactMatrix t = w_real * inverse(b.lattice.real_generator_matrix());
  ExactMatrix j_mat = complex_structure(g);
  if (t * j_mat != j_mat * t) {
    throw std::logic_error("translation samples are not ℂ-linear");
  }
  ExactMatrix phi(g, g);
  for (std::size_t r = 0; r < g; ++r) {
    for (std::size_t c = 0; c < g; ++c) {
      phi.at(r, c) = t.at(r, c) + GaussianRational::i() * t.at(g + r, c);
    }
  }
  for (std::size_t j = 0; j < 2 * g; ++j) {
    if (phi * b.lattice.generator(j) != images[j]) {
      throw std::logic_error("assembled map disagrees with a translation sample");
    }
  }
  return phi;
}

TorsionPoint chi_to_dual_point(const AppellHumbertBundle& b) {
  if (!b.form.matrix.is_zero()) {
    throw std::invalid_argument("only degree-0 bundles name dual-torus points");
  }
  TorsionPoint p;
  p.coeffs.reserve(b.chi.size());
  for (const Rational& a : b.chi) {
    p.coeffs.push_back(mod_positive(a / 2, Rational(1)));
  }
  return p;
}

StabilizerInfo stabilizer(const AppellHumbertBundle& b) {
  std::size_t g = b.lattice.g();
  ExactMatrix em(2 * g, 2 * g);
  for (std::size_t j = 0; j < 2 * g; ++j) {
    for (std::size_t k = 0; k < 2 * g; ++k) {
      em.at(j, k) = GaussianRational(
          alternating_value(b.form, b.lattice.generator(j), b.lattice.generator(k)));
    }
  }
  SmithDecomposition snf = smith_normal_form(em);
  StabilizerInfo info;
  info.direction = real_radical(b.form);
  info.divisors = snf.divisors;
  info.component_order = 1;
  for (const Integer& d : snf.divisors) {
    if (d != 0) {
      info.component_order *= d;
    }
  }
  return info;
}

ExactMatrix partial_connection_obstruction(const AppellHumbertBundle& b) {
  Subspace rad = radical(b.form);
  ExactMatrix phi = phi_from_hermitian(b);
  ExactMatrix out(b.lattice.g(), rad.dim());
  for (std::size_t c = 0; c < rad.dim(); ++c) {
    Vector img = phi * rad.basis[c];
    for (std::size_t r = 0; r < img.size(); ++r) {
      out.at(r, c) = img[r];
    }
  }
  return out;
}

bool has_holomorphic_connection(const AppellHumbertBundle& b) {
  return b.form.matrix.is_zero();
}

}  // namespace torkit
