#include "torkit/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace torkit {

PeriodLattice::PeriodLattice(std::size_t g, std::vector<Vector> generators)
    : g_(g), generators_(std::move(generators)) {
  if (g_ == 0) {
    throw std::invalid_argument("lattice dimension must be positive");
  }
  if (generators_.size() != 2 * g_) {
    throw std::invalid_argument("lattice needs exactly 2g generators");
  }
  for (const Vector& v : generators_) {
    if (v.size() != g_) {
      throw std::invalid_argument("lattice generator has wrong dimension");
    }
  }
  if (rank(real_generator_matrix()) != 2 * g_) {
    throw std::invalid_argument("lattice generators are linearly dependent over the reals");
  }
}

ExactMatrix PeriodLattice::real_generator_matrix() const {
  ExactMatrix m(2 * g_, 2 * g_);
  for (std::size_t j = 0; j < 2 * g_; ++j) {
    for (std::size_t k = 0; k < g_; ++k) {
      m.at(k, j) = GaussianRational(generators_[j][k].re());
      m.at(g_ + k, j) = GaussianRational(generators_[j][k].im());
    }
  }
  return m;
}

std::vector<Rational> PeriodLattice::lattice_coordinates(const Vector& v) const {
  if (v.size() != g_) {
    throw std::invalid_argument("vector dimension mismatch");
  }
  Vector rhs(2 * g_);
  for (std::size_t k = 0; k < g_; ++k) {
    rhs[k] = GaussianRational(v[k].re());
    rhs[g_ + k] = GaussianRational(v[k].im());
  }
  auto sol = solve(real_generator_matrix(), rhs);
  if (!sol) {
    throw std::logic_error("invertible generator matrix failed to solve");
  }
  std::vector<Rational> coords(2 * g_);
  for (std::size_t j = 0; j < 2 * g_; ++j) {
    coords[j] = (*sol)[j].re();
  }
  return coords;
}

Vector PeriodLattice::combination(const std::vector<Rational>& coeffs) const {
  if (coeffs.size() != 2 * g_) {
    throw std::invalid_argument("coefficient count must be 2g");
  }
  Vector out(g_);
  for (std::size_t j = 0; j < 2 * g_; ++j) {
    if (coeffs[j] == 0) {
      continue;
    }
    GaussianRational c(coeffs[j]);
    for (std::size_t k = 0; k < g_; ++k) {
      out[k] += c * generators_[j][k];
    }
  }
  return out;
}

GaussianRational antilinear_value(const AntilinearFunctional& f, const Vector& z) {
  if (f.coeffs.size() != z.size()) {
    throw std::invalid_argument("functional/vector dimension mismatch");
  }
  GaussianRational acc;
  for (std::size_t j = 0; j < z.size(); ++j) {
    acc += f.coeffs[j] * z[j].conj();
  }
  return acc;
}

Rational pairing(const AntilinearFunctional& f, const Vector& v) {
  return antilinear_value(f, v).im();
}

PeriodLattice dual_lattice(const PeriodLattice& lattice) {
  std::size_t g = lattice.g();
  // Unknowns u = (a, b) for c = a + ib; ⟨ℓ_c, λ_j⟩ = Σ_k (b_k x_{jk} − a_k y_{jk}).
  ExactMatrix p(2 * g, 2 * g);
  for (std::size_t j = 0; j < 2 * g; ++j) {
    const Vector& lam = lattice.generator(j);
    for (std::size_t k = 0; k < g; ++k) {
      p.at(j, k) = GaussianRational(-lam[k].im());
      p.at(j, g + k) = GaussianRational(lam[k].re());
    }
  }
  ExactMatrix pinv = inverse(p);  // cannot be singular for a valid lattice
  std::vector<Vector> duals;
  duals.reserve(2 * g);
  for (std::size_t k = 0; k < 2 * g; ++k) {
    Vector c(g);
    for (std::size_t m = 0; m < g; ++m) {
      c[m] = GaussianRational(pinv.at(m, k).re(), pinv.at(g + m, k).re());
    }
    duals.push_back(std::move(c));
  }
  return PeriodLattice(g, std::move(duals));
}

Integer TorsionPoint::order() const {
  Integer n = 1;
  for (const Rational& c : coeffs) {
    n = lcm(n, Integer(c.get_den()));
  }
  return n;
}

std::vector<TorsionPoint> torsion_points(const PeriodLattice& lattice, const Integer& n) {
  if (n < 1) {
    throw std::invalid_argument("torsion order must be positive");
  }
  std::size_t dim = 2 * lattice.g();
  std::vector<TorsionPoint> points;
  std::vector<Integer> counter(dim, 0);
  while (true) {
    TorsionPoint p;
    p.coeffs.reserve(dim);
    for (const Integer& c : counter) {
      p.coeffs.emplace_back(c, n);
      p.coeffs.back().canonicalize();
    }
    points.push_back(std::move(p));
    std::size_t j = dim;
    while (j > 0) {
      --j;
      counter[j] += 1;
      if (counter[j] < n) {
        break;
      }
      counter[j] = 0;
      if (j == 0) {
        return points;
      }
    }
  }
}

Vector torsion_lift(const PeriodLattice& lattice, const TorsionPoint& point) {
  return lattice.combination(point.coeffs);
}

bool same_integer_span(const PeriodLattice& a, const PeriodLattice& b) {
  if (a.g() != b.g()) {
    throw std::invalid_argument("lattice dimension mismatch");
  }
  for (const Vector& v : b.generators()) {
    for (const Rational& c : a.lattice_coordinates(v)) {
      if (!is_integer(c)) {
        return false;
      }
    }
  }
  for (const Vector& v : a.generators()) {
    for (const Rational& c : b.lattice_coordinates(v)) {
      if (!is_integer(c)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace torkit
