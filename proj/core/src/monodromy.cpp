#include "torkit/monodromy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

namespace torkit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double to_double(const Rational& r) { return mpq_get_d(r.get_mpq_t()); }

// Solves the 2g real equations Im x(λ_j) = rhs_j for the antilinear
// coefficients x = a + ib: Im x(λ_j) = Σ_k (b_k·Re λ_jk − a_k·Im λ_jk).
std::vector<Complex> solve_imaginary_parts(const NumericLattice& lattice,
                                           const Eigen::VectorXd& rhs) {
  std::size_t g = lattice.g;
  Eigen::MatrixXd m(2 * g, 2 * g);
  for (std::size_t j = 0; j < 2 * g; ++j) {
    for (std::size_t k = 0; k < g; ++k) {
      m(j, k) = -lattice.generators[j][k].imag();
      m(j, g + k) = lattice.generators[j][k].real();
    }
  }
  Eigen::VectorXd u = m.colPivHouseholderQr().solve(rhs);
  std::vector<Complex> x(g);
  for (std::size_t k = 0; k < g; ++k) {
    x[k] = Complex(u(k), u(g + k));
  }
  return x;
}

double positive_fraction(double v) {
  double f = v - std::floor(v);
  if (f >= 1.0) {
    f -= 1.0;
  }
  return f;
}

}  // namespace

NumericLattice numeric_lattice(const PeriodLattice& lattice) {
  NumericLattice out;
  out.g = lattice.g();
  out.generators.reserve(2 * out.g);
  for (const Vector& gen : lattice.generators()) {
    std::vector<Complex> v(out.g);
    for (std::size_t k = 0; k < out.g; ++k) {
      v[k] = Complex(to_double(gen[k].re()), to_double(gen[k].im()));
    }
    out.generators.push_back(std::move(v));
  }
  return out;
}

Complex antilinear_eval(const std::vector<Complex>& x, const std::vector<Complex>& z) {
  if (x.size() != z.size()) {
    throw std::invalid_argument("functional/vector dimension mismatch");
  }
  Complex acc;
  for (std::size_t k = 0; k < x.size(); ++k) {
    acc += x[k] * std::conj(z[k]);
  }
  return acc;
}

Complex linear_eval(const std::vector<Complex>& omega, const std::vector<Complex>& z) {
  if (omega.size() != z.size()) {
    throw std::invalid_argument("functional/vector dimension mismatch");
  }
  Complex acc;
  for (std::size_t k = 0; k < omega.size(); ++k) {
    acc += omega[k] * z[k];
  }
  return acc;
}

LambdaConnection add(const LambdaConnection& a, const LambdaConnection& b) {
  if (a.x != b.x) {
    throw std::invalid_argument("connections live over different base points");
  }
  if (a.omega.size() != b.omega.size()) {
    throw std::invalid_argument("form dimension mismatch");
  }
  LambdaConnection out = a;
  out.c += b.c;
  for (std::size_t k = 0; k < out.omega.size(); ++k) {
    out.omega[k] += b.omega[k];
  }
  return out;
}

LambdaConnection scale(const Complex& alpha, const LambdaConnection& a) {
  LambdaConnection out = a;
  out.c *= alpha;
  for (auto& w : out.omega) {
    w *= alpha;
  }
  return out;
}

Complex forgetful(const LambdaConnection& a) { return a.c; }

Character monodromy(const NumericLattice& lattice, const LambdaConnection& conn) {
  if (conn.c != Complex(1.0, 0.0)) {
    throw std::invalid_argument("monodromy needs scale exactly 1");
  }
  if (conn.x.size() != lattice.g || conn.omega.size() != lattice.g) {
    throw std::invalid_argument("connection dimension mismatch");
  }
  Character t;
  t.values.reserve(2 * lattice.g);
  for (const auto& lam : lattice.generators) {
    double theta = kTwoPi * antilinear_eval(conn.x, lam).imag();
    Complex unitary = std::polar(1.0, theta);
    t.values.push_back(unitary * std::exp(-linear_eval(conn.omega, lam)));
  }
  return t;
}

LambdaConnection character_to_connection(const NumericLattice& lattice, const Character& t) {
  std::size_t g = lattice.g;
  if (t.values.size() != 2 * g) {
    throw std::invalid_argument("character needs one value per generator");
  }
  for (const Complex& v : t.values) {
    if (v == Complex(0.0, 0.0)) {
      throw std::invalid_argument("character values must be nonzero");
    }
  }

  // Re ω(λ_j) = −log|t_j|; with ω = p + iq, Re ω(λ_j) = Σ_k (p_k·Re λ_jk − q_k·Im λ_jk).
  Eigen::MatrixXd m(2 * g, 2 * g);
  Eigen::VectorXd rhs(2 * g);
  for (std::size_t j = 0; j < 2 * g; ++j) {
    for (std::size_t k = 0; k < g; ++k) {
      m(j, k) = lattice.generators[j][k].real();
      m(j, g + k) = -lattice.generators[j][k].imag();
    }
    rhs(j) = -std::log(std::abs(t.values[j]));
  }
  Eigen::VectorXd u = m.colPivHouseholderQr().solve(rhs);
  LambdaConnection conn;
  conn.c = Complex(1.0, 0.0);
  conn.omega.resize(g);
  for (std::size_t k = 0; k < g; ++k) {
    conn.omega[k] = Complex(u(k), u(g + k));
  }

  // The residue t_j·e^{ω(λ_j)} is unitary; its phase pins down Im x(λ_j).
  Eigen::VectorXd theta(2 * g);
  for (std::size_t j = 0; j < 2 * g; ++j) {
    Complex unit = t.values[j] * std::exp(linear_eval(conn.omega, lattice.generators[j]));
    double arg = std::arg(unit);  // (−π, π]
    if (arg < 0.0) {
      arg += kTwoPi;  // principal value in [0, 2π)
    }
    theta(j) = arg / kTwoPi;
  }
  conn.x = solve_imaginary_parts(lattice, theta);
  return conn;
}

std::vector<Complex> psi_cover(const NumericLattice& lattice,
                               const std::vector<Complex>& omega) {
  std::size_t g = lattice.g;
  if (omega.size() != g) {
    throw std::invalid_argument("form dimension mismatch");
  }
  // e^{2πi·Im x(λ)} = e^{−2i·Im ω(λ)} ⇒ Im x(λ_j) ≡ −Im ω(λ_j)/π (mod 1).
  Eigen::VectorXd rhs(2 * g);
  for (std::size_t j = 0; j < 2 * g; ++j) {
    rhs(j) = positive_fraction(-linear_eval(omega, lattice.generators[j]).imag() /
                               std::numbers::pi);
  }
  return solve_imaginary_parts(lattice, rhs);
}

bool deck_equivalent(const NumericLattice& lattice, const std::vector<Complex>& omega1,
                     const std::vector<Complex>& omega2, double tol) {
  for (const auto& lam : lattice.generators) {
    double diff =
        (linear_eval(omega1, lam) - linear_eval(omega2, lam)).imag() / std::numbers::pi;
    if (std::abs(diff - std::round(diff)) > tol) {
      return false;
    }
  }
  return true;
}

bool same_dual_point(const NumericLattice& lattice, const std::vector<Complex>& x1,
                     const std::vector<Complex>& x2, double tol) {
  for (const auto& lam : lattice.generators) {
    double diff = antilinear_eval(x1, lam).imag() - antilinear_eval(x2, lam).imag();
    if (std::abs(diff - std::round(diff)) > tol) {
      return false;
    }
  }
  return true;
}

double character_distance(const Character& a, const Character& b) {
  if (a.values.size() != b.values.size()) {
    throw std::invalid_argument("character length mismatch");
  }
  double worst = 0.0;
  for (std::size_t j = 0; j < a.values.size(); ++j) {
    worst = std::max(worst, std::abs(a.values[j] - b.values[j]));
  }
  return worst;
}

}  // namespace torkit
