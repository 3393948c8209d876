#include "torkit/ext.hpp"

#include <stdexcept>
#include <utility>

namespace torkit {

std::string torus_side_name(TorusSide side) {
  return side == TorusSide::primal ? "A" : "A-dual";
}

std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t g, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  // Depth-first enumeration keeps lexicographic order.
  auto rec = [&](auto&& self, std::size_t next) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t j = next; j < g; ++j) {
      cur.push_back(j);
      self(self, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

InvariantForm zero_form(std::size_t g, std::size_t p, std::size_t q) {
  InvariantForm f;
  f.g = g;
  f.p = p;
  f.q = q;
  f.coeffs.assign(increasing_tuples(g, p).size() * increasing_tuples(g, q).size(),
                  GaussianRational());
  return f;
}

InvariantForm chern_form(const AppellHumbertBundle& b) {
  std::size_t g = b.lattice.g();
  InvariantForm f = zero_form(g, 1, 1);
  for (std::size_t j = 0; j < g; ++j) {
    for (std::size_t k = 0; k < g; ++k) {
      f.coeffs[j * g + k] = b.form.matrix.at(j, k);
    }
  }
  return f;
}

Vector contract_and_project(const InvariantForm& form, const Vector& v) {
  if (form.p != 1 || form.q != 1) {
    throw std::invalid_argument("contraction requires a (1,1) form");
  }
  if (v.size() != form.g) {
    throw std::invalid_argument("tangent vector dimension mismatch");
  }
  // ι_v(Σ ω_{jk} dz_j∧dz̄_k) has (0,1) part Σ_k (Σ_j ω_{jk} v_j) dz̄_k, and
  // dz̄_k corresponds to the k-th antilinear coordinate.
  Vector out(form.g);
  for (std::size_t k = 0; k < form.g; ++k) {
    for (std::size_t j = 0; j < form.g; ++j) {
      out[k] += form.coeffs[j * form.g + k] * v[j];
    }
  }
  return out;
}

ExactMatrix phi_from_chern(const AppellHumbertBundle& b) {
  std::size_t g = b.lattice.g();
  InvariantForm form = chern_form(b);
  ExactMatrix phi(g, g);
  for (std::size_t m = 0; m < g; ++m) {
    Vector e(g);
    e[m] = GaussianRational(1);
    Vector img = contract_and_project(form, e);
    for (std::size_t r = 0; r < g; ++r) {
      phi.at(r, m) = img[r];
    }
  }
  return phi;
}

ExtClass moduli_extension_class(const PeriodLattice& lattice) {
  std::size_t g = lattice.g();
  return {TorusSide::dual, {"invariant 1-forms on the primal torus", g},
          -ExactMatrix::identity(g)};
}

ExtClass canonical_identification_class(const PeriodLattice& lattice) {
  std::size_t g = lattice.g();
  return {TorusSide::dual, {"invariant 1-forms on the primal torus", g},
          ExactMatrix::identity(g)};
}

ExtClass chern_class_tensor(const AppellHumbertBundle& b, TorusSide side) {
  std::size_t g = b.lattice.g();
  return {side, {"invariant 1-forms", g}, b.form.matrix.transpose()};
}

ExtClass pushforward(const ExtClass& e, const ExactMatrix& f, SpaceDesc new_fiber) {
  if (f.cols() != e.fiber.dim || f.rows() != new_fiber.dim) {
    throw std::invalid_argument("pushforward fiber map has the wrong shape");
  }
  return {e.base, std::move(new_fiber), e.matrix * f.transpose()};
}

Prop1Result prop1_check(const AppellHumbertBundle& bundle_on_dual) {
  std::size_t g = bundle_on_dual.lattice.g();
  // φ* pulls invariant 1-forms back along φ; its matrix is the transpose of φ.
  ExactMatrix phi_star = phi_from_hermitian(bundle_on_dual).transpose();
  Prop1Result r;
  r.delta_pushed = pushforward(moduli_extension_class(bundle_on_dual.lattice), phi_star,
                               {"invariant 1-forms on the dual torus", g});
  // Independent route for c₁: contraction of the invariant (1,1) form.
  r.chern = ExtClass{TorusSide::dual, {"invariant 1-forms on the dual torus", g},
                     phi_from_chern(bundle_on_dual)};
  r.holds = r.delta_pushed.matrix == -r.chern.matrix;
  return r;
}

}  // namespace torkit
