#pragma once

// Shorthand builders shared by the test binaries.

#include <initializer_list>
#include <string>
#include <vector>

#include "torkit/bundle.hpp"
#include "torkit/gaussian.hpp"
#include "torkit/lattice.hpp"
#include "torkit/matrix.hpp"

namespace torkit::testing {

inline GaussianRational gr(const std::string& text) { return GaussianRational::parse(text); }

inline Vector vec(std::initializer_list<const char*> entries) {
  Vector out;
  for (const char* e : entries) {
    out.push_back(gr(e));
  }
  return out;
}

inline ExactMatrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<Vector> parsed;
  for (const auto& row : rows) {
    parsed.push_back(vec(row));
  }
  return ExactMatrix::from_rows(parsed);
}

// ℤ^g + iℤ^g with generators e_1, …, e_g, ie_1, …, ie_g.
inline PeriodLattice std_lattice(std::size_t g) {
  std::vector<Vector> gens;
  for (std::size_t pass = 0; pass < 2; ++pass) {
    for (std::size_t j = 0; j < g; ++j) {
      Vector v(g, GaussianRational(0));
      v[j] = pass == 0 ? GaussianRational(1) : GaussianRational::i();
      gens.push_back(v);
    }
  }
  return PeriodLattice(g, std::move(gens));
}

inline AppellHumbertBundle std_bundle(std::size_t g, ExactMatrix h) {
  return make_bundle(std_lattice(g), std::move(h), std::vector<Rational>(2 * g, Rational(0)));
}

}  // namespace torkit::testing
