#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "torkit/lattice.hpp"

using namespace torkit;
using testing::gr;
using testing::std_lattice;
using testing::vec;

namespace {

PeriodLattice g1(const char* first, const char* second) {
  return PeriodLattice(1, {vec({first}), vec({second})});
}

}  // namespace

TEST_CASE("construction rejects degenerate data") {
  CHECK_THROWS_AS(PeriodLattice(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(PeriodLattice(1, {vec({"1"})}), std::invalid_argument);
  CHECK_THROWS_AS(PeriodLattice(1, {vec({"1", "0"}), vec({"i", "0"})}),
                  std::invalid_argument);
  // ℝ-dependent generators: 1 and 2 span only a line.
  CHECK_THROWS_AS(g1("1", "2"), std::invalid_argument);
  CHECK_NOTHROW(g1("1", "i"));
}

TEST_CASE("real generator matrix stacks re over im") {
  ExactMatrix m = g1("1", "2*i").real_generator_matrix();
  CHECK(m == testing::mat({{"1", "0"}, {"0", "2"}}));
}

TEST_CASE("coordinates round trip") {
  PeriodLattice lat = std_lattice(2);
  Vector v = vec({"1/2+3/2*i", "-1"});
  std::vector<Rational> c = lat.lattice_coordinates(v);
  REQUIRE(c.size() == 4);
  CHECK(c[0] == Rational(1, 2));
  CHECK(c[1] == Rational(-1));
  CHECK(c[2] == Rational(3, 2));
  CHECK(c[3] == Rational(0));
  CHECK(lat.combination(c) == v);
}

TEST_CASE("pairing values on the square lattice") {
  AntilinearFunctional one{vec({"1"})};
  AntilinearFunctional im{vec({"i"})};
  CHECK(antilinear_value(one, vec({"i"})) == gr("-i"));
  CHECK(pairing(one, vec({"1"})) == Rational(0));
  CHECK(pairing(one, vec({"i"})) == Rational(-1));
  CHECK(pairing(im, vec({"1"})) == Rational(1));
}

TEST_CASE("pairing is additive in both slots") {
  AntilinearFunctional f{vec({"1/2+i", "2"})};
  Vector v = vec({"1", "i"});
  Vector w = vec({"-i", "3/2"});
  CHECK(pairing(f, vec_add(v, w)) == pairing(f, v) + pairing(f, w));
  AntilinearFunctional g{vec({"0", "-i"})};
  AntilinearFunctional sum{vec_add(f.coeffs, g.coeffs)};
  CHECK(pairing(sum, v) == pairing(f, v) + pairing(g, v));
}

TEST_CASE("dual of the square lattice") {
  PeriodLattice dual = dual_lattice(std_lattice(1));
  CHECK(same_integer_span(dual, g1("1", "i")));
}

TEST_CASE("dual of a stretched lattice") {
  PeriodLattice dual = dual_lattice(g1("1", "2*i"));
  CHECK(same_integer_span(dual, g1("1/2", "i")));
}

TEST_CASE("dual generators pair to the identity") {
  PeriodLattice lat(2, {vec({"1", "0"}), vec({"0", "1"}), vec({"i", "1"}),
                        vec({"1/2", "2*i"})});
  PeriodLattice dual = dual_lattice(lat);
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t j = 0; j < 4; ++j) {
      AntilinearFunctional f{dual.generator(k)};
      CHECK(pairing(f, lat.generator(j)) == Rational(k == j ? 1 : 0));
    }
  }
}

TEST_CASE("bidual returns the original lattice") {
  for (const PeriodLattice& lat :
       {std_lattice(1), g1("1", "2*i"), g1("1/2+i", "3*i"),
        PeriodLattice(2, {vec({"1", "0"}), vec({"0", "1"}), vec({"i", "1"}),
                          vec({"1/2", "2*i"})})}) {
    CHECK(same_integer_span(dual_lattice(dual_lattice(lat)), lat));
  }
}

TEST_CASE("torsion point counts") {
  CHECK(torsion_points(std_lattice(1), Integer(1)).size() == 1);
  CHECK(torsion_points(std_lattice(1), Integer(2)).size() == 4);
  CHECK(torsion_points(std_lattice(2), Integer(3)).size() == 81);
}

TEST_CASE("torsion enumeration order and lifts") {
  std::vector<TorsionPoint> pts = torsion_points(std_lattice(1), Integer(2));
  REQUIRE(pts.size() == 4);
  CHECK(pts[0].coeffs == std::vector<Rational>{Rational(0), Rational(0)});
  // Last coordinate moves fastest.
  CHECK(pts[1].coeffs == std::vector<Rational>{Rational(0), Rational(1, 2)});
  CHECK(pts[2].coeffs == std::vector<Rational>{Rational(1, 2), Rational(0)});
  CHECK(torsion_lift(std_lattice(1), pts[3]) == vec({"1/2+1/2*i"}));
}

TEST_CASE("torsion point orders") {
  CHECK(TorsionPoint{{Rational(0), Rational(0)}}.order() == 1);
  CHECK(TorsionPoint{{Rational(1, 2), Rational(0)}}.order() == 2);
  CHECK(TorsionPoint{{Rational(1, 3), Rational(1, 2)}}.order() == 6);
}

TEST_CASE("integer span comparison") {
  CHECK(same_integer_span(g1("1", "i"), g1("1", "1+i")));
  CHECK_FALSE(same_integer_span(g1("1", "i"), g1("1/2", "i")));
  CHECK_FALSE(same_integer_span(g1("1/2", "i"), g1("1", "i")));
}
