#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "torkit/ext.hpp"

using namespace torkit;
using testing::gr;
using testing::mat;
using testing::std_bundle;
using testing::std_lattice;
using testing::vec;

TEST_CASE("increasing tuples") {
  auto t32 = increasing_tuples(3, 2);
  REQUIRE(t32.size() == 3);
  CHECK(t32[0] == std::vector<std::size_t>{0, 1});
  CHECK(t32[1] == std::vector<std::size_t>{0, 2});
  CHECK(t32[2] == std::vector<std::size_t>{1, 2});
  CHECK(increasing_tuples(4, 0).size() == 1);
  CHECK(increasing_tuples(2, 3).empty());
}

TEST_CASE("form shapes") {
  InvariantForm z = zero_form(3, 1, 1);
  CHECK(z.coeffs.size() == 9);
  CHECK(zero_form(3, 2, 1).coeffs.size() == 9);

  InvariantForm c = chern_form(std_bundle(2, mat({{"2", "i"}, {"-i", "3"}})));
  CHECK(c.p == 1);
  CHECK(c.q == 1);
  REQUIRE(c.coeffs.size() == 4);
  CHECK(c.coeffs[0] == gr("2"));
  CHECK(c.coeffs[1] == gr("i"));
  CHECK(c.coeffs[2] == gr("-i"));
  CHECK(c.coeffs[3] == gr("3"));
}

TEST_CASE("contraction is linear and matches the hermitian route") {
  AppellHumbertBundle b = std_bundle(2, mat({{"2", "i"}, {"-i", "3"}}));
  InvariantForm c = chern_form(b);

  Vector v = vec({"1", "i"});
  Vector w = vec({"-1/2", "3"});
  GaussianRational alpha = gr("1+2*i");
  Vector lhs = contract_and_project(c, vec_add(vec_scale(alpha, v), w));
  Vector rhs = vec_add(vec_scale(alpha, contract_and_project(c, v)),
                       contract_and_project(c, w));
  CHECK(lhs == rhs);

  CHECK(phi_from_chern(b) == phi_from_hermitian(b));
  CHECK_THROWS_AS(contract_and_project(zero_form(2, 2, 1), v), std::invalid_argument);
  CHECK_THROWS_AS(contract_and_project(c, vec({"1"})), std::invalid_argument);
}

TEST_CASE("moduli and identification classes differ by the sign") {
  for (std::size_t g : {std::size_t(1), std::size_t(3)}) {
    PeriodLattice lat = std_lattice(g);
    ExtClass m = moduli_extension_class(lat);
    ExtClass c = canonical_identification_class(lat);
    CHECK(m.base == TorusSide::dual);
    CHECK(m.matrix == -ExactMatrix::identity(g));
    CHECK(c.matrix == ExactMatrix::identity(g));
    CHECK(m.matrix == -c.matrix);
    CHECK(m.fiber.dim == g);
  }
  CHECK(torus_side_name(TorusSide::primal) != torus_side_name(TorusSide::dual));
}

TEST_CASE("chern class tensor is the transposed form") {
  AppellHumbertBundle b = std_bundle(2, mat({{"2", "i"}, {"-i", "3"}}));
  ExtClass t = chern_class_tensor(b, TorusSide::dual);
  CHECK(t.base == TorusSide::dual);
  CHECK(t.matrix == b.form.matrix.transpose());
}

TEST_CASE("pushforward") {
  AppellHumbertBundle b = std_bundle(2, mat({{"1", "0"}, {"0", "2"}}));
  ExtClass e = chern_class_tensor(b, TorusSide::primal);
  SpaceDesc fiber2{"fiber", 2};
  SpaceDesc fiber1{"line", 1};

  CHECK(pushforward(e, ExactMatrix::identity(2), fiber2).matrix == e.matrix);
  CHECK(pushforward(e, ExactMatrix(2, 2), fiber2).matrix.is_zero());

  // Composition folds into a single pushforward.
  ExactMatrix f = mat({{"1", "i"}});  // fiber2 -> fiber1
  ExactMatrix g = mat({{"0", "1"}, {"1", "0"}});
  CHECK(pushforward(pushforward(e, g, fiber2), f, fiber1) ==
        pushforward(e, f * g, fiber1));

  CHECK_THROWS_AS(pushforward(e, mat({{"1"}}), fiber1), std::invalid_argument);
  CHECK_THROWS_AS(pushforward(e, mat({{"1", "0"}}), fiber2), std::invalid_argument);
}

TEST_CASE("extension identity on a principal bundle") {
  Prop1Result r = prop1_check(std_bundle(1, mat({{"1"}})));
  CHECK(r.holds);
  CHECK(r.delta_pushed.matrix == mat({{"-1"}}));
  CHECK(r.chern.matrix == mat({{"1"}}));
}

TEST_CASE("extension identity in degree zero") {
  Prop1Result r = prop1_check(std_bundle(1, mat({{"0"}})));
  CHECK(r.holds);
  CHECK(r.delta_pushed.matrix.is_zero());
  CHECK(r.chern.matrix.is_zero());
}

TEST_CASE("extension identity with off-diagonal entries") {
  AppellHumbertBundle b = std_bundle(2, mat({{"2", "i"}, {"-i", "3"}}));
  Prop1Result r = prop1_check(b);
  CHECK(r.holds);
  CHECK(r.chern.matrix == b.form.matrix.transpose());
  CHECK(r.delta_pushed.matrix == -r.chern.matrix);
}
