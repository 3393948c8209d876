#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "torkit/bundle.hpp"
#include "torkit/lattice.hpp"

using namespace torkit;
using testing::gr;
using testing::mat;
using testing::std_bundle;
using testing::std_lattice;
using testing::vec;

namespace {

std::vector<Rational> rats(std::initializer_list<const char*> entries) {
  std::vector<Rational> out;
  for (const char* e : entries) {
    out.push_back(parse_rational(e));
  }
  return out;
}

}  // namespace

TEST_CASE("make_bundle shape checks and exponent reduction") {
  CHECK_THROWS_AS(make_bundle(std_lattice(1), mat({{"1", "0"}}), rats({"0", "0"})),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_bundle(std_lattice(1), mat({{"1"}}), rats({"0"})),
                  std::invalid_argument);

  AppellHumbertBundle b =
      make_bundle(std_lattice(1), mat({{"1"}}), rats({"5/2", "-1/2"}));
  CHECK(b.chi == rats({"1/2", "3/2"}));
}

TEST_CASE("validate accepts integral alternating forms") {
  CHECK(validate(std_bundle(1, mat({{"1"}}))).ok);
  CHECK(validate(std_bundle(1, mat({{"0"}}))).ok);
  CHECK(validate(std_bundle(2, mat({{"2", "i"}, {"-i", "3"}}))).ok);
}

TEST_CASE("validate rejects with a pinpointed diagnostic") {
  ValidationResult half = validate(std_bundle(1, mat({{"1/2"}})));
  CHECK_FALSE(half.ok);
  CHECK(half.message.find("E(λ_1, λ_2)") != std::string::npos);
  CHECK(half.message.find("-1/2") != std::string::npos);

  CHECK_FALSE(validate(std_bundle(1, mat({{"i"}}))).ok);
  CHECK_FALSE(validate(std_bundle(2, mat({{"1", "1"}, {"0", "1"}}))).ok);
}

TEST_CASE("form values") {
  HermitianForm h{mat({{"1"}})};
  CHECK(hermitian_value(h, vec({"1"}), vec({"i"})) == gr("-i"));
  CHECK(alternating_value(h, vec({"1"}), vec({"i"})) == Rational(-1));
  CHECK(alternating_value(h, vec({"i"}), vec({"1"})) == Rational(1));
  CHECK(alternating_value(h, vec({"1"}), vec({"1"})) == Rational(0));

  HermitianForm h2{mat({{"2", "i"}, {"-i", "3"}})};
  Vector e1 = vec({"1", "0"}), e2 = vec({"0", "1"});
  CHECK(hermitian_value(h2, e1, e2) == gr("i"));
  CHECK(hermitian_value(h2, e2, e1) == gr("-i"));
  CHECK(alternating_value(h2, e1, e2) == Rational(1));
}

TEST_CASE("tensor adds data, dual negates it") {
  AppellHumbertBundle a =
      make_bundle(std_lattice(1), mat({{"1"}}), rats({"1/2", "0"}));
  AppellHumbertBundle b = make_bundle(std_lattice(1), mat({{"2"}}), rats({"1", "3/2"}));

  AppellHumbertBundle t = tensor(a, b);
  CHECK(t.form.matrix == mat({{"3"}}));
  CHECK(t.chi == rats({"3/2", "3/2"}));

  AppellHumbertBundle d = dual(a);
  CHECK(d.form.matrix == mat({{"-1"}}));
  CHECK(d.chi == rats({"3/2", "0"}));
  CHECK(isomorphic(tensor(a, d), std_bundle(1, mat({{"0"}}))));

  CHECK_THROWS_AS(tensor(a, std_bundle(2, mat({{"1", "0"}, {"0", "1"}}))),
                  std::invalid_argument);
}

TEST_CASE("translation by a half period") {
  TorsionPoint half{{Rational(1, 2), Rational(0)}};

  // Even form: every half period fixes the bundle.
  AppellHumbertBundle even = std_bundle(1, mat({{"2"}}));
  CHECK(isomorphic(translate(even, half), even));

  // Principal form: the same point moves the semicharacter.
  AppellHumbertBundle odd = std_bundle(1, mat({{"1"}}));
  AppellHumbertBundle moved = translate(odd, half);
  CHECK_FALSE(isomorphic(moved, odd));
  CHECK(moved.form.matrix == odd.form.matrix);
  CHECK(moved.chi == rats({"0", "1"}));
}

TEST_CASE("translation is an action") {
  AppellHumbertBundle b = make_bundle(std_lattice(2), mat({{"1", "i"}, {"-i", "2"}}),
                                      rats({"1/2", "0", "3/2", "1"}));
  TorsionPoint x{{Rational(1, 2), Rational(0), Rational(1, 3), Rational(0)}};
  TorsionPoint y{{Rational(1, 2), Rational(1, 4), Rational(1, 3), Rational(0)}};
  std::vector<Rational> sum;
  for (std::size_t i = 0; i < 4; ++i) {
    sum.push_back(mod_positive(x.coeffs[i] + y.coeffs[i], Rational(1)));
  }
  CHECK(isomorphic(translate(translate(b, x), y), translate(b, TorsionPoint{sum})));
  TorsionPoint zero{{Rational(0), Rational(0), Rational(0), Rational(0)}};
  CHECK(isomorphic(translate(b, zero), b));
}

TEST_CASE("radical bases") {
  CHECK(radical(HermitianForm{mat({{"1"}})}).dim() == 0);

  Subspace full = radical(HermitianForm{mat({{"0"}})});
  REQUIRE(full.dim() == 1);
  CHECK(full.basis[0] == vec({"1"}));

  Subspace line = radical(HermitianForm{mat({{"1", "0"}, {"0", "0"}})});
  REQUIRE(line.dim() == 1);
  CHECK(span_equal(line.basis, {vec({"0", "1"})}));

  Subspace diag = radical(HermitianForm{mat({{"1", "1"}, {"1", "1"}})});
  REQUIRE(diag.dim() == 1);
  CHECK(span_equal(diag.basis, {vec({"1", "-1"})}));
}

TEST_CASE("real and complex radicals agree") {
  for (const ExactMatrix& h :
       {mat({{"1"}}), mat({{"0"}}), mat({{"1", "0"}, {"0", "0"}}),
        mat({{"1", "1"}, {"1", "1"}}), mat({{"2", "i"}, {"-i", "3"}}),
        mat({{"1", "i"}, {"-i", "1"}})}) {
    CAPTURE(h.str());
    Subspace c = radical(HermitianForm{h});
    Subspace r = real_radical(HermitianForm{h});
    CHECK(span_equal(c.basis, r.basis));
  }
}

TEST_CASE("phi routes agree on fixed examples") {
  for (const ExactMatrix& h : {mat({{"1"}}), mat({{"3"}}), mat({{"1", "0"}, {"0", "0"}}),
                               mat({{"2", "i"}, {"-i", "3"}})}) {
    CAPTURE(h.str());
    AppellHumbertBundle b = std_bundle(h.rows(), h);
    ExactMatrix phi = phi_from_hermitian(b);
    CHECK(phi == h.transpose());
    for (long n = 2; n <= 5; ++n) {
      CHECK(phi_from_translations(b, Integer(n)) == phi);
    }
  }
  CHECK_THROWS_AS(phi_from_translations(std_bundle(1, mat({{"1"}})), Integer(1)),
                  std::invalid_argument);
}

TEST_CASE("degree zero bundles name dual points") {
  AppellHumbertBundle b =
      make_bundle(std_lattice(1), mat({{"0"}}), rats({"1", "1/2"}));
  TorsionPoint p = chi_to_dual_point(b);
  CHECK(p.coeffs == rats({"1/2", "1/4"}));
  CHECK_THROWS_AS(chi_to_dual_point(std_bundle(1, mat({{"1"}}))),
                  std::invalid_argument);
}

TEST_CASE("stabilizer of definite forms") {
  StabilizerInfo two = stabilizer(std_bundle(1, mat({{"2"}})));
  CHECK(two.direction.dim() == 0);
  REQUIRE(two.divisors.size() == 2);
  CHECK(two.divisors[0] == 2);
  CHECK(two.divisors[1] == 2);
  CHECK(two.component_order == 4);

  StabilizerInfo one = stabilizer(std_bundle(1, mat({{"1"}})));
  CHECK(one.component_order == 1);
  CHECK(one.divisors == std::vector<Integer>{Integer(1), Integer(1)});
}

TEST_CASE("stabilizer of degenerate forms") {
  // The direction is a real span: 2k basis vectors for complex radical dim k.
  StabilizerInfo flat = stabilizer(std_bundle(1, mat({{"0"}})));
  CHECK(flat.direction.dim() == 2);
  CHECK(span_equal(flat.direction.basis, {vec({"1"})}));
  CHECK(flat.divisors == std::vector<Integer>{Integer(0), Integer(0)});
  CHECK(flat.component_order == 1);

  StabilizerInfo line = stabilizer(std_bundle(2, mat({{"2", "0"}, {"0", "0"}})));
  CHECK(line.direction.dim() == 2);
  CHECK(span_equal(line.direction.basis, {vec({"0", "1"})}));
  CHECK(line.component_order == 4);
  std::vector<Integer> expected{Integer(2), Integer(2), Integer(0), Integer(0)};
  CHECK(line.divisors == expected);
}

TEST_CASE("brute force count matches the component order") {
  AppellHumbertBundle b = std_bundle(1, mat({{"2"}}));
  long fixed = 0;
  for (const TorsionPoint& x : torsion_points(b.lattice, Integer(4))) {
    if (isomorphic(translate(b, x), b)) {
      ++fixed;
    }
  }
  CHECK(fixed == 4);
}

TEST_CASE("connections exist exactly in degree zero") {
  CHECK(has_holomorphic_connection(std_bundle(1, mat({{"0"}}))));
  CHECK_FALSE(has_holomorphic_connection(std_bundle(1, mat({{"1"}}))));

  ExactMatrix ob = partial_connection_obstruction(std_bundle(2, mat({{"1", "0"}, {"0", "0"}})));
  CHECK(ob.rows() == 2);
  CHECK(ob.cols() == 1);
  CHECK(ob.is_zero());

  ExactMatrix none = partial_connection_obstruction(std_bundle(1, mat({{"1"}})));
  CHECK(none.cols() == 0);
  CHECK(none.is_zero());
}
