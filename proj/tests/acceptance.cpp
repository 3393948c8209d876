// Acceptance gate: every release criterion runs here, one verdict line each.
// Exit status 0 only when every line reads PASS.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "torkit/bundle.hpp"
#include "torkit/ext.hpp"
#include "torkit/lattice.hpp"
#include "torkit/smith.hpp"
#include "torkit/symring.hpp"
#include "torkit/workspace.hpp"

using namespace torkit;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s  %-28s %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  if (!ok) {
    ++failures;
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void check_lemma2() {
  auto start = std::chrono::steady_clock::now();
  SuiteParams params;
  params.cases = 200;
  params.seed = 1;
  SuiteReport r = run_lemma2_suite(params);
  double elapsed = seconds_since(start);
  bool ok = r.ok() && elapsed < 10.0;
  char detail[128];
  std::snprintf(detail, sizeof detail, "%zu/%zu radical spans agree in %.2fs (budget 10s)",
                r.passed, r.total, elapsed);
  report("lemma2", ok, detail);
}

void check_phi_routes() {
  std::size_t passed = 0, total = 100;
  std::string first_failure;
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t g = 1 + i % 3;
    std::size_t k = (i / 3) % (g + 1);
    AppellHumbertBundle b = random_bundle(g, k, 1000 + i);
    ExactMatrix phi = phi_from_hermitian(b);
    bool ok = phi_from_chern(b) == phi;
    for (long n = 2; ok && n <= 5; ++n) {
      ok = phi_from_translations(b, Integer(n)) == phi;
    }
    if (ok) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = " first failure at case " + std::to_string(i);
    }
  }
  report("phi three-way", passed == total,
         std::to_string(passed) + "/" + std::to_string(total) +
             " exact agreements (hermitian = translations n=2..5 = contraction)" +
             first_failure);
}

void check_prop1() {
  SuiteParams params;
  params.cases = 100;
  params.seed = 2;
  SuiteReport r = run_prop1_suite(params);
  report("prop1", r.ok(),
         std::to_string(r.passed) + "/" + std::to_string(r.total) +
             " extension identities (flat and definite forms included)");
}

void check_thm1() {
  auto start = std::chrono::steady_clock::now();
  SuiteParams params;
  params.cases = 5;  // seeds per (g, k, d) cell
  params.seed = 3;
  params.max_degree = 4;
  SuiteReport r = run_thm1_suite(params);
  double elapsed = seconds_since(start);
  bool ok = r.ok() && elapsed < 60.0;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "%zu/%zu certified dimensions on the full g<=3, k<=g, d<=4 grid "
                "in %.2fs (budget 60s)",
                r.passed, r.total, elapsed);
  report("thm1", ok, detail);
}

void check_remark1() {
  std::size_t passed = 0, total = 0;
  for (std::size_t g = 1; g <= 3; ++g) {
    for (std::size_t k = 0; k <= g; ++k) {
      for (std::uint64_t s = 0; s < 5; ++s) {
        AppellHumbertBundle b = random_bundle(g, k, 4000 + 100 * g + 10 * k + s);
        bool flat = b.form.matrix.is_zero();
        total += 2;
        if (has_holomorphic_connection(b) == flat) {
          ++passed;
        }
        if (chern_class_tensor(b, TorusSide::primal).matrix.is_zero() == flat) {
          ++passed;
        }
      }
    }
  }
  report("remark1", passed == total,
         std::to_string(passed) + "/" + std::to_string(total) +
             " equivalences: connection exists iff the class vanishes iff H = 0");
}

void check_stabilizer_oracle() {
  struct Config {
    std::size_t g;
    ExactMatrix h;
  };
  auto m1 = [](const char* text) {
    ExactMatrix m(1, 1);
    m.at(0, 0) = GaussianRational::parse(text);
    return m;
  };
  auto m2 = [](const char* a, const char* b, const char* c, const char* d) {
    ExactMatrix m(2, 2);
    m.at(0, 0) = GaussianRational::parse(a);
    m.at(0, 1) = GaussianRational::parse(b);
    m.at(1, 0) = GaussianRational::parse(c);
    m.at(1, 1) = GaussianRational::parse(d);
    return m;
  };

  std::vector<Config> configs;
  for (const char* v : {"0", "1", "2", "3", "4"}) {
    configs.push_back({1, m1(v)});
  }
  for (const char* v : {"1", "2"}) {  // on ℤ+2iℤ these double to (2,2) and (4,4)
    configs.push_back({0, m1(v)});    // g marked 0 → use the stretched lattice below
  }
  configs.push_back({2, m2("1", "0", "0", "1")});
  configs.push_back({2, m2("2", "0", "0", "2")});
  configs.push_back({2, m2("1", "0", "0", "2")});
  configs.push_back({2, m2("1", "0", "0", "3")});
  configs.push_back({2, m2("1", "0", "0", "4")});
  configs.push_back({2, m2("2", "0", "0", "4")});
  configs.push_back({2, m2("3", "0", "0", "3")});
  configs.push_back({2, m2("4", "0", "0", "4")});
  configs.push_back({2, m2("2", "1", "1", "2")});
  configs.push_back({2, m2("2", "i", "-i", "2")});
  configs.push_back({2, m2("1", "1", "1", "1")});
  configs.push_back({2, m2("2", "0", "0", "0")});
  configs.push_back({2, m2("3", "0", "0", "0")});
  configs.push_back({2, m2("0", "0", "0", "0")});
  configs.push_back({2, m2("1", "i", "-i", "1")});

  std::size_t passed = 0, total = 0;
  std::string note;
  for (const Config& cfg : configs) {
    PeriodLattice lat = cfg.g == 0
                            ? PeriodLattice(1, {{GaussianRational(1)},
                                                {GaussianRational(Rational(0), Rational(2))}})
                            : testing::std_lattice(cfg.g);
    std::size_t g = lat.g();
    AppellHumbertBundle b =
        make_bundle(lat, cfg.h, std::vector<Rational>(2 * g, Rational(0)));
    StabilizerInfo info = stabilizer(b);

    Integer max_div = 0;
    for (const Integer& d : info.divisors) {
      if (d > max_div) {
        max_div = d;
      }
    }
    Integer n = max_div == 0 ? Integer(2) : Integer(2) * max_div;

    // direction.dim() is the real dimension of the identity component, so it
    // is already the number of free torsion coordinates.
    Integer expected = info.component_order;
    for (std::size_t i = 0; i < info.direction.dim(); ++i) {
      expected *= n;
    }

    Integer counted = 0;
    for (const TorsionPoint& x : torsion_points(lat, n)) {
      if (isomorphic(translate(b, x), b)) {
        ++counted;
      }
    }
    ++total;
    if (counted == expected) {
      ++passed;
    } else if (note.empty()) {
      std::ostringstream os;
      os << " first mismatch: counted " << counted << ", divisors predict " << expected;
      note = os.str();
    }
  }
  report("stabilizer oracle", passed == total,
         std::to_string(passed) + "/" + std::to_string(total) +
             " brute-force torsion counts match the divisor prediction" + note);
}

void check_monodromy() {
  SuiteParams params;
  params.cases = 100;
  params.seed = 4;
  params.max_degree = 4;
  SuiteReport r = run_monodromy_suite(params);
  std::string detail = std::to_string(r.passed) + "/" + std::to_string(r.total) +
                       " round trips at 1e-9";
  for (const std::string& n : r.notes) {
    detail += "; " + n;
  }
  report("monodromy", r.ok(), detail);
}

void check_obstruction() {
  std::size_t passed = 0, total = 0;
  for (std::size_t g = 1; g <= 4; ++g) {
    for (std::size_t k = 0; k <= g; ++k) {
      for (std::uint64_t s = 0; s < 5; ++s) {
        AppellHumbertBundle b = random_bundle(g, k, 8000 + 100 * g + 10 * k + s);
        ++total;
        ExactMatrix ob = partial_connection_obstruction(b);
        if (ob.cols() == k && ob.is_zero()) {
          ++passed;
        }
      }
    }
  }
  report("partial connections", passed == total,
         std::to_string(passed) + "/" + std::to_string(total) +
             " obstructions along the radical vanish identically");
}

}  // namespace

int main() {
  check_lemma2();
  check_phi_routes();
  check_prop1();
  check_thm1();
  check_remark1();
  check_stabilizer_oracle();
  check_monodromy();
  check_obstruction();
  if (failures == 0) {
    std::printf("acceptance: all criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures);
  return 1;
}
