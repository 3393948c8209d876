#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "torkit/bundle.hpp"
#include "torkit/lattice.hpp"
#include "torkit/monodromy.hpp"

namespace torkit {

// Failure while reading a workspace document; the message carries the
// line/column of a syntax error or the field path of a semantic one.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SuiteParams {
  std::size_t cases = 100;
  std::uint64_t seed = 1;
  std::size_t max_degree = 4;
  double tolerance = kMonodromyTolerance;
};

// One JSON file describing a torus and optionally a bundle, a connection, a
// character, and suite parameters. "version" is required and currently 1.
struct WorkspaceDocument {
  int version = 1;
  std::optional<PeriodLattice> lattice;
  std::optional<AppellHumbertBundle> bundle;
  std::optional<LambdaConnection> connection;
  std::optional<std::vector<Complex>> character;
  SuiteParams suite;
};

WorkspaceDocument parse_workspace(const std::string& text);

// Accepts the exact grammar ("1/2+3/4*i") as well as decimal literals
// ("0.5-2e-3*i", "i", "-1.25").
Complex parse_complex(const std::string& text);
std::string complex_str(const Complex& value);

// Seeded generator with platform-independent output (no distribution objects,
// so identical seeds give identical streams everywhere).
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }
  long below(long n);              // uniform in [0, n)
  long range(long lo, long hi);    // uniform in [lo, hi]
  double uniform(double lo, double hi);

 private:
  std::mt19937_64 engine_;
};

PeriodLattice random_lattice(std::size_t g, RandomSource& rng);

// Valid random bundle with radical dimension exactly k: a positive-definite
// rank-(g−k) block conjugated by a unimodular Gaussian-integer change of
// basis, then scaled so E is integral on the lattice. Verified before return.
AppellHumbertBundle random_bundle_on(PeriodLattice lattice, std::size_t k, RandomSource& rng);
AppellHumbertBundle random_bundle(std::size_t g, std::size_t k, std::uint64_t seed);

struct SuiteReport {
  std::string name;
  std::size_t total = 0;
  std::size_t passed = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool ok() const { return passed == total; }
};

// Property suites behind `verify`. All are deterministic in the seed.
SuiteReport run_lemma2_suite(const SuiteParams& params);
SuiteReport run_prop1_suite(const SuiteParams& params);
SuiteReport run_thm1_suite(const SuiteParams& params);  // `cases` = seeds per grid cell
SuiteReport run_remark1_suite(const SuiteParams& params);
SuiteReport run_monodromy_suite(const SuiteParams& params);

// which ∈ {lemma2, prop1, thm1, remark1, monodromy, all}.
std::vector<SuiteReport> run_suites(const std::string& which, const SuiteParams& params);

std::string render_text(const std::vector<SuiteReport>& reports);
std::string render_json(const std::vector<SuiteReport>& reports);

}  // namespace torkit
