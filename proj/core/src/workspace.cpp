#include "torkit/workspace.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "torkit/ext.hpp"
#include "torkit/symring.hpp"

namespace torkit {

namespace {

using nlohmann::json;

[[noreturn]] void fail_at(const std::string& path, const std::string& what) {
  throw DocumentError(path + ": " + what);
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::string string_field(const json& node, const std::string& path) {
  if (!node.is_string()) {
    fail_at(path, "expected a string");
  }
  return node.get<std::string>();
}

GaussianRational gaussian_field(const json& node, const std::string& path) {
  try {
    return GaussianRational::parse(string_field(node, path));
  } catch (const std::invalid_argument& e) {
    fail_at(path, e.what());
  }
}

Rational rational_field(const json& node, const std::string& path) {
  try {
    return parse_rational(string_field(node, path));
  } catch (const std::invalid_argument& e) {
    fail_at(path, e.what());
  }
}

Complex complex_field(const json& node, const std::string& path) {
  try {
    return parse_complex(string_field(node, path));
  } catch (const std::invalid_argument& e) {
    fail_at(path, e.what());
  }
}

PeriodLattice lattice_from_json(const json& node) {
  if (!node.is_array() || node.empty()) {
    fail_at("lattice", "expected a non-empty array of generator rows");
  }
  std::size_t rows = node.size();
  if (rows % 2 != 0) {
    fail_at("lattice", "generator count must be even (2g rows)");
  }
  std::size_t g = rows / 2;
  std::vector<Vector> gens;
  gens.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = node[r];
    std::string rpath = "lattice[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != g) {
      fail_at(rpath, "expected " + std::to_string(g) + " coordinates");
    }
    Vector v(g);
    for (std::size_t c = 0; c < g; ++c) {
      v[c] = gaussian_field(row[c], rpath + "[" + std::to_string(c) + "]");
    }
    gens.push_back(std::move(v));
  }
  try {
    return PeriodLattice(g, std::move(gens));
  } catch (const std::invalid_argument& e) {
    fail_at("lattice", e.what());
  }
}

AppellHumbertBundle bundle_from_json(const json& node, const PeriodLattice& lattice) {
  if (!node.is_object()) {
    fail_at("bundle", "expected an object with \"H\" and \"chi\"");
  }
  if (!node.contains("H") || !node.contains("chi")) {
    fail_at("bundle", "needs both \"H\" and \"chi\"");
  }
  std::size_t g = lattice.g();
  const json& hj = node["H"];
  if (!hj.is_array() || hj.size() != g) {
    fail_at("bundle.H", "expected " + std::to_string(g) + " rows");
  }
  ExactMatrix h(g, g);
  for (std::size_t r = 0; r < g; ++r) {
    std::string rpath = "bundle.H[" + std::to_string(r) + "]";
    if (!hj[r].is_array() || hj[r].size() != g) {
      fail_at(rpath, "expected " + std::to_string(g) + " entries");
    }
    for (std::size_t c = 0; c < g; ++c) {
      h.at(r, c) = gaussian_field(hj[r][c], rpath + "[" + std::to_string(c) + "]");
    }
  }
  const json& cj = node["chi"];
  if (!cj.is_array() || cj.size() != 2 * g) {
    fail_at("bundle.chi", "expected 2g = " + std::to_string(2 * g) + " exponents");
  }
  std::vector<Rational> chi(2 * g);
  for (std::size_t j = 0; j < 2 * g; ++j) {
    chi[j] = rational_field(cj[j], "bundle.chi[" + std::to_string(j) + "]");
  }
  try {
    return make_bundle(lattice, std::move(h), std::move(chi));
  } catch (const std::invalid_argument& e) {
    fail_at("bundle", e.what());
  }
}

std::vector<Complex> complex_list(const json& node, const std::string& path,
                                  std::size_t expected) {
  if (!node.is_array() || node.size() != expected) {
    fail_at(path, "expected " + std::to_string(expected) + " complex values");
  }
  std::vector<Complex> out(expected);
  for (std::size_t j = 0; j < expected; ++j) {
    out[j] = complex_field(node[j], path + "[" + std::to_string(j) + "]");
  }
  return out;
}

LambdaConnection connection_from_json(const json& node, const PeriodLattice& lattice) {
  if (!node.is_object()) {
    fail_at("connection", "expected an object with \"x\", \"c\", \"omega\"");
  }
  for (const char* key : {"x", "c", "omega"}) {
    if (!node.contains(key)) {
      fail_at("connection", std::string("missing \"") + key + "\"");
    }
  }
  LambdaConnection conn;
  conn.x = complex_list(node["x"], "connection.x", lattice.g());
  conn.c = complex_field(node["c"], "connection.c");
  conn.omega = complex_list(node["omega"], "connection.omega", lattice.g());
  return conn;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed ^ (0x9E3779B97F4A7C15ULL * (index + 1));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct GridCell {
  std::size_t g;
  std::size_t k;
};

std::vector<GridCell> dimension_grid(std::size_t max_g) {
  std::vector<GridCell> cells;
  for (std::size_t g = 1; g <= max_g; ++g) {
    for (std::size_t k = 0; k <= g; ++k) {
      cells.push_back({g, k});
    }
  }
  return cells;
}

void record(SuiteReport& report, bool ok, const std::string& failure) {
  ++report.total;
  if (ok) {
    ++report.passed;
  } else {
    report.failures.push_back(failure);
  }
}

}  // namespace

Complex parse_complex(const std::string& text) {
  try {
    GaussianRational q = GaussianRational::parse(text);
    return {mpq_get_d(q.re().get_mpq_t()), mpq_get_d(q.im().get_mpq_t())};
  } catch (const std::invalid_argument&) {
    // fall through to the decimal grammar
  }
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      s.push_back(c);
    }
  }
  if (s.empty()) {
    throw std::invalid_argument("empty complex literal");
  }
  // Split into at most two signed terms; keep exponent signs with their term.
  std::vector<std::string> terms;
  std::size_t start = 0;
  for (std::size_t pos = 1; pos <= s.size(); ++pos) {
    if (pos == s.size() ||
        ((s[pos] == '+' || s[pos] == '-') && s[pos - 1] != 'e' && s[pos - 1] != 'E')) {
      terms.push_back(s.substr(start, pos - start));
      start = pos;
    }
  }
  auto parse_term = [&](const std::string& term, double& re, double& im) {
    bool imaginary = !term.empty() && term.back() == 'i';
    std::string body = imaginary ? term.substr(0, term.size() - 1) : term;
    if (imaginary && !body.empty() && body.back() == '*') {
      body.pop_back();
    }
    double value = 0.0;
    if (body.empty() || body == "+" || body == "-") {
      if (!imaginary) {
        throw std::invalid_argument("malformed complex literal: '" + text + "'");
      }
      value = body == "-" ? -1.0 : 1.0;
    } else {
      std::size_t used = 0;
      try {
        value = std::stod(body, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed complex literal: '" + text + "'");
      }
      if (used != body.size()) {
        throw std::invalid_argument("malformed complex literal: '" + text + "'");
      }
    }
    (imaginary ? im : re) += value;
  };
  double re = 0.0, im = 0.0;
  if (terms.empty() || terms.size() > 2) {
    throw std::invalid_argument("malformed complex literal: '" + text + "'");
  }
  if (terms.size() == 2) {
    // Exactly "real ± imaginary"; two real or two imaginary terms are typos.
    bool first_im = terms[0].back() == 'i';
    bool second_im = terms[1].back() == 'i';
    if (first_im || !second_im) {
      throw std::invalid_argument("malformed complex literal: '" + text + "'");
    }
  }
  for (const std::string& term : terms) {
    parse_term(term, re, im);
  }
  return {re, im};
}

std::string complex_str(const Complex& value) {
  char buf[64];
  auto fmt = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  if (value.imag() == 0.0) {
    return fmt(value.real());
  }
  std::string out;
  if (value.real() != 0.0) {
    out = fmt(value.real());
    if (value.imag() > 0.0) {
      out += '+';
    }
  }
  return out + fmt(value.imag()) + "*i";
}

WorkspaceDocument parse_workspace(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw DocumentError("syntax error at line " + std::to_string(line) + ", column " +
                        std::to_string(col) + ": " + e.what());
  }
  if (!doc.is_object()) {
    fail_at("document", "top level must be an object");
  }
  WorkspaceDocument ws;
  if (!doc.contains("version") || !doc["version"].is_number_integer()) {
    fail_at("version", "required integer field");
  }
  ws.version = doc["version"].get<int>();
  if (ws.version != 1) {
    fail_at("version", "unsupported schema version " + std::to_string(ws.version));
  }
  if (doc.contains("lattice")) {
    ws.lattice = lattice_from_json(doc["lattice"]);
  }
  if (doc.contains("bundle")) {
    if (!ws.lattice) {
      fail_at("bundle", "requires a \"lattice\" field");
    }
    ws.bundle = bundle_from_json(doc["bundle"], *ws.lattice);
  }
  if (doc.contains("connection")) {
    if (!ws.lattice) {
      fail_at("connection", "requires a \"lattice\" field");
    }
    ws.connection = connection_from_json(doc["connection"], *ws.lattice);
  }
  if (doc.contains("character")) {
    if (!ws.lattice) {
      fail_at("character", "requires a \"lattice\" field");
    }
    ws.character = complex_list(doc["character"], "character", 2 * ws.lattice->g());
  }
  if (doc.contains("suite")) {
    const json& sj = doc["suite"];
    if (!sj.is_object()) {
      fail_at("suite", "expected an object");
    }
    auto read_count = [&](const char* key, auto& target) {
      if (sj.contains(key)) {
        if (!sj[key].is_number_unsigned() && !sj[key].is_number_integer()) {
          fail_at(std::string("suite.") + key, "expected a non-negative integer");
        }
        auto v = sj[key].get<long long>();
        if (v < 0) {
          fail_at(std::string("suite.") + key, "expected a non-negative integer");
        }
        target = static_cast<std::decay_t<decltype(target)>>(v);
      }
    };
    read_count("cases", ws.suite.cases);
    read_count("seed", ws.suite.seed);
    read_count("max_degree", ws.suite.max_degree);
  }
  return ws;
}

long RandomSource::below(long n) {
  return n <= 1 ? 0 : static_cast<long>(bits() % static_cast<std::uint64_t>(n));
}

long RandomSource::range(long lo, long hi) { return lo + below(hi - lo + 1); }

double RandomSource::uniform(double lo, double hi) {
  double unit = static_cast<double>(bits() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

PeriodLattice random_lattice(std::size_t g, RandomSource& rng) {
  std::vector<Vector> gens;
  gens.reserve(2 * g);
  for (std::size_t j = 0; j < g; ++j) {
    Vector e(g);
    e[j] = GaussianRational(1);
    gens.push_back(std::move(e));
  }
  // Imaginary parts unitriangular, so the generators are always ℝ-independent.
  for (std::size_t j = 0; j < g; ++j) {
    Vector v(g);
    for (std::size_t k = 0; k < g; ++k) {
      Rational re(rng.range(-2, 2), rng.range(1, 2));
      re.canonicalize();
      Rational im(0);
      if (k == j) {
        im = 1;
      } else if (k > j) {
        im = Rational(rng.range(-1, 1), rng.range(1, 2));
        im.canonicalize();
      }
      v[k] = GaussianRational(re, im);
    }
    gens.push_back(std::move(v));
  }
  return PeriodLattice(g, std::move(gens));
}

AppellHumbertBundle random_bundle_on(PeriodLattice lattice, std::size_t k, RandomSource& rng) {
  std::size_t g = lattice.g();
  if (k > g) {
    throw std::invalid_argument("radical dimension cannot exceed g");
  }
  std::size_t r = g - k;

  // Positive-definite block: T*T + I for random Gaussian-integer T.
  ExactMatrix t(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      t.at(i, j) = GaussianRational(Rational(rng.range(-2, 2)), Rational(rng.range(-2, 2)));
    }
  }
  ExactMatrix pos = t.conjugate_transpose() * t + ExactMatrix::identity(r);

  ExactMatrix h0(g, g);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      h0.at(i, j) = pos.at(i, j);
    }
  }

  // Unimodular Gaussian-integer change of basis from random elementary moves.
  ExactMatrix s = ExactMatrix::identity(g);
  if (g > 1) {
    for (std::size_t step = 0; step < 3 * g; ++step) {
      std::size_t i = static_cast<std::size_t>(rng.below(static_cast<long>(g)));
      std::size_t j = static_cast<std::size_t>(rng.below(static_cast<long>(g)));
      switch (rng.below(3)) {
        case 0: {
          if (i == j) {
            break;
          }
          GaussianRational c(Rational(rng.range(-1, 1)), Rational(rng.range(-1, 1)));
          for (std::size_t col = 0; col < g; ++col) {
            s.at(i, col) += c * s.at(j, col);
          }
          break;
        }
        case 1:
          if (i != j) {
            for (std::size_t col = 0; col < g; ++col) {
              std::swap(s.at(i, col), s.at(j, col));
            }
          }
          break;
        default: {
          static const GaussianRational units[4] = {
              GaussianRational(1), GaussianRational(-1), GaussianRational::i(),
              -GaussianRational::i()};
          const GaussianRational& u = units[rng.below(4)];
          for (std::size_t col = 0; col < g; ++col) {
            s.at(i, col) *= u;
          }
          break;
        }
      }
    }
  }
  ExactMatrix h = s.conjugate_transpose() * h0 * s;

  // Clear the denominators of E on the generators; scaling by a positive
  // integer changes neither hermitianity nor the radical.
  HermitianForm form{h};
  Integer denom = 1;
  for (std::size_t a = 0; a < 2 * g; ++a) {
    for (std::size_t b = a + 1; b < 2 * g; ++b) {
      Rational e = alternating_value(form, lattice.generator(a), lattice.generator(b));
      denom = lcm(denom, Integer(e.get_den()));
    }
  }
  if (denom != 1) {
    h *= GaussianRational(Rational(denom));
  }

  std::vector<Rational> chi(2 * g);
  for (std::size_t j = 0; j < 2 * g; ++j) {
    long q = rng.range(1, 4);
    chi[j] = Rational(rng.range(0, 2 * q - 1), q);
    chi[j].canonicalize();
  }

  AppellHumbertBundle bundle = make_bundle(std::move(lattice), std::move(h), std::move(chi));
  if (!validate(bundle).ok || radical(bundle.form).dim() != k) {
    throw std::logic_error("random bundle construction failed its own checks");
  }
  return bundle;
}

AppellHumbertBundle random_bundle(std::size_t g, std::size_t k, std::uint64_t seed) {
  if (g < 1 || g > 4 || k > g) {
    throw std::invalid_argument("need 0 ≤ k ≤ g ≤ 4");
  }
  RandomSource rng(seed);
  PeriodLattice lat = random_lattice(g, rng);
  return random_bundle_on(std::move(lat), k, rng);
}

SuiteReport run_lemma2_suite(const SuiteParams& params) {
  SuiteReport report;
  report.name = "lemma2";
  std::vector<GridCell> cells = dimension_grid(4);
  for (std::size_t i = 0; i < params.cases; ++i) {
    GridCell cell = cells[i % cells.size()];
    RandomSource rng(mix(params.seed, i));
    PeriodLattice lat = random_lattice(cell.g, rng);
    AppellHumbertBundle b = random_bundle_on(std::move(lat), cell.k, rng);
    bool ok = span_equal(radical(b.form).basis, real_radical(b.form).basis);
    record(report, ok,
           "case " + std::to_string(i) + " (g=" + std::to_string(cell.g) +
               ", k=" + std::to_string(cell.k) + "): radical and real radical spans differ");
  }
  return report;
}

SuiteReport run_prop1_suite(const SuiteParams& params) {
  SuiteReport report;
  report.name = "prop1";
  std::vector<GridCell> cells = dimension_grid(3);
  for (std::size_t i = 0; i < params.cases; ++i) {
    GridCell cell = cells[i % cells.size()];
    RandomSource rng(mix(params.seed, i));
    PeriodLattice lat = random_lattice(cell.g, rng);
    AppellHumbertBundle b = random_bundle_on(std::move(lat), cell.k, rng);
    Prop1Result r = prop1_check(b);
    record(report, r.holds,
           "case " + std::to_string(i) + " (g=" + std::to_string(cell.g) +
               ", k=" + std::to_string(cell.k) +
               "): pushed moduli class is not minus the chern tensor");
  }
  return report;
}

SuiteReport run_thm1_suite(const SuiteParams& params) {
  SuiteReport report;
  report.name = "thm1";
  for (std::size_t g = 1; g <= 3; ++g) {
    for (std::size_t k = 0; k <= g; ++k) {
      for (std::size_t d = 1; d <= params.max_degree; ++d) {
        for (std::size_t s = 0; s < params.cases; ++s) {
          std::uint64_t case_seed = mix(params.seed, ((g * 8 + k) * 8 + d) * 100000 + s);
          RandomSource rng(case_seed);
          PeriodLattice lat = random_lattice(g, rng);
          AppellHumbertBundle b = random_bundle_on(std::move(lat), k, rng);
          std::string label = "g=" + std::to_string(g) + ", k=" + std::to_string(k) +
                              ", d=" + std::to_string(d) + ", seed#" + std::to_string(s);
          bool ok = true;
          std::string why;
          try {
            RingDimensionCertificate cert = function_ring_dimension(b, d);
            for (std::size_t i = 1; i <= d && ok; ++i) {
              if (Integer(static_cast<long>(cert.kernel_dims[i - 1])) !=
                  binomial(k + i - 1, i)) {
                ok = false;
                why = "kernel dimension at degree " + std::to_string(i) + " is " +
                      std::to_string(cert.kernel_dims[i - 1]);
              }
            }
            if (ok && Integer(static_cast<long>(cert.dimension)) != binomial(k + d, d)) {
              ok = false;
              why = "certified dimension " + std::to_string(cert.dimension) +
                    " differs from the closed form";
            }
            if (ok && k == 0 && cert.dimension != 1) {
              ok = false;
              why = "ample-type form admitted a non-constant function";
            }
          } catch (const std::logic_error& e) {
            ok = false;
            why = e.what();
          }
          record(report, ok, "case " + label + ": " + why);
        }
      }
    }
  }
  return report;
}

SuiteReport run_remark1_suite(const SuiteParams& params) {
  SuiteReport report;
  report.name = "remark1";
  std::vector<GridCell> cells = dimension_grid(3);
  for (std::size_t i = 0; i < params.cases; ++i) {
    GridCell cell = cells[i % cells.size()];
    RandomSource rng(mix(params.seed, i));
    PeriodLattice lat = random_lattice(cell.g, rng);
    AppellHumbertBundle b = random_bundle_on(std::move(lat), cell.k, rng);
    std::string label = "case " + std::to_string(i) + " (g=" + std::to_string(cell.g) +
                        ", k=" + std::to_string(cell.k) + ")";
    bool flat = b.form.matrix.is_zero();
    record(report, has_holomorphic_connection(b) == flat,
           label + ": connection existence disagrees with H = 0");
    record(report, chern_class_tensor(b, TorusSide::primal).matrix.is_zero() == flat,
           label + ": class vanishing disagrees with H = 0");
    record(report, partial_connection_obstruction(b).is_zero(),
           label + ": partial-connection obstruction is nonzero");
  }
  return report;
}

SuiteReport run_monodromy_suite(const SuiteParams& params) {
  SuiteReport report;
  report.name = "monodromy";
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  char buf[64];
  auto fmt_dist = [&buf](double v) {
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return std::string(buf);
  };
  for (std::size_t i = 0; i < params.cases; ++i) {
    RandomSource rng(mix(params.seed, i));
    std::size_t g = 1 + i % 3;
    NumericLattice nl = numeric_lattice(random_lattice(g, rng));
    Character t;
    for (std::size_t j = 0; j < 2 * g; ++j) {
      double modulus = std::exp(rng.uniform(-2.0, 2.0));
      t.values.push_back(std::polar(modulus, rng.uniform(0.0, kTwoPi)));
    }
    double dist = character_distance(monodromy(nl, character_to_connection(nl, t)), t);
    record(report, dist < params.tolerance,
           "character round trip case " + std::to_string(i) + ": distance " + fmt_dist(dist));
  }
  for (std::size_t i = 0; i < params.cases; ++i) {
    RandomSource rng(mix(params.seed, params.cases + i));
    std::size_t g = 1 + i % 3;
    NumericLattice nl = numeric_lattice(random_lattice(g, rng));
    LambdaConnection conn;
    conn.c = Complex(1.0, 0.0);
    for (std::size_t j = 0; j < g; ++j) {
      conn.x.emplace_back(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
      conn.omega.emplace_back(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    }
    LambdaConnection back = character_to_connection(nl, monodromy(nl, conn));
    double worst = 0.0;
    for (std::size_t j = 0; j < g; ++j) {
      worst = std::max(worst, std::abs(back.omega[j] - conn.omega[j]));
    }
    bool ok = worst < params.tolerance && same_dual_point(nl, back.x, conn.x, params.tolerance);
    record(report, ok,
           "connection round trip case " + std::to_string(i) + ": form distance " +
               fmt_dist(worst));
  }

  // The contrast: the same exact machinery certifies that an ample twist has a
  // one-dimensional function space in every degree, while the character torus
  // above separates all 2g real directions.
  RandomSource rng(mix(params.seed, 0xA11CEULL));
  PeriodLattice lat = random_lattice(2, rng);
  AppellHumbertBundle ample = random_bundle_on(std::move(lat), 0, rng);
  for (std::size_t d = 1; d <= params.max_degree; ++d) {
    bool ok = true;
    std::size_t dim = 0;
    try {
      dim = function_ring_dimension(ample, d).dimension;
      ok = dim == 1;
    } catch (const std::logic_error&) {
      ok = false;
    }
    record(report, ok,
           "ample contrast at degree " + std::to_string(d) + ": dimension " +
               std::to_string(dim));
    report.notes.push_back("ample twist, degree " + std::to_string(d) + ": dimension " +
                           std::to_string(dim) + " (certified)");
  }
  return report;
}

std::vector<SuiteReport> run_suites(const std::string& which, const SuiteParams& params) {
  if (which == "lemma2") {
    return {run_lemma2_suite(params)};
  }
  if (which == "prop1") {
    return {run_prop1_suite(params)};
  }
  if (which == "thm1") {
    return {run_thm1_suite(params)};
  }
  if (which == "remark1") {
    return {run_remark1_suite(params)};
  }
  if (which == "monodromy") {
    return {run_monodromy_suite(params)};
  }
  if (which == "all") {
    return {run_lemma2_suite(params), run_prop1_suite(params), run_thm1_suite(params),
            run_remark1_suite(params), run_monodromy_suite(params)};
  }
  throw std::invalid_argument("unknown suite: " + which);
}

std::string render_text(const std::vector<SuiteReport>& reports) {
  std::ostringstream os;
  bool all_ok = true;
  for (const SuiteReport& r : reports) {
    os << r.name << ": " << r.passed << "/" << r.total << (r.ok() ? " pass" : " FAIL")
       << "\n";
    for (const std::string& f : r.failures) {
      os << "  failure: " << f << "\n";
    }
    for (const std::string& n : r.notes) {
      os << "  note: " << n << "\n";
    }
    all_ok = all_ok && r.ok();
  }
  if (reports.size() > 1) {
    os << "overall: " << (all_ok ? "pass" : "FAIL") << "\n";
  }
  return os.str();
}

std::string render_json(const std::vector<SuiteReport>& reports) {
  json out = json::array();
  for (const SuiteReport& r : reports) {
    json entry;
    entry["suite"] = r.name;
    entry["cases"] = r.total;
    entry["passed"] = r.passed;
    entry["failures"] = r.failures;
    entry["notes"] = r.notes;
    entry["ok"] = r.ok();
    out.push_back(entry);
  }
  return out.dump(2) + "\n";
}

}  // namespace torkit
