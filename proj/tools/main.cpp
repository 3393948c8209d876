// Command-line front end: reads workspace documents, runs the library's
// checks, and emits aligned-text or JSON reports.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 bad input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "torkit/bundle.hpp"
#include "torkit/ext.hpp"
#include "torkit/lattice.hpp"
#include "torkit/monodromy.hpp"
#include "torkit/symring.hpp"
#include "torkit/workspace.hpp"

namespace {

using nlohmann::json;
using namespace torkit;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

WorkspaceDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DocumentError("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_workspace(buf.str());
}

const PeriodLattice& need_lattice(const WorkspaceDocument& doc) {
  if (!doc.lattice) {
    throw DocumentError("document needs a \"lattice\" field for this command");
  }
  return *doc.lattice;
}

const AppellHumbertBundle& need_bundle(const WorkspaceDocument& doc) {
  if (!doc.bundle) {
    throw DocumentError("document needs a \"bundle\" field for this command");
  }
  return *doc.bundle;
}

// Commands downstream of the existence condition refuse invalid bundles.
const AppellHumbertBundle& need_valid_bundle(const WorkspaceDocument& doc) {
  const AppellHumbertBundle& b = need_bundle(doc);
  ValidationResult v = validate(b);
  if (!v.ok) {
    throw DocumentError("bundle is not valid: " + v.message);
  }
  return b;
}

json matrix_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(m.at(i, j).str());
    }
    rows.push_back(row);
  }
  return rows;
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& e : v) {
    out.push_back(e.str());
  }
  return out;
}

json complex_list_json(const std::vector<Complex>& v) {
  json out = json::array();
  for (const auto& e : v) {
    out.push_back(complex_str(e));
  }
  return out;
}

std::string vector_str(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) {
      out += ", ";
    }
    out += v[i].str();
  }
  return out + ")";
}

void emit(bool as_json, const json& machine, const std::string& text) {
  if (as_json) {
    std::cout << machine.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int cmd_validate(const std::string& path, bool as_json) {
  WorkspaceDocument doc = load_document(path);
  ValidationResult v = validate(need_bundle(doc));
  json out{{"command", "validate"}, {"ok", v.ok}, {"message", v.message}};
  emit(as_json, out, (v.ok ? "ok\n" : "rejected: " + v.message + "\n"));
  return v.ok ? kExitPass : kExitCheckFailure;
}

int cmd_dual(const std::string& path, bool as_json) {
  WorkspaceDocument doc = load_document(path);
  PeriodLattice dual_lat = dual_lattice(need_lattice(doc));
  std::ostringstream os;
  json gens = json::array();
  os << "dual lattice generators (antilinear coordinates):\n";
  for (const Vector& v : dual_lat.generators()) {
    os << "  " << vector_str(v) << "\n";
    gens.push_back(vector_json(v));
  }
  emit(as_json, json{{"command", "dual"}, {"generators", gens}}, os.str());
  return kExitPass;
}

int cmd_phi(const std::string& path, bool as_json) {
  WorkspaceDocument doc = load_document(path);
  const AppellHumbertBundle& b = need_valid_bundle(doc);
  ExactMatrix hermitian = phi_from_hermitian(b);
  ExactMatrix contraction = phi_from_chern(b);
  bool agree = hermitian == contraction;
  json translation_routes = json::object();
  std::ostringstream os;
  os << "hermitian route:   " << hermitian.str() << "\n";
  for (long n = 2; n <= 5; ++n) {
    ExactMatrix m = phi_from_translations(b, Integer(n));
    agree = agree && m == hermitian;
    os << "translation n=" << n << ":  " << m.str() << "\n";
    translation_routes["n=" + std::to_string(n)] = matrix_json(m);
  }
  os << "contraction route: " << contraction.str() << "\n";
  os << "verdict: " << (agree ? "agree" : "disagree") << "\n";
  json out{{"command", "phi"},
           {"hermitian", matrix_json(hermitian)},
           {"translation", translation_routes},
           {"contraction", matrix_json(contraction)},
           {"verdict", agree ? "agree" : "disagree"}};
  emit(as_json, out, os.str());
  return agree ? kExitPass : kExitCheckFailure;
}

int cmd_radical(const std::string& path, bool as_json) {
  WorkspaceDocument doc = load_document(path);
  const AppellHumbertBundle& b = need_valid_bundle(doc);
  Subspace rad = radical(b.form);
  Subspace real_rad = real_radical(b.form);
  bool agree = span_equal(rad.basis, real_rad.basis);
  std::ostringstream os;
  os << "radical dimension: " << rad.dim() << "\n";
  json complex_basis = json::array(), real_basis = json::array();
  for (const Vector& v : rad.basis) {
    os << "  complex kernel basis: " << vector_str(v) << "\n";
    complex_basis.push_back(vector_json(v));
  }
  for (const Vector& v : real_rad.basis) {
    os << "  real kernel basis:    " << vector_str(v) << "\n";
    real_basis.push_back(vector_json(v));
  }
  os << "spans agree: " << (agree ? "yes" : "NO") << "\n";
  json out{{"command", "radical"},
           {"dimension", rad.dim()},
           {"complex_kernel", complex_basis},
           {"real_kernel", real_basis},
           {"spans_agree", agree}};
  emit(as_json, out, os.str());
  return agree ? kExitPass : kExitCheckFailure;
}

int cmd_stabilizer(const std::string& path, bool as_json) {
  WorkspaceDocument doc = load_document(path);
  const AppellHumbertBundle& b = need_valid_bundle(doc);
  StabilizerInfo info = stabilizer(b);
  std::ostringstream os;
  os << "identity component dimension: " << info.direction.dim() << "\n";
  json dir = json::array();
  for (const Vector& v : info.direction.basis) {
    os << "  direction basis: " << vector_str(v) << "\n";
    dir.push_back(vector_json(v));
  }
  json divisors = json::array();
  os << "elementary divisors:";
  for (const Integer& d : info.divisors) {
    os << " " << integer_str(d);
    divisors.push_back(integer_str(d));
  }
  os << "\ncomponent group order: " << integer_str(info.component_order) << "\n";
  json out{{"command", "stabilizer"},
           {"direction_dimension", info.direction.dim()},
           {"direction", dir},
           {"divisors", divisors},
           {"component_order", integer_str(info.component_order)}};
  emit(as_json, out, os.str());
  return kExitPass;
}

int cmd_ringdim(const std::string& path, std::size_t max_degree, bool as_json) {
  WorkspaceDocument doc = load_document(path);
  const AppellHumbertBundle& b = need_valid_bundle(doc);
  std::size_t k = radical(b.form).dim();
  std::ostringstream os;
  os << "radical dimension: " << k << "\n";
  os << "d   kernel   upper   lower   dimension\n";
  json rows = json::array();
  bool certified = true;
  std::size_t last_dim = 0;
  std::size_t upper = 1;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    std::size_t kdim = beta_kernel_dim(b.form, d);
    upper += kdim;
    std::size_t lower = sym_lower_dimension(k, d);
    bool row_ok = upper == lower;
    certified = certified && row_ok;
    last_dim = lower;
    char line[128];
    std::snprintf(line, sizeof line, "%-3zu %-8zu %-7zu %-7zu %zu%s\n", d, kdim, upper,
                  lower, lower, row_ok ? "" : "  MISMATCH");
    os << line;
    rows.push_back(json{{"degree", d},
                        {"kernel_dim", kdim},
                        {"upper_bound", upper},
                        {"lower_bound", lower},
                        {"certified", row_ok}});
  }
  if (certified) {
    os << "d=" << max_degree << ": " << last_dim << " (certified)\n";
  } else {
    os << "certification FAILED: the two tallies above disagree\n";
  }
  json out{{"command", "ringdim"},
           {"radical_dimension", k},
           {"rows", rows},
           {"certified", certified}};
  emit(as_json, out, os.str());
  return certified ? kExitPass : kExitCheckFailure;
}

int cmd_prop1(const std::string& path, bool as_json) {
  WorkspaceDocument doc = load_document(path);
  const AppellHumbertBundle& b = need_valid_bundle(doc);
  Prop1Result r = prop1_check(b);
  std::ostringstream os;
  os << "pushed moduli class: " << r.delta_pushed.matrix.str() << "\n";
  os << "chern tensor:        " << r.chern.matrix.str() << "\n";
  os << "verdict: " << (r.holds ? "equal up to the expected sign" : "MISMATCH") << "\n";
  json out{{"command", "prop1"},
           {"delta_pushed", matrix_json(r.delta_pushed.matrix)},
           {"chern", matrix_json(r.chern.matrix)},
           {"holds", r.holds}};
  emit(as_json, out, os.str());
  return r.holds ? kExitPass : kExitCheckFailure;
}

int cmd_monodromy(const std::string& path, bool as_json) {
  WorkspaceDocument doc = load_document(path);
  const PeriodLattice& lat = need_lattice(doc);
  if (!doc.connection) {
    throw DocumentError("document needs a \"connection\" field for this command");
  }
  NumericLattice nl = numeric_lattice(lat);
  Character t;
  try {
    t = monodromy(nl, *doc.connection);
  } catch (const std::invalid_argument& e) {
    throw DocumentError(std::string("connection: ") + e.what());
  }
  std::ostringstream os;
  os << "monodromy character values on the generators:\n";
  for (std::size_t j = 0; j < t.values.size(); ++j) {
    os << "  t[" << j + 1 << "] = " << complex_str(t.values[j]) << "\n";
  }
  emit(as_json, json{{"command", "monodromy"}, {"values", complex_list_json(t.values)}},
       os.str());
  return kExitPass;
}

int cmd_rh_inverse(const std::string& path, bool as_json) {
  WorkspaceDocument doc = load_document(path);
  const PeriodLattice& lat = need_lattice(doc);
  if (!doc.character) {
    throw DocumentError("document needs a \"character\" field for this command");
  }
  NumericLattice nl = numeric_lattice(lat);
  LambdaConnection conn;
  try {
    conn = character_to_connection(nl, Character{*doc.character});
  } catch (const std::invalid_argument& e) {
    throw DocumentError(std::string("character: ") + e.what());
  }
  std::ostringstream os;
  os << "base point x (antilinear coordinates):\n";
  for (std::size_t j = 0; j < conn.x.size(); ++j) {
    os << "  x[" << j + 1 << "] = " << complex_str(conn.x[j]) << "\n";
  }
  os << "form omega:\n";
  for (std::size_t j = 0; j < conn.omega.size(); ++j) {
    os << "  omega[" << j + 1 << "] = " << complex_str(conn.omega[j]) << "\n";
  }
  json out{{"command", "rh-inverse"},
           {"x", complex_list_json(conn.x)},
           {"omega", complex_list_json(conn.omega)}};
  emit(as_json, out, os.str());
  return kExitPass;
}

int cmd_verify(const std::string& path, const std::string& suite, SuiteParams params,
               bool cases_set, bool seed_set, bool degree_set, bool as_json) {
  if (!path.empty()) {
    WorkspaceDocument doc = load_document(path);
    if (!cases_set) {
      params.cases = doc.suite.cases;
    }
    if (!seed_set) {
      params.seed = doc.suite.seed;
    }
    if (!degree_set) {
      params.max_degree = doc.suite.max_degree;
    }
  }
  if (const char* env = std::getenv("TORKIT_MONODROMY_TOL")) {
    char* end = nullptr;
    double tol = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(tol > 0.0)) {
      throw DocumentError("TORKIT_MONODROMY_TOL must be a positive number");
    }
    params.tolerance = tol;
  }
  std::vector<SuiteReport> reports = run_suites(suite, params);
  if (as_json) {
    std::cout << render_json(reports);
  } else {
    std::cout << render_text(reports);
  }
  for (const SuiteReport& r : reports) {
    if (!r.ok()) {
      return kExitCheckFailure;
    }
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for line bundles and rank-one connections on complex tori"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string doc_path;
  std::size_t max_degree = 4;
  std::string suite = "all";
  SuiteParams params;

  auto* validate_cmd = app.add_subcommand("validate", "check the existence condition");
  validate_cmd->add_option("document", doc_path, "workspace file")->required();
  auto* dual_cmd = app.add_subcommand("dual", "integral dual lattice");
  dual_cmd->add_option("document", doc_path, "workspace file")->required();
  auto* phi_cmd = app.add_subcommand("phi", "the dual-torus map by all three constructions");
  phi_cmd->add_option("document", doc_path, "workspace file")->required();
  auto* radical_cmd = app.add_subcommand("radical", "complex and real kernels of H");
  radical_cmd->add_option("document", doc_path, "workspace file")->required();
  auto* stab_cmd = app.add_subcommand("stabilizer", "translation stabilizer of the bundle");
  stab_cmd->add_option("document", doc_path, "workspace file")->required();
  auto* ringdim_cmd = app.add_subcommand("ringdim", "certified graded function-ring dimensions");
  ringdim_cmd->add_option("document", doc_path, "workspace file")->required();
  ringdim_cmd->add_option("--max-degree", max_degree, "top degree of the table")
      ->default_val(4);
  auto* prop1_cmd = app.add_subcommand("prop1", "extension-class identity check");
  prop1_cmd->add_option("document", doc_path, "workspace file")->required();
  auto* mono_cmd = app.add_subcommand("monodromy", "character of a scale-1 connection");
  mono_cmd->add_option("document", doc_path, "workspace file")->required();
  auto* rh_cmd = app.add_subcommand("rh-inverse", "connection recovered from a character");
  rh_cmd->add_option("document", doc_path, "workspace file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run the randomized property suites");
  verify_cmd->add_option("document", doc_path, "optional workspace file with suite defaults");
  verify_cmd->add_option("--suite", suite, "lemma2|prop1|thm1|remark1|monodromy|all")
      ->default_val("all");
  auto* cases_opt = verify_cmd->add_option("--cases", params.cases,
                                           "cases per suite (seeds per cell for thm1)");
  auto* seed_opt = verify_cmd->add_option("--seed", params.seed, "random seed");
  auto* degree_opt =
      verify_cmd->add_option("--max-degree", params.max_degree, "top degree for thm1");

  for (CLI::App* sub : app.get_subcommands(nullptr)) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*validate_cmd) {
      return cmd_validate(doc_path, as_json);
    }
    if (*dual_cmd) {
      return cmd_dual(doc_path, as_json);
    }
    if (*phi_cmd) {
      return cmd_phi(doc_path, as_json);
    }
    if (*radical_cmd) {
      return cmd_radical(doc_path, as_json);
    }
    if (*stab_cmd) {
      return cmd_stabilizer(doc_path, as_json);
    }
    if (*ringdim_cmd) {
      return cmd_ringdim(doc_path, max_degree, as_json);
    }
    if (*prop1_cmd) {
      return cmd_prop1(doc_path, as_json);
    }
    if (*mono_cmd) {
      return cmd_monodromy(doc_path, as_json);
    }
    if (*rh_cmd) {
      return cmd_rh_inverse(doc_path, as_json);
    }
    if (*verify_cmd) {
      return cmd_verify(doc_path, suite, params, cases_opt->count() > 0,
                        seed_opt->count() > 0, degree_opt->count() > 0, as_json);
    }
  } catch (const DocumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitInputError;
}
