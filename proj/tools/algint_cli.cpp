#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "algint/algebra_io.hpp"
#include "algint/catalog.hpp"
#include "algint/integration.hpp"
#include "algint/q_numeric.hpp"
#include "algint/report.hpp"
#include "algint/symmetry.hpp"

namespace {

using namespace algint;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitResource = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

StructureConstants load_algebra(const std::string& path) {
  try {
    return parse_algebra(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

ExactMatrix load_matrix(const std::string& path, std::size_t dim) {
  ExactMatrix m;
  try {
    m = parse_matrix(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
  if (m.rows() != dim || m.cols() != dim)
    throw InputError(path + ": expected a " + std::to_string(dim) + "x" + std::to_string(dim) +
                     " matrix");
  return m;
}

int run_analyze(const std::string& path, int bound, ReportFormat format) {
  const StructureConstants sc = load_algebra(path);
  std::cout << emit_report(analyze(sc, bound), format);
  return kExitOk;
}

int run_catalog(const std::string& name, std::size_t param, const std::string& out) {
  StructureConstants sc = [&] {
    try {
      return catalog::make(name, param);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }();
  const std::string text = serialize_algebra(sc);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream file(out, std::ios::binary);
    if (!file) throw InputError("cannot write '" + out + "'");
    file << text;
  }
  return kExitOk;
}

int run_integrate(const std::string& path, const std::string& element,
                  const std::string& conj_path, int bound, ReportFormat format) {
  const StructureConstants sc = load_algebra(path);
  if (sc.dim() > kMaxAnalyzeDimension) throw ResourceLimitError("algebra too large");
  AlgebraElement a;
  try {
    a = parse_element(element, sc.dim());
  } catch (const ParseError& e) {
    throw InputError(std::string("--element: ") + e.what());
  }

  std::optional<ConjugationMatrix> conj;
  std::string failure;
  if (!conj_path.empty()) {
    ExactMatrix c = load_matrix(conj_path, sc.dim());
    if (!invert(c)) throw InputError(conj_path + ": conjugation matrix is singular");
    if (!is_intertwiner(build_mult_operators(sc), c))
      throw InputError(conj_path + ": matrix does not satisfy Pi_i C = C X_i");
    conj = make_conjugation(std::move(c));
  } else {
    ConjugationResult found = find_conjugation_matrix(sc, build_mult_operators(sc), bound);
    if (found.found())
      conj = found.matrix();
    else
      failure = to_string(found.failure().reason);
  }

  json out;
  out["algebra"] = sc.name();
  out["element"] = a.str();
  std::string text;
  if (!conj) {
    out["status"] = "no_conjugation";
    out["reason"] = failure;
    text = "no conjugation matrix: " + failure + "\n";
  } else {
    FirstTypeResult first = first_type_integral(sc, *conj);
    if (first.exists()) {
      const std::string value = integrate(first.functional(), a).str();
      out["status"] = "exists";
      out["integral"] = value;
      out["unique"] = first.unique;
      text = "int (" + a.str() + ") = " + value + "\n";
      if (!first.unique) text += "(functional not unique; free unknowns set to zero)\n";
    } else {
      const auto& w = first.witness();
      std::string pair = "(" + std::to_string(w.first) + "," + std::to_string(w.second) + ")";
      out["status"] = "inconsistent";
      out["witness"] = pair;
      text = "no first-type integral: inconsistent at " + pair + "\n";
    }
  }
  std::cout << (format == ReportFormat::Json ? out.dump(2) + "\n" : text);
  return kExitOk;
}

int run_symmetry(const std::string& path, const std::string& matrix_path, int bound,
                 ReportFormat format) {
  const StructureConstants sc = load_algebra(path);
  if (sc.dim() > kMaxAnalyzeDimension) throw ResourceLimitError("algebra too large");
  const ExactMatrix s = load_matrix(matrix_path, sc.dim());

  json out;
  std::ostringstream text;
  out["algebra"] = sc.name();

  const SymmetryCheck aut = is_automorphism(sc, s);
  out["automorphism"] = aut.holds;
  text << "automorphism: " << (aut.holds ? "yes" : "no");
  if (!aut.holds && !aut.reason.empty()) text << " (" << aut.reason << ")";
  text << "\n";
  if (!aut.holds) out["automorphism_reason"] = aut.reason;

  const SymmetryCheck der = is_derivation(sc, s);
  out["derivation"] = der.holds;
  text << "derivation: " << (der.holds ? "yes" : "no") << "\n";

  const MultOperators ops = build_mult_operators(sc);
  const ConjugationResult conj = find_conjugation_matrix(sc, ops, bound);
  if (!conj.found()) {
    out["conjugation"] = to_string(conj.failure().reason);
    text << "no conjugation matrix: " << to_string(conj.failure().reason) << "\n";
  } else {
    const FirstTypeResult first = first_type_integral(sc, conj.matrix());
    if (aut.holds) {
      const KFactorResult k = schur_k_factor(sc, conj.matrix(), s);
      if (k.proportional()) {
        out["k"] = k.k().str();
        text << "k = " << k.k().str() << "\n";
        if (first.exists() && !k.k().is_zero()) {
          const IntegrationFunctional primed = transform_measure(first.functional(), k.k());
          const bool holds = primed_completeness(sc, conj.matrix(), s, primed).holds;
          out["primed_completeness"] = holds;
          text << "primed completeness: " << (holds ? "yes" : "no") << "\n";
        }
      } else {
        const auto& w = std::get<NotProportional>(k.outcome).witness;
        std::string pair = "(" + std::to_string(w.first) + "," + std::to_string(w.second) + ")";
        out["k"] = nullptr;
        out["k_witness"] = pair;
        text << "C^-1 S^T C S is not proportional to 1 at " << pair << "\n";
      }
    }
    if (der.holds && first.exists()) {
      const bool annihilates = derivation_annihilation_check(first.functional(), s, sc);
      out["derivation_annihilates_measure"] = annihilates;
      text << "int D(f) = 0: " << (annihilates ? "yes" : "no") << "\n";
    }
  }
  std::cout << (format == ReportFormat::Json ? out.dump(2) + "\n" : text.str());
  return kExitOk;
}

int run_qcheck(const std::vector<double>& qs, std::size_t nmax, double tol,
               ReportFormat format) {
  if (nmax > 12) throw InputError("--nmax must be at most 12");
  json rows = json::array();
  std::ostringstream text;
  text << std::setw(6) << "q" << std::setw(5) << "n" << std::setw(22) << "n_q!"
       << std::setw(22) << "q-integral" << std::setw(12) << "residual" << std::setw(10)
       << "ms" << "  result\n";
  bool all = true;
  for (double qv : qs) {
    qnum::QParameter q = [&] {
      try {
        return qnum::QParameter(qv);
      } catch (const std::domain_error& e) {
        throw InputError(e.what());
      }
    }();
    for (std::size_t n = 0; n <= nmax; ++n) {
      qnum::NumericTolerance t;
      t.abs_tol = tol;
      auto start = std::chrono::steady_clock::now();
      const qnum::IdentityCheck check = qnum::verify_q_factorial_identity(n, q, t);
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            start)
                      .count();
      all = all && check.passed;
      rows.push_back({{"q", qv},
                      {"n", n},
                      {"lhs", check.lhs},
                      {"rhs", check.rhs},
                      {"residual", check.residual},
                      {"passed", check.passed}});
      char line[160];
      std::snprintf(line, sizeof line, "%6.3g%5zu%22.15g%22.15g%12.3g%10.3f  %s\n", qv, n,
                    check.lhs, check.rhs, check.residual, ms, check.passed ? "pass" : "FAIL");
      text << line;
    }
  }
  if (format == ReportFormat::Json) {
    json out;
    out["abs_tol"] = tol;
    out["all_passed"] = all;
    out["checks"] = std::move(rows);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text.str() << (all ? "all checks passed\n" : "some checks FAILED\n");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integration functionals on finite-dimensional algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  int bound = kDefaultSearchBound;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-c-search", bound, "Coefficient bound for the conjugation search")
      ->check(CLI::Range(0, 100));

  std::string file, name, out, element, conj_path, matrix_path;
  std::size_t param = 0;
  std::vector<double> qs = {0.2, 0.5, 0.8};
  std::size_t nmax = 8;
  double tol = 1e-9;

  auto* analyze_cmd = app.add_subcommand("analyze", "Full report for an algebra file");
  analyze_cmd->add_option("file", file, "Algebra definition file")->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "Write a catalog algebra definition");
  catalog_cmd->add_option("name", name, "Catalog name")->required();
  catalog_cmd->add_option("param", param, "Size parameter (generators, order)");
  catalog_cmd->add_option("-o,--output", out, "Output file (default stdout)");

  auto* integrate_cmd = app.add_subcommand("integrate", "Integrate one element");
  integrate_cmd->add_option("file", file, "Algebra definition file")->required();
  integrate_cmd->add_option("--element", element, "Coefficient list, e.g. 0,1")->required();
  integrate_cmd->add_option("--conjugation", conj_path, "Explicit C matrix file");

  auto* symmetry_cmd = app.add_subcommand("symmetry", "Automorphism and derivation checks");
  symmetry_cmd->add_option("file", file, "Algebra definition file")->required();
  symmetry_cmd->add_option("--matrix", matrix_path, "Matrix file")->required();

  auto* qcheck_cmd = app.add_subcommand("qcheck", "q-factorial as a Jackson integral");
  qcheck_cmd->add_option("--q", qs, "Values of q in (0,1)");
  qcheck_cmd->add_option("--nmax", nmax, "Largest n");
  qcheck_cmd->add_option("--tol", tol, "Absolute tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  const ReportFormat format = format_name == "json" ? ReportFormat::Json : ReportFormat::Text;
  try {
    if (*analyze_cmd) return run_analyze(file, bound, format);
    if (*catalog_cmd) return run_catalog(name, param, out);
    if (*integrate_cmd) return run_integrate(file, element, conj_path, bound, format);
    if (*symmetry_cmd) return run_symmetry(file, matrix_path, bound, format);
    if (*qcheck_cmd) return run_qcheck(qs, nmax, tol, format);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::bad_alloc&) {
    std::cerr << "resource limit: out of memory\n";
    return kExitResource;
  }
  return kExitInput;
}
