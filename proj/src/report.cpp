#include "algint/report.hpp"

#include <sstream>

#include <json.hpp>

namespace algint {

using json = nlohmann::ordered_json;

AlgebraReport analyze(const StructureConstants& sc, int search_bound) {
  const std::size_t n = sc.dim();
  if (n > kMaxAnalyzeDimension)
    throw ResourceLimitError("analyze: dimension " + std::to_string(n) + " exceeds limit " +
                             std::to_string(kMaxAnalyzeDimension));
  AlgebraReport r;
  r.name = sc.name();

  auto& cls = r.classification;
  cls.dim = n;
  cls.commutative = is_commutative(sc);
  cls.associator_witness = find_associativity_violation(sc);
  cls.associative = !cls.associator_witness;
  if (auto unit = find_unit(sc)) {
    cls.unital = true;
    cls.unit = unit->coeffs();
  }

  const MultOperators ops = build_mult_operators(sc);
  const RepIdentityReport rep = rep_identity_report(sc, ops);
  r.rep_identities = {rep.x_rep_holds, rep.pi_rep_holds, rep.commute_holds};

  const ConjugationResult conj = find_conjugation_matrix(sc, ops, search_bound);
  auto& cs = r.conjugation;
  cs.found = conj.found();
  cs.intertwiner_dimension = conj.intertwiner_dimension;
  cs.search_bound = search_bound;
  cs.candidates_tried = conj.candidates_tried;

  if (conj.found()) {
    const ConjugationMatrix& cm = conj.matrix();
    cs.c = cm.c;
    cs.cc_star_is_identity = (cm.c * cm.c.conjugate()).is_identity();

    const FirstTypeResult first = first_type_integral(sc, cm);
    auto& ft = r.first_type;
    ft.unital_shortcut_agrees = first.unital_shortcut_agrees;
    if (first.exists()) {
      const IntegrationFunctional& fn = first.functional();
      ft.status = "exists";
      ft.values = fn.values;
      ft.unique = first.unique;
      ft.completeness = verify_completeness(sc, cm, fn).holds;
      for (std::size_t k = 0; k < n; ++k)
        r.kernel_samples.push_back(
            {k, kernel_delta_check(sc, cm, fn, AlgebraElement::basis(n, k))});
    } else {
      ft.status = "inconsistent";
      ft.witness = first.witness();
    }
    r.self_product = self_scalar_product(sc, cm).coeffs();
  } else {
    cs.failure = to_string(conj.failure().reason);
    r.first_type.status = "no_conjugation";
  }

  const SecondTypeResult second = second_type_functional(sc);
  r.second_type.dimension = second.algebra.dim();
  r.second_type.completeness = second.completeness.holds;
  return r;
}

namespace {

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json matrix_json(const ExactMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string pair_str(const IndexPair& p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

IndexPair parse_pair(const std::string& s) {
  IndexPair p;
  char open = 0, comma = 0, close = 0;
  std::istringstream is(s);
  if (!(is >> open >> p.first >> comma >> p.second >> close) || open != '(' || comma != ',' ||
      close != ')')
    throw std::invalid_argument("malformed index pair '" + s + "'");
  return p;
}

json to_json(const AlgebraReport& r) {
  json j;
  j["name"] = r.name;

  const auto& c = r.classification;
  json cls;
  cls["dim"] = c.dim;
  cls["commutative"] = c.commutative;
  cls["associative"] = c.associative;
  cls["associator_witness"] =
      c.associator_witness ? json(*c.associator_witness) : json(nullptr);
  cls["unital"] = c.unital;
  cls["unit"] = c.unit ? vector_json(*c.unit) : json(nullptr);
  j["classification"] = std::move(cls);

  j["rep_identities"] = {{"x_rep_holds", r.rep_identities.x_rep_holds},
                         {"pi_rep_holds", r.rep_identities.pi_rep_holds},
                         {"commute_holds", r.rep_identities.commute_holds}};

  const auto& cs = r.conjugation;
  json conj;
  conj["found"] = cs.found;
  conj["c"] = cs.c ? matrix_json(*cs.c) : json(nullptr);
  conj["failure"] = optional_json(cs.failure);
  conj["intertwiner_dimension"] = cs.intertwiner_dimension;
  conj["search_bound"] = cs.search_bound;
  conj["candidates_tried"] = cs.candidates_tried;
  conj["cc_star_is_identity"] = optional_json(cs.cc_star_is_identity);
  j["conjugation"] = std::move(conj);

  const auto& ft = r.first_type;
  json first;
  first["status"] = ft.status;
  first["values"] = ft.values ? vector_json(*ft.values) : json(nullptr);
  first["witness"] = ft.witness ? json(pair_str(*ft.witness)) : json(nullptr);
  first["unique"] = optional_json(ft.unique);
  first["unital_shortcut_agrees"] = optional_json(ft.unital_shortcut_agrees);
  first["completeness"] = optional_json(ft.completeness);
  j["first_type"] = std::move(first);

  j["second_type"] = {{"dimension", r.second_type.dimension},
                      {"completeness", r.second_type.completeness}};
  j["self_product"] = r.self_product ? vector_json(*r.self_product) : json(nullptr);

  json samples = json::array();
  for (const auto& s : r.kernel_samples)
    samples.push_back({{"basis_index", s.basis_index}, {"value", s.value.str()}});
  j["kernel_samples"] = std::move(samples);
  return j;
}

Vector vector_from(const json& j) {
  Vector v;
  for (const auto& x : j) v.push_back(GaussScalar::parse(x.get<std::string>()));
  return v;
}

ExactMatrix matrix_from(const json& j) {
  if (j.empty()) return ExactMatrix();
  ExactMatrix m(j.size(), j.front().size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (j[r].size() != m.cols()) throw std::invalid_argument("ragged matrix in report");
    for (std::size_t c = 0; c < m.cols(); ++c)
      m(r, c) = GaussScalar::parse(j[r][c].get<std::string>());
  }
  return m;
}

template <typename T>
std::optional<T> optional_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

AlgebraReport from_json(const json& j) {
  AlgebraReport r;
  r.name = j.at("name").get<std::string>();

  const json& cls = j.at("classification");
  auto& c = r.classification;
  c.dim = cls.at("dim").get<std::size_t>();
  c.commutative = cls.at("commutative").get<bool>();
  c.associative = cls.at("associative").get<bool>();
  c.associator_witness = optional_from<AssociatorWitness>(cls.at("associator_witness"));
  c.unital = cls.at("unital").get<bool>();
  if (!cls.at("unit").is_null()) c.unit = vector_from(cls.at("unit"));

  const json& rep = j.at("rep_identities");
  r.rep_identities.x_rep_holds = rep.at("x_rep_holds").get<bool>();
  r.rep_identities.pi_rep_holds = rep.at("pi_rep_holds").get<bool>();
  r.rep_identities.commute_holds = rep.at("commute_holds").get<bool>();

  const json& conj = j.at("conjugation");
  auto& cs = r.conjugation;
  cs.found = conj.at("found").get<bool>();
  if (!conj.at("c").is_null()) cs.c = matrix_from(conj.at("c"));
  cs.failure = optional_from<std::string>(conj.at("failure"));
  cs.intertwiner_dimension = conj.at("intertwiner_dimension").get<std::size_t>();
  cs.search_bound = conj.at("search_bound").get<int>();
  cs.candidates_tried = conj.at("candidates_tried").get<std::size_t>();
  cs.cc_star_is_identity = optional_from<bool>(conj.at("cc_star_is_identity"));

  const json& first = j.at("first_type");
  auto& ft = r.first_type;
  ft.status = first.at("status").get<std::string>();
  if (!first.at("values").is_null()) ft.values = vector_from(first.at("values"));
  if (!first.at("witness").is_null())
    ft.witness = parse_pair(first.at("witness").get<std::string>());
  ft.unique = optional_from<bool>(first.at("unique"));
  ft.unital_shortcut_agrees = optional_from<bool>(first.at("unital_shortcut_agrees"));
  ft.completeness = optional_from<bool>(first.at("completeness"));

  const json& second = j.at("second_type");
  r.second_type.dimension = second.at("dimension").get<std::size_t>();
  r.second_type.completeness = second.at("completeness").get<bool>();

  if (!j.at("self_product").is_null()) r.self_product = vector_from(j.at("self_product"));
  for (const auto& s : j.at("kernel_samples"))
    r.kernel_samples.push_back({s.at("basis_index").get<std::size_t>(),
                                GaussScalar::parse(s.at("value").get<std::string>())});
  return r;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string element_text(const Vector& v) { return AlgebraElement(v).str(); }

std::string text_report(const AlgebraReport& r) {
  std::ostringstream os;
  const auto& c = r.classification;
  os << "algebra: " << r.name << "\n";
  os << "dimension: " << c.dim << "\n";
  os << "commutative: " << yes_no(c.commutative) << "\n";
  os << "associative: " << yes_no(c.associative);
  if (c.associator_witness) {
    const auto& w = *c.associator_witness;
    os << " (fails on x" << w[0] << ", x" << w[1] << ", x" << w[2] << ")";
  }
  os << "\n";
  os << "unital: " << yes_no(c.unital);
  if (c.unit) os << " (unit = " << element_text(*c.unit) << ")";
  os << "\n\n";

  os << "representation identities:\n";
  os << "  X_i X_j = f_ijk X_k: " << yes_no(r.rep_identities.x_rep_holds) << "\n";
  os << "  Pi_i Pi_j = f_ijk Pi_k: " << yes_no(r.rep_identities.pi_rep_holds) << "\n";
  os << "  [X_i, Pi_j^T] = 0: " << yes_no(r.rep_identities.commute_holds) << "\n\n";

  const auto& cs = r.conjugation;
  os << "conjugation matrix:\n";
  os << "  intertwiner dimension: " << cs.intertwiner_dimension << "\n";
  if (cs.c) {
    std::istringstream rows(cs.c->str());
    for (std::string line; std::getline(rows, line);) os << "  " << line << "\n";
    os << "  C C* = 1: " << yes_no(cs.cc_star_is_identity.value_or(false)) << "\n";
  } else {
    os << "  not found: " << cs.failure.value_or("") << " (search bound " << cs.search_bound
       << ", " << cs.candidates_tried << " candidates)\n";
  }
  os << "\n";

  const auto& ft = r.first_type;
  os << "first-type integral: " << ft.status << "\n";
  if (ft.values) {
    for (std::size_t i = 0; i < ft.values->size(); ++i)
      os << "  int x" << i << " = " << (*ft.values)[i].str() << "\n";
    if (ft.unique) os << "  unique: " << yes_no(*ft.unique) << "\n";
  }
  if (ft.witness) os << "  witness: " << pair_str(*ft.witness) << "\n";
  if (ft.unital_shortcut_agrees)
    os << "  unit-row shortcut agrees: " << yes_no(*ft.unital_shortcut_agrees) << "\n";
  if (ft.completeness) os << "  completeness: " << yes_no(*ft.completeness) << "\n";
  os << "\n";

  os << "second-type integral:\n";
  os << "  dimension of A x A*: " << r.second_type.dimension << "\n";
  os << "  completeness: " << yes_no(r.second_type.completeness) << "\n";

  if (r.self_product) os << "\n<x|x> = " << element_text(*r.self_product) << "\n";

  if (!r.kernel_samples.empty()) {
    os << "\nkernel samples (int <x_k|x>):\n";
    for (const auto& s : r.kernel_samples)
      os << "  k=" << s.basis_index << ": " << s.value.str() << "\n";
  }
  return os.str();
}

}  // namespace

std::string emit_report(const AlgebraReport& report, ReportFormat format) {
  if (format == ReportFormat::Text) return text_report(report);
  return to_json(report).dump(2) + "\n";
}

AlgebraReport parse_report_json(const std::string& text) {
  try {
    return from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("report: ") + e.what());
  } catch (const ScalarParseError& e) {
    throw std::invalid_argument(std::string("report: ") + e.what());
  }
}

}  // namespace algint
