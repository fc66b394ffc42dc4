#include "bentcodes/report.hpp"

#include <sstream>

#include "bentcodes/errors.hpp"

namespace bentcodes {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Json element_json(const Element& e) { return Json(e.coeffs()); }

Element element_from_json(const Json& j, const Field& f) {
  if (j.is_string()) return parse_element(f, j.get<std::string>());
  if (j.is_array()) {
    std::vector<std::uint32_t> coeffs;
    for (const auto& c : j) coeffs.push_back(c.get<std::uint32_t>());
    return f.from_coeffs(coeffs);
  }
  throw InvalidArgument("field element must be a coefficient array or a string");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json optional_json(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

std::optional<bool> CodeBuild::epsilon_agrees() const {
  if (!epsilon_predicted || !report.classification || report.classification->epsilon == 0) {
    return std::nullopt;
  }
  return *epsilon_predicted == report.classification->epsilon;
}

Json field_to_json(const Field& field) {
  Json j;
  j["p"] = field.p();
  j["m"] = field.m();
  j["modulus"] = field.modulus();
  j["generator"] = field.generator().coeffs();
  return j;
}

Json family_to_json(const FamilySpec& spec) {
  Json params = Json::object();
  std::visit(overloaded{
                 [&](const PlanarA& s) { params["c"] = element_json(s.c); },
                 [&](const PlanarB& s) {
                   params["c"] = element_json(s.c);
                   params["k"] = s.k;
                 },
                 [&](const PlanarC& s) { params["c"] = element_json(s.c); },
                 [&](const PlanarD& s) {
                   params["c"] = element_json(s.c);
                   params["u"] = element_json(s.u);
                 },
                 [&](const PlanarE& s) {
                   params["c"] = element_json(s.c);
                   params["k"] = s.k;
                   params["s"] = s.s;
                   params["u"] = element_json(s.u);
                 },
                 [&](const Gold& s) {
                   params["c"] = element_json(s.c);
                   params["j"] = s.j;
                 },
                 [&](const Kasami& s) { params["c"] = element_json(s.c); },
                 [&](const HG& s) { params["s"] = s.s; },
                 [&](const PolyForm& s) {
                   Json list = Json::array();
                   for (const auto& c : s.coeffs) list.push_back(element_json(c));
                   params["coeffs"] = list;
                 },
             },
             spec);
  Json j;
  j["family"] = family_name(spec);
  j["params"] = params;
  return j;
}

FamilySpec family_from_json(const Json& j, const Field& f) {
  const std::string name = j.at("family").get<std::string>();
  const Json& params = j.contains("params") ? j.at("params") : Json::object();
  auto elem = [&](const char* key) { return element_from_json(params.at(key), f); };
  auto num = [&](const char* key) { return params.at(key).get<std::uint32_t>(); };
  if (name == "planar-a") return PlanarA{elem("c")};
  if (name == "planar-b") return PlanarB{elem("c"), num("k")};
  if (name == "planar-c") return PlanarC{elem("c")};
  if (name == "planar-d") return PlanarD{elem("c"), elem("u")};
  if (name == "planar-e") return PlanarE{elem("c"), num("k"), num("s"), elem("u")};
  if (name == "gold") return Gold{elem("c"), num("j")};
  if (name == "kasami") return Kasami{elem("c")};
  if (name == "hg") return HG{num("s")};
  if (name == "poly") {
    PolyForm poly;
    for (const auto& c : params.at("coeffs")) poly.coeffs.push_back(element_from_json(c, f));
    return poly;
  }
  throw InvalidArgument("unknown family '" + name + "'");
}

Json to_json(const CodeBuild& b) {
  const CodeReport& r = b.report;
  Json j;
  j["field"] = field_to_json(*b.field);
  j["family"] = b.family ? family_to_json(*b.family) : Json(nullptr);
  j["q"] = b.q_description;
  j["punctured"] = r.kind == SetKind::Punctured;
  j["n"] = r.n;
  j["k"] = r.k;
  j["d"] = r.d;
  Json weights = Json::array();
  for (const auto& [w, count] : r.wd) weights.push_back(Json{{"w", w}, {"count", count}});
  j["weights"] = weights;
  j["enumerator"] = enumerator_string(r.wd);
  if (r.classification) {
    const auto& c = *r.classification;
    j["rank"] = c.rank;
    j["bent"] = c.bent;
    j["type"] = to_string(c.type);
    j["mu"] = to_string(c.mu);
    j["epsilon"] = c.epsilon;
    j["zero_count"] = c.zero_count;
  } else {
    j["rank"] = nullptr;
    j["bent"] = nullptr;
    j["type"] = nullptr;
    j["mu"] = nullptr;
    j["epsilon"] = nullptr;
    j["zero_count"] = nullptr;
  }
  j["epsilon_predicted"] = optional_json(b.epsilon_predicted);
  const auto agrees = b.epsilon_agrees();
  j["epsilon_agrees"] = agrees ? Json(*agrees) : Json(nullptr);
  j["theory_verdict"] = to_string(r.theory.kind);
  j["theory_differences"] = r.theory.differences;
  if (r.griesmer) {
    j["griesmer"] = Json{{"bound", r.griesmer->bound},
                         {"meets", r.griesmer->meets},
                         {"optimal_for_n", r.griesmer->optimal_for_n}};
  } else {
    j["griesmer"] = nullptr;
  }
  if (b.generator) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < b.generator->rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index c = 0; c < b.generator->cols(); ++c) row.push_back((*b.generator)(i, c));
      rows.push_back(row);
    }
    j["generator_matrix"] = rows;
  }
  return j;
}

std::string to_text(const CodeBuild& b) {
  const CodeReport& r = b.report;
  const Field& f = *b.field;
  std::ostringstream os;
  os << "field       GF(" << f.p() << "^" << f.m() << "), modulus " << Json(f.modulus()).dump()
     << ", generator " << Json(f.generator().coeffs()).dump() << "\n";
  if (b.family) {
    os << "family      " << family_name(*b.family) << " (" << describe_params(*b.family) << ")\n";
  }
  os << "Q           " << b.q_description << "\n";
  os << "code        [" << r.n << "," << r.k << "," << r.d << "] "
     << (r.kind == SetKind::Punctured ? "punctured" : "full") << "\n";
  os << "enumerator  " << enumerator_string(r.wd) << "\n";
  if (r.classification) {
    const auto& c = *r.classification;
    os << "form        rank " << c.rank << ", " << (c.bent ? "Bent" : "not Bent") << ", type "
       << to_string(c.type);
    if (c.mu != MuClass::NotApplicable) os << " (mu " << to_string(c.mu) << ")";
    os << ", epsilon " << c.epsilon << ", |D_Q| " << c.zero_count << "\n";
  } else {
    os << "form        not quadratic\n";
  }
  if (b.epsilon_predicted) {
    os << "predicted   epsilon " << *b.epsilon_predicted;
    if (const auto a = b.epsilon_agrees()) {
      os << (*a ? " (agrees)" : " (DISAGREES with computed sign)");
    }
    os << "\n";
  }
  os << "theory      " << to_string(r.theory.kind) << "\n";
  for (const auto& diff : r.theory.differences) os << "            " << diff << "\n";
  if (r.griesmer) {
    os << "griesmer    bound " << r.griesmer->bound << ", meets " << yes_no(r.griesmer->meets)
       << ", optimal for n " << yes_no(r.griesmer->optimal_for_n) << "\n";
  }
  if (b.generator) os << "generator\n" << matrix_rows(*b.generator);
  return os.str();
}

std::string to_csv(const WeightDistribution& wd) {
  std::ostringstream os;
  os << "w,count\n";
  for (const auto& [w, count] : wd) os << w << "," << count << "\n";
  return os.str();
}

std::string matrix_rows(const ResidueMatrix& g) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index c = 0; c < g.cols(); ++c) os << (c ? " " : "") << g(i, c);
    os << "\n";
  }
  return os.str();
}

}  // namespace bentcodes
