#include "bentcodes/cli.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "bentcodes/errors.hpp"

namespace bentcodes::cli {

CodeBuild build_code(const FamilySpec& spec, std::shared_ptr<const Field> field, bool punctured,
                     bool with_generator) {
  CodeBuild b;
  b.field = field;
  b.family = spec;
  const QFunction q = make_qfunction(spec, field);
  b.q_description = q.description();
  const DefiningSet full = defining_set(q);
  const DefiningSet set = punctured ? puncture(full) : full;
  b.report = build_report(set);
  if (field->m() % 2 == 0) b.epsilon_predicted = epsilon_predict(spec, *field);
  if (with_generator) b.generator = generator_matrix(set);
  return b;
}

bool BentCheck::consistent() const {
  if (bent_rank != bent_walsh) return false;
  if (claimed_bent && *claimed_bent != bent_rank) return false;
  if (planar && *planar && !bent_rank) return false;
  return true;
}

BentCheck bent_check(const FamilySpec& spec, std::shared_ptr<const Field> field) {
  BentCheck c;
  c.field = field;
  c.family = spec;
  const QFunction q = make_qfunction(spec, field);
  c.q_description = q.description();
  c.quadratic = is_quadratic(q);
  c.bent_walsh = is_bent_walsh(q);
  if (c.quadratic) {
    c.rank = form_rank(q);
    c.bent_rank = c.rank == static_cast<int>(field->m());
    c.classification = classify(q);
  }
  c.claimed_bent = claimed_bent(spec, *field);
  if (auto pi = planar_map(spec, *field)) {
    c.planar = is_planar(*field, polynomial_table(*field, *pi));
  }
  if (field->m() % 2 == 0 && c.bent_rank) c.epsilon_predicted = epsilon_predict(spec, *field);
  return c;
}

std::size_t SweepResult::violations() const {
  return static_cast<std::size_t>(std::count_if(
      rows.begin(), rows.end(), [](const SweepRow& r) { return !r.problems.empty(); }));
}

std::vector<FamilySpec> sweep_grid(const std::string& family, const Field& f) {
  static const std::vector<std::string> kFamilies = {
      "planar-a", "planar-b", "planar-c", "planar-d", "planar-e", "gold", "kasami", "hg", "poly"};
  std::vector<FamilySpec> grid;
  if (family == "all") {
    for (const auto& name : kFamilies) {
      auto part = sweep_grid(name, f);
      grid.insert(grid.end(), part.begin(), part.end());
    }
    return grid;
  }
  if (std::find(kFamilies.begin(), kFamilies.end(), family) == kFamilies.end()) {
    throw InvalidArgument("unknown family '" + family + "'");
  }

  const std::uint32_t m = f.m();
  const std::uint32_t p = f.p();
  const std::vector<Element> cs = {f.one(), f.generator()};
  auto keep = [&](FamilySpec spec) {
    if (!violated_condition(spec, f)) grid.push_back(std::move(spec));
  };

  if (family == "planar-a") {
    for (const auto& c : cs) keep(PlanarA{c});
  } else if (family == "planar-b") {
    for (std::uint32_t k = 1; k < m; ++k) {
      for (const auto& c : cs) keep(PlanarB{c, k});
    }
  } else if (family == "planar-c") {
    for (const auto& c : cs) keep(PlanarC{c});
  } else if (family == "planar-d") {
    for (const auto& c : cs) {
      for (const auto& u : cs) keep(PlanarD{c, u});
    }
  } else if (family == "planar-e") {
    if (m % 3 == 0) {
      for (std::uint32_t s = 0; s <= 2 * m; ++s) {
        for (const auto& c : cs) keep(PlanarE{c, m / 3, s, f.generator()});
      }
    }
  } else if (family == "gold") {
    for (std::uint32_t j = 1; j <= m; ++j) {
      for (std::uint64_t t = 0; t + 1 < f.order(); ++t) keep(Gold{f.generator_power(t), j});
    }
  } else if (family == "kasami") {
    if (m % 2 == 0) {
      for (std::uint64_t t = 0; t + 1 < f.order(); ++t) keep(Kasami{f.generator_power(t)});
    }
  } else if (family == "hg") {
    for (std::uint32_t s = 1; s < m; ++s) keep(HG{s});
  } else if (family == "poly") {
    const std::uint32_t terms = m / 2 + 1;
    const std::uint64_t count = checked_pow(p, terms);
    for (std::uint64_t r = 0; r < count; ++r) {
      PolyForm poly;
      std::uint64_t v = r;
      for (std::uint32_t i = 0; i < terms; ++i) {
        poly.coeffs.push_back(f.from_residue(Residue{static_cast<std::uint32_t>(v % p)}));
        v /= p;
      }
      keep(std::move(poly));
    }
  }
  return grid;
}

SweepResult sweep(const std::vector<FamilySpec>& grid, std::shared_ptr<const Field> field,
                  bool punctured, bool keep_going) {
  SweepResult result;
  for (const auto& spec : grid) {
    SweepRow row;
    row.family = spec;
    try {
      const QFunction q = make_qfunction(spec, field);
      row.bent = is_bent_rank(q);
      row.claimed_bent = claimed_bent(spec, *field);
      row.build = build_code(spec, field, punctured);
      if (row.claimed_bent && *row.claimed_bent != row.bent) {
        row.problems.push_back(std::string("closed-form Bent predicate says ") +
                               (*row.claimed_bent ? "Bent" : "not Bent") +
                               ", rank oracle disagrees");
      }
      if (row.bent && row.build.report.theory.kind != VerdictKind::Match) {
        row.problems.push_back("weight distribution does not match the closed form");
      }
      if (row.bent && punctured) {
        const DefiningSet full = defining_set(q);
        check_puncture_relation(full, puncture(full));
      }
    } catch (const TheoryViolation& e) {
      row.problems.push_back(e.what());
    } catch (const NotQuadratic& e) {
      row.problems.push_back(e.what());
    }
    const bool bad = !row.problems.empty();
    result.rows.push_back(std::move(row));
    if (bad && !keep_going) {
      result.aborted = true;
      break;
    }
  }
  return result;
}

Json to_json(const BentCheck& c) {
  Json j;
  j["field"] = field_to_json(*c.field);
  j["family"] = family_to_json(c.family);
  j["q"] = c.q_description;
  j["quadratic"] = c.quadratic;
  j["rank"] = c.quadratic ? Json(c.rank) : Json(nullptr);
  j["bent_rank"] = c.bent_rank;
  j["bent_walsh"] = c.bent_walsh;
  if (c.classification) {
    j["type"] = to_string(c.classification->type);
    j["mu"] = to_string(c.classification->mu);
    j["epsilon"] = c.classification->epsilon;
    j["zero_count"] = c.classification->zero_count;
  }
  j["claimed_bent"] = c.claimed_bent ? Json(*c.claimed_bent) : Json(nullptr);
  j["planar"] = c.planar ? Json(*c.planar) : Json(nullptr);
  j["epsilon_predicted"] = c.epsilon_predicted ? Json(*c.epsilon_predicted) : Json(nullptr);
  j["consistent"] = c.consistent();
  return j;
}

Json to_json(const SweepResult& result, const Field& field) {
  Json rows = Json::array();
  std::size_t bent = 0, match = 0;
  for (const auto& row : result.rows) {
    const CodeReport& r = row.build.report;
    bent += row.bent;
    match += r.theory.kind == VerdictKind::Match;
    Json j;
    j["family"] = family_to_json(row.family);
    j["bent"] = row.bent;
    j["claimed_bent"] = row.claimed_bent ? Json(*row.claimed_bent) : Json(nullptr);
    j["n"] = r.n;
    j["k"] = r.k;
    j["d"] = r.d;
    j["enumerator"] = enumerator_string(r.wd);
    j["epsilon"] = r.classification ? Json(r.classification->epsilon) : Json(nullptr);
    j["epsilon_predicted"] =
        row.build.epsilon_predicted ? Json(*row.build.epsilon_predicted) : Json(nullptr);
    j["theory_verdict"] = to_string(r.theory.kind);
    j["problems"] = row.problems;
    rows.push_back(j);
  }
  Json out;
  out["field"] = field_to_json(field);
  out["rows"] = rows;
  out["summary"] = Json{{"points", result.rows.size()},
                        {"bent", bent},
                        {"match", match},
                        {"violations", result.violations()},
                        {"aborted", result.aborted}};
  return out;
}

namespace {

struct Options {
  std::uint32_t p = 3;
  std::uint32_t m = 2;
  std::string family;
  std::string c = "1";
  std::optional<std::string> u;
  std::optional<std::uint32_t> j, k, s;
  std::optional<std::uint64_t> t;
  std::vector<std::string> coeffs;
  bool puncture = false;
  bool generator = false;
  std::string format = "text";
  bool force_large = false;
  bool keep_going = false;
};

constexpr const char* kElementHelp =
    "Field elements are written as coefficient vectors \"a0,a1,...\" in the "
    "polynomial basis (missing high coefficients are zero) or as generator "
    "powers \"g^t\".";

void add_field_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--p", o.p, "odd prime characteristic")->required();
  cmd->add_option("--m", o.m, "extension degree")->required();
  cmd->add_flag("--force-large", o.force_large, "allow fields above 2^24 elements");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv", "matrix"}));
}

void add_family_options(CLI::App* cmd, Options& o, bool family_required) {
  auto* fam = cmd->add_option("--family", o.family,
                              "planar-a|planar-b|planar-c|planar-d|planar-e|gold|kasami|hg|poly");
  if (family_required) fam->required();
  cmd->add_option("--c", o.c, "coefficient c (default 1)");
  cmd->add_option("--u", o.u, "parameter u (planar-d default 1, planar-e default generator)");
  cmd->add_option("--j", o.j, "Gold exponent parameter j (default 1)");
  cmd->add_option("--k", o.k, "planar-b/planar-e parameter k");
  cmd->add_option("--s", o.s, "planar-e / hg parameter s");
  cmd->add_option("--t", o.t, "use c = g^t (skips the discrete log for Gold)");
  cmd->add_option("--coeffs", o.coeffs, "poly coefficients c_0 c_1 ... c_floor(m/2)");
}

FamilySpec make_spec(const Options& o, const Field& f) {
  const Element c = o.t ? f.generator_power(*o.t) : parse_element(f, o.c);
  const std::string& name = o.family;
  if (name == "planar-a") return PlanarA{c};
  if (name == "planar-b") return PlanarB{c, o.k.value_or(1)};
  if (name == "planar-c") return PlanarC{c};
  if (name == "planar-d") return PlanarD{c, o.u ? parse_element(f, *o.u) : f.one()};
  if (name == "planar-e") {
    const Element u = o.u ? parse_element(f, *o.u) : f.generator();
    const std::uint32_t k = o.k.value_or(f.m() / 3);
    if (o.s) return PlanarE{c, k, *o.s, u};
    // Smallest s satisfying the conditions, if any.
    for (std::uint32_t s = 0; s <= 2 * f.m() + 3; ++s) {
      PlanarE e{c, k, s, u};
      if (!violated_condition(e, f)) return e;
    }
    return PlanarE{c, k, 0, u};
  }
  if (name == "gold") return Gold{c, o.j.value_or(1)};
  if (name == "kasami") return Kasami{c};
  if (name == "hg") return HG{o.s.value_or(1)};
  if (name == "poly") {
    PolyForm poly;
    for (const auto& text : o.coeffs) poly.coeffs.push_back(parse_element(f, text));
    return poly;
  }
  throw InvalidArgument("unknown family '" + name + "'");
}

std::string sweep_text(const SweepResult& result) {
  std::ostringstream os;
  for (const auto& row : result.rows) {
    const CodeReport& r = row.build.report;
    os << family_name(row.family) << " (" << describe_params(row.family) << "): "
       << (row.bent ? "Bent" : "not Bent") << ", [" << r.n << "," << r.k << "," << r.d << "], "
       << enumerator_string(r.wd) << ", " << to_string(r.theory.kind);
    if (r.classification && r.classification->epsilon != 0) {
      os << ", epsilon " << r.classification->epsilon;
    }
    for (const auto& problem : row.problems) os << "\n  VIOLATION: " << problem;
    os << "\n";
  }
  os << "points " << result.rows.size() << ", violations " << result.violations()
     << (result.aborted ? " (aborted)" : "") << "\n";
  return os.str();
}

std::string sweep_csv(const SweepResult& result) {
  std::ostringstream os;
  os << "family,params,bent,n,k,d,epsilon,verdict,enumerator\n";
  for (const auto& row : result.rows) {
    const CodeReport& r = row.build.report;
    os << family_name(row.family) << ",\"" << describe_params(row.family) << "\","
       << (row.bent ? 1 : 0) << "," << r.n << "," << r.k << "," << r.d << ","
       << (r.classification ? r.classification->epsilon : 0) << ","
       << to_string(r.theory.kind) << "," << enumerator_string(r.wd) << "\n";
  }
  return os.str();
}

std::string bent_check_text(const BentCheck& c) {
  std::ostringstream os;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  os << "family      " << family_name(c.family) << " (" << describe_params(c.family) << ")\n";
  os << "Q           " << c.q_description << "\n";
  os << "quadratic   " << yn(c.quadratic) << "\n";
  if (c.quadratic) os << "rank        " << c.rank << "\n";
  os << "bent (rank) " << yn(c.bent_rank) << "\n";
  os << "bent (walsh)" << " " << yn(c.bent_walsh) << "\n";
  if (c.classification) {
    os << "type        " << to_string(c.classification->type);
    if (c.classification->mu != MuClass::NotApplicable) {
      os << " (mu " << to_string(c.classification->mu) << ")";
    }
    os << ", epsilon " << c.classification->epsilon << ", |D_Q| " << c.classification->zero_count
       << "\n";
  }
  if (c.claimed_bent) os << "claimed     " << (*c.claimed_bent ? "Bent" : "not Bent") << "\n";
  if (c.planar) os << "planar map  " << yn(*c.planar) << "\n";
  if (c.epsilon_predicted) os << "predicted   epsilon " << *c.epsilon_predicted << "\n";
  os << "consistent  " << yn(c.consistent()) << "\n";
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear codes from quadratic Bent functions over odd-characteristic fields.\n" +
               std::string(kElementHelp),
               "bentcodes"};
  app.require_subcommand(1);
  Options o;

  auto* field_cmd = app.add_subcommand("field", "print the field construction");
  add_field_options(field_cmd, o);

  auto* check_cmd = app.add_subcommand("bent-check", "rank and Walsh Bentness oracles");
  add_field_options(check_cmd, o);
  add_family_options(check_cmd, o, true);

  auto* build_cmd = app.add_subcommand("code-build", "construct C_D from the zero set of Q");
  add_field_options(build_cmd, o);
  add_family_options(build_cmd, o, true);
  build_cmd->add_flag("--puncture", o.puncture, "one coordinate per F_p^* orbit");
  build_cmd->add_flag("--generator", o.generator, "include the generator matrix");

  auto* punct_cmd = app.add_subcommand("code-puncture", "construct the punctured code");
  add_field_options(punct_cmd, o);
  add_family_options(punct_cmd, o, true);
  punct_cmd->add_flag("--generator", o.generator, "include the generator matrix");

  auto* sweep_cmd = app.add_subcommand("sweep", "check every grid point of a family");
  add_field_options(sweep_cmd, o);
  sweep_cmd->add_option("--family", o.family, "family name or 'all'")->required();
  sweep_cmd->add_flag("--puncture", o.puncture, "build punctured codes");
  sweep_cmd->add_flag("--keep-going", o.keep_going, "do not stop at the first violation");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    const auto field = make_field(o.p, o.m, FieldOptions{o.force_large});

    if (field_cmd->parsed()) {
      if (o.format == "json") {
        out << field_to_json(*field).dump(2) << "\n";
      } else {
        out << "GF(" << field->p() << "^" << field->m() << "), modulus "
            << Json(field->modulus()).dump() << ", generator "
            << Json(field->generator().coeffs()).dump() << "\n";
      }
      return kOk;
    }

    if (check_cmd->parsed()) {
      const BentCheck c = bent_check(make_spec(o, *field), field);
      out << (o.format == "json" ? to_json(c).dump(2) + "\n" : bent_check_text(c));
      return c.consistent() ? kOk : kTheoryViolation;
    }

    if (build_cmd->parsed() || punct_cmd->parsed()) {
      const bool punctured = o.puncture || punct_cmd->parsed();
      const FamilySpec spec = make_spec(o, *field);
      const bool with_generator = o.generator || o.format == "matrix";
      const CodeBuild b = build_code(spec, field, punctured, with_generator);
      if (punct_cmd->parsed()) {
        const DefiningSet full = defining_set(make_qfunction(spec, field));
        check_puncture_relation(full, puncture(full));
      }
      if (o.format == "json") {
        out << to_json(b).dump(2) << "\n";
      } else if (o.format == "csv") {
        out << to_csv(b.report.wd);
      } else if (o.format == "matrix") {
        out << matrix_rows(*b.generator);
      } else {
        out << to_text(b);
      }
      return b.report.theory.kind == VerdictKind::Mismatch ? kTheoryViolation : kOk;
    }

    if (sweep_cmd->parsed()) {
      const auto grid = sweep_grid(o.family, *field);
      const SweepResult result = sweep(grid, field, o.puncture, o.keep_going);
      if (o.format == "json") {
        out << to_json(result, *field).dump(2) << "\n";
      } else if (o.format == "csv") {
        out << sweep_csv(result);
      } else {
        out << sweep_text(result);
      }
      return result.violations() == 0 ? kOk : kTheoryViolation;
    }
  } catch (const TheoryViolation& e) {
    err << "theory violation: " << e.what() << "\n";
    return kTheoryViolation;
  } catch (const NotQuadratic& e) {
    err << "not a quadratic form: " << e.what() << "\n";
    return kTheoryViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace bentcodes::cli
