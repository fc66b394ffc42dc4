#ifndef BENTCODES_REPORT_HPP
#define BENTCODES_REPORT_HPP

#include <optional>
#include <string>

#include "json.hpp"

#include "bentcodes/catalog.hpp"
#include "bentcodes/codes.hpp"
#include "bentcodes/field.hpp"

namespace bentcodes {

using Json = nlohmann::ordered_json;

/// A code report together with where it came from.
struct CodeBuild {
  std::shared_ptr<const Field> field;
  std::optional<FamilySpec> family;
  std::string q_description;
  CodeReport report;
  std::optional<int> epsilon_predicted;
  std::optional<ResidueMatrix> generator;

  /// Empirical sign agrees with the closed-form prediction; nullopt when
  /// either side is unavailable.
  std::optional<bool> epsilon_agrees() const;
};

/// {p, m, modulus: [c0..cm], generator: [g0..g_{m-1}]}
Json field_to_json(const Field& field);

/// {family: name, params: {...}}; elements as coefficient vectors.
Json family_to_json(const FamilySpec& spec);
FamilySpec family_from_json(const Json& j, const Field& field);

Json to_json(const CodeBuild& build);
std::string to_text(const CodeBuild& build);
/// "w,count" header followed by one row per weight, including w = 0.
std::string to_csv(const WeightDistribution& wd);
/// Space-separated digits, one row per line.
std::string matrix_rows(const ResidueMatrix& g);

}  // namespace bentcodes

#endif  // BENTCODES_REPORT_HPP
