#ifndef BENTCODES_CLI_HPP
#define BENTCODES_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bentcodes/catalog.hpp"
#include "bentcodes/report.hpp"

namespace bentcodes::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kTheoryViolation = 1;
inline constexpr int kInvalidInput = 2;

/// Builds the code of Q (or its punctured version) and fills the report,
/// including the closed-form sign prediction where one exists.
CodeBuild build_code(const FamilySpec& spec, std::shared_ptr<const Field> field, bool punctured,
                     bool with_generator = false);

struct BentCheck {
  std::shared_ptr<const Field> field;
  FamilySpec family;
  std::string q_description;
  bool quadratic = false;
  int rank = 0;
  bool bent_rank = false;
  bool bent_walsh = false;
  std::optional<FormClassification> classification;
  std::optional<bool> claimed_bent;
  std::optional<bool> planar;
  std::optional<int> epsilon_predicted;

  /// Both oracles and every closed-form claim agree.
  bool consistent() const;
};

BentCheck bent_check(const FamilySpec& spec, std::shared_ptr<const Field> field);

struct SweepRow {
  FamilySpec family;
  bool bent = false;
  std::optional<bool> claimed_bent;
  CodeBuild build;
  std::vector<std::string> problems;  // empty when the row is consistent
};

struct SweepResult {
  std::vector<SweepRow> rows;
  bool aborted = false;

  std::size_t violations() const;
};

/// Grid points for one family name, or every family for "all". Points whose
/// structural conditions fail (e.g. Kasami with odd m) are skipped, so a
/// family that does not apply yields an empty grid.
std::vector<FamilySpec> sweep_grid(const std::string& family, const Field& field);

SweepResult sweep(const std::vector<FamilySpec>& grid, std::shared_ptr<const Field> field,
                  bool punctured, bool keep_going);

Json to_json(const BentCheck& check);
Json to_json(const SweepResult& result, const Field& field);

/// Full command-line entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bentcodes::cli

#endif  // BENTCODES_CLI_HPP
