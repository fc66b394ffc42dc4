#ifndef BENTCODES_CODES_HPP
#define BENTCODES_CODES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bentcodes/field.hpp"
#include "bentcodes/matrix.hpp"
#include "bentcodes/quadform.hpp"

namespace bentcodes {

/// Weight -> number of codewords of that weight.
using WeightDistribution = Tally;

/// D_Q = {x != 0 : Q(x) = 0}, in generator-power order.
inline DefiningSet defining_set(const QFunction& q) { return zero_set(q); }

/// (Tr(b d_0), ..., Tr(b d_{n-1})).
std::vector<std::uint32_t> codeword(const Element& b, const DefiningSet& d);

/// Hamming weight of c_b for every b, indexed by packed index, by evaluating
/// every coordinate.
std::vector<std::int64_t> weight_profile_direct(const DefiningSet& d);

/// Same profile via wt(c_b) = |D_Q| - N_b. Requires a full set with a
/// quadratic origin.
std::vector<std::int64_t> weight_profile_fast(const DefiningSet& d);

/// Distribution over the distinct codewords (A_0 = 1). Uses the fast path
/// for full sets with an origin, direct evaluation otherwise.
WeightDistribution weight_distribution(const DefiningSet& d);
WeightDistribution weight_distribution_direct(const DefiningSet& d);

/// m x n matrix with row i equal to (Tr(x^i d_j))_j.
ResidueMatrix trace_matrix(const DefiningSet& d);
int dimension(const DefiningSet& d);
/// Row-reduced basis of the code: dimension(d) rows, |D| columns.
ResidueMatrix generator_matrix(const DefiningSet& d);

/// Closed-form distribution of the nonzero codewords c_b, b != 0.
/// epsilon is required (+1/-1) for even m and ignored for odd m.
WeightDistribution theoretical_wd(std::uint32_t p, int m, int epsilon, bool punctured);

/// One representative per F_p^* orbit: the orbit element whose lowest
/// nonzero basis coordinate is 1. Throws InvalidArgument unless d is closed
/// under prime-subfield scaling.
DefiningSet puncture(const DefiningSet& d);

/// wt(c_b on full) == (p-1) wt(c_b on punctured); throws TheoryViolation otherwise.
void check_puncture_relation(const DefiningSet& full, const DefiningSet& punctured,
                             const Element& b);
/// The relation for every b.
void check_puncture_relation(const DefiningSet& full, const DefiningSet& punctured);

std::int64_t griesmer_bound(std::int64_t k, std::int64_t d, std::int64_t q);

struct GriesmerVerdict {
  std::int64_t bound = 0;
  bool meets = false;          // n == bound
  bool optimal_for_n = false;  // no [n, k, d+1] code can exist
};

GriesmerVerdict griesmer_check(std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t q);

enum class VerdictKind { Match, Mismatch, NotApplicable };

std::string to_string(VerdictKind v);

struct TheoryVerdict {
  VerdictKind kind = VerdictKind::NotApplicable;
  std::vector<std::string> differences;
};

struct CodeReport {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  SetKind kind = SetKind::Full;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t d = 0;  // 0 for the zero code
  WeightDistribution wd;
  std::optional<FormClassification> classification;
  TheoryVerdict theory;
  std::optional<GriesmerVerdict> griesmer;
};

/// Distribution of wt(c_b) over b != 0 recovered from a report, the form
/// the closed-form tables describe.
WeightDistribution nonzero_b_profile(const CodeReport& report);

/// Match iff the profiles are identical. A report without a Bent
/// classification is not applicable.
TheoryVerdict compare(const CodeReport& report, const WeightDistribution& theory);

/// Measures d and fills every report field; compares with the closed form
/// when the origin is Bent.
CodeReport build_report(const DefiningSet& d);

/// "1+90z^48+80z^54+72z^60".
std::string enumerator_string(const WeightDistribution& wd);

}  // namespace bentcodes

#endif  // BENTCODES_CODES_HPP
