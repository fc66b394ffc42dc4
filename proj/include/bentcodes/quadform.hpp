#ifndef BENTCODES_QUADFORM_HPP
#define BENTCODES_QUADFORM_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bentcodes/cyclotomic.hpp"
#include "bentcodes/field.hpp"
#include "bentcodes/matrix.hpp"

namespace bentcodes {

/// c * x^exponent, used both for polynomial maps GF(p^m) -> GF(p^m) and for
/// trace terms Tr(c * x^exponent).
struct Term {
  Element coeff;
  std::uint64_t exponent = 0;
};

/// Value -> multiplicity.
using Tally = std::map<std::int64_t, std::int64_t>;

/// Table of sum_i c_i x^{e_i} over every field element, indexed by packed index.
std::vector<std::uint32_t> polynomial_table(const Field& field, std::span<const Term> terms);

/// "2x^2 + 2x^10 + x^82". Prime-subfield coefficients print as integers,
/// others as generator powers.
std::string format_terms(std::span<const Term> terms);

/// A function GF(p^m) -> F_p held as a full value table.
///
/// Nothing about the constructor asserts quadraticness; operations that need
/// it check it and throw NotQuadratic.
class QFunction {
 public:
  /// Q(x) = sum_i Tr(c_i x^{e_i}).
  static QFunction from_terms(std::shared_ptr<const Field> field, std::vector<Term> terms,
                              std::string description = {});
  static QFunction from_values(std::shared_ptr<const Field> field,
                               std::vector<std::uint32_t> values, std::string description);
  static QFunction zero(std::shared_ptr<const Field> field);

  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }
  std::uint32_t value(std::uint32_t index) const { return values_[index]; }
  Residue operator()(const Element& x) const { return Residue{values_[x.index()]}; }
  std::span<const std::uint32_t> values() const { return values_; }
  const std::optional<std::vector<Term>>& terms() const { return terms_; }
  const std::string& description() const { return description_; }

 private:
  std::shared_ptr<const Field> field_;
  std::vector<std::uint32_t> values_;
  std::optional<std::vector<Term>> terms_;
  std::string description_;
};

enum class SetKind { Full, Punctured };

/// Ordered set of distinct nonzero coordinates defining a trace code.
struct DefiningSet {
  std::shared_ptr<const Field> field;
  std::vector<std::uint32_t> elements;  // packed indices, generator-power order
  SetKind kind = SetKind::Full;
  std::shared_ptr<const QFunction> origin;

  std::size_t size() const { return elements.size(); }
};

enum class CanonicalType { I, II, III, Degenerate };
enum class MuClass { NotApplicable, Square, Nonsquare };

std::string to_string(CanonicalType type);
std::string to_string(MuClass mu);

struct FormClassification {
  int rank = 0;
  bool bent = false;
  CanonicalType type = CanonicalType::Degenerate;
  int epsilon = 0;  // +1 / -1 for Bent forms with even m, 0 otherwise
  MuClass mu = MuClass::NotApplicable;
  std::int64_t zero_count = 0;  // |{x != 0 : Q(x) = 0}|
};

/// Walsh value as the cyclotomic integer sum_j n_j w^j where
/// n_j = #{x : Q(x) - Tr(lambda x) = j}.
using WalshValue = CyclotomicInteger;

/// Q(yx) = y^2 Q(x) for all y in F_p and all x.
bool is_homogeneous(const QFunction& q);

/// Homogeneity plus exact agreement with the quadratic form rebuilt from the
/// Gram matrix, 2Q(x) = x^T G x.
bool is_quadratic(const QFunction& q);

/// Entry (i,j) = Q(b_i + b_j) - Q(b_i) - Q(b_j) over the polynomial basis.
/// Throws NotQuadratic unless is_quadratic(q).
ResidueMatrix gram_matrix(const QFunction& q);

int form_rank(const QFunction& q);
bool is_bent_rank(const QFunction& q);

WalshValue walsh(const QFunction& q, const Element& lambda);
/// |W|^2 as an integer, or nullopt when it is irrational.
std::optional<std::int64_t> walsh_norm_sq(const WalshValue& w);
/// Works for any function, quadratic or not.
bool is_bent_walsh(const QFunction& q);

/// Nonzero zeros of q in generator-power order; origin is set to q.
DefiningSet zero_set(const QFunction& q);

FormClassification classify(const QFunction& q);

/// Number of x in F_p^m with Q(x) = zeta for a form of the given canonical
/// type and rank.
std::int64_t theoretical_count(std::uint32_t p, CanonicalType type, int rank, int m,
                               Residue zeta, MuClass mu);

/// #{x != 0 : Q(x) = 0 and Tr(bx) = 0}.
std::int64_t annihilator_count(const QFunction& q, const Element& b);
/// annihilator_count for every b, indexed by packed index.
std::vector<std::int64_t> annihilator_counts(const QFunction& q);

/// Closed-form value distribution of N_b over all b for a Bent form.
Tally theoretical_nb_distribution(std::uint32_t p, int m, int epsilon);

/// Brute-force distribution of N_b; throws TheoryViolation unless it equals
/// theoretical_nb_distribution.
Tally nb_distribution(const QFunction& q);

/// Every difference map x -> pi(x + a) - pi(x), a != 0, is a bijection.
/// pi is a value table indexed by packed index.
bool is_planar(const Field& field, std::span<const std::uint32_t> pi);

/// b^e for small nonnegative e.
std::int64_t ipow(std::int64_t base, int exp);

}  // namespace bentcodes

#endif  // BENTCODES_QUADFORM_HPP
