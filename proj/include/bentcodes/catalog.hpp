#ifndef BENTCODES_CATALOG_HPP
#define BENTCODES_CATALOG_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bentcodes/field.hpp"
#include "bentcodes/quadform.hpp"

namespace bentcodes {

// Quadratic Bent families. Each Q is Tr(c * pi(x)) for a planar or Gold-type
// map pi, or an explicit sum of trace terms.

/// Tr(c x^2).
struct PlanarA {
  Element c;
};
/// Tr(c x^{p^k+1}), m / gcd(m, k) odd.
struct PlanarB {
  Element c;
  std::uint32_t k = 1;
};
/// Tr(c (x^10 - x^6 - x^2)), p = 3, m odd.
struct PlanarC {
  Element c;
};
/// Tr(c (x^10 - u x^6 - u^2 x^2)), p = 3, m odd, u != 0.
struct PlanarD {
  Element c;
  Element u;
};
/// Tr(c (x^{p^s+1} - u^{p^k-1} x^{p^k + p^{2k+s}})), m = 3k, u primitive.
struct PlanarE {
  Element c;
  std::uint32_t k = 1;
  std::uint32_t s = 4;
  Element u;
};
/// Tr(c x^{p^j+1}), 1 <= j <= m. Bent iff gold_is_bent holds.
struct Gold {
  Element c;
  std::uint32_t j = 1;
};
/// Tr(c x^{p^{m/2}+1}), m even, c + c^{p^{m/2}} != 0.
struct Kasami {
  Element c;
};
/// H(x^2) for the Helleseth-Gong trace polynomial H with parameter s.
struct HG {
  std::uint32_t s = 1;
};
/// sum_{i=0}^{floor(m/2)} Tr(c_i x^{p^i+1}).
struct PolyForm {
  std::vector<Element> coeffs;
};

using FamilySpec =
    std::variant<PlanarA, PlanarB, PlanarC, PlanarD, PlanarE, Gold, Kasami, HG, PolyForm>;

/// CLI / JSON name: planar-a ... planar-e, gold, kasami, hg, poly.
std::string family_name(const FamilySpec& spec);

/// Human-readable parameter list, e.g. "c=g^1, j=2".
std::string describe_params(const FamilySpec& spec);

/// The first violated validity condition, or nullopt.
std::optional<std::string> violated_condition(const FamilySpec& spec, const Field& field);

/// Throws InvalidFamily naming the violated condition.
void validate(const FamilySpec& spec, const Field& field);

/// The map pi with Q = Tr(c pi(x)) for the planar and Gold-type families;
/// nullopt for HG and PolyForm.
std::optional<std::vector<Term>> planar_map(const FamilySpec& spec, const Field& field);

/// Trace terms of Q. Validates first.
std::vector<Term> trace_terms(const FamilySpec& spec, const Field& field);

QFunction make_qfunction(const FamilySpec& spec, std::shared_ptr<const Field> field);

/// Q(x) by direct element arithmetic, independent of the QFunction tables.
Residue eval_family(const FamilySpec& spec, const Element& x);

/// p^{gcd(2j,m)} - 1 does not divide (p^m - 1)/2 - t (p^j - 1).
bool gold_is_bent(std::uint32_t p, std::uint32_t m, std::uint32_t j, std::uint64_t t);

/// c + c^{p^{m/2}} != 0. Throws InvalidArgument for odd m.
bool kasami_valid(const Element& c);

/// Trace terms of the HG function H: (u_i, (p^{2i}+1)/2) for i = 0..l.
std::vector<Term> hg_build(const Field& field, std::uint32_t s);

/// Q(x) = H(x^2), exponents p^{2i} + 1.
QFunction hg_q(std::shared_ptr<const Field> field, std::uint32_t s);

/// Closed-form sign for even m where one is known (PlanarA/PlanarB and the
/// Gold members that coincide with them, Kasami); nullopt otherwise. The
/// character of c is taken in GF(p^m): +1 iff discrete_log(c) is even.
/// Throws InvalidArgument for odd m.
std::optional<int> epsilon_predict(const FamilySpec& spec, const Field& field);

/// Whether the family's defining conditions claim Bentness. Planar, Kasami
/// and HG entries are always claimed Bent; Gold follows gold_is_bent;
/// PolyForm has no closed-form claim.
std::optional<bool> claimed_bent(const FamilySpec& spec, const Field& field);

}  // namespace bentcodes

#endif  // BENTCODES_CATALOG_HPP
