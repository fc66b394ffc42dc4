#ifndef BENTCODES_FIELD_HPP
#define BENTCODES_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bentcodes {

// Largest field size accepted without FieldOptions::allow_large. Every
// downstream analysis enumerates the field at least once.
inline constexpr std::uint64_t kElementGuard = std::uint64_t{1} << 24;

/// An element of the prime field F_p, stored as its least nonnegative residue.
struct Residue {
  std::uint32_t value = 0;

  friend auto operator<=>(const Residue&, const Residue&) = default;
};

/// Quadratic character of F_p: 0 at 0, +1 on nonzero squares, -1 otherwise.
int quadratic_character(std::uint32_t p, Residue a);

/// nu(0) = p - 1 and nu(z) = -1 for z != 0.
std::int64_t nu(std::uint32_t p, Residue zeta);

/// Smallest quadratic nonresidue modulo the odd prime p.
Residue nonsquare(std::uint32_t p);

bool is_prime(std::uint64_t n);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// base^exp, throwing InvalidArgument on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

struct FieldOptions {
  bool allow_large = false;
};

class Field;

/// Element of GF(p^m) in the polynomial basis {1, x, ..., x^{m-1}}.
///
/// Stored as the packed index sum_i c_i p^i, which is canonical. An Element
/// refers to its Field by address; the Field must outlive it.
class Element {
 public:
  Element() = default;
  Element(const Field& field, std::uint32_t index);

  const Field& field() const { return *field_; }
  bool has_field() const { return field_ != nullptr; }
  std::uint32_t index() const { return index_; }
  bool is_zero() const { return index_ == 0; }
  std::vector<std::uint32_t> coeffs() const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.field_ == b.field_ && a.index_ == b.index_;
  }

 private:
  const Field* field_ = nullptr;
  std::uint32_t index_ = 0;
};

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator-(const Element& a);
Element operator*(const Element& a, const Element& b);
Element operator*(Residue lambda, const Element& a);

Element inverse(const Element& a);

/// Square-and-multiply. With base_nonzero the exponent is first reduced
/// modulo p^m - 1; otherwise it is used as given.
Element pow(const Element& a, std::uint64_t exponent, bool base_nonzero = false);

/// Absolute trace a + a^p + ... + a^{p^{m-1}}.
Residue trace(const Element& a);

/// Smallest t >= 0 with generator^t = c.
std::uint64_t discrete_log(const Element& c);

/// GF(p^m) with precomputed exponent, logarithm and trace tables.
///
/// The modulus is the lexicographically smallest monic irreducible of degree
/// m (coefficients compared from the constant term upward); the generator is
/// the lexicographically smallest primitive element under the same ordering.
/// All operations are const and safe for concurrent use.
class Field {
 public:
  static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t m,
                                           FieldOptions options = {});

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t order() const { return q_; }

  /// Monic modulus, constant term first, m + 1 coefficients.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Element zero() const { return Element(*this, 0); }
  Element one() const { return Element(*this, 1); }
  Element generator() const { return Element(*this, exp_[1]); }
  Element element(std::uint32_t index) const;
  Element from_coeffs(std::span<const std::uint32_t> coeffs) const;
  Element from_residue(Residue r) const;
  Element generator_power(std::uint64_t t) const;
  /// Polynomial basis element x^i.
  Element basis(std::uint32_t i) const;

  // Index-level kernels used by the enumeration loops. Arguments are packed
  // indices in [0, order()).
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t s = std::uint64_t{log_[a]} + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  std::uint32_t scale(std::uint32_t a, std::uint32_t lambda) const;
  std::uint32_t inv(std::uint32_t a) const;
  /// a^e with e interpreted as a positive integer exponent (0^e = 0 for e > 0).
  std::uint32_t pow_index(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t trace_value(std::uint32_t a) const { return trace_[a]; }
  std::uint32_t log(std::uint32_t a) const { return log_[a]; }
  std::uint32_t exp(std::uint64_t t) const { return exp_[t % (q_ - 1)]; }
  std::uint32_t digit(std::uint32_t a, std::uint32_t i) const {
    return (a / pow_p_[i]) % p_;
  }

  /// Element ranked r-th in lexicographic order with c_0 most significant.
  std::uint32_t lex_rank_to_index(std::uint32_t r) const;

 private:
  Field() = default;

  void find_modulus();
  void find_generator();
  void build_tables();

  std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a,
                                         const std::vector<std::uint32_t>& b) const;
  std::vector<std::uint32_t> poly_pow(std::vector<std::uint32_t> a,
                                      std::uint64_t e) const;
  std::vector<std::uint32_t> digits(std::uint32_t index) const;
  std::uint32_t pack(std::span<const std::uint32_t> coeffs) const;

  std::uint32_t p_ = 0;
  std::uint32_t m_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;
  std::vector<std::uint32_t> generator_coeffs_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> trace_;
};

inline std::shared_ptr<const Field> make_field(std::uint32_t p, std::uint32_t m,
                                               FieldOptions options = {}) {
  return Field::make(p, m, options);
}

/// Parses "a0,a1,...,a_{m-1}" (missing high coefficients are zero) or "g^t".
Element parse_element(const Field& field, std::string_view text);

std::string format_element(const Element& a);

}  // namespace bentcodes

#endif  // BENTCODES_FIELD_HPP
