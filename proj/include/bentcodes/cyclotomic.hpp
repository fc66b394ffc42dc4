#ifndef BENTCODES_CYCLOTOMIC_HPP
#define BENTCODES_CYCLOTOMIC_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace bentcodes {

/// An element sum_j a_j w^j of Z[w], w a primitive p-th root of unity,
/// held as a length-p coefficient vector (exponents taken mod p).
///
/// The representation is not unique: adding a constant to every coefficient
/// leaves the value unchanged because 1 + w + ... + w^{p-1} = 0.
class CyclotomicInteger {
 public:
  explicit CyclotomicInteger(std::uint32_t p) : coeffs_(p, 0) {}
  CyclotomicInteger(std::uint32_t p, std::vector<std::int64_t> coeffs);

  std::uint32_t p() const { return static_cast<std::uint32_t>(coeffs_.size()); }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t operator[](std::size_t j) const { return coeffs_[j]; }
  std::int64_t& operator[](std::size_t j) { return coeffs_[j]; }

  /// Complex conjugate: w^j -> w^{-j}.
  CyclotomicInteger conj() const;

  CyclotomicInteger& operator+=(const CyclotomicInteger& other);
  friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) {
    return a += b;
  }
  friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b);

  /// The value as an integer if it lies in Z (all non-constant coefficients
  /// equal), otherwise nullopt.
  std::optional<std::int64_t> rational_value() const;

  /// Equality of values, not of representations.
  friend bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b);

 private:
  std::vector<std::int64_t> coeffs_;
};

/// |z|^2 = z * conj(z), a real cyclotomic integer.
inline CyclotomicInteger norm_sq(const CyclotomicInteger& z) { return z * z.conj(); }

}  // namespace bentcodes

#endif  // BENTCODES_CYCLOTOMIC_HPP
