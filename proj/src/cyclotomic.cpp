#include "bentcodes/cyclotomic.hpp"

#include <algorithm>
#include <functional>

#include "bentcodes/errors.hpp"

namespace bentcodes {

CyclotomicInteger::CyclotomicInteger(std::uint32_t p, std::vector<std::int64_t> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != p) throw InvalidArgument("cyclotomic integer needs exactly p coefficients");
}

CyclotomicInteger CyclotomicInteger::conj() const {
  CyclotomicInteger out(p());
  const std::size_t n = coeffs_.size();
  for (std::size_t j = 0; j < n; ++j) out.coeffs_[(n - j) % n] = coeffs_[j];
  return out;
}

CyclotomicInteger& CyclotomicInteger::operator+=(const CyclotomicInteger& other) {
  if (other.p() != p()) throw InvalidArgument("cyclotomic integers over different p");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  return *this;
}

CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  if (a.p() != b.p()) throw InvalidArgument("cyclotomic integers over different p");
  const std::size_t n = a.coeffs_.size();
  CyclotomicInteger out(a.p());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      out.coeffs_[(i + j) % n] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

std::optional<std::int64_t> CyclotomicInteger::rational_value() const {
  // 1, w, ..., w^{p-2} is a Z-basis, so the value is rational exactly when
  // a_1 = ... = a_{p-1}, and then equals a_0 - a_1.
  const auto first = coeffs_.begin() + 1;
  if (std::adjacent_find(first, coeffs_.end(), std::not_equal_to<>()) != coeffs_.end()) {
    return std::nullopt;
  }
  return coeffs_[0] - coeffs_[1];
}

bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  if (a.p() != b.p()) return false;
  const std::int64_t shift = a.coeffs_[0] - b.coeffs_[0];
  for (std::size_t j = 1; j < a.coeffs_.size(); ++j) {
    if (a.coeffs_[j] - b.coeffs_[j] != shift) return false;
  }
  return true;
}

}  // namespace bentcodes
