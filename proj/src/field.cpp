#include "bentcodes/field.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "bentcodes/errors.hpp"

namespace bentcodes {

int quadratic_character(std::uint32_t p, Residue a) {
  const std::uint64_t v = a.value % p;
  if (v == 0) return 0;
  // Euler's criterion.
  std::uint64_t result = 1, base = v, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

std::int64_t nu(std::uint32_t p, Residue zeta) {
  return zeta.value % p == 0 ? static_cast<std::int64_t>(p) - 1 : -1;
}

Residue nonsquare(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) throw InvalidArgument("nonsquare: p must be an odd prime");
  for (std::uint32_t a = 2; a < p; ++a) {
    if (quadratic_character(p, Residue{a}) == -1) return Residue{a};
  }
  throw InvalidArgument("nonsquare: no nonresidue found; p is not an odd prime");
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw InvalidArgument("integer overflow computing " + std::to_string(base) + "^" +
                            std::to_string(exp));
    }
    r *= base;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Element

Element::Element(const Field& field, std::uint32_t index) : field_(&field), index_(index) {
  if (index >= field.order()) throw InvalidArgument("element index out of range");
}

std::vector<std::uint32_t> Element::coeffs() const {
  std::vector<std::uint32_t> c(field_->m());
  for (std::uint32_t i = 0; i < field_->m(); ++i) c[i] = field_->digit(index_, i);
  return c;
}

namespace {

const Field& common_field(const Element& a, const Element& b) {
  if (!a.has_field() || !b.has_field()) throw InvalidArgument("uninitialised field element");
  if (&a.field() != &b.field()) throw FieldMismatch("operands belong to different fields");
  return a.field();
}

}  // namespace

Element operator+(const Element& a, const Element& b) {
  const Field& f = common_field(a, b);
  return Element(f, f.add(a.index(), b.index()));
}

Element operator-(const Element& a, const Element& b) {
  const Field& f = common_field(a, b);
  return Element(f, f.sub(a.index(), b.index()));
}

Element operator-(const Element& a) { return Element(a.field(), a.field().neg(a.index())); }

Element operator*(const Element& a, const Element& b) {
  const Field& f = common_field(a, b);
  return Element(f, f.mul(a.index(), b.index()));
}

Element operator*(Residue lambda, const Element& a) {
  return Element(a.field(), a.field().scale(a.index(), lambda.value % a.field().p()));
}

Element inverse(const Element& a) {
  if (a.is_zero()) throw InvalidArgument("inverse of zero");
  return Element(a.field(), a.field().inv(a.index()));
}

Element pow(const Element& a, std::uint64_t exponent, bool base_nonzero) {
  const Field& f = a.field();
  if (base_nonzero) {
    if (a.is_zero()) throw InvalidArgument("pow: base declared nonzero but is zero");
    exponent %= f.order() - 1;
  }
  std::uint32_t result = 1;
  std::uint32_t base = a.index();
  while (exponent > 0) {
    if (exponent & 1) result = f.mul(result, base);
    base = f.mul(base, base);
    exponent >>= 1;
  }
  return Element(f, result);
}

Residue trace(const Element& a) { return Residue{a.field().trace_value(a.index())}; }

std::uint64_t discrete_log(const Element& c) {
  if (c.is_zero()) throw InvalidArgument("discrete_log of zero");
  return c.field().log(c.index());
}

// ---------------------------------------------------------------------------
// Field

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t m, FieldOptions options) {
  if (!is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
  if (p % 2 == 0) throw InvalidArgument("p must be odd");
  if (m < 1) throw InvalidArgument("m must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > std::numeric_limits<std::uint32_t>::max()) {
      throw GuardExceeded("p^m exceeds the 32-bit element index range");
    }
  }
  if (q > kElementGuard && !options.allow_large) {
    throw GuardExceeded("p^m = " + std::to_string(q) + " exceeds the enumeration guard of " +
                        std::to_string(kElementGuard) + " elements");
  }

  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->m_ = m;
  f->q_ = static_cast<std::uint32_t>(q);
  f->pow_p_.resize(m + 1);
  f->pow_p_[0] = 1;
  for (std::uint32_t i = 1; i <= m; ++i) {
    f->pow_p_[i] = static_cast<std::uint32_t>(std::uint64_t{f->pow_p_[i - 1]} * p);
  }
  f->find_modulus();
  f->find_generator();
  f->build_tables();
  return f;
}

std::vector<std::uint32_t> Field::digits(std::uint32_t index) const {
  std::vector<std::uint32_t> c(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    c[i] = index % p_;
    index /= p_;
  }
  return c;
}

std::uint32_t Field::pack(std::span<const std::uint32_t> coeffs) const {
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) r += (coeffs[i] % p_) * pow_p_[i];
  return r;
}

std::uint32_t Field::lex_rank_to_index(std::uint32_t r) const {
  std::uint32_t index = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    const std::uint32_t c = (r / pow_p_[m_ - 1 - i]) % p_;
    index += c * pow_p_[i];
  }
  return index;
}

namespace {

// Remainder of a modulo the monic polynomial d over F_p (constant term first).
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a,
                                    const std::vector<std::uint32_t>& d, std::uint32_t p) {
  const std::size_t dd = d.size() - 1;
  for (std::size_t k = a.size(); k-- > dd;) {
    const std::uint64_t c = a[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dd; ++i) {
      const std::size_t pos = k - dd + i;
      a[pos] = static_cast<std::uint32_t>((a[pos] + (p - c) * d[i]) % p);
    }
  }
  a.resize(std::min(a.size(), dd));
  return a;
}

bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  // Exhaustive search for a monic factor of degree <= deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    std::vector<std::uint32_t> g(d + 1);
    g[d] = 1;
    for (std::uint64_t r = 0; r < count; ++r) {
      std::uint64_t v = r;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      const auto rem = poly_rem(f, g, p);
      if (std::all_of(rem.begin(), rem.end(), [](std::uint32_t c) { return c == 0; })) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

void Field::find_modulus() {
  modulus_.assign(m_ + 1, 0);
  modulus_[m_] = 1;
  if (m_ == 1) return;  // x itself; arithmetic degenerates to F_p.
  std::vector<std::uint32_t> candidate(m_ + 1);
  candidate[m_] = 1;
  for (std::uint32_t r = 0; r < q_; ++r) {
    for (std::uint32_t i = 0; i < m_; ++i) candidate[i] = (r / pow_p_[m_ - 1 - i]) % p_;
    if (candidate[0] == 0) continue;
    if (is_irreducible(candidate, p_)) {
      modulus_ = candidate;
      return;
    }
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::vector<std::uint32_t> Field::poly_mulmod(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) const {
  std::vector<std::uint32_t> prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < m_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p_);
    }
  }
  auto rem = poly_rem(std::move(prod), modulus_, p_);
  rem.resize(m_, 0);
  return rem;
}

std::vector<std::uint32_t> Field::poly_pow(std::vector<std::uint32_t> a, std::uint64_t e) const {
  std::vector<std::uint32_t> result(m_, 0);
  result[0] = 1;
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, a);
    a = poly_mulmod(a, a);
    e >>= 1;
  }
  return result;
}

void Field::find_generator() {
  const std::uint64_t order = q_ - 1;
  const auto factors = prime_factors(order);
  std::vector<std::uint32_t> unit(m_, 0);
  unit[0] = 1;
  for (std::uint32_t r = 0; r < q_; ++r) {
    const std::uint32_t idx = lex_rank_to_index(r);
    if (idx == 0) continue;
    const auto a = digits(idx);
    if (poly_pow(a, order) != unit) throw std::logic_error("modulus is not irreducible");
    const bool primitive = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t f) {
      return poly_pow(a, order / f) != unit;
    });
    if (primitive) {
      generator_coeffs_ = a;
      return;
    }
  }
  throw std::logic_error("no primitive element found");
}

void Field::build_tables() {
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  std::vector<bool> seen(q_, false);
  std::vector<std::uint32_t> cur(m_, 0);
  cur[0] = 1;
  for (std::uint32_t t = 0; t < q_ - 1; ++t) {
    const std::uint32_t idx = pack(cur);
    if (idx == 0 || seen[idx]) throw std::logic_error("generator powers repeat");
    seen[idx] = true;
    exp_[t] = idx;
    log_[idx] = t;
    cur = poly_mulmod(cur, generator_coeffs_);
  }

  trace_.assign(q_, 0);
  for (std::uint32_t a = 1; a < q_; ++a) {
    std::uint32_t sum = a;
    std::uint32_t frob = a;
    for (std::uint32_t i = 1; i < m_; ++i) {
      frob = pow_index(frob, p_);
      sum = add(sum, frob);
    }
    if (sum >= p_) throw std::logic_error("trace left the prime subfield; modulus is broken");
    trace_[a] = sum;
  }
}

Element Field::element(std::uint32_t index) const { return Element(*this, index); }

Element Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > m_) throw InvalidArgument("more than m coefficients");
  for (auto c : coeffs) {
    if (c >= p_) throw InvalidArgument("coefficient " + std::to_string(c) + " is not below p");
  }
  return Element(*this, pack(coeffs));
}

Element Field::from_residue(Residue r) const { return Element(*this, r.value % p_); }

Element Field::generator_power(std::uint64_t t) const { return Element(*this, exp(t)); }

Element Field::basis(std::uint32_t i) const {
  if (i >= m_) throw InvalidArgument("basis index out of range");
  return Element(*this, pow_p_[i]);
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    std::uint32_t d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    r += d * pow_p_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

std::uint32_t Field::neg(std::uint32_t a) const {
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    const std::uint32_t d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * pow_p_[i];
    a /= p_;
  }
  return r;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::scale(std::uint32_t a, std::uint32_t lambda) const {
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += static_cast<std::uint32_t>(std::uint64_t{a % p_} * lambda % p_) * pow_p_[i];
    a /= p_;
  }
  return r;
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw InvalidArgument("inverse of zero");
  const std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

std::uint32_t Field::pow_index(std::uint32_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t n = q_ - 1;
  return exp_[(std::uint64_t{log_[a]} * (e % n)) % n];
}

// ---------------------------------------------------------------------------

Element parse_element(const Field& field, std::string_view text) {
  auto parse_int = [&](std::string_view s, auto& out) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || s.empty()) {
      throw InvalidArgument("cannot parse field element '" + std::string(text) + "'");
    }
  };
  if (text.starts_with("g^")) {
    std::uint64_t t = 0;
    parse_int(text.substr(2), t);
    return field.generator_power(t);
  }
  std::vector<std::uint32_t> coeffs;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view part =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    std::int64_t v = 0;
    parse_int(part, v);
    const std::int64_t p = field.p();
    coeffs.push_back(static_cast<std::uint32_t>(((v % p) + p) % p));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return field.from_coeffs(coeffs);
}

std::string format_element(const Element& a) {
  std::ostringstream os;
  const auto c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  return os.str();
}

}  // namespace bentcodes
