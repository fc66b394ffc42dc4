#include "bentcodes/catalog.hpp"

#include <numeric>
#include <sstream>

#include "bentcodes/errors.hpp"

namespace bentcodes {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// x^{p^a} as an exponent, with a reduced mod m since x^{p^m} = x.
std::uint64_t frobenius_exponent(const Field& f, std::uint64_t a) {
  return checked_pow(f.p(), a % f.m());
}

// Reduce a positive exponent into [1, p^m - 1]; the map x -> x^e is unchanged.
std::uint64_t reduce_exponent(const Field& f, std::uint64_t e) {
  if (e == 0) return 0;
  const std::uint64_t n = f.order() - 1;
  const std::uint64_t r = e % n;
  return r == 0 ? n : r;
}

bool is_primitive(const Element& u) {
  if (u.is_zero()) return false;
  const std::uint64_t n = u.field().order() - 1;
  return std::gcd(discrete_log(u), n) == 1;
}

void require_same_field(const Element& e, const Field& f, const char* name) {
  if (!e.has_field()) throw InvalidFamily(std::string(name) + " is not set");
  if (&e.field() != &f) throw FieldMismatch(std::string(name) + " belongs to another field");
}

std::string element_label(const Element& e) {
  if (!e.has_field()) return "?";
  if (e.is_zero()) return "0";
  return "g^" + std::to_string(discrete_log(e));
}

}  // namespace

std::string family_name(const FamilySpec& spec) {
  return std::visit(overloaded{
                        [](const PlanarA&) { return std::string("planar-a"); },
                        [](const PlanarB&) { return std::string("planar-b"); },
                        [](const PlanarC&) { return std::string("planar-c"); },
                        [](const PlanarD&) { return std::string("planar-d"); },
                        [](const PlanarE&) { return std::string("planar-e"); },
                        [](const Gold&) { return std::string("gold"); },
                        [](const Kasami&) { return std::string("kasami"); },
                        [](const HG&) { return std::string("hg"); },
                        [](const PolyForm&) { return std::string("poly"); },
                    },
                    spec);
}

std::string describe_params(const FamilySpec& spec) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const PlanarA& s) { os << "c=" << element_label(s.c); },
                 [&](const PlanarB& s) { os << "c=" << element_label(s.c) << ", k=" << s.k; },
                 [&](const PlanarC& s) { os << "c=" << element_label(s.c); },
                 [&](const PlanarD& s) {
                   os << "c=" << element_label(s.c) << ", u=" << element_label(s.u);
                 },
                 [&](const PlanarE& s) {
                   os << "c=" << element_label(s.c) << ", k=" << s.k << ", s=" << s.s
                      << ", u=" << element_label(s.u);
                 },
                 [&](const Gold& s) { os << "c=" << element_label(s.c) << ", j=" << s.j; },
                 [&](const Kasami& s) { os << "c=" << element_label(s.c); },
                 [&](const HG& s) { os << "s=" << s.s; },
                 [&](const PolyForm& s) {
                   os << "coeffs=[";
                   for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
                     os << (i ? "," : "") << element_label(s.coeffs[i]);
                   }
                   os << "]";
                 },
             },
             spec);
  return os.str();
}

std::optional<std::string> violated_condition(const FamilySpec& spec, const Field& f) {
  const std::uint32_t p = f.p();
  const std::uint32_t m = f.m();
  using R = std::optional<std::string>;
  return std::visit(
      overloaded{
          [&](const PlanarA& s) -> R {
            require_same_field(s.c, f, "c");
            if (s.c.is_zero()) return "c != 0";
            return std::nullopt;
          },
          [&](const PlanarB& s) -> R {
            require_same_field(s.c, f, "c");
            if (s.c.is_zero()) return "c != 0";
            if ((m / std::gcd(m, s.k)) % 2 == 0) return "m/gcd(m,k) odd";
            return std::nullopt;
          },
          [&](const PlanarC& s) -> R {
            require_same_field(s.c, f, "c");
            if (p != 3) return "p = 3";
            if (m % 2 == 0) return "m odd";
            if (s.c.is_zero()) return "c != 0";
            return std::nullopt;
          },
          [&](const PlanarD& s) -> R {
            require_same_field(s.c, f, "c");
            require_same_field(s.u, f, "u");
            if (p != 3) return "p = 3";
            if (m % 2 == 0) return "m odd";
            if (s.c.is_zero()) return "c != 0";
            if (s.u.is_zero()) return "u != 0";
            return std::nullopt;
          },
          [&](const PlanarE& s) -> R {
            require_same_field(s.c, f, "c");
            require_same_field(s.u, f, "u");
            if (m != 3 * s.k) return "m = 3k";
            if (std::gcd(s.k, 3u) != 1) return "gcd(k,3) = 1";
            if ((static_cast<std::int64_t>(s.k) - s.s) % 3 != 0) return "k - s = 0 (mod 3)";
            if (s.s == s.k) return "s != k";
            if ((s.k / std::gcd(s.k, s.s)) % 2 == 0) return "k/gcd(k,s) odd";
            if (!is_primitive(s.u)) return "u primitive";
            if (s.c.is_zero()) return "c != 0";
            return std::nullopt;
          },
          [&](const Gold& s) -> R {
            require_same_field(s.c, f, "c");
            if (s.j < 1 || s.j > m) return "1 <= j <= m";
            if (s.c.is_zero()) return "c != 0";
            return std::nullopt;
          },
          [&](const Kasami& s) -> R {
            require_same_field(s.c, f, "c");
            if (m % 2 != 0) return "m even";
            if (!kasami_valid(s.c)) return "c + c^{p^{m/2}} != 0";
            return std::nullopt;
          },
          [&](const HG& s) -> R {
            if (m % 2 == 0) return "m odd";
            if (s.s < 1 || s.s > m - 1) return "1 <= s <= 2l";
            if (std::gcd(s.s, m) != 1) return "gcd(s, 2l+1) = 1";
            return std::nullopt;
          },
          [&](const PolyForm& s) -> R {
            if (s.coeffs.size() > m / 2 + 1) return "at most floor(m/2)+1 coefficients";
            for (const auto& c : s.coeffs) require_same_field(c, f, "c_i");
            return std::nullopt;
          },
      },
      spec);
}

void validate(const FamilySpec& spec, const Field& field) {
  if (auto v = violated_condition(spec, field)) {
    throw InvalidFamily(family_name(spec) + ": condition violated: " + *v);
  }
}

std::optional<std::vector<Term>> planar_map(const FamilySpec& spec, const Field& f) {
  validate(spec, f);
  using R = std::optional<std::vector<Term>>;
  const Element one = f.one();
  return std::visit(
      overloaded{
          [&](const PlanarA&) -> R { return std::vector<Term>{{one, 2}}; },
          [&](const PlanarB& s) -> R {
            return std::vector<Term>{{one, reduce_exponent(f, frobenius_exponent(f, s.k) + 1)}};
          },
          [&](const PlanarC&) -> R { return std::vector<Term>{{one, 10}, {-one, 6}, {-one, 2}}; },
          [&](const PlanarD& s) -> R {
            return std::vector<Term>{{one, 10}, {-s.u, 6}, {-(s.u * s.u), 2}};
          },
          [&](const PlanarE& s) -> R {
            const std::uint64_t pk = frobenius_exponent(f, s.k);
            const Element upk = pow(s.u, pk - 1, true);
            return std::vector<Term>{
                {one, reduce_exponent(f, frobenius_exponent(f, s.s) + 1)},
                {-upk, reduce_exponent(f, pk + frobenius_exponent(f, 2 * s.k + s.s))}};
          },
          [&](const Gold& s) -> R {
            return std::vector<Term>{{one, reduce_exponent(f, frobenius_exponent(f, s.j) + 1)}};
          },
          [&](const Kasami&) -> R {
            return std::vector<Term>{{one, frobenius_exponent(f, f.m() / 2) + 1}};
          },
          [&](const HG&) -> R { return std::nullopt; },
          [&](const PolyForm&) -> R { return std::nullopt; },
      },
      spec);
}

namespace {

Element family_coefficient(const FamilySpec& spec) {
  return std::visit(overloaded{
                        [](const PlanarA& s) { return s.c; },
                        [](const PlanarB& s) { return s.c; },
                        [](const PlanarC& s) { return s.c; },
                        [](const PlanarD& s) { return s.c; },
                        [](const PlanarE& s) { return s.c; },
                        [](const Gold& s) { return s.c; },
                        [](const Kasami& s) { return s.c; },
                        [](const HG&) { return Element(); },
                        [](const PolyForm&) { return Element(); },
                    },
                    spec);
}

}  // namespace

std::vector<Term> trace_terms(const FamilySpec& spec, const Field& f) {
  validate(spec, f);
  if (const auto* hg = std::get_if<HG>(&spec)) {
    auto terms = hg_build(f, hg->s);
    for (auto& t : terms) t.exponent *= 2;
    return terms;
  }
  if (const auto* poly = std::get_if<PolyForm>(&spec)) {
    std::vector<Term> terms;
    for (std::uint32_t i = 0; i < poly->coeffs.size(); ++i) {
      terms.push_back({poly->coeffs[i], frobenius_exponent(f, i) + 1});
    }
    return terms;
  }
  auto terms = *planar_map(spec, f);
  const Element c = family_coefficient(spec);
  for (auto& t : terms) t.coeff = c * t.coeff;
  return terms;
}

QFunction make_qfunction(const FamilySpec& spec, std::shared_ptr<const Field> field) {
  auto terms = trace_terms(spec, *field);
  return QFunction::from_terms(std::move(field), std::move(terms));
}

Residue eval_family(const FamilySpec& spec, const Element& x) {
  const Field& f = x.field();
  std::uint32_t sum = 0;
  for (const auto& t : trace_terms(spec, f)) {
    sum = (sum + trace(t.coeff * pow(x, t.exponent)).value) % f.p();
  }
  return Residue{sum};
}

bool gold_is_bent(std::uint32_t p, std::uint32_t m, std::uint32_t j, std::uint64_t t) {
  if (j < 1 || j > m) throw InvalidArgument("gold_is_bent: need 1 <= j <= m");
  const std::int64_t q = static_cast<std::int64_t>(checked_pow(p, m));
  if (t > static_cast<std::uint64_t>(q - 2)) throw InvalidArgument("gold_is_bent: t > p^m - 2");
  const std::int64_t divisor = static_cast<std::int64_t>(checked_pow(p, std::gcd(2 * j, m))) - 1;
  const std::int64_t value =
      (q - 1) / 2 - static_cast<std::int64_t>(t) * (static_cast<std::int64_t>(checked_pow(p, j)) - 1);
  return value % divisor != 0;
}

bool kasami_valid(const Element& c) {
  const Field& f = c.field();
  if (f.m() % 2 != 0) throw InvalidArgument("kasami_valid: m must be even");
  return !(c + pow(c, checked_pow(f.p(), f.m() / 2))).is_zero();
}

std::vector<Term> hg_build(const Field& f, std::uint32_t s) {
  const std::uint32_t m = f.m();
  if (m % 2 == 0) throw InvalidFamily("hg: condition violated: m odd");
  if (s < 1 || s > m - 1) throw InvalidFamily("hg: condition violated: 1 <= s <= 2l");
  if (std::gcd(s, m) != 1) throw InvalidFamily("hg: condition violated: gcd(s, 2l+1) = 1");
  const std::uint32_t l = (m - 1) / 2;

  std::vector<int> b(m, 0);  // 0 = unassigned
  auto assign = [&](std::uint32_t idx, int value) {
    if (b[idx] == 0) {
      b[idx] = value;
    } else if (b[idx] != value) {
      throw InvalidFamily("hg: inconsistent b-sequence at index " + std::to_string(idx));
    }
  };
  for (std::uint32_t i = 0; i <= l; ++i) {
    assign(static_cast<std::uint32_t>((std::uint64_t{i} * s) % m), i % 2 == 0 ? 1 : -1);
  }
  for (std::uint32_t i = 1; i < m; ++i) {
    if (b[i] != 0) assign(m - i, b[i]);
  }
  for (std::uint32_t i = 0; i < m; ++i) {
    if (b[i] == 0) throw InvalidFamily("hg: b-sequence left index " + std::to_string(i) + " unset");
  }

  const std::uint32_t p = f.p();
  std::vector<Term> terms;
  terms.push_back({f.from_residue(Residue{(p + 1) / 2}), (checked_pow(p, 0) + 1) / 2});
  for (std::uint32_t i = 1; i <= l; ++i) {
    const int bi = b[(2 * i) % m];
    const Residue u{bi == 1 ? 1u : p - 1};
    terms.push_back({f.from_residue(u), (checked_pow(p, 2 * i) + 1) / 2});
  }
  return terms;
}

QFunction hg_q(std::shared_ptr<const Field> field, std::uint32_t s) {
  return make_qfunction(HG{s}, std::move(field));
}

std::optional<int> epsilon_predict(const FamilySpec& spec, const Field& f) {
  const std::uint32_t m = f.m();
  if (m % 2 != 0) throw InvalidArgument("epsilon_predict: m must be even");
  validate(spec, f);
  const std::int64_t half = (f.p() - 1) / 2;
  auto planar_sign = [&](const Element& c) {
    const int eta = discrete_log(c) % 2 == 0 ? 1 : -1;
    const std::int64_t e = half * half * (m / 2) + 1;
    return e % 2 == 0 ? eta : -eta;
  };
  using R = std::optional<int>;
  return std::visit(overloaded{
                        [&](const PlanarA& s) -> R { return planar_sign(s.c); },
                        [&](const PlanarB& s) -> R { return planar_sign(s.c); },
                        [&](const Gold& s) -> R {
                          if ((m / std::gcd(m, s.j)) % 2 == 1) return planar_sign(s.c);
                          if (2 * s.j == m && kasami_valid(s.c)) return -1;
                          return std::nullopt;
                        },
                        [&](const Kasami&) -> R { return -1; },
                        [&](const auto&) -> R { return std::nullopt; },
                    },
                    spec);
}

std::optional<bool> claimed_bent(const FamilySpec& spec, const Field& f) {
  validate(spec, f);
  if (const auto* g = std::get_if<Gold>(&spec)) {
    return gold_is_bent(f.p(), f.m(), g->j, discrete_log(g->c));
  }
  if (std::holds_alternative<PolyForm>(spec)) return std::nullopt;
  return true;
}

}  // namespace bentcodes
