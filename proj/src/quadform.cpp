#include "bentcodes/quadform.hpp"

#include <algorithm>
#include <sstream>

#include "bentcodes/errors.hpp"

namespace bentcodes {

std::int64_t ipow(std::int64_t base, int exp) {
  if (exp < 0) throw InvalidArgument("negative exponent");
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::vector<std::uint32_t> polynomial_table(const Field& field, std::span<const Term> terms) {
  std::vector<std::uint32_t> table(field.order(), 0);
  for (const auto& term : terms) {
    if (&term.coeff.field() != &field) throw FieldMismatch("term coefficient from another field");
    const std::uint32_t c = term.coeff.index();
    if (c == 0) continue;
    for (std::uint32_t x = 0; x < field.order(); ++x) {
      table[x] = field.add(table[x], field.mul(c, field.pow_index(x, term.exponent)));
    }
  }
  return table;
}

std::string format_terms(std::span<const Term> terms) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const Field& f = t.coeff.field();
    const std::uint32_t c = t.coeff.index();
    std::string coeff;
    if (c < f.p()) {
      if (c != 1 || t.exponent == 0) coeff = std::to_string(c);
    } else {
      coeff = "g^" + std::to_string(f.log(c));
      if (t.exponent != 0) coeff = "(" + coeff + ")";
    }
    os << coeff;
    if (t.exponent == 1) {
      os << "x";
    } else if (t.exponent > 1) {
      os << "x^" << t.exponent;
    }
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------

QFunction QFunction::from_terms(std::shared_ptr<const Field> field, std::vector<Term> terms,
                                std::string description) {
  QFunction q;
  q.field_ = std::move(field);
  const Field& f = *q.field_;
  q.values_.assign(f.order(), 0);
  for (const auto& term : terms) {
    if (&term.coeff.field() != &f) throw FieldMismatch("term coefficient from another field");
    const std::uint32_t c = term.coeff.index();
    if (c == 0) continue;
    for (std::uint32_t x = 0; x < f.order(); ++x) {
      const std::uint32_t t = f.trace_value(f.mul(c, f.pow_index(x, term.exponent)));
      q.values_[x] = (q.values_[x] + t) % f.p();
    }
  }
  q.description_ = description.empty() ? "Tr(" + format_terms(terms) + ")" : std::move(description);
  q.terms_ = std::move(terms);
  return q;
}

QFunction QFunction::from_values(std::shared_ptr<const Field> field,
                                 std::vector<std::uint32_t> values, std::string description) {
  if (values.size() != field->order()) throw InvalidArgument("value table has the wrong size");
  for (auto v : values) {
    if (v >= field->p()) throw InvalidArgument("value table entry not below p");
  }
  QFunction q;
  q.field_ = std::move(field);
  q.values_ = std::move(values);
  q.description_ = std::move(description);
  return q;
}

QFunction QFunction::zero(std::shared_ptr<const Field> field) {
  const auto n = field->order();
  return from_values(std::move(field), std::vector<std::uint32_t>(n, 0), "0");
}

std::string to_string(CanonicalType type) {
  switch (type) {
    case CanonicalType::I: return "I";
    case CanonicalType::II: return "II";
    case CanonicalType::III: return "III";
    case CanonicalType::Degenerate: return "degenerate";
  }
  return "?";
}

std::string to_string(MuClass mu) {
  switch (mu) {
    case MuClass::NotApplicable: return "n/a";
    case MuClass::Square: return "square";
    case MuClass::Nonsquare: return "nonsquare";
  }
  return "?";
}

// ---------------------------------------------------------------------------

bool is_homogeneous(const QFunction& q) {
  const Field& f = q.field();
  const std::uint32_t p = f.p();
  if (q.value(0) != 0) return false;
  for (std::uint32_t y = 2; y < p; ++y) {
    const std::uint64_t y2 = std::uint64_t{y} * y % p;
    for (std::uint32_t x = 1; x < f.order(); ++x) {
      if (q.value(f.scale(x, y)) != y2 * q.value(x) % p) return false;
    }
  }
  return true;
}

namespace {

ResidueMatrix raw_gram(const QFunction& q) {
  const Field& f = q.field();
  const auto m = static_cast<Eigen::Index>(f.m());
  const std::int64_t p = f.p();
  ResidueMatrix g(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const std::uint32_t bi = f.basis(static_cast<std::uint32_t>(i)).index();
      const std::uint32_t bj = f.basis(static_cast<std::uint32_t>(j)).index();
      const std::int64_t v = std::int64_t{q.value(f.add(bi, bj))} - q.value(bi) - q.value(bj);
      g(i, j) = detail::mod_p(v, p);
    }
  }
  return g;
}

bool matches_polar_form(const QFunction& q, const ResidueMatrix& g) {
  const Field& f = q.field();
  const std::int64_t p = f.p();
  ResidueVector v(f.m());
  for (std::uint32_t x = 0; x < f.order(); ++x) {
    for (std::uint32_t i = 0; i < f.m(); ++i) v(i) = f.digit(x, i);
    const std::int64_t form = (v.transpose() * g * v).value() % p;
    if (form != 2 * std::int64_t{q.value(x)} % p) return false;
  }
  return true;
}

}  // namespace

bool is_quadratic(const QFunction& q) {
  return is_homogeneous(q) && matches_polar_form(q, raw_gram(q));
}

ResidueMatrix gram_matrix(const QFunction& q) {
  if (!is_homogeneous(q)) {
    throw NotQuadratic(q.description() + " fails Q(yx) = y^2 Q(x)");
  }
  ResidueMatrix g = raw_gram(q);
  if (!matches_polar_form(q, g)) {
    throw NotQuadratic(q.description() + " is homogeneous but not a quadratic form");
  }
  return g;
}

int form_rank(const QFunction& q) {
  return static_cast<int>(rank_mod_p(gram_matrix(q), std::int64_t{q.field().p()}));
}

bool is_bent_rank(const QFunction& q) {
  return form_rank(q) == static_cast<int>(q.field().m());
}

WalshValue walsh(const QFunction& q, const Element& lambda) {
  const Field& f = q.field();
  if (&lambda.field() != &f) throw FieldMismatch("walsh: lambda from another field");
  const std::uint32_t p = f.p();
  WalshValue w(p);
  for (std::uint32_t x = 0; x < f.order(); ++x) {
    const std::uint32_t t = f.trace_value(f.mul(lambda.index(), x));
    w[(q.value(x) + p - t) % p] += 1;
  }
  return w;
}

std::optional<std::int64_t> walsh_norm_sq(const WalshValue& w) {
  return norm_sq(w).rational_value();
}

bool is_bent_walsh(const QFunction& q) {
  const Field& f = q.field();
  const std::int64_t target = f.order();
  for (std::uint32_t lambda = 0; lambda < f.order(); ++lambda) {
    if (walsh_norm_sq(walsh(q, f.element(lambda))) != target) return false;
  }
  return true;
}

DefiningSet zero_set(const QFunction& q) {
  const Field& f = q.field();
  DefiningSet d;
  d.field = q.field_ptr();
  d.kind = SetKind::Full;
  d.origin = std::make_shared<const QFunction>(q);
  for (std::uint32_t t = 0; t + 1 < f.order(); ++t) {
    const std::uint32_t x = f.exp(t);
    if (q.value(x) == 0) d.elements.push_back(x);
  }
  return d;
}

std::int64_t theoretical_count(std::uint32_t p, CanonicalType type, int rank, int m,
                               Residue zeta, MuClass mu) {
  if (rank < 0 || rank > m) throw InvalidArgument("rank out of range");
  const std::int64_t pp = p;
  switch (type) {
    case CanonicalType::I:
      if (rank % 2 != 0) throw InvalidArgument("Type I needs even rank");
      return ipow(pp, m - 1) + nu(p, zeta) * ipow(pp, m - rank / 2 - 1);
    case CanonicalType::III:
      if (rank % 2 != 0 || rank == 0) throw InvalidArgument("Type III needs even positive rank");
      return ipow(pp, m - 1) - nu(p, zeta) * ipow(pp, m - rank / 2 - 1);
    case CanonicalType::II: {
      if (rank % 2 != 1) throw InvalidArgument("Type II needs odd rank");
      if (mu == MuClass::NotApplicable) throw InvalidArgument("Type II needs a mu class");
      const Residue mu_value = mu == MuClass::Square ? Residue{1} : nonsquare(p);
      const Residue prod{static_cast<std::uint32_t>(std::uint64_t{mu_value.value} * zeta.value % p)};
      return ipow(pp, m - 1) + quadratic_character(p, prod) * ipow(pp, m - (rank + 1) / 2);
    }
    case CanonicalType::Degenerate:
      break;
  }
  throw InvalidArgument("no counting formula for a degenerate form");
}

namespace {

bool counts_match(const std::vector<std::int64_t>& counts, std::uint32_t p, CanonicalType type,
                  int rank, int m, MuClass mu) {
  for (std::uint32_t z = 0; z < p; ++z) {
    if (counts[z] != theoretical_count(p, type, rank, m, Residue{z}, mu)) return false;
  }
  return true;
}

}  // namespace

FormClassification classify(const QFunction& q) {
  const Field& f = q.field();
  const std::uint32_t p = f.p();
  const int m = static_cast<int>(f.m());
  const std::int64_t pp = p;

  FormClassification c;
  c.rank = form_rank(q);
  c.bent = c.rank == m;

  std::vector<std::int64_t> counts(p, 0);
  for (auto v : q.values()) ++counts[v];
  c.zero_count = counts[0] - 1;

  if (c.bent && m % 2 == 0) {
    const std::int64_t diff = c.zero_count - (ipow(pp, m - 1) - 1);
    const std::int64_t unit = (pp - 1) * ipow(pp, (m - 2) / 2);
    if (diff == unit) {
      c.epsilon = 1;
    } else if (diff == -unit) {
      c.epsilon = -1;
    } else {
      throw TheoryViolation("Bent form " + q.description() + " has " +
                            std::to_string(c.zero_count) + " nonzero zeros, fitting neither sign");
    }
    c.type = c.epsilon == 1 ? CanonicalType::I : CanonicalType::III;
    return c;
  }

  if (c.bent) {
    if (c.zero_count != ipow(pp, m - 1) - 1) {
      throw TheoryViolation("Bent form " + q.description() + " with odd m has " +
                            std::to_string(c.zero_count) + " nonzero zeros");
    }
    c.type = CanonicalType::II;
    const std::int64_t base = ipow(pp, m - 1);
    const std::int64_t delta = ipow(pp, (m - 1) / 2);
    if (counts[1 % p] == base + delta) {
      c.mu = MuClass::Square;
    } else if (counts[1 % p] == base - delta) {
      c.mu = MuClass::Nonsquare;
    } else {
      throw TheoryViolation("Bent form " + q.description() + " matches no Type II count");
    }
    return c;
  }

  // Not Bent: match the counting templates at the observed rank.
  if (c.rank % 2 == 0) {
    if (counts_match(counts, p, CanonicalType::I, c.rank, m, MuClass::NotApplicable)) {
      c.type = CanonicalType::I;
    } else if (c.rank > 0 &&
               counts_match(counts, p, CanonicalType::III, c.rank, m, MuClass::NotApplicable)) {
      c.type = CanonicalType::III;
    }
  } else {
    for (MuClass mu : {MuClass::Square, MuClass::Nonsquare}) {
      if (counts_match(counts, p, CanonicalType::II, c.rank, m, mu)) {
        c.type = CanonicalType::II;
        c.mu = mu;
        break;
      }
    }
  }
  return c;
}

std::int64_t annihilator_count(const QFunction& q, const Element& b) {
  const Field& f = q.field();
  if (&b.field() != &f) throw FieldMismatch("annihilator_count: b from another field");
  std::int64_t n = 0;
  for (std::uint32_t x = 1; x < f.order(); ++x) {
    if (q.value(x) == 0 && f.trace_value(f.mul(b.index(), x)) == 0) ++n;
  }
  return n;
}

std::vector<std::int64_t> annihilator_counts(const QFunction& q) {
  const Field& f = q.field();
  std::vector<std::uint32_t> zeros;
  for (std::uint32_t x = 1; x < f.order(); ++x) {
    if (q.value(x) == 0) zeros.push_back(x);
  }
  std::vector<std::int64_t> out(f.order(), 0);
  for (std::uint32_t b = 0; b < f.order(); ++b) {
    std::int64_t n = 0;
    for (auto x : zeros) n += f.trace_value(f.mul(b, x)) == 0;
    out[b] = n;
  }
  return out;
}

Tally theoretical_nb_distribution(std::uint32_t p, int m, int epsilon) {
  if (m < 2) throw InvalidArgument("N_b distribution needs m >= 2");
  const std::int64_t pp = p;
  Tally t;
  auto add = [&t](std::int64_t value, std::int64_t count) {
    if (count != 0) t[value] += count;
  };
  if (m % 2 == 0) {
    if (epsilon != 1 && epsilon != -1) throw InvalidArgument("even m needs epsilon = +1 or -1");
    const std::int64_t e = epsilon;
    const std::int64_t h = ipow(pp, (m - 2) / 2);
    const std::int64_t size = ipow(pp, m - 1) + e * (pp - 1) * h - 1;
    add(size, 1);
    add(ipow(pp, m - 2) - 1, (pp - 1) * (ipow(pp, m - 1) - e * h));
    add(ipow(pp, m - 2) + e * (pp - 1) * h - 1, size);
  } else {
    const std::int64_t h = ipow(pp, (m - 3) / 2);
    const std::int64_t g = ipow(pp, (m - 1) / 2);
    add(ipow(pp, m - 1) - 1, 1);
    add(ipow(pp, m - 2) - 1, ipow(pp, m - 1) - 1);
    add(ipow(pp, m - 2) + (pp - 1) * h - 1, (pp - 1) / 2 * (ipow(pp, m - 1) + g));
    add(ipow(pp, m - 2) - (pp - 1) * h - 1, (pp - 1) / 2 * (ipow(pp, m - 1) - g));
  }
  return t;
}

namespace {

std::string format_tally(const Tally& t) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [v, n] : t) {
    os << (first ? "" : ", ") << v << ":" << n;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace

Tally nb_distribution(const QFunction& q) {
  const FormClassification c = classify(q);
  if (!c.bent) {
    throw TheoryViolation(q.description() + " is not Bent (rank " + std::to_string(c.rank) + ")");
  }
  Tally observed;
  for (auto n : annihilator_counts(q)) ++observed[n];
  const Tally expected =
      theoretical_nb_distribution(q.field().p(), static_cast<int>(q.field().m()), c.epsilon);
  if (observed != expected) {
    throw TheoryViolation("N_b distribution " + format_tally(observed) + " differs from " +
                          format_tally(expected));
  }
  return observed;
}

bool is_planar(const Field& field, std::span<const std::uint32_t> pi) {
  if (pi.size() != field.order()) throw InvalidArgument("map table has the wrong size");
  std::vector<char> seen(field.order());
  for (std::uint32_t a = 1; a < field.order(); ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t x = 0; x < field.order(); ++x) {
      const std::uint32_t d = field.sub(pi[field.add(x, a)], pi[x]);
      if (seen[d]) return false;
      seen[d] = 1;
    }
  }
  return true;
}

}  // namespace bentcodes
