#include "bentcodes/codes.hpp"

#include <algorithm>
#include <sstream>

#include "bentcodes/errors.hpp"

namespace bentcodes {

namespace {

void require_field(const Element& b, const DefiningSet& d) {
  if (&b.field() != d.field.get()) throw FieldMismatch("b belongs to another field");
}

std::int64_t weight_on(const Field& f, std::uint32_t b, const std::vector<std::uint32_t>& elements) {
  std::int64_t w = 0;
  for (auto x : elements) w += f.trace_value(f.mul(b, x)) != 0;
  return w;
}

WeightDistribution distinct_codewords(const std::vector<std::int64_t>& profile, std::int64_t p,
                                      int m, int k) {
  // Every codeword is hit by exactly p^{m-k} values of b.
  const std::int64_t repeat = ipow(p, m - k);
  WeightDistribution raw;
  for (auto w : profile) ++raw[w];
  WeightDistribution out;
  for (const auto& [w, count] : raw) {
    if (count % repeat != 0) throw TheoryViolation("weight profile not a multiple of p^{m-k}");
    out[w] = count / repeat;
  }
  return out;
}

}  // namespace

std::vector<std::uint32_t> codeword(const Element& b, const DefiningSet& d) {
  require_field(b, d);
  const Field& f = *d.field;
  std::vector<std::uint32_t> c(d.size());
  std::transform(d.elements.begin(), d.elements.end(), c.begin(),
                 [&](std::uint32_t x) { return f.trace_value(f.mul(b.index(), x)); });
  return c;
}

std::vector<std::int64_t> weight_profile_direct(const DefiningSet& d) {
  const Field& f = *d.field;
  std::vector<std::int64_t> out(f.order());
  for (std::uint32_t b = 0; b < f.order(); ++b) out[b] = weight_on(f, b, d.elements);
  return out;
}

std::vector<std::int64_t> weight_profile_fast(const DefiningSet& d) {
  if (!d.origin || d.kind != SetKind::Full) {
    throw InvalidArgument("fast weight path needs a full defining set with a quadratic origin");
  }
  const auto nb = annihilator_counts(*d.origin);
  const auto size = static_cast<std::int64_t>(d.size());
  if (nb[0] != size) throw InvalidArgument("defining set is not the zero set of its origin");
  std::vector<std::int64_t> out(nb.size());
  std::transform(nb.begin(), nb.end(), out.begin(), [size](std::int64_t n) { return size - n; });
  return out;
}

WeightDistribution weight_distribution(const DefiningSet& d) {
  const bool fast = d.origin && d.kind == SetKind::Full;
  const auto profile = fast ? weight_profile_fast(d) : weight_profile_direct(d);
  return distinct_codewords(profile, d.field->p(), static_cast<int>(d.field->m()), dimension(d));
}

WeightDistribution weight_distribution_direct(const DefiningSet& d) {
  return distinct_codewords(weight_profile_direct(d), d.field->p(),
                            static_cast<int>(d.field->m()), dimension(d));
}

ResidueMatrix trace_matrix(const DefiningSet& d) {
  const Field& f = *d.field;
  ResidueMatrix t(f.m(), static_cast<Eigen::Index>(d.size()));
  for (std::uint32_t i = 0; i < f.m(); ++i) {
    const std::uint32_t beta = f.basis(i).index();
    for (std::size_t j = 0; j < d.size(); ++j) {
      t(i, static_cast<Eigen::Index>(j)) = f.trace_value(f.mul(beta, d.elements[j]));
    }
  }
  return t;
}

int dimension(const DefiningSet& d) {
  return static_cast<int>(rank_mod_p(trace_matrix(d), std::int64_t{d.field->p()}));
}

ResidueMatrix generator_matrix(const DefiningSet& d) {
  auto [reduced, rank] = rref_mod_p(trace_matrix(d), std::int64_t{d.field->p()});
  return reduced.topRows(rank);
}

WeightDistribution theoretical_wd(std::uint32_t p, int m, int epsilon, bool punctured) {
  if (m < 2) throw InvalidArgument("theoretical_wd needs m >= 2");
  const std::int64_t pp = p;
  const std::int64_t scale = punctured ? 1 : pp - 1;
  WeightDistribution t;
  auto add = [&t](std::int64_t w, std::int64_t count) {
    if (count != 0) t[w] += count;
  };
  if (m % 2 == 1) {
    const std::int64_t h = ipow(pp, (m - 3) / 2);
    const std::int64_t g = ipow(pp, (m - 1) / 2);
    add(scale * (ipow(pp, m - 2) - h), (pp - 1) / 2 * (ipow(pp, m - 1) + g));
    add(scale * ipow(pp, m - 2), ipow(pp, m - 1) - 1);
    add(scale * (ipow(pp, m - 2) + h), (pp - 1) / 2 * (ipow(pp, m - 1) - g));
  } else {
    if (epsilon != 1 && epsilon != -1) throw InvalidArgument("even m needs epsilon = +1 or -1");
    const std::int64_t e = epsilon;
    const std::int64_t h = ipow(pp, (m - 2) / 2);
    add(scale * ipow(pp, m - 2), ipow(pp, m - 1) + e * (pp - 1) * h - 1);
    add(scale * (ipow(pp, m - 2) + e * h), (pp - 1) * (ipow(pp, m - 1) - e * h));
  }
  return t;
}

DefiningSet puncture(const DefiningSet& d) {
  const Field& f = *d.field;
  const std::uint32_t p = f.p();
  std::vector<char> member(f.order(), 0);
  for (auto x : d.elements) member[x] = 1;

  DefiningSet out;
  out.field = d.field;
  out.kind = SetKind::Punctured;
  out.origin = d.origin;
  for (auto x : d.elements) {
    for (std::uint32_t y = 2; y < p; ++y) {
      if (!member[f.scale(x, y)]) {
        throw InvalidArgument("defining set is not closed under prime-subfield scaling");
      }
    }
    std::uint32_t lead = 0;
    for (std::uint32_t i = 0; i < f.m() && lead == 0; ++i) lead = f.digit(x, i);
    if (lead == 1) out.elements.push_back(x);
  }
  return out;
}

void check_puncture_relation(const DefiningSet& full, const DefiningSet& punctured,
                             const Element& b) {
  require_field(b, full);
  require_field(b, punctured);
  const Field& f = *full.field;
  const std::int64_t wf = weight_on(f, b.index(), full.elements);
  const std::int64_t wp = weight_on(f, b.index(), punctured.elements);
  if (wf != static_cast<std::int64_t>(f.p() - 1) * wp) {
    throw TheoryViolation("puncture relation fails at b = " + format_element(b) + ": " +
                          std::to_string(wf) + " != (p-1) * " + std::to_string(wp));
  }
}

void check_puncture_relation(const DefiningSet& full, const DefiningSet& punctured) {
  const Field& f = *full.field;
  for (std::uint32_t b = 0; b < f.order(); ++b) {
    check_puncture_relation(full, punctured, f.element(b));
  }
}

std::int64_t griesmer_bound(std::int64_t k, std::int64_t d, std::int64_t q) {
  if (k < 1 || d < 1 || q < 2) throw InvalidArgument("griesmer_bound needs k >= 1, d >= 1, q >= 2");
  std::int64_t sum = 0;
  std::int64_t qi = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    sum += (d + qi - 1) / qi;
    if (qi <= d) qi *= q;  // once q^i > d every further term is 1
  }
  return sum;
}

GriesmerVerdict griesmer_check(std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t q) {
  GriesmerVerdict v;
  v.bound = griesmer_bound(k, d, q);
  v.meets = n == v.bound;
  v.optimal_for_n = griesmer_bound(k, d + 1, q) > n;
  return v;
}

std::string to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::Match: return "match";
    case VerdictKind::Mismatch: return "mismatch";
    case VerdictKind::NotApplicable: return "not-applicable";
  }
  return "?";
}

WeightDistribution nonzero_b_profile(const CodeReport& report) {
  const std::int64_t repeat = ipow(report.p, static_cast<int>(report.m - report.k));
  WeightDistribution out;
  for (const auto& [w, count] : report.wd) {
    const std::int64_t c = count * repeat - (w == 0 ? 1 : 0);
    if (c != 0) out[w] = c;
  }
  return out;
}

TheoryVerdict compare(const CodeReport& report, const WeightDistribution& theory) {
  TheoryVerdict v;
  if (!report.classification || !report.classification->bent) return v;
  const auto observed = nonzero_b_profile(report);
  std::vector<std::int64_t> weights;
  for (const auto& [w, c] : observed) weights.push_back(w);
  for (const auto& [w, c] : theory) weights.push_back(w);
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
  for (auto w : weights) {
    const auto o = observed.count(w) ? observed.at(w) : 0;
    const auto t = theory.count(w) ? theory.at(w) : 0;
    if (o != t) {
      v.differences.push_back("w=" + std::to_string(w) + ": computed " + std::to_string(o) +
                              ", theory " + std::to_string(t));
    }
  }
  v.kind = v.differences.empty() ? VerdictKind::Match : VerdictKind::Mismatch;
  return v;
}

CodeReport build_report(const DefiningSet& d) {
  const Field& f = *d.field;
  CodeReport r;
  r.p = f.p();
  r.m = f.m();
  r.kind = d.kind;
  r.n = static_cast<std::int64_t>(d.size());
  r.k = dimension(d);
  r.wd = weight_distribution(d);
  for (const auto& [w, count] : r.wd) {
    if (w > 0) {
      r.d = w;
      break;
    }
  }
  if (d.origin && is_quadratic(*d.origin)) {
    r.classification = classify(*d.origin);
  }
  if (r.classification && r.classification->bent && r.m >= 2) {
    r.theory = compare(r, theoretical_wd(r.p, static_cast<int>(r.m), r.classification->epsilon,
                                         d.kind == SetKind::Punctured));
  }
  if (r.k >= 1 && r.d >= 1) r.griesmer = griesmer_check(r.n, r.k, r.d, r.p);
  return r;
}

std::string enumerator_string(const WeightDistribution& wd) {
  std::ostringstream os;
  os << "1";
  for (const auto& [w, count] : wd) {
    if (w == 0) continue;
    os << "+" << count << "z^" << w;
  }
  return os.str();
}

}  // namespace bentcodes
