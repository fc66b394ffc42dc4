// Acceptance checks. One PASS/FAIL line per criterion; exit status is the
// number of failing criteria.
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bentcodes/catalog.hpp"
#include "bentcodes/cli.hpp"
#include "bentcodes/codes.hpp"
#include "bentcodes/errors.hpp"
#include "bentcodes/quadform.hpp"

using namespace bentcodes;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  failures += !o.ok;
  std::printf("%s %2d  %s%s%s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(),
              o.detail.empty() ? "" : "  -- ", o.detail.c_str());
  std::fflush(stdout);
}

CodeReport code_of(const FamilySpec& spec, std::shared_ptr<const Field> f, bool punctured) {
  const DefiningSet d = defining_set(make_qfunction(spec, f));
  return build_report(punctured ? puncture(d) : d);
}

std::string params(const CodeReport& r) {
  return "[" + std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.d) + "]";
}

// Catalog corpus: the sweep grid of every family, with the Gold and Kasami
// coefficient ranges cut to c in {g^0, ..., g^3} so the p=5, m=5 field stays
// cheap.
std::vector<FamilySpec> corpus(const Field& f) {
  std::vector<FamilySpec> out;
  for (auto& spec : cli::sweep_grid("all", f)) {
    const Element* c = nullptr;
    if (const auto* g = std::get_if<Gold>(&spec)) c = &g->c;
    if (const auto* k = std::get_if<Kasami>(&spec)) c = &k->c;
    if (c && discrete_log(*c) > 3) continue;
    out.push_back(std::move(spec));
  }
  return out;
}

std::string label(const FamilySpec& spec, const Field& f) {
  return family_name(spec) + "(" + describe_params(spec) + ") over GF(" + std::to_string(f.p()) +
         "^" + std::to_string(f.m()) + ")";
}

std::int64_t sum_counts(const WeightDistribution& wd) {
  return std::accumulate(wd.begin(), wd.end(), std::int64_t{0},
                         [](std::int64_t s, const auto& kv) { return s + kv.second; });
}

}  // namespace

int main() {
  report(1, "[80,5,48] from planar (c) at p=3, m=5", [] {
    auto f = make_field(3, 5);
    const CodeReport r = code_of(PlanarC{f->one()}, f, false);
    const std::string e = enumerator_string(r.wd);
    return Outcome{params(r) == "[80,5,48]" && e == "1+90z^48+80z^54+72z^60", params(r) + " " + e};
  });

  report(2, "same enumerator from the HG and polynomial forms", [] {
    auto f = make_field(3, 5);
    const Element two = f->from_residue(Residue{2});
    const QFunction hg =
        QFunction::from_terms(f, {Term{two, 2}, Term{two, 10}, Term{f->one(), 82}});
    const bool hg_matches_builder = format_terms(trace_terms(HG{2}, *f)) == "2x^2 + 2x^10 + x^82";
    const std::string e_hg = enumerator_string(build_report(defining_set(hg)).wd);
    const std::string e_poly =
        enumerator_string(code_of(PolyForm{{f->one(), two, f->one()}}, f, false).wd);
    const std::string want = "1+90z^48+80z^54+72z^60";
    return Outcome{hg_matches_builder && e_hg == want && e_poly == want,
                   "hg " + e_hg + ", poly " + e_poly};
  });

  report(3, "Gold p=3, m=6, j=2 with c in {1, g}", [] {
    auto f = make_field(3, 6);
    const std::set<std::string> want = {"[224,6,144] 1+504z^144+224z^162",
                                        "[260,6,162] 1+260z^162+468z^180"};
    std::set<std::string> got;
    std::ostringstream detail;
    bool predictions_agree = true;
    for (std::uint64_t t : {0u, 1u}) {
      const FamilySpec spec = Gold{f->generator_power(t), 2};
      const CodeBuild b = cli::build_code(spec, f, false);
      got.insert(params(b.report) + " " + enumerator_string(b.report.wd));
      const auto agrees = b.epsilon_agrees();
      predictions_agree = predictions_agree && agrees.value_or(false);
      detail << (t ? "; " : "") << "c=" << (t ? "g" : "1") << " -> " << params(b.report)
             << " eps " << b.report.classification->epsilon << ", predicted "
             << (b.epsilon_predicted ? std::to_string(*b.epsilon_predicted) : "none")
             << (agrees.value_or(false) ? " (agrees)" : " (DISAGREES)");
    }
    if (!predictions_agree) detail << "; FLAG: sign prediction disagrees";
    return Outcome{got == want, detail.str()};
  });

  report(4, "Kasami [20,4,12] at p=3 and [104,4,80] at p=5", [] {
    auto f3 = make_field(3, 4);
    auto f5 = make_field(5, 4);
    const CodeReport a = code_of(Kasami{f3->one()}, f3, false);
    const CodeReport b = code_of(Kasami{f5->one()}, f5, false);
    const bool ok = params(a) == "[20,4,12]" && enumerator_string(a.wd) == "1+60z^12+20z^18" &&
                    a.classification->epsilon == -1 && a.griesmer && a.griesmer->optimal_for_n &&
                    params(b) == "[104,4,80]" && enumerator_string(b.wd) == "1+520z^80+104z^100";
    return Outcome{ok, params(a) + " " + enumerator_string(a.wd) + ", " + params(b) + " " +
                           enumerator_string(b.wd)};
  });

  report(5, "punctured codes [40,5,24], [10,4,6], [26,4,20]", [] {
    auto f35 = make_field(3, 5);
    auto f34 = make_field(3, 4);
    auto f54 = make_field(5, 4);
    const CodeReport a = code_of(PlanarC{f35->one()}, f35, true);
    const CodeReport b = code_of(Kasami{f34->one()}, f34, true);
    const CodeReport c = code_of(Kasami{f54->one()}, f54, true);
    const bool ok = params(a) == "[40,5,24]" && enumerator_string(a.wd) == "1+90z^24+80z^27+72z^30" &&
                    params(b) == "[10,4,6]" && enumerator_string(b.wd) == "1+60z^6+20z^9" &&
                    b.griesmer->meets && params(c) == "[26,4,20]" &&
                    enumerator_string(c.wd) == "1+520z^20+104z^25" && c.griesmer->meets;
    return Outcome{ok, params(a) + " " + params(b) + " " + params(c)};
  });

  report(6, "N_b multiset of every Bent catalog entry at p in {3,5}, m in {3,4,5}", [] {
    int checked = 0;
    for (std::uint32_t p : {3u, 5u}) {
      for (std::uint32_t m : {3u, 4u, 5u}) {
        auto f = make_field(p, m);
        for (const auto& spec : corpus(*f)) {
          const QFunction q = make_qfunction(spec, f);
          if (!is_bent_rank(q)) continue;
          Tally observed;
          for (auto n : annihilator_counts(q)) ++observed[n];
          if (observed != theoretical_nb_distribution(p, static_cast<int>(m), classify(q).epsilon)) {
            return Outcome{false, label(spec, *f)};
          }
          ++checked;
        }
      }
    }
    return Outcome{checked > 0, std::to_string(checked) + " Bent entries"};
  });

  report(7, "rank oracle and Walsh oracle agree at p=3, m<=5", [] {
    int checked = 0, negatives = 0;
    for (std::uint32_t m = 2; m <= 5; ++m) {
      auto f = make_field(3, m);
      std::vector<QFunction> forms = {QFunction::zero(f)};
      for (const auto& spec : cli::sweep_grid("all", *f)) forms.push_back(make_qfunction(spec, f));
      if (m % 2 == 0) {
        // Kasami exponent with c failing c + c^{p^{m/2}} != 0.
        for (std::uint32_t c = 1; c < f->order(); ++c) {
          if (!kasami_valid(f->element(c))) forms.push_back(make_qfunction(Gold{f->element(c), m / 2}, f));
        }
      }
      for (const auto& q : forms) {
        if (!is_quadratic(q)) return Outcome{false, q.description() + " not quadratic"};
        const bool rank = is_bent_rank(q);
        if (rank != is_bent_walsh(q)) return Outcome{false, q.description()};
        negatives += !rank;
        ++checked;
      }
    }
    return Outcome{negatives > 0,
                   std::to_string(checked) + " forms, " + std::to_string(negatives) + " non-Bent"};
  });

  report(8, "value counts of every Bent entry match the closed form", [] {
    int checked = 0;
    for (std::uint32_t p : {3u, 5u}) {
      for (std::uint32_t m : {3u, 4u, 5u}) {
        auto f = make_field(p, m);
        for (const auto& spec : corpus(*f)) {
          const QFunction q = make_qfunction(spec, f);
          if (!is_bent_rank(q)) continue;
          const FormClassification c = classify(q);
          std::vector<std::int64_t> counts(p, 0);
          for (std::uint32_t x = 0; x < f->order(); ++x) ++counts[q.value(x)];
          for (std::uint32_t z = 0; z < p; ++z) {
            if (counts[z] != theoretical_count(p, c.type, c.rank, static_cast<int>(m), Residue{z}, c.mu)) {
              return Outcome{false, label(spec, *f)};
            }
          }
          ++checked;
        }
      }
    }
    return Outcome{checked > 0, std::to_string(checked) + " Bent entries"};
  });

  report(9, "Gold predicate agrees with the rank oracle for all (j, t) at p=3, m in {2,3,4}", [] {
    int checked = 0;
    for (std::uint32_t m : {2u, 3u, 4u}) {
      auto f = make_field(3, m);
      for (std::uint32_t j = 1; j <= m; ++j) {
        for (std::uint64_t t = 0; t + 1 < f->order(); ++t) {
          const bool rank = is_bent_rank(make_qfunction(Gold{f->generator_power(t), j}, f));
          if (rank != gold_is_bent(3, m, j, t)) {
            return Outcome{false, "m=" + std::to_string(m) + " j=" + std::to_string(j) +
                                      " t=" + std::to_string(t)};
          }
          ++checked;
        }
      }
    }
    return Outcome{true, std::to_string(checked) + " points"};
  });

  report(10, "weight sums, weight counts, puncture relation, Parseval", [] {
    int codes = 0;
    for (std::uint32_t p : {3u, 5u}) {
      for (std::uint32_t m : {3u, 4u, 5u}) {
        auto f = make_field(p, m);
        for (const auto& spec : corpus(*f)) {
          const QFunction q = make_qfunction(spec, f);
          const DefiningSet full = defining_set(q);
          const CodeReport r = build_report(full);
          if (sum_counts(r.wd) != ipow(p, static_cast<int>(r.k))) {
            return Outcome{false, "sum A_w != p^k for " + label(spec, *f)};
          }
          if (!is_bent_rank(q)) continue;
          const std::size_t nonzero_weights = r.wd.size() - 1;
          if (nonzero_weights != (m % 2 ? 3u : 2u)) {
            return Outcome{false, "weight count for " + label(spec, *f)};
          }
          check_puncture_relation(full, puncture(full));
          ++codes;
        }
      }
    }
    int functions = 0;
    for (std::uint32_t m = 1; m <= 4; ++m) {
      auto f = make_field(3, m);
      std::vector<QFunction> fs = {QFunction::zero(f)};
      if (m >= 2) {
        for (const auto& spec : corpus(*f)) fs.push_back(make_qfunction(spec, f));
      }
      std::vector<std::uint32_t> values(f->order());
      for (std::uint32_t x = 0; x < f->order(); ++x) values[x] = (x * x * x + x / 2) % 3;
      fs.push_back(QFunction::from_values(f, values, "non-quadratic"));
      for (const auto& q : fs) {
        CyclotomicInteger total(3);
        for (std::uint32_t l = 0; l < f->order(); ++l) total += norm_sq(walsh(q, f->element(l)));
        const auto want = static_cast<std::int64_t>(f->order()) * f->order();
        if (total.rational_value() != want) return Outcome{false, "Parseval: " + q.description()};
        ++functions;
      }
    }
    return Outcome{true, std::to_string(codes) + " Bent codes, " + std::to_string(functions) +
                             " Parseval sums"};
  });

  std::printf("%d criteria failed\n", failures);
  return failures;
}
