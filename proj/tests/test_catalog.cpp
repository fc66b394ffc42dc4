#include "doctest.h"

#include "bentcodes/catalog.hpp"
#include "bentcodes/errors.hpp"
#include "bentcodes/quadform.hpp"

using namespace bentcodes;

TEST_CASE("HG polynomial for p=3, m=5") {
  auto f = make_field(3, 5);
  CHECK(format_terms(hg_build(*f, 2)) == "2x + 2x^5 + x^41");
  const auto terms = trace_terms(HG{2}, *f);
  CHECK(format_terms(terms) == "2x^2 + 2x^10 + x^82");
  CHECK(is_bent_rank(hg_q(f, 2)));
  CHECK(is_bent_rank(hg_q(f, 1)));
}

TEST_CASE("family evaluation matches the table-driven QFunction") {
  auto f = make_field(3, 5);
  const std::vector<FamilySpec> specs = {
      PlanarA{f->generator()},
      PlanarB{f->one(), 2},
      PlanarC{f->generator_power(5)},
      PlanarD{f->one(), f->generator()},
      Gold{f->generator_power(3), 2},
      HG{1},
      PolyForm{{f->one(), f->from_residue(Residue{2}), f->one()}},
  };
  for (const auto& spec : specs) {
    const QFunction q = make_qfunction(spec, f);
    for (std::uint32_t x = 0; x < f->order(); ++x) CHECK(q.value(x) == eval_family(spec, f->element(x)).value);
  }
}

TEST_CASE("Gold predicate agrees with the rank oracle") {
  for (std::uint32_t m : {2u, 3u, 4u}) {
    auto f = make_field(3, m);
    for (std::uint32_t j = 1; j <= m; ++j) {
      for (std::uint64_t t = 0; t + 1 < f->order(); ++t) {
        const bool bent = is_bent_rank(make_qfunction(Gold{f->generator_power(t), j}, f));
        CHECK(gold_is_bent(3, m, j, t) == bent);
      }
    }
  }
}

TEST_CASE("Kasami condition") {
  auto f = make_field(3, 4);
  int invalid = 0;
  for (std::uint32_t c = 1; c < f->order(); ++c) {
    const Element e = f->element(c);
    const bool valid = kasami_valid(e);
    invalid += !valid;
    CHECK(valid == is_bent_rank(make_qfunction(Gold{e, 2}, f)));
  }
  CHECK(invalid == 8);
  auto odd = make_field(3, 3);
  CHECK_THROWS_AS(kasami_valid(odd->one()), InvalidArgument);
  CHECK_THROWS_AS(validate(Kasami{odd->one()}, *odd), InvalidFamily);
}

TEST_CASE("predicted sign matches the classified sign") {
  for (std::uint32_t p : {3u, 5u}) {
    auto f = make_field(p, 4);
    for (std::uint64_t t = 0; t < 6; ++t) {
      const Element c = f->generator_power(t);
      if (!kasami_valid(c)) continue;
      const FamilySpec spec = Kasami{c};
      CHECK(epsilon_predict(spec, *f) == classify(make_qfunction(spec, f)).epsilon);
    }
  }
  for (std::uint32_t m : {2u, 4u}) {
    auto f = make_field(3, m);
    for (std::uint64_t t = 0; t < 4; ++t) {
      const FamilySpec spec = PlanarA{f->generator_power(t)};
      CHECK(epsilon_predict(spec, *f) == classify(make_qfunction(spec, f)).epsilon);
    }
  }
  auto odd = make_field(3, 3);
  CHECK_THROWS_AS(epsilon_predict(PlanarA{odd->one()}, *odd), InvalidArgument);
  auto even = make_field(3, 4);
  CHECK_FALSE(epsilon_predict(PolyForm{{even->one(), even->one()}}, *even).has_value());
}

TEST_CASE("planar family (e) at its smallest parameters") {
  auto f = make_field(3, 3);
  const FamilySpec spec = PlanarE{f->one(), 1, 4, f->generator()};
  CHECK_FALSE(violated_condition(spec, *f));
  const auto pi = planar_map(spec, *f);
  REQUIRE(pi);
  CHECK(is_planar(*f, polynomial_table(*f, *pi)));
  CHECK(is_bent_rank(make_qfunction(spec, f)));
  CHECK(violated_condition(PlanarE{f->one(), 1, 4, f->one()}, *f));
}

TEST_CASE("structural conditions") {
  auto f = make_field(3, 4);
  CHECK_THROWS_AS(validate(PlanarA{f->zero()}, *f), InvalidFamily);
  CHECK_THROWS_AS(validate(PlanarB{f->one(), 2}, *f), InvalidFamily);
  CHECK_THROWS_AS(validate(HG{1}, *f), InvalidFamily);
  CHECK_THROWS_AS(validate(PlanarC{f->one()}, *f), InvalidFamily);
  auto g = make_field(3, 6);
  CHECK_THROWS_AS(validate(PolyForm{std::vector<Element>(5, g->one())}, *g), InvalidFamily);
  auto h = make_field(3, 5);
  CHECK_NOTHROW(validate(HG{2}, *h));
  CHECK_THROWS_AS(validate(HG{5}, *h), InvalidFamily);
  CHECK_THROWS_AS(validate(PlanarA{h->one()}, *f), FieldMismatch);
}

TEST_CASE("family names and parameters") {
  auto f = make_field(3, 6);
  const FamilySpec gold = Gold{f->generator(), 2};
  CHECK(family_name(gold) == "gold");
  CHECK(describe_params(gold) == "c=g^1, j=2");
  CHECK(family_name(HG{1}) == "hg");
  CHECK(claimed_bent(gold, *f) == gold_is_bent(3, 6, 2, 1));
  CHECK_FALSE(claimed_bent(PolyForm{{f->one()}}, *f).has_value());
}
