#include "doctest.h"

#include "bentcodes/catalog.hpp"
#include "bentcodes/errors.hpp"
#include "bentcodes/quadform.hpp"
#include "oracle.hpp"

using namespace bentcodes;

namespace {

oracle::Gf mirror(const Field& f) {
  oracle::Poly mod(f.modulus().begin(), f.modulus().end());
  return oracle::Gf{f.p(), static_cast<int>(f.m()), mod};
}

QFunction square_trace(std::shared_ptr<const Field> f) {
  return QFunction::from_terms(f, {Term{f->one(), 2}});
}

}  // namespace

TEST_CASE("values of a trace form match the schoolbook oracle") {
  auto f = make_field(3, 4);
  const Element c = f->generator_power(7);
  auto q = QFunction::from_terms(f, {Term{c, 10}, Term{f->one(), 2}});
  const auto expected = oracle::trace_form_values(
      mirror(*f), {{static_cast<std::int64_t>(c.index()), 10}, {1, 2}});
  for (std::uint32_t x = 0; x < f->order(); ++x) CHECK(q.value(x) == expected[x]);
}

TEST_CASE("Gram matrix of Tr(x^2)") {
  auto f = make_field(3, 3);
  const ResidueMatrix g = gram_matrix(square_trace(f));
  for (std::uint32_t i = 0; i < 3; ++i) {
    for (std::uint32_t j = 0; j < 3; ++j) {
      const auto t = trace(f->basis(i) * f->basis(j)).value;
      CHECK(g(i, j) == (2 * t) % 3);
    }
  }
  CHECK(form_rank(square_trace(f)) == 3);
}

TEST_CASE("non-quadratic functions are rejected") {
  auto f = make_field(3, 2);
  auto cube = QFunction::from_terms(f, {Term{f->one(), 5}});
  CHECK_FALSE(is_quadratic(cube));
  CHECK_THROWS_AS(gram_matrix(cube), NotQuadratic);
  CHECK(is_quadratic(QFunction::zero(f)));
  CHECK(form_rank(QFunction::zero(f)) == 0);
}

TEST_CASE("Walsh value of Tr(x^2) on F_3") {
  auto f = make_field(3, 1);
  const WalshValue w = walsh(square_trace(f), f->zero());
  CHECK(w.coeffs() == std::vector<std::int64_t>{1, 2, 0});
  CHECK(walsh_norm_sq(w) == 3);
}

TEST_CASE("Parseval holds for arbitrary functions") {
  for (std::uint32_t m = 1; m <= 4; ++m) {
    auto f = make_field(3, m);
    std::vector<std::uint32_t> values(f->order());
    for (std::uint32_t x = 0; x < f->order(); ++x) values[x] = (x * x + 7 * x / 3) % 3;
    for (const auto& q : {square_trace(f), QFunction::from_values(f, values, "arbitrary")}) {
      CyclotomicInteger total(3);
      for (std::uint32_t l = 0; l < f->order(); ++l) total += norm_sq(walsh(q, f->element(l)));
      const auto squared = static_cast<std::int64_t>(f->order()) * f->order();
      CHECK(total.rational_value() == squared);
    }
  }
}

TEST_CASE("rank and Walsh oracles agree with brute-force references") {
  auto f = make_field(3, 3);
  const oracle::Gf g = mirror(*f);
  for (std::uint64_t t = 0; t < 26; t += 3) {
    for (std::uint32_t j = 1; j <= 3; ++j) {
      auto q = make_qfunction(Gold{f->generator_power(t), j}, f);
      auto fn = [&](std::int64_t x) { return static_cast<std::int64_t>(q.value(x)); };
      CHECK(form_rank(q) == oracle::radical_rank(g, fn));
      CHECK(is_bent_walsh(q) == oracle::walsh_flat(g, fn));
    }
  }
  auto z = QFunction::zero(f);
  CHECK_FALSE(is_bent_rank(z));
  CHECK_FALSE(is_bent_walsh(z));
}

TEST_CASE("classification of Kasami at p=3, m=4") {
  auto f = make_field(3, 4);
  auto q = make_qfunction(Kasami{f->one()}, f);
  const FormClassification c = classify(q);
  CHECK(c.rank == 4);
  CHECK(c.bent);
  CHECK(c.type == CanonicalType::III);
  CHECK(c.epsilon == -1);
  CHECK(c.zero_count == 20);
  CHECK(zero_set(q).size() == 20);
}

TEST_CASE("value counts for each canonical type") {
  // Exhaustive check against direct counting for the forms of the catalog.
  for (auto [p, m] : {std::pair{3u, 3u}, {3u, 4u}, {5u, 2u}, {5u, 3u}}) {
    auto f = make_field(p, m);
    for (std::uint64_t t = 0; t < 4; ++t) {
      auto q = make_qfunction(Gold{f->generator_power(t), 1}, f);
      const FormClassification c = classify(q);
      if (c.type == CanonicalType::Degenerate) continue;
      std::vector<std::int64_t> counts(p, 0);
      for (std::uint32_t x = 0; x < f->order(); ++x) ++counts[q.value(x)];
      for (std::uint32_t z = 0; z < p; ++z) {
        CHECK(counts[z] ==
              theoretical_count(p, c.type, c.rank, static_cast<int>(m), Residue{z}, c.mu));
      }
    }
  }
  CHECK_THROWS_AS(theoretical_count(3, CanonicalType::I, 3, 4, Residue{0}, MuClass::NotApplicable),
                  InvalidArgument);
  CHECK_THROWS_AS(theoretical_count(3, CanonicalType::II, 3, 4, Residue{0}, MuClass::NotApplicable),
                  InvalidArgument);
}

TEST_CASE("rank-2 form in GF(3^3)") {
  auto f = make_field(3, 3);
  std::vector<std::uint32_t> values(f->order());
  for (std::uint32_t x = 0; x < f->order(); ++x) {
    const auto d = f->element(x).coeffs();
    values[x] = (d[0] * d[0] + d[1] * d[1]) % 3;
  }
  auto q = QFunction::from_values(f, values, "x0^2 + x1^2");
  const FormClassification c = classify(q);
  CHECK(c.rank == 2);
  CHECK_FALSE(c.bent);
  // x0^2 + x1^2 over F_3 has only the trivial zero, a Type III binary form.
  CHECK(c.type == CanonicalType::III);
  CHECK(c.zero_count == 2);
}

TEST_CASE("N_b distribution") {
  {
    auto f = make_field(3, 5);
    auto q = make_qfunction(PlanarC{f->one()}, f);
    const Tally expected{{20, 72}, {26, 80}, {32, 90}, {80, 1}};
    CHECK(nb_distribution(q) == expected);
    CHECK(theoretical_nb_distribution(3, 5, 0) == expected);
  }
  {
    auto f = make_field(3, 4);
    auto q = make_qfunction(Kasami{f->one()}, f);
    const Tally expected{{2, 20}, {8, 60}, {20, 1}};
    CHECK(nb_distribution(q) == expected);
  }
  auto f = make_field(3, 3);
  CHECK_THROWS_AS(nb_distribution(QFunction::zero(f)), TheoryViolation);
}

TEST_CASE("planarity") {
  auto f = make_field(3, 5);
  std::vector<std::uint32_t> square(f->order()), identity(f->order());
  for (std::uint32_t x = 0; x < f->order(); ++x) {
    square[x] = f->mul(x, x);
    identity[x] = x;
  }
  CHECK(is_planar(*f, square));
  CHECK_FALSE(is_planar(*f, identity));
  const auto pi = planar_map(PlanarC{f->one()}, *f);
  REQUIRE(pi);
  CHECK(is_planar(*f, polynomial_table(*f, *pi)));
}

TEST_CASE("zero set is closed under prime-field scaling") {
  auto f = make_field(5, 3);
  auto q = make_qfunction(PlanarA{f->generator()}, f);
  const DefiningSet d = zero_set(q);
  std::vector<bool> in(f->order(), false);
  for (auto x : d.elements) in[x] = true;
  for (auto x : d.elements) {
    for (std::uint32_t l = 1; l < 5; ++l) CHECK(in[f->scale(x, l)]);
  }
  CHECK_FALSE(in[0]);
}
