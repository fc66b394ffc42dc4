#include "doctest.h"

#include <algorithm>
#include <set>

#include "bentcodes/errors.hpp"
#include "bentcodes/field.hpp"
#include "oracle.hpp"

using namespace bentcodes;

namespace {

oracle::Gf mirror(const Field& f) {
  oracle::Poly mod(f.modulus().begin(), f.modulus().end());
  return oracle::Gf{f.p(), static_cast<int>(f.m()), mod};
}

}  // namespace

TEST_CASE("prime field F_3") {
  auto f = make_field(3, 1);
  CHECK(f->order() == 3);
  CHECK(f->generator().index() == 2);
  CHECK(f->modulus() == std::vector<std::uint32_t>{0, 1});
  CHECK(trace(f->element(2)).value == 2);
}

TEST_CASE("GF(9) uses x^2 + 1") {
  auto f = make_field(3, 2);
  CHECK(f->modulus() == std::vector<std::uint32_t>{1, 0, 1});
  const Element x = f->basis(1);
  CHECK((x * x).coeffs() == std::vector<std::uint32_t>{2, 0});
  CHECK(trace(x).value == 0);
  CHECK(f->generator().coeffs() == std::vector<std::uint32_t>{1, 1});
}

TEST_CASE("modulus is the smallest irreducible") {
  for (auto [p, m] : {std::pair{3u, 2u}, {3u, 3u}, {3u, 4u}, {5u, 2u}, {5u, 3u}, {7u, 2u}}) {
    auto f = make_field(p, m);
    const oracle::Gf g = mirror(*f);
    CHECK(oracle::is_irreducible(g));
    // Every monic polynomial that sorts earlier (c0 first) is reducible.
    if (m == 1) continue;
    const std::int64_t count = g.order();
    for (std::int64_t r = 0; r < count; ++r) {
      oracle::Poly cand(m + 1, 0);
      std::int64_t v = r;
      for (std::uint32_t i = 0; i < m; ++i, v /= p) cand[i] = v % p;
      cand[m] = 1;
      if (std::lexicographical_compare(cand.begin(), cand.end(), g.modulus.begin(),
                                       g.modulus.end())) {
        CHECK_FALSE(oracle::is_irreducible(oracle::Gf{p, static_cast<int>(m), cand}));
      }
    }
  }
}

TEST_CASE("generator of GF(5^4) has order 624") {
  auto f = make_field(5, 4);
  const Element g = f->generator();
  CHECK(pow(g, 624) == f->one());
  for (std::uint64_t q : {2u, 3u, 13u}) CHECK_FALSE(pow(g, 624 / q) == f->one());
}

TEST_CASE("multiplication and trace agree with schoolbook arithmetic") {
  for (auto [p, m] : {std::pair{3u, 3u}, {3u, 4u}, {5u, 2u}, {7u, 2u}}) {
    auto f = make_field(p, m);
    const oracle::Gf g = mirror(*f);
    for (std::uint32_t a = 0; a < f->order(); a += 3) {
      CHECK(f->trace_value(a) == g.trace(g.unpack(a)));
      for (std::uint32_t b = 0; b < f->order(); b += 5) {
        CHECK(f->mul(a, b) == g.pack(g.mul(g.unpack(a), g.unpack(b))));
        CHECK(f->add(a, b) == g.pack(g.add(g.unpack(a), g.unpack(b))));
      }
    }
  }
}

TEST_CASE("trace is linear and balanced") {
  auto f = make_field(3, 4);
  std::vector<int> hist(3, 0);
  for (std::uint32_t a = 0; a < f->order(); ++a) {
    ++hist[f->trace_value(a)];
    for (std::uint32_t b = 0; b < f->order(); b += 7) {
      CHECK(f->trace_value(f->add(a, b)) == (f->trace_value(a) + f->trace_value(b)) % 3);
    }
  }
  CHECK(hist == std::vector<int>{27, 27, 27});
}

TEST_CASE("inverse, pow and discrete log") {
  auto f = make_field(3, 4);
  for (std::uint32_t a = 1; a < f->order(); ++a) {
    const Element e = f->element(a);
    CHECK(e * inverse(e) == f->one());
    CHECK(f->generator_power(discrete_log(e)) == e);
  }
  CHECK(pow(f->zero(), 0) == f->one());
  CHECK(pow(f->zero(), 5) == f->zero());
  CHECK_THROWS_AS(inverse(f->zero()), InvalidArgument);
  CHECK_THROWS_AS(discrete_log(f->zero()), InvalidArgument);
}

TEST_CASE("quadratic character") {
  CHECK(quadratic_character(3, Residue{1}) == 1);
  CHECK(quadratic_character(3, Residue{2}) == -1);
  CHECK(quadratic_character(5, Residue{4}) == 1);
  CHECK(quadratic_character(5, Residue{2}) == -1);
  CHECK(quadratic_character(7, Residue{0}) == 0);
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    for (std::uint32_t a = 1; a < p; ++a) {
      for (std::uint32_t b = 1; b < p; ++b) {
        CHECK(quadratic_character(p, Residue{a * b % p}) ==
              quadratic_character(p, Residue{a}) * quadratic_character(p, Residue{b}));
      }
    }
    std::int64_t sum = 0;
    for (std::uint32_t z = 0; z < p; ++z) sum += nu(p, Residue{z});
    CHECK(sum == 0);
    CHECK(nu(p, Residue{0}) == static_cast<std::int64_t>(p) - 1);
  }
  CHECK(nonsquare(3).value == 2);
  CHECK(nonsquare(5).value == 2);
  CHECK(nonsquare(7).value == 3);
}

TEST_CASE("field construction errors") {
  CHECK_THROWS_AS(make_field(4, 2), InvalidArgument);
  CHECK_THROWS_AS(make_field(2, 3), InvalidArgument);
  CHECK_THROWS_AS(make_field(9, 1), InvalidArgument);
  CHECK_THROWS_AS(make_field(3, 0), InvalidArgument);
  CHECK_THROWS_AS(make_field(3, 16), GuardExceeded);
}

TEST_CASE("elements from different fields do not mix") {
  auto a = make_field(3, 2);
  auto b = make_field(3, 2);
  CHECK_THROWS_AS(a->one() + b->one(), FieldMismatch);
}

TEST_CASE("element parsing") {
  auto f = make_field(3, 3);
  CHECK(parse_element(*f, "1,2").coeffs() == std::vector<std::uint32_t>{1, 2, 0});
  CHECK(parse_element(*f, "-1").coeffs() == std::vector<std::uint32_t>{2, 0, 0});
  CHECK(parse_element(*f, "g^1") == f->generator());
  CHECK(parse_element(*f, "g^26") == f->one());
  CHECK_THROWS_AS(parse_element(*f, "1,0,0,1"), InvalidArgument);
  CHECK_THROWS_AS(parse_element(*f, "x"), InvalidArgument);
  CHECK(format_element(parse_element(*f, "0,1")) == "0,1,0");
}

TEST_CASE("powers of the generator cover every nonzero element once") {
  auto f = make_field(5, 3);
  std::set<std::uint32_t> seen;
  for (std::uint64_t t = 0; t + 1 < f->order(); ++t) seen.insert(f->exp(t));
  CHECK(seen.size() == f->order() - 1);
  CHECK(seen.count(0) == 0);
}
