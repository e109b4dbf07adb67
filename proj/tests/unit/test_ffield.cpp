#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"

using namespace gsf;
using testutil::el;

namespace {

// First monic degree-2 polynomial over F_3 without roots, scanning (c0, c1)
// lexicographically from the constant term.
std::vector<u64> first_rootless_quadratic_mod3() {
  for (u64 c0 = 0; c0 < 3; ++c0) {
    for (u64 c1 = 0; c1 < 3; ++c1) {
      bool root = false;
      for (u64 x = 0; x < 3; ++x) root = root || (x * x + c1 * x + c0) % 3 == 0;
      if (!root) return {c0, c1, 1};
    }
  }
  return {};
}

std::vector<FieldPtr> sample_fields() {
  return {Field::make(3), Field::make(13), Field::make(19), Field::make(3, 2), Field::make(5, 2),
          Field::make(3, 3), Field::make(7, 3), Field::make(1000003), Field::make(2147483647),
          Field::make(2305843009213693951ULL)};
}

}  // namespace

TEST_CASE("make_field builds prime fields") {
  const FieldPtr f = Field::make(13, 1);
  CHECK(f->p() == 13);
  CHECK(f->k() == 1);
  CHECK(f->q() == 13);
  CHECK(f->is_prime_field());
  CHECK(f->modulus().empty());
}

TEST_CASE("make_field picks the first irreducible modulus for F_9") {
  const FieldPtr f = Field::make(3, 2);
  CHECK(f->q() == 9);
  CHECK(f->modulus() == first_rootless_quadratic_mod3());
  CHECK(f->modulus() == std::vector<u64>{1, 0, 1});  // t^2 + 1
}

TEST_CASE("make_field rejects bad parameters") {
  CHECK_THROWS_AS(Field::make(4, 1), FieldError);
  CHECK_THROWS_AS(Field::make(2, 1), FieldError);
  CHECK_THROWS_AS(Field::make(9, 1), FieldError);
  CHECK_THROWS_AS(Field::make(13, 0), FieldError);
  CHECK_THROWS_AS(Field::make(3, 13), FieldError);  // 3^13 > 10^6
}

TEST_CASE("quadratic character on F_13") {
  const FieldPtr f = Field::make(13);
  const auto sq = testutil::square_table(*f);
  CHECK(f->quad_char(f->one()) == 1);
  CHECK(f->quad_char(el(*f, 2)) == -1);
  CHECK_FALSE(sq[2]);
  CHECK(f->quad_char(el(*f, -1)) == 1);
  CHECK(f->quad_char(f->zero()) == 0);
  for (u64 a = 1; a < 13; ++a) CHECK(f->quad_char(Elem{a}) == (sq[a] ? 1 : -1));
  for (const FieldPtr& g : sample_fields()) CHECK(g->quad_char(g->one()) == 1);
}

TEST_CASE("sqrt returns the smaller root or nothing") {
  const FieldPtr f = Field::make(13);
  CHECK(f->sqrt(el(*f, 4))->code == 2);
  CHECK(f->sqrt(el(*f, 3))->code == 4);
  CHECK_FALSE(f->sqrt(el(*f, 2)).has_value());
  // Brute-force oracle: the smallest x with x^2 = a.
  for (u64 a = 0; a < 13; ++a) {
    std::optional<u64> best;
    for (u64 x = 0; x < 13 && !best; ++x) {
      if (x * x % 13 == a) best = x;
    }
    const auto r = f->sqrt(Elem{a});
    REQUIRE(r.has_value() == best.has_value());
    if (best) CHECK(r->code == *best);
  }
}

TEST_CASE("multiplicative order") {
  const FieldPtr f17 = Field::make(17);
  CHECK(f17->mult_order(f17->one()) == 1);
  CHECK(f17->mult_order(el(*f17, 3)) == 16);
  CHECK_THROWS_AS(f17->mult_order(f17->zero()), DomainError);
  const FieldPtr f19 = Field::make(19);
  const QuadExt& x = f19->ext();
  CHECK(x.i() == x.t());
  CHECK(x.mult_order({el(*f19, 4), el(*f19, 2)}) == 20);
}

TEST_CASE("quadratic extension shapes") {
  const FieldPtr f19 = Field::make(19);
  CHECK(f19->ext().nonresidue() == el(*f19, -1));
  CHECK(f19->ext().i() == f19->ext().t());

  const FieldPtr f13 = Field::make(13);
  const QuadExt& x = f13->ext();
  CHECK(x.nonresidue().code == 2);
  CHECK(x.i() == x.embed(el(*f13, 5)));
  CHECK(f13->sqr(el(*f13, 5)) == el(*f13, -1));
  for (Elem a : f13->elements()) CHECK(x.project(x.embed(a)) == a);
  CHECK_FALSE(x.project(x.t()).has_value());
}

TEST_CASE("enumeration order and guard") {
  std::vector<u64> f3;
  for (Elem a : Field::make(3)->elements()) f3.push_back(a.code);
  CHECK(f3 == std::vector<u64>{0, 1, 2});

  std::set<u64> f9;
  for (Elem a : Field::make(3, 2)->elements()) f9.insert(a.code);
  CHECK(f9.size() == 9);

  std::vector<u64> f13;
  for (Elem a : Field::make(13)->elements()) f13.push_back(a.code);
  CHECK(f13.size() == 13);
  CHECK(f13.front() == 0);
  CHECK(f13.back() == 12);

  CHECK_THROWS_AS(Field::make(1000000007)->elements(), GuardError);
}

TEST_CASE("digit codes follow lexicographic order from the constant term") {
  const FieldPtr f = Field::make(3, 3);
  CHECK(f->one().code == 9);
  CHECK(f->digits(f->one()) == std::vector<u64>{1, 0, 0});
  for (Elem a : f->elements()) CHECK(f->from_digits(f->digits(a)) == a);
  std::vector<u64> prev;
  for (Elem a : f->elements()) {
    const auto d = f->digits(a);
    if (!prev.empty()) CHECK(prev < d);
    prev = d;
  }
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(12345);
  for (const FieldPtr& f : sample_fields()) {
    CAPTURE(f->q());
    const auto rnd = [&] { return Elem{rng() % f->q()}; };
    for (int i = 0; i < 200; ++i) {
      const Elem a = rnd(), b = rnd(), c = rnd();
      CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
      CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
      CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      CHECK(f->add(a, f->neg(a)) == f->zero());
      if (a != f->zero()) CHECK(f->mul(a, f->inv(a)) == f->one());
      CHECK(f->pth_root(f->pow(a, f->p())) == a);
    }
    CHECK(f->from_int(static_cast<i64>(f->p())) == f->zero());
    Elem acc = f->zero();
    if (f->p() < 100) {
      for (u64 i = 0; i < f->p(); ++i) acc = f->add(acc, f->one());
      CHECK(acc == f->zero());
    }
  }
}

TEST_CASE("quadratic character is multiplicative for q <= 100") {
  for (u64 q : testutil::odd_prime_powers_up_to(100)) {
    const FieldPtr f = testutil::field_of(q);
    CAPTURE(q);
    for (u64 a = 1; a < q; ++a) {
      for (u64 b = 1; b < q; ++b) {
        REQUIRE(f->quad_char(f->mul(Elem{a}, Elem{b})) ==
                f->quad_char(Elem{a}) * f->quad_char(Elem{b}));
      }
    }
  }
}

TEST_CASE("sqrt squares back and is absent exactly for nonsquares") {
  for (u64 q : testutil::odd_prime_powers_up_to(200)) {
    const FieldPtr f = testutil::field_of(q);
    for (Elem a : f->elements()) {
      const auto r = f->sqrt(a);
      REQUIRE(r.has_value() == (f->quad_char(a) >= 0));
      if (r) {
        CHECK(f->sqr(*r) == a);
        CHECK(r->code <= f->neg(*r).code);
      }
    }
  }
  std::mt19937_64 rng(7);
  for (const FieldPtr& f : sample_fields()) {
    for (int i = 0; i < 100; ++i) {
      const Elem a{rng() % f->q()};
      const auto r = f->sqrt(a);
      REQUIRE(r.has_value() == (f->quad_char(a) >= 0));
      if (r) CHECK(f->sqr(*r) == a);
    }
  }
}

TEST_CASE("element orders divide q - 1") {
  for (u64 q : testutil::odd_prime_powers_up_to(200)) {
    const FieldPtr f = testutil::field_of(q);
    for (u64 a = 1; a < q; ++a) {
      const u64 o = f->mult_order(Elem{a});
      REQUIRE((q - 1) % o == 0);
      CHECK(f->pow(Elem{a}, o) == f->one());
    }
  }
}

TEST_CASE("extension: i^2 = -1, sqrt and Frobenius on norm-one elements") {
  for (u64 q : {3ULL, 5ULL, 7ULL, 9ULL, 11ULL, 13ULL, 19ULL, 23ULL, 25ULL, 27ULL, 43ULL}) {
    const FieldPtr f = testutil::field_of(q);
    const QuadExt& x = f->ext();
    CAPTURE(q);
    CHECK(x.mul(x.i(), x.i()) == x.embed(el(*f, -1)));
    for (Elem2 z : x.elements()) {
      const auto r = x.sqrt(z);
      REQUIRE(r.has_value() == (x.quad_char(z) >= 0));
      if (r) CHECK(x.mul(*r, *r) == z);
    }
    // beta = sqrt(1-c) + i sqrt(c) for c with c, 1-c nonzero squares.
    for (Elem c : f->elements()) {
      if (f->quad_char(c) != 1 || f->quad_char(f->sub(f->one(), c)) != 1) continue;
      const Elem2 beta = x.add(x.embed(*f->sqrt(f->sub(f->one(), c))), x.scale(x.i(), *f->sqrt(c)));
      const Elem2 frob = x.pow(beta, q);
      if (x.project(beta)) {
        CHECK(frob == beta);
      } else {
        CHECK(frob == x.conj(beta));
        CHECK(frob == x.inv(beta));
      }
    }
  }
}

TEST_CASE("extension element orders divide q^2 - 1") {
  const FieldPtr f = Field::make(11);
  const QuadExt& x = f->ext();
  CHECK(x.group_order() == 120);
  for (Elem2 z : x.elements()) {
    if (z == x.zero()) continue;
    const u64 o = x.mult_order(z);
    REQUIRE(120 % o == 0);
    CHECK(x.pow(z, o) == x.one());
  }
  CHECK_THROWS_AS(Field::make(4001)->ext().elements(), GuardError);
}
