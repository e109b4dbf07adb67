#include <algorithm>
#include <set>

#include "doctest.h"
#include "gsfactor/factorizer.hpp"
#include "helpers.hpp"

using namespace gsf;
using testutil::el;
using testutil::frac;
using testutil::lin;
using testutil::poly;

namespace {

std::vector<u64> sorted_codes(std::vector<Elem> xs) {
  std::vector<u64> out = testutil::codes(xs);
  std::sort(out.begin(), out.end());
  return out;
}

// Every s = (B + 1/B)/2 with B of order 2E in the extension, by brute force.
std::set<u64> irreducible_by_extension_scan(const DicksonCtx& ctx) {
  const Field& f = ctx.field();
  const QuadExt& x = f.ext();
  std::set<u64> out;
  for (Elem2 b : x.elements()) {
    if (b == x.zero() || x.mult_order(b) != 2 * ctx.big_e()) continue;
    const Elem2 t = x.add(b, x.inv(b));
    const auto s = x.project(t);
    REQUIRE(s.has_value());
    out.insert(f.div(*s, f.from_int(2)).code);
  }
  return out;
}

}  // namespace

TEST_CASE("classification examples") {
  const DicksonCtx c13(Field::make(13));
  const CaseTag t = classify(c13, el(c13.field(), 6));
  CHECK(t.kind == CaseKind::DegreeE);
  CHECK(t.e == 3);
  CHECK(el(c13.field(), 1 - 36) == frac(c13.field(), 3, 4));

  const DicksonCtx c17(Field::make(17));
  const CaseTag t17 = classify(c17, el(c17.field(), 13));
  CHECK(t17.kind == CaseKind::DegreeE);
  CHECK(t17.e == 8);

  for (u64 q : {3ULL, 9ULL, 13ULL, 19ULL}) {
    const DicksonCtx ctx(testutil::field_of(q));
    CHECK(classify(ctx, ctx.field().one()).kind == CaseKind::SPlusOne);
    CHECK(classify(ctx, el(ctx.field(), -1)).kind == CaseKind::SMinusOne);
    CHECK(classify(ctx, ctx.field().zero()).kind == CaseKind::SZero);
  }
  CHECK(case_name(CaseKind::DegreeE) == "DegreeE");
}

TEST_CASE("closed form at s = -1/2 over F_13") {
  const DicksonCtx ctx(Field::make(13));
  const FieldPtr& fp = ctx.field_ptr();
  const ClosedForm cf = factor_closed_form(ctx, el(*fp, 6));
  CHECK(cf.factorization.lead == el(*fp, 7));
  REQUIRE(cf.factorization.factors.size() == 2);
  CHECK(cf.factorization.factors[0].poly == poly(fp, {1, 3, 5, 1}));
  CHECK(cf.factorization.factors[1].poly == poly(fp, {3, 3, 5, 1}));
  CHECK(cf.factorization.factors[0].mult == 1);
  CHECK(testutil::codes(cf.constant_terms) == std::vector<u64>{10, 12});
}

TEST_CASE("closed form at s = 13 over F_17 is one degree-8 factor") {
  const DicksonCtx ctx(Field::make(17));
  const FieldPtr& fp = ctx.field_ptr();
  const ClosedForm cf = factor_closed_form(ctx, el(*fp, 13));
  CHECK(cf.factorization.lead == el(*fp, 9));
  CHECK(ctx.lead() == el(*fp, 9));
  const Poly n = poly(fp, {0, -1, 1}) * testutil::power(lin(fp, el(*fp, 2)), 2) *
                 testutil::power(lin(fp, el(*fp, 9)), 2) *
                 testutil::power(lin(fp, el(*fp, 16)), 2);
  REQUIRE(cf.factorization.factors.size() == 1);
  CHECK(cf.factorization.factors[0].poly == n - poly(fp, {7}));
  CHECK(testutil::codes(cf.constant_terms) == std::vector<u64>{7});
  CHECK(g_is_irreducible(ctx, el(*fp, 13)));
}

TEST_CASE("closed form at s = 1 over F_13") {
  const DicksonCtx ctx(Field::make(13));
  const FieldPtr& fp = ctx.field_ptr();
  const ClosedForm cf = factor_closed_form(ctx, fp->one());
  CHECK(cf.factorization.lead == frac(*fp, 1, 2));
  Factorization expect{fp, frac(*fp, 1, 2),
                       {{poly(fp, {0, 1}), 1},
                        {poly(fp, {-1, 1}), 1},
                        {poly(fp, {-4, 1}), 2},
                        {poly(fp, {-10, 1}), 2}}};
  expect.canonicalize();
  CHECK(cf.factorization == expect);
  CHECK(cf.factorization.expand() == ctx.g(fp->one()));
}

TEST_CASE("norm polynomials for periods 3, 4 and 6") {
  for (u64 q : {13ULL, 37ULL, 61ULL, 73ULL}) {
    const FieldPtr fp = Field::make(q);
    const Field& f = *fp;
    CAPTURE(q);
    const Poly n3 = build_norm_poly(build_profile(fp, frac(f, 3, 4)));
    CHECK(n3 == Poly(fp, {f.zero(), frac(f, 9, 16), frac(f, -3, 2), f.one()}));
  }
  for (u64 q : {17ULL, 41ULL, 73ULL}) {
    const FieldPtr fp = Field::make(q);
    const Field& f = *fp;
    const Poly n4 = build_norm_poly(build_profile(fp, frac(f, 1, 2)));
    CHECK(n4 == Poly(fp, {f.zero(), frac(f, -1, 4), frac(f, 5, 4), el(f, -2), f.one()}));
  }
  for (u64 q : {13ULL, 37ULL, 61ULL}) {
    const FieldPtr fp = Field::make(q);
    const Field& f = *fp;
    const Poly n6 = build_norm_poly(build_profile(fp, frac(f, 1, 4)));
    CHECK(n6 == Poly(fp, {f.zero(), frac(f, -9, 256), frac(f, 105, 256), frac(f, -7, 4),
                          frac(f, 27, 8), el(f, -3), f.one()}));
  }
}

TEST_CASE("constant terms") {
  const DicksonCtx c13(Field::make(13));
  CHECK(testutil::codes(constant_terms(c13, el(c13.field(), 6))) == std::vector<u64>{10, 12});
  const DicksonCtx c19(Field::make(19));
  CHECK(testutil::codes(constant_terms(c19, el(c19.field(), 12))) == std::vector<u64>{3, 14});
  const DicksonCtx c17(Field::make(17));
  CHECK(testutil::codes(constant_terms(c17, el(c17.field(), 13))) == std::vector<u64>{7});
  CHECK_THROWS_AS(constant_terms(c13, c13.field().zero()), PreconditionError);
  CHECK_THROWS_AS(constant_terms(c13, c13.field().one()), PreconditionError);

  // g_12 over F_19 is 2 (N - 3)(N - 14).
  const FieldPtr& fp = c19.field_ptr();
  const ClosedForm cf = factor_closed_form(c19, el(*fp, 12));
  const Poly n = build_norm_poly(build_profile(fp, el(*fp, 1 - 144)));
  CHECK(c19.g(el(*fp, 12)) == scale((n - poly(fp, {3})) * (n - poly(fp, {14})), el(*fp, 2)));
  CHECK(cf.factorization.lead == el(*fp, 2));
}

TEST_CASE("irreducible values") {
  const DicksonCtx c19(Field::make(19));
  CHECK(g_is_irreducible(c19, el(c19.field(), 4)));
  CHECK(matches_oracle(c19, el(c19.field(), 4)));
  const ClosedForm cf = factor_closed_form(c19, el(c19.field(), 4));
  REQUIRE(cf.factorization.factors.size() == 1);
  CHECK(cf.factorization.factors[0].poly.degree() == 10);

  for (u64 q : testutil::odd_prime_powers_up_to(60)) {
    const DicksonCtx ctx(testutil::field_of(q));
    CAPTURE(q);
    const std::vector<Elem> by_period = irreducible_s_values(ctx);
    if (ctx.big_e() > 2) {
      CHECK_FALSE(g_is_irreducible(ctx, ctx.field().zero()));
      CHECK(by_period == irreducible_s_values_by_order(ctx));
      const std::set<u64> scan = irreducible_by_extension_scan(ctx);
      const std::vector<u64> period_codes = testutil::codes(by_period);
      CHECK(std::set<u64>(period_codes.begin(), period_codes.end()) == scan);
    }
    for (Elem s : ctx.field().elements()) {
      const bool oracle = factorize(ctx.g(s)).factors.size() == 1 &&
                          factorize(ctx.g(s)).factors[0].mult == 1;
      CHECK(g_is_irreducible(ctx, s) == oracle);
    }
  }
  const DicksonCtx c17(Field::make(17));
  const auto v17 = testutil::codes(irreducible_s_values(c17));
  CHECK(std::find(v17.begin(), v17.end(), 13) != v17.end());
  const auto v19 = testutil::codes(irreducible_s_values(c19));
  CHECK(std::find(v19.begin(), v19.end(), 4) != v19.end());
}

TEST_CASE("irreducible quadratics when E = 2") {
  // g_0 is y^2 - y + 2 up to a unit over F_3; over F_5 both g_0 and g_3 are
  // irreducible quadratics, while the order-2E scan only yields 0.
  const DicksonCtx c3(Field::make(3));
  CHECK(testutil::codes(irreducible_s_values(c3)) == std::vector<u64>{0});
  const DicksonCtx c5(Field::make(5));
  CHECK(testutil::codes(irreducible_s_values(c5)) == std::vector<u64>{0, 3});
  CHECK(testutil::codes(irreducible_s_values_by_order(c5)) == std::vector<u64>{0});
}

TEST_CASE("trace classes") {
  const DicksonCtx c19(Field::make(19));
  CHECK(trace_class(c19, el(c19.field(), 12)) == TraceClass::B);
  CHECK(trace_class(c19, el(c19.field(), 17)) == TraceClass::B);
  CHECK(trace_class(c19, el(c19.field(), 7)) == TraceClass::BPrime);
  CHECK(trace_class(c19, c19.field().zero()) == TraceClass::Neither);
  // 12 = (1 + sqrt 5)/4 with sqrt 5 = 9.
  CHECK(el(c19.field(), 81) == el(c19.field(), 5));
  CHECK(frac(c19.field(), 1 + 9, 4) == el(c19.field(), 12));

  const DicksonCtx c37(Field::make(37));
  CHECK(classify(c37, el(c37.field(), 26)).e == 6);
  CHECK(trace_class(c37, el(c37.field(), 26)) == TraceClass::B);
  CHECK(trace_class_name(TraceClass::BPrime) == "B_d_prime");
}

TEST_CASE("norm residuacity") {
  const DicksonCtx c19(Field::make(19));
  const NormClass a = norm_residuacity(c19, el(c19.field(), 12));
  CHECK(a.d == 5);
  CHECK(a.membership == TraceClass::B);
  CHECK(testutil::codes(a.norms) == std::vector<u64>{3, 14});
  REQUIRE(a.residue.has_value());
  CHECK(*a.residue == -1);

  const NormClass a17 = norm_residuacity(c19, el(c19.field(), 17));
  CHECK(testutil::codes(a17.norms) == std::vector<u64>{2, 15});
  CHECK(*a17.residue == -1);

  const NormClass b = norm_residuacity(c19, el(c19.field(), 7));
  CHECK(b.membership == TraceClass::BPrime);
  CHECK(testutil::codes(b.norms) == std::vector<u64>{1, 16});
  REQUIRE(b.residue.has_value());
  CHECK(*b.residue == 1);

  const DicksonCtx c37(Field::make(37));
  const Field& f37 = c37.field();
  const NormClass c = norm_residuacity(c37, el(f37, 26));
  CHECK(c.d == 6);
  CHECK(testutil::codes(c.norms) == std::vector<u64>{2, 20, 29});
  CHECK(testutil::codes(c.partner_norms) == std::vector<u64>{5, 14, 32});
  std::vector<Elem> all = c.norms;
  all.insert(all.end(), c.partner_norms.begin(), c.partner_norms.end());
  CHECK(sorted_codes(all) == std::vector<u64>{2, 5, 14, 20, 29, 32});
  for (Elem m : all) CHECK(f37.quad_char(m) == -1);
}

TEST_CASE("residuacity law for odd periods") {
  for (u64 q : testutil::odd_prime_powers_up_to(150)) {
    const DicksonCtx ctx(testutil::field_of(q));
    CAPTURE(q);
    for (Elem s : ctx.field().elements()) {
      const CaseTag t = classify(ctx, s);
      if (t.kind != CaseKind::DegreeE || t.e % 2 == 0) continue;
      const NormClass nc = norm_residuacity(ctx, s);
      REQUIRE(nc.residue.has_value());
      CHECK(*nc.residue == (nc.membership == TraceClass::B ? -1 : 1));
      for (Elem m : nc.norms) CHECK(ctx.field().quad_char(m) == *nc.residue);
    }
  }
}

TEST_CASE("cubic complement") {
  const DicksonCtx c13(Field::make(13));
  const CubicComplement r = cubic_norm_complement(c13);
  CHECK(testutil::codes(r.u) == std::vector<u64>{2, 7, 10, 12});
  CHECK(r.v.size() == 9);
  CHECK(r.holds());
  CHECK_THROWS_AS(cubic_norm_complement(DicksonCtx(Field::make(7))), PreconditionError);
  CHECK(cubic_norm_complement(DicksonCtx(Field::make(11))).holds());
  // Direct construction of V over F_13.
  const Field& f = c13.field();
  std::set<u64> v;
  for (Elem x : f.elements()) v.insert(f.mul(x, f.sqr(f.sub(x, frac(f, 3, 4)))).code);
  const std::vector<u64> v_codes = testutil::codes(r.v);
  CHECK(std::set<u64>(v_codes.begin(), v_codes.end()) == v);
}

TEST_CASE("period families") {
  const DicksonCtx c13(Field::make(13));
  const PeriodFamilyResult r3 = check_period_family(c13, 3);
  CHECK(r3.passed);
  CHECK(r3.detail.empty());
  const DicksonCtx c17(Field::make(17));
  CHECK(check_period_family(c17, 4).passed);
  const DicksonCtx c19(Field::make(19));
  const PeriodFamilyResult r5 = check_period_family(c19, 5);
  CHECK(r5.passed);
  CHECK(r5.variants == 2);
  CHECK_FALSE(period_family_applies(13, 4));
  CHECK_THROWS_AS(check_period_family(c13, 4), PreconditionError);
}

TEST_CASE("closed forms match the generic factorization on small fields") {
  for (u64 q : {13ULL, 9ULL, 27ULL, 25ULL, 3ULL, 5ULL}) {
    const DicksonCtx ctx(testutil::field_of(q));
    CAPTURE(q);
    for (Elem s : ctx.field().elements()) {
      CAPTURE(s.code);
      CHECK(matches_oracle(ctx, s));
    }
  }
}

TEST_CASE("structural laws for q <= 200") {
  for (u64 q : testutil::odd_prime_powers_up_to(200)) {
    const DicksonCtx ctx(testutil::field_of(q));
    const Field& f = ctx.field();
    CAPTURE(q);
    std::size_t kinds[6] = {};
    for (Elem s : f.elements()) {
      const ClosedForm cf = factor_closed_form(ctx, s);
      ++kinds[static_cast<int>(cf.tag.kind)];
      CHECK(cf.factorization.lead == ctx.lead());
      CHECK(cf.factorization.expand() == ctx.g(s));
      if (cf.tag.kind == CaseKind::DegreeE) {
        CHECK(cf.tag.e > 2);
        CHECK(cf.constant_terms.size() == ctx.big_e() / cf.tag.e);
        const Poly n = build_norm_poly(build_profile(ctx.field_ptr(), f.sub(f.one(), f.sqr(s))));
        Elem prod = ctx.lead();
        std::vector<Elem> from_factors;
        for (const Factor& fac : cf.factorization.factors) {
          CHECK(fac.poly.degree() == static_cast<int>(cf.tag.e));
          CHECK(fac.mult == 1);
          const Poly diff = n - fac.poly;
          CHECK(diff.degree() <= 0);
          from_factors.push_back(diff.coeff(0));
        }
        CHECK(sorted_codes(from_factors) == testutil::codes(cf.constant_terms));
        for (Elem m : cf.constant_terms) prod = f.mul(prod, f.neg(m));
        CHECK(prod == f.sub(f.one(), s));
      }
      if (cf.tag.kind == CaseKind::SplitLinearQuadratic) {
        const Elem half = f.inv(f.from_int(2));
        std::vector<u64> expect{f.mul(f.add(f.one(), s), half).code,
                                f.mul(f.sub(f.one(), s), half).code};
        std::sort(expect.begin(), expect.end());
        CHECK(testutil::codes(roots_in_field(ctx.g(s))) == expect);
      }
    }
    CHECK(kinds[0] == 1);
    CHECK(kinds[1] == 1);
    CHECK(kinds[2] == 1);
    std::size_t total = 0;
    for (std::size_t k : kinds) total += k;
    CHECK(total == q);
  }
}
