#include "gsfactor/factorizer.hpp"

#include <algorithm>
#include <numeric>

namespace gsf {

std::string_view case_name(CaseKind kind) {
  switch (kind) {
    case CaseKind::SPlusOne: return "SPlusOne";
    case CaseKind::SMinusOne: return "SMinusOne";
    case CaseKind::SZero: return "SZero";
    case CaseKind::SplitLinearQuadratic: return "SplitLinearQuadratic";
    case CaseKind::AllQuadratic: return "AllQuadratic";
    case CaseKind::DegreeE: return "DegreeE";
  }
  return "?";
}

std::string_view trace_class_name(TraceClass t) {
  switch (t) {
    case TraceClass::Neither: return "neither";
    case TraceClass::B: return "B_d";
    case TraceClass::BPrime: return "B_d_prime";
  }
  return "?";
}

CaseTag classify(const DicksonCtx& ctx, Elem s) {
  const Field& f = ctx.field();
  const Elem half = f.inv(f.from_int(2));
  const Elem one_minus_s2 = f.sub(f.one(), f.sqr(s));
  CaseTag tag{CaseKind::SZero, f.quad_char(one_minus_s2),
              f.quad_char(f.mul(f.add(f.one(), s), half)),
              f.quad_char(f.mul(f.sub(f.one(), s), half))};
  if (s == f.one()) {
    tag.kind = CaseKind::SPlusOne;
  } else if (s == f.neg(f.one())) {
    tag.kind = CaseKind::SMinusOne;
  } else if (s == f.zero()) {
    tag.kind = CaseKind::SZero;
  } else if (tag.rho_one_minus_s2 == 1) {
    tag.kind = CaseKind::DegreeE;
    tag.e = recurrence_period(f, one_minus_s2);
  } else if (tag.rho_half_one_plus_s == 1) {
    tag.kind = CaseKind::SplitLinearQuadratic;
  } else {
    tag.kind = CaseKind::AllQuadratic;
  }
  return tag;
}

Poly build_norm_poly(const RecurrenceProfile& prof) {
  const FieldPtr& fp = prof.field;
  const Field& f = *fp;
  const u64 e = prof.e;
  Poly out = e % 2 == 1 ? Poly::var(fp) : Poly(fp, {f.zero(), f.neg(f.one()), f.one()});
  const u64 top = e % 2 == 1 ? (e - 1) / 2 : (e - 2) / 2;
  for (u64 k = 1; k <= top; ++k) {
    const Poly lin(fp, {f.neg(prof.terms[k]), f.one()});
    out = out * lin * lin;
  }
  return out;
}

namespace {

Poly linear(const FieldPtr& fp, Elem root) {
  return Poly(fp, {fp->neg(root), fp->one()});
}

// y^2 + b y + c
Poly quadratic(const FieldPtr& fp, Elem b, Elem c) {
  return Poly(fp, {c, b, fp->one()});
}

u64 s_seed(const DicksonCtx& ctx, Elem s, u64 seed) {
  return mix_seed(seed, ctx.field().q(), s.code);
}

struct DeepCase {
  RecurrenceProfile prof;
  Poly norm;
  std::vector<Elem> m;
};

DeepCase deep_case(const DicksonCtx& ctx, Elem s, u64 seed) {
  const Field& f = ctx.field();
  const Elem c = f.sub(f.one(), f.sqr(s));
  DeepCase out{build_profile(ctx.field_ptr(), c), Poly(ctx.field_ptr()), {}};
  out.norm = build_norm_poly(out.prof);
  const Poly scaled = scale(ctx.g(s), f.inv(ctx.lead()));
  const std::optional<Poly> h = decompose_by(scaled, out.norm);
  if (!h) throw InvariantError("g_s is not a polynomial in N");
  out.m = roots_in_field(*h, s_seed(ctx, s, seed));
  if (out.m.size() != ctx.big_e() / out.prof.e) {
    throw InvariantError("outer polynomial does not split into E/e roots");
  }
  if (std::adjacent_find(out.m.begin(), out.m.end()) != out.m.end()) {
    throw InvariantError("outer polynomial has a repeated root");
  }
  return out;
}

}  // namespace

ClosedForm factor_closed_form(const DicksonCtx& ctx, Elem s, u64 seed) {
  const FieldPtr& fp = ctx.field_ptr();
  const Field& f = *fp;
  ClosedForm out{classify(ctx, s), Factorization{fp, ctx.lead(), {}}, {}};
  auto& factors = out.factorization.factors;
  const Elem quarter = f.inv(f.from_int(4));
  const Elem one = f.one();

  switch (out.tag.kind) {
    case CaseKind::SPlusOne:
      factors.push_back({linear(fp, f.zero()), 1});
      factors.push_back({linear(fp, one), 1});
      for (Elem a : ctx.square_pairs()) factors.push_back({linear(fp, a), 2});
      break;
    case CaseKind::SMinusOne:
      for (Elem j : ctx.nonsquare_pairs()) factors.push_back({linear(fp, j), 2});
      break;
    case CaseKind::SZero:
      for (Elem v : ctx.nonsquare_pairs()) {
        factors.push_back({quadratic(fp, f.neg(one), f.mul(v, quarter)), 1});
      }
      break;
    case CaseKind::SplitLinearQuadratic: {
      const Elem half = f.inv(f.from_int(2));
      const Elem one_plus_s = f.add(one, s);
      factors.push_back({linear(fp, f.mul(one_plus_s, half)), 1});
      factors.push_back({linear(fp, f.mul(f.sub(one, s), half)), 1});
      for (Elem a : ctx.square_pairs()) {
        const Elem two_a = f.add(a, a);
        const Elem b = f.sub(f.mul(two_a, s), one_plus_s);
        const Elem root = f.sub(two_a, one_plus_s);
        factors.push_back({quadratic(fp, b, f.mul(f.sqr(root), quarter)), 1});
      }
      break;
    }
    case CaseKind::AllQuadratic:
      for (Elem w : ctx.nonsquare_halves()) {
        const Elem b = f.neg(f.add(one, f.mul(s, w)));
        factors.push_back({quadratic(fp, b, f.mul(f.sqr(f.add(s, w)), quarter)), 1});
      }
      break;
    case CaseKind::DegreeE: {
      DeepCase deep = deep_case(ctx, s, seed);
      for (Elem m : deep.m) {
        factors.push_back({deep.norm - Poly::constant(fp, m), 1});
      }
      out.constant_terms = std::move(deep.m);
      break;
    }
  }
  out.factorization.canonicalize();
  if (!(out.factorization.expand() == ctx.g(s))) {
    throw InvariantError("closed-form factorization does not reproduce g_s");
  }
  return out;
}

std::vector<Elem> constant_terms(const DicksonCtx& ctx, Elem s, u64 seed) {
  if (classify(ctx, s).kind != CaseKind::DegreeE) {
    throw PreconditionError("constant terms need rho(1 - s^2) = 1 and s != 0");
  }
  return deep_case(ctx, s, seed).m;
}

bool g_is_irreducible(const DicksonCtx& ctx, Elem s) {
  const CaseTag tag = classify(ctx, s);
  if (ctx.big_e() == 2) {
    // q = 3, 5: no sequence has period E, but g_s may be one quadratic.
    const auto& factors = factor_closed_form(ctx, s).factorization.factors;
    return factors.size() == 1 && factors[0].mult == 1 && factors[0].poly.degree() == 2;
  }
  return tag.kind == CaseKind::DegreeE && tag.e == ctx.big_e();
}

std::vector<Elem> irreducible_s_values(const DicksonCtx& ctx) {
  std::vector<Elem> out;
  for (Elem s : ctx.field().elements()) {
    if (g_is_irreducible(ctx, s)) out.push_back(s);
  }
  return out;
}

std::vector<Elem> irreducible_s_values_by_order(const DicksonCtx& ctx) {
  const Field& f = ctx.field();
  const QuadExt& x = f.ext();
  const u64 order = 2 * ctx.big_e();

  // An element of order 2E: a primitive root of F_q when 2E = q - 1, else
  // x^(q-1) for a generator x of the extension's unit group.
  std::optional<Elem2> gamma;
  if (order == f.q() - 1) {
    for (Elem a : f.elements()) {
      if (a != f.zero() && f.mult_order(a) == order) {
        gamma = x.embed(a);
        break;
      }
    }
  } else {
    for (u64 b = 1; b < f.q() && !gamma; ++b) {
      for (u64 a = 0; a < f.q(); ++a) {
        const Elem2 z{Elem{a}, Elem{b}};
        if (x.mult_order(z) == x.group_order()) {
          gamma = x.pow(z, f.q() - 1);
          break;
        }
      }
    }
  }
  if (!gamma || x.mult_order(*gamma) != order) throw InvariantError("no element of order 2E found");

  const Elem half = f.inv(f.from_int(2));
  std::vector<Elem> out;
  Elem2 bj = x.one();
  for (u64 j = 1; j <= order; ++j) {
    bj = x.mul(bj, *gamma);
    if (std::gcd(j, order) != 1) continue;
    const auto v = x.project(x.scale(x.add(bj, x.inv(bj)), half));
    if (!v) throw InvariantError("(B + 1/B)/2 left the base field");
    out.push_back(*v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TraceClass trace_class(const DicksonCtx& ctx, Elem s) {
  const Field& f = ctx.field();
  const Elem c = f.sub(f.one(), f.sqr(s));
  if (s == f.zero() || f.quad_char(c) != 1) return TraceClass::Neither;
  const u64 d = recurrence_period(f, c);
  const QuadExt& x = f.ext();
  const Elem2 z = x.add(x.embed(s), x.scale(x.i(), *f.sqrt(c)));
  const u64 o = x.mult_order(z);
  if (o == 2 * d) return TraceClass::B;
  if (o == d && d % 2 == 1) return TraceClass::BPrime;
  throw InvariantError("s + i sqrt(1 - s^2) has order neither 2d nor odd d");
}

NormClass norm_residuacity(const DicksonCtx& ctx, Elem s, u64 seed) {
  const Field& f = ctx.field();
  const CaseTag tag = classify(ctx, s);
  if (tag.kind != CaseKind::DegreeE) {
    throw PreconditionError("norm classes need rho(1 - s^2) = 1 and s != 0");
  }
  NormClass out;
  out.s = s;
  out.d = tag.e;
  out.membership = trace_class(ctx, s);
  out.norms = constant_terms(ctx, s, seed);
  out.partner_norms = constant_terms(ctx, f.neg(s), seed);
  const int first = f.quad_char(out.norms.front());
  const bool shared = std::all_of(out.norms.begin(), out.norms.end(),
                                  [&](Elem m) { return f.quad_char(m) == first; });
  if (shared) out.residue = first;
  if (out.d % 2 == 1) {
    const int expected = out.membership == TraceClass::B ? -1 : 1;
    if (!shared || first != expected) {
      throw InvariantError("norm residues disagree with the trace class for odd d");
    }
  }
  return out;
}

CubicComplement cubic_norm_complement(const DicksonCtx& ctx, u64 seed) {
  const Field& f = ctx.field();
  const u64 q = f.q();
  if (q % 12 != 1 && q % 12 != 11) throw PreconditionError("q must be +-1 mod 12");
  const Elem half = f.inv(f.from_int(2));
  CubicComplement out;
  out.u = constant_terms(ctx, half, seed);
  const std::vector<Elem> other = constant_terms(ctx, f.neg(half), seed);
  out.u.insert(out.u.end(), other.begin(), other.end());
  std::sort(out.u.begin(), out.u.end());
  out.u.erase(std::unique(out.u.begin(), out.u.end()), out.u.end());

  const Elem three_quarters = f.div(f.from_int(3), f.from_int(4));
  for (Elem x : f.elements()) out.v.push_back(f.mul(x, f.sqr(f.sub(x, three_quarters))));
  std::sort(out.v.begin(), out.v.end());
  out.v.erase(std::unique(out.v.begin(), out.v.end()), out.v.end());

  std::vector<Elem> rest;
  for (Elem x : f.elements()) {
    if (!std::binary_search(out.v.begin(), out.v.end(), x)) rest.push_back(x);
  }
  out.complement = rest == out.u;
  const i64 rho = ctx.rho_minus_one();
  const i64 iq = static_cast<i64>(q);
  out.sizes = static_cast<i64>(out.v.size()) * 3 == 2 * iq + rho &&
              static_cast<i64>(out.u.size()) * 3 == iq - rho;
  return out;
}

// ---------------------------------------------------------------------------
// Period families.

namespace {

struct Rat {
  i64 num;
  i64 den;
};

Elem rat(const Field& f, Rat r) { return f.div(f.from_int(r.num), f.from_int(r.den)); }

u64 family_modulus(unsigned d) {
  switch (d) {
    case 3: case 6: return 12;
    case 4: return 8;
    case 5: case 10: return 20;
    case 8: return 16;
    case 12: return 24;
  }
  throw DomainError("no period family for this d");
}

// Radicand of the surd in c, or 0 when c is rational.
i64 family_surd(unsigned d) {
  switch (d) {
    case 5: case 10: return 5;
    case 8: return 2;
    case 12: return 3;
    default: return 0;
  }
}

// Coefficients of N from the top degree down.
std::vector<Rat> family_norm_coeffs(unsigned d) {
  switch (d) {
    case 3: return {{1, 1}, {-3, 2}, {9, 16}, {0, 1}};
    case 4: return {{1, 1}, {-2, 1}, {5, 4}, {-1, 4}, {0, 1}};
    case 5: return {{1, 1}, {-5, 2}, {35, 16}, {-25, 32}, {25, 256}, {0, 1}};
    case 6: return {{1, 1}, {-3, 1}, {27, 8}, {-7, 4}, {105, 256}, {-9, 256}, {0, 1}};
    case 8:
      return {{1, 1}, {-4, 1}, {13, 2}, {-11, 2}, {165, 64},
              {-21, 32}, {21, 256}, {-1, 256}, {0, 1}};
    case 10:
      return {{1, 1},        {-5, 1},        {85, 8},       {-25, 2},
              {2275, 256},   {-1001, 256},   {2145, 2048},  {-165, 1024},
              {825, 65536},  {-25, 65536},   {0, 1}};
    case 12:
      return {{1, 1},          {-6, 1},          {63, 4},          {-95, 4},
              {2907, 128},     {-459, 32},       {1547, 256},      {-429, 256},
              {19305, 65536},  {-1001, 32768},   {429, 262144},    {-9, 262144},
              {0, 1}};
  }
  throw DomainError("no period family for this d");
}

// (c, c_1 .. c_{d/2}) for one choice r of the surd root.
std::pair<Elem, std::vector<Elem>> family_terms(const Field& f, unsigned d, Elem r) {
  const Elem one = f.one();
  const auto q = [&](i64 a, i64 b) { return rat(f, {a, b}); };
  switch (d) {
    case 3: return {q(3, 4), {q(3, 4)}};
    case 4: return {q(1, 2), {q(1, 2), one}};
    case 6: return {q(1, 4), {q(1, 4), q(3, 4), one}};
    case 5: {
      const Elem c = f.div(f.add(f.from_int(5), r), f.from_int(8));
      const Elem c2 = f.div(f.sub(f.from_int(5), r), f.from_int(8));
      return {c, {c, c2}};
    }
    case 8: {
      const Elem c = f.div(f.add(f.from_int(2), r), f.from_int(4));
      return {c, {c, q(1, 2), f.sub(one, c), one}};
    }
    case 10: {
      const Elem c = f.div(f.sub(f.from_int(3), r), f.from_int(8));
      const Elem c2 = f.div(f.add(f.from_int(3), r), f.from_int(8));
      const Elem quarter = q(1, 4);
      return {c, {c, f.add(c, quarter), c2, f.add(c2, quarter), one}};
    }
    case 12: {
      const Elem c = f.div(f.add(f.from_int(2), r), f.from_int(4));
      const Elem c5 = f.div(f.sub(f.from_int(2), r), f.from_int(4));
      return {c, {c, q(1, 4), q(1, 2), q(3, 4), c5, one}};
    }
  }
  throw DomainError("no period family for this d");
}

}  // namespace

bool period_family_applies(u64 q, unsigned d) {
  const u64 m = family_modulus(d);
  return q % m == 1 || q % m == m - 1;
}

PeriodFamilyResult check_period_family(const DicksonCtx& ctx, unsigned d, u64 seed) {
  const Field& f = ctx.field();
  const FieldPtr& fp = ctx.field_ptr();
  if (!period_family_applies(f.q(), d)) {
    throw PreconditionError("q does not satisfy the congruence for period " + std::to_string(d));
  }
  PeriodFamilyResult out;
  out.d = d;

  std::vector<Elem> roots{f.zero()};
  if (const i64 radicand = family_surd(d); radicand != 0) {
    const auto r = f.sqrt(f.from_int(radicand));
    if (!r) throw PreconditionError("the surd for period " + std::to_string(d) + " is not in F_q");
    roots = {*r, f.neg(*r)};
  }

  std::vector<Elem> expected_norm;
  for (Rat c : family_norm_coeffs(d)) expected_norm.push_back(rat(f, c));
  std::reverse(expected_norm.begin(), expected_norm.end());
  const Poly expected_n(fp, expected_norm);

  const auto fail = [&](std::string why) {
    out.passed = false;
    out.detail = std::move(why);
    return out;
  };

  for (Elem r : roots) {
    ++out.variants;
    const auto [c, half_terms] = family_terms(f, d, r);
    if (!in_square_pairs(f, c)) return fail("c is not in the square-pair set");
    const RecurrenceProfile prof = build_profile(fp, c);
    if (prof.e != d) return fail("period is " + std::to_string(prof.e));
    for (std::size_t k = 1; k <= half_terms.size(); ++k) {
      if (prof.terms[k] != half_terms[k - 1] || prof.terms[d - k] != half_terms[k - 1]) {
        return fail("term c_" + std::to_string(k) + " differs from the expected value");
      }
    }
    const Poly norm = build_norm_poly(prof);
    if (!(norm == expected_n)) return fail("N differs from the expected coefficients");

    const Elem root = *f.sqrt(f.sub(f.one(), c));
    for (Elem s : {root, f.neg(root)}) {
      const CaseTag tag = classify(ctx, s);
      if (tag.kind != CaseKind::DegreeE || tag.e != d) return fail("classification of s");
      const Poly g = ctx.g(s);
      const std::vector<Elem> ms = constant_terms(ctx, s, seed);
      if (ms.size() != ctx.big_e() / d) return fail("wrong number of constant terms");
      for (Elem m : ms) {
        const Poly factor = norm - Poly::constant(fp, m);
        if (!is_irreducible(factor)) return fail("N - m is reducible");
        if (!(g % factor).is_zero()) return fail("N - m does not divide g_s");
      }
    }
  }
  out.passed = true;
  return out;
}

bool surd_check_applies(u64 q, SurdCheck which) {
  if (!is_prime_u64(q)) return false;
  if (which == SurdCheck::Five) return q % 20 == 9 || q % 20 == 11;
  return q % 16 == 7 || q % 16 == 9;
}

bool surd_check_holds(const Field& f, SurdCheck which) {
  const auto r = f.sqrt(f.from_int(which == SurdCheck::Five ? 5 : 2));
  if (!r) return false;
  for (Elem root : {*r, f.neg(*r)}) {
    const Elem v = which == SurdCheck::Five ? f.div(f.add(f.from_int(5), root), f.from_int(2))
                                             : f.add(f.from_int(2), root);
    if (f.quad_char(v) != -1) return false;
  }
  return true;
}

bool matches_oracle(const DicksonCtx& ctx, Elem s, u64 seed) {
  const ClosedForm closed = factor_closed_form(ctx, s, seed);
  const Factorization oracle = factorize(ctx.g(s), s_seed(ctx, s, seed));
  return closed.factorization == oracle;
}

}  // namespace gsf
