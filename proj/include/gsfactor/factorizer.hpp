#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsfactor/dickson.hpp"
#include "gsfactor/recurrence.hpp"

namespace gsf {

enum class CaseKind {
  SPlusOne,
  SMinusOne,
  SZero,
  SplitLinearQuadratic,  // rho(1-s^2) = -1, rho((1+s)/2) = 1
  AllQuadratic,          // rho(1-s^2) = -1, rho((1+s)/2) = -1
  DegreeE,               // rho(1-s^2) = 1, s != 0
};

std::string_view case_name(CaseKind kind);

struct CaseTag {
  CaseKind kind;
  int rho_one_minus_s2;
  int rho_half_one_plus_s;
  int rho_half_one_minus_s;
  u64 e = 0;  // DegreeE only: period of the sequence for c = 1 - s^2
};

CaseTag classify(const DicksonCtx& ctx, Elem s);

// N(y) = y * prod_{k=1}^{(e-1)/2} (y - c_k)^2            for odd e,
//        (y^2 - y) * prod_{k=1}^{(e-2)/2} (y - c_k)^2    for even e.
Poly build_norm_poly(const RecurrenceProfile& prof);

struct ClosedForm {
  CaseTag tag;
  Factorization factorization;
  std::vector<Elem> constant_terms;  // DegreeE: the m with N(y) - m a factor
};

// Factorization of g_s from the case formulas. Verifies that the product
// reproduces g_s and throws InvariantError otherwise.
ClosedForm factor_closed_form(const DicksonCtx& ctx, Elem s, u64 seed = kDefaultSeed);

// Roots of h where (2/tau^2) g_s = h(N). Requires the DegreeE case.
std::vector<Elem> constant_terms(const DicksonCtx& ctx, Elem s, u64 seed = kDefaultSeed);

// For E > 2 this is the period test: DegreeE with e = E.
bool g_is_irreducible(const DicksonCtx& ctx, Elem s);
// All s with g_s irreducible, by the period test.
std::vector<Elem> irreducible_s_values(const DicksonCtx& ctx);
// The same set as {(B + 1/B)/2 : ord(B) = 2E} in the quadratic extension.
std::vector<Elem> irreducible_s_values_by_order(const DicksonCtx& ctx);

// Whether s = (z + 1/z)/2 for z of order 2d (TraceClass::B), or -s is
// (TraceClass::BPrime, odd d only), where d is the period for c = 1 - s^2.
enum class TraceClass { Neither, B, BPrime };
std::string_view trace_class_name(TraceClass t);
TraceClass trace_class(const DicksonCtx& ctx, Elem s);

struct NormClass {
  Elem s;
  u64 d = 0;
  TraceClass membership = TraceClass::Neither;
  std::vector<Elem> norms;          // constant terms for s
  std::vector<Elem> partner_norms;  // constant terms for -s
  std::optional<int> residue;       // common rho of norms, if shared
};

// Requires DegreeE. For odd d, asserts norms are all nonsquares when
// membership is B and all squares when BPrime.
NormClass norm_residuacity(const DicksonCtx& ctx, Elem s, u64 seed = kDefaultSeed);

struct CubicComplement {
  std::vector<Elem> u;  // constant terms for s = 1/2 and s = -1/2
  std::vector<Elem> v;  // {x (x - 3/4)^2}
  bool complement = false;
  bool sizes = false;   // |V| = (2q + rho(-1))/3 and |U| = (q - rho(-1))/3
  bool holds() const { return complement && sizes; }
};

// Requires q = +-1 mod 12.
CubicComplement cubic_norm_complement(const DicksonCtx& ctx, u64 seed = kDefaultSeed);

// Sequences of period 3, 4, 5, 6, 8, 10, 12 built from explicit c values.
inline constexpr unsigned kPeriodFamilies[] = {3, 4, 5, 6, 8, 10, 12};

bool period_family_applies(u64 q, unsigned d);

struct PeriodFamilyResult {
  unsigned d = 0;
  std::size_t variants = 0;  // surd sign choices tried
  bool passed = false;
  std::string detail;        // first failing check, empty on success
};

// For each sign choice of the surd: c lies in the square pairs, the sequence
// has period d with the expected terms, N matches the expected coefficients,
// and for s = +-sqrt(1-c) every N - m is irreducible and divides g_s.
// Throws PreconditionError when the congruence on q fails.
PeriodFamilyResult check_period_family(const DicksonCtx& ctx, unsigned d, u64 seed = kDefaultSeed);

// For prime q = +-9 mod 20, (5 + r)/2 is a nonsquare for both roots r of 5;
// for prime q = +-7 mod 16, 2 + r is a nonsquare for both roots r of 2.
enum class SurdCheck { Five, Two };
bool surd_check_applies(u64 q, SurdCheck which);
bool surd_check_holds(const Field& f, SurdCheck which);

// factor_closed_form equals the generic factorization of g_s.
bool matches_oracle(const DicksonCtx& ctx, Elem s, u64 seed = kDefaultSeed);

}  // namespace gsf
