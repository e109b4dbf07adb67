#pragma once

#include <utility>
#include <vector>

#include "gsfactor/ffield.hpp"

namespace gsf {

// E = (q - rho(-1)) / 2.
u64 half_order(const Field& f);

// True when c and 1 - c are both nonzero squares.
bool in_square_pairs(const Field& f, Elem c);

// Period of c_{k+1} = (2 - 4c) c_k - c_{k-1} + 2c with c_0 = 0, c_1 = c: the
// first k > 0 with c_k = 0. Throws PreconditionError unless c is in the set
// above.
u64 recurrence_period(const Field& f, Elem c);

// The sequence for one c together with beta = sqrt(1-c) + i sqrt(c) (sign
// normalized so that ord(beta) = 2e) and the beta-derived square roots
//   root_c(k)   = (-i/2)(beta^k - beta^-k),   root_c(k)^2   = c_k
//   root_1mc(k) = (beta^k + beta^-k)/2,       root_1mc(k)^2 = 1 - c_k.
// These roots depend on the index k, never on the value c_k.
struct RecurrenceProfile {
  FieldPtr field;
  Elem c;
  u64 e = 0;
  std::vector<Elem> terms;  // c_0 .. c_e
  Elem2 beta;
  u64 beta_order = 0;
  std::vector<Elem> sqrt_c;      // index 0 .. e
  std::vector<Elem> sqrt_1mc;    // index 0 .. e
  std::vector<Elem> sqrt_ckck2;  // sqrt_c[k] * sqrt_1mc[k]

  // c_k for any integer k (period e, symmetric about 0).
  Elem term(i64 k) const;
  // Roots for any integer k; beta^e = -1 flips both signs past e.
  Elem root_c(i64 k) const;
  Elem root_1mc(i64 k) const;
  Elem root_ckck2(i64 k) const { return field->mul(root_c(k), root_1mc(k)); }
};

RecurrenceProfile build_profile(FieldPtr f, Elem c);

// c_k + c_1 - 2 c_k c_1 +/- 2 root_ckck2(k) root_ckck2(1); the unordered pair
// equals {c_{k-1}, c_{k+1}}.
std::pair<Elem, Elem> neighbor_pair(const RecurrenceProfile& prof, i64 k);

// C_j = -(B^j - B^-j)^2 / 4 for B of order 2E in the quadratic extension.
Elem big_term(const Field& f, Elem2 b, i64 j);

struct BigSequence {
  Elem first;                 // C_1
  std::vector<Elem> values;   // {C_j : 1 <= j <= E/2 - 1}, sorted, distinct
};
// Throws DomainError unless ord(B) = 2E.
BigSequence big_sequence(const Field& f, Elem2 b);

}  // namespace gsf
