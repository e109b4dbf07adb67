#pragma once

#include <memory>
#include <vector>

#include "gsfactor/polyring.hpp"

namespace gsf {

// Per-field data for the family g_s(y) = y^n + (1-y)^n - s, n = (q+1)/2:
//   f(y) = (1 + sqrt y)^n + (1 - sqrt y)^n, degree floor(n/2), lead tau
//   E    = (q - rho(-1)) / 2 = deg g_s
//   tau  = 1 if q = 1 mod 4, else 2
// and the element sets built by enumeration (all sorted):
//   square_pairs     {a : rho(a) = rho(1-a) = 1}
//   nonsquare_pairs  {j : rho(j) = rho(1-j) = -1}
//   nonsquare_halves {w : rho((1+w)/2) = rho((1-w)/2) = -1}
class DicksonCtx {
 public:
  // Enumerates F_q; throws GuardError above Field::kEnumerateLimit.
  explicit DicksonCtx(FieldPtr field);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  u64 n() const noexcept { return n_; }
  u64 big_e() const noexcept { return big_e_; }
  int rho_minus_one() const noexcept { return rho_minus_one_; }
  Elem tau() const noexcept { return tau_; }
  // tau^2 / 2, the leading coefficient of every g_s.
  Elem lead() const noexcept { return lead_; }

  const std::vector<Elem>& square_pairs() const noexcept { return square_pairs_; }
  const std::vector<Elem>& nonsquare_pairs() const noexcept { return nonsquare_pairs_; }
  const std::vector<Elem>& nonsquare_halves() const noexcept { return nonsquare_halves_; }

  const Poly& f() const noexcept { return f_; }
  Poly g(Elem s) const;

 private:
  FieldPtr field_;
  u64 n_;
  u64 big_e_;
  int rho_minus_one_;
  Elem tau_;
  Elem lead_;
  std::vector<Elem> square_pairs_;
  std::vector<Elem> nonsquare_pairs_;
  std::vector<Elem> nonsquare_halves_;
  std::vector<Elem> binom_;  // C(n, j) mod p for j = 0..n
  Poly f_;
};

using DicksonPtr = std::shared_ptr<const DicksonCtx>;

// C(n, m) mod p by Lucas' theorem; p prime.
u64 binomial_mod_p(u64 n, u64 m, u64 p);

}  // namespace gsf
