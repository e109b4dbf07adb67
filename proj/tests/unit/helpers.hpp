#pragma once

#include <initializer_list>
#include <vector>

#include "gsfactor/polyring.hpp"

namespace testutil {

using namespace gsf;

inline Elem el(const Field& f, i64 v) { return f.from_int(v); }

// a/b in F_q.
inline Elem frac(const Field& f, i64 a, i64 b) { return f.div(f.from_int(a), f.from_int(b)); }

// Polynomial from integer coefficients, constant term first.
inline Poly poly(const FieldPtr& f, std::initializer_list<i64> coeffs) {
  std::vector<Elem> c;
  for (i64 v : coeffs) c.push_back(f->from_int(v));
  return Poly(f, std::move(c));
}

inline Poly lin(const FieldPtr& f, Elem root) { return Poly(f, {f->neg(root), f->one()}); }

inline Poly power(const Poly& base, u64 e) {
  Poly r = Poly::constant(base.field_ptr(), base.field().one());
  for (u64 i = 0; i < e; ++i) r = r * base;
  return r;
}

// y^n + (1-y)^n - s by repeated multiplication, independent of the library's
// binomial construction.
inline Poly naive_g(const FieldPtr& f, Elem s) {
  const u64 n = (f->q() + 1) / 2;
  const Poly y = Poly::var(f);
  const Poly one_minus_y = Poly::constant(f, f->one()) - y;
  return power(y, n) + power(one_minus_y, n) - Poly::constant(f, s);
}

inline std::vector<u64> codes(const std::vector<Elem>& xs) {
  std::vector<u64> out;
  for (Elem x : xs) out.push_back(x.code);
  return out;
}

inline std::vector<u64> codes(std::span<const Elem> xs) {
  std::vector<u64> out;
  for (Elem x : xs) out.push_back(x.code);
  return out;
}

// Brute-force squares of F_q.
inline std::vector<bool> square_table(const Field& f) {
  std::vector<bool> sq(f.q(), false);
  for (u64 x = 1; x < f.q(); ++x) sq[f.sqr(Elem{x}).code] = true;
  return sq;
}

inline std::vector<u64> odd_prime_powers_up_to(u64 bound) {
  std::vector<u64> out;
  for (u64 q = 3; q <= bound; q += 2) {
    if (odd_prime_power(q)) out.push_back(q);
  }
  return out;
}

inline FieldPtr field_of(u64 q) {
  const auto pk = *odd_prime_power(q);
  return Field::make(pk.first, pk.second);
}

}  // namespace testutil
