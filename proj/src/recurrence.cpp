#include "gsfactor/recurrence.hpp"

#include <algorithm>

namespace gsf {

u64 half_order(const Field& f) {
  return f.q() % 4 == 1 ? (f.q() - 1) / 2 : (f.q() + 1) / 2;
}

bool in_square_pairs(const Field& f, Elem c) {
  return f.quad_char(c) == 1 && f.quad_char(f.sub(f.one(), c)) == 1;
}

namespace {

Elem step(const Field& f, Elem mult, Elem two_c, Elem cur, Elem prev) {
  return f.add(f.sub(f.mul(mult, cur), prev), two_c);
}

}  // namespace

u64 recurrence_period(const Field& f, Elem c) {
  if (!in_square_pairs(f, c)) throw PreconditionError("c and 1-c must both be nonzero squares");
  const Elem mult = f.sub(f.from_int(2), f.mul(f.from_int(4), c));
  const Elem two_c = f.add(c, c);
  const u64 bound = half_order(f);
  Elem prev = f.zero();
  Elem cur = c;
  for (u64 k = 1; k <= bound; ++k) {
    if (cur == f.zero()) return k;
    const Elem next = step(f, mult, two_c, cur, prev);
    prev = cur;
    cur = next;
  }
  throw InvariantError("recurrence did not return to zero within E steps");
}

RecurrenceProfile build_profile(FieldPtr fp, Elem c) {
  const Field& f = *fp;
  RecurrenceProfile prof;
  prof.field = fp;
  prof.c = c;
  prof.e = recurrence_period(f, c);
  const u64 e = prof.e;

  const Elem mult = f.sub(f.from_int(2), f.mul(f.from_int(4), c));
  const Elem two_c = f.add(c, c);
  prof.terms.reserve(e + 1);
  prof.terms.push_back(f.zero());
  prof.terms.push_back(c);
  while (prof.terms.size() <= e) {
    const std::size_t k = prof.terms.size() - 1;
    prof.terms.push_back(step(f, mult, two_c, prof.terms[k], prof.terms[k - 1]));
  }

  const QuadExt& x = f.ext();
  const Elem r1mc = *f.sqrt(f.sub(f.one(), c));
  const Elem rc = *f.sqrt(c);
  prof.beta = x.add(x.embed(r1mc), x.scale(x.i(), rc));
  prof.beta_order = x.mult_order(prof.beta);
  if (prof.beta_order % 2 == 1) {
    prof.beta = x.neg(prof.beta);
    prof.beta_order = x.mult_order(prof.beta);
  }
  if (prof.beta_order != 2 * e) throw InvariantError("ord(beta) != 2e");

  const Elem2 minus_half_i = x.scale(x.i(), f.neg(f.inv(f.from_int(2))));
  const Elem half = f.inv(f.from_int(2));
  const Elem minus_quarter = f.neg(f.inv(f.from_int(4)));
  const Elem2 beta_inv = x.inv(prof.beta);
  Elem2 bk = x.one();
  Elem2 bmk = x.one();
  prof.sqrt_c.reserve(e + 1);
  prof.sqrt_1mc.reserve(e + 1);
  prof.sqrt_ckck2.reserve(e + 1);
  for (u64 k = 0; k <= e; ++k) {
    const Elem2 diff = x.sub(bk, bmk);
    const auto sc = x.project(x.mul(minus_half_i, diff));
    const auto s1 = x.project(x.scale(x.add(bk, bmk), half));
    const auto ck = x.project(x.scale(x.mul(diff, diff), minus_quarter));
    if (!sc || !s1 || !ck) throw InvariantError("beta-derived roots left the base field");
    if (*ck != prof.terms[k]) throw InvariantError("closed form of c_k disagrees with the recurrence");
    if (f.sqr(*sc) != prof.terms[k] || f.sqr(*s1) != f.sub(f.one(), prof.terms[k])) {
      throw InvariantError("beta-derived roots do not square to c_k, 1-c_k");
    }
    prof.sqrt_c.push_back(*sc);
    prof.sqrt_1mc.push_back(*s1);
    prof.sqrt_ckck2.push_back(f.mul(*sc, *s1));
    bk = x.mul(bk, prof.beta);
    bmk = x.mul(bmk, beta_inv);
  }
  return prof;
}

Elem RecurrenceProfile::term(i64 k) const {
  const i64 ie = static_cast<i64>(e);
  i64 r = k % ie;
  if (r < 0) r += ie;
  return terms[static_cast<std::size_t>(r)];
}

namespace {

// Reduces k modulo 2e into [0, e] and reports whether beta^e = -1 flipped it.
std::pair<std::size_t, bool> reduce_index(i64 k, u64 e) {
  const i64 period = 2 * static_cast<i64>(e);
  i64 r = k % period;
  if (r < 0) r += period;
  if (r > static_cast<i64>(e)) return {static_cast<std::size_t>(r - static_cast<i64>(e)), true};
  return {static_cast<std::size_t>(r), false};
}

}  // namespace

Elem RecurrenceProfile::root_c(i64 k) const {
  const auto [r, flip] = reduce_index(k, e);
  return flip ? field->neg(sqrt_c[r]) : sqrt_c[r];
}

Elem RecurrenceProfile::root_1mc(i64 k) const {
  const auto [r, flip] = reduce_index(k, e);
  return flip ? field->neg(sqrt_1mc[r]) : sqrt_1mc[r];
}

std::pair<Elem, Elem> neighbor_pair(const RecurrenceProfile& prof, i64 k) {
  const Field& f = *prof.field;
  const Elem ck = prof.term(k);
  const Elem c1 = prof.term(1);
  const Elem base = f.sub(f.add(ck, c1), f.mul(f.from_int(2), f.mul(ck, c1)));
  const Elem cross = f.mul(f.from_int(2), f.mul(prof.root_ckck2(k), prof.root_ckck2(1)));
  return {f.add(base, cross), f.sub(base, cross)};
}

Elem big_term(const Field& f, Elem2 b, i64 j) {
  const QuadExt& x = f.ext();
  const u64 order = x.mult_order(b);
  i64 r = j % static_cast<i64>(order);
  if (r < 0) r += static_cast<i64>(order);
  const Elem2 bj = x.pow(b, static_cast<u64>(r));
  const Elem2 diff = x.sub(bj, x.inv(bj));
  const auto v = x.project(x.scale(x.mul(diff, diff), f.neg(f.inv(f.from_int(4)))));
  if (!v) throw InvariantError("C_j left the base field");
  return *v;
}

BigSequence big_sequence(const Field& f, Elem2 b) {
  const QuadExt& x = f.ext();
  const u64 big_e = half_order(f);
  if (x.mult_order(b) != 2 * big_e) throw DomainError("B must have order 2E");
  const Elem minus_quarter = f.neg(f.inv(f.from_int(4)));
  const Elem2 b_inv = x.inv(b);
  BigSequence out;
  Elem2 bj = b;
  Elem2 bmj = b_inv;
  for (u64 j = 1; j + 1 <= big_e / 2; ++j) {
    const Elem2 diff = x.sub(bj, bmj);
    const auto v = x.project(x.scale(x.mul(diff, diff), minus_quarter));
    if (!v) throw InvariantError("C_j left the base field");
    out.values.push_back(*v);
    bj = x.mul(bj, b);
    bmj = x.mul(bmj, b_inv);
  }
  out.first = big_term(f, b, 1);
  std::sort(out.values.begin(), out.values.end());
  out.values.erase(std::unique(out.values.begin(), out.values.end()), out.values.end());
  return out;
}

}  // namespace gsf
