#include "gsfactor/dickson.hpp"

#include "gsfactor/recurrence.hpp"

namespace gsf {

namespace {

u64 mod_pow(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = static_cast<u64>(static_cast<u128>(r) * a % p);
    a = static_cast<u64>(static_cast<u128>(a) * a % p);
    e >>= 1;
  }
  return r;
}

// Binomials C(a, b) for 0 <= b <= a < p via factorial tables.
class SmallBinomials {
 public:
  explicit SmallBinomials(u64 p) : p_(p), fact_(p), inv_fact_(p) {
    fact_[0] = 1;
    for (u64 i = 1; i < p; ++i) fact_[i] = static_cast<u64>(static_cast<u128>(fact_[i - 1]) * i % p);
    inv_fact_[p - 1] = mod_pow(fact_[p - 1], p - 2, p);
    for (u64 i = p - 1; i > 0; --i) {
      inv_fact_[i - 1] = static_cast<u64>(static_cast<u128>(inv_fact_[i]) * i % p);
    }
  }

  u64 operator()(u64 a, u64 b) const {
    if (b > a) return 0;
    const u128 t = static_cast<u128>(fact_[a]) * inv_fact_[b] % p_;
    return static_cast<u64>(t * inv_fact_[a - b] % p_);
  }

  u64 lucas(u64 n, u64 m) const {
    u64 r = 1;
    while (m > 0 || n > 0) {
      const u64 c = (*this)(n % p_, m % p_);
      if (c == 0) return 0;
      r = static_cast<u64>(static_cast<u128>(r) * c % p_);
      n /= p_;
      m /= p_;
    }
    return r;
  }

 private:
  u64 p_;
  std::vector<u64> fact_;
  std::vector<u64> inv_fact_;
};

}  // namespace

u64 binomial_mod_p(u64 n, u64 m, u64 p) {
  if (m > n) return 0;
  if (p > Field::kEnumerateLimit) throw GuardError("binomial_mod_p: p too large for factorial tables");
  return SmallBinomials(p).lucas(n, m);
}

DicksonCtx::DicksonCtx(FieldPtr field) : field_(std::move(field)), f_(field_) {
  const Field& F = *field_;
  F.check_enumerable();
  const u64 q = F.q();
  n_ = (q + 1) / 2;
  rho_minus_one_ = q % 4 == 1 ? 1 : -1;
  big_e_ = half_order(F);
  tau_ = F.from_int(rho_minus_one_ == 1 ? 1 : 2);
  lead_ = F.div(F.sqr(tau_), F.from_int(2));

  const Elem half = F.inv(F.from_int(2));
  for (Elem a : F.elements()) {
    const Elem one_minus = F.sub(F.one(), a);
    const int ra = F.quad_char(a);
    const int rb = F.quad_char(one_minus);
    if (ra == 1 && rb == 1) square_pairs_.push_back(a);
    if (ra == -1 && rb == -1) nonsquare_pairs_.push_back(a);
    if (F.quad_char(F.mul(F.add(F.one(), a), half)) == -1 &&
        F.quad_char(F.mul(one_minus, half)) == -1) {
      nonsquare_halves_.push_back(a);
    }
  }
  if (square_pairs_.size() + 1 != big_e_ / 2) throw InvariantError("|C| != E/2 - 1");
  if (nonsquare_halves_.size() != big_e_ / 2) throw InvariantError("|W| != (q - rho(-1))/4");

  const SmallBinomials binom(F.p());
  binom_.resize(n_ + 1);
  for (u64 j = 0; j <= n_; ++j) binom_[j] = F.from_int(static_cast<i64>(binom.lucas(n_, j)));

  // (1+t)^n + (1-t)^n = 2 * sum C(n, 2i) t^(2i).
  std::vector<Elem> fc(n_ / 2 + 1);
  for (u64 i = 0; i <= n_ / 2; ++i) fc[i] = F.add(binom_[2 * i], binom_[2 * i]);
  f_ = Poly(field_, std::move(fc));
  if (f_.degree() != static_cast<int>(n_ / 2) || f_.lead() != tau_) {
    throw InvariantError("f has the wrong degree or leading coefficient");
  }
}

Poly DicksonCtx::g(Elem s) const {
  const Field& F = *field_;
  std::vector<Elem> c(n_ + 1);
  for (u64 j = 0; j <= n_; ++j) c[j] = j % 2 == 0 ? binom_[j] : F.neg(binom_[j]);
  c[n_] = F.add(c[n_], F.one());
  c[0] = F.sub(c[0], s);
  Poly out(field_, std::move(c));
  if (out.degree() != static_cast<int>(big_e_)) throw InvariantError("deg g_s != E");
  return out;
}

}  // namespace gsf
