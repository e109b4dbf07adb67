#include "gsfactor/ffield.hpp"

#include <algorithm>
#include <string>

#include "gsfactor/polyring.hpp"

namespace gsf {

namespace {

u64 mulmod64(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Integer k-th root, floor.
u64 iroot(u64 n, unsigned k) {
  u64 lo = 1, hi = n;
  if (k >= 64) return 1;
  hi = std::min<u64>(n, u64{1} << (64 / k + 1));
  while (lo < hi) {
    const u64 mid = lo + (hi - lo + 1) / 2;
    u128 x = 1;
    bool over = false;
    for (unsigned i = 0; i < k && !over; ++i) {
      x *= mid;
      over = x > n;
    }
    if (over) {
      hi = mid - 1;
    } else {
      lo = mid;
    }
  }
  return lo;
}

// Tonelli-Shanks in a cyclic group of order odd * 2^twos. `a` must be a
// nonzero square and `nonres` a nonsquare.
template <class T, class Mul, class Pow>
T tonelli_shanks(T a, T one, u64 odd, unsigned twos, T nonres, Mul mul, Pow pow) {
  unsigned m = twos;
  T c = pow(nonres, odd);
  T t = pow(a, odd);
  T r = pow(a, (odd + 1) / 2);
  while (t != one) {
    unsigned i = 0;
    T tt = t;
    while (tt != one) {
      tt = mul(tt, tt);
      ++i;
      if (i >= m) throw InvariantError("tonelli-shanks: argument is not a square");
    }
    T b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = mul(b, b);
    m = i;
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
  }
  return r;
}

template <class T, class Pow>
u64 order_by_descent(T a, T one, u64 group_order, const std::vector<u64>& primes, Pow pow) {
  u64 order = group_order;
  for (u64 l : primes) {
    while (order % l == 0 && pow(a, order / l) == one) order /= l;
  }
  return order;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic base set for 64-bit inputs.
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    u64 x = powmod64(a, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  if (n < 2) return out;
  if (n % 2 == 0) {
    out.push_back(2);
    while (n % 2 == 0) n /= 2;
  }
  for (u64 d = 3; d <= n / d; d += 2) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<std::pair<u64, unsigned>> odd_prime_power(u64 q) {
  if (q < 3 || q % 2 == 0) return std::nullopt;
  if (is_prime_u64(q)) return std::pair{q, 1u};
  for (unsigned k = 2; k < 64; ++k) {
    const u64 r = iroot(q, k);
    if (r < 3) break;
    u128 x = 1;
    for (unsigned i = 0; i < k; ++i) x *= r;
    if (x == q && is_prime_u64(r)) return std::pair{r, k};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

FieldPtr Field::make(u64 p, unsigned k) {
  if (p < 3 || p % 2 == 0 || !is_prime_u64(p)) {
    throw FieldError("p must be an odd prime (got " + std::to_string(p) + ")");
  }
  if (k < 1) throw FieldError("extension degree k must be at least 1");
  if (k == 1 && p >= kMaxPrime) throw FieldError("prime exceeds 2^63");
  if (k > 1) {
    u128 q = 1;
    for (unsigned i = 0; i < k; ++i) {
      q *= p;
      if (q > kMaxExtensionSize) {
        throw FieldError("p^k exceeds the extension field limit of 10^6");
      }
    }
  }
  return FieldPtr(new Field(p, k));
}

Field::Field(u64 p, unsigned k) : p_(p), k_(k) {
  q_ = 1;
  for (unsigned i = 0; i < k; ++i) q_ *= p;
  top_digit_ = q_ / p;
  one_code_ = top_digit_;

  if (k == 1) {
    ts_odd_ = p - 1;
    ts_twos_ = 0;
    while ((ts_odd_ & 1) == 0) {
      ts_odd_ >>= 1;
      ++ts_twos_;
    }
    for (u64 z = 2;; ++z) {
      if (powmod64(z, (p - 1) / 2, p) == p - 1) {
        ts_nonresidue_ = z;
        break;
      }
    }
    return;
  }
  build_extension_tables();
}

Field::~Field() = default;

void Field::build_extension_tables() {
  const FieldPtr base = make(p_, 1);
  auto poly_from_code = [&](u64 code, bool monic_top) {
    std::vector<Elem> c(k_ + (monic_top ? 1 : 0));
    u64 w = top_digit_;
    for (unsigned i = 0; i < k_; ++i) {
      c[i] = Elem{(code / w) % p_};
      w /= p_;
    }
    if (monic_top) c[k_] = base->one();
    return Poly(base, std::move(c));
  };
  auto code_from_poly = [&](const Poly& a) {
    u64 code = 0;
    for (unsigned i = 0; i < k_; ++i) code = code * p_ + a.coeff(i).code;
    return code;
  };

  // Codes enumerate (a_0, ..., a_{k-1}) in exactly the required order.
  std::optional<Poly> mod;
  for (u64 code = top_digit_; code < q_; ++code) {
    Poly cand = poly_from_code(code, true);
    if (is_irreducible(cand)) {
      mod = std::move(cand);
      break;
    }
  }
  if (!mod) throw InvariantError("no irreducible modulus found");
  modulus_.resize(k_ + 1);
  for (unsigned i = 0; i <= k_; ++i) modulus_[i] = mod->coeff(i).code;

  const u64 order = q_ - 1;
  const std::vector<u64> primes = prime_factors(order);
  const Poly one_poly = Poly::constant(base, base->one());
  std::optional<Poly> gen;
  for (u64 code = 1; code < q_ && !gen; ++code) {
    Poly g = poly_from_code(code, false);
    bool primitive = true;
    for (u64 l : primes) {
      if (powmod(g, order / l, *mod) == one_poly) {
        primitive = false;
        break;
      }
    }
    if (primitive) gen = std::move(g);
  }
  if (!gen) throw InvariantError("no primitive element found");

  log_.assign(q_, kNoLog);
  exp_.assign(order, 0);
  Poly x = one_poly;
  for (u64 j = 0; j < order; ++j) {
    const u64 code = code_from_poly(x);
    if (log_[code] != kNoLog) throw InvariantError("generator order below q-1");
    exp_[j] = static_cast<std::uint32_t>(code);
    log_[code] = static_cast<std::uint32_t>(j);
    x = mulmod(x, *gen, *mod);
  }

  zech_.assign(order, kNoLog);
  const u64 wrap = (p_ - 1) * top_digit_;
  for (u64 j = 0; j < order; ++j) {
    const u64 c = exp_[j];
    const u64 plus_one = c / top_digit_ == p_ - 1 ? c - wrap : c + top_digit_;
    zech_[j] = plus_one == 0 ? kNoLog : log_[plus_one];
  }
}

Elem Field::from_int(i64 v) const noexcept {
  i64 r = v % static_cast<i64>(p_);
  if (r < 0) r += static_cast<i64>(p_);
  return Elem{static_cast<u64>(r) * top_digit_};
}

Elem Field::from_digits(std::span<const u64> digits) const {
  if (digits.size() > k_) throw ParseError("too many digits for F_" + std::to_string(q_));
  u64 code = 0;
  for (unsigned i = 0; i < k_; ++i) {
    const u64 d = i < digits.size() ? digits[i] : 0;
    if (d >= p_) throw ParseError("digit out of range for characteristic " + std::to_string(p_));
    code = code * p_ + d;
  }
  return Elem{code};
}

std::vector<u64> Field::digits(Elem a) const {
  std::vector<u64> out(k_);
  u64 c = a.code;
  for (unsigned i = k_; i-- > 0;) {
    out[i] = c % p_;
    c /= p_;
  }
  return out;
}

Elem Field::inv(Elem a) const {
  if (a.code == 0) throw DomainError("inverse of zero");
  if (k_ == 1) return pow(a, p_ - 2);
  const u64 l = log_[a.code];
  return Elem{exp_[l == 0 ? 0 : q_ - 1 - l]};
}

Elem Field::pth_root(Elem a) const noexcept {
  if (k_ == 1) return a;
  u64 e = 1;
  for (unsigned i = 1; i < k_; ++i) e *= p_;
  return pow(a, e);
}

int Field::quad_char(Elem a) const noexcept {
  if (a.code == 0) return 0;
  if (k_ > 1) return log_[a.code] % 2 == 0 ? 1 : -1;
  return pow(a, (p_ - 1) / 2) == one() ? 1 : -1;
}

std::optional<Elem> Field::sqrt(Elem a) const {
  if (a.code == 0) return a;
  Elem r;
  if (k_ > 1) {
    const u64 l = log_[a.code];
    if (l % 2) return std::nullopt;
    r = Elem{exp_[l / 2]};
  } else {
    if (quad_char(a) != 1) return std::nullopt;
    r = tonelli_shanks(
        a, one(), ts_odd_, ts_twos_, Elem{ts_nonresidue_},
        [this](Elem x, Elem y) { return mul(x, y); },
        [this](Elem x, u64 e) { return pow(x, e); });
  }
  const Elem other = neg(r);
  return std::min(r, other);
}

u64 Field::mult_order(Elem a) const {
  if (a.code == 0) throw DomainError("multiplicative order of zero");
  return order_by_descent(a, one(), q_ - 1, group_order_factors(),
                          [this](Elem x, u64 e) { return pow(x, e); });
}

void Field::check_enumerable() const {
  if (q_ > kEnumerateLimit) {
    throw GuardError("refusing to enumerate F_" + std::to_string(q_) + " (limit 10^7)");
  }
}

const std::vector<u64>& Field::group_order_factors() const {
  std::call_once(factors_once_, [this] { factors_ = prime_factors(q_ - 1); });
  return factors_;
}

const QuadExt& Field::ext() const {
  std::call_once(ext_once_, [this] { ext_ = std::make_unique<QuadExt>(*this); });
  return *ext_;
}

// ---------------------------------------------------------------------------

QuadExt::QuadExt(const Field& base) : base_(base) {
  const Elem minus_one = base.neg(base.one());
  if (base.quad_char(minus_one) == -1) {
    nu_ = minus_one;
    i_ = t();
    return;
  }
  for (u64 c = 1; c < base.q(); ++c) {
    if (base.quad_char(Elem{c}) == -1) {
      nu_ = Elem{c};
      break;
    }
  }
  i_ = embed(*base.sqrt(minus_one));
}

Elem2 QuadExt::inv(Elem2 x) const {
  const Elem n = norm(x);
  if (n == base_.zero()) throw DomainError("inverse of zero");
  return scale(conj(x), base_.inv(n));
}

u64 QuadExt::group_order() const {
  if (base_.q() >= (u64{1} << 32)) {
    throw GuardError("quadratic extension group order exceeds 64 bits");
  }
  return base_.q() * base_.q() - 1;
}

u64 QuadExt::mult_order(Elem2 x) const {
  if (x == zero()) throw DomainError("multiplicative order of zero");
  const u64 n = group_order();
  std::vector<u64> primes = base_.group_order_factors();
  for (u64 l : prime_factors(base_.q() + 1)) primes.push_back(l);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return order_by_descent(x, one(), n, primes, [this](Elem2 y, u64 e) { return pow(y, e); });
}

std::optional<Elem2> QuadExt::sqrt(Elem2 x) const {
  if (x == zero()) return x;
  if (quad_char(x) != 1) return std::nullopt;
  u64 odd = group_order();
  unsigned twos = 0;
  while ((odd & 1) == 0) {
    odd >>= 1;
    ++twos;
  }
  // Every base-field element is a square here, so the scan starts at b = 1.
  Elem2 nonres{};
  bool found = false;
  for (u64 a = 0; a < base_.q() && !found; ++a) {
    for (u64 b = 1; b < base_.q() && !found; ++b) {
      const Elem2 c{Elem{a}, Elem{b}};
      if (quad_char(c) == -1) {
        nonres = c;
        found = true;
      }
    }
  }
  const Elem2 r = tonelli_shanks(
      x, one(), odd, twos, nonres, [this](Elem2 u, Elem2 v) { return mul(u, v); },
      [this](Elem2 u, u64 e) { return pow(u, e); });
  return std::min(r, neg(r));
}

std::vector<Elem2> QuadExt::elements() const {
  const u64 q = base_.q();
  if (q > 3162) throw GuardError("refusing to enumerate the quadratic extension (q^2 > 10^7)");
  std::vector<Elem2> out;
  out.reserve(q * q);
  for (u64 a = 0; a < q; ++a) {
    for (u64 b = 0; b < q; ++b) out.push_back({Elem{a}, Elem{b}});
  }
  return out;
}

}  // namespace gsf
