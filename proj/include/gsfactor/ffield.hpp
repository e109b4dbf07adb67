#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <ranges>
#include <span>
#include <vector>

#include "gsfactor/errors.hpp"

namespace gsf {

using u64 = std::uint64_t;
using i64 = std::int64_t;
__extension__ using u128 = unsigned __int128;

// Element of F_q. For prime fields `code` is the residue in [0, p). For
// F_{p^k}, k > 1, it packs the coefficient vector (a_0, ..., a_{k-1}) of the
// polynomial basis as sum a_i * p^(k-1-i), so comparing codes is the same as
// comparing coefficient vectors lexicographically starting from a_0.
struct Elem {
  u64 code = 0;

  friend constexpr auto operator<=>(Elem, Elem) = default;
};

// Element a + b*t of the quadratic extension F_q[t]/(t^2 - nu). Ordered by
// (a, b).
struct Elem2 {
  Elem a;
  Elem b;

  friend constexpr auto operator<=>(const Elem2&, const Elem2&) = default;
};

class Field;
class QuadExt;
using FieldPtr = std::shared_ptr<const Field>;

bool is_prime_u64(u64 n);
// Distinct prime factors by trial division, ascending.
std::vector<u64> prime_factors(u64 n);
// (p, k) with q = p^k for an odd prime p, if q is such a power.
std::optional<std::pair<u64, unsigned>> odd_prime_power(u64 q);

// The finite field F_q, q = p^k with p an odd prime.
//
// Prime fields use direct modular arithmetic (any p < 2^63). Proper extension
// fields (q <= 10^6) are stored as discrete-log tables over a primitive
// element, with Zech logarithms for addition. The modulus is the
// lexicographically smallest monic irreducible of degree k, comparing
// coefficients from the constant term upwards.
//
// A Field is immutable once built; the quadratic extension is created on first
// use under std::call_once.
class Field {
 public:
  static constexpr u64 kMaxPrime = u64{1} << 63;
  static constexpr u64 kMaxExtensionSize = 1'000'000;
  static constexpr u64 kEnumerateLimit = 10'000'000;

  static FieldPtr make(u64 p, unsigned k = 1);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;
  ~Field();

  u64 p() const noexcept { return p_; }
  unsigned k() const noexcept { return k_; }
  u64 q() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return k_ == 1; }
  // Monic modulus over F_p, constant term first; empty for prime fields.
  const std::vector<u64>& modulus() const noexcept { return modulus_; }

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{one_code_}; }
  Elem from_int(i64 v) const noexcept;
  // Coefficients a_0..a_{k-1} over F_p; missing trailing digits are zero.
  Elem from_digits(std::span<const u64> digits) const;
  std::vector<u64> digits(Elem a) const;
  bool valid(Elem a) const noexcept { return a.code < q_; }

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  Elem sqr(Elem a) const noexcept { return mul(a, a); }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, u64 e) const noexcept;
  // Unique b with b^p = a.
  Elem pth_root(Elem a) const noexcept;

  // 0 for zero, 1 for nonzero squares, -1 otherwise.
  int quad_char(Elem a) const noexcept;
  // The square root with the smaller code, or nullopt for nonsquares.
  std::optional<Elem> sqrt(Elem a) const;
  // Multiplicative order; throws DomainError for zero.
  u64 mult_order(Elem a) const;

  // All elements in canonical order. Throws GuardError when q exceeds
  // kEnumerateLimit.
  auto elements() const {
    check_enumerable();
    return std::views::iota(u64{0}, q_) |
           std::views::transform([](u64 c) { return Elem{c}; });
  }
  void check_enumerable() const;

  const QuadExt& ext() const;

  // Prime factors of q - 1, computed once.
  const std::vector<u64>& group_order_factors() const;

 private:
  Field(u64 p, unsigned k);
  void build_extension_tables();

  u64 mul_prime(u64 a, u64 b) const noexcept {
    if (p_ <= 0xffffffffULL) return a * b % p_;
    return static_cast<u64>(static_cast<u128>(a) * b % p_);
  }

  static constexpr std::uint32_t kNoLog = 0xffffffffu;

  u64 p_ = 0;
  unsigned k_ = 1;
  u64 q_ = 0;
  u64 one_code_ = 1;
  u64 top_digit_ = 1;  // p^(k-1): weight of a_0 in the code
  std::vector<u64> modulus_;

  // Tonelli-Shanks data for prime fields.
  u64 ts_odd_ = 0;
  unsigned ts_twos_ = 0;
  u64 ts_nonresidue_ = 0;

  // k > 1 tables, indexed by code and by exponent in [0, q-1).
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> zech_;

  mutable std::once_flag factors_once_;
  mutable std::vector<u64> factors_;
  mutable std::once_flag ext_once_;
  mutable std::unique_ptr<QuadExt> ext_;
};

// F_q[t]/(t^2 - nu), with nu = -1 when -1 is a nonsquare in F_q and otherwise
// the smallest nonsquare. The element i with i^2 = -1 is t in the first case
// and the embedded base-field root sqrt(-1) in the second.
class QuadExt {
 public:
  explicit QuadExt(const Field& base);

  const Field& base() const noexcept { return base_; }
  Elem nonresidue() const noexcept { return nu_; }
  Elem2 i() const noexcept { return i_; }
  Elem2 zero() const noexcept { return {}; }
  Elem2 one() const noexcept { return {base_.one(), base_.zero()}; }
  Elem2 t() const noexcept { return {base_.zero(), base_.one()}; }

  Elem2 embed(Elem a) const noexcept { return {a, base_.zero()}; }
  std::optional<Elem> project(Elem2 x) const noexcept {
    if (x.b != base_.zero()) return std::nullopt;
    return x.a;
  }

  Elem2 add(Elem2 x, Elem2 y) const noexcept {
    return {base_.add(x.a, y.a), base_.add(x.b, y.b)};
  }
  Elem2 sub(Elem2 x, Elem2 y) const noexcept {
    return {base_.sub(x.a, y.a), base_.sub(x.b, y.b)};
  }
  Elem2 neg(Elem2 x) const noexcept { return {base_.neg(x.a), base_.neg(x.b)}; }
  Elem2 mul(Elem2 x, Elem2 y) const noexcept;
  Elem2 scale(Elem2 x, Elem c) const noexcept {
    return {base_.mul(x.a, c), base_.mul(x.b, c)};
  }
  // a - b*t, which is also x^q since nu is a nonsquare.
  Elem2 conj(Elem2 x) const noexcept { return {x.a, base_.neg(x.b)}; }
  Elem norm(Elem2 x) const noexcept;
  Elem2 inv(Elem2 x) const;
  Elem2 div(Elem2 x, Elem2 y) const { return mul(x, inv(y)); }
  Elem2 pow(Elem2 x, u64 e) const noexcept;

  int quad_char(Elem2 x) const noexcept { return base_.quad_char(norm(x)); }
  std::optional<Elem2> sqrt(Elem2 x) const;
  // Order in the group of size q^2 - 1; requires q < 2^32.
  u64 mult_order(Elem2 x) const;
  u64 group_order() const;

  // All q^2 elements in (a, b) order; guarded like Field::elements.
  std::vector<Elem2> elements() const;

 private:
  const Field& base_;
  Elem nu_;
  Elem2 i_;
};

// ---------------------------------------------------------------------------
// Inline arithmetic.

inline Elem Field::add(Elem a, Elem b) const noexcept {
  if (k_ == 1) {
    u64 s = a.code + b.code;
    return Elem{s >= p_ ? s - p_ : s};
  }
  if (a.code == 0) return b;
  if (b.code == 0) return a;
  const u64 order = q_ - 1;
  const u64 la = log_[a.code];
  const u64 lb = log_[b.code];
  const u64 d = lb >= la ? lb - la : lb + order - la;
  const std::uint32_t z = zech_[d];
  if (z == kNoLog) return Elem{0};
  u64 e = la + z;
  if (e >= order) e -= order;
  return Elem{exp_[e]};
}

inline Elem Field::neg(Elem a) const noexcept {
  if (a.code == 0) return a;
  if (k_ == 1) return Elem{p_ - a.code};
  const u64 order = q_ - 1;
  u64 e = log_[a.code] + order / 2;
  if (e >= order) e -= order;
  return Elem{exp_[e]};
}

inline Elem Field::mul(Elem a, Elem b) const noexcept {
  if (k_ == 1) return Elem{mul_prime(a.code, b.code)};
  if (a.code == 0 || b.code == 0) return Elem{0};
  u64 e = u64{log_[a.code]} + log_[b.code];
  if (e >= q_ - 1) e -= q_ - 1;
  return Elem{exp_[e]};
}

inline Elem Field::pow(Elem a, u64 e) const noexcept {
  if (k_ > 1) {
    if (e == 0) return one();
    if (a.code == 0) return a;
    const u64 order = q_ - 1;
    const u64 l = static_cast<u64>(static_cast<u128>(log_[a.code]) * (e % order) % order);
    return Elem{exp_[l]};
  }
  Elem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

inline Elem2 QuadExt::mul(Elem2 x, Elem2 y) const noexcept {
  const Field& f = base_;
  const Elem ac = f.mul(x.a, y.a);
  const Elem bd = f.mul(x.b, y.b);
  return {f.add(ac, f.mul(bd, nu_)), f.add(f.mul(x.a, y.b), f.mul(x.b, y.a))};
}

inline Elem QuadExt::norm(Elem2 x) const noexcept {
  const Field& f = base_;
  return f.sub(f.sqr(x.a), f.mul(nu_, f.sqr(x.b)));
}

inline Elem2 QuadExt::pow(Elem2 x, u64 e) const noexcept {
  Elem2 r = one();
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

}  // namespace gsf
