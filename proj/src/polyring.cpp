#include "gsfactor/polyring.hpp"

#include <algorithm>
#include <utility>

namespace gsf {

namespace {

using Coeffs = std::vector<Elem>;

void trim_vec(Coeffs& v) {
  while (!v.empty() && v.back().code == 0) v.pop_back();
}

bool small_prime_field(const Field& f) {
  return f.is_prime_field() && f.p() <= 0xffffffffULL;
}

Coeffs mul_vec(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1);
  if (small_prime_field(f)) {
    // Products fit in 64 bits; accumulate without reduction.
    std::vector<u128> acc(out.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const u64 ai = a[i].code;
      if (ai == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<u128>(ai * b[j].code);
    }
    const u64 p = f.p();
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = Elem{static_cast<u64>(acc[k] % p)};
  } else {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].code == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
      }
    }
  }
  trim_vec(out);
  return out;
}

// r <- r mod b, optionally collecting the quotient. b must be nonzero.
void rem_inplace(const Field& f, Coeffs& r, std::span<const Elem> b, Coeffs* quotient) {
  const std::size_t nb = b.size();
  const Elem inv_lead = f.inv(b.back());
  if (quotient) quotient->assign(r.size() >= nb ? r.size() - nb + 1 : 0, Elem{});
  if (r.size() < nb) return;
  const bool fast = small_prime_field(f);
  const u64 p = f.p();
  for (std::size_t top = r.size(); top-- >= nb;) {
    Elem c = r[top];
    if (c.code == 0) continue;
    c = f.mul(c, inv_lead);
    const std::size_t shift = top - (nb - 1);
    if (quotient) (*quotient)[shift] = c;
    if (fast) {
      const u64 negc = p - c.code;
      for (std::size_t j = 0; j < nb; ++j) {
        r[shift + j].code = (r[shift + j].code + negc * b[j].code % p) % p;
      }
    } else {
      const Elem negc = f.neg(c);
      for (std::size_t j = 0; j < nb; ++j) {
        r[shift + j] = f.add(r[shift + j], f.mul(negc, b[j]));
      }
    }
  }
  r.resize(nb - 1);
  trim_vec(r);
}

bool same_field(const Field& a, const Field& b) {
  return &a == &b || (a.p() == b.p() && a.k() == b.k());
}

}  // namespace

// ---------------------------------------------------------------------------

Poly::Poly(FieldPtr field) : field_(std::move(field)) {}

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  trim();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, Elem c, std::size_t degree) {
  std::vector<Elem> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(field), std::move(v));
}

Poly Poly::var(FieldPtr field) {
  const Elem one = field->one();
  return monomial(std::move(field), one, 1);
}

void Poly::trim() noexcept { trim_vec(coeffs_); }

bool Poly::is_monic() const noexcept {
  return !coeffs_.empty() && coeffs_.back() == field_->one();
}

Elem Poly::lead() const noexcept { return coeffs_.empty() ? Elem{} : coeffs_.back(); }

Elem Poly::eval(Elem x) const noexcept {
  Elem acc{};
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = field_->add(field_->mul(acc, x), coeffs_[i]);
  }
  return acc;
}

bool operator==(const Poly& a, const Poly& b) {
  return same_field(*a.field_, *b.field_) && a.coeffs_ == b.coeffs_;
}

void require_same_field(const Poly& a, const Poly& b) {
  if (!same_field(a.field(), b.field())) throw DomainError("polynomials over different fields");
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const Field& f = a.field();
  std::vector<Elem> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly(a.field_ptr(), std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const Field& f = a.field();
  std::vector<Elem> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
  return Poly(a.field_ptr(), std::move(out));
}

Poly operator-(const Poly& a) {
  std::vector<Elem> out(a.coeffs().begin(), a.coeffs().end());
  for (Elem& c : out) c = a.field().neg(c);
  return Poly(a.field_ptr(), std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  return Poly(a.field_ptr(), mul_vec(a.field(), a.coeffs(), b.coeffs()));
}

Poly scale(const Poly& a, Elem c) {
  std::vector<Elem> out(a.coeffs().begin(), a.coeffs().end());
  for (Elem& x : out) x = a.field().mul(x, c);
  return Poly(a.field_ptr(), std::move(out));
}

Poly monic(const Poly& a) {
  if (a.is_zero()) return a;
  return scale(a, a.field().inv(a.lead()));
}

Poly derivative(const Poly& a) {
  if (a.size() <= 1) return Poly(a.field_ptr());
  const Field& f = a.field();
  std::vector<Elem> out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) {
    out[i - 1] = f.mul(f.from_int(static_cast<i64>(i % f.p())), a.coeff(i));
  }
  return Poly(a.field_ptr(), std::move(out));
}

DivMod divmod(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  std::vector<Elem> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<Elem> quot;
  rem_inplace(a.field(), r, b.coeffs(), &quot);
  return {Poly(a.field_ptr(), std::move(quot)), Poly(a.field_ptr(), std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  std::vector<Elem> r(a.coeffs().begin(), a.coeffs().end());
  rem_inplace(a.field(), r, b.coeffs(), nullptr);
  return Poly(a.field_ptr(), std::move(r));
}

Poly exact_div(const Poly& a, const Poly& b) {
  DivMod qr = divmod(a, b);
  if (!qr.remainder.is_zero()) throw InvariantError("exact division left a remainder");
  return std::move(qr.quotient);
}

Poly gcd(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const Field& f = a.field();
  std::vector<Elem> x(a.coeffs().begin(), a.coeffs().end());
  std::vector<Elem> y(b.coeffs().begin(), b.coeffs().end());
  while (!y.empty()) {
    rem_inplace(f, x, y, nullptr);
    std::swap(x, y);
  }
  return monic(Poly(a.field_ptr(), std::move(x)));
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) {
  require_same_field(a, b);
  require_same_field(a, m);
  if (m.is_zero()) throw DomainError("division by the zero polynomial");
  std::vector<Elem> prod = mul_vec(a.field(), a.coeffs(), b.coeffs());
  rem_inplace(a.field(), prod, m.coeffs(), nullptr);
  return Poly(a.field_ptr(), std::move(prod));
}

Poly powmod(const Poly& base, u64 e, const Poly& m) {
  Poly b = base % m;
  Poly r = Poly::constant(base.field_ptr(), base.field().one()) % m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    e >>= 1;
    if (e) b = mulmod(b, b, m);
  }
  return r;
}

Poly compose(const Poly& outer, const Poly& inner) {
  require_same_field(outer, inner);
  Poly acc(outer.field_ptr());
  for (std::size_t i = outer.size(); i-- > 0;) {
    acc = acc * inner + Poly::constant(outer.field_ptr(), outer.coeff(i));
  }
  return acc;
}

bool canonical_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(),
                                      b.coeffs().begin(), b.coeffs().end());
}

// ---------------------------------------------------------------------------

FrobeniusMap::FrobeniusMap(const Poly& modulus)
    : modulus_(modulus), y_q_(modulus.field_ptr()) {
  if (modulus.degree() < 1) throw DomainError("frobenius map needs a modulus of positive degree");
  const FieldPtr& f = modulus.field_ptr();
  y_q_ = powmod(Poly::var(f), f->q(), modulus);
  const auto n = static_cast<std::size_t>(modulus.degree());
  rows_.reserve(n);
  rows_.push_back(Poly::constant(f, f->one()));
  for (std::size_t i = 1; i < n; ++i) rows_.push_back(mulmod(rows_.back(), y_q_, modulus));
}

Poly FrobeniusMap::apply(const Poly& a) const {
  const Poly r = a % modulus_;
  const Field& f = modulus_.field();
  const std::size_t n = rows_.size();
  std::vector<Elem> out(n);
  if (small_prime_field(f)) {
    std::vector<u128> acc(n, 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      const u64 c = r.coeff(i).code;
      if (c == 0) continue;
      const auto row = rows_[i].coeffs();
      for (std::size_t j = 0; j < row.size(); ++j) acc[j] += static_cast<u128>(c * row[j].code);
    }
    for (std::size_t j = 0; j < n; ++j) out[j] = Elem{static_cast<u64>(acc[j] % f.p())};
  } else {
    for (std::size_t i = 0; i < r.size(); ++i) {
      const Elem c = r.coeff(i);
      if (c.code == 0) continue;
      const auto row = rows_[i].coeffs();
      for (std::size_t j = 0; j < row.size(); ++j) out[j] = f.add(out[j], f.mul(c, row[j]));
    }
  }
  return Poly(modulus_.field_ptr(), std::move(out));
}

bool is_irreducible(const Poly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const Poly m = monic(f);
  const FrobeniusMap frob(m);
  const Poly y = Poly::var(f.field_ptr());
  Poly h = y;
  for (int j = 1; j < n; ++j) {
    h = frob.apply(h);
    if (gcd(h - y, m).degree() > 0) return false;
  }
  h = frob.apply(h);
  return h == y;
}

// ---------------------------------------------------------------------------

u64 mix_seed(u64 seed, u64 a, u64 b) noexcept {
  u64 z = seed + 0x9e3779b97f4a7c15ULL * (a + 1) + 0xd1b54a32d192ed03ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

using Rng = std::mt19937_64;

Poly random_below(const FieldPtr& f, std::size_t n, Rng& rng) {
  std::vector<Elem> c(n);
  for (Elem& x : c) x = Elem{rng() % f->q()};
  return Poly(f, std::move(c));
}

Poly pth_root_poly(const Poly& a) {
  const Field& f = a.field();
  const u64 p = f.p();
  std::vector<Elem> out(a.size() / p + 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i % p != 0) {
      if (a.coeff(i).code != 0) throw InvariantError("p-th root of a polynomial with f' != 0");
      continue;
    }
    out[i / p] = f.pth_root(a.coeff(i));
  }
  return Poly(a.field_ptr(), std::move(out));
}

void square_free_parts(const Poly& f, unsigned base_mult, std::vector<Factor>& out) {
  if (f.degree() < 1) return;
  const unsigned p = static_cast<unsigned>(std::min<u64>(f.field().p(), 1u << 30));
  const Poly d = derivative(f);
  if (d.is_zero()) {
    square_free_parts(pth_root_poly(f), base_mult * p, out);
    return;
  }
  Poly c = gcd(f, d);
  Poly w = exact_div(f, c);
  unsigned i = 1;
  while (w.degree() > 0) {
    const Poly y = gcd(w, c);
    Poly fac = exact_div(w, y);
    if (fac.degree() > 0) out.push_back({std::move(fac), i * base_mult});
    w = y;
    c = exact_div(c, y);
    ++i;
  }
  if (c.degree() > 0) square_free_parts(pth_root_poly(c), base_mult * p, out);
}

// Splits g, a product of distinct monic irreducibles of degree d, with
// Cantor-Zassenhaus. `frob` may be any map whose modulus is divisible by g,
// or null when d == 1.
void equal_degree_split(const Poly& g, int d, const FrobeniusMap* frob, Rng& rng,
                        std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const FieldPtr& f = g.field_ptr();
  const u64 half = (f->q() - 1) / 2;
  const Poly one = Poly::constant(f, f->one());
  std::vector<Poly> pieces{g};
  std::vector<Poly> next;
  for (;;) {
    bool pending = false;
    for (const Poly& h : pieces) pending = pending || h.degree() > d;
    if (!pending) break;

    const Poly a = random_below(f, static_cast<std::size_t>(g.degree()), rng);
    // a * a^q * ... * a^(q^(d-1)), then raised to (q-1)/2: a^((q^d-1)/2).
    Poly acc = a;
    Poly u = a;
    for (int j = 1; j < d; ++j) {
      u = frob->apply(u) % g;
      acc = mulmod(acc, u, g);
    }
    const Poly b = powmod(acc, half, g) - one;

    next.clear();
    for (Poly& h : pieces) {
      if (h.degree() == d) {
        next.push_back(std::move(h));
        continue;
      }
      Poly z = gcd(b % h, h);
      if (z.degree() > 0 && z.degree() < h.degree()) {
        Poly other = exact_div(h, z);
        next.push_back(std::move(z));
        next.push_back(std::move(other));
      } else {
        next.push_back(std::move(h));
      }
    }
    std::swap(pieces, next);
  }
  for (Poly& h : pieces) out.push_back(std::move(h));
}

std::vector<Poly> split_square_free(const Poly& f, Rng& rng) {
  std::vector<Poly> out;
  if (f.degree() < 1) return out;
  if (f.degree() == 1) {
    out.push_back(f);
    return out;
  }
  const FrobeniusMap frob(f);
  const Poly y = Poly::var(f.field_ptr());
  Poly rest = f;
  Poly h = y;
  for (int i = 1; 2 * i <= rest.degree(); ++i) {
    h = frob.apply(h);
    const Poly g = gcd(rest, h - y);
    if (g.degree() > 0) {
      equal_degree_split(g, i, &frob, rng, out);
      rest = exact_div(rest, g);
    }
  }
  if (rest.degree() > 0) out.push_back(rest);
  return out;
}

}  // namespace

void Factorization::canonicalize() {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return canonical_less(a.poly, b.poly); });
  std::vector<Factor> merged;
  for (Factor& fac : factors) {
    if (!merged.empty() && merged.back().poly == fac.poly) {
      merged.back().mult += fac.mult;
    } else {
      merged.push_back(std::move(fac));
    }
  }
  factors = std::move(merged);
}

Poly Factorization::expand() const {
  Poly acc = Poly::constant(field, lead);
  for (const Factor& fac : factors) {
    for (unsigned i = 0; i < fac.mult; ++i) acc = acc * fac.poly;
  }
  return acc;
}

std::size_t Factorization::total_degree() const {
  std::size_t n = 0;
  for (const Factor& fac : factors) n += fac.mult * static_cast<std::size_t>(fac.poly.degree());
  return n;
}

bool operator==(const Factorization& a, const Factorization& b) {
  if (a.lead != b.lead || a.factors.size() != b.factors.size()) return false;
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    if (a.factors[i].mult != b.factors[i].mult || !(a.factors[i].poly == b.factors[i].poly)) {
      return false;
    }
  }
  return true;
}

Factorization factorize(const Poly& f, u64 seed) {
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  Factorization out{f.field_ptr(), f.lead(), {}};
  const Poly m = monic(f);
  std::vector<Factor> parts;
  square_free_parts(m, 1, parts);
  Rng rng(seed);
  for (const Factor& part : parts) {
    for (Poly& irr : split_square_free(part.poly, rng)) out.factors.push_back({std::move(irr), part.mult});
  }
  out.canonicalize();
  return out;
}

std::vector<Elem> roots_in_field(const Poly& f, u64 seed) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  std::vector<Elem> roots;
  if (f.degree() < 1) return roots;
  const FieldPtr& field = f.field_ptr();
  const Poly m = monic(f);
  const Poly y = Poly::var(field);
  const Poly split = gcd(m, powmod(y, field->q(), m) - y);
  if (split.degree() < 1) return roots;

  Rng rng(seed);
  std::vector<Poly> linear;
  if (split.degree() == 1) {
    linear.push_back(split);
  } else {
    equal_degree_split(split, 1, nullptr, rng, linear);
  }
  for (const Poly& lin : linear) {
    const Elem r = field->neg(lin.coeff(0));
    Poly rest = m;
    for (;;) {
      DivMod qr = divmod(rest, lin);
      if (!qr.remainder.is_zero()) break;
      roots.push_back(r);
      rest = std::move(qr.quotient);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::optional<Poly> decompose_by(const Poly& g, const Poly& n) {
  require_same_field(g, n);
  if (n.degree() < 1 || !n.is_monic()) {
    throw DomainError("decompose_by: base must be monic of positive degree");
  }
  if (g.is_zero() || g.degree() % n.degree() != 0) {
    throw DomainError("decompose_by: degree of g must be a multiple of degree of n");
  }
  std::vector<Elem> digits;
  Poly rest = g;
  while (!rest.is_zero()) {
    DivMod qr = divmod(rest, n);
    if (qr.remainder.degree() > 0) return std::nullopt;
    digits.push_back(qr.remainder.coeff(0));
    rest = std::move(qr.quotient);
  }
  return Poly(g.field_ptr(), std::move(digits));
}

}  // namespace gsf
