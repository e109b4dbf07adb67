#pragma once

#include <limits>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "gsfactor/ffield.hpp"

namespace gsf {

// Dense univariate polynomial over a Field, coefficients constant-first with
// no trailing zeros. The zero polynomial has no coefficients and degree
// kZeroDegree.
class Poly {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  explicit Poly(FieldPtr field);
  Poly(FieldPtr field, std::vector<Elem> coeffs);

  static Poly constant(FieldPtr field, Elem c);
  static Poly monomial(FieldPtr field, Elem c, std::size_t degree);
  // The indeterminate y.
  static Poly var(FieldPtr field);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }

  int degree() const noexcept {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const noexcept;
  Elem lead() const noexcept;
  Elem coeff(std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : Elem{};
  }
  std::span<const Elem> coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  Elem eval(Elem x) const noexcept;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void trim() noexcept;

  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

// Throws DomainError unless both polynomials live over the same field.
void require_same_field(const Poly& a, const Poly& b);

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, Elem c);
Poly monic(const Poly& a);
Poly derivative(const Poly& a);

struct DivMod {
  Poly quotient;
  Poly remainder;
};
DivMod divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly exact_div(const Poly& a, const Poly& b);  // throws InvariantError on remainder
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Poly& base, u64 e, const Poly& m);
// outer(inner(y)).
Poly compose(const Poly& outer, const Poly& inner);

// Canonical order: by degree, then coefficient codes from the constant term up.
bool canonical_less(const Poly& a, const Poly& b);

// The q-power map a -> a^q mod m as a matrix over F_q. Rows are y^(iq) mod m.
class FrobeniusMap {
 public:
  explicit FrobeniusMap(const Poly& modulus);
  Poly apply(const Poly& a) const;
  const Poly& modulus() const noexcept { return modulus_; }
  // y^q mod m.
  const Poly& y_to_q() const noexcept { return y_q_; }

 private:
  Poly modulus_;
  Poly y_q_;
  std::vector<Poly> rows_;
};

// Rabin-style ladder: gcd(y^(q^j) - y, f) = 1 for 0 < j < deg f and
// y^(q^deg f) = y mod f. Constants and zero are not irreducible.
bool is_irreducible(const Poly& f);

struct Factor {
  Poly poly;  // monic irreducible
  unsigned mult = 1;
};

struct Factorization {
  FieldPtr field;
  Elem lead;
  std::vector<Factor> factors;

  // Sort factors canonically and merge repeated entries.
  void canonicalize();
  Poly expand() const;
  std::size_t total_degree() const;

  friend bool operator==(const Factorization& a, const Factorization& b);
};

constexpr u64 kDefaultSeed = 0x6773'5f6f'7261'636cULL;

// splitmix64-style mix for deriving per-call RNG seeds from (seed, q, s).
u64 mix_seed(u64 seed, u64 a, u64 b = 0) noexcept;

// Full factorization: square-free decomposition (with p-th root descent),
// distinct-degree splitting, and Cantor-Zassenhaus equal-degree splitting
// driven by a mt19937_64 seeded with `seed`.
Factorization factorize(const Poly& f, u64 seed = kDefaultSeed);

// Roots in the base field, repeated by multiplicity, ascending.
std::vector<Elem> roots_in_field(const Poly& f, u64 seed = kDefaultSeed);

// Writes g in base n: g = r_0 + n*(r_1 + n*(r_2 + ...)). Returns
// h(z) = sum r_i z^i when every digit is constant, so that g = h(n);
// nullopt otherwise. n must be monic of positive degree dividing deg g.
std::optional<Poly> decompose_by(const Poly& g, const Poly& n);

}  // namespace gsf
