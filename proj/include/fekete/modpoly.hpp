#pragma once

// Dense polynomials over prime fields F_p with word-size p, and their
// complete factorization.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fekete/intpoly.hpp"

namespace fekete {

class PrimeField {
 public:
  static constexpr std::uint64_t kDefaultMaxModulus = (std::uint64_t{1} << 31) - 1;

  /// Throws InvalidModulus unless p is a prime not exceeding max_modulus.
  explicit PrimeField(std::uint64_t p, std::uint64_t max_modulus = kDefaultMaxModulus);

  std::uint64_t p() const noexcept { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return (a * b) % p_; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
  /// Throws ZeroValue for a = 0.
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t reduce(const BigInt& v) const;
  /// Symmetric lift to (-p/2, p/2].
  std::int64_t lift(std::uint64_t a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - static_cast<std::int64_t>(p_) : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

/// Deterministic Miller-Rabin for n < 2^32.
bool is_prime_u32(std::uint64_t n);

class PrimePoly {
 public:
  explicit PrimePoly(PrimeField field) : field_(field) {}
  /// Residues are reduced mod p.
  PrimePoly(PrimeField field, std::vector<std::uint64_t> coeffs);
  PrimePoly(PrimeField field, std::initializer_list<long> coeffs);

  static PrimePoly monomial(PrimeField field, std::uint64_t c, std::size_t k);
  static PrimePoly x(PrimeField field) { return monomial(field, 1, 1); }
  static PrimePoly one(PrimeField field) { return monomial(field, 1, 0); }

  const PrimeField& field() const noexcept { return field_; }
  std::uint64_t p() const noexcept { return field_.p(); }
  const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  std::uint64_t leading() const;
  std::uint64_t coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  std::uint64_t evaluate(std::uint64_t x0) const noexcept;

  PrimePoly monic() const;

  PrimePoly operator-() const;
  PrimePoly& operator+=(const PrimePoly& rhs);
  PrimePoly& operator-=(const PrimePoly& rhs);
  PrimePoly& operator*=(std::uint64_t s);
  friend PrimePoly operator+(PrimePoly a, const PrimePoly& b) { return a += b; }
  friend PrimePoly operator-(PrimePoly a, const PrimePoly& b) { return a -= b; }
  friend PrimePoly operator*(const PrimePoly& a, const PrimePoly& b);
  friend PrimePoly operator*(PrimePoly a, std::uint64_t s) { return a *= s; }
  friend bool operator==(const PrimePoly& a, const PrimePoly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }
  /// Degree first, then ascending coefficient vectors lexicographically.
  friend bool operator<(const PrimePoly& a, const PrimePoly& b);

  /// Coefficients as integers in [0, p).
  IntPoly to_intpoly() const;
  std::string to_string(char var = 'x') const;

 private:
  void normalize();
  PrimeField field_;
  std::vector<std::uint64_t> coeffs_;
};

/// Quotient and remainder; throws ZeroPolynomial for b = 0, FieldMismatch.
std::pair<PrimePoly, PrimePoly> divmod(const PrimePoly& a, const PrimePoly& b);
PrimePoly rem(const PrimePoly& a, const PrimePoly& b);
/// Exact quotient; throws NonExactDivision when b does not divide a.
PrimePoly exact_quotient(const PrimePoly& a, const PrimePoly& b);
/// Monic gcd; gcd(0, 0) = 0.
PrimePoly gcd_mod(const PrimePoly& a, const PrimePoly& b);
/// base^e mod m.
PrimePoly powmod(const PrimePoly& base, const BigInt& e, const PrimePoly& m);
PrimePoly mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m);
PrimePoly derivative(const PrimePoly& f);

PrimePoly reduce_mod(const IntPoly& f, const PrimeField& K);

struct ModFactor {
  PrimePoly poly;
  unsigned multiplicity;
  friend bool operator==(const ModFactor&, const ModFactor&) = default;
};

struct ModFactorization {
  std::uint64_t unit = 0;
  std::vector<ModFactor> factors;

  /// unit * prod poly^multiplicity
  PrimePoly expand(const PrimeField& K) const;
  friend bool operator==(const ModFactorization&, const ModFactorization&) = default;
};

using FactorShape = std::vector<std::pair<int, unsigned>>;

/// Monic squarefree parts s_i with f = lc * prod s_i^(e_i); parts pairwise
/// coprime, sorted by multiplicity. Requires deg f >= 1.
std::vector<ModFactor> squarefree_decomposition(const PrimePoly& f);

/// Rabin's test. Requires deg f >= 1.
bool is_irreducible(const PrimePoly& f);
ModFactorization factor(const PrimePoly& f);
/// Sorted (degree, multiplicity) multiset; avoids equal-degree splitting.
FactorShape factor_shape(const PrimePoly& f);
/// Number of distinct roots in F_p, i.e. deg gcd(x^p - x, f).
int count_distinct_roots(const PrimePoly& f);
/// F_p-rational roots with multiplicities, sorted by root.
std::vector<std::pair<std::uint64_t, unsigned>> roots_with_multiplicity(const PrimePoly& f);

std::string shape_to_string(const FactorShape& shape);

}  // namespace fekete
