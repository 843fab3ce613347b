#pragma once

// Dense univariate polynomials over Z, with the exact operations needed to
// study Fekete polynomials: ring arithmetic, exact division, resultants,
// discriminants, reciprocal/trace transforms and Sturm root counting.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace fekete {

using BigInt = mpz_class;
using BigRat = mpq_class;  // always canonical: reduced, positive denominator

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  /// c * x^k
  static IntPoly monomial(const BigInt& c, std::size_t k);
  static IntPoly constant(const BigInt& c) { return monomial(c, 0); }

  /// Coefficients in ascending degree; empty for the zero polynomial.
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  const BigInt& leading() const;
  /// Coefficient of x^i, zero past the degree.
  BigInt coeff(std::size_t i) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const BigInt& s);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
  friend IntPoly operator*(const BigInt& s, IntPoly a) { return a *= s; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// f(x^k)
  IntPoly compose_power(std::size_t k) const;
  /// x^k * f(x)
  IntPoly shift(std::size_t k) const;

  std::string to_string(char var = 'x') const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& f);

/// q with a = b*q; throws NonExactDivision when no such integer polynomial exists.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);
/// Remainder of a modulo a monic b.
IntPoly rem_monic(const IntPoly& a, const IntPoly& b);
/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);

BigInt content(const IntPoly& f);
/// f / content(f), sign preserved (content is taken positive).
IntPoly primitive_part(const IntPoly& f);

BigInt evaluate(const IntPoly& f, const BigInt& x0);
BigRat evaluate(const IntPoly& f, const BigRat& x0);

IntPoly derivative(const IntPoly& f);
bool is_reciprocal(const IntPoly& f);
/// x^deg(h) * h(1/x)
IntPoly reversal(const IntPoly& h);

/// For monic reciprocal f of degree 2m, the unique g of degree m with
/// g(x + 1/x) = x^(-m) f(x).
IntPoly trace_polynomial(const IntPoly& f);

/// f'g - g'f
IntPoly wronskian(const IntPoly& f, const IntPoly& g);

/// Resultant with the Sylvester convention (rows of a, then rows of b):
/// Res(a, b) = lc(a)^deg(b) * prod b(alpha) over the roots alpha of a.
/// Computed by the subresultant pseudo-remainder sequence.
BigInt resultant(const IntPoly& a, const IntPoly& b);

/// (-1)^(d(d-1)/2) Res(f, f') / lc(f), d = deg f >= 1.
BigInt discriminant(const IntPoly& f);

bool is_perfect_square(const BigInt& v);
/// True iff v / rep is the square of a nonzero rational.
bool square_class_matches(const BigInt& v, const BigInt& rep);

/// Number of distinct real roots of a squarefree f in the open interval
/// (lo, hi). Endpoints must not be roots.
std::size_t sturm_count(const IntPoly& f, const BigRat& lo, const BigRat& hi);

}  // namespace fekete
