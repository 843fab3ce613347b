#pragma once

// Fekete polynomials F_n of the principal character mod n and the objects
// derived from them for n = pq: the non-cyclotomic part f_n, its trace
// polynomial g_n, G_n, u_q, R_q, value predictions, separability mod p and
// unit-circle root counts.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fekete/intpoly.hpp"
#include "fekete/modpoly.hpp"

namespace fekete {

/// Sum of x^a over 1 <= a < n with gcd(a, n) = 1. n >= 2.
IntPoly build_F(long n);
/// Same polynomial, assembled prime by prime from F_1 = x via
/// F_{mr} = F_m (1 + x^m + ... + x^{m(r-1)}) - F_m(x^r). n squarefree.
IntPoly build_F_recursive(long n);
/// Sum over units a of a x^a + (n - a) x^(n + a). n squarefree.
IntPoly build_G(long n);
/// Phi_q^2 - q x^(q-1), checked against W(x^q - 1, F_q).
IntPoly u_q(long q);
/// Res_x(u_q(x), x^q - 1 - y F_q(x)) as a polynomial in y.
IntPoly R_q(long q);

/// (p, q) with n = pq, p > q odd primes; NotSemiprime otherwise.
std::pair<long, long> semiprime_factors(long n);

struct FeketeDecomposition {
  long n = 0;
  long p = 0;
  long q = 0;
  std::vector<long> S_n;
  IntPoly cyclo_part;  // x * prod_{d in S_n} Phi_d
  IntPoly f_n;
  IntPoly g_n;
};

FeketeDecomposition decompose(long n);

/// Closed form of f_{3p}, p > 3 prime.
IntPoly f_3p_explicit(long p);

struct ValuePrediction {
  long p = 0;
  long q = 0;
  long D1 = 0;
  long D2 = 0;
  long D3 = 0;
  long D4 = 0;
  long deg_f = 0;
  BigRat f_at_1;
  BigRat f_at_minus1;
  long disc_class = 0;  // one of 1, -1, q, -q
};

ValuePrediction value_predictions(long p, long q);
/// Human-readable mismatches between the predictions and d; empty when all
/// of degree, f(1), f(-1) and the discriminant class agree.
std::vector<std::string> prediction_mismatches(const ValuePrediction& pred, const FeketeDecomposition& d);

/// Discriminant of a reciprocal f of degree 2m up to squares:
/// (-1)^m f(1) f(-1). Requires f(1) f(-1) != 0.
BigInt reciprocal_disc_class_value(const IntPoly& f);

struct SeparabilityReport {
  long n = 0;
  long p = 0;
  long q = 0;
  std::vector<ModFactor> repeated_factors;  // of F_n mod p
  std::vector<std::pair<std::uint64_t, unsigned>> u_q_roots;
  std::vector<std::pair<std::uint64_t, unsigned>> R_q_roots;
  bool separable = true;
};

SeparabilityReport separability_analysis(long p, long q);

struct UnitCircleCount {
  long count = 0;
  long lower_bound = 0;
};

UnitCircleCount unit_circle_root_count(long n);

struct CoefficientStats {
  BigInt max_abs;
  BigInt middle;
};

CoefficientStats coefficient_stats(const IntPoly& f);

}  // namespace fekete
