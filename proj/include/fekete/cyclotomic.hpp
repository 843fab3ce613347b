#pragma once

// Arithmetic functions, cyclotomic polynomials and the cyclotomic factors of
// F_n: Ramanujan values, the set S_n, equidistribution and divisor pairings.

#include <cstddef>
#include <utility>
#include <vector>

#include "fekete/intpoly.hpp"

namespace fekete {

/// Prime factors in increasing order, without repetition. n >= 1.
std::vector<long> prime_factors(long n);
/// Divisors in increasing order. n >= 1.
std::vector<long> divisors(long n);
bool is_prime(long n);
bool is_squarefree(long n);
int mobius(long n);
long euler_phi(long n);
long radical(long n);

/// Sieved tables of mobius, euler_phi and radical for 1..bound.
class ArithCache {
 public:
  explicit ArithCache(long bound);
  long bound() const noexcept { return bound_; }
  int mobius(long n) const;
  long euler_phi(long n) const;
  long radical(long n) const;

 private:
  long bound_;
  std::vector<int> mu_;
  std::vector<long> phi_;
  std::vector<long> rad_;
};

/// Phi_d, memoized for the life of the process. Thread-safe.
const IntPoly& cyclotomic_poly(long d);

/// True iff Phi_d divides f, decided by an exact remainder.
bool cyclotomic_divides(const IntPoly& f, long d);
/// Largest k with Phi_d^k | f. f nonzero.
unsigned cyclotomic_multiplicity(const IntPoly& f, long d);

/// mu(d) phi(n) / phi(d) for d | n, n squarefree. Also checks that F_n mod
/// Phi_d is that constant.
BigInt ramanujan_value(long n, long d);

/// Sorted S_n for n = pq, p > q odd primes.
std::vector<long> S_n_set(long p, long q);

/// Whether the units mod n are equidistributed mod d over the residues
/// coprime to gcd(d, n). n squarefree, d > 1, d not dividing n.
bool equidistribution_check(long n, long d);

struct DivisorPairing {
  long N = 1;
  std::vector<std::pair<long, long>> pairs;
};

/// All perfect matchings of the divisors of N. N must have between 2 and 8
/// divisors.
std::vector<DivisorPairing> enumerate_pairings(long N);
/// gcd over the pairs (a, b) of a + mu(a) mu(b) b.
BigInt partition_candidate_D(const DivisorPairing& pairing);
/// Every d <= d_max, d > 1, d not dividing n, that divides some candidate D
/// from a pairing of some N | n with at most 8 divisors.
std::vector<long> partition_certified_divisors(long n, long d_max);

/// Every d in [1, d_max] with Phi_d | F_n.
std::vector<long> verified_cyclotomic_factors(long n, long d_max);

/// n prod_{p | n} (1 - 2/p), n squarefree.
long phi1(long n);

}  // namespace fekete
