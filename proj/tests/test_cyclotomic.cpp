#include "doctest.h"
#include "fekete/cyclotomic.hpp"
#include "fekete/errors.hpp"
#include "fekete/fekete.hpp"
#include "oracles.hpp"

using namespace fekete;

TEST_CASE("arithmetic functions") {
  CHECK(mobius(15) == 1);
  CHECK(euler_phi(15) == 8);
  CHECK(radical(12) == 6);
  CHECK(mobius(12) == 0);
  CHECK(mobius(1) == 1);
  for (long p : {2L, 3L, 101L, 7919L}) CHECK(mobius(p) == -1);
  CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
  CHECK(prime_factors(360) == std::vector<long>{2, 3, 5});
  CHECK_THROWS_AS(euler_phi(0), InvalidArgument);

  const ArithCache cache(1000);
  for (long n = 1; n <= 1000; ++n) {
    CHECK(cache.mobius(n) == mobius(n));
    CHECK(cache.euler_phi(n) == euler_phi(n));
    CHECK(cache.radical(n) == radical(n));
  }
  CHECK(cache.euler_phi(1001) == 720);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == IntPoly{-1, 1});
  CHECK(cyclotomic_poly(8) == IntPoly{1, 0, 0, 0, 1});
  const IntPoly& phi105 = cyclotomic_poly(105);
  CHECK(phi105.degree() == 48);
  // Power series of prod_{d | 105} (1 - x^d)^mu(105/d), truncated past degree 48.
  std::vector<BigInt> series(49, 0);
  series[0] = 1;
  for (long e : divisors(105)) {
    const int mu = mobius(e);
    const auto k = static_cast<std::size_t>(105 / e);
    if (mu == 0 || k > 48) continue;
    if (mu == 1) {
      for (std::size_t i = 48; i >= k; --i) series[i] -= series[i - k];
    } else {
      for (std::size_t i = k; i <= 48; ++i) series[i] += series[i - k];
    }
  }
  CHECK(IntPoly(series) == phi105);
  CHECK(phi105.coeff(7) == -2);
  CHECK(phi105.coeff(41) == -2);
  for (long d = 1; d < 105; ++d) {
    for (const auto& c : cyclotomic_poly(d).coeffs()) CHECK(abs(c) <= 1);
  }
  for (long n = 1; n <= 300; ++n) {
    IntPoly prod{1};
    for (long d : divisors(n)) prod *= cyclotomic_poly(d);
    CHECK(prod == IntPoly::monomial(1, static_cast<std::size_t>(n)) - IntPoly{1});
  }
}

TEST_CASE("ramanujan values") {
  CHECK(ramanujan_value(15, 3) == -4);
  CHECK(ramanujan_value(15, 1) == 8);
  CHECK(ramanujan_value(15, 15) == 1);
  CHECK_THROWS_AS(ramanujan_value(15, 4), NotDivisor);
  CHECK_THROWS_AS(ramanujan_value(12, 3), NotSquarefree);
  // Remainder of F_n mod Phi_d is the constant mu(d) phi(n) / phi(d).
  for (long n = 2; n <= 300; ++n) {
    if (!is_squarefree(n)) continue;
    const IntPoly F = build_F(n);
    for (long d : divisors(n)) {
      const BigInt expected = BigInt(mobius(d)) * euler_phi(n) / euler_phi(d);
      CHECK(rem_monic(F, cyclotomic_poly(d)) == IntPoly::constant(expected));
      CHECK(expected != 0);
    }
  }
}

TEST_CASE("the set S_n") {
  CHECK(S_n_set(5, 3) == std::vector<long>{2, 4, 8});
  CHECK(S_n_set(7, 3) == std::vector<long>{2, 6});
  CHECK_THROWS_AS(S_n_set(3, 5), NotOddPrimes);
  CHECK_THROWS_AS(S_n_set(5, 2), NotOddPrimes);
  CHECK_THROWS_AS(S_n_set(9, 3), NotOddPrimes);
  long total = 1;
  for (long d : S_n_set(5, 3)) total += cyclotomic_poly(d).degree();
  CHECK(total + decompose(15).f_n.degree() == 14);
}

TEST_CASE("equidistribution") {
  CHECK(equidistribution_check(15, 8));
  CHECK_FALSE(equidistribution_check(15, 7));
  CHECK_THROWS_AS(equidistribution_check(15, 5), DividesN);
  CHECK_THROWS_AS(equidistribution_check(12, 5), NotSquarefree);
  // Against raw residue counts.
  for (long n : {15L, 21L, 30L, 77L, 105L}) {
    for (long d = 2; d <= 60; ++d) {
      if (n % d == 0) continue;
      const auto counts = oracle::unit_residue_counts(n, d);
      const long d1 = std::gcd(d, n);
      const long expected = euler_phi(n) * d1 / (euler_phi(d1) * d);
      bool equal = euler_phi(n) * d1 % (euler_phi(d1) * d) == 0;
      for (long s = 0; s < d && equal; ++s) {
        if (std::gcd(s, d1) != 1) continue;
        auto it = counts.find(s);
        equal = (it == counts.end() ? 0 : it->second) == expected;
      }
      CHECK(equidistribution_check(n, d) == equal);
    }
  }
}

TEST_CASE("divisor pairings") {
  CHECK(partition_candidate_D({7, {{1, 7}}}) == 6);
  CHECK(partition_candidate_D({15, {{1, 15}, {3, 5}}}) == 8);
  CHECK(partition_candidate_D({15, {{1, 3}, {5, 15}}}) == 2);
  CHECK_THROWS_AS(partition_candidate_D({15, {{1, 3}, {3, 15}}}), InvalidPairing);
  CHECK_THROWS_AS(partition_candidate_D({15, {{1, 15}}}), InvalidPairing);
  CHECK_THROWS_AS(partition_candidate_D({15, {{1, 2}, {3, 5}}}), InvalidPairing);
  CHECK(enumerate_pairings(15).size() == 3);
  CHECK(enumerate_pairings(30).size() == 105);
  CHECK_THROWS_AS(enumerate_pairings(210), InvalidPairing);

  // Every certified divisor is confirmed by the remainder oracle.
  for (long n = 3; n <= 300; ++n) {
    if (!is_squarefree(n)) continue;
    const IntPoly F = build_F(n);
    for (long d : partition_certified_divisors(n, 2 * n)) CHECK_MESSAGE(cyclotomic_divides(F, d), "n=" << n << " d=" << d);
  }
}

TEST_CASE("verified cyclotomic factors") {
  CHECK(verified_cyclotomic_factors(15, 16) == std::vector<long>{2, 4, 8});
  for (long p : {5L, 7L, 11L, 13L, 31L}) {
    std::vector<long> expected;
    for (long d : divisors(p - 1))
      if (d > 1) expected.push_back(d);
    CHECK(verified_cyclotomic_factors(p, 3 * p) == expected);
  }
  // n = 2p: x (1 + x^2 + ... + x^(p-3)) (1 + x^(p+1)).
  for (long p : {5L, 7L, 11L, 13L}) {
    IntPoly even_sum;
    for (long k = 0; k <= p - 3; k += 2) even_sum += IntPoly::monomial(1, static_cast<std::size_t>(k));
    const IntPoly product = IntPoly{0, 1} * even_sum * (IntPoly{1} + IntPoly::monomial(1, static_cast<std::size_t>(p + 1)));
    CHECK(product == build_F(2 * p));
    std::vector<long> expected;
    for (long d = 1; d <= 4 * p; ++d) {
      if (cyclotomic_divides(even_sum, d) ||
          cyclotomic_divides(IntPoly{1} + IntPoly::monomial(1, static_cast<std::size_t>(p + 1)), d))
        expected.push_back(d);
    }
    CHECK(verified_cyclotomic_factors(2 * p, 4 * p) == expected);
  }
}

TEST_CASE("small-d classification") {
  for (long n = 2; n <= 300; ++n) {
    if (!is_squarefree(n)) continue;
    const IntPoly F = build_F(n);
    for (long d = 2; d <= 7; ++d) {
      bool predicted = false;
      if (n % d != 0)
        for (long r : prime_factors(n))
          if ((r - 1) % d == 0) predicted = true;
      CHECK_MESSAGE(cyclotomic_divides(F, d) == predicted, "n=" << n << " d=" << d);
    }
  }
}

TEST_CASE("phi1") {
  CHECK(phi1(15) == 3);
  CHECK(phi1(105) == 15);
  CHECK(phi1(26) == 0);
  CHECK_THROWS_AS(phi1(12), NotSquarefree);
  for (long n = 1; n <= 1000; ++n)
    if (is_squarefree(n)) CHECK(phi1(n) == oracle::phi1_direct(n));
}
