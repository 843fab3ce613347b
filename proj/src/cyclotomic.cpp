#include "fekete/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "fekete/errors.hpp"
#include "fekete/fekete.hpp"

namespace fekete {

namespace {

void require_positive(long n) {
  if (n < 1) throw InvalidArgument("expected n >= 1, got " + std::to_string(n));
}

}  // namespace

std::vector<long> prime_factors(long n) {
  require_positive(n);
  std::vector<long> out;
  for (long r = 2; r * r <= n; ++r) {
    if (n % r == 0) {
      out.push_back(r);
      while (n % r == 0) n /= r;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<long> divisors(long n) {
  require_positive(n);
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long r = 2; r * r <= n; ++r)
    if (n % r == 0) return false;
  return true;
}

bool is_squarefree(long n) {
  require_positive(n);
  for (long r = 2; r * r <= n; ++r) {
    if (n % (r * r) == 0) return false;
  }
  return true;
}

int mobius(long n) {
  if (!is_squarefree(n)) return 0;
  return prime_factors(n).size() % 2 == 0 ? 1 : -1;
}

long euler_phi(long n) {
  long r = n;
  for (long p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

long radical(long n) {
  long r = 1;
  for (long p : prime_factors(n)) r *= p;
  return r;
}

ArithCache::ArithCache(long bound) : bound_(bound) {
  if (bound < 1) throw InvalidArgument("ArithCache bound must be >= 1");
  const auto size = static_cast<std::size_t>(bound) + 1;
  mu_.assign(size, 1);
  phi_.resize(size);
  rad_.assign(size, 1);
  std::iota(phi_.begin(), phi_.end(), 0L);
  std::vector<bool> composite(size, false);
  for (long p = 2; p <= bound; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    for (long m = p; m <= bound; m += p) {
      const auto i = static_cast<std::size_t>(m);
      if (m != p) composite[i] = true;
      mu_[i] = -mu_[i];
      phi_[i] = phi_[i] / p * (p - 1);
      rad_[i] *= p;
    }
    if (p <= bound / p) {
      for (long m = p * p; m <= bound; m += p * p) mu_[static_cast<std::size_t>(m)] = 0;
    }
  }
  mu_[0] = 0;
}

int ArithCache::mobius(long n) const {
  if (n < 1 || n > bound_) return fekete::mobius(n);
  return mu_[static_cast<std::size_t>(n)];
}

long ArithCache::euler_phi(long n) const {
  if (n < 1 || n > bound_) return fekete::euler_phi(n);
  return phi_[static_cast<std::size_t>(n)];
}

long ArithCache::radical(long n) const {
  if (n < 1 || n > bound_) return fekete::radical(n);
  return rad_[static_cast<std::size_t>(n)];
}

const IntPoly& cyclotomic_poly(long d) {
  require_positive(d);
  static std::recursive_mutex mutex;
  static std::map<long, IntPoly> memo;
  std::lock_guard<std::recursive_mutex> lock(mutex);
  if (auto it = memo.find(d); it != memo.end()) return it->second;
  IntPoly phi = IntPoly::monomial(1, static_cast<std::size_t>(d)) - IntPoly{1};
  for (long e : divisors(d)) {
    if (e == d) break;
    phi = exact_div(phi, cyclotomic_poly(e));
  }
  return memo.emplace(d, std::move(phi)).first->second;
}

bool cyclotomic_divides(const IntPoly& f, long d) {
  require_positive(d);
  if (f.is_zero()) return true;
  // Phi_d | x^d - 1, so reduce modulo x^d - 1 first.
  const auto m = static_cast<std::size_t>(d);
  std::vector<BigInt> folded(std::min(m, f.coeffs().size()));
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) folded[i % m] += f.coeffs()[i];
  return rem_monic(IntPoly(std::move(folded)), cyclotomic_poly(d)).is_zero();
}

unsigned cyclotomic_multiplicity(const IntPoly& f, long d) {
  if (f.is_zero()) throw ZeroPolynomial("multiplicity in the zero polynomial");
  unsigned k = 0;
  IntPoly cur = f;
  while (cur.degree() >= 1 && cyclotomic_divides(cur, d)) {
    cur = exact_div(cur, cyclotomic_poly(d));
    ++k;
  }
  return k;
}

BigInt ramanujan_value(long n, long d) {
  require_positive(n);
  require_positive(d);
  if (n % d != 0) throw NotDivisor(std::to_string(d) + " does not divide " + std::to_string(n));
  if (!is_squarefree(n)) throw NotSquarefree(std::to_string(n));
  const BigInt value = BigInt(mobius(d)) * BigInt(euler_phi(n)) / BigInt(euler_phi(d));
  if (n >= 2) {
    IntPoly r = rem_monic(build_F(n), cyclotomic_poly(d));
    if (!(r == IntPoly::constant(value)))
      throw ConsistencyError("F_" + std::to_string(n) + " mod Phi_" + std::to_string(d) + " is " + r.to_string());
  }
  return value;
}

std::vector<long> S_n_set(long p, long q) {
  if (!(p > q && q > 2 && is_prime(p) && is_prime(q)))
    throw NotOddPrimes("(" + std::to_string(p) + ", " + std::to_string(q) + ")");
  std::vector<long> s;
  for (long d : divisors(p - 1))
    if (d > 1 && d != q) s.push_back(d);
  for (long d : divisors(q - 1))
    if (d > 1) s.push_back(d);
  for (long d : divisors(std::gcd(p * q + 1, p + q)))
    if (d > 1) s.push_back(d);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool equidistribution_check(long n, long d) {
  require_positive(n);
  if (d <= 1) throw InvalidArgument("equidistribution needs d > 1");
  if (!is_squarefree(n)) throw NotSquarefree(std::to_string(n));
  if (n % d == 0) throw DividesN(std::to_string(d) + " divides " + std::to_string(n));
  const long d1 = std::gcd(d, n);
  std::vector<long> counts(static_cast<std::size_t>(d), 0);
  for (long a = 1; a <= n; ++a)
    if (std::gcd(a, n) == 1) ++counts[static_cast<std::size_t>(a % d)];
  long expected = -1;
  for (long s = 0; s < d; ++s) {
    if (std::gcd(s, d1) != 1) continue;
    const long c = counts[static_cast<std::size_t>(s)];
    if (expected < 0) expected = c;
    if (c != expected) return false;
  }
  return true;
}

namespace {

void match_rest(std::vector<long>& rest, std::vector<std::pair<long, long>>& current, long N,
                std::vector<DivisorPairing>& out) {
  if (rest.empty()) {
    out.push_back({N, current});
    return;
  }
  const long first = rest.front();
  for (std::size_t j = 1; j < rest.size(); ++j) {
    std::vector<long> next;
    for (std::size_t k = 1; k < rest.size(); ++k)
      if (k != j) next.push_back(rest[k]);
    current.emplace_back(first, rest[j]);
    match_rest(next, current, N, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<DivisorPairing> enumerate_pairings(long N) {
  std::vector<long> divs = divisors(N);
  if (divs.size() < 2 || divs.size() > 8 || divs.size() % 2 != 0)
    throw InvalidPairing(std::to_string(N) + " has " + std::to_string(divs.size()) + " divisors");
  std::vector<DivisorPairing> out;
  std::vector<std::pair<long, long>> current;
  match_rest(divs, current, N, out);
  return out;
}

BigInt partition_candidate_D(const DivisorPairing& pairing) {
  if (pairing.N < 1) throw InvalidPairing("N must be positive");
  std::vector<long> seen;
  for (auto [a, b] : pairing.pairs) {
    if (a == b || a < 1 || b < 1 || pairing.N % a != 0 || pairing.N % b != 0)
      throw InvalidPairing("pair (" + std::to_string(a) + ", " + std::to_string(b) + ") is not a pair of divisors");
    seen.push_back(a);
    seen.push_back(b);
  }
  std::sort(seen.begin(), seen.end());
  if (seen != divisors(pairing.N)) throw InvalidPairing("pairs do not partition the divisors of " + std::to_string(pairing.N));
  BigInt D = 0;
  for (auto [a, b] : pairing.pairs) {
    BigInt term = BigInt(a) + BigInt(mobius(a) * mobius(b)) * BigInt(b);
    mpz_gcd(D.get_mpz_t(), D.get_mpz_t(), term.get_mpz_t());
  }
  return D;
}

std::vector<long> partition_certified_divisors(long n, long d_max) {
  std::vector<long> out;
  for (long N : divisors(n)) {
    const std::size_t count = divisors(N).size();
    if (count < 2 || count > 8 || count % 2 != 0) continue;
    for (const auto& pairing : enumerate_pairings(N)) {
      const BigInt D = partition_candidate_D(pairing);
      for (long d = 2; d <= d_max; ++d) {
        if (n % d != 0 && mpz_divisible_ui_p(D.get_mpz_t(), static_cast<unsigned long>(d))) out.push_back(d);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<long> verified_cyclotomic_factors(long n, long d_max) {
  if (n < 2) throw InvalidArgument("n must be >= 2");
  if (d_max < 1) throw InvalidArgument("d_max must be >= 1");
  const IntPoly F = build_F(n);
  std::vector<long> out;
  for (long d = 1; d <= d_max; ++d)
    if (cyclotomic_divides(F, d)) out.push_back(d);
  return out;
}

long phi1(long n) {
  require_positive(n);
  if (!is_squarefree(n)) throw NotSquarefree(std::to_string(n));
  long r = n;
  for (long p : prime_factors(n)) r = r / p * (p - 2);
  return r;
}

}  // namespace fekete
