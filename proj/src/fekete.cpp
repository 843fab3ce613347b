#include "fekete/fekete.hpp"

#include <algorithm>
#include <numeric>

#include "fekete/cyclotomic.hpp"
#include "fekete/errors.hpp"

namespace fekete {

namespace {

std::string str(long v) { return std::to_string(v); }

void require_odd_prime(long q) {
  if (q < 3 || !is_prime(q)) throw NotOddPrime(str(q));
}

void require_prime_pair(long p, long q) {
  if (!(p > q && q > 2 && is_prime(p) && is_prime(q))) throw NotOddPrimes("(" + str(p) + ", " + str(q) + ")");
}

IntPoly x_pow_minus_1(long k) { return IntPoly::monomial(1, static_cast<std::size_t>(k)) - IntPoly{1}; }

}  // namespace

IntPoly build_F(long n) {
  if (n < 2) throw InvalidArgument("F_n needs n >= 2, got " + str(n));
  std::vector<BigInt> c(static_cast<std::size_t>(n));
  for (long a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1) c[static_cast<std::size_t>(a)] = 1;
  return IntPoly(std::move(c));
}

IntPoly build_F_recursive(long n) {
  if (n < 2) throw InvalidArgument("F_n needs n >= 2, got " + str(n));
  if (!is_squarefree(n)) throw NotSquarefree(str(n));
  IntPoly F{0, 1};
  long m = 1;
  for (long r : prime_factors(n)) {
    IntPoly next;
    for (long k = 0; k < r; ++k) next += F.shift(static_cast<std::size_t>(m * k));
    next -= F.compose_power(static_cast<std::size_t>(r));
    F = std::move(next);
    m *= r;
  }
  return F;
}

IntPoly build_G(long n) {
  if (n < 2) throw InvalidArgument("G_n needs n >= 2, got " + str(n));
  if (!is_squarefree(n)) throw NotSquarefree(str(n));
  std::vector<BigInt> c(static_cast<std::size_t>(2 * n));
  for (long a = 1; a < n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    c[static_cast<std::size_t>(a)] += a;
    c[static_cast<std::size_t>(n + a)] += n - a;
  }
  return IntPoly(std::move(c));
}

IntPoly u_q(long q) {
  require_odd_prime(q);
  const IntPoly& phi = cyclotomic_poly(q);
  IntPoly closed = phi * phi - IntPoly::monomial(q, static_cast<std::size_t>(q - 1));
  if (!(closed == wronskian(x_pow_minus_1(q), build_F(q))))
    throw ConsistencyError("closed form of u_" + str(q) + " disagrees with the Wronskian");
  return closed;
}

IntPoly R_q(long q) {
  const IntPoly u = u_q(q);
  const IntPoly s = x_pow_minus_1(q);
  const IntPoly t = build_F(q);
  const std::size_t npts = static_cast<std::size_t>(2 * q - 1);
  std::vector<BigRat> xs, table;
  xs.reserve(npts);
  xs.emplace_back(0);
  for (long k = 1; static_cast<std::size_t>(xs.size()) < npts; ++k) {
    xs.emplace_back(k);
    xs.emplace_back(-k);
  }
  for (const auto& y0 : xs) table.emplace_back(resultant(u, s - t * BigInt(y0.get_num())));
  // Newton divided differences, in place.
  for (std::size_t level = 1; level < npts; ++level) {
    for (std::size_t i = npts - 1; i >= level; --i) {
      table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  }
  // Horner expansion of the Newton form into monomial coefficients.
  std::vector<BigRat> coeffs{table[npts - 1]};
  for (std::size_t i = npts - 1; i-- > 0;) {
    std::vector<BigRat> next(coeffs.size() + 1);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] += coeffs[j];
      next[j] -= coeffs[j] * xs[i];
    }
    next[0] += table[i];
    coeffs = std::move(next);
  }
  std::vector<BigInt> out;
  out.reserve(coeffs.size());
  for (auto& c : coeffs) {
    c.canonicalize();
    if (c.get_den() != 1) throw InterpolationNotIntegral("R_" + str(q) + " coefficient " + c.get_str());
    out.push_back(c.get_num());
  }
  return IntPoly(std::move(out));
}

std::pair<long, long> semiprime_factors(long n) {
  if (n < 15 || n % 2 == 0) throw NotSemiprime(str(n));
  for (long q = 3; q * q <= n; q += 2) {
    if (n % q != 0) continue;
    const long p = n / q;
    if (p > q && is_prime(q) && is_prime(p)) return {p, q};
    throw NotSemiprime(str(n));
  }
  throw NotSemiprime(str(n));
}

FeketeDecomposition decompose(long n) {
  auto [p, q] = semiprime_factors(n);
  FeketeDecomposition d;
  d.n = n;
  d.p = p;
  d.q = q;
  d.S_n = S_n_set(p, q);
  d.cyclo_part = IntPoly{0, 1};
  for (long e : d.S_n) d.cyclo_part *= cyclotomic_poly(e);
  d.f_n = exact_div(build_F(n), d.cyclo_part);
  if (!d.f_n.is_monic() || !is_reciprocal(d.f_n) || d.f_n.degree() % 2 != 0)
    throw ConsistencyError("f_" + str(n) + " is not monic reciprocal of even degree");
  d.g_n = trace_polynomial(d.f_n);
  const ValuePrediction pred = value_predictions(p, q);
  if (pred.deg_f != d.f_n.degree())
    throw ConsistencyError("deg f_" + str(n) + " = " + str(d.f_n.degree()) + ", predicted " + str(pred.deg_f));
  return d;
}

IntPoly f_3p_explicit(long p) {
  if (p <= 3 || !is_prime(p)) throw NotOddPrime("f_3p needs a prime p > 3, got " + str(p));
  const auto P = static_cast<std::size_t>(p);
  IntPoly N = IntPoly::monomial(1, 2 * P + 2) + IntPoly::monomial(1, 2 * P + 1) + IntPoly::monomial(1, P + 2) +
              IntPoly::monomial(1, P) + IntPoly{1, 1};
  const IntPoly quad{1, 1, 1};
  const IntPoly quart{1, 0, 0, 0, 1};
  switch (p % 24) {
    case 1:
    case 7:
    case 19:
      return N;
    case 13:
      return exact_div(N, quart);
    case 5:
      return exact_div(N, quad * quart);
    default:  // 11, 17, 23
      return exact_div(N, quad);
  }
}

ValuePrediction value_predictions(long p, long q) {
  require_prime_pair(p, q);
  ValuePrediction v;
  v.p = p;
  v.q = q;
  v.D1 = std::gcd(p - 1, q - 1);
  v.D2 = std::gcd(p * q + 1, p + q);
  v.D3 = std::gcd(p - 1, q + 1);
  v.D4 = std::gcd(p + 1, q - 1);
  const bool one_mod_q = p % q == 1;
  const long extra = v.D1 + v.D3 + v.D4 - v.D2;
  v.deg_f = one_mod_q ? p * q - p - 2 + extra : p * q - p - q - 1 + extra;
  const BigRat base(BigInt(v.D1) * v.D3 * v.D4, BigInt(2) * v.D2);
  v.f_at_1 = one_mod_q ? BigRat(base * q) : base;
  v.f_at_minus1 = -base;
  v.f_at_1.canonicalize();
  v.f_at_minus1.canonicalize();
  if (!one_mod_q) {
    v.disc_class = (p % 4 == 1 && q % 4 == 1) ? -1 : 1;
  } else {
    v.disc_class = (p % 4 == 3 && q % 4 == 1) ? q : -q;
  }
  return v;
}

BigInt reciprocal_disc_class_value(const IntPoly& f) {
  if (f.degree() % 2 != 0) throw OddDegree("reciprocal discriminant class needs even degree");
  const BigInt a = evaluate(f, BigInt(1));
  const BigInt b = evaluate(f, BigInt(-1));
  if (a == 0 || b == 0) throw ZeroValue("f(1) f(-1) = 0");
  BigInt v = a * b;
  if ((f.degree() / 2) % 2 != 0) v = -v;
  return v;
}

std::vector<std::string> prediction_mismatches(const ValuePrediction& pred, const FeketeDecomposition& d) {
  std::vector<std::string> out;
  if (pred.deg_f != d.f_n.degree()) out.push_back("deg: predicted " + str(pred.deg_f) + ", got " + str(d.f_n.degree()));
  const BigRat v1 = evaluate(d.f_n, BigRat(1));
  const BigRat vm1 = evaluate(d.f_n, BigRat(-1));
  if (v1 != pred.f_at_1) out.push_back("f(1): predicted " + pred.f_at_1.get_str() + ", got " + v1.get_str());
  if (vm1 != pred.f_at_minus1)
    out.push_back("f(-1): predicted " + pred.f_at_minus1.get_str() + ", got " + vm1.get_str());
  if (v1 != 0 && vm1 != 0 && !square_class_matches(reciprocal_disc_class_value(d.f_n), pred.disc_class))
    out.push_back("disc class: predicted " + str(pred.disc_class));
  return out;
}

SeparabilityReport separability_analysis(long p, long q) {
  require_prime_pair(p, q);
  SeparabilityReport r;
  r.n = p * q;
  r.p = p;
  r.q = q;
  const PrimeField K(static_cast<std::uint64_t>(p));
  const PrimePoly F = reduce_mod(build_F(r.n), K);
  for (const auto& part : squarefree_decomposition(F)) {
    if (part.multiplicity < 2) continue;
    for (const auto& f : factor(part.poly).factors) r.repeated_factors.push_back({f.poly, part.multiplicity});
  }
  std::sort(r.repeated_factors.begin(), r.repeated_factors.end(),
            [](const ModFactor& a, const ModFactor& b) { return a.poly < b.poly; });
  r.separable = r.repeated_factors.empty();
  r.u_q_roots = roots_with_multiplicity(reduce_mod(u_q(q), K));
  const PrimePoly Rq = reduce_mod(R_q(q), K);
  if (Rq.degree() >= 1) r.R_q_roots = roots_with_multiplicity(Rq);
  return r;
}

UnitCircleCount unit_circle_root_count(long n) {
  const FeketeDecomposition d = decompose(n);
  std::size_t inside = 0;
  try {
    inside = sturm_count(d.g_n, BigRat(-2), BigRat(2));
  } catch (const NotSquarefree&) {
    throw NotSquarefreeTrace("g_" + str(n));
  }
  UnitCircleCount c;
  c.count = d.cyclo_part.degree() - 1 + 2 * static_cast<long>(inside);
  c.lower_bound = phi1(n);
  if (c.count < c.lower_bound)
    throw ConsistencyError("unit-circle count " + str(c.count) + " below " + str(c.lower_bound) + " for n = " + str(n));
  return c;
}

CoefficientStats coefficient_stats(const IntPoly& f) {
  if (f.degree() < 0 || f.degree() % 2 != 0) throw OddDegree("coefficient stats need even degree");
  CoefficientStats s;
  s.max_abs = 0;
  for (const auto& c : f.coeffs())
    if (abs(c) > s.max_abs) s.max_abs = abs(c);
  s.middle = f.coeff(static_cast<std::size_t>(f.degree() / 2));
  return s;
}

}  // namespace fekete
