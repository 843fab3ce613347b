#include "fekete/intpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "fekete/errors.hpp"

namespace fekete {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::monomial(const BigInt& c, std::size_t k) {
  if (c == 0) return {};
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  IntPoly r;
  r.coeffs_ = std::move(v);
  return r;
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPoly::leading() const {
  if (is_zero()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

BigInt IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly& IntPoly::operator*=(const BigInt& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

IntPoly IntPoly::compose_power(std::size_t k) const {
  if (is_zero()) return {};
  if (k == 0) {
    BigInt s = 0;
    for (const auto& c : coeffs_) s += c;
    return constant(s);
  }
  std::vector<BigInt> r((coeffs_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i * k] = coeffs_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::shift(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<BigInt> r(coeffs_.size() + k);
  std::copy(coeffs_.begin(), coeffs_.end(), r.begin() + static_cast<std::ptrdiff_t>(k));
  return IntPoly(std::move(r));
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& f) { return os << f.to_string(); }

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw ZeroPolynomial("exact_div by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw NonExactDivision("divisor degree exceeds dividend degree");
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const BigInt& lb = bc.back();
  const bool unit_lead = (lb == 1);
  std::vector<BigInt> q(r.size() - db);
  for (std::size_t i = q.size(); i-- > 0;) {
    BigInt& top = r[i + db];
    if (top == 0) continue;
    if (unit_lead) {
      q[i] = top;
    } else {
      if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
        throw NonExactDivision("quotient leaves the integers");
      mpz_divexact(q[i].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    }
    for (std::size_t j = 0; j < db; ++j) {
      if (bc[j] == 0) continue;
      mpz_submul(r[i + j].get_mpz_t(), q[i].get_mpz_t(), bc[j].get_mpz_t());
    }
    top = 0;
  }
  for (std::size_t j = 0; j < db; ++j) {
    if (r[j] != 0) throw NonExactDivision("nonzero remainder");
  }
  return IntPoly(std::move(q));
}

IntPoly rem_monic(const IntPoly& a, const IntPoly& b) {
  if (!b.is_monic()) throw InvalidArgument("rem_monic needs a monic divisor");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  // Sparse divisors (cyclotomic polynomials) dominate, so skip zero terms.
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < db; ++j)
    if (bc[j] != 0) support.push_back(j);
  for (std::size_t i = r.size() - db; i-- > 0;) {
    BigInt& top = r[i + db];
    if (top == 0) continue;
    for (std::size_t j : support) mpz_submul(r[i + j].get_mpz_t(), top.get_mpz_t(), bc[j].get_mpz_t());
    top = 0;
  }
  r.resize(db);
  return IntPoly(std::move(r));
}

IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw ZeroPolynomial("pseudo_rem by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const BigInt& lb = bc.back();
  std::size_t steps = r.size() - db;  // deg a - deg b + 1
  // Classical form: each step multiplies the running remainder by lc(b).
  for (std::size_t i = r.size() - 1; i + 1 > db && steps > 0; --i, --steps) {
    BigInt top = r[i];
    for (std::size_t k = 0; k < i; ++k) r[k] *= lb;
    for (std::size_t j = 0; j < db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), top.get_mpz_t(), bc[j].get_mpz_t());
    r[i] = 0;
    if (i == 0) break;
  }
  r.resize(db);
  return IntPoly(std::move(r));
}

BigInt content(const IntPoly& f) {
  BigInt g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return {};
  BigInt g = content(f);
  if (g == 1) return f;
  std::vector<BigInt> r = f.coeffs();
  for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(r));
}

BigInt evaluate(const IntPoly& f, const BigInt& x0) {
  BigInt acc = 0;
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= x0;
    acc += c[i];
  }
  return acc;
}

BigRat evaluate(const IntPoly& f, const BigRat& x0) {
  BigRat acc = 0;
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= x0;
    acc += BigRat(c[i]);
  }
  acc.canonicalize();
  return acc;
}

IntPoly derivative(const IntPoly& f) {
  if (f.degree() < 1) return {};
  std::vector<BigInt> r(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) r[i - 1] = f.coeffs()[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(r));
}

bool is_reciprocal(const IntPoly& f) {
  const auto& c = f.coeffs();
  return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

IntPoly reversal(const IntPoly& h) {
  if (h.is_zero()) throw ZeroPolynomial("reversal of the zero polynomial");
  std::vector<BigInt> r(h.coeffs().rbegin(), h.coeffs().rend());
  return IntPoly(std::move(r));
}

IntPoly trace_polynomial(const IntPoly& f) {
  if (f.degree() < 0 || f.degree() % 2 != 0) throw OddDegree("trace polynomial needs even degree");
  if (!is_reciprocal(f)) throw NotReciprocal(f.to_string());
  const std::size_t m = static_cast<std::size_t>(f.degree()) / 2;
  const auto& a = f.coeffs();
  // c_k(y) expresses x^k + x^-k in y = x + 1/x.
  IntPoly c_prev = IntPoly::constant(2);
  IntPoly c_cur = IntPoly::monomial(1, 1);
  IntPoly g = IntPoly::constant(a[m]);
  for (std::size_t k = 1; k <= m; ++k) {
    if (k > 1) {
      IntPoly next = c_cur.shift(1) - c_prev;
      c_prev = std::move(c_cur);
      c_cur = std::move(next);
    }
    if (a[m + k] != 0) g += c_cur * a[m + k];
  }
  return g;
}

IntPoly wronskian(const IntPoly& f, const IntPoly& g) { return derivative(f) * g - derivative(g) * f; }

namespace {

BigInt pow_ui(const BigInt& b, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

IntPoly divexact_scalar(const IntPoly& f, const BigInt& s) {
  std::vector<BigInt> r = f.coeffs();
  for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
  return IntPoly(std::move(r));
}

}  // namespace

BigInt resultant(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) throw ZeroPolynomial("resultant with a zero polynomial");
  const auto da = static_cast<unsigned long>(a.degree());
  const auto db = static_cast<unsigned long>(b.degree());
  if (da == 0) return pow_ui(a.leading(), db);
  if (db == 0) return pow_ui(b.leading(), da);

  const BigInt ca = content(a);
  const BigInt cb = content(b);
  IntPoly A = divexact_scalar(a, ca);
  IntPoly B = divexact_scalar(b, cb);
  const BigInt t = pow_ui(ca, db) * pow_ui(cb, da);
  int s = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if ((da & 1) && (db & 1)) s = -1;
  }
  BigInt g = 1;
  BigInt h = 1;
  for (;;) {
    const auto delta = static_cast<unsigned long>(A.degree() - B.degree());
    if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
    IntPoly R = pseudo_rem(A, B);
    if (R.is_zero()) return 0;
    A = std::move(B);
    B = divexact_scalar(R, g * pow_ui(h, delta));
    g = A.leading();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      BigInt num = pow_ui(g, delta);
      BigInt den = pow_ui(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (B.degree() == 0) {
      const auto dA = static_cast<unsigned long>(A.degree());
      BigInt num = pow_ui(B.leading(), dA);
      BigInt den = pow_ui(h, dA - 1);
      BigInt res;
      mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return s * t * res;
    }
  }
}

BigInt discriminant(const IntPoly& f) {
  if (f.degree() < 1) throw ZeroPolynomial("discriminant needs degree >= 1");
  const long d = f.degree();
  BigInt r = resultant(f, derivative(f));
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
  if (((d * (d - 1)) / 2) % 2 != 0) r = -r;
  return r;
}

bool is_perfect_square(const BigInt& v) { return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0; }

bool square_class_matches(const BigInt& v, const BigInt& rep) {
  if (v == 0 || rep == 0) throw ZeroValue("square class of zero");
  BigInt prod = v * rep;
  return prod > 0 && is_perfect_square(prod);
}

namespace {

// Sign of f(a/b) for b > 0, via the homogenized integer sum b^d f(a/b).
int sign_at(const IntPoly& f, const BigRat& x) {
  const BigInt& num = x.get_num();
  const BigInt& den = x.get_den();
  BigInt acc = 0;
  BigInt den_pow = 1;
  const auto& c = f.coeffs();
  // Horner in a with the b powers folded in from the top.
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= num;
    acc += c[i] * den_pow;
    den_pow *= den;
  }
  return sgn(acc);
}

std::vector<IntPoly> sturm_chain(const IntPoly& f) {
  std::vector<IntPoly> chain{primitive_part(f), primitive_part(derivative(f))};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    const IntPoly& a = chain[chain.size() - 2];
    const IntPoly& b = chain.back();
    IntPoly r = pseudo_rem(a, b);
    // prem = lc(b)^k * a mod b; the chain needs -rem up to a positive factor.
    const unsigned long k = static_cast<unsigned long>(a.degree() - b.degree() + 1);
    const bool negative_scale = b.leading() < 0 && (k % 2 == 1);
    if (!negative_scale) r = -r;
    chain.push_back(primitive_part(r));
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

std::size_t sign_variations(const std::vector<IntPoly>& chain, const BigRat& x) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

std::size_t sturm_count(const IntPoly& f, const BigRat& lo, const BigRat& hi) {
  if (f.is_zero()) throw ZeroPolynomial("sturm_count of the zero polynomial");
  if (f.degree() == 0) return 0;
  if (sign_at(f, lo) == 0 || sign_at(f, hi) == 0) throw EndpointRoot(f.to_string());
  if (lo >= hi) return 0;
  std::vector<IntPoly> chain = sturm_chain(f);
  if (chain.back().degree() > 0) throw NotSquarefree(f.to_string());
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

}  // namespace fekete
