#include "fekete/modpoly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "fekete/errors.hpp"

namespace fekete {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Bases 2, 7, 61 are exact below 4759123141.
  for (std::uint64_t a : {2, 7, 61}) {
    if (a % n == 0) continue;
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p, std::uint64_t max_modulus) : p_(p) {
  if (max_modulus > kDefaultMaxModulus) max_modulus = kDefaultMaxModulus;
  if (p > max_modulus) throw InvalidModulus(std::to_string(p) + " exceeds the modulus bound");
  if (!is_prime_u32(p)) throw InvalidModulus(std::to_string(p) + " is not prime");
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const noexcept { return powmod_u64(a, e, p_); }

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw ZeroValue("inverse of zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

std::uint64_t PrimeField::reduce(const BigInt& v) const { return mpz_fdiv_ui(v.get_mpz_t(), p_); }

PrimePoly::PrimePoly(PrimeField field, std::vector<std::uint64_t> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= field_.p();
  normalize();
}

PrimePoly::PrimePoly(PrimeField field, std::initializer_list<long> coeffs) : field_(field) {
  const auto p = static_cast<long>(field_.p());
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.push_back(static_cast<std::uint64_t>(((c % p) + p) % p));
  normalize();
}

PrimePoly PrimePoly::monomial(PrimeField field, std::uint64_t c, std::size_t k) {
  std::vector<std::uint64_t> v(k + 1);
  v[k] = c;
  return PrimePoly(field, std::move(v));
}

void PrimePoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::uint64_t PrimePoly::leading() const {
  if (is_zero()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

std::uint64_t PrimePoly::evaluate(std::uint64_t x0) const noexcept {
  std::uint64_t acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x0), coeffs_[i]);
  return acc;
}

PrimePoly PrimePoly::monic() const {
  if (is_zero() || coeffs_.back() == 1) return *this;
  return *this * field_.inv(coeffs_.back());
}

PrimePoly PrimePoly::operator-() const {
  PrimePoly r = *this;
  for (auto& c : r.coeffs_) c = field_.neg(c);
  return r;
}

PrimePoly& PrimePoly::operator+=(const PrimePoly& rhs) {
  if (!(field_ == rhs.field_)) throw FieldMismatch("addition across fields");
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = field_.add(coeffs_[i], rhs.coeffs_[i]);
  normalize();
  return *this;
}

PrimePoly& PrimePoly::operator-=(const PrimePoly& rhs) {
  if (!(field_ == rhs.field_)) throw FieldMismatch("subtraction across fields");
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = field_.sub(coeffs_[i], rhs.coeffs_[i]);
  normalize();
  return *this;
}

PrimePoly& PrimePoly::operator*=(std::uint64_t s) {
  s %= field_.p();
  for (auto& c : coeffs_) c = field_.mul(c, s);
  normalize();
  return *this;
}

PrimePoly operator*(const PrimePoly& a, const PrimePoly& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch("multiplication across fields");
  if (a.is_zero() || b.is_zero()) return PrimePoly(a.field_);
  const std::size_t na = a.coeffs_.size();
  const std::size_t nb = b.coeffs_.size();
  const std::uint64_t p = a.p();
  // Products are below 2^62, so a 128-bit accumulator never overflows here.
  std::vector<unsigned __int128> acc(na + nb - 1, 0);
  for (std::size_t i = 0; i < na; ++i) {
    const std::uint64_t ai = a.coeffs_[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < nb; ++j) acc[i + j] += static_cast<unsigned __int128>(ai) * b.coeffs_[j];
  }
  std::vector<std::uint64_t> r(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) r[k] = static_cast<std::uint64_t>(acc[k] % p);
  return PrimePoly(a.field_, std::move(r));
}

bool operator<(const PrimePoly& a, const PrimePoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs_ < b.coeffs_;
}

IntPoly PrimePoly::to_intpoly() const {
  std::vector<BigInt> v;
  v.reserve(coeffs_.size());
  for (auto c : coeffs_) v.emplace_back(static_cast<unsigned long>(c));
  return IntPoly(std::move(v));
}

std::string PrimePoly::to_string(char var) const { return to_intpoly().to_string(var); }

std::pair<PrimePoly, PrimePoly> divmod(const PrimePoly& a, const PrimePoly& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("division across fields");
  if (b.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  const PrimeField& K = a.field();
  if (a.degree() < b.degree()) return {PrimePoly(K), a};
  std::vector<std::uint64_t> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const std::uint64_t inv_lb = K.inv(bc.back());
  std::vector<std::uint64_t> q(r.size() - db);
  for (std::size_t i = q.size(); i-- > 0;) {
    const std::uint64_t t = K.mul(r[i + db], inv_lb);
    q[i] = t;
    if (t == 0) continue;
    for (std::size_t j = 0; j < db; ++j) r[i + j] = K.sub(r[i + j], K.mul(t, bc[j]));
    r[i + db] = 0;
  }
  r.resize(db);
  return {PrimePoly(K, std::move(q)), PrimePoly(K, std::move(r))};
}

PrimePoly rem(const PrimePoly& a, const PrimePoly& b) { return divmod(a, b).second; }

PrimePoly exact_quotient(const PrimePoly& a, const PrimePoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw NonExactDivision("modular quotient leaves a remainder");
  return q;
}

PrimePoly gcd_mod(const PrimePoly& a, const PrimePoly& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("gcd across fields");
  PrimePoly x = a;
  PrimePoly y = b;
  while (!y.is_zero()) {
    PrimePoly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

PrimePoly mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m) { return rem(a * b, m); }

PrimePoly powmod(const PrimePoly& base, const BigInt& e, const PrimePoly& m) {
  if (e < 0) throw InvalidArgument("negative exponent");
  PrimePoly result = rem(PrimePoly::one(base.field()), m);
  PrimePoly b = rem(base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, b, m);
  }
  return result;
}

PrimePoly derivative(const PrimePoly& f) {
  if (f.degree() < 1) return PrimePoly(f.field());
  const PrimeField& K = f.field();
  std::vector<std::uint64_t> r(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) r[i - 1] = K.mul(f.coeffs()[i], i % K.p());
  return PrimePoly(K, std::move(r));
}

PrimePoly reduce_mod(const IntPoly& f, const PrimeField& K) {
  std::vector<std::uint64_t> v;
  v.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) v.push_back(K.reduce(c));
  return PrimePoly(K, std::move(v));
}

PrimePoly ModFactorization::expand(const PrimeField& K) const {
  PrimePoly r = PrimePoly::monomial(K, unit, 0);
  for (const auto& f : factors)
    for (unsigned i = 0; i < f.multiplicity; ++i) r = r * f.poly;
  return r;
}

namespace {

// Matrix of x^(i p) mod f; applying it to h gives h^p mod f.
class Frobenius {
 public:
  explicit Frobenius(const PrimePoly& f) : f_(f) {
    const PrimeField& K = f.field();
    const auto n = static_cast<std::size_t>(f.degree());
    const std::uint64_t p = K.p();
    rows_.reserve(n);
    rows_.push_back(rem(PrimePoly::one(K), f));
    if (n <= 1) return;
    if (p < n) {
      for (std::size_t i = 1; i < n; ++i) {
        const auto& prev = rows_.back().coeffs();
        std::vector<std::uint64_t> shifted(prev.size() + p);
        std::copy(prev.begin(), prev.end(), shifted.begin() + static_cast<std::ptrdiff_t>(p));
        rows_.push_back(rem(PrimePoly(K, std::move(shifted)), f));
      }
    } else {
      const PrimePoly xp = powmod(PrimePoly::x(K), BigInt(static_cast<unsigned long>(p)), f);
      for (std::size_t i = 1; i < n; ++i) rows_.push_back(mulmod(rows_.back(), xp, f));
    }
  }

  PrimePoly apply(const PrimePoly& h) const {
    const PrimeField& K = f_.field();
    const auto n = static_cast<std::size_t>(std::max(f_.degree(), 1));
    std::vector<unsigned __int128> acc(n, 0);
    const auto& hc = h.coeffs();
    for (std::size_t i = 0; i < hc.size(); ++i) {
      if (hc[i] == 0) continue;
      const auto& row = rows_[i].coeffs();
      for (std::size_t j = 0; j < row.size(); ++j) acc[j] += static_cast<unsigned __int128>(hc[i]) * row[j];
    }
    std::vector<std::uint64_t> r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = static_cast<std::uint64_t>(acc[j] % K.p());
    return PrimePoly(K, std::move(r));
  }

  // g divides the current modulus.
  void restrict_to(const PrimePoly& g) {
    f_ = g;
    const auto n = static_cast<std::size_t>(std::max(g.degree(), 1));
    if (rows_.size() > n) rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(n), rows_.end());
    for (auto& row : rows_) row = rem(row, g);
  }

 private:
  PrimePoly f_;
  std::vector<PrimePoly> rows_;
};

struct DegreePart {
  PrimePoly poly;  // product of all irreducible factors of degree d
  int d;
};

// f monic squarefree.
std::vector<DegreePart> distinct_degree(const PrimePoly& f) {
  std::vector<DegreePart> out;
  if (f.degree() < 1) return out;
  const PrimeField& K = f.field();
  PrimePoly cur = f;
  if (cur.degree() >= 2) {
    Frobenius frob(cur);
    const PrimePoly x = PrimePoly::x(K);
    PrimePoly h = x;
    int d = 0;
    while (2 * (d + 1) <= cur.degree()) {
      ++d;
      h = frob.apply(h);
      PrimePoly g = gcd_mod(h - x, cur);
      if (g.degree() > 0) {
        out.push_back({g, d});
        cur = exact_quotient(cur, g);
        if (cur.degree() < 1) break;
        h = rem(h, cur);
        frob.restrict_to(cur);
      }
    }
  }
  if (cur.degree() > 0) out.push_back({cur, cur.degree()});
  return out;
}

PrimePoly random_poly(const PrimeField& K, int below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, K.p() - 1);
  std::vector<std::uint64_t> v(static_cast<std::size_t>(below_degree));
  for (auto& c : v) c = dist(rng);
  return PrimePoly(K, std::move(v));
}

// f monic squarefree, all irreducible factors of degree d.
void equal_degree(const PrimePoly& f, int d, std::mt19937_64& rng, std::vector<PrimePoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const PrimeField& K = f.field();
  const std::uint64_t p = K.p();
  BigInt half_exp;
  if (p != 2) {
    mpz_ui_pow_ui(half_exp.get_mpz_t(), p, static_cast<unsigned long>(d));
    half_exp = (half_exp - 1) / 2;
  }
  for (;;) {
    PrimePoly a = random_poly(K, f.degree(), rng);
    if (a.degree() < 1) continue;
    PrimePoly t(K);
    if (p == 2) {
      PrimePoly s = a;
      t = a;
      for (int i = 1; i < d; ++i) {
        s = mulmod(s, s, f);
        t += s;
      }
    } else {
      t = powmod(a, half_exp, f) - PrimePoly::one(K);
    }
    PrimePoly g = gcd_mod(t, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(exact_quotient(f, g), d, rng, out);
      return;
    }
  }
}

std::uint64_t seed_for(const PrimePoly& f) {
  // FNV-1a over (p, coefficients); stable across platforms.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(f.p());
  for (auto c : f.coeffs()) mix(c);
  return h;
}

std::vector<ModFactor> squarefree_monic(const PrimePoly& f) {
  std::vector<ModFactor> out;
  if (f.degree() < 1) return out;
  const PrimeField& K = f.field();
  PrimePoly c = gcd_mod(f, derivative(f));
  PrimePoly w = exact_quotient(f, c);
  unsigned i = 1;
  while (w.degree() > 0) {
    PrimePoly y = gcd_mod(w, c);
    PrimePoly fac = exact_quotient(w, y);
    if (fac.degree() > 0) out.push_back({fac, i});
    w = std::move(y);
    c = exact_quotient(c, w);
    ++i;
  }
  if (c.degree() > 0) {
    // c is a p-th power: c(x) = r(x)^p with r read off every p-th coefficient.
    const std::uint64_t p = K.p();
    std::vector<std::uint64_t> root(static_cast<std::size_t>(c.degree()) / p + 1);
    for (std::size_t k = 0; k < root.size(); ++k) root[k] = c.coeff(k * p);
    for (auto& part : squarefree_monic(PrimePoly(K, std::move(root)))) {
      out.push_back({part.poly, part.multiplicity * static_cast<unsigned>(p)});
    }
  }
  return out;
}

}  // namespace

std::vector<ModFactor> squarefree_decomposition(const PrimePoly& f) {
  if (f.degree() < 1) throw InvalidArgument("squarefree decomposition needs degree >= 1");
  std::map<unsigned, PrimePoly> merged;
  for (auto& part : squarefree_monic(f.monic())) {
    auto it = merged.find(part.multiplicity);
    if (it == merged.end()) {
      merged.emplace(part.multiplicity, part.poly);
    } else {
      it->second = it->second * part.poly;
    }
  }
  std::vector<ModFactor> out;
  for (auto& [e, poly] : merged) out.push_back({poly, e});
  return out;
}

bool is_irreducible(const PrimePoly& f) {
  if (f.degree() < 1) throw InvalidArgument("irreducibility test needs degree >= 1");
  const int n = f.degree();
  if (n == 1) return true;
  const PrimePoly fm = f.monic();
  const PrimeField& K = f.field();
  const PrimePoly x = PrimePoly::x(K);
  Frobenius frob(fm);
  std::vector<int> checkpoints;
  int m = n;
  for (int r = 2; r * r <= m; ++r) {
    if (m % r == 0) {
      checkpoints.push_back(n / r);
      while (m % r == 0) m /= r;
    }
  }
  if (m > 1) checkpoints.push_back(n / m);
  PrimePoly h = x;
  for (int k = 1; k <= n; ++k) {
    h = frob.apply(h);
    if (std::find(checkpoints.begin(), checkpoints.end(), k) != checkpoints.end()) {
      if (gcd_mod(h - x, fm).degree() != 0) return false;
    }
  }
  return h == x;
}

ModFactorization factor(const PrimePoly& f) {
  if (f.degree() < 1) throw InvalidArgument("factorization needs degree >= 1");
  ModFactorization result;
  result.unit = f.leading();
  std::mt19937_64 rng(seed_for(f));
  for (const auto& part : squarefree_decomposition(f)) {
    for (const auto& dp : distinct_degree(part.poly)) {
      std::vector<PrimePoly> irreducibles;
      equal_degree(dp.poly, dp.d, rng, irreducibles);
      for (auto& g : irreducibles) result.factors.push_back({std::move(g), part.multiplicity});
    }
  }
  std::sort(result.factors.begin(), result.factors.end(), [](const ModFactor& a, const ModFactor& b) {
    if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
    return a.poly < b.poly;
  });
  return result;
}

FactorShape factor_shape(const PrimePoly& f) {
  if (f.degree() < 1) throw InvalidArgument("factor shape needs degree >= 1");
  FactorShape shape;
  for (const auto& part : squarefree_decomposition(f)) {
    for (const auto& dp : distinct_degree(part.poly)) {
      for (int k = 0; k < dp.poly.degree() / dp.d; ++k) shape.emplace_back(dp.d, part.multiplicity);
    }
  }
  std::sort(shape.begin(), shape.end());
  return shape;
}

int count_distinct_roots(const PrimePoly& f) {
  if (f.degree() < 1) throw InvalidArgument("root count needs degree >= 1");
  const PrimePoly fm = f.monic();
  const PrimeField& K = f.field();
  const PrimePoly x = PrimePoly::x(K);
  PrimePoly xp = powmod(x, BigInt(static_cast<unsigned long>(K.p())), fm);
  return gcd_mod(xp - rem(x, fm), fm).degree();
}

std::vector<std::pair<std::uint64_t, unsigned>> roots_with_multiplicity(const PrimePoly& f) {
  if (f.degree() < 1) throw InvalidArgument("root search needs degree >= 1");
  const PrimeField& K = f.field();
  const PrimePoly x = PrimePoly::x(K);
  std::mt19937_64 rng(seed_for(f));
  std::vector<std::pair<std::uint64_t, unsigned>> roots;
  for (const auto& part : squarefree_decomposition(f)) {
    PrimePoly xp = powmod(x, BigInt(static_cast<unsigned long>(K.p())), part.poly);
    PrimePoly lin = gcd_mod(xp - rem(x, part.poly), part.poly);
    if (lin.degree() < 1) continue;
    std::vector<PrimePoly> linear;
    equal_degree(lin, 1, rng, linear);
    for (const auto& l : linear) roots.emplace_back(K.neg(l.coeff(0)), part.multiplicity);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string shape_to_string(const FactorShape& shape) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) os << ",";
    os << "(" << shape[i].first << "," << shape[i].second << ")";
  }
  os << "]";
  return os.str();
}

}  // namespace fekete
