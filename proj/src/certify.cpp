#include "fekete/certify.hpp"

#include <algorithm>
#include <map>

#include "fekete/errors.hpp"

namespace fekete {

namespace {

using json = nlohmann::ordered_json;

constexpr std::array<std::pair<CertKind, const char*>, 6> kKindNames{{
    {CertKind::GIrreducible, "GIrreducible"},
    {CertKind::FIrreducibleFastPath, "FIrreducibleFastPath"},
    {CertKind::FIrreducibleOddCount, "FIrreducibleOddCount"},
    {CertKind::GaloisGSymmetric, "GaloisGSymmetric"},
    {CertKind::GaloisFFull, "GaloisFFull"},
    {CertKind::GaloisFHalf, "GaloisFHalf"},
}};

std::uint64_t next_prime(std::uint64_t p) {
  if (p < 2) return 2;
  do {
    ++p;
  } while (!is_prime_u32(p));
  return p;
}

// Reduction of f mod p when it keeps its degree.
std::optional<PrimePoly> reduce_same_degree(const IntPoly& f, std::uint64_t p) {
  const PrimeField K(p);
  if (K.reduce(f.leading()) == 0) return std::nullopt;
  return reduce_mod(f, K);
}

std::optional<FactorShape> shape_mod(const IntPoly& f, std::uint64_t p) {
  if (p < 2 || !is_prime_u32(p)) return std::nullopt;
  auto fp = reduce_same_degree(f, p);
  if (!fp) return std::nullopt;
  return factor_shape(*fp);
}

FactorShape sorted(FactorShape s) {
  std::sort(s.begin(), s.end());
  return s;
}

bool witness_matches(const Witness& w, const IntPoly& f) {
  auto s = shape_mod(f, w.prime);
  return s && *s == sorted(w.shape);
}

bool g_irreducible_mod(const IntPoly& g, std::uint64_t p) {
  auto s = shape_mod(g, p);
  return s && shape_is_irreducible(*s, g.degree());
}

void require_nonconstant(const IntPoly& g) {
  if (g.degree() < 1) throw InvalidArgument("certificate target must be nonconstant");
}

// A factor of g of degree k mod p lifts to f as one factor of degree 2k or
// two of degree k, so the signed shapes force g to split into distinct odd
// degree factors, plus one quadratic in the half case.
bool g_allows_signed_shape(const IntPoly& g, std::uint64_t p, bool half) {
  auto s = shape_mod(g, p);
  if (!s) return false;
  int quadratics = 0;
  for (auto [deg, mult] : *s) {
    if (mult != 1) return false;
    if (deg == 2) {
      ++quadratics;
    } else if (deg % 2 == 0) {
      return false;
    }
  }
  return quadratics <= (half ? 1 : 0);
}

bool g_triple_holds(const IntPoly& g, const std::array<std::uint64_t, 3>& t) {
  const int m = g.degree();
  auto s1 = shape_mod(g, t[0]);
  auto s2 = shape_mod(g, t[1]);
  auto s3 = shape_mod(g, t[2]);
  return s1 && s2 && s3 && shape_is_irreducible(*s1, m) && shape_is_linear_times_irreducible(*s2, m) &&
         shape_is_transposition(*s3);
}

}  // namespace

std::string to_string(CertKind k) {
  for (auto [kind, name] : kKindNames)
    if (kind == k) return name;
  return "?";
}

CertKind cert_kind_from_string(const std::string& s) {
  for (auto [kind, name] : kKindNames)
    if (s == name) return kind;
  throw InvalidArgument("unknown certificate kind " + s);
}

bool shape_is_irreducible(const FactorShape& s, int degree) {
  return s.size() == 1 && s[0].first == degree && s[0].second == 1;
}

bool shape_is_linear_times_irreducible(const FactorShape& s, int degree) {
  return sorted(s) == FactorShape{{1, 1}, {degree - 1, 1}} && degree >= 3;
}

bool shape_is_transposition(const FactorShape& s) {
  int quadratics = 0;
  for (auto [deg, mult] : s) {
    if (mult != 1) return false;
    if (deg == 2) {
      ++quadratics;
    } else if (deg % 2 == 0) {
      return false;
    }
  }
  return quadratics == 1 && s.size() >= 2;
}

bool shape_is_full_signed(const FactorShape& s) {
  int quadratics = 0;
  for (auto [deg, mult] : s) {
    if (mult != 1) return false;
    if (deg == 2) {
      ++quadratics;
    } else if (deg % 2 == 0) {
      return false;
    }
  }
  return quadratics == 1;
}

bool shape_is_half_signed(const FactorShape& s) {
  int quadratics = 0;
  int quartics = 0;
  for (auto [deg, mult] : s) {
    if (mult != 1) return false;
    if (deg == 2) {
      ++quadratics;
    } else if (deg == 4) {
      ++quartics;
    } else if (deg % 2 == 0) {
      return false;
    }
  }
  return quadratics == 1 && quartics == 1;
}

std::optional<int> odd_count_degree(const FactorShape& s) {
  std::map<int, unsigned> count;
  for (auto [deg, mult] : s) count[deg] += mult;
  for (auto [deg, c] : count)
    if (c % 2 == 1) return deg;
  return std::nullopt;
}

bool reciprocal_disc_is_square(const IntPoly& f) {
  const BigInt a = evaluate(f, BigInt(1));
  const BigInt b = evaluate(f, BigInt(-1));
  if (a == 0 || b == 0) return is_perfect_square(discriminant(f));
  return is_perfect_square(reciprocal_disc_class_value(f));
}

CertifyResult certify_g_irreducible(const IntPoly& g, const SearchConfig& cfg) {
  require_nonconstant(g);
  for (std::uint64_t p = 2; p <= cfg.prime_bound; p = next_prime(p)) {
    auto gp = reduce_same_degree(g, p);
    if (!gp) continue;
    if (g.degree() > 1 && count_distinct_roots(*gp) > 0) continue;
    if (!is_irreducible(*gp)) continue;
    Certificate c;
    c.kind = CertKind::GIrreducible;
    c.witnesses.push_back({p, {{g.degree(), 1}}});
    return c;
  }
  return NotFound{"g irreducible", cfg.prime_bound, "no prime keeps g irreducible"};
}

namespace {

std::uint64_t g_prime_from(const Certificate& g_cert, const IntPoly& g) {
  if (g_cert.kind == CertKind::GIrreducible && g_cert.witnesses.size() == 1 &&
      verify_certificate(g_cert, {IntPoly{}, g}))
    return g_cert.witnesses[0].prime;
  if (g_cert.kind == CertKind::GaloisGSymmetric && g_cert.aux.triple && verify_certificate(g_cert, {IntPoly{}, g}))
    return (*g_cert.aux.triple)[0];
  throw PrerequisiteMissing("no valid irreducibility certificate for g");
}

}  // namespace

CertifyResult certify_f_irreducible(const FeketeDecomposition& d, const Certificate* g_cert,
                                    const SearchConfig& cfg) {
  if (g_cert == nullptr) throw PrerequisiteMissing("f irreducibility needs a certificate for g");
  const std::uint64_t g_prime = g_prime_from(*g_cert, d.g_n);
  const IntPoly& f = d.f_n;
  const BigInt v1 = evaluate(f, BigInt(1));
  const BigInt vm1 = evaluate(f, BigInt(-1));
  const BigInt middle = f.coeff(static_cast<std::size_t>(f.degree() / 2));

  if (cfg.fast_paths) {
    Certificate c;
    c.kind = CertKind::FIrreducibleFastPath;
    c.aux.g_prime = g_prime;
    c.aux.f_at_1 = v1;
    c.aux.f_at_minus1 = vm1;
    if (f.degree() % 4 == 0 && v1 * vm1 < 0) {
      c.aux.fast_path = "sign";
      return c;
    }
    if (v1 != 0 && vm1 != 0 && abs(middle) <= 2) {
      c.aux.fast_path = "middle";
      c.aux.middle_coeff = middle;
      return c;
    }
  }

  for (std::uint64_t p = 2; p <= cfg.prime_bound; p = next_prime(p)) {
    auto s = shape_mod(f, p);
    if (!s) continue;
    if (auto deg = odd_count_degree(*s)) {
      Certificate c;
      c.kind = CertKind::FIrreducibleOddCount;
      c.witnesses.push_back({p, *s});
      c.aux.odd_degree = *deg;
      c.aux.g_prime = g_prime;
      return c;
    }
  }
  return NotFound{"f irreducible", cfg.prime_bound, "every degree occurs an even number of times"};
}

CertifyResult certify_galois_g(const IntPoly& g, const SearchConfig& cfg) {
  require_nonconstant(g);
  const int m = g.degree();
  if (m < 3) return NotFound{"galois g", cfg.prime_bound, "degree below 3"};
  std::optional<std::uint64_t> q1, q2, q3;
  std::map<std::uint64_t, FactorShape> shapes;
  for (std::uint64_t p = 2; p <= cfg.prime_bound && !(q1 && q2 && q3); p = next_prime(p)) {
    auto gp = reduce_same_degree(g, p);
    if (!gp) continue;
    const int roots = count_distinct_roots(*gp);
    // Only the transposition shape tolerates several linear factors.
    if (roots > 1 && q3) continue;
    FactorShape s = factor_shape(*gp);
    if (!q1 && shape_is_irreducible(s, m)) {
      q1 = p;
      shapes[p] = s;
    }
    if (!q2 && shape_is_linear_times_irreducible(s, m)) {
      q2 = p;
      shapes[p] = s;
    }
    if (!q3 && shape_is_transposition(s)) {
      q3 = p;
      shapes[p] = s;
    }
  }
  if (!(q1 && q2 && q3)) {
    std::string diag = "found:";
    if (q1) diag += " q1=" + std::to_string(*q1);
    if (q2) diag += " q2=" + std::to_string(*q2);
    if (q3) diag += " q3=" + std::to_string(*q3);
    return NotFound{"galois g", cfg.prime_bound, diag};
  }
  Certificate c;
  c.kind = CertKind::GaloisGSymmetric;
  for (auto& [p, s] : shapes) c.witnesses.push_back({p, s});
  c.aux.triple = std::array<std::uint64_t, 3>{*q1, *q2, *q3};
  return c;
}

CertifyResult certify_galois_f(const FeketeDecomposition& d, const Certificate* g_cert, const SearchConfig& cfg,
                               std::optional<GaloisFCase> requested) {
  if (g_cert == nullptr || g_cert->kind != CertKind::GaloisGSymmetric || !g_cert->aux.triple ||
      !verify_certificate(*g_cert, {IntPoly{}, d.g_n}))
    throw PrerequisiteMissing("galois f needs a symmetric-group certificate for g");
  const bool square = reciprocal_disc_is_square(d.f_n);
  const GaloisFCase applicable = square ? GaloisFCase::Half : GaloisFCase::Full;
  if (requested && *requested != applicable)
    throw CriterionInapplicable(square ? "disc(f) is a square; only the half criterion applies"
                                       : "disc(f) is not a square; only the full criterion applies");
  // Distinct odd-degree factors of g mean an even Frobenius permutation,
  // which needs disc(g) to be a square mod p.
  const BigInt disc_g = square ? BigInt(0) : discriminant(d.g_n);
  for (std::uint64_t p = 2; p <= cfg.prime_bound; p = next_prime(p)) {
    if (!square && p > 2 && mpz_kronecker_ui(disc_g.get_mpz_t(), static_cast<unsigned long>(p)) != 1) continue;
    if (!g_allows_signed_shape(d.g_n, p, square)) continue;
    auto s = shape_mod(d.f_n, p);
    if (!s) continue;
    if (square ? shape_is_half_signed(*s) : shape_is_full_signed(*s)) {
      Certificate c;
      c.kind = square ? CertKind::GaloisFHalf : CertKind::GaloisFFull;
      c.witnesses.push_back({p, *s});
      c.aux.disc_square = square;
      c.aux.g_triple = g_cert->aux.triple;
      return c;
    }
  }
  return NotFound{square ? "galois f half" : "galois f full", cfg.prime_bound, "no prime with the required shape"};
}

bool verify_certificate(const Certificate& c, const VerifyContext& ctx) {
  try {
    for (std::size_t i = 1; i < c.witnesses.size(); ++i)
      if (c.witnesses[i - 1].prime >= c.witnesses[i].prime) return false;
    switch (c.kind) {
      case CertKind::GIrreducible: {
        if (ctx.g.degree() < 1 || c.witnesses.size() != 1) return false;
        const Witness& w = c.witnesses[0];
        return witness_matches(w, ctx.g) && shape_is_irreducible(sorted(w.shape), ctx.g.degree());
      }
      case CertKind::GaloisGSymmetric: {
        if (ctx.g.degree() < 3 || !c.aux.triple) return false;
        const auto& t = *c.aux.triple;
        std::vector<std::uint64_t> primes(t.begin(), t.end());
        std::sort(primes.begin(), primes.end());
        primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
        if (primes.size() != c.witnesses.size()) return false;
        for (std::size_t i = 0; i < primes.size(); ++i) {
          if (c.witnesses[i].prime != primes[i] || !witness_matches(c.witnesses[i], ctx.g)) return false;
        }
        return g_triple_holds(ctx.g, t);
      }
      case CertKind::FIrreducibleFastPath: {
        const IntPoly& f = ctx.f;
        if (!c.aux.g_prime || !c.aux.fast_path || !c.aux.f_at_1 || !c.aux.f_at_minus1) return false;
        if (!c.witnesses.empty() || f.degree() < 2 || f.degree() % 2 != 0) return false;
        if (!g_irreducible_mod(ctx.g, *c.aux.g_prime)) return false;
        const BigInt v1 = evaluate(f, BigInt(1));
        const BigInt vm1 = evaluate(f, BigInt(-1));
        if (v1 != *c.aux.f_at_1 || vm1 != *c.aux.f_at_minus1) return false;
        if (*c.aux.fast_path == "sign") return f.degree() % 4 == 0 && v1 * vm1 < 0;
        if (*c.aux.fast_path == "middle") {
          const BigInt middle = f.coeff(static_cast<std::size_t>(f.degree() / 2));
          return c.aux.middle_coeff && *c.aux.middle_coeff == middle && v1 != 0 && vm1 != 0 && abs(middle) <= 2;
        }
        return false;
      }
      case CertKind::FIrreducibleOddCount: {
        if (!c.aux.g_prime || !c.aux.odd_degree || c.witnesses.size() != 1) return false;
        if (!g_irreducible_mod(ctx.g, *c.aux.g_prime)) return false;
        const Witness& w = c.witnesses[0];
        return witness_matches(w, ctx.f) && odd_count_degree(sorted(w.shape)) == c.aux.odd_degree;
      }
      case CertKind::GaloisFFull:
      case CertKind::GaloisFHalf: {
        if (!c.aux.disc_square || !c.aux.g_triple || c.witnesses.size() != 1) return false;
        if (ctx.g.degree() < 3 || !g_triple_holds(ctx.g, *c.aux.g_triple)) return false;
        const bool half = c.kind == CertKind::GaloisFHalf;
        if (*c.aux.disc_square != half || reciprocal_disc_is_square(ctx.f) != half) return false;
        const Witness& w = c.witnesses[0];
        const FactorShape s = sorted(w.shape);
        return witness_matches(w, ctx.f) && (half ? shape_is_half_signed(s) : shape_is_full_signed(s));
      }
    }
  } catch (const PreconditionError&) {
    return false;
  }
  return false;
}

json big_to_json(const BigInt& v) {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) <= 53) return json(v.get_si());
  return json(v.get_str());
}

BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    BigInt v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw InvalidArgument("bad integer string " + j.dump());
    return v;
  }
  throw InvalidArgument("expected an integer, got " + j.dump());
}

namespace {

json triple_json(const std::array<std::uint64_t, 3>& t) { return json::array({t[0], t[1], t[2]}); }

std::array<std::uint64_t, 3> triple_from(const json& j) {
  if (!j.is_array() || j.size() != 3) throw InvalidArgument("triple must have three primes");
  return {j[0].get<std::uint64_t>(), j[1].get<std::uint64_t>(), j[2].get<std::uint64_t>()};
}

}  // namespace

json to_json(const Certificate& c) {
  json j;
  j["kind"] = to_string(c.kind);
  json ws = json::array();
  for (const auto& w : c.witnesses) {
    json shape = json::array();
    for (auto [deg, mult] : sorted(w.shape)) shape.push_back(json::array({deg, mult}));
    json wj;
    wj["prime"] = w.prime;
    wj["shape"] = std::move(shape);
    ws.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(ws);
  json aux = json::object();
  const auto& a = c.aux;
  if (a.fast_path) aux["fast_path"] = *a.fast_path;
  if (a.odd_degree) aux["odd_degree"] = *a.odd_degree;
  if (a.disc_square) aux["disc_square"] = *a.disc_square;
  if (a.middle_coeff) aux["middle_coeff"] = big_to_json(*a.middle_coeff);
  if (a.f_at_1) aux["f_at_1"] = big_to_json(*a.f_at_1);
  if (a.f_at_minus1) aux["f_at_minus1"] = big_to_json(*a.f_at_minus1);
  if (a.g_prime) aux["g_prime"] = *a.g_prime;
  if (a.triple) aux["triple"] = triple_json(*a.triple);
  if (a.g_triple) aux["g_triple"] = triple_json(*a.g_triple);
  j["aux"] = std::move(aux);
  return j;
}

json to_json(const NotFound& nf) {
  json j;
  j["kind"] = "NotFound";
  j["what"] = nf.what;
  j["prime_bound"] = nf.prime_bound;
  j["diagnostics"] = nf.diagnostics;
  return j;
}

json to_json(const CertifyResult& r) {
  return std::visit([](const auto& v) { return to_json(v); }, r);
}

Certificate certificate_from_json(const json& j) {
  try {
    Certificate c;
    c.kind = cert_kind_from_string(j.at("kind").get<std::string>());
    for (const auto& wj : j.at("witnesses")) {
      Witness w;
      w.prime = wj.at("prime").get<std::uint64_t>();
      for (const auto& pair : wj.at("shape")) {
        if (!pair.is_array() || pair.size() != 2) throw InvalidArgument("shape entries are [deg, mult]");
        w.shape.emplace_back(pair[0].get<int>(), pair[1].get<unsigned>());
      }
      c.witnesses.push_back(std::move(w));
    }
    const json& a = j.at("aux");
    if (!a.is_object()) throw InvalidArgument("aux must be an object");
    if (a.contains("fast_path")) c.aux.fast_path = a["fast_path"].get<std::string>();
    if (a.contains("odd_degree")) c.aux.odd_degree = a["odd_degree"].get<int>();
    if (a.contains("disc_square")) c.aux.disc_square = a["disc_square"].get<bool>();
    if (a.contains("middle_coeff")) c.aux.middle_coeff = big_from_json(a["middle_coeff"]);
    if (a.contains("f_at_1")) c.aux.f_at_1 = big_from_json(a["f_at_1"]);
    if (a.contains("f_at_minus1")) c.aux.f_at_minus1 = big_from_json(a["f_at_minus1"]);
    if (a.contains("g_prime")) c.aux.g_prime = a["g_prime"].get<std::uint64_t>();
    if (a.contains("triple")) c.aux.triple = triple_from(a["triple"]);
    if (a.contains("g_triple")) c.aux.g_triple = triple_from(a["g_triple"]);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace fekete
