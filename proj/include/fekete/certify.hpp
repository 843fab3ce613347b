#pragma once

// Modular certificates for irreducibility of g_n and f_n and for the Galois
// groups of g_n (symmetric) and f_n (full or index-two signed permutations).
// Every certificate carries enough data to be re-checked from scratch.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fekete/fekete.hpp"
#include "fekete/intpoly.hpp"
#include "fekete/modpoly.hpp"

#include "json.hpp"

namespace fekete {

enum class CertKind {
  GIrreducible,
  FIrreducibleFastPath,
  FIrreducibleOddCount,
  GaloisGSymmetric,
  GaloisFFull,
  GaloisFHalf,
};

std::string to_string(CertKind k);
/// Throws InvalidArgument on an unknown name.
CertKind cert_kind_from_string(const std::string& s);

struct Witness {
  std::uint64_t prime = 0;
  FactorShape shape;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CertificateAux {
  std::optional<std::string> fast_path;           // "sign" or "middle"
  std::optional<int> odd_degree;                  // degree counted an odd number of times
  std::optional<bool> disc_square;
  std::optional<BigInt> middle_coeff;
  std::optional<BigInt> f_at_1;
  std::optional<BigInt> f_at_minus1;
  std::optional<std::uint64_t> g_prime;           // irreducibility witness for g
  std::optional<std::array<std::uint64_t, 3>> triple;    // (q1, q2, q3) for g
  std::optional<std::array<std::uint64_t, 3>> g_triple;  // prerequisite triple for f
  friend bool operator==(const CertificateAux&, const CertificateAux&) = default;
};

struct Certificate {
  CertKind kind = CertKind::GIrreducible;
  std::vector<Witness> witnesses;  // increasing prime
  CertificateAux aux;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct NotFound {
  std::string what;
  std::uint64_t prime_bound = 0;
  std::string diagnostics;
};

using CertifyResult = std::variant<Certificate, NotFound>;

struct SearchConfig {
  std::uint64_t prime_bound = 5000;
  /// Try the sign and middle-coefficient criteria before the prime search.
  bool fast_paths = true;
};

enum class GaloisFCase { Full, Half };

CertifyResult certify_g_irreducible(const IntPoly& g, const SearchConfig& cfg = {});

/// g_cert must be a GIrreducible or GaloisGSymmetric certificate for d.g_n.
CertifyResult certify_f_irreducible(const FeketeDecomposition& d, const Certificate* g_cert,
                                    const SearchConfig& cfg = {});

CertifyResult certify_galois_g(const IntPoly& g, const SearchConfig& cfg = {});

/// g_cert must be a GaloisGSymmetric certificate for d.g_n. When requested
/// is given and does not match the square class of disc(f_n), throws
/// CriterionInapplicable.
CertifyResult certify_galois_f(const FeketeDecomposition& d, const Certificate* g_cert,
                               const SearchConfig& cfg = {}, std::optional<GaloisFCase> requested = std::nullopt);

/// Whether disc(f) is a perfect square, for reciprocal f of even degree.
bool reciprocal_disc_is_square(const IntPoly& f);

struct VerifyContext {
  IntPoly f;
  IntPoly g;
};

/// Recomputes every witness shape and side condition. Shapes are compared
/// as multisets.
bool verify_certificate(const Certificate& c, const VerifyContext& ctx);

/// Shape predicates used by the searches and by verification.
bool shape_is_irreducible(const FactorShape& s, int degree);
bool shape_is_linear_times_irreducible(const FactorShape& s, int degree);
bool shape_is_transposition(const FactorShape& s);
bool shape_is_full_signed(const FactorShape& s);
bool shape_is_half_signed(const FactorShape& s);
/// Smallest degree whose factors, counted with multiplicity, occur an odd
/// number of times.
std::optional<int> odd_count_degree(const FactorShape& s);

/// Decimal number when |v| < 2^53, decimal string otherwise.
nlohmann::ordered_json big_to_json(const BigInt& v);
/// Accepts either form; throws InvalidArgument otherwise.
BigInt big_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const Certificate& c);
nlohmann::ordered_json to_json(const NotFound& nf);
nlohmann::ordered_json to_json(const CertifyResult& r);
/// Throws InvalidArgument on malformed input.
Certificate certificate_from_json(const nlohmann::ordered_json& j);

}  // namespace fekete
