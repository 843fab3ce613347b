#pragma once

// Per-n scan records, JSON-lines persistence and report aggregation.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fekete/certify.hpp"

#include "json.hpp"

namespace fekete {

struct ScanOptions {
  std::uint64_t prime_bound = 5000;
  long dmax = 100;  // largest d in the equidistribution cross-check
  unsigned threads = 1;
};

struct RepeatedFactor {
  std::vector<std::uint64_t> coeffs;  // monic, ascending, mod p
  unsigned multiplicity = 0;
  friend bool operator==(const RepeatedFactor&, const RepeatedFactor&) = default;
};

struct ScanRecord {
  long n = 0;
  long p = 0;
  long q = 0;
  std::vector<long> S_n;
  long deg_f = 0;
  BigInt f_coeff_max;
  BigInt middle_coeff;
  BigInt f_at_1;
  BigInt f_at_minus1;
  long disc_class = 0;
  bool disc_square = false;
  CertifyResult g_irreducible;
  CertifyResult f_irreducible;
  CertifyResult galois_g;
  CertifyResult galois_f;
  bool separable = true;
  std::vector<RepeatedFactor> repeated_factors;
  std::optional<long> unit_circle_count;  // absent when g_n is not squarefree
  long unit_circle_bound = 0;
  std::vector<long> equidistribution_anomalies;  // d with the two sides disagreeing
};

/// Odd semiprimes pq, p > q >= 3, in [lo, hi].
std::vector<long> semiprimes_in_range(long lo, long hi);

/// d <= dmax, d not dividing n, where Phi_d | F_n disagrees with
/// equidistribution_check(n, d). n squarefree.
std::vector<long> equidistribution_anomalies(long n, long dmax);

ScanRecord compute_record(long n, const ScanOptions& opt);

/// One JSON object with "v":1 and a fixed field order.
nlohmann::ordered_json to_json(const ScanRecord& r);
/// Throws InvalidArgument on malformed input.
ScanRecord record_from_json(const nlohmann::ordered_json& j);
/// Recomputes decompose(n) and re-verifies every stored certificate.
bool verify_record(const ScanRecord& r);

struct ScanSummary {
  std::size_t written = 0;
  std::size_t reused = 0;
  std::vector<std::pair<long, std::string>> errors;
};

/// Scan [lo, hi] into out_path. Records already present in out_path are
/// kept verbatim; the file is rewritten sorted by n.
ScanSummary run_scan(long lo, long hi, const std::string& out_path, const ScanOptions& opt);

enum class ReportFormat { Markdown, Csv };

struct ReportResult {
  std::string text;
  std::vector<std::string> warnings;  // one per skipped line
};

ReportResult build_report(std::istream& in, ReportFormat fmt);

}  // namespace fekete
