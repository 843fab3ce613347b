#include "fekete/scan.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "fekete/cyclotomic.hpp"
#include "fekete/errors.hpp"
#include "fekete/fekete.hpp"

namespace fekete {

namespace {

using json = nlohmann::ordered_json;

CertifyResult result_from_json(const json& j) {
  if (j.at("kind").get<std::string>() == "NotFound") {
    return NotFound{j.at("what").get<std::string>(), j.at("prime_bound").get<std::uint64_t>(),
                    j.at("diagnostics").get<std::string>()};
  }
  return certificate_from_json(j);
}

const Certificate* found(const CertifyResult& r) { return std::get_if<Certificate>(&r); }

}  // namespace

std::vector<long> semiprimes_in_range(long lo, long hi) {
  std::vector<long> out;
  for (long n = std::max(lo, 15L); n <= hi; ++n) {
    if (n % 2 == 0) continue;
    try {
      semiprime_factors(n);
      out.push_back(n);
    } catch (const NotSemiprime&) {
    }
  }
  return out;
}

std::vector<long> equidistribution_anomalies(long n, long dmax) {
  const IntPoly F = build_F(n);
  std::vector<long> out;
  for (long d = 2; d <= dmax; ++d) {
    if (n % d == 0) continue;
    if (cyclotomic_divides(F, d) != equidistribution_check(n, d)) out.push_back(d);
  }
  return out;
}

ScanRecord compute_record(long n, const ScanOptions& opt) {
  const FeketeDecomposition d = decompose(n);
  const ValuePrediction pred = value_predictions(d.p, d.q);
  ScanRecord r;
  r.n = n;
  r.p = d.p;
  r.q = d.q;
  r.S_n = d.S_n;
  r.deg_f = d.f_n.degree();
  const CoefficientStats stats = coefficient_stats(d.f_n);
  r.f_coeff_max = stats.max_abs;
  r.middle_coeff = stats.middle;
  r.f_at_1 = evaluate(d.f_n, BigInt(1));
  r.f_at_minus1 = evaluate(d.f_n, BigInt(-1));
  r.disc_class = pred.disc_class;
  r.disc_square = reciprocal_disc_is_square(d.f_n);

  SearchConfig cfg;
  cfg.prime_bound = opt.prime_bound;
  r.g_irreducible = certify_g_irreducible(d.g_n, cfg);
  if (const Certificate* gc = found(r.g_irreducible)) {
    r.f_irreducible = certify_f_irreducible(d, gc, cfg);
  } else {
    r.f_irreducible = NotFound{"f irreducible", cfg.prime_bound, "no certificate for g"};
  }
  r.galois_g = certify_galois_g(d.g_n, cfg);
  if (const Certificate* gc = found(r.galois_g)) {
    r.galois_f = certify_galois_f(d, gc, cfg);
  } else {
    r.galois_f = NotFound{"galois f", cfg.prime_bound, "no symmetric-group certificate for g"};
  }

  const SeparabilityReport sep = separability_analysis(d.p, d.q);
  r.separable = sep.separable;
  for (const auto& f : sep.repeated_factors) r.repeated_factors.push_back({f.poly.coeffs(), f.multiplicity});

  r.unit_circle_bound = phi1(n);
  try {
    r.unit_circle_count = unit_circle_root_count(n).count;
  } catch (const NotSquarefreeTrace&) {
    r.unit_circle_count.reset();
  }
  r.equidistribution_anomalies = equidistribution_anomalies(n, opt.dmax);
  return r;
}

json to_json(const ScanRecord& r) {
  json j;
  j["v"] = 1;
  j["n"] = r.n;
  j["p"] = r.p;
  j["q"] = r.q;
  j["S_n"] = r.S_n;
  j["deg_f"] = r.deg_f;
  j["f_coeff_max"] = big_to_json(r.f_coeff_max);
  j["middle_coeff"] = big_to_json(r.middle_coeff);
  j["f_at_1"] = big_to_json(r.f_at_1);
  j["f_at_minus1"] = big_to_json(r.f_at_minus1);
  j["disc_class"] = r.disc_class;
  j["disc_square"] = r.disc_square;
  json certs;
  certs["g_irreducible"] = to_json(r.g_irreducible);
  certs["f_irreducible"] = to_json(r.f_irreducible);
  certs["galois_g"] = to_json(r.galois_g);
  certs["galois_f"] = to_json(r.galois_f);
  j["certificates"] = std::move(certs);
  json sep;
  sep["separable"] = r.separable;
  json rep = json::array();
  for (const auto& f : r.repeated_factors) {
    json fj;
    fj["factor"] = f.coeffs;
    fj["mult"] = f.multiplicity;
    rep.push_back(std::move(fj));
  }
  sep["repeated"] = std::move(rep);
  j["separability"] = std::move(sep);
  json uc;
  uc["count"] = r.unit_circle_count ? json(*r.unit_circle_count) : json(nullptr);
  uc["bound"] = r.unit_circle_bound;
  j["unit_circle"] = std::move(uc);
  j["equidistribution_anomalies"] = r.equidistribution_anomalies;
  return j;
}

ScanRecord record_from_json(const json& j) {
  try {
    if (!j.is_object() || j.at("v").get<int>() != 1) throw InvalidArgument("unsupported record version");
    ScanRecord r;
    r.n = j.at("n").get<long>();
    r.p = j.at("p").get<long>();
    r.q = j.at("q").get<long>();
    r.S_n = j.at("S_n").get<std::vector<long>>();
    r.deg_f = j.at("deg_f").get<long>();
    r.f_coeff_max = big_from_json(j.at("f_coeff_max"));
    r.middle_coeff = big_from_json(j.at("middle_coeff"));
    r.f_at_1 = big_from_json(j.at("f_at_1"));
    r.f_at_minus1 = big_from_json(j.at("f_at_minus1"));
    r.disc_class = j.at("disc_class").get<long>();
    r.disc_square = j.at("disc_square").get<bool>();
    const json& c = j.at("certificates");
    r.g_irreducible = result_from_json(c.at("g_irreducible"));
    r.f_irreducible = result_from_json(c.at("f_irreducible"));
    r.galois_g = result_from_json(c.at("galois_g"));
    r.galois_f = result_from_json(c.at("galois_f"));
    const json& sep = j.at("separability");
    r.separable = sep.at("separable").get<bool>();
    for (const auto& fj : sep.at("repeated"))
      r.repeated_factors.push_back({fj.at("factor").get<std::vector<std::uint64_t>>(), fj.at("mult").get<unsigned>()});
    const json& uc = j.at("unit_circle");
    if (!uc.at("count").is_null()) r.unit_circle_count = uc.at("count").get<long>();
    r.unit_circle_bound = uc.at("bound").get<long>();
    r.equidistribution_anomalies = j.at("equidistribution_anomalies").get<std::vector<long>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed record: ") + e.what());
  }
}

bool verify_record(const ScanRecord& r) {
  FeketeDecomposition d;
  try {
    d = decompose(r.n);
  } catch (const std::exception&) {
    return false;
  }
  if (d.p != r.p || d.q != r.q || d.f_n.degree() != r.deg_f) return false;
  const VerifyContext ctx{d.f_n, d.g_n};
  for (const CertifyResult* res : {&r.g_irreducible, &r.f_irreducible, &r.galois_g, &r.galois_f}) {
    if (const Certificate* c = found(*res); c && !verify_certificate(*c, ctx)) return false;
  }
  return true;
}

namespace {

std::map<long, std::string> read_existing(const std::string& path) {
  std::map<long, std::string> lines;
  std::ifstream in(path);
  if (!in) return lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      const ScanRecord r = record_from_json(j);
      lines.emplace(r.n, line);
    } catch (const std::exception&) {
      // An unreadable line is recomputed.
    }
  }
  return lines;
}

}  // namespace

ScanSummary run_scan(long lo, long hi, const std::string& out_path, const ScanOptions& opt) {
  if (lo > hi) throw InvalidArgument("empty range " + std::to_string(lo) + ".." + std::to_string(hi));
  ScanSummary summary;
  std::map<long, std::string> lines = read_existing(out_path);
  std::vector<long> todo;
  for (long n : semiprimes_in_range(lo, hi)) {
    if (lines.count(n)) {
      ++summary.reused;
    } else {
      todo.push_back(n);
    }
  }

  std::mutex mutex;
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < todo.size(); i = next++) {
      const long n = todo[i];
      try {
        std::string line = to_json(compute_record(n, opt)).dump();
        std::lock_guard<std::mutex> lock(mutex);
        lines.emplace(n, std::move(line));
        ++summary.written;
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(mutex);
        summary.errors.emplace_back(n, e.what());
      }
    }
  };
  const unsigned nthreads = std::max(1u, opt.threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(summary.errors.begin(), summary.errors.end());

  const std::string tmp = out_path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidArgument("cannot write " + tmp);
    for (const auto& [n, line] : lines) out << line << '\n';
    if (!out) throw InvalidArgument("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, out_path);
  return summary;
}

namespace {

std::string join(const std::set<std::string>& items, const std::string& sep) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

struct ValueRow {
  std::size_t count = 0;
  std::set<std::string> middle;
  std::set<std::string> at1;
  std::set<std::string> atm1;
};

}  // namespace

ReportResult build_report(std::istream& in, ReportFormat fmt) {
  ReportResult res;
  std::vector<ScanRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      ScanRecord r = record_from_json(json::parse(line));
      if (!verify_record(r)) throw InvalidArgument("certificate re-verification failed");
      records.push_back(std::move(r));
    } catch (const std::exception& e) {
      res.warnings.push_back("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  std::sort(records.begin(), records.end(), [](const ScanRecord& a, const ScanRecord& b) { return a.n < b.n; });

  std::map<long, ValueRow> by_residue;
  const char* cert_names[] = {"g_irreducible", "f_irreducible", "galois_g", "galois_f"};
  std::size_t cert_found[4] = {0, 0, 0, 0};
  std::vector<std::pair<long, long>> anomalies;
  for (const auto& r : records) {
    if (r.q == 3) {
      ValueRow& row = by_residue[r.p % 24];
      ++row.count;
      row.middle.insert(r.middle_coeff.get_str());
      row.at1.insert(r.f_at_1.get_str());
      row.atm1.insert(r.f_at_minus1.get_str());
    }
    const CertifyResult* certs[] = {&r.g_irreducible, &r.f_irreducible, &r.galois_g, &r.galois_f};
    for (int i = 0; i < 4; ++i)
      if (found(*certs[i])) ++cert_found[i];
    for (long d : r.equidistribution_anomalies) anomalies.emplace_back(r.n, d);
  }

  std::ostringstream os;
  if (fmt == ReportFormat::Csv) {
    os << "table,key,count,a,b\n";
    for (const auto& [res24, row] : by_residue)
      os << "middle_by_p_mod_24," << res24 << "," << row.count << "," << join(row.middle, ";") << ",\n";
    for (const auto& [res24, row] : by_residue)
      os << "values_by_p_mod_24," << res24 << "," << row.count << "," << join(row.at1, ";") << ","
         << join(row.atm1, ";") << "\n";
    for (int i = 0; i < 4; ++i)
      os << "certificates," << cert_names[i] << "," << records.size() << "," << cert_found[i] << ",\n";
    for (auto [n, d] : anomalies) os << "anomalies," << n << ",1," << d << ",\n";
  } else {
    os << "## f_3p middle coefficient by p mod 24\n\n| p mod 24 | records | middle |\n|---|---|---|\n";
    for (const auto& [res24, row] : by_residue)
      os << "| " << res24 << " | " << row.count << " | " << join(row.middle, ", ") << " |\n";
    os << "\n## f_3p(1) and f_3p(-1) by p mod 24\n\n| p mod 24 | records | f(1) | f(-1) |\n|---|---|---|---|\n";
    for (const auto& [res24, row] : by_residue)
      os << "| " << res24 << " | " << row.count << " | " << join(row.at1, ", ") << " | " << join(row.atm1, ", ")
         << " |\n";
    os << "\n## Certificates\n\n| certificate | found | records |\n|---|---|---|\n";
    for (int i = 0; i < 4; ++i) os << "| " << cert_names[i] << " | " << cert_found[i] << " | " << records.size() << " |\n";
    os << "\n## Equidistribution anomalies\n\n";
    if (anomalies.empty()) {
      os << "none\n";
    } else {
      os << "| n | d |\n|---|---|\n";
      for (auto [n, d] : anomalies) os << "| " << n << " | " << d << " |\n";
    }
  }
  res.text = os.str();
  return res;
}

}  // namespace fekete
