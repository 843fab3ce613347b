// fekete: build, reduce, certify, scan and report on Fekete polynomials.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fekete/certify.hpp"
#include "fekete/cyclotomic.hpp"
#include "fekete/errors.hpp"
#include "fekete/fekete.hpp"
#include "fekete/scan.hpp"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace fekete;

json coeffs_json(const IntPoly& f) {
  json a = json::array();
  for (const auto& c : f.coeffs()) a.push_back(big_to_json(c));
  return a;
}

std::string cert_line(const CertifyResult& r) {
  if (const auto* nf = std::get_if<NotFound>(&r))
    return "NotFound (" + nf->what + ", primes <= " + std::to_string(nf->prime_bound) + "; " + nf->diagnostics + ")";
  const auto& c = std::get<Certificate>(r);
  std::ostringstream os;
  os << to_string(c.kind);
  if (c.aux.triple) {
    const auto& t = *c.aux.triple;
    os << " triple (" << t[0] << "," << t[1] << "," << t[2] << ")";
  }
  for (const auto& w : c.witnesses) os << " prime " << w.prime << " shape " << shape_to_string(w.shape);
  if (c.aux.fast_path) os << " fast path " << *c.aux.fast_path;
  if (c.aux.odd_degree) os << " odd degree " << *c.aux.odd_degree;
  if (c.aux.g_prime) os << " (g irreducible mod " << *c.aux.g_prime << ")";
  if (c.aux.disc_square) os << " disc square " << (*c.aux.disc_square ? "yes" : "no");
  return os.str();
}

std::pair<long, long> parse_range(const std::string& s) {
  const auto pos = s.find("..");
  if (pos == std::string::npos) throw InvalidArgument("range must look like A..B, got " + s);
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = s.substr(0, pos), b = s.substr(pos + 2);
    long lo = std::stol(a, &used_a);
    long hi = std::stol(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(s);
    if (lo > hi) throw InvalidArgument("range " + s + " is empty");
    return {lo, hi};
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const PreconditionError*>(&e)) throw;
    throw InvalidArgument("range must look like A..B, got " + s);
  }
}

int cmd_build(long n, long dmax, bool as_json) {
  if (n < 2) throw InvalidArgument("build needs n >= 2");
  if (dmax <= 0) dmax = 2 * n;
  const IntPoly F = build_F(n);
  const std::vector<long> factors = verified_cyclotomic_factors(n, dmax);
  std::vector<long> support;
  for (std::size_t i = 0; i < F.coeffs().size(); ++i)
    if (F.coeffs()[i] != 0) support.push_back(static_cast<long>(i));
  if (as_json) {
    json j;
    j["n"] = n;
    j["degree"] = F.degree();
    j["support"] = support;
    j["dmax"] = dmax;
    j["cyclotomic_factors"] = factors;
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "F_" << n << ": degree " << F.degree() << "\nsupport:";
  for (long e : support) std::cout << " " << e;
  std::cout << "\ncyclotomic factors (d <= " << dmax << "):";
  for (long d : factors) std::cout << " Phi_" << d;
  std::cout << "\n";
  return 0;
}

int cmd_reduce(long n, bool as_json) {
  const FeketeDecomposition d = decompose(n);
  const ValuePrediction pred = value_predictions(d.p, d.q);
  const std::vector<std::string> mismatches = prediction_mismatches(pred, d);
  if (as_json) {
    json j;
    j["n"] = n;
    j["p"] = d.p;
    j["q"] = d.q;
    j["S_n"] = d.S_n;
    j["f"] = coeffs_json(d.f_n);
    j["g"] = coeffs_json(d.g_n);
    json pj;
    pj["D1"] = pred.D1;
    pj["D2"] = pred.D2;
    pj["D3"] = pred.D3;
    pj["D4"] = pred.D4;
    pj["deg_f"] = pred.deg_f;
    pj["f_at_1"] = pred.f_at_1.get_str();
    pj["f_at_minus1"] = pred.f_at_minus1.get_str();
    pj["disc_class"] = pred.disc_class;
    j["prediction"] = std::move(pj);
    j["prediction_mismatches"] = mismatches;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "n = " << n << " = " << d.p << " * " << d.q << "\nS_n:";
    for (long e : d.S_n) std::cout << " " << e;
    std::cout << "\ndeg f = " << d.f_n.degree() << "\nf = " << d.f_n << "\ng = " << d.g_n.to_string('y') << "\n";
    std::cout << "predicted: deg " << pred.deg_f << ", f(1) = " << pred.f_at_1.get_str()
              << ", f(-1) = " << pred.f_at_minus1.get_str() << ", disc class " << pred.disc_class << "\n";
    if (mismatches.empty()) {
      std::cout << "predictions: match\n";
    } else {
      for (const auto& m : mismatches) std::cout << "mismatch: " << m << "\n";
    }
  }
  return mismatches.empty() ? 0 : 2;
}

int cmd_certify(long n, const std::string& what, std::uint64_t prime_bound, bool as_json) {
  const FeketeDecomposition d = decompose(n);
  SearchConfig cfg;
  cfg.prime_bound = prime_bound;
  json j;
  j["n"] = n;
  if (what == "irred") {
    const CertifyResult g = certify_g_irreducible(d.g_n, cfg);
    const auto* gc = std::get_if<Certificate>(&g);
    j["g_irreducible"] = to_json(g);
    if (gc) {
      const CertifyResult f = certify_f_irreducible(d, gc, cfg);
      SearchConfig odd = cfg;
      odd.fast_paths = false;
      const CertifyResult f_odd = certify_f_irreducible(d, gc, odd);
      j["f_irreducible"] = to_json(f);
      j["f_odd_count"] = to_json(f_odd);
      if (!as_json) {
        std::cout << "g_" << n << ": " << cert_line(g) << "\n";
        std::cout << "f_" << n << ": " << cert_line(f) << "\n";
        std::cout << "f_" << n << " odd-count search: " << cert_line(f_odd) << "\n";
      }
    } else if (!as_json) {
      std::cout << "g_" << n << ": " << cert_line(g) << "\n";
    }
  } else {
    const CertifyResult g = certify_galois_g(d.g_n, cfg);
    j["galois_g"] = to_json(g);
    if (!as_json) std::cout << "g_" << n << ": " << cert_line(g) << "\n";
    if (const auto* gc = std::get_if<Certificate>(&g)) {
      const CertifyResult f = certify_galois_f(d, gc, cfg);
      j["galois_f"] = to_json(f);
      if (!as_json) std::cout << "f_" << n << ": " << cert_line(f) << "\n";
    }
  }
  if (as_json) std::cout << j.dump() << "\n";
  return 0;
}

int cmd_scan(const std::string& range, const std::string& out, const ScanOptions& opt) {
  auto [lo, hi] = parse_range(range);
  if (out.empty()) throw InvalidArgument("scan needs --out");
  const ScanSummary s = run_scan(lo, hi, out, opt);
  std::cerr << "scan " << lo << ".." << hi << ": " << s.written << " computed, " << s.reused << " reused, "
            << s.errors.size() << " errors\n";
  for (const auto& [n, msg] : s.errors) std::cerr << "  n = " << n << ": " << msg << "\n";
  return 0;
}

int cmd_report(const std::string& in_path, const std::string& format, const std::string& out) {
  std::ifstream in(in_path);
  if (!in) throw InvalidArgument("cannot read " + in_path);
  const ReportResult r = build_report(in, format == "csv" ? ReportFormat::Csv : ReportFormat::Markdown);
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  if (out.empty()) {
    std::cout << r.text;
  } else {
    std::ofstream o(out, std::ios::binary | std::ios::trunc);
    if (!o) throw InvalidArgument("cannot write " + out);
    o << r.text;
  }
  return r.warnings.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fekete polynomials of principal characters: construction and certificates"};
  app.require_subcommand(1);

  bool as_json = false;
  long n = 0;
  long dmax = 0;
  std::uint64_t prime_bound = 5000;
  std::string what = "irred";
  std::string range, out, in_path, format = "md";
  unsigned threads = 1;

  auto* build = app.add_subcommand("build", "F_n and its cyclotomic factors");
  build->add_option("n", n, "n >= 2")->required();
  build->add_option("--dmax", dmax, "largest d tested (default 2n)");
  build->add_flag("--json", as_json);

  auto* reduce = app.add_subcommand("reduce", "f_n, g_n and value predictions for n = pq");
  reduce->add_option("n", n)->required();
  reduce->add_flag("--json", as_json);

  auto* certify = app.add_subcommand("certify", "irreducibility or Galois certificates for n = pq");
  certify->add_option("n", n)->required();
  certify->add_option("--what", what)->check(CLI::IsMember({"irred", "galois"}));
  certify->add_option("--prime-bound", prime_bound)->check(CLI::Range(2, 1 << 30));
  certify->add_flag("--json", as_json);

  ScanOptions opt;
  auto* scan = app.add_subcommand("scan", "JSON-lines records for every semiprime in a range");
  scan->add_option("--range", range, "A..B")->required();
  scan->add_option("--out", out, "output path")->required();
  scan->add_option("--prime-bound", opt.prime_bound)->check(CLI::Range(2, 1 << 30));
  scan->add_option("--dmax", opt.dmax, "largest d in the equidistribution check")->check(CLI::PositiveNumber);
  scan->add_option("--threads", opt.threads)->check(CLI::Range(1, 256));

  auto* report = app.add_subcommand("report", "aggregate tables from a scan file");
  report->add_option("input", in_path)->required();
  report->add_option("--format", format)->check(CLI::IsMember({"md", "csv"}));
  report->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*build) return cmd_build(n, dmax, as_json);
    if (*reduce) return cmd_reduce(n, as_json);
    if (*certify) return cmd_certify(n, what, prime_bound, as_json);
    if (*scan) return cmd_scan(range, out, opt);
    if (*report) return cmd_report(in_path, format, out);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
