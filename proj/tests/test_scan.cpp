#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fekete/errors.hpp"
#include "fekete/scan.hpp"

using namespace fekete;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("fekete_test_" + name)).string();
}

}  // namespace

TEST_CASE("semiprime ranges") {
  CHECK(semiprimes_in_range(1, 40) == std::vector<long>{15, 21, 33, 35, 39});
  CHECK(semiprimes_in_range(40, 41).empty());
}

TEST_CASE("record json round trip") {
  ScanOptions opt;
  opt.dmax = 40;
  for (long n : {15L, 21L, 35L, 57L}) {
    const ScanRecord r = compute_record(n, opt);
    const auto j = to_json(r);
    CHECK(j.begin().key() == "v");
    const ScanRecord back = record_from_json(j);
    CHECK(to_json(back).dump() == j.dump());
    CHECK(verify_record(back));
  }
  const ScanRecord r15 = compute_record(15, opt);
  CHECK(r15.deg_f == 6);
  CHECK(r15.unit_circle_count == 11);
  CHECK(r15.unit_circle_bound == 3);
  CHECK(r15.equidistribution_anomalies.empty());
  CHECK(r15.separable);
  CHECK_THROWS_AS(record_from_json(nlohmann::ordered_json::parse(R"({"v":2})")), InvalidArgument);
  CHECK_THROWS_AS(record_from_json(nlohmann::ordered_json::parse(R"({"v":1,"n":15})")), InvalidArgument);
}

TEST_CASE("tampered record fails verification") {
  ScanRecord r = compute_record(21, {5000, 10, 1});
  auto& c = std::get<Certificate>(r.galois_g);
  c.witnesses[0].prime = 3;
  CHECK_FALSE(verify_record(r));
}

TEST_CASE("scan is deterministic and resumable") {
  const std::string a = temp_path("a.jsonl");
  const std::string b = temp_path("b.jsonl");
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  ScanOptions opt;
  opt.dmax = 30;
  const ScanSummary s1 = run_scan(15, 60, a, opt);
  CHECK(s1.written == 8);
  CHECK(s1.reused == 0);
  CHECK(s1.errors.empty());
  opt.threads = 3;
  run_scan(15, 60, b, opt);
  CHECK(slurp(a) == slurp(b));

  // Drop a line and append garbage; the rerun restores the same bytes.
  const std::string full = slurp(a);
  std::istringstream lines(full);
  std::string first, rest, line;
  std::getline(lines, first);
  while (std::getline(lines, line)) rest += line + "\n";
  {
    std::ofstream out(b, std::ios::binary | std::ios::trunc);
    out << rest << "{not json\n";
  }
  const ScanSummary s2 = run_scan(15, 60, b, opt);
  CHECK(s2.written == 1);
  CHECK(s2.reused == 7);
  CHECK(slurp(b) == full);
  const ScanSummary s3 = run_scan(15, 60, b, opt);
  CHECK(s3.written == 0);
  CHECK(slurp(b) == full);
  CHECK_THROWS_AS(run_scan(300, 9, b, opt), InvalidArgument);

  std::ifstream in(a);
  const ReportResult rep = build_report(in, ReportFormat::Markdown);
  CHECK(rep.warnings.empty());
  CHECK(rep.text.find("| 5 | 1 | 1 |") != std::string::npos);
  CHECK(rep.text.find("none") != std::string::npos);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("report edge cases") {
  std::istringstream empty("");
  const ReportResult r = build_report(empty, ReportFormat::Markdown);
  CHECK(r.warnings.empty());
  CHECK(r.text.find("none") != std::string::npos);

  std::istringstream bad("{\"v\":1}\nnot json\n");
  const ReportResult rb = build_report(bad, ReportFormat::Csv);
  CHECK(rb.warnings.size() == 2);
  CHECK(rb.text.rfind("table,key,count,a,b\n", 0) == 0);
}
