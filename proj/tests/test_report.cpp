#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "capitula/report.hpp"

using namespace capitula;

TEST_SUITE("report") {

TEST_CASE("json output is deterministic and fixes the key order") {
  auto r = build_field_report(validate_pair(17, 41));
  std::string a = render_json(r);
  std::string b = render_json(build_field_report(validate_pair(17, 41)));
  CHECK(a == b);

  auto j = nlohmann::ordered_json::parse(a);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"p1", "p2", "d", "eps_d", "units",
                                         "Q_k", "q_K3", "rank", "am_size",
                                         "ams_size", "ams", "kernels",
                                         "type_222", "main_theorem"});
  CHECK(j["d"] == "1394");
  CHECK(j["eps_d"]["x"] == "12545");
  CHECK(j["eps_d"]["y"] == "336");
  CHECK(j["Q_k"] == 2);
  CHECK(j["rank"] == 4);
  CHECK(j["am_size"] == 16);
  CHECK(j["main_theorem"] == "pass");
  CHECK(j["type_222"] == false);
  CHECK(j["kernels"]["K1"]["size"] == 8);
  CHECK(j["units"]["p1p2"]["norm"] == -1);
}

TEST_CASE("class words render with the star convention") {
  auto r = build_field_report(validate_pair(5, 29));
  auto j = nlohmann::ordered_json::parse(render_json(r));
  CHECK(j["kernels"]["K2"]["generators"] ==
        nlohmann::ordered_json::array({"H0*H1", "H0*H2"}));
  CHECK(j["type_222"] == true);
}

TEST_CASE("text rendering carries the headline facts") {
  auto r = build_field_report(validate_pair(5, 29));
  std::string text = render_text(r);
  CHECK(text.find("k = Q(sqrt(290), i)") != std::string::npos);
  CHECK(text.find("17+1*sqrt(290)") != std::string::npos);
  CHECK(text.find("type (2,2,2): yes") != std::string::npos);
  CHECK(text.find("main theorem checks: pass") != std::string::npos);
  CHECK(text.find("< H0*H1, H0*H2 >") != std::string::npos);
}

TEST_CASE("csv row shape") {
  auto r = build_field_report(validate_pair(5, 29));
  std::string row = render_csv_row(r);
  CHECK(row.find("5,29,290,17,1,1,-1,1,1,3,8,8") == 0);
  CHECK(row.find("\"H0*H1+H0*H2\"") != std::string::npos);
  std::string header = csv_header();
  CHECK(std::count(header.begin(), header.end(), ',') ==
        std::count(row.begin(), row.end(), ','));
}

TEST_CASE("table ids and the unknown id error") {
  CHECK(table_ids().size() == 5);
  CHECK_THROWS_AS(render_table("nope"), std::domain_error);
}

TEST_CASE("tables mention the expected worked values") {
  std::string ex48 = render_table("ex48");
  CHECK(ex48.find("1394=2.41.17") != std::string::npos);
  CHECK(ex48.find("12545+336*sqrt(1394)") != std::string::npos);
  CHECK(ex48.find("161603+2814*sqrt(3298)") != std::string::npos);
  CHECK(ex48.find("12544 (square)") != std::string::npos);

  std::string k3q = render_table("k3-q");
  CHECK(k3q.find("2146=2.29.37") != std::string::npos);

  std::string genus = render_table("genus");
  CHECK(genus.find("890=2.5.89") != std::string::npos);
}

TEST_CASE("scan on a tiny range") {
  ScanOptions opts;
  opts.max_prime = 30;
  opts.jobs = 2;
  std::ostringstream lines;
  ScanSummary sum = run_scan(opts, lines);
  // primes 5, 13, 17, 29: 12 ordered pairs
  CHECK(sum.pairs == 12);
  CHECK(sum.failures == 0);
  std::istringstream in(lines.str());
  std::string line;
  size_t n = 0;
  while (std::getline(in, line)) {
    auto j = nlohmann::ordered_json::parse(line);
    CHECK(j["main_theorem"] == "pass");
    ++n;
  }
  CHECK(n == sum.pairs);
}

TEST_CASE("scan below the smallest prime yields nothing") {
  ScanOptions opts;
  opts.max_prime = 4;
  std::ostringstream lines;
  ScanSummary sum = run_scan(opts, lines);
  CHECK(sum.pairs == 0);
  CHECK(lines.str().empty());
}

TEST_CASE("scan filter 222") {
  ScanOptions opts;
  opts.max_prime = 50;
  opts.filter_222 = true;
  std::ostringstream lines;
  ScanSummary sum = run_scan(opts, lines);
  CHECK(sum.pairs > 0);
  CHECK(sum.type222 == sum.pairs);
  std::istringstream in(lines.str());
  std::string line;
  while (std::getline(in, line)) {
    auto j = nlohmann::ordered_json::parse(line);
    CHECK(j["type_222"] == true);
  }
}

TEST_CASE("scan order is deterministic regardless of jobs") {
  ScanOptions one;
  one.max_prime = 40;
  one.jobs = 1;
  ScanOptions many = one;
  many.jobs = 4;
  std::ostringstream a, b;
  run_scan(one, a);
  run_scan(many, b);
  CHECK(a.str() == b.str());
}

}  // TEST_SUITE
