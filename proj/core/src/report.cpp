#include "capitula/report.hpp"

#include <atomic>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace capitula {

using ordered_json = nlohmann::ordered_json;

FieldReport build_field_report(const PrimePair& pair) {
  FieldReport r;
  r.ctx = make_context(pair);
  r.counts = ambiguous_counts(r.ctx);
  r.ams = ams_presentation(r.ctx);
  r.ker_K1 = kernel_K1(r.ctx);
  r.ker_K2 = kernel_K2(r.ctx);
  r.ker_K3 = kernel_K3(r.ctx);
  r.ker_genus = genus_kernel(r.ctx);
  r.type222 = application_222(r.ctx);
  r.verification = verify_main_theorem(r.ctx);
  return r;
}

namespace {

ordered_json unit_json(const QuadUnit& u) {
  ordered_json j;
  j["m"] = u.m.get_str();
  j["x"] = u.x.get_str();
  j["y"] = u.y.get_str();
  j["den"] = u.den;
  j["norm"] = u.norm_sign;
  return j;
}

ordered_json words_json(const std::vector<ClassWord>& ws) {
  ordered_json a = ordered_json::array();
  for (const auto& w : ws) a.push_back(w.str());
  return a;
}

ordered_json kernel_json(const KernelReport& k) {
  ordered_json j;
  j["size"] = k.size;
  j["generators"] = words_json(k.generators);
  if (k.size_is_lower_bound) j["size_is_lower_bound"] = true;
  return j;
}

std::string unit_text(const QuadUnit& u) {
  std::string s = u.x.get_str() + "+" + u.y.get_str() + "*sqrt(" + u.m.get_str() + ")";
  if (u.den == 2) s = "(" + s + ")/2";
  return s;
}

std::string join_words(const std::vector<ClassWord>& ws, const char* sep) {
  std::string s;
  for (const auto& w : ws) {
    if (!s.empty()) s += sep;
    s += w.str();
  }
  return s.empty() ? "-" : s;
}

}  // namespace

std::string render_json(const FieldReport& r) {
  const FieldContext& c = r.ctx;
  ordered_json j;
  j["p1"] = c.pair.p1.get_str();
  j["p2"] = c.pair.p2.get_str();
  j["d"] = c.pair.d.get_str();
  if (c.pair.probable) j["probable_primality"] = true;
  {
    ordered_json e;
    e["x"] = c.eps_d.x.get_str();
    e["y"] = c.eps_d.y.get_str();
    e["den"] = c.eps_d.den;
    e["norm"] = c.eps_d.norm_sign;
    j["eps_d"] = e;
  }
  {
    ordered_json u;
    u["p1"] = unit_json(c.eps_p1);
    u["p2"] = unit_json(c.eps_p2);
    u["2"] = unit_json(c.eps_2);
    u["2p1"] = unit_json(c.eps_2p1);
    u["2p2"] = unit_json(c.eps_2p2);
    u["p1p2"] = unit_json(c.eps_p1p2);
    j["units"] = u;
  }
  j["Q_k"] = c.q_k;
  j["q_K3"] = r.ker_K3.tower_case.q_k3;
  j["rank"] = r.counts.rank;
  j["am_size"] = r.counts.am_size;
  j["ams_size"] = r.counts.ams_size;
  {
    ordered_json a;
    a["generators"] = words_json(r.ams.generators);
    a["relations"] = words_json(r.ams.relations);
    j["ams"] = a;
  }
  {
    ordered_json k;
    k["K1"] = kernel_json(r.ker_K1);
    k["K2"] = kernel_json(r.ker_K2);
    k["K3"] = kernel_json(r.ker_K3);
    k["genus"] = kernel_json(r.ker_genus);
    j["kernels"] = k;
  }
  j["type_222"] = r.type222.has_value();
  j["main_theorem"] = r.verification.pass ? "pass" : "fail";
  return j.dump();
}

std::string render_text(const FieldReport& r) {
  const FieldContext& c = r.ctx;
  std::ostringstream os;
  os << "k = Q(sqrt(" << c.pair.d << "), i)   d = 2*" << c.pair.p1 << "*"
     << c.pair.p2 << "\n";
  if (c.pair.probable) os << "note: primality of an input is probabilistic\n";
  os << "\nfundamental units\n";
  auto line = [&os](const std::string& label, const QuadUnit& u) {
    os << "  " << std::setw(10) << std::left << label << unit_text(u)
       << "   N = " << (u.norm_sign > 0 ? "+1" : "-1") << "\n";
  };
  line("eps_d", c.eps_d);
  line("eps_p1", c.eps_p1);
  line("eps_p2", c.eps_p2);
  line("eps_2", c.eps_2);
  line("eps_2p1", c.eps_2p1);
  line("eps_2p2", c.eps_2p2);
  line("eps_p1p2", c.eps_p1p2);
  os << "\nindices: Q_k = " << c.q_k << ", q(K3+/Q) = " << r.ker_K3.tower_case.q_k3
     << ", rank C_k,2 = " << r.counts.rank << "\n";
  os << "ambiguous classes: |Am| = " << r.counts.am_size
     << ", |Am_s| = " << r.counts.ams_size << "\n";
  os << "Am_s = < " << join_words(r.ams.generators, ", ") << " >  relations: "
     << join_words(r.ams.relations, ", ") << "\n";
  os << "\ncapitulation kernels\n";
  auto ker = [&os](const char* label, const KernelReport& k) {
    os << "  " << std::setw(6) << std::left << label << "size "
       << (k.size_is_lower_bound ? ">= " : "") << k.size << "  < "
       << join_words(k.generators, ", ") << " >\n";
  };
  ker("K1", r.ker_K1);
  ker("K2", r.ker_K2);
  ker("K3", r.ker_K3);
  ker("genus", r.ker_genus);
  os << "\ntype (2,2,2): " << (r.type222 ? "yes" : "no") << "\n";
  os << "main theorem checks: " << (r.verification.pass ? "pass" : "FAIL") << "\n";
  if (!r.verification.pass)
    for (const auto& chk : r.verification.checks)
      if (!chk.pass) os << "  failed: " << chk.name << " " << chk.detail << "\n";
  return os.str();
}

std::string csv_header() {
  return "p1,p2,d,eps_x,eps_y,eps_den,eps_norm,Q_k,q_K3,rank,am_size,ams_size,"
         "ams_generators,ams_relations,K1_size,K1_generators,K2_size,"
         "K2_generators,K3_size,K3_generators,genus_size,genus_generators,"
         "type_222,main_theorem";
}

std::string render_csv_row(const FieldReport& r) {
  const FieldContext& c = r.ctx;
  std::ostringstream os;
  os << c.pair.p1 << ',' << c.pair.p2 << ',' << c.pair.d << ','
     << c.eps_d.x << ',' << c.eps_d.y << ',' << c.eps_d.den << ','
     << c.eps_d.norm_sign << ',' << c.q_k << ','
     << r.ker_K3.tower_case.q_k3 << ',' << r.counts.rank << ','
     << r.counts.am_size << ',' << r.counts.ams_size << ','
     << '"' << join_words(r.ams.generators, "+") << "\",\""
     << join_words(r.ams.relations, "+") << "\","
     << r.ker_K1.size << ",\"" << join_words(r.ker_K1.generators, "+") << "\","
     << r.ker_K2.size << ",\"" << join_words(r.ker_K2.generators, "+") << "\","
     << r.ker_K3.size << ",\"" << join_words(r.ker_K3.generators, "+") << "\","
     << r.ker_genus.size << ",\"" << join_words(r.ker_genus.generators, "+") << "\","
     << (r.type222 ? 1 : 0) << ',' << (r.verification.pass ? "pass" : "fail");
  return os.str();
}

namespace {

struct TableRow {
  long p1;
  long p2;
};

std::string fact(const FieldContext& c) {
  return c.pair.d.get_str() + "=2." + c.pair.p1.get_str() + "." +
         c.pair.p2.get_str();
}

std::string sq_mark(const Int& n) {
  return n.get_str() + (is_perfect_square(n) ? " (square)" : "");
}

std::string norm_str(int n) { return n > 0 ? "+1" : "-1"; }

void render_rows(std::ostringstream& os, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> w(header.size());
  for (size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
  for (const auto& row : rows)
    for (size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], row[i].size());
  auto emit = [&](const std::vector<std::string>& row) {
    for (size_t i = 0; i < row.size(); ++i)
      os << (i ? "  " : "") << std::setw(static_cast<int>(w[i])) << std::left
         << row[i];
    os << "\n";
  };
  emit(header);
  emit([&] {
    std::vector<std::string> sep;
    for (size_t width : w) sep.push_back(std::string(width, '-'));
    return sep;
  }());
  for (const auto& row : rows) emit(row);
}

std::string table_ex48() {
  std::ostringstream os;
  os << "unit data for k = Q(sqrt(2 p1 p2), i): squareness of x +- 1 and the\n"
        "principality of H1*H2 (class coordinates are external software output)\n\n";
  const std::vector<TableRow> part1 = {{41, 17}, {97, 17}, {449, 17}};
  const std::vector<TableRow> part2 = {{5, 89}, {53, 17}, {37, 73}};
  for (int part = 0; part < 2; ++part) {
    os << (part == 0 ? "(1) x +- 1 is a square\n" : "\n(2) x + 1 and x - 1 are not squares\n");
    std::vector<std::vector<std::string>> rows;
    for (const TableRow& tr : (part == 0 ? part1 : part2)) {
      FieldContext c = make_context(validate_pair(tr.p1, tr.p2));
      rows.push_back({fact(c), unit_text(c.eps_d), sq_mark(c.eps_d.x + 1),
                      sq_mark(c.eps_d.x - 1),
                      principal_prime_square(c.pair.p1, c) ? "principal" : "not principal",
                      "external"});
    }
    render_rows(os, {"d = 2.p1.p2", "eps_d", "x+1", "x-1", "H1*H2 in k", "coords"},
                rows);
  }
  return os.str();
}

std::string table_ex49() {
  std::ostringstream os;
  os << "norm signs of eps_2p2 and eps_d, squareness of x +- 1, and the\n"
        "principality of H1*H2 with the K1 capitulation kernel\n\n";
  struct Block {
    const char* title;
    std::vector<TableRow> rows;
  };
  const Block blocks[] = {
      {"(1) N(eps2) = N(eps3) = -1 or N(eps2) = -N(eps3) = 1",
       {{5, 29}, {13, 17}, {29, 13}, {41, 13}}},
      {"(2)(i) N(eps3) = -N(eps2) = 1, x +- 1 square",
       {{17, 41}, {89, 41}, {73, 113}}},
      {"(2)(ii) N(eps3) = -N(eps2) = 1, x +- 1 not square",
       {{5, 41}, {13, 113}, {37, 41}, {5, 809}}},
  };
  bool first = true;
  for (const Block& b : blocks) {
    if (!first) os << "\n";
    first = false;
    os << b.title << "\n";
    std::vector<std::vector<std::string>> rows;
    for (const TableRow& tr : b.rows) {
      FieldContext c = make_context(validate_pair(tr.p1, tr.p2));
      KernelReport k1 = kernel_K1(c);
      rows.push_back({fact(c), unit_text(c.eps_d),
                      norm_str(c.eps_2p2.norm_sign), norm_str(c.eps_d.norm_sign),
                      sq_mark(c.eps_d.x + 1), sq_mark(c.eps_d.x - 1),
                      principal_prime_square(c.pair.p1, c) ? "principal" : "not principal",
                      "<" + join_words(k1.generators, ",") + ">"});
    }
    render_rows(os,
                {"d = 2.p1.p2", "eps_d", "N(eps2)", "N(eps3)", "x+1", "x-1",
                 "H1*H2 in k", "ker J_K1"},
                rows);
  }
  return os.str();
}

std::string table_k3q() {
  std::ostringstream os;
  os << "unit index q = q(K3+/Q) for K3 = Q(sqrt 2, sqrt(p1 p2), i)\n\n";
  const std::vector<TableRow> trs = {{5, 13},  {13, 41}, {29, 37}, {5, 29},
                                     {13, 29}, {37, 13}, {53, 13}};
  std::vector<std::vector<std::string>> rows;
  for (const TableRow& tr : trs) {
    FieldContext c = make_context(validate_pair(tr.p1, tr.p2));
    TowerCase tc = classify_K3(c);
    KernelReport k3 = kernel_K3(c);
    rows.push_back({fact(c), std::to_string(tc.q_k3),
                    norm_str(c.eps_p1p2.norm_sign), norm_str(c.eps_d.norm_sign),
                    "<" + join_words(k3.generators, ",") + ">"});
  }
  render_rows(os, {"d = 2.p1.p2", "q", "N(eps2)", "N(eps3)", "ker J_K3"}, rows);
  return os.str();
}

std::string table_k3sq() {
  std::ostringstream os;
  os << "K3 capitulation kernels by the norm pattern of (eps_p1p2, eps_d)\n\n";
  struct Block {
    const char* title;
    std::vector<TableRow> rows;
  };
  const Block blocks[] = {
      {"(a) N(eps3) = -N(eps2) = 1: H0 and H1*Ht capitulate",
       {{5, 89}, {53, 17}, {61, 41}}},
      {"(b) N(eps2) = N(eps3) = 1, x +- 1 square: H0 and H1*H2 capitulate",
       {{73, 89}, {17, 433}, {41, 401}, {41, 569}}},
      {"(c) N(eps2) = N(eps3) = 1, x +- 1 not square: H0 capitulates",
       {{5, 41}, {13, 113}, {401, 5}, {37, 73}}},
  };
  bool first = true;
  for (const Block& b : blocks) {
    if (!first) os << "\n";
    first = false;
    os << b.title << "\n";
    std::vector<std::vector<std::string>> rows;
    for (const TableRow& tr : b.rows) {
      FieldContext c = make_context(validate_pair(tr.p1, tr.p2));
      KernelReport k3 = kernel_K3(c);
      rows.push_back({fact(c), unit_text(c.eps_d), sq_mark(c.eps_d.x + 1),
                      sq_mark(c.eps_d.x - 1), std::to_string(k3.size),
                      "<" + join_words(k3.generators, ",") + ">"});
    }
    render_rows(os,
                {"d = 2.p1.p2", "eps_d", "x+1", "x-1", "|ker|", "ker J_K3"},
                rows);
  }
  return os.str();
}

std::string table_genus() {
  std::ostringstream os;
  os << "Am_s(k/Q(i)) and its capitulation in the genus field\n\n";
  struct Block {
    const char* title;
    std::vector<TableRow> rows;
  };
  const Block blocks[] = {
      {"(1) N(eps_d) = -1", {{13, 17}, {41, 13}, {17, 37}}},
      {"(2)(i) N(eps_d) = 1, Q = 2", {{17, 41}, {97, 17}, {17, 113}}},
      {"(2)(ii) N(eps_d) = 1, Q = 1", {{5, 89}, {53, 17}, {13, 113}}},
  };
  bool first = true;
  for (const Block& b : blocks) {
    if (!first) os << "\n";
    first = false;
    os << b.title << "\n";
    std::vector<std::vector<std::string>> rows;
    for (const TableRow& tr : b.rows) {
      FieldContext c = make_context(validate_pair(tr.p1, tr.p2));
      Subgroup ams = ams_presentation(c);
      rows.push_back({fact(c), norm_str(c.eps_d.norm_sign),
                      std::to_string(c.q_k),
                      principal_prime_square(c.pair.p1, c) ? "principal" : "not principal",
                      principal_prime_square(c.pair.p2, c) ? "principal" : "not principal",
                      "<" + join_words(ams.generators, ",") + ">"});
    }
    render_rows(os,
                {"d = 2.p1.p2", "N(eps_d)", "Q", "H1*H2 in k", "H3*H4 in k",
                 "Am_s"},
                rows);
  }
  return os.str();
}

}  // namespace

std::vector<std::string> table_ids() {
  return {"ex48", "ex49", "k3-q", "k3-sq", "genus"};
}

std::string render_table(const std::string& set_id) {
  if (set_id == "ex48") return table_ex48();
  if (set_id == "ex49") return table_ex49();
  if (set_id == "k3-q") return table_k3q();
  if (set_id == "k3-sq") return table_k3sq();
  if (set_id == "genus") return table_genus();
  throw std::domain_error("unknown table set: " + set_id);
}

std::string ScanSummary::str() const {
  std::ostringstream os;
  os << "pairs: " << pairs << "\n";
  os << "type (2,2,2): " << type222 << "\n";
  os << "verification failures: " << failures << "\n";
  os << "kernel sizes and cases:";
  for (const auto& [key, count] : histogram) os << " " << key << "=" << count;
  os << "\n";
  return os.str();
}

ScanSummary run_scan(const ScanOptions& opts, std::ostream& lines) {
  std::vector<Int> primes;
  for (Int p = 5; p <= opts.max_prime; ++p)
    if (p % 4 == 1 && is_prime(p)) primes.push_back(p);

  std::vector<PrimePair> pairs;
  for (const Int& a : primes)
    for (const Int& b : primes) {
      if (a == b) continue;
      PrimePair pr = validate_pair(a, b);
      if (opts.filter_222 && !type_222_criterion(pr)) continue;
      pairs.push_back(pr);
    }

  std::vector<std::string> records(pairs.size());
  std::vector<FieldReport> reports(pairs.size());
  std::vector<std::string> errors(pairs.size());
  std::atomic<size_t> next{0};
  unsigned jobs = opts.jobs ? opts.jobs : std::thread::hardware_concurrency();
  if (jobs == 0) jobs = 1;
  jobs = std::min<unsigned>(jobs, std::max<size_t>(pairs.size(), 1));

  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < pairs.size(); i = next.fetch_add(1)) {
      try {
        reports[i] = build_field_report(pairs[i]);
        records[i] = render_json(reports[i]);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& th : threads) th.join();
  for (size_t i = 0; i < errors.size(); ++i)
    if (!errors[i].empty())
      throw std::runtime_error("scan: pair (" + pairs[i].p1.get_str() + ", " +
                               pairs[i].p2.get_str() + "): " + errors[i]);

  ScanSummary sum;
  std::map<std::string, std::uint64_t> hist;
  auto tally = [&hist](const char* tag, const KernelReport& k) {
    ++hist[std::string(tag) + ":size" + std::to_string(k.size)];
    std::string branch = std::string(tag) + ":case" +
                         std::to_string(k.tower_case.branch);
    if (k.tower_case.subcase)
      branch += k.tower_case.subcase == 1 ? "i" : "ii";
    ++hist[branch];
  };
  for (size_t i = 0; i < pairs.size(); ++i) {
    lines << records[i] << "\n";
    if (!lines) throw std::ios_base::failure("scan: write failed");
    const FieldReport& r = reports[i];
    ++sum.pairs;
    if (r.type222) ++sum.type222;
    if (!r.verification.pass) ++sum.failures;
    tally("K1", r.ker_K1);
    tally("K2", r.ker_K2);
    tally("K3", r.ker_K3);
  }
  sum.histogram.assign(hist.begin(), hist.end());
  return sum;
}

}  // namespace capitula
