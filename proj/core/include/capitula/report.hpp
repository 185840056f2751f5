#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "capitula/capitulation.hpp"

namespace capitula {

// Full per-pair analysis: units, indices, Am_s, the four kernels, the
// (2,2,2) flag and the verification verdict.
struct FieldReport {
  FieldContext ctx;
  AmbiguousCounts counts;
  Subgroup ams;
  KernelReport ker_K1, ker_K2, ker_K3, ker_genus;
  std::optional<Type222Report> type222;
  VerificationRecord verification;
};

FieldReport build_field_report(const PrimePair& pair);

// Deterministic JSON: fixed key order, integers as decimal strings.
std::string render_json(const FieldReport& r);
std::string render_text(const FieldReport& r);
std::string csv_header();
std::string render_csv_row(const FieldReport& r);

// Worked-example table reproduction. Valid ids: ex48, ex49, k3-q, k3-sq, genus.
// Columns the library cannot compute are rendered as "external".
std::string render_table(const std::string& set_id);
std::vector<std::string> table_ids();

struct ScanOptions {
  Int max_prime;
  bool filter_222 = false;
  std::string out_path;  // empty = stdout
  unsigned jobs = 0;     // 0 = hardware concurrency
};

struct ScanSummary {
  std::uint64_t pairs = 0;
  std::uint64_t type222 = 0;
  std::uint64_t failures = 0;
  // kernel-size histogram keyed "K1:4" etc.
  std::vector<std::pair<std::string, std::uint64_t>> histogram;

  std::string str() const;
};

// Streams one JSON record per line in deterministic pair order; parallel
// across pairs. Throws std::ios_base::failure on output errors.
ScanSummary run_scan(const ScanOptions& opts, std::ostream& lines);

}  // namespace capitula
