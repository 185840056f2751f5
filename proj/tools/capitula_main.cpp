#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "capitula/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInconsistent = 3;
constexpr int kExitIo = 4;

void emit_error(const std::string& code, const std::string& message) {
  std::cerr << "{\"error\":\"" << code << "\",\"message\":\"" << message
            << "\"}\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"capitula: unit and 2-class capitulation invariants of Q(sqrt(2 p1 p2), i)"};
  app.require_subcommand(1);

  std::uint64_t period_cap = capitula::kDefaultPeriodCap;
  std::uint64_t precision_bits = 0;
  app.add_option("--period-cap", period_cap,
                 "continued-fraction step limit")
      ->envname("CAPITULA_PERIOD_CAP");
  app.add_option("--precision-bits", precision_bits,
                 "base precision of the square-root oracle (0 = automatic)")
      ->envname("CAPITULA_PRECISION_BITS");

  auto* rep = app.add_subcommand("report", "full analysis of one prime pair");
  std::string p1_str, p2_str, format = "text";
  rep->add_option("--p1", p1_str, "first prime, 1 (mod 4)")->required();
  rep->add_option("--p2", p2_str, "second prime, 1 (mod 4)")->required();
  rep->add_option("--format", format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  auto* tab = app.add_subcommand("tables", "reproduce a worked-example table");
  std::string set_id;
  tab->add_option("set", set_id, "ex48 | ex49 | k3-q | k3-sq | genus")
      ->required();

  auto* scan = app.add_subcommand("scan", "all valid ordered pairs up to a bound");
  std::string max_str, out_path, filter;
  unsigned jobs = 0;
  scan->add_option("--max", max_str, "largest prime to include")->required();
  scan->add_option("--out", out_path, "JSON-lines output path (default stdout)");
  scan->add_option("--filter", filter, "only pairs of a family: 222")
      ->check(CLI::IsMember({"222"}));
  scan->add_option("--jobs", jobs, "worker threads (default: hardware)");

  auto* unit = app.add_subcommand("unit", "fundamental unit of Q(sqrt(D))");
  std::string d_str;
  unit->add_option("--d", d_str, "squarefree D > 1")->required();

  CLI11_PARSE(app, argc, argv);

  capitula::set_pell_period_cap(period_cap);
  capitula::set_quartic_precision_bits(precision_bits);

  try {
    if (*rep) {
      capitula::PrimePair pair;
      try {
        pair = capitula::validate_pair(capitula::Int(p1_str), capitula::Int(p2_str));
      } catch (const capitula::pair_error& e) {
        const char* code = e.code() == capitula::pair_error_code::not_prime
                               ? "not_prime"
                           : e.code() == capitula::pair_error_code::bad_residue
                               ? "bad_residue"
                               : "equal_primes";
        emit_error(code, e.what());
        return kExitUsage;
      }
      capitula::FieldReport r = capitula::build_field_report(pair);
      if (format == "json")
        std::cout << capitula::render_json(r) << "\n";
      else if (format == "csv")
        std::cout << capitula::csv_header() << "\n"
                  << capitula::render_csv_row(r) << "\n";
      else
        std::cout << capitula::render_text(r);
      if (!r.verification.pass) {
        emit_error("inconsistent", "internal verification failed");
        return kExitInconsistent;
      }
      return kExitOk;
    }

    if (*tab) {
      std::string rendered;
      try {
        rendered = capitula::render_table(set_id);
      } catch (const std::domain_error& e) {
        emit_error("unknown_table", e.what());
        return kExitUsage;
      }
      std::cout << rendered;
      return kExitOk;
    }

    if (*scan) {
      capitula::ScanOptions opts;
      opts.max_prime = capitula::Int(max_str);
      opts.filter_222 = (filter == "222");
      opts.jobs = jobs;
      capitula::ScanSummary sum;
      try {
        if (out_path.empty()) {
          sum = capitula::run_scan(opts, std::cout);
        } else {
          std::ofstream out(out_path);
          if (!out) {
            emit_error("io", "cannot open " + out_path);
            return kExitIo;
          }
          sum = capitula::run_scan(opts, out);
        }
      } catch (const std::ios_base::failure& e) {
        emit_error("io", e.what());
        return kExitIo;
      }
      std::cerr << sum.str();
      return sum.failures == 0 ? kExitOk : kExitInconsistent;
    }

    if (*unit) {
      capitula::Int d(d_str);
      try {
        capitula::QuadUnit u = capitula::fundamental_unit(d);
        std::cout << "eps = ";
        if (u.den == 2) std::cout << "(";
        std::cout << u.x << " + " << u.y << "*sqrt(" << u.m << ")";
        if (u.den == 2) std::cout << ")/2";
        std::cout << "   norm " << (u.norm_sign > 0 ? "+1" : "-1") << "\n";
      } catch (const std::domain_error& e) {
        emit_error("bad_radicand", e.what());
        return kExitUsage;
      }
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    emit_error("bad_argument", e.what());
    return kExitUsage;
  } catch (const std::logic_error& e) {
    emit_error("inconsistent", e.what());
    return kExitInconsistent;
  } catch (const std::exception& e) {
    emit_error("error", e.what());
    return kExitInconsistent;
  }
  return kExitUsage;
}
