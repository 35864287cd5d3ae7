// lagnp: certify that the shifted-parameter Laguerre polynomials and their
// unit-endpoint perturbations admit no factor of a given degree, and rebuild
// the reference exception tables by exhaustive scan.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "lagnp/acceptance.hpp"
#include "lagnp/arith.hpp"
#include "lagnp/report.hpp"

namespace {

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

lagnp::Rational parse_ratio(const std::string& text) {
  if (const auto slash = text.find('/'); slash != std::string::npos)
    return {std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1))};
  if (const auto dot = text.find('.'); dot != std::string::npos) {
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    long long den = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    return {std::stoll(digits), den};
  }
  return {std::stoll(text), 1};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exclusion certificates and exhaustive scans for shifted Laguerre polynomials"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string out_path;
  unsigned jobs = 0;
  std::string data_dir;
  app.add_option("--format", format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "write output to a file instead of stdout");
  app.add_option("--jobs", jobs, "worker threads (0 = all cores; 1 = fully deterministic order)");
  app.add_option("--data-dir", data_dir, "directory holding fixtures/ and najman_excerpt.txt");

  std::uint64_t n = 0, s = 0, k = 0, prime = 0;
  auto* coeffs_cmd = app.add_subcommand("coeffs", "print the monic integer coefficients");
  coeffs_cmd->add_option("--n", n)->required();
  coeffs_cmd->add_option("--s", s)->required();

  auto* polygon_cmd = app.add_subcommand("polygon", "print a Newton polygon");
  polygon_cmd->add_option("--n", n)->required();
  polygon_cmd->add_option("--s", s)->required();
  polygon_cmd->add_option("--prime", prime)->required();

  auto* check_cmd = app.add_subcommand("check", "run the exclusion pipeline on one triple");
  check_cmd->add_option("--n", n)->required();
  check_cmd->add_option("--s", s)->required();
  check_cmd->add_option("--k", k)->required();

  std::uint64_t k_min = 2, k_max = 2, s_min = 1, s_max = 92;
  std::uint64_t n_min = 0, n_max = ~std::uint64_t{0};
  std::string regime = "inner";
  auto* scan_cmd = app.add_subcommand("scan", "exhaustive scan over a triple range");
  scan_cmd->add_option("--k-min", k_min)->required();
  scan_cmd->add_option("--k-max", k_max)->required();
  scan_cmd->add_option("--s-min", s_min)->required();
  scan_cmd->add_option("--s-max", s_max)->required();
  scan_cmd->add_option("--regime", regime, "inner (2k <= n <= 4k) or outer (n > 4k)")
      ->check(CLI::IsMember({"inner", "outer"}));
  scan_cmd->add_option("--n-min", n_min, "extra lower bound on n");
  scan_cmd->add_option("--n-max", n_max, "extra upper bound on n (required for outer)");

  std::string table_name;
  auto* tables_cmd = app.add_subcommand("tables", "recompute a reference table row-by-row");
  const std::vector<std::string> table_names(std::begin(lagnp::search::kTableNames),
                                             std::end(lagnp::search::kTableNames));
  tables_cmd->add_option("--name", table_name, "which table to recompute")
      ->required()
      ->check(CLI::IsMember(table_names));

  std::uint64_t dk_k = 2, dk_max_n = 40'000, dk_bound = 100;
  std::uint64_t dk_s_min = 10, dk_s_max = 92;
  std::string najman_file;
  auto* dk_cmd = app.add_subcommand("dk", "smooth-window candidates and their elimination");
  dk_cmd->add_option("--k", dk_k)->required();
  dk_cmd->add_option("--max-n", dk_max_n);
  dk_cmd->add_option("--bound", dk_bound, "prime bound (< 100)");
  dk_cmd->add_option("--s-min", dk_s_min);
  dk_cmd->add_option("--s-max", dk_s_max);
  dk_cmd->add_option("--najman-file", najman_file,
                     "odd-solution file for k = 2 (default: $LAGNP_NAJMAN_FILE)");

  std::uint64_t gap_lo = 2, gap_hi = 2;
  std::string gap_ratio = "2";
  auto* gaps_cmd = app.add_subcommand("gaps", "verify a prime in (m, ratio*m] for every m in range");
  gaps_cmd->add_option("--lo", gap_lo)->required();
  gaps_cmd->add_option("--hi", gap_hi)->required();
  gaps_cmd->add_option("--ratio", gap_ratio, "exact ratio, e.g. 40/39 or 1.064286")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run the full verification suite");
  (void)verify_cmd;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // 2 = usage error; 0 covers --help
  }

  lagnp::search::ScanOptions opts;
  opts.jobs = jobs;

  try {
    if (coeffs_cmd->parsed()) {
      const lagnp::polys::LaguerreInstance inst{n, s};
      return write_output(lagnp::report::coeffs_json(inst, lagnp::polys::g1_coefficients(inst)),
                          out_path);
    }
    if (polygon_cmd->parsed()) {
      if (!lagnp::arith::is_prime(prime)) {
        std::cerr << "--prime must be prime\n";
        return 2;
      }
      const lagnp::polys::LaguerreInstance inst{n, s};
      return write_output(lagnp::report::polygon_json(inst, lagnp::newton::newton_polygon(inst, prime)),
                          out_path);
    }
    if (check_cmd->parsed()) {
      const auto verdict = lagnp::criteria::excludes_factor_degree({n, s}, k, opts.pipeline);
      return write_output(lagnp::report::verdict_json(verdict), out_path);
    }
    if (scan_cmd->parsed()) {
      lagnp::search::TripleRange range;
      range.k = {k_min, k_max};
      range.s = {s_min, s_max};
      range.n = {n_min, n_max};
      range.regime = regime == "inner" ? lagnp::search::Regime::Inner : lagnp::search::Regime::Outer;
      if (range.regime == lagnp::search::Regime::Outer && n_max == ~std::uint64_t{0}) {
        std::cerr << "outer scans need --n-max\n";
        return 2;
      }
      const auto report = lagnp::search::scan(range, opts);
      std::cerr << "scanned " << report.verdicts.size() << " triples in " << report.seconds
                << " s; " << report.survivors.size() << " survivors\n";
      return write_output(format == "json" ? lagnp::report::scan_report_json(report)
                                           : lagnp::report::scan_report_csv(report),
                          out_path);
    }
    if (tables_cmd->parsed()) {
      const auto fx = lagnp::fixtures::load(data_dir);
      const auto report = lagnp::search::reproduce_table(table_name, fx, opts);
      const int rc = write_output(format == "json" ? lagnp::report::table_report_json(report)
                                                   : lagnp::report::table_report_csv(report),
                                  out_path);
      return rc != 0 ? rc : (report.all_agree ? 0 : 1);
    }
    if (dk_cmd->parsed()) {
      lagnp::search::SmoothWindowSet set;
      if (dk_k == 2) {
        if (najman_file.empty())
          if (const char* env = std::getenv("LAGNP_NAJMAN_FILE")) najman_file = env;
        if (najman_file.empty()) {
          std::cerr << "k = 2 needs --najman-file or LAGNP_NAJMAN_FILE\n";
          return 2;
        }
        set.k = 2;
        set.bound = dk_bound;
        set.members = lagnp::search::ingest_najman(najman_file);
      } else {
        set = lagnp::search::smooth_window_scan(dk_k, dk_max_n, dk_bound);
      }
      const auto elim = lagnp::search::eliminate_dk_triples(set, {dk_s_min, dk_s_max}, opts);
      std::cerr << set.members.size() << " candidates, " << elim.survivors.size()
                << " survivors in " << elim.seconds << " s\n";
      return write_output(format == "json" ? lagnp::report::smooth_set_json(set, &elim)
                                           : lagnp::report::smooth_set_csv(set),
                          out_path);
    }
    if (gaps_cmd->parsed()) {
      const bool ok = lagnp::search::verify_prime_gap(gap_lo, gap_hi, parse_ratio(gap_ratio));
      std::cout << (ok ? "confirmed" : "VIOLATION") << "\n";
      return ok ? 0 : 1;
    }
    if (verify_cmd->parsed()) {
      const auto fx = lagnp::fixtures::load(data_dir);
      bool all = true;
      for (const auto& result : lagnp::acceptance::run_all(fx, opts)) {
        std::cout << lagnp::acceptance::format_line(result) << "\n";
        all = all && result.pass;
      }
      return all ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
