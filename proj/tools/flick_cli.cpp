// flick: generate, verify, export and benchmark the flickering central
// factorial arrays.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "flick/flick.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

const auto kPositive = CLI::Range(1U, std::numeric_limits<unsigned>::max());

struct FormatOption {
  std::string name = "table";
  flick::OutputFormat get() const { return flick::parse_format(name); }
};

void add_format(CLI::App* cmd, FormatOption& fmt) {
  cmd->add_option("--format", fmt.name, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json", "bfile"}))
      ->capture_default_str();
}

std::vector<std::vector<flick::BigInt>> triangle_with_cache(unsigned rows, flick::Method method) {
  const auto cache = flick::RowCache::from_environment();
  const char* tag = method == flick::Method::extraction ? "extraction" : "recurrence";
  std::vector<std::vector<flick::BigInt>> out;
  out.reserve(rows);
  for (unsigned n = 1; n <= rows; ++n) {
    if (cache) {
      if (auto row = cache->load(tag, n)) {
        out.push_back(std::move(*row));
        continue;
      }
    }
    auto row = method == flick::Method::extraction ? flick::triangle_row_extraction(n)
                                                   : flick::shared_recurrence().row(n);
    if (cache) cache->store(tag, n, row);
    out.push_back(std::move(row));
  }
  return out;
}

std::string format_duration(std::chrono::nanoseconds ns) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << static_cast<double>(ns.count()) / 1e6 << " ms";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flickering central factorial arrays: A395021 triangle, A394582 array, power sums"};
  app.require_subcommand(1);

  // triangle
  unsigned tri_rows = 10;
  std::string tri_method = "recurrence";
  FormatOption tri_fmt;
  auto* triangle = app.add_subcommand("triangle", "Rows of the flickering triangle T(n,k)");
  triangle->add_option("--rows", tri_rows, "Number of rows")->check(kPositive)->capture_default_str();
  triangle->add_option("--method", tri_method, "Generation method")
      ->check(CLI::IsMember({"extraction", "recurrence"}))
      ->capture_default_str();
  add_format(triangle, tri_fmt);

  // todd
  unsigned todd_rows = 5;
  unsigned todd_cols = 8;
  FormatOption todd_fmt;
  auto* todd = app.add_subcommand("todd", "The array Todd(n,k)");
  todd->add_option("--rows", todd_rows, "Rows")->check(kPositive)->capture_default_str();
  todd->add_option("--cols", todd_cols, "Columns")->check(kPositive)->capture_default_str();
  add_format(todd, todd_fmt);

  // row / col
  unsigned row_n = 1;
  unsigned row_count = 10;
  FormatOption row_fmt;
  auto* row = app.add_subcommand("row", "A row prefix of Todd(n,k)");
  row->add_option("n", row_n, "Row index")->required()->check(kPositive);
  row->add_option("--count", row_count, "Number of terms")->check(kPositive)->capture_default_str();
  add_format(row, row_fmt);

  unsigned col_k = 1;
  unsigned col_count = 10;
  FormatOption col_fmt;
  auto* col = app.add_subcommand("col", "A column prefix of Todd(n,k)");
  col->add_option("k", col_k, "Column index")->required()->check(kPositive);
  col->add_option("--count", col_count, "Number of terms")->check(kPositive)->capture_default_str();
  add_format(col, col_fmt);

  // powersum
  unsigned ps_m = 1;
  std::string ps_n;
  bool ps_check = false;
  bool ps_terms = false;
  auto* powersum = app.add_subcommand("powersum", "S_m(n) = 1^m + ... + n^m via the flickering basis");
  powersum->add_option("m", ps_m, "Power")->required()->check(kPositive);
  powersum->add_option("n", ps_n, "Upper limit (arbitrary size)")->required();
  powersum->add_flag("--check", ps_check, "Also run the direct summation and compare");
  powersum->add_flag("--terms", ps_terms, "Print the per-term breakdown");

  // bell
  unsigned bell_count = 10;
  std::optional<unsigned> bell_kernels;
  FormatOption bell_fmt;
  auto* bell = app.add_subcommand("bell", "Row sums a(n) or their binomial kernels");
  bell->add_option("--count", bell_count, "Number of terms")->check(kPositive)->capture_default_str();
  bell->add_option("--kernels", bell_kernels, "Apply the inverse binomial transform q times");
  add_format(bell, bell_fmt);

  // gf
  unsigned gf_row = 2;
  unsigned gf_order = 10;
  bool gf_odd = false;
  FormatOption gf_fmt;
  auto* gf = app.add_subcommand("gf", "Row generating function of Todd(n,k) and its expansion");
  gf->add_option("row", gf_row, "Row index")->required()->check(kPositive);
  gf->add_option("--order", gf_order, "Number of series coefficients")->check(kPositive)->capture_default_str();
  gf->add_flag("--odd", gf_odd, "Generating function of the odd-indexed entries only");
  add_format(gf, gf_fmt);

  // fitcol
  unsigned fit_m = 1;
  auto* fitcol = app.add_subcommand("fitcol", "Fit Todd(n,2m+1) = T_m(n) P_m(n) / D_m");
  fitcol->add_option("m", fit_m, "Column parameter (column 2m+1)")->required()->check(kPositive);

  // verify
  unsigned verify_max = 200;
  auto* verify = app.add_subcommand("verify", "Run the bounded identity suite");
  verify->add_option("--max-n", verify_max, "Upper bound for the leading index of every property")
      ->check(kPositive)
      ->capture_default_str();

  // bench
  unsigned bench_m = 10;
  std::string bench_n = "1000000";
  unsigned bench_reps = 5;
  auto* bench = app.add_subcommand("bench", "Time the flickering power sum against direct summation");
  bench->add_option("m", bench_m, "Power")->required()->check(kPositive);
  bench->add_option("n", bench_n, "Upper limit")->required();
  bench->add_option("--reps", bench_reps, "Repetitions (median reported)")->check(kPositive)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*triangle) {
      const auto method = tri_method == "extraction" ? flick::Method::extraction : flick::Method::recurrence;
      std::cout << flick::render_grid("A395021", triangle_with_cache(tri_rows, method), 1, tri_fmt.get());
      return kOk;
    }

    if (*todd) {
      flick::ToddGrid grid(todd_rows, todd_cols);
      std::vector<std::vector<flick::BigInt>> rows;
      for (unsigned n = 1; n <= todd_rows; ++n) rows.push_back(grid.row(n));
      std::cout << flick::render_grid("A394582", rows, 1, todd_fmt.get());
      return kOk;
    }

    if (*row) {
      const flick::IntSeq seq{flick::todd_row(row_n, row_count), 1};
      std::cout << flick::render_sequence("Todd row " + std::to_string(row_n), seq, row_fmt.get());
      return kOk;
    }

    if (*col) {
      const flick::IntSeq seq{flick::todd_column(col_k, col_count), 1};
      std::cout << flick::render_sequence("Todd column " + std::to_string(col_k), seq, col_fmt.get());
      return kOk;
    }

    if (*powersum) {
      const flick::BigInt n = flick::parse_bigint(ps_n);
      if (n < 1) throw flick::usage_error("n must be >= 1");
      const auto result = flick::power_sum(ps_m, n);
      std::cout << "Sum of " << ps_m << "-th powers up to " << flick::to_string(n) << ":\n"
                << flick::to_string(result.value) << "\n";
      if (ps_terms) {
        for (const auto& t : result.terms) {
          std::cout << "  k=" << t.k << "  T(m,k)=" << flick::to_string(t.coefficient)
                    << "  I_" << t.k + 1 << "(n)=" << flick::to_string(t.basis_value) << "\n";
        }
      }
      if (ps_check) {
        const bool ok = flick::power_sum_naive(ps_m, n) == result.value;
        std::cout << "\nVerification: " << (ok ? "OK" : "ERROR") << "\n";
        return ok ? kOk : kCheckFailed;
      }
      return kOk;
    }

    if (*bell) {
      if (bell_kernels) {
        const auto g = flick::kernel(*bell_kernels, bell_count);
        std::cout << flick::render_sequence("kernel q=" + std::to_string(*bell_kernels), g, bell_fmt.get());
      } else {
        std::cout << flick::render_sequence("A395022", flick::row_sums(bell_count), bell_fmt.get());
      }
      return kOk;
    }

    if (*gf) {
      const auto f = gf_odd ? flick::row_gf_odd(gf_row) : flick::row_gf_full(gf_row);
      const flick::IntSeq seq{flick::expand_rational(f, gf_order), 0};
      const auto fmt = gf_fmt.get();
      const std::string name = std::string(gf_odd ? "G_odd_" : "G_") + std::to_string(gf_row);
      if (fmt == flick::OutputFormat::table) std::cout << name << "(x) = " << f.to_string() << "\n";
      std::cout << flick::render_sequence(name, seq, fmt);
      return kOk;
    }

    if (*fitcol) {
      const auto fit = flick::fit_column_polynomial(fit_m);
      std::cout << "column k = " << 2 * fit_m + 1 << "\n"
                << "T_" << fit_m << "(n) = " << fit.base_poly.to_string() << "\n"
                << "P_" << fit_m << "(n) = " << fit.u_numerator.to_string() << "\n"
                << "D_" << fit_m << " = " << flick::to_string(fit.denominator) << "\n";
      return kOk;
    }

    if (*verify) {
      const auto outcomes = flick::run_property_suite(verify_max);
      std::size_t width = 0;
      for (const auto& o : outcomes) width = std::max(width, o.name.size());
      bool all = true;
      for (const auto& o : outcomes) {
        all = all && o.result.ok;
        std::cout << (o.result.ok ? "PASS  " : "FAIL  ") << o.name << std::string(width - o.name.size() + 2, ' ')
                  << o.scope;
        if (!o.result.ok) std::cout << "  first mismatch: " << o.result.first_mismatch;
        std::cout << "\n";
      }
      std::cout << (all ? "all properties hold" : "property failures detected") << "\n";
      return all ? kOk : kCheckFailed;
    }

    if (*bench) {
      const flick::BigInt n = flick::parse_bigint(bench_n);
      if (n < 1) throw flick::usage_error("n must be >= 1");
      const auto r = flick::bench_power_sum(bench_m, n, bench_reps);
      std::cout << "m = " << r.m << ", n = " << flick::to_string(r.n) << ", reps = " << r.reps << "\n"
                << "triangle row precompute: " << format_duration(r.precompute) << "\n"
                << "flickering basis median: " << format_duration(r.flickering_median) << "\n"
                << "direct summation median: " << format_duration(r.naive_median) << "\n"
                << "results agree: " << (r.agree ? "yes" : "NO") << "\n";
      return r.agree ? kOk : kCheckFailed;
    }
  } catch (const flick::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
