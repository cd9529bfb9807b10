// weakconv command-line front end.  Parses arguments, then drives everything
// through the shared-library C API.  Exit codes: 0 success, 1 verification
// failure, 2 bad input.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weakconv/weakconv.h"

namespace {

struct GroupHandle {
  wc_group* g = nullptr;
  ~GroupHandle() { wc_group_free(g); }
};

struct FunctionHandle {
  wc_function* f = nullptr;
  ~FunctionHandle() { wc_function_free(f); }
};

[[noreturn]] void die(wc_status st) {
  std::fprintf(stderr, "weakconv: %s: %s\n", wc_status_name(st),
               wc_last_error());
  std::exit(2);
}

void check(wc_status st) {
  if (st != WC_OK) die(st);
}

void print_report(char* s) {
  std::fputs(s, stdout);
  wc_string_free(s);
}

void load_group(const std::string& spec, GroupHandle& gh) {
  check(wc_group_from_spec(spec.c_str(), &gh.g));
}

void load_function(const GroupHandle& gh, const std::string& path,
                   FunctionHandle& fh) {
  check(wc_function_read(gh.g, path.c_str(), &fh.f));
}

double parse_q(const std::string& q_str, double p) {
  if (q_str.empty()) return p;
  if (q_str == "inf" || q_str == "infinity") return INFINITY;
  try {
    std::size_t pos = 0;
    const double q = std::stod(q_str, &pos);
    if (pos == q_str.size()) return q;
  } catch (const std::exception&) {
  }
  std::fprintf(stderr, "weakconv: --q must be a number or \"inf\", got %s\n",
               q_str.c_str());
  std::exit(2);
}

int side_from_flag(const std::string& side) {
  if (side == "left") return WC_SIDE_LEFT;
  if (side == "right") return WC_SIDE_RIGHT;
  return WC_SIDE_BOTH;
}

bool wants_csv_values(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
}

// Writes the result (when out_path nonempty) and prints the norm summary.
void finish_output(const char* kind, const FunctionHandle& result,
                   const std::string& out_path, bool csv_report) {
  if (!out_path.empty())
    check(wc_function_write(result.f, out_path.c_str(),
                            wants_csv_values(out_path) ? 1 : 0));
  char* report = nullptr;
  check(wc_report_output_summary(kind, result.f,
                                 out_path.empty() ? "-" : out_path.c_str(),
                                 csv_report ? 1 : 0, &report));
  print_report(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lorentz norms, group convolutions and Fourier multipliers on "
               "finite and discretized compact groups"};
  app.set_version_flag("--version", std::string(wc_version()));
  app.require_subcommand(1);

  std::string group_spec, function_path, kernel_path, symbol_path, out_path;
  std::string q_str, side = "left", format = "json", suite = "theorem1";
  double p = 2.0, upper_constant = 0.0;
  std::uint64_t seed = 1, grid_n = 0;
  std::size_t trials = 200, kernels = 50, wy_pairs = 10000;
  std::vector<std::uint64_t> orders;
  std::vector<double> ps, window_radii;
  bool use_fft = false, do_verify = false, include_witness = false;

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* norm = app.add_subcommand("norm", "Lorentz-space norms");
  norm->add_option("--group", group_spec, "Group spec")->required();
  norm->add_option("--function", function_path, "Function file")->required();
  norm->add_option("--p", p, "Primary exponent, 1 < p < inf")->required();
  norm->add_option("--q", q_str, "Secondary exponent or \"inf\" (default p)");
  add_format(norm);

  CLI::App* conv = app.add_subcommand("conv", "Convolve a kernel with a function");
  conv->add_option("--group", group_spec, "Group spec")->required();
  conv->add_option("--kernel", kernel_path, "Kernel file")->required();
  conv->add_option("--function", function_path, "Function file")->required();
  conv->add_option("--side", side, "Kernel side: left (k*f) or right (f*k)")
      ->check(CLI::IsMember({"left", "right"}));
  conv->add_option("--out", out_path,
                   "Where to write the result (.csv selects CSV)");
  conv->add_flag("--fft", use_fft,
                 "Use the transform-side engine (abelian grid groups)");
  add_format(conv);

  CLI::App* mult = app.add_subcommand(
      "multiplier", "Apply a Fourier multiplier operator");
  mult->add_option("--group", group_spec, "Group spec")->required();
  mult->add_option("--function", function_path, "Function file")->required();
  mult->add_option("--symbol", symbol_path, "Symbol file (scalar or matrix)");
  mult->add_option("--kernel", kernel_path,
                   "Kernel whose transform is the symbol");
  mult->add_option("--out", out_path,
                   "Where to write the result (.csv selects CSV)");
  add_format(mult);

  CLI::App* fejer = app.add_subcommand(
      "fejer", "Fejer approximate-identity family on a 1-d torus grid");
  fejer->add_option("--grid", grid_n, "Grid size N")->required();
  fejer->add_option("--orders", orders, "Fejer orders, increasing")
      ->required()
      ->delimiter(',');
  fejer->add_flag("--verify", do_verify,
                  "Check the approximate-identity properties");
  fejer->add_option("--p", p, "Deviation exponent for --verify");
  fejer->add_option("--windows", window_radii,
                    "Window radii for tail masses (default 0.05,0.1,0.2)")
      ->delimiter(',');
  add_format(fejer);

  CLI::App* estimate = app.add_subcommand(
      "estimate", "Operator-norm sandwich for one kernel");
  estimate->add_option("--group", group_spec, "Group spec")->required();
  estimate->add_option("--kernel", kernel_path, "Kernel file")->required();
  estimate->add_option("--p", p, "Exponent, 1 < p < inf")->required();
  estimate->add_option("--trials", trials, "Random probes per estimate");
  estimate->add_option("--seed", seed, "RNG seed (echoed in the report)");
  std::string est_side = "both";
  estimate->add_option("--side", est_side, "Kernel side")
      ->check(CLI::IsMember({"left", "right", "both"}));
  estimate->add_option("--constant", upper_constant,
                       "Upper-bound constant C_p (default p/(p-1))");
  estimate->add_flag("--witness", include_witness,
                     "Inline the best witness function in the report");
  add_format(estimate);

  CLI::App* verify = app.add_subcommand(
      "verify", "Randomized verification suites; exits 1 on violation");
  verify->add_option("--suite", suite, "Suite name")
      ->check(CLI::IsMember({"theorem1"}));
  verify->add_option("--group", group_spec, "Group spec")->required();
  verify->add_option("--p", ps, "Exponents (repeatable or comma-separated)")
      ->delimiter(',');
  verify->add_option("--kernels", kernels, "Random kernels per exponent");
  verify->add_option("--trials", trials, "Random probes per kernel");
  verify->add_option("--wy-pairs", wy_pairs, "Random convolution pairs");
  verify->add_option("--seed", seed, "RNG seed (echoed in the report)");
  verify->add_option("--side", side, "Kernel side")
      ->check(CLI::IsMember({"left", "right"}));
  verify->add_option("--constant", upper_constant,
                     "Upper-bound constant C_p (default p/(p-1))");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  const bool csv = format == "csv";

  if (norm->parsed()) {
    GroupHandle g;
    FunctionHandle f;
    load_group(group_spec, g);
    load_function(g, function_path, f);
    char* report = nullptr;
    check(wc_report_norm(f.f, p, parse_q(q_str, p), csv ? 1 : 0, &report));
    print_report(report);
    return 0;
  }

  if (conv->parsed()) {
    GroupHandle g;
    FunctionHandle k, f, result;
    load_group(group_spec, g);
    load_function(g, kernel_path, k);
    load_function(g, function_path, f);
    if (use_fft) {
      if (side == "left")
        check(wc_fft_convolve(k.f, f.f, &result.f));
      else
        check(wc_fft_convolve(f.f, k.f, &result.f));
    } else {
      check(wc_apply_convolution(k.f, side_from_flag(side), f.f, &result.f));
    }
    finish_output("conv", result, out_path, csv);
    return 0;
  }

  if (mult->parsed()) {
    if (symbol_path.empty() == kernel_path.empty()) {
      std::fprintf(stderr,
                   "weakconv: multiplier needs exactly one of --symbol or "
                   "--kernel\n");
      return 2;
    }
    GroupHandle g;
    FunctionHandle f, result;
    load_group(group_spec, g);
    load_function(g, function_path, f);
    if (!symbol_path.empty()) {
      check(wc_apply_multiplier_symbol_file(g.g, symbol_path.c_str(), f.f,
                                            &result.f));
    } else {
      FunctionHandle k;
      load_function(g, kernel_path, k);
      check(wc_apply_multiplier_kernel(k.f, f.f, &result.f));
    }
    finish_output("multiplier", result, out_path, csv);
    return 0;
  }

  if (fejer->parsed()) {
    char* report = nullptr;
    int ok = 1;
    check(wc_report_fejer(grid_n, orders.data(), orders.size(),
                          do_verify ? 1 : 0, p, window_radii.data(),
                          window_radii.size(), csv ? 1 : 0, &ok, &report));
    print_report(report);
    return ok ? 0 : 1;
  }

  if (estimate->parsed()) {
    GroupHandle g;
    FunctionHandle k;
    load_group(group_spec, g);
    load_function(g, kernel_path, k);
    char* report = nullptr;
    int ok = 1;
    check(wc_report_estimate(k.f, p, trials, seed, side_from_flag(est_side),
                             upper_constant, include_witness ? 1 : 0,
                             csv ? 1 : 0, &ok, &report));
    print_report(report);
    return 0;
  }

  // verify
  GroupHandle g;
  load_group(group_spec, g);
  if (ps.empty()) ps = {2.0};
  char* report = nullptr;
  int all_ok = 0;
  check(wc_report_verify_theorem1(g.g, ps.data(), ps.size(), kernels, trials,
                                  wy_pairs, seed, side_from_flag(side),
                                  upper_constant, csv ? 1 : 0, &all_ok,
                                  &report));
  print_report(report);
  return all_ok ? 0 : 1;
}
