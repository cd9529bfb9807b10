// Acceptance gate: six criteria, one pass/fail line each, exit 0 iff all
// pass.  Criteria 1-5 run in-process; criterion 6 spawns the CLI twice (path
// from WEAKCONV_CLI) and byte-compares the reports.
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "approx_identity.hpp"
#include "convolution.hpp"
#include "estimator.hpp"
#include "fourier.hpp"
#include "function.hpp"
#include "group.hpp"
#include "lorentz.hpp"
#include "rng.hpp"

using namespace weakconv;

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

std::vector<GroupPtr> acceptance_groups() {
  return {MeasuredGroup::cyclic(32), MeasuredGroup::cyclic(257),
          MeasuredGroup::torus_grid(64, 1), MeasuredGroup::dihedral(4),
          MeasuredGroup::symmetric(3)};
}

const std::vector<double> kExponents = {4.0 / 3.0, 2.0, 3.0};

GroupFunction random_function(const GroupPtr& g, Rng& rng) {
  std::vector<cplx> v(g->order());
  for (auto& z : v) z = rng.complex_gaussian();
  return GroupFunction(g, std::move(v));
}

double max_abs_diff(const GroupFunction& a, const GroupFunction& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Criteria 1 and 2 share one randomized suite per group: the operator-norm
// sandwich over 50 kernels and the weak-Young sweep over 10^4 pairs, for
// every exponent.
struct SuiteOutcome {
  bool sandwiches_ok = true;
  bool weak_young_ok = true;
  double elapsed_seconds = 0.0;
  double worst_ratio = 0.0;  // max weak-Young ratio seen anywhere
  std::string worst_where;
};

SuiteOutcome run_theorem_suite() {
  SuiteOutcome out;
  const auto start = std::chrono::steady_clock::now();
  for (const GroupPtr& g : acceptance_groups()) {
    const TheoremReport report =
        verify_theorem1(g, kExponents, /*kernels=*/50, /*trials=*/16,
                        /*wy_pairs=*/10000, /*seed=*/20260815, Side::Left);
    for (const TheoremRun& run : report.runs) {
      out.sandwiches_ok = out.sandwiches_ok && run.kernels_ok;
      out.weak_young_ok = out.weak_young_ok && run.weak_young_ok;
      if (run.weak_young_max > out.worst_ratio) {
        out.worst_ratio = run.weak_young_max;
        char where[96];
        std::snprintf(where, sizeof where, "%s, p=%.4g (bound %.4g)",
                      g->label().c_str(), run.p, run.upper_constant);
        out.worst_where = where;
      }
    }
  }
  out.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return out;
}

bool criterion3() {
  // Fejer family at the acceptance scale.
  const std::uint64_t orders[] = {4, 16, 64};
  const ApproxIdentityFamily family = fejer_family(256, orders);
  const std::vector<std::vector<elem_t>> windows = {
      theta_window(family.group, 0.1)};

  std::vector<cplx> fixture(family.group->order());
  for (std::size_t s = 0; s < fixture.size(); ++s) {
    const double theta = static_cast<double>(s) / 256.0;
    fixture[s] = cplx(
        2.0 + std::cos(kTau * theta) - 0.7 * std::sin(2.0 * kTau * theta),
        0.0);
  }
  const GroupFunction tests[] = {GroupFunction(family.group, fixture)};
  const Lemma1Report report = verify_lemma1(family, windows, tests, 1.0);
  bool ok = report.integrals_ok && report.l1_ok && report.tails_decreasing &&
            report.deviations_decreasing && report.ok;

  // Exact point-mass family: zero deviation, bit for bit.
  const GroupPtr discrete = MeasuredGroup::cyclic(32);
  const ApproxIdentityFamily exact = point_mass_identity(discrete);
  Rng rng(314);
  std::vector<GroupFunction> probes;
  for (int t = 0; t < 3; ++t) probes.push_back(random_function(discrete, rng));
  const std::vector<std::vector<elem_t>> pm_windows = {{discrete->identity()}};
  const Lemma1Report pm = verify_lemma1(exact, pm_windows, probes, 1.0);
  for (const Lemma1MemberStats& m : pm.members) {
    for (const double d : m.lp_deviation) ok = ok && d == 0.0;
    for (const double d : m.sup_deviation) ok = ok && d == 0.0;
  }
  return ok;
}

bool criterion4() {
  bool ok = true;
  Rng rng(2025);

  // Round trip and Plancherel on abelian grids.
  for (const auto& g :
       {MeasuredGroup::cyclic(64), MeasuredGroup::torus_grid(16, 2)}) {
    const double w = g->weight();
    const double n = static_cast<double>(g->order());
    for (int t = 0; t < 20; ++t) {
      const GroupFunction f = random_function(g, rng);
      const GroupFunction back = idft(g, dft(f));
      ok = ok && max_abs_diff(back, f) <= 1e-10 * (sup_norm(f) + 1.0);

      double space = 0.0;
      for (std::size_t i = 0; i < f.size(); ++i) space += std::norm(f[i]) * w;
      double freq = 0.0;
      for (const cplx& z : dft(f).scalar) freq += std::norm(z);
      freq /= n * w;
      ok = ok && std::abs(space - freq) <= 1e-10 * space;
    }
  }

  // Fast and direct convolution agree at scale.
  const GroupPtr big = MeasuredGroup::cyclic(512);
  for (int t = 0; t < 100; ++t) {
    const GroupFunction k = random_function(big, rng);
    const GroupFunction f = random_function(big, rng);
    const double scale = strong_norm(k, 1.0) * sup_norm(f);
    ok = ok && max_abs_diff(fft_convolve(k, f), convolve(k, f)) <=
                   1e-9 * scale;
  }

  // Nonabelian inversion, Plancherel, and the multiplier convention.
  for (const auto& g :
       {MeasuredGroup::symmetric(3), MeasuredGroup::dihedral(4)}) {
    const IrrepTable table = builtin_irreps(g);
    for (int t = 0; t < 20; ++t) {
      const GroupFunction f = random_function(g, rng);
      const MultiplierSymbol spec = nonabelian_fourier(f, table);
      ok = ok && max_abs_diff(nonabelian_fourier_inverse(spec, table), f) <=
                     1e-10;

      double space = 0.0;
      for (std::size_t i = 0; i < f.size(); ++i) space += std::norm(f[i]);
      double freq = 0.0;
      for (std::size_t r = 0; r < spec.blocks.size(); ++r) {
        double hs = 0.0;
        for (const cplx& z : spec.blocks[r].a) hs += std::norm(z);
        freq += static_cast<double>(table.irreps[r].dim) * hs;
      }
      freq /= static_cast<double>(g->order());
      ok = ok && std::abs(space - freq) <= 1e-10 * space;
    }

    for (int t = 0; t < 50; ++t) {
      const GroupFunction k = random_function(g, rng);
      const GroupFunction f = random_function(g, rng);
      const GroupFunction via_symbol =
          apply_matrix_multiplier(nonabelian_fourier(k, table), f, table);
      static_assert(kMultiplierConvolutionSide == Side::Right);
      ok = ok && max_abs_diff(via_symbol, convolve(f, k)) <= 1e-10;
    }
  }
  return ok;
}

bool criterion5() {
  bool ok = true;
  Rng rng(555);
  for (const GroupPtr& g : acceptance_groups()) {
    const auto n = static_cast<std::uint32_t>(g->order());
    for (int t = 0; t < 200 && ok; ++t) {
      const double p = kExponents[t % kExponents.size()];
      const GroupFunction f = random_function(g, rng);
      const GroupFunction h = random_function(g, rng);
      const double wf = weak_norm(f, p);

      // Chebyshev, with equality on indicators.
      ok = ok && wf <= strong_norm(f, p) * (1.0 + 1e-12);
      std::vector<elem_t> support;
      for (elem_t x = 0; x < n; ++x)
        if (rng.below(3) == 0) support.push_back(x);
      if (support.empty()) support.push_back(static_cast<elem_t>(rng.below(n)));
      const GroupFunction ind = GroupFunction::indicator(g, support);
      ok = ok && weak_norm(ind, p) == strong_norm(ind, p);

      // Translation and dyadic-scaling invariance, bit for bit.
      const auto y = static_cast<elem_t>(rng.below(n));
      ok = ok && weak_norm(f.translate_left(y), p) == wf;
      ok = ok && weak_norm(scale(cplx(2.0, 0.0), f), p) == 2.0 * wf;

      // Quasi-triangle with constant 2.
      const GroupFunction sum =
          linear_combination(cplx(1.0, 0.0), f, cplx(1.0, 0.0), h);
      ok = ok && weak_norm(sum, p) <=
                     2.0 * (wf + weak_norm(h, p)) * (1.0 + 1e-12);

      // Distribution function agrees between the direct scan and the
      // rearrangement at random thresholds.
      const Rearrangement r = decreasing_rearrangement(f);
      const double top = sup_norm(f) * 1.1;
      for (int s = 0; s < 100; ++s) {
        const double alpha = rng.uniform01() * top;
        ok = ok && distribution_function(f, alpha) ==
                       distribution_function(r, alpha);
      }
      ok = ok && distribution_function(f, 0.0) ==
                     distribution_function(r, 0.0);
    }
  }
  return ok;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

bool criterion6() {
  const char* cli = std::getenv("WEAKCONV_CLI");
  if (!cli) {
    std::fprintf(stderr, "criterion 6 needs WEAKCONV_CLI\n");
    return false;
  }
  const std::string base = "/tmp/weakconv_accept_" + std::to_string(getpid());
  const std::string args =
      " verify --suite theorem1 --group \"cyclic(32)\" --p 1.5,2,3 --kernels 5"
      " --trials 8 --wy-pairs 200 --seed 917 > ";
  bool ok = true;
  for (int run = 1; run <= 2; ++run) {
    const std::string cmd = std::string("\"") + cli + "\"" + args + base +
                            std::to_string(run) + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    ok = ok && WIFEXITED(status) && WEXITSTATUS(status) == 0;
  }
  const std::string r1 = slurp(base + "1"), r2 = slurp(base + "2");
  std::remove((base + "1").c_str());
  std::remove((base + "2").c_str());
  return ok && !r1.empty() && r1 == r2;
}

}  // namespace

int main() {
  int failures = 0;
  const auto line = [&](int idx, const char* what, bool pass,
                        const std::string& detail = "") {
    std::printf("criterion %d (%s): %s%s\n", idx, what,
                pass ? "PASS" : "FAIL",
                detail.empty() ? "" : ("  [" + detail + "]").c_str());
    if (!pass) ++failures;
  };

  const SuiteOutcome suite = run_theorem_suite();
  {
    char detail[64];
    std::snprintf(detail, sizeof detail, "%.1f s for 5 groups x 3 p x 50 kernels",
                  suite.elapsed_seconds);
    line(1, "operator-norm sandwich",
         suite.sandwiches_ok && suite.elapsed_seconds < 300.0, detail);
  }
  {
    char detail[160];
    std::snprintf(detail, sizeof detail, "max ratio %.6f on %s",
                  suite.worst_ratio, suite.worst_where.c_str());
    line(2, "weak-Young bound over 10^4 pairs per group", suite.weak_young_ok,
         detail);
  }
  line(3, "Fejer approximate identity and exact point mass", criterion3());
  line(4, "Fourier transforms, fast convolution, multiplier convention",
       criterion4());
  line(5, "norm-layer invariants over 200 random functions per group",
       criterion5());
  line(6, "byte-identical verification reports for one seed", criterion6());

  if (failures) {
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("acceptance: all 6 criteria passed\n");
  return 0;
}
