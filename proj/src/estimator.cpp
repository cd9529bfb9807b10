#include "estimator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "errors.hpp"
#include "lorentz.hpp"
#include "rng.hpp"

namespace weakconv {

namespace {

constexpr double kRelTol = 1e-9;

GroupFunction gaussian_function(const GroupPtr& g, Rng& rng) {
  std::vector<cplx> v(g->order());
  for (auto& z : v) z = rng.complex_gaussian();
  return GroupFunction(g, std::move(v));
}

}  // namespace

double default_upper_constant(double p) {
  require(std::isfinite(p) && p > 1.0, ErrorCode::InvalidArgument,
          "upper constant: p must lie in (1, inf)");
  return p / (p - 1.0);
}

double rayleigh_ratio(const ConvolutionOperator& op, const GroupFunction& f,
                      double p) {
  const double l1 = strong_norm(f, 1.0);
  require(l1 > 0.0, ErrorCode::DegenerateInput,
          "rayleigh_ratio: input function is zero");
  return weak_norm(op.apply(f), p) / l1;
}

std::vector<NormEstimate> estimate_many(const ConvolutionOperator& op,
                                        std::span<const double> ps,
                                        std::size_t n_random,
                                        std::uint64_t seed,
                                        double upper_constant) {
  require(!ps.empty(), ErrorCode::InvalidArgument,
          "estimate_many: no p values");
  const GroupPtr& g = op.group();
  const std::size_t n = g->order();

  std::vector<NormEstimate> out(ps.size());
  const Rearrangement kr = decreasing_rearrangement(op.kernel());
  const bool trivial = op.kernel().is_zero();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    NormEstimate& e = out[i];
    e.p = ps[i];
    e.trials = n_random;
    e.upper_constant =
        upper_constant > 0.0 ? upper_constant : default_upper_constant(ps[i]);
    e.kernel_weak_norm = weak_norm(kr, ps[i]);
    e.upper_bound = e.upper_constant * e.kernel_weak_norm;
    e.trivial = trivial;
  }
  if (trivial) {
    for (NormEstimate& e : out) {
      e.lower_bound_ok = true;
      e.sandwich_ok = true;
    }
    return out;
  }

  auto consider = [&](const GroupFunction& f, const char* kind) {
    const double l1 = strong_norm(f, 1.0);
    if (l1 == 0.0) return;  // a signed combination may cancel exactly
    const Rearrangement r = decreasing_rearrangement(op.apply(f));
    for (NormEstimate& e : out) {
      const double ratio = weak_norm(r, e.p) / l1;
      if (ratio > e.lower) {
        e.lower = ratio;
        e.witness = f;
        e.witness_kind = kind;
      }
    }
  };

  for (std::size_t y = 0; y < n; ++y)
    consider(GroupFunction::point_mass(g, static_cast<elem_t>(y)),
             "point_mass");

  Rng gauss_rng(mix_seed(seed, 1));
  for (std::size_t t = 0; t < n_random; ++t)
    consider(gaussian_function(g, gauss_rng), "gaussian");

  // +-1 combinations of distinct left translates of the kernel
  Rng sign_rng(mix_seed(seed, 2));
  const std::size_t m = std::min<std::size_t>(8, n);
  std::vector<elem_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t t = 0; t < n_random; ++t) {
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t j = i + sign_rng.below(n - i);
      std::swap(idx[i], idx[j]);
    }
    std::vector<cplx> acc(n, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
      const double sign = (sign_rng.next_u64() & 1u) ? 1.0 : -1.0;
      GroupFunction tr = op.kernel().translate_left(idx[i]);
      for (std::size_t x = 0; x < n; ++x) acc[x] += sign * tr[x];
    }
    consider(GroupFunction(g, std::move(acc)), "signed_translates");
  }

  for (NormEstimate& e : out) {
    e.lower_bound_ok = e.lower >= e.kernel_weak_norm * (1.0 - kRelTol);
    e.sandwich_ok = e.lower <= e.upper_bound * (1.0 + kRelTol);
  }
  return out;
}

NormEstimate estimate_operator_norm(const ConvolutionOperator& op, double p,
                                    std::size_t n_random, std::uint64_t seed,
                                    double upper_constant) {
  return std::move(
      estimate_many(op, std::span<const double>(&p, 1), n_random, seed,
                    upper_constant)
          .front());
}

double weak_young_ratio(const GroupFunction& k, const GroupFunction& f,
                        double p) {
  const double kw = weak_norm(k, p);
  require(kw > 0.0, ErrorCode::DegenerateInput,
          "weak_young_ratio: kernel has zero weak norm");
  const double f1 = strong_norm(f, 1.0);
  require(f1 > 0.0, ErrorCode::DegenerateInput,
          "weak_young_ratio: input function is zero");
  return weak_norm(convolve(k, f), p) / (kw * f1);
}

std::vector<WeakYoungStats> weak_young_sweep(const GroupPtr& g,
                                             std::span<const double> ps,
                                             std::size_t n_pairs,
                                             std::uint64_t seed) {
  require(g != nullptr, ErrorCode::InvalidArgument,
          "weak_young_sweep: null group");
  require(!ps.empty(), ErrorCode::InvalidArgument,
          "weak_young_sweep: no p values");
  std::vector<WeakYoungStats> out(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    out[i].p = ps[i];
    out[i].pairs = n_pairs;
    default_upper_constant(ps[i]);  // validates p
  }
  Rng rng(mix_seed(seed, 3));
  for (std::size_t pair = 0; pair < n_pairs; ++pair) {
    GroupFunction k = gaussian_function(g, rng);
    GroupFunction f = gaussian_function(g, rng);
    const Rearrangement kr = decreasing_rearrangement(k);
    const double f1 = strong_norm(f, 1.0);
    const Rearrangement cr = decreasing_rearrangement(convolve(k, f));
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const double ratio =
          weak_norm(cr, ps[i]) / (weak_norm(kr, ps[i]) * f1);
      if (ratio > out[i].max_ratio) {
        out[i].max_ratio = ratio;
        out[i].argmax_pair = pair;
      }
    }
  }
  return out;
}

KernelCharacterization characterize_kernel(const GroupFunction& k, double p,
                                           std::size_t n_random,
                                           std::uint64_t seed,
                                           double upper_constant) {
  KernelCharacterization rep;
  rep.p = p;
  rep.kernel_weak_norm = weak_norm(k, p);
  rep.trivial = k.is_zero();
  rep.left = estimate_operator_norm(ConvolutionOperator(k, Side::Left), p,
                                    n_random, seed, upper_constant);
  rep.right = estimate_operator_norm(ConvolutionOperator(k, Side::Right), p,
                                     n_random, seed, upper_constant);
  rep.ok = rep.left.lower_bound_ok && rep.left.sandwich_ok &&
           rep.right.lower_bound_ok && rep.right.sandwich_ok;
  return rep;
}

TheoremReport verify_theorem1(const GroupPtr& g, std::span<const double> ps,
                              std::size_t kernels, std::size_t trials,
                              std::size_t wy_pairs, std::uint64_t seed,
                              Side side, double upper_constant) {
  require(g != nullptr, ErrorCode::InvalidArgument,
          "verify_theorem1: null group");
  require(kernels >= 1, ErrorCode::InvalidArgument,
          "verify_theorem1: need at least one kernel");
  TheoremReport report;
  report.group = g;
  report.seed = seed;
  report.trials = trials;
  report.kernel_count = kernels;
  report.side = side;
  report.runs.resize(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    report.runs[i].p = ps[i];
    report.runs[i].upper_constant =
        upper_constant > 0.0 ? upper_constant : default_upper_constant(ps[i]);
    report.runs[i].kernels_ok = true;
  }

  Rng kernel_rng(mix_seed(seed, 4));
  for (std::size_t kid = 0; kid < kernels; ++kid) {
    GroupFunction k = gaussian_function(g, kernel_rng);
    ConvolutionOperator op(k, side);
    auto ests =
        estimate_many(op, ps, trials, mix_seed(seed, 1000 + kid),
                      upper_constant);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const NormEstimate& e = ests[i];
      TheoremKernelSummary s;
      s.kernel_index = kid;
      s.kernel_weak_norm = e.kernel_weak_norm;
      s.lower = e.lower;
      s.upper_bound = e.upper_bound;
      s.ratio = e.kernel_weak_norm > 0.0 ? e.lower / e.kernel_weak_norm : 1.0;
      s.witness_kind = e.witness_kind;
      s.lower_bound_ok = e.lower_bound_ok;
      s.sandwich_ok = e.sandwich_ok;
      if (!(s.lower_bound_ok && s.sandwich_ok))
        report.runs[i].kernels_ok = false;
      report.runs[i].kernels.push_back(std::move(s));
    }
  }

  const auto wy = weak_young_sweep(g, ps, wy_pairs, seed);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    TheoremRun& run = report.runs[i];
    run.weak_young_pairs = wy_pairs;
    run.weak_young_max = wy[i].max_ratio;
    run.weak_young_argmax = wy[i].argmax_pair;
    run.weak_young_ok = wy[i].max_ratio <= run.upper_constant + kRelTol;
    run.ok = run.kernels_ok && run.weak_young_ok;
  }
  report.all_ok = true;
  for (const TheoremRun& run : report.runs)
    if (!run.ok) report.all_ok = false;
  return report;
}

}  // namespace weakconv
