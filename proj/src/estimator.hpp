#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "convolution.hpp"
#include "function.hpp"

namespace weakconv {

// Default upper-bound constant C_p = p/(p-1); the sharpest constant the
// weak-Young bound guarantees here.  Overridable in the estimators.
double default_upper_constant(double p);

// weak_norm(op(f), p) / ||f||_1; the quantity whose sup over f is the
// operator norm L^1 -> L^{p,inf}.
double rayleigh_ratio(const ConvolutionOperator& op, const GroupFunction& f,
                      double p);

struct NormEstimate {
  double p = 0.0;
  std::size_t trials = 0;
  double kernel_weak_norm = 0.0;
  double upper_constant = 0.0;  // C_p in use
  double upper_bound = 0.0;     // C_p * kernel_weak_norm
  double lower = 0.0;           // best ratio found: certified lower bound
  std::optional<GroupFunction> witness;
  std::string witness_kind = "none";  // point_mass | gaussian | signed_translates
  bool trivial = false;               // zero kernel
  bool lower_bound_ok = false;        // lower >= kernel_weak_norm (rel 1e-9)
  bool sandwich_ok = false;           // lower <= upper_bound (rel 1e-9)
};

// One estimate per requested p, sharing every probe convolution across the
// p values.  Probes: every point mass (these alone certify
// lower >= kernel_weak_norm exactly), n_random complex-Gaussian functions,
// and n_random random +-1 combinations of up to 8 distinct translates of the
// kernel.  Deterministic for fixed seed; `lower` is nondecreasing in
// n_random for a fixed seed.  upper_constant = 0 selects p/(p-1).
std::vector<NormEstimate> estimate_many(const ConvolutionOperator& op,
                                        std::span<const double> ps,
                                        std::size_t n_random,
                                        std::uint64_t seed,
                                        double upper_constant = 0.0);

NormEstimate estimate_operator_norm(const ConvolutionOperator& op, double p,
                                    std::size_t n_random, std::uint64_t seed,
                                    double upper_constant = 0.0);

// weak_norm(k*f, p) / (weak_norm(k, p) * ||f||_1); <= C_p by the weak-Young
// inequality, = 1 when f is a point mass.
double weak_young_ratio(const GroupFunction& k, const GroupFunction& f,
                        double p);

struct WeakYoungStats {
  double p = 0.0;
  std::size_t pairs = 0;
  double max_ratio = 0.0;
  std::size_t argmax_pair = 0;
};

// Empirical maximum of weak_young_ratio over n_pairs seeded Gaussian (k, f)
// pairs, evaluated for every p on shared convolutions.
std::vector<WeakYoungStats> weak_young_sweep(const GroupPtr& g,
                                             std::span<const double> ps,
                                             std::size_t n_pairs,
                                             std::uint64_t seed);

// Both convolution sides of one kernel, estimated independently.
struct KernelCharacterization {
  double p = 0.0;
  double kernel_weak_norm = 0.0;
  bool trivial = false;
  NormEstimate left;
  NormEstimate right;
  bool ok = false;
};

KernelCharacterization characterize_kernel(const GroupFunction& k, double p,
                                           std::size_t n_random,
                                           std::uint64_t seed,
                                           double upper_constant = 0.0);

struct TheoremKernelSummary {
  std::size_t kernel_index = 0;
  double kernel_weak_norm = 0.0;
  double lower = 0.0;
  double upper_bound = 0.0;
  double ratio = 1.0;  // lower / kernel_weak_norm
  std::string witness_kind;
  bool lower_bound_ok = false;
  bool sandwich_ok = false;
};

struct TheoremRun {
  double p = 0.0;
  double upper_constant = 0.0;
  std::vector<TheoremKernelSummary> kernels;
  std::size_t weak_young_pairs = 0;
  double weak_young_max = 0.0;
  std::size_t weak_young_argmax = 0;
  bool kernels_ok = false;
  bool weak_young_ok = false;
  bool ok = false;
};

struct TheoremReport {
  GroupPtr group;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t kernel_count = 0;
  Side side = Side::Left;
  std::vector<TheoremRun> runs;  // one per p
  bool all_ok = false;
};

// The full empirical statement on one group: for `kernels` random kernels
// the sandwich kernel_weak_norm <= estimate <= C_p * kernel_weak_norm holds
// for every p, and the weak-Young sweep over wy_pairs random pairs never
// exceeds C_p.  Deterministic for fixed seed.
TheoremReport verify_theorem1(const GroupPtr& g, std::span<const double> ps,
                              std::size_t kernels, std::size_t trials,
                              std::size_t wy_pairs, std::uint64_t seed,
                              Side side = Side::Left,
                              double upper_constant = 0.0);

}  // namespace weakconv
