#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "function.hpp"

namespace weakconv {

// A family of normalized kernels delta_eps indexed by a decreasing scale
// parameter.  Discrete groups get the exact single-member family (delta at
// the identity); torus grids get Fejer kernels, where eps = 1/(M+1) for
// order M.  Every member integrates to 1 and is nonnegative, so the L1
// constant c is 1.
struct ApproxIdentityFamily {
  enum class Kind { ExactPointMass, Fejer };

  GroupPtr group;
  Kind kind = Kind::ExactPointMass;
  std::vector<double> epsilons;
  std::vector<GroupFunction> members;
  double l1_constant = 1.0;
};

ApproxIdentityFamily point_mass_identity(const GroupPtr& g);

// Fejer kernels F_M sampled on torus_grid(grid_n, 1) and renormalized so the
// discrete integral is 1.  Orders must be strictly increasing and each must
// satisfy M < grid_n/2 so the kernel is resolved on the grid.
ApproxIdentityFamily fejer_family(std::uint64_t grid_n,
                                  std::span<const std::uint64_t> orders);

// Indices within normalized distance < radius of the identity, using the
// per-axis torus metric; for 1-d grids this is the window |theta| < radius.
std::vector<elem_t> theta_window(const GroupPtr& g, double radius);

struct Lemma1MemberStats {
  double epsilon = 0.0;
  double l1_norm = 0.0;
  double integral = 0.0;
  std::vector<double> tail_mass;      // integral of |delta| outside each window
  std::vector<double> lp_deviation;   // ||f * delta - f||_p per test function
  std::vector<double> sup_deviation;  // sup |f * delta - f| per test function
};

struct Lemma1Report {
  double p = 1.0;
  std::vector<std::size_t> window_sizes;
  std::vector<Lemma1MemberStats> members;
  bool integrals_ok = false;     // every member integrates to 1 within 1e-12
  bool l1_ok = false;            // every L1 norm <= c + 1e-12
  bool tails_decreasing = false; // strict decrease along members, per window
  bool deviations_decreasing = false;  // strict decrease, per test function
  bool ok = false;
};

// Evaluates the approximate-identity properties member by member.  Fejer
// families need >= 3 members so the decrease flags are meaningful; the exact
// point-mass family is a single member and is exempt.
Lemma1Report verify_lemma1(const ApproxIdentityFamily& family,
                           std::span<const std::vector<elem_t>> windows,
                           std::span<const GroupFunction> test_functions,
                           double p);

}  // namespace weakconv
