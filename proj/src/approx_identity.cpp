#include "approx_identity.hpp"

#include <cmath>
#include <numbers>

#include "convolution.hpp"
#include "errors.hpp"
#include "lorentz.hpp"

namespace weakconv {

namespace {

constexpr double kPi = std::numbers::pi;

double fejer_value(std::uint64_t order, double theta) {
  const double mp1 = static_cast<double>(order + 1);
  const double s = std::sin(kPi * theta);
  if (s == 0.0) return mp1;
  const double t = std::sin(kPi * mp1 * theta) / s;
  return t * t / mp1;
}

double discrete_integral(const GroupFunction& f) {
  const double w = f.group()->weight();
  cplx acc(0.0, 0.0);
  for (std::size_t i = 0; i < f.size(); ++i) acc += f[i];
  return (acc * w).real();
}

}  // namespace

ApproxIdentityFamily point_mass_identity(const GroupPtr& g) {
  require(g != nullptr, ErrorCode::InvalidArgument,
          "point_mass_identity: null group");
  ApproxIdentityFamily fam;
  fam.group = g;
  fam.kind = ApproxIdentityFamily::Kind::ExactPointMass;
  fam.epsilons = {0.0};
  fam.members.push_back(GroupFunction::point_mass(g, g->identity()));
  fam.l1_constant = 1.0;
  return fam;
}

ApproxIdentityFamily fejer_family(std::uint64_t grid_n,
                                  std::span<const std::uint64_t> orders) {
  require(!orders.empty(), ErrorCode::InvalidArgument,
          "fejer_family: no orders given");
  for (std::size_t i = 0; i + 1 < orders.size(); ++i)
    require(orders[i] < orders[i + 1], ErrorCode::InvalidArgument,
            "fejer_family: orders must be strictly increasing");
  GroupPtr g = MeasuredGroup::torus_grid(grid_n, 1);
  ApproxIdentityFamily fam;
  fam.group = g;
  fam.kind = ApproxIdentityFamily::Kind::Fejer;
  fam.l1_constant = 1.0;
  const std::size_t n = g->order();
  for (const std::uint64_t m : orders) {
    require(2 * m < grid_n, ErrorCode::InvalidArgument,
            "fejer_family: order " + std::to_string(m) + " aliases on a " +
                std::to_string(grid_n) + "-point grid (need M < N/2)");
    std::vector<cplx> v(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double theta =
          static_cast<double>(j) / static_cast<double>(grid_n);
      v[j] = cplx(fejer_value(m, theta), 0.0);
    }
    GroupFunction raw(g, std::move(v));
    // renormalize so the discrete integral is 1 (the sampled kernel is off
    // only by floating-point rounding)
    const double integral = discrete_integral(raw);
    fam.members.push_back(scale(cplx(1.0 / integral, 0.0), raw));
    fam.epsilons.push_back(1.0 / static_cast<double>(m + 1));
  }
  return fam;
}

std::vector<elem_t> theta_window(const GroupPtr& g, double radius) {
  require(g != nullptr, ErrorCode::InvalidArgument, "theta_window: null group");
  require(radius > 0.0, ErrorCode::InvalidArgument,
          "theta_window: radius must be positive");
  const auto& shape = g->grid_shape();
  require(!shape.empty(), ErrorCode::UnsupportedGroup,
          "theta_window: " + g->label() + " is not a grid group");
  std::vector<elem_t> out;
  const std::size_t n = g->order();
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t rest = x;
    double dist = 0.0;
    for (const std::uint64_t m : shape) {
      const std::size_t d = rest % m;
      rest /= m;
      const double axis =
          static_cast<double>(std::min(d, static_cast<std::size_t>(m) - d)) /
          static_cast<double>(m);
      dist = std::max(dist, axis);
    }
    if (dist < radius) out.push_back(static_cast<elem_t>(x));
  }
  return out;
}

Lemma1Report verify_lemma1(const ApproxIdentityFamily& family,
                           std::span<const std::vector<elem_t>> windows,
                           std::span<const GroupFunction> test_functions,
                           double p) {
  require(family.group != nullptr && !family.members.empty(),
          ErrorCode::InvalidArgument, "verify_lemma1: empty family");
  require(std::isfinite(p) && p >= 1.0, ErrorCode::InvalidArgument,
          "verify_lemma1: p must lie in [1, inf)");
  if (family.kind == ApproxIdentityFamily::Kind::Fejer)
    require(family.members.size() >= 3, ErrorCode::DegenerateInput,
            "verify_lemma1: need at least 3 members to judge decrease, got " +
                std::to_string(family.members.size()));
  const GroupPtr& g = family.group;
  const std::size_t n = g->order();
  const double w = g->weight();
  for (const auto& f : test_functions)
    require_same_group(f, family.members.front(), "verify_lemma1");
  std::vector<std::vector<bool>> in_window(windows.size(),
                                           std::vector<bool>(n, false));
  for (std::size_t v = 0; v < windows.size(); ++v)
    for (const elem_t x : windows[v]) {
      require(x < n, ErrorCode::InvalidArgument,
              "verify_lemma1: window index out of range");
      in_window[v][x] = true;
    }

  Lemma1Report report;
  report.p = p;
  for (const auto& win : windows) report.window_sizes.push_back(win.size());

  for (std::size_t m = 0; m < family.members.size(); ++m) {
    const GroupFunction& delta = family.members[m];
    Lemma1MemberStats stats;
    stats.epsilon = family.epsilons[m];
    stats.l1_norm = strong_norm(delta, 1.0);
    stats.integral = discrete_integral(delta);
    for (std::size_t v = 0; v < windows.size(); ++v) {
      double tail = 0.0;
      for (std::size_t x = 0; x < n; ++x)
        if (!in_window[v][x]) tail += std::abs(delta[x]) * w;
      stats.tail_mass.push_back(tail);
    }
    for (const auto& f : test_functions) {
      GroupFunction conv = convolve(f, delta);
      std::vector<cplx> diff(n);
      for (std::size_t i = 0; i < n; ++i) diff[i] = conv[i] - f[i];
      GroupFunction d(g, std::move(diff));
      stats.lp_deviation.push_back(strong_norm(d, p));
      stats.sup_deviation.push_back(sup_norm(d));
    }
    report.members.push_back(std::move(stats));
  }

  report.integrals_ok = true;
  report.l1_ok = true;
  for (const auto& s : report.members) {
    if (std::abs(s.integral - 1.0) > 1e-12) report.integrals_ok = false;
    if (s.l1_norm > family.l1_constant + 1e-12) report.l1_ok = false;
  }
  report.tails_decreasing = true;
  report.deviations_decreasing = true;
  for (std::size_t m = 0; m + 1 < report.members.size(); ++m) {
    const auto& a = report.members[m];
    const auto& b = report.members[m + 1];
    for (std::size_t v = 0; v < windows.size(); ++v)
      if (!(b.tail_mass[v] < a.tail_mass[v])) report.tails_decreasing = false;
    for (std::size_t t = 0; t < test_functions.size(); ++t)
      if (!(b.lp_deviation[t] < a.lp_deviation[t]))
        report.deviations_decreasing = false;
  }
  report.ok = report.integrals_ok && report.l1_ok &&
              report.tails_decreasing && report.deviations_decreasing;
  return report;
}

}  // namespace weakconv
