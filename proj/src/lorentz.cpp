#include "lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "errors.hpp"

namespace weakconv {

namespace {

void check_p(double p, const char* where) {
  require(std::isfinite(p) && p > 1.0, ErrorCode::InvalidArgument,
          std::string(where) + ": p must lie in (1, inf)");
}

}  // namespace

double distribution_function(const GroupFunction& f, double alpha) {
  require(alpha >= 0.0 && !std::isnan(alpha), ErrorCode::InvalidArgument,
          "distribution_function: alpha must be nonnegative");
  const double w = f.group()->weight();
  double measure = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (std::abs(f[i]) > alpha) measure += w;
  }
  return measure;
}

double distribution_function(const Rearrangement& r, double alpha) {
  require(alpha >= 0.0 && !std::isnan(alpha), ErrorCode::InvalidArgument,
          "distribution_function: alpha must be nonnegative");
  // Values are sorted descending: the superlevel set is a prefix.
  double measure = 0.0;
  for (std::size_t i = 0; i < r.values.size() && r.values[i] > alpha; ++i)
    measure = r.cumweights[i];
  return measure;
}

Rearrangement decreasing_rearrangement(const GroupFunction& f) {
  const std::size_t n = f.size();
  const double w = f.group()->weight();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> mags(n);
  for (std::size_t i = 0; i < n; ++i) mags[i] = std::abs(f[i]);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return mags[a] > mags[b];  // ties keep index order
                   });
  Rearrangement r;
  r.values.resize(n);
  r.cumweights.resize(n);
  double cum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    r.values[i] = mags[order[i]];
    cum += w;
    r.cumweights[i] = cum;
  }
  return r;
}

double weak_norm(const GroupFunction& f, double p) {
  check_p(p, "weak_norm");
  return weak_norm(decreasing_rearrangement(f), p);
}

double weak_norm(const Rearrangement& r, double p) {
  check_p(p, "weak_norm");
  const double inv_p = 1.0 / p;
  double best = 0.0;
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    if (r.values[i] == 0.0) break;  // tail of zeros cannot contribute
    best = std::max(best, r.values[i] * std::pow(r.cumweights[i], inv_p));
  }
  return best;
}

double lorentz_norm(const GroupFunction& f, LorentzParams params) {
  check_p(params.p, "lorentz_norm");
  require(params.q > 0.0 && !std::isnan(params.q), ErrorCode::InvalidArgument,
          "lorentz_norm: q must lie in (0, inf]");
  if (std::isinf(params.q)) return weak_norm(f, params.p);
  const Rearrangement r = decreasing_rearrangement(f);
  const double e = params.q / params.p;
  double sum = 0.0;
  double prev = 0.0;  // W_0^{q/p} = 0
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    const double cur = std::pow(r.cumweights[i], e);
    if (r.values[i] > 0.0)
      sum += std::pow(r.values[i], params.q) * (cur - prev);
    prev = cur;
  }
  return std::pow(sum, 1.0 / params.q);
}

double strong_norm(const GroupFunction& f, double p) {
  require(std::isfinite(p) && p >= 1.0, ErrorCode::InvalidArgument,
          "strong_norm: p must lie in [1, inf)");
  const double w = f.group()->weight();
  double sum = 0.0;
  if (p == 1.0) {
    for (std::size_t i = 0; i < f.size(); ++i) sum += std::abs(f[i]) * w;
    return sum;
  }
  for (std::size_t i = 0; i < f.size(); ++i)
    sum += std::pow(std::abs(f[i]), p) * w;
  return std::pow(sum, 1.0 / p);
}

double sup_norm(const GroupFunction& f) {
  double best = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    best = std::max(best, std::abs(f[i]));
  return best;
}

}  // namespace weakconv
