#pragma once

#include <vector>

#include "function.hpp"

namespace weakconv {

/// Decreasing rearrangement of |f|: values sorted descending (ties broken by
/// original index, zeros kept at the tail) with cumulative measures
/// W_i = sum of weights through position i.
struct Rearrangement {
  std::vector<double> values;
  std::vector<double> cumweights;
};

/// Lorentz space parameters: p strictly in (1, inf), q in (0, inf];
/// q = infinity selects the weak quasi-norm.
struct LorentzParams {
  double p;
  double q;
};

/// mu{ |f| > alpha }, strict inequality. alpha = 0 gives the measure of the
/// support.
double distribution_function(const GroupFunction& f, double alpha);

double distribution_function(const Rearrangement& r, double alpha);

Rearrangement decreasing_rearrangement(const GroupFunction& f);

/// Weak-L^p quasi-norm sup_{alpha>0} alpha * mu{|f|>alpha}^{1/p}, computed as
/// max_i v_i * W_i^{1/p} over the rearrangement (exact on finite measure
/// spaces).
double weak_norm(const GroupFunction& f, double p);
double weak_norm(const Rearrangement& r, double p);

/// L^{p,q} quasi-norm via the exact telescoping functional
/// (sum_i v_i^q (W_i^{q/p} - W_{i-1}^{q/p}))^{1/q}; q = inf delegates to
/// weak_norm.
double lorentz_norm(const GroupFunction& f, LorentzParams params);

/// Strong norm (sum |f|^p weight)^{1/p}, p >= 1.
double strong_norm(const GroupFunction& f, double p);

/// max |f(x)| over the group.
double sup_norm(const GroupFunction& f);

}  // namespace weakconv
