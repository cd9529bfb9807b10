#pragma once

#include <complex>
#include <span>
#include <vector>

#include "group.hpp"

namespace weakconv {

using cplx = std::complex<double>;

/// A complex-valued function on a MeasuredGroup; immutable after
/// construction. All values must be finite.
class GroupFunction {
 public:
  GroupFunction(GroupPtr group, std::vector<cplx> values);

  static GroupFunction zero(GroupPtr group);

  /// Value 1/weight at one point, 0 elsewhere, so the L1 norm is 1. This is
  /// the normalized point mass used by the approximate-identity and probe
  /// machinery.
  static GroupFunction point_mass(GroupPtr group, elem_t at);

  static GroupFunction indicator(GroupPtr group,
                                 std::span<const elem_t> support);

  const GroupPtr& group() const { return group_; }
  std::span<const cplx> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const cplx& operator[](std::size_t i) const { return values_[i]; }

  /// Left translation L_y f(x) = f(y^-1 x).
  GroupFunction translate_left(elem_t y) const;

  bool is_zero() const;

 private:
  GroupPtr group_;
  std::vector<cplx> values_;
};

/// Pointwise a*f + b*g; the functions must live on the same group.
GroupFunction linear_combination(cplx a, const GroupFunction& f, cplx b,
                                 const GroupFunction& g);

GroupFunction scale(cplx c, const GroupFunction& f);

/// Throws DomainMismatch unless both functions share one group instance.
void require_same_group(const GroupFunction& f, const GroupFunction& g,
                        const char* where);

}  // namespace weakconv
