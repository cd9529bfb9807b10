#include "function.hpp"

#include <cmath>

#include "errors.hpp"

namespace weakconv {

GroupFunction::GroupFunction(GroupPtr group, std::vector<cplx> values)
    : group_(std::move(group)), values_(std::move(values)) {
  require(group_ != nullptr, ErrorCode::InvalidArgument,
          "GroupFunction: null group");
  require(values_.size() == group_->order(), ErrorCode::Validation,
          "GroupFunction: " + std::to_string(values_.size()) +
              " values for a group of order " +
              std::to_string(group_->order()));
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i].real()) || !std::isfinite(values_[i].imag()))
      fail(ErrorCode::Validation,
           "GroupFunction: non-finite value at index " + std::to_string(i));
  }
}

GroupFunction GroupFunction::zero(GroupPtr group) {
  const std::size_t n = group->order();
  return GroupFunction(std::move(group), std::vector<cplx>(n, cplx{0.0, 0.0}));
}

GroupFunction GroupFunction::point_mass(GroupPtr group, elem_t at) {
  require(at < group->order(), ErrorCode::InvalidArgument,
          "point_mass: index out of range");
  std::vector<cplx> v(group->order(), cplx{0.0, 0.0});
  v[at] = cplx{1.0 / group->weight(), 0.0};
  return GroupFunction(std::move(group), std::move(v));
}

GroupFunction GroupFunction::indicator(GroupPtr group,
                                       std::span<const elem_t> support) {
  std::vector<cplx> v(group->order(), cplx{0.0, 0.0});
  for (const elem_t x : support) {
    require(x < group->order(), ErrorCode::InvalidArgument,
            "indicator: index out of range");
    v[x] = cplx{1.0, 0.0};
  }
  return GroupFunction(std::move(group), std::move(v));
}

GroupFunction GroupFunction::translate_left(elem_t y) const {
  const std::size_t n = size();
  std::vector<elem_t> row(n);
  group_->mul_row(group_->inverse(y), row);
  std::vector<cplx> v(n);
  for (std::size_t x = 0; x < n; ++x) v[x] = values_[row[x]];
  return GroupFunction(group_, std::move(v));
}

bool GroupFunction::is_zero() const {
  for (const cplx& v : values_)
    if (v != cplx{0.0, 0.0}) return false;
  return true;
}

GroupFunction linear_combination(cplx a, const GroupFunction& f, cplx b,
                                 const GroupFunction& g) {
  require_same_group(f, g, "linear_combination");
  std::vector<cplx> v(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) v[i] = a * f[i] + b * g[i];
  return GroupFunction(f.group(), std::move(v));
}

GroupFunction scale(cplx c, const GroupFunction& f) {
  std::vector<cplx> v(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) v[i] = c * f[i];
  return GroupFunction(f.group(), std::move(v));
}

void require_same_group(const GroupFunction& f, const GroupFunction& g,
                        const char* where) {
  if (f.group().get() != g.group().get())
    fail(ErrorCode::DomainMismatch,
         std::string(where) + ": functions live on different groups (" +
             f.group()->label() + " vs " + g.group()->label() + ")");
}

}  // namespace weakconv
