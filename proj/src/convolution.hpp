#pragma once

#include "function.hpp"

namespace weakconv {

// Which side the kernel acts on.  Left means T f = k * f, right means
// T f = f * k.  The two differ exactly when the group is nonabelian.
enum class Side { Left, Right };

const char* side_name(Side s);
Side side_from_name(const std::string& name);

// (a * b)(x) = sum_y a(y) b(y^{-1} x) * weight, y ascending.
GroupFunction convolve(const GroupFunction& a, const GroupFunction& b);

class ConvolutionOperator {
 public:
  ConvolutionOperator(GroupFunction kernel, Side side)
      : kernel_(std::move(kernel)), side_(side) {}

  const GroupFunction& kernel() const { return kernel_; }
  Side side() const { return side_; }
  const GroupPtr& group() const { return kernel_.group(); }

  GroupFunction apply(const GroupFunction& f) const;

 private:
  GroupFunction kernel_;
  Side side_;
};

}  // namespace weakconv
