#include "convolution.hpp"

#include <vector>

#include "errors.hpp"

namespace weakconv {

const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

Side side_from_name(const std::string& name) {
  if (name == "left") return Side::Left;
  if (name == "right") return Side::Right;
  fail(ErrorCode::InvalidArgument,
       "side must be \"left\" or \"right\", got \"" + name + "\"");
}

GroupFunction convolve(const GroupFunction& a, const GroupFunction& b) {
  require_same_group(a, b, "convolve");
  const GroupPtr& g = a.group();
  const std::size_t n = g->order();
  const double w = g->weight();
  std::vector<cplx> acc(n, cplx(0.0, 0.0));
  std::vector<elem_t> row(n);
  for (elem_t y = 0; y < n; ++y) {
    const cplx c = a[y] * w;
    if (c == cplx(0.0, 0.0)) continue;
    g->mul_row(g->inverse(y), row);
    for (std::size_t x = 0; x < n; ++x) acc[x] += c * b[row[x]];
  }
  return GroupFunction(g, std::move(acc));
}

GroupFunction ConvolutionOperator::apply(const GroupFunction& f) const {
  return side_ == Side::Left ? convolve(kernel_, f) : convolve(f, kernel_);
}

}  // namespace weakconv
