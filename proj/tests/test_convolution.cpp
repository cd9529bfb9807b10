#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "convolution.hpp"
#include "errors.hpp"
#include "function.hpp"
#include "group.hpp"
#include "lorentz.hpp"
#include "rng.hpp"

using namespace weakconv;

namespace {

GroupFunction random_function(const GroupPtr& g, Rng& rng) {
  std::vector<cplx> v(g->order());
  for (auto& z : v) z = rng.complex_gaussian();
  return GroupFunction(g, std::move(v));
}

// Integer-valued random function: convolutions over weight-1 groups stay
// exactly representable, so equality checks can be bitwise.
GroupFunction random_int_function(const GroupPtr& g, Rng& rng) {
  std::vector<cplx> v(g->order());
  for (auto& z : v)
    z = cplx(static_cast<double>(rng.below(7)) - 3.0,
             static_cast<double>(rng.below(7)) - 3.0);
  return GroupFunction(g, std::move(v));
}

double max_abs_diff(const GroupFunction& a, const GroupFunction& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("point mass is the convolution identity") {
  Rng rng(5);
  for (const auto& g :
       {MeasuredGroup::cyclic(9), MeasuredGroup::dihedral(4),
        MeasuredGroup::torus_grid(16, 1), MeasuredGroup::symmetric(4)}) {
    auto delta = GroupFunction::point_mass(g, g->identity());
    for (int t = 0; t < 20; ++t) {
      auto f = random_function(g, rng);
      auto left = convolve(delta, f);
      auto right = convolve(f, delta);
      for (std::size_t i = 0; i < f.size(); ++i) {
        CHECK(left[i] == f[i]);  // bitwise: dyadic weights
        CHECK(right[i] == f[i]);
      }
    }
  }
}

TEST_CASE("point masses convolve by the group law") {
  auto g = MeasuredGroup::cyclic(4);
  for (elem_t a = 0; a < 4; ++a) {
    for (elem_t b = 0; b < 4; ++b) {
      auto d = convolve(GroupFunction::point_mass(g, a),
                        GroupFunction::point_mass(g, b));
      auto expect = GroupFunction::point_mass(g, (a + b) % 4);
      for (std::size_t i = 0; i < 4; ++i) CHECK(d[i] == expect[i]);
    }
  }
}

TEST_CASE("three-term hand expansion on cyclic(3)") {
  auto g = MeasuredGroup::cyclic(3);
  auto f = GroupFunction(g, {cplx(1, 0), cplx(0, 0), cplx(0, 0)});
  auto k = GroupFunction(g, {cplx(0, 0), cplx(1, 0), cplx(0, 0)});
  auto fk = convolve(f, k);  // f * k
  CHECK(fk[0] == cplx(0, 0));
  CHECK(fk[1] == cplx(1, 0));
  CHECK(fk[2] == cplx(0, 0));
}

TEST_CASE("noncommutative witness on symmetric(3)") {
  auto g = MeasuredGroup::symmetric(3);
  // delta_2 * delta_1 = delta_{mul(2,1)} = delta_3 but reversed gives delta_4
  auto a = GroupFunction::point_mass(g, 2);
  auto b = GroupFunction::point_mass(g, 1);
  auto ab = convolve(a, b);
  auto ba = convolve(b, a);
  CHECK(ab[3] == cplx(1, 0));
  CHECK(ba[4] == cplx(1, 0));
  CHECK(ab[4] == cplx(0, 0));
  CHECK(max_abs_diff(ab, ba) == 1.0);

  ConvolutionOperator left(a, Side::Left);
  ConvolutionOperator right(a, Side::Right);
  CHECK(max_abs_diff(left.apply(b), right.apply(b)) == 1.0);
}

TEST_CASE("left and right coincide on abelian groups") {
  auto g = MeasuredGroup::cyclic(12);
  Rng rng(13);
  for (int t = 0; t < 25; ++t) {
    auto k = random_int_function(g, rng);
    auto f = random_int_function(g, rng);
    auto kf = convolve(k, f);
    auto fk = convolve(f, k);
    CHECK(max_abs_diff(kf, fk) == 0.0);  // integer grid, weight 1: exact
  }
}

TEST_CASE("operator dispatch and group mismatch") {
  auto g = MeasuredGroup::cyclic(5);
  auto h = MeasuredGroup::cyclic(6);
  Rng rng(1);
  auto k = random_function(g, rng);
  ConvolutionOperator op(k, Side::Left);
  CHECK(op.side() == Side::Left);
  auto f = random_function(g, rng);
  auto via_op = op.apply(f);
  auto direct = convolve(k, f);
  CHECK(max_abs_diff(via_op, direct) == 0.0);

  auto wrong = random_function(h, rng);
  CHECK_THROWS_AS(op.apply(wrong), Error);
  CHECK_THROWS_AS(convolve(k, wrong), Error);
}

TEST_CASE("linearity") {
  auto g = MeasuredGroup::dihedral(5);
  Rng rng(21);
  auto k = random_function(g, rng);
  for (Side side : {Side::Left, Side::Right}) {
    ConvolutionOperator op(k, side);
    for (int t = 0; t < 10; ++t) {
      auto f = random_function(g, rng);
      auto h = random_function(g, rng);
      const cplx a = rng.complex_gaussian();
      const cplx b = rng.complex_gaussian();
      auto lhs = op.apply(linear_combination(a, f, b, h));
      auto rhs = linear_combination(a, op.apply(f), b, op.apply(h));
      const double scale = strong_norm(lhs, 1.0) + 1.0;
      CHECK(max_abs_diff(lhs, rhs) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("Young inequality for L1") {
  Rng rng(31);
  for (const auto& g :
       {MeasuredGroup::cyclic(20), MeasuredGroup::torus_grid(8, 2)}) {
    for (int t = 0; t < 100; ++t) {
      auto k = random_function(g, rng);
      auto f = random_function(g, rng);
      const double lhs = strong_norm(convolve(k, f), 1.0);
      const double rhs = strong_norm(k, 1.0) * strong_norm(f, 1.0);
      CHECK(lhs <= rhs * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("associativity") {
  Rng rng(41);
  for (const auto& g : {MeasuredGroup::symmetric(4),  // order 24
                        MeasuredGroup::dihedral(6), MeasuredGroup::cyclic(24)}) {
    for (int t = 0; t < 10; ++t) {
      auto k = random_function(g, rng);
      auto f = random_function(g, rng);
      auto h = random_function(g, rng);
      auto lhs = convolve(convolve(k, f), h);
      auto rhs = convolve(k, convolve(f, h));
      const double scale =
          strong_norm(k, 1.0) * strong_norm(f, 1.0) * strong_norm(h, 1.0) + 1.0;
      CHECK(max_abs_diff(lhs, rhs) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("convolving with a point mass translates the kernel") {
  Rng rng(51);
  for (const auto& g : {MeasuredGroup::symmetric(4), MeasuredGroup::dihedral(6),
                        MeasuredGroup::torus_grid(16, 1)}) {
    auto k = random_function(g, rng);
    const elem_t n = static_cast<elem_t>(g->order());
    for (elem_t y = 0; y < n; ++y) {
      auto out = convolve(k, GroupFunction::point_mass(g, y));
      for (elem_t x = 0; x < n; ++x) {
        CHECK(out[x] == k[g->mul(x, g->inverse(y))]);  // exact
      }
    }
  }
}
