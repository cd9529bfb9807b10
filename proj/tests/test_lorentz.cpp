#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "errors.hpp"
#include "function.hpp"
#include "group.hpp"
#include "lorentz.hpp"
#include "rng.hpp"

using namespace weakconv;

namespace {

GroupFunction make(const GroupPtr& g, std::initializer_list<double> vals) {
  std::vector<cplx> v;
  for (double x : vals) v.emplace_back(x, 0.0);
  return GroupFunction(g, std::move(v));
}

GroupFunction random_function(const GroupPtr& g, Rng& rng) {
  std::vector<cplx> v(g->order());
  for (auto& z : v) z = rng.complex_gaussian();
  return GroupFunction(g, std::move(v));
}

// Independent oracle: sup over the alpha grid of alpha*mu{|f|>alpha}^{1/p},
// sampling just below each attained |f| value.
double brute_force_weak_norm(const GroupFunction& f, double p) {
  double best = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double a = std::abs(f[i]) * (1.0 - 1e-9);
    if (a <= 0.0) continue;
    best = std::max(best, a * std::pow(distribution_function(f, a), 1.0 / p));
  }
  return best;
}

}  // namespace

TEST_CASE("distribution function") {
  auto g = MeasuredGroup::cyclic(4);
  auto f = make(g, {4, 2, 1, 0});
  CHECK(distribution_function(f, 1.5) == 2.0);
  CHECK(distribution_function(f, 4.0) == 0.0);  // strict inequality
  CHECK(distribution_function(f, 0.0) == 3.0);  // support measure

  auto z = GroupFunction::zero(g);
  CHECK(distribution_function(z, 0.0) == 0.0);
  CHECK(distribution_function(z, 10.0) == 0.0);

  auto g8 = MeasuredGroup::cyclic(8);
  const elem_t sup[] = {1, 4, 6};
  auto ind = GroupFunction::indicator(g8, sup);
  CHECK(distribution_function(ind, 0.5) == 3.0);

  CHECK_THROWS_AS(distribution_function(f, -1.0), Error);
}

TEST_CASE("decreasing rearrangement") {
  auto g3 = MeasuredGroup::cyclic(3);
  auto r = decreasing_rearrangement(make(g3, {3, 1, 2}));
  CHECK(r.values == std::vector<double>{3, 2, 1});
  CHECK(r.cumweights == std::vector<double>{1, 2, 3});

  auto rt = decreasing_rearrangement(make(g3, {1, 1, 1}));
  CHECK(rt.values == std::vector<double>{1, 1, 1});
  CHECK(rt.cumweights == std::vector<double>{1, 2, 3});

  auto t4 = MeasuredGroup::torus_grid(4, 1);
  auto rg = decreasing_rearrangement(make(t4, {0, 2, 0, 2}));
  CHECK(rg.values == std::vector<double>{2, 2, 0, 0});
  CHECK(rg.cumweights == std::vector<double>{0.25, 0.5, 0.75, 1.0});

  // distribution function computed from the rearrangement matches the
  // original at random thresholds
  auto g = MeasuredGroup::dihedral(5);
  Rng rng(3);
  auto f = random_function(g, rng);
  auto rr = decreasing_rearrangement(f);
  for (int t = 0; t < 100; ++t) {
    const double a = 3.0 * rng.uniform01();
    CHECK(distribution_function(rr, a) == distribution_function(f, a));
  }
}

TEST_CASE("weak norm") {
  auto g3 = MeasuredGroup::cyclic(3);
  auto f = make(g3, {4, 2, 1});
  CHECK(weak_norm(f, 2.0) == 4.0);

  // single point of weight 1
  auto g8 = MeasuredGroup::cyclic(8);
  const elem_t one[] = {5};
  CHECK(weak_norm(GroupFunction::indicator(g8, one), 3.0) == 1.0);

  // indicator of measure m has weak norm m^{1/p} = strong norm
  const elem_t four[] = {0, 2, 5, 7};
  auto ind = GroupFunction::indicator(g8, four);
  CHECK(weak_norm(ind, 2.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(weak_norm(ind, 2.0) ==
        doctest::Approx(strong_norm(ind, 2.0)).epsilon(1e-14));

  CHECK_THROWS_AS(weak_norm(f, 1.0), Error);
  CHECK_THROWS_AS(weak_norm(f, 0.5), Error);
  CHECK_THROWS_AS(weak_norm(f, std::numeric_limits<double>::infinity()),
                  Error);
}

TEST_CASE("weak norm agrees with brute-force sup") {
  Rng rng(17);
  for (const auto& g :
       {MeasuredGroup::cyclic(97), MeasuredGroup::torus_grid(16, 2),
        MeasuredGroup::symmetric(4)}) {
    for (double p : {4.0 / 3.0, 2.0, 3.0}) {
      for (int t = 0; t < 20; ++t) {
        auto f = random_function(g, rng);
        const double exact = weak_norm(f, p);
        const double brute = brute_force_weak_norm(f, p);
        CHECK(exact == doctest::Approx(brute).epsilon(1e-9));
        CHECK(exact >= brute * (1.0 - 1e-12));
      }
    }
  }
}

TEST_CASE("lorentz norm") {
  auto g2 = MeasuredGroup::cyclic(2);
  auto g3 = MeasuredGroup::cyclic(3);

  CHECK(lorentz_norm(make(g2, {2, 1}), {2.0, 2.0}) ==
        doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));

  const double expect_21 = 4.0 + 2.0 * (std::sqrt(2.0) - 1.0) +
                           (std::sqrt(3.0) - std::sqrt(2.0));
  CHECK(lorentz_norm(make(g3, {4, 2, 1}), {2.0, 1.0}) ==
        doctest::Approx(expect_21).epsilon(1e-15));

  // indicator of measure m -> m^{1/p} for any q (telescoping collapses)
  auto g8 = MeasuredGroup::cyclic(8);
  const elem_t sup[] = {1, 2, 3};
  auto ind = GroupFunction::indicator(g8, sup);
  for (double q : {0.5, 1.0, 2.0, 7.0}) {
    CHECK(lorentz_norm(ind, {3.0, q}) ==
          doctest::Approx(std::pow(3.0, 1.0 / 3.0)).epsilon(1e-14));
  }

  // q = infinity delegates to the weak norm
  const double inf = std::numeric_limits<double>::infinity();
  auto f = make(g3, {4, 2, 1});
  CHECK(lorentz_norm(f, {2.0, inf}) == weak_norm(f, 2.0));

  CHECK_THROWS_AS(lorentz_norm(f, {1.0, 1.0}), Error);
  CHECK_THROWS_AS(lorentz_norm(f, {2.0, 0.0}), Error);
  CHECK_THROWS_AS(lorentz_norm(f, {2.0, -1.0}), Error);
}

TEST_CASE("lorentz norm with q = p matches the strong norm") {
  Rng rng(23);
  for (const auto& g :
       {MeasuredGroup::cyclic(50), MeasuredGroup::torus_grid(32, 1)}) {
    for (double p : {1.5, 2.0, 3.0}) {
      for (int t = 0; t < 10; ++t) {
        auto f = random_function(g, rng);
        CHECK(lorentz_norm(f, {p, p}) ==
              doctest::Approx(strong_norm(f, p)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("strong norm") {
  auto g2 = MeasuredGroup::cyclic(2);
  CHECK(strong_norm(make(g2, {3, 4}), 2.0) == 5.0);

  auto g4 = MeasuredGroup::cyclic(4);
  CHECK(strong_norm(make(g4, {1, 1, 1, 1}), 2.0) == 2.0);

  auto t8 = MeasuredGroup::torus_grid(8, 1);
  CHECK(strong_norm(GroupFunction::point_mass(t8, 3), 1.0) == 1.0);

  CHECK_THROWS_AS(strong_norm(make(g2, {1, 1}), 0.5), Error);
}

TEST_CASE("norm inequalities and invariances") {
  Rng rng(29);
  auto g = MeasuredGroup::dihedral(8);
  for (double p : {4.0 / 3.0, 2.0, 3.0}) {
    for (int t = 0; t < 50; ++t) {
      auto f = random_function(g, rng);
      auto h = random_function(g, rng);

      // Chebyshev
      CHECK(weak_norm(f, p) <= strong_norm(f, p) * (1.0 + 1e-12));
      // weak norm below the (p,q) norm for q <= p
      CHECK(weak_norm(f, p) <= lorentz_norm(f, {p, 1.0}) * (1.0 + 1e-12));
      // scaling
      CHECK(weak_norm(scale(cplx(-2.5, 0.0), f), p) ==
            doctest::Approx(2.5 * weak_norm(f, p)).epsilon(1e-14));
      // translation invariance is exact: same multiset of values
      const elem_t y = static_cast<elem_t>(rng.below(g->order()));
      CHECK(weak_norm(f.translate_left(y), p) == weak_norm(f, p));
      // quasi-triangle
      auto s = linear_combination(cplx(1, 0), f, cplx(1, 0), h);
      CHECK(weak_norm(s, p) <=
            2.0 * (weak_norm(f, p) + weak_norm(h, p)) * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("sup norm") {
  auto g3 = MeasuredGroup::cyclic(3);
  CHECK(sup_norm(make(g3, {-4, 2, 1})) == 4.0);
  CHECK(sup_norm(GroupFunction::zero(g3)) == 0.0);
}
