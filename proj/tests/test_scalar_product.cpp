#include <doctest.h>

#include <algorithm>

#include "glmn/scalar_product.hpp"
#include "support.hpp"

using namespace glmn;
using testing_support::RationalSource;
using T = ColoredTuple<Rational>;

namespace {

struct Case {
  int m, n;
  std::vector<int> r;
};

const std::vector<Case> kGrid = {
    {1, 1, {1}},       {1, 1, {2}},    {1, 1, {3}},    {2, 1, {1, 1}}, {2, 1, {2, 1}}, {2, 1, {1, 2}},
    {1, 2, {1, 1}},    {1, 2, {2, 1}}, {1, 2, {1, 2}}, {2, 0, {2}},    {3, 0, {1, 1}}, {3, 0, {2, 1}},
    {2, 2, {1, 1, 1}}, {2, 2, {2, 1, 1}}, {0, 2, {2}}, {0, 3, {1, 1}},
};

ProductAlpha random_product(RationalSource& src, const Grading& gr) {
  std::vector<std::vector<Rational>> xi(static_cast<std::size_t>(gr.N()));
  for (auto& col : xi)
    for (int i = 0; i < 2; ++i) col.push_back(src.fresh());
  return ProductAlpha(gr, std::move(xi));
}

}  // namespace

TEST_CASE("gl(1|1) single parameter") {
  Context ctx;
  RationalSource src(2);
  Grading gr(1, 1, Rational(5, 3));
  for (int i = 0; i < 5; ++i) {
    auto alpha = random_product(src, gr);
    const Rational s = src.fresh(), t = src.fresh();
    const Rational sp = scalar_product(ctx, gr, T({{s}}), T({{t}}), alpha);
    CHECK(sp == kernel_g(gr.c, s, t) * (alpha.eval(1, s) - alpha.eval(1, t)));
    // (-1)^[2] g(s,t) (alpha(t) - alpha(s)) with [2] = 1
    CHECK(sp == -kernel_g(gr.c, s, t) * (alpha.eval(1, t) - alpha.eval(1, s)));
  }
}

TEST_CASE("sum with alpha = 1 vanishes") {
  Context ctx;
  RationalSource src(3);
  CHECK(prop_zero_sum(ctx, Grading(1, 1, 1), T({{Rational(2)}}), T({{Rational(7)}})).is_zero());
  int count = 0;
  for (const auto& cs : kGrid) {
    Grading gr(cs.m, cs.n, src.fresh() + Rational(1, 11));
    for (int rep = 0; rep < 2; ++rep, ++count) {
      T s = src.tuple(cs.r), t = src.tuple(cs.r);
      CHECK_MESSAGE(prop_zero_sum(ctx, gr, s, t).is_zero(), gr.str());
    }
  }
  CHECK(count >= 20);
}

TEST_CASE("plain and hat formulations agree") {
  Context ctx;
  RationalSource src(4);
  int count = 0;
  for (const auto& cs : kGrid) {
    Grading gr(cs.m, cs.n, 1);
    for (int rep = 0; rep < 2; ++rep, ++count) {
      T s = src.tuple(cs.r), t = src.tuple(cs.r);
      auto alpha = random_product(src, gr);
      const Rational plain = scalar_product(ctx, gr, s, t, alpha, Formulation::Plain);
      CHECK_MESSAGE(plain == scalar_product(ctx, gr, s, t, alpha, Formulation::Hat), gr.str());
      if (rep == 0) {
        auto h = onshell_hermite(gr, t, src.values_like(cs.r));
        CHECK(scalar_product(ctx, gr, s, t, *h, Formulation::Plain) ==
              scalar_product(ctx, gr, s, t, *h, Formulation::Hat));
      }
    }
  }
  CHECK(count >= 20);
}

TEST_CASE("within-color permutation invariance") {
  Context ctx;
  RationalSource src(5);
  for (const Case& cs : {Case{1, 1, {3}}, Case{2, 1, {2, 2}}, Case{3, 0, {2, 1}}, Case{1, 2, {1, 2}}}) {
    Grading gr(cs.m, cs.n, 1);
    T s = src.tuple(cs.r), t = src.tuple(cs.r);
    auto alpha = random_product(src, gr);
    const Rational ref = scalar_product(ctx, gr, s, t, alpha);
    for (int nu = 1; nu <= gr.N(); ++nu) {
      T sp = s, tp = t;
      auto& sc = sp.mutable_color(nu);
      auto& tc = tp.mutable_color(nu);
      std::reverse(sc.begin(), sc.end());
      CHECK(scalar_product(ctx, gr, sp, t, alpha) == ref);
      std::rotate(tc.begin(), tc.begin() + (tc.empty() ? 0 : 1), tc.end());
      CHECK(scalar_product(ctx, gr, s, tp, alpha) == ref);
    }
  }
}

TEST_CASE("thread count does not change the result") {
  RationalSource src(6);
  Grading gr(2, 2, Rational(1, 2));
  T s = src.tuple({2, 1, 1}), t = src.tuple({2, 1, 1});
  auto alpha = random_product(src, gr);
  Context serial;
  const Rational ref = scalar_product(serial, gr, s, t, alpha);
  for (int threads : {2, 3, 8}) {
    Context par;
    par.threads = threads;
    CHECK(scalar_product(par, gr, s, t, alpha) == ref);
  }
}

TEST_CASE("complex evaluation tracks the exact value") {
  Context ctx;
  RationalSource src(7);
  Grading gr(2, 1, 1);
  T s = src.tuple({2, 1}), t = src.tuple({2, 1});
  auto alpha = random_product(src, gr);
  const Rational exact = scalar_product(ctx, gr, s, t, alpha);
  auto to_c = [](const Rational& q) { return Complex(q.to_double()); };
  const Complex approx = scalar_product(ctx, gr, s.map(to_c), t.map(to_c), alpha);
  CHECK((approx - Complex(exact.to_double())).abs() <= 1e-9 * (1.0 + std::abs(exact.to_double())));
}

TEST_CASE("norm limit") {
  Context ctx;
  RationalSource src(8);
  SUBCASE("gl(1|1) single parameter gives X") {
    Grading gr(1, 1, 1);
    for (int x : {5, -3, 0}) {
      T t({{src.fresh()}});
      auto a = onshell_hermite(gr, t, T({{Rational(x)}}));
      CHECK(norm_limit(ctx, gr, t, *a) == Rational(x));
    }
  }
  SUBCASE("independent of regulator directions") {
    for (const auto& cs : {Case{1, 1, {2}}, Case{2, 1, {1, 1}}, Case{2, 0, {2}}, Case{1, 2, {2, 1}}}) {
      Grading gr(cs.m, cs.n, 1);
      T t = src.tuple(cs.r);
      auto a = onshell_hermite(gr, t, src.values_like(cs.r));
      const Rational ref = norm_limit(ctx, gr, t, *a);
      long k = 7;
      T kappa = t.map([&k](const Rational&) { return Rational(k--) / Rational(3); });
      CHECK(norm_limit(ctx, gr, t, *a, kappa) == ref);
    }
  }
  SUBCASE("vanishes at X = 0") {
    for (const auto& cs : {Case{1, 1, {2}}, Case{2, 1, {2, 1}}, Case{3, 0, {1, 1}}}) {
      Grading gr(cs.m, cs.n, 1);
      T t = src.tuple(cs.r);
      auto a = onshell_hermite(gr, t, t.map([](const Rational&) { return Rational(0); }));
      CHECK(norm_limit(ctx, gr, t, *a).is_zero());
    }
  }
  SUBCASE("normalized norm equals the Gaudin determinant") {
    for (const auto& cs : kGrid) {
      if (cs.r.size() > 2 && cs.m + cs.n > 3) continue;
      Grading gr(cs.m, cs.n, 1);
      T t = src.tuple(cs.r), X = src.values_like(cs.r);
      auto a = onshell_hermite(gr, t, X);
      CHECK_MESSAGE(normalized_norm(ctx, gr, t, *a) == gaudin_det(gaudin_matrix(gr, t, X)), gr.str());
      CHECK(norm_limit(ctx, gr, t, *a) == norm_rhs(gr, t, X));
    }
  }
  SUBCASE("regulator validation") {
    Grading gr(1, 1, 1);
    T t({{Rational(1), Rational(4)}});
    UnitAlpha u;
    CHECK_THROWS_AS(norm_limit(ctx, gr, t, u, T({{Rational(1), Rational(0)}})), Error);
    CHECK_THROWS_AS(norm_limit(ctx, gr, t, u, T({{Rational(2), Rational(2)}})), Error);
    CHECK_THROWS_AS(norm_limit(ctx, gr, t, u, T({{Rational(2)}})), Error);
  }
}

TEST_CASE("derivative in X recursion") {
  Context ctx;
  RationalSource src(9);
  for (const auto& cs : {Case{1, 1, {2}}, Case{2, 1, {1, 1}}, Case{2, 0, {2}}, Case{1, 2, {1, 1}}, Case{2, 1, {2, 1}}}) {
    Grading gr(cs.m, cs.n, 1);
    T t = src.tuple(cs.r), X = src.values_like(cs.r);
    for (int mu = 1; mu <= gr.N(); ++mu)
      for (int j = 1; j <= t.r(mu); ++j) {
        const auto rep = x_derivative_check(ctx, gr, t, X, mu, j);
        CHECK_MESSAGE(rep.lhs == rep.rhs, gr.str() << " mu=" << mu << " j=" << j);
        CHECK(rep.second_difference.is_zero());
        CHECK(rep.reduced_onshell);
        CHECK(rep.pass());
      }
  }
}

TEST_CASE("input validation") {
  Context ctx;
  Grading gr(2, 1, 1);
  UnitAlpha u;
  auto catch_code = [&](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ConfigError;
  };
  CHECK(catch_code([&] { scalar_product(ctx, gr, T({{Rational(1)}}), T({{Rational(2)}}), u); }) ==
        ErrorCode::ColoringMismatch);
  CHECK(catch_code([&] {
          scalar_product(ctx, gr, T({{Rational(1)}, {}}), T({{Rational(2)}, {Rational(3)}}), u);
        }) == ErrorCode::CardinalityMismatch);
  CHECK(catch_code([&] {
          scalar_product(ctx, gr, T({{Rational(1), Rational(1)}, {}}), T({{Rational(2), Rational(3)}, {}}), u);
        }) == ErrorCode::InvalidArgument);
  // a coincidence between s and t off the regulated diagonal hits a pole, with the bipartition named
  try {
    scalar_product(ctx, gr, T({{Rational(1)}, {Rational(5)}}), T({{Rational(1)}, {Rational(9)}}), u);
    FAIL("expected a pole");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::KernelPole);
    CHECK(std::string(e.what()).find("bipartition") != std::string::npos);
  }
}
