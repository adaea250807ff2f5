#include <doctest.h>

#include <algorithm>

#include "glmn/context.hpp"
#include "glmn/linalg.hpp"
#include "support.hpp"

using namespace glmn;
using testing_support::RationalSource;

namespace {

struct Case {
  int m, n;
  std::vector<int> r;
};

const std::vector<Case> kGrid = {
    {1, 1, {1}},       {1, 1, {2}},       {1, 1, {3}},       {2, 1, {1, 1}},    {2, 1, {2, 1}},
    {2, 1, {1, 2}},    {2, 1, {2, 2}},    {1, 2, {1, 1}},    {1, 2, {2, 1}},    {1, 2, {1, 2}},
    {2, 2, {1, 1, 1}}, {2, 2, {2, 1, 1}}, {2, 2, {1, 1, 2}}, {3, 0, {1, 1}},    {3, 0, {2, 1}},
    {3, 0, {1, 2}},    {2, 0, {2}},       {2, 0, {3}},       {0, 2, {2}},       {1, 3, {1, 1, 1}},
    {3, 1, {1, 1, 1}}, {0, 3, {1, 2}},
};

// Domain-wall partition function of the six-vertex model in determinant form.
Rational izergin(const std::vector<Rational>& x, const std::vector<Rational>& y, const Rational& c) {
  const std::size_t n = x.size();
  auto gk = [&](const Rational& a, const Rational& b) { return c / (a - b); };
  auto hk = [&](const Rational& a, const Rational& b) { return (a - b + c) / c; };
  Rational pre(1);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) pre *= gk(x[j], x[k]) * gk(y[k], y[j]);
  Matrix<Rational> m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      pre *= hk(x[j], y[k]);
      m(j, k) = gk(x[j], y[k]) / hk(x[j], y[k]);
    }
  return pre * determinant(m);
}

}  // namespace

TEST_CASE("gl(1|1) base values") {
  Context ctx;
  Grading gr(1, 1, 1);
  using T = ColoredTuple<Rational>;
  CHECK(ctx.hc_rational(gr, T({{2}}), T({{0}})) == Rational(1, 2));
  CHECK(ctx.hc_rational(gr, T({{3, 5}}), T({{0, 1}})) == Rational(1, 120));
}

TEST_CASE("gl(1|1) recursions reproduce the closed form") {
  Context ctx;
  RationalSource src(21);
  Grading gr(1, 1, Rational(2, 3));
  for (int r = 1; r <= 3; ++r) {
    auto s = src.tuple({r}), t = src.tuple({r});
    const Rational closed = ctx.hc_rational(gr, s, t);
    for (HcPath path : {HcPath::PeelFirst, HcPath::PeelLast})
      CHECK(ctx.hc_rational.eval(gr, s, t, HcOptions{path, false}) == closed);
  }
}

TEST_CASE("gl(2|0) equals the domain-wall determinant") {
  Context ctx;
  RationalSource src(8);
  for (int r = 1; r <= 4; ++r) {
    Grading gr(2, 0, 1);
    auto s = src.tuple({r}), t = src.tuple({r});
    std::vector<Rational> sv(s.color(1).begin(), s.color(1).end()), tv(t.color(1).begin(), t.color(1).end());
    CHECK(ctx.hc_rational(gr, s, t) == izergin(tv, sv, gr.c));
    CHECK(ctx.hc_rational.eval(gr, s, t, HcOptions{HcPath::PeelLast, true}) == izergin(tv, sv, gr.c));
  }
}

TEST_CASE("cross-recursion equality") {
  Context ctx;
  RationalSource src(1);
  for (const auto& cs : kGrid) {
    Grading gr(cs.m, cs.n, Rational(1));
    auto s = src.tuple(cs.r), t = src.tuple(cs.r);
    CAPTURE(gr.str());
    CHECK(ctx.hc_rational.eval(gr, s, t, {HcPath::PeelFirst, true}) ==
          ctx.hc_rational.eval(gr, s, t, {HcPath::PeelLast, false}));
  }
}

TEST_CASE("fixed element choice independence") {
  Context ctx;
  RationalSource src(2);
  for (const auto& cs : kGrid) {
    Grading gr(cs.m, cs.n, Rational(1));
    if (gr.m == 0) continue;
    auto s = src.tuple(cs.r), t = src.tuple(cs.r);
    const Rational ref = ctx.hc_rational(gr, s, t);
    CAPTURE(gr.str());
    for (int p = 1; p <= s.r(1); ++p) CHECK(ctx.hc_rational.peel_first(gr, s, t, p, {}) == ref);
    for (int p = 1; p <= t.r(gr.N()); ++p) CHECK(ctx.hc_rational.peel_last(gr, s, t, p, {}) == ref);
  }
}

TEST_CASE("reduction with an empty boundary color") {
  Context ctx;
  RationalSource src(4);
  // empty first color: gl(2|1) -> gl(1|1)
  auto s = src.tuple({0, 2}), t = src.tuple({0, 2});
  ColoredTuple<Rational> s2({s.colors()[1]}), t2({t.colors()[1]});
  CHECK(ctx.hc_rational(Grading(2, 1, 1), s, t) == ctx.hc_rational(Grading(1, 1, 1), s2, t2));
  // empty last color: gl(2|1) -> gl(2|0); gl(3|0) -> gl(2|0)
  auto u = src.tuple({2, 0}), v = src.tuple({2, 0});
  ColoredTuple<Rational> u2({u.colors()[0]}), v2({v.colors()[0]});
  CHECK(ctx.hc_rational(Grading(2, 1, 1), u, v) == ctx.hc_rational(Grading(2, 0, 1), u2, v2));
  CHECK(ctx.hc_rational(Grading(3, 0, 1), u, v) == ctx.hc_rational(Grading(2, 0, 1), u2, v2));
  // m = 0 is the c -> -c image of n = 0
  auto a = src.tuple({2, 1}), b = src.tuple({2, 1});
  CHECK(ctx.hc_rational(Grading(0, 3, 1), a, b) == ctx.hc_rational(Grading(3, 0, -1), a, b));
}

TEST_CASE("translation invariance and within-color symmetry") {
  Context ctx;
  RationalSource src(6);
  for (const auto& cs : kGrid) {
    if (std::accumulate(cs.r.begin(), cs.r.end(), 0) > 4) continue;
    Grading gr(cs.m, cs.n, Rational(1));
    auto s = src.tuple(cs.r), t = src.tuple(cs.r);
    const Rational ref = ctx.hc_rational(gr, s, t);
    const Rational a = src.any();
    auto shift = [&](const Rational& x) { return x + a; };
    CHECK(ctx.hc_rational(gr, s.map(shift), t.map(shift)) == ref);
    for (int nu = 1; nu <= gr.N(); ++nu) {
      auto sp = s;
      auto& col = sp.mutable_color(nu);
      std::sort(col.begin(), col.end());
      do {
        CHECK(ctx.hc_rational(gr, sp, t) == ref);
      } while (std::next_permutation(col.begin(), col.end()));
      auto tp = t;
      auto& tcol = tp.mutable_color(nu);
      std::reverse(tcol.begin(), tcol.end());
      CHECK(ctx.hc_rational(gr, s, tp) == ref);
    }
  }
}

TEST_CASE("residue property") {
  Context ctx;
  RationalSource src(9);
  using T = ColoredTuple<Rational>;
  auto r11 = z_residue_check(ctx.hc_eps, ctx.hc_rational, Grading(1, 1, 1), T({{5}}), T({{2}}), 1, 1);
  CHECK(r11.lhs == Rational(1));
  CHECK(r11.pass);
  for (const auto& cs : kGrid) {
    if (std::accumulate(cs.r.begin(), cs.r.end(), 0) > 4) continue;
    Grading gr(cs.m, cs.n, Rational(1));
    auto s = src.tuple(cs.r), t = src.tuple(cs.r);
    for (int mu = 1; mu <= gr.N(); ++mu)
      for (int j = 1; j <= t.r(mu); ++j) {
        auto rep = z_residue_check(ctx.hc_eps, ctx.hc_rational, gr, s, t, mu, j);
        CAPTURE(gr.str());
        CAPTURE(mu);
        CHECK(rep.lhs == rep.rhs);
        CHECK(rep.pass);
      }
  }
}

TEST_CASE("eps-field evaluation commutes with the limit") {
  Context ctx;
  RationalSource src(10);
  Grading gr(2, 1, 1);
  auto s = src.tuple({1, 2}), t = src.tuple({1, 2});
  auto lift = [](const Rational& q) { return EpsRational(q) + EpsRational::epsilon() * EpsRational(q); };
  CHECK(ctx.hc_eps(gr, s.map(lift), t.map(lift)).limit_at_zero() == ctx.hc_rational(gr, s, t));
}

TEST_CASE("memo statistics") {
  Context ctx;
  RationalSource src(12);
  Grading gr(2, 1, 1);
  auto s = src.tuple({2, 1}), t = src.tuple({2, 1});
  CHECK(ctx.hc_rational.stats().entries == 0);
  const Rational a = ctx.hc_rational(gr, s, t);
  const auto after_first = ctx.hc_rational.stats();
  CHECK(after_first.entries > 0);
  const Rational b = ctx.hc_rational(gr, s, t);
  CHECK(ctx.hc_rational.stats().hits == after_first.hits + 1);
  ctx.hc_rational.clear_memo();
  CHECK(ctx.hc_rational.stats().entries == 0);
  CHECK(ctx.hc_rational(gr, s, t) == a);
  CHECK(a == b);
}

TEST_CASE("instance validation") {
  Context ctx;
  using T = ColoredTuple<Rational>;
  try {
    (void)ctx.hc_rational(Grading(2, 1, 1), T({{1}, {2}}), T({{3, 4}, {5}}));
    FAIL("expected CardinalityMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CardinalityMismatch);
  }
  try {
    (void)ctx.hc_rational(Grading(1, 1, 1), T({{1}}), T({{1}}));
    FAIL("expected KernelPole");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::KernelPole);
  }
}
