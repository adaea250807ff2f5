#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "glmn/gaudin.hpp"
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
    {1, 1, {1}},    {1, 1, {2}},       {1, 1, {3}},       {2, 1, {1, 1}}, {2, 1, {2, 1}}, {2, 1, {1, 2}},
    {1, 2, {1, 1}}, {1, 2, {2, 1}},    {1, 2, {1, 2}},    {2, 0, {2}},    {3, 0, {1, 1}}, {3, 0, {2, 1}},
    {2, 2, {1, 1, 1}}, {2, 2, {2, 1, 1}}, {1, 3, {1, 1, 1}}, {0, 3, {2, 1}},
};

// Leibniz expansion over all permutations.
Rational leibniz(const Matrix<Rational>& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inv += p[i] > p[j];
    Rational term(inv % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term *= a(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

}  // namespace

TEST_CASE("phi") {
  UnitAlpha u;
  CHECK(phi(Grading(2, 0, 1), T({{Rational(3)}}), u, 1, 1) == Rational(1));
  CHECK(phi(Grading(1, 1, 1), T({{Rational(3)}}), u, 1, 1) == Rational(1));
  ProductAlpha p(Grading(2, 0, 2), {{Rational(0), Rational(4)}});
  CHECK(phi(Grading(2, 0, 2), T({{Rational(1)}}), p, 1, 1) == Rational(1));

  RationalSource src(1);
  for (const auto& cs : kGrid) {
    Grading gr(cs.m, cs.n, Rational(3, 2));
    T t = src.tuple(cs.r);
    auto a = onshell_hermite(gr, t, src.values_like(cs.r));
    for (int mu = 1; mu <= gr.N(); ++mu)
      for (int j = 1; j <= t.r(mu); ++j) CHECK(phi(gr, t, *a, mu, j) == Rational(1));
  }
}

TEST_CASE("matrix structure") {
  SUBCASE("one parameter") {
    for (Grading gr : {Grading(1, 1, 1), Grading(2, 0, 1), Grading(0, 2, 1)}) {
      auto G = gaudin_matrix(gr, T({{Rational(4)}}), T({{Rational(7)}}));
      REQUIRE(G.entries.rows() == 1);
      CHECK(G.entries(0, 0) == Rational(7));
    }
  }
  SUBCASE("K vanishes on the odd color") {
    RationalSource src(2);
    Grading gr(1, 1, 1);
    for (int i = 0; i < 10; ++i) CHECK(korepin_k(gr, 1, src.fresh(), src.fresh()).is_zero());
    CHECK_FALSE(korepin_k(Grading(2, 1, 1), 1, Rational(0), Rational(5)).is_zero());
  }
  SUBCASE("row sums and block sparsity") {
    RationalSource src(3);
    for (const auto& cs : kGrid) {
      Grading gr(cs.m, cs.n, Rational(2, 3));
      T t = src.tuple(cs.r), X = src.values_like(cs.r);
      auto G = gaudin_matrix(gr, t, X);
      for (int mu = 1; mu <= gr.N(); ++mu)
        for (int j = 1; j <= t.r(mu); ++j) {
          Rational sum;
          for (std::size_t col = 0; col < G.entries.cols(); ++col) sum += G.entries(G.index(mu, j), col);
          CHECK(sum == X.at(mu, j));
          for (int nu = 1; nu <= gr.N(); ++nu)
            if (std::abs(nu - mu) > 1)
              for (int k = 1; k <= t.r(nu); ++k) CHECK(G.block(mu, nu, j, k).is_zero());
        }
    }
  }
  SUBCASE("adjacent-color coincidence is rejected") {
    Grading gr(2, 1, 1);
    CHECK_THROWS_AS(gaudin_matrix(gr, T({{Rational(0)}, {Rational(0)}}), T({{Rational(1)}, {Rational(1)}})), Error);
    CHECK_THROWS_AS(gaudin_matrix(gr, T({{Rational(0)}}), T({{Rational(1)}})), Error);
    CHECK_THROWS_AS(gaudin_matrix(gr, T({{Rational(0)}, {}}), T({{}, {Rational(1)}})), Error);
  }
}

TEST_CASE("explicit entries equal the logarithmic derivative") {
  RationalSource src(4);
  for (const auto& cs : kGrid) {
    Grading gr(cs.m, cs.n, 1);
    T t = src.tuple(cs.r);
    std::vector<AlphaPtr> families = {onshell_hermite(gr, t, src.values_like(cs.r))};
    std::vector<std::vector<Rational>> xi(static_cast<std::size_t>(gr.N()));
    for (auto& col : xi) col = {src.fresh(), src.fresh()};
    families.push_back(std::make_shared<ProductAlpha>(gr, xi));
    for (const auto& a : families) {
      const T X = extract_x(gr, t, *a);
      auto G = gaudin_matrix(gr, t, X);
      for (int mu = 1; mu <= gr.N(); ++mu)
        for (int j = 1; j <= t.r(mu); ++j)
          for (int nu = 1; nu <= gr.N(); ++nu)
            for (int k = 1; k <= t.r(nu); ++k)
              CHECK_MESSAGE(G.block(mu, nu, j, k) == gaudin_entry_by_derivative(gr, t, *a, mu, j, nu, k),
                            gr.str() << " (" << mu << "," << nu << ") j=" << j << " k=" << k);
    }
  }
}

TEST_CASE("X extracted from the product family matches its closed form") {
  RationalSource src(5);
  Grading gr(1, 2, 1);
  ProductAlpha p(gr, {{src.fresh()}, {src.fresh(), src.fresh()}});
  T t = src.tuple({2, 1});
  const T X = extract_x(gr, t, p);
  for (int mu = 1; mu <= 2; ++mu)
    for (int j = 1; j <= t.r(mu); ++j) CHECK(X.at(mu, j) == p.x_value(mu, t.at(mu, j)));
}

TEST_CASE("determinant") {
  RationalSource src(6);
  SUBCASE("r = 1 and X = 0") {
    CHECK(gaudin_det(gaudin_matrix(Grading(2, 1, 1), T({{Rational(2)}, {}}), T({{Rational(9)}, {}}))) == Rational(9));
    for (const auto& cs : kGrid) {
      Grading gr(cs.m, cs.n, 1);
      T t = src.tuple(cs.r);
      CHECK(gaudin_det(gaudin_matrix(gr, t, t.map([](const Rational&) { return Rational(0); }))).is_zero());
    }
  }
  SUBCASE("2x2 against cofactors") {
    Matrix<Rational> a(2, 2);
    a(0, 0) = Rational(7, 2);
    a(0, 1) = Rational(1, 3);
    a(1, 0) = Rational(-2, 5);
    a(1, 1) = Rational(4);
    CHECK(determinant(a) == a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0));
    CHECK(determinant(a) == Rational(7, 2) * 4 + Rational(2, 15));
  }
  SUBCASE("random matrices against Leibniz") {
    for (std::size_t n = 1; n <= 5; ++n)
      for (int rep = 0; rep < 4; ++rep) {
        Matrix<Rational> a(n, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) a(i, j) = rep == 3 && i == 0 ? Rational(0) : src.any(5, 3);
        CHECK(determinant(a) == leibniz(a));
      }
    Matrix<Rational> singular(3, 3);
    for (std::size_t j = 0; j < 3; ++j) {
      singular(0, j) = Rational(static_cast<long>(j) + 1);
      singular(1, j) = Rational(2 * static_cast<long>(j) + 2);
      singular(2, j) = Rational(5);
    }
    CHECK(determinant(singular).is_zero());
  }
  SUBCASE("complex LU tracks the exact value") {
    for (const auto& cs : kGrid) {
      Grading gr(cs.m, cs.n, 1);
      T t = src.tuple(cs.r), X = src.values_like(cs.r);
      const Rational exact = gaudin_det(gaudin_matrix(gr, t, X));
      auto to_c = [](const Rational& q) { return Complex(q.to_double()); };
      const Complex approx = gaudin_det(gaudin_matrix(gr, t.map(to_c), X.map(to_c)));
      CHECK((approx - Complex(exact.to_double())).abs() <= 1e-9 * (1.0 + std::abs(exact.to_double())));
    }
  }
}

TEST_CASE("Korepin criteria") {
  RationalSource src(7);
  for (const auto& cs : kGrid) {
    Grading gr(cs.m, cs.n, Rational(1, 2));
    T t = src.tuple(cs.r), X = src.values_like(cs.r);
    const auto rep = korepin_check(gr, t, X);
    CHECK_MESSAGE(rep.pass(), gr.str());
    CHECK(rep.failures.empty());
  }
  SUBCASE("modified X for gl(2|1), removing the color-1 parameter") {
    Grading gr(2, 1, 1);
    T t({{Rational(0)}, {Rational(5)}}), X({{Rational(3)}, {Rational(4)}});
    const T Xm = modified_x(gr, t, X, 1, 1);
    REQUIRE(Xm.r(1) == 0);
    // m = 2 = mu + 1: the J correction enters with a minus sign
    CHECK(Xm.at(2, 1) == Rational(4) - korepin_j(gr, 2, Rational(5), Rational(0)));
  }
}

TEST_CASE("norm right-hand side") {
  CHECK(norm_rhs(Grading(1, 1, 1), T({{Rational(2)}}), T({{Rational(5)}})) == Rational(5));
  CHECK(norm_rhs(Grading(2, 1, 1), T({{}, {Rational(2)}}), T({{}, {Rational(-3)}})) == Rational(-3));
  // gl(1|1), r = 2: prefactor g(t1,t2) g(t2,t1) = -c^2/(t1-t2)^2
  Grading gr(1, 1, 1);
  T t({{Rational(0), Rational(2)}}), X({{Rational(3), Rational(5)}});
  CHECK(norm_prefactor(gr, t) == Rational(-1, 4));
  CHECK(norm_rhs(gr, t, X) == Rational(-1, 4) * Rational(15));
}
