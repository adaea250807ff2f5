#include <doctest.h>

#include "glmn/field.hpp"
#include "support.hpp"

using namespace glmn;

namespace {
EpsRational poly(std::vector<long> c) {
  std::vector<Rational> q;
  for (long x : c) q.emplace_back(x);
  return EpsRational(EpsPoly(q), EpsPoly(Rational(1)));
}
EpsRational ratio(std::vector<long> n, std::vector<long> d) {
  std::vector<Rational> a, b;
  for (long x : n) a.emplace_back(x);
  for (long x : d) b.emplace_back(x);
  return EpsRational(EpsPoly(a), EpsPoly(b));
}
}  // namespace

TEST_CASE("rational arithmetic and parsing") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("1.5"), Error);
  CHECK_THROWS_AS(Rational::parse(""), Error);
}

TEST_CASE("rational field axioms on samples") {
  testing_support::RationalSource src(11);
  for (int i = 0; i < 200; ++i) {
    Rational a = src.any(), b = src.any(), c = src.any();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * (Rational(1) / a) == Rational(1));
    CHECK(a - a == Rational(0));
  }
}

TEST_CASE("eps rational canonical form") {
  // (e^2 - 1)/(e - 1) = e + 1
  EpsRational r = ratio({-1, 0, 1}, {-1, 1});
  CHECK(r == poly({1, 1}));
  CHECK(r.den().degree() == 0);
  // monic denominator
  EpsRational q = ratio({1}, {4, 2});
  CHECK(q.den().lead() == Rational(1));
  CHECK(q.num().coeff(0) == Rational(1, 2));
  // normalizing again changes nothing
  CHECK(EpsRational(q.num(), q.den()) == q);
  CHECK_THROWS_AS(q / EpsRational(), Error);
}

TEST_CASE("limit at zero") {
  CHECK(ratio({6, 2}, {3, 1}).limit_at_zero() == Rational(2));
  CHECK(ratio({0, 1, 1}, {0, 1}).limit_at_zero() == Rational(1));
  try {
    (void)ratio({1}, {0, 1}).limit_at_zero();
    FAIL("expected a pole");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PoleAtZero);
  }
}

TEST_CASE("embed and pointwise evaluation") {
  CHECK(embed<EpsRational>(Rational(3, 4)) == poly({}) + EpsRational(Rational(3, 4)));
  CHECK(ratio({1, 1}, {-2, 1}).eval(Rational(0)) == Rational(-1, 2));
  try {
    (void)ratio({1}, {-2, 1}).eval(Rational(2));
    FAIL("expected a pole");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PoleAtPoint);
  }
}

TEST_CASE("eps field axioms and limit multiplicativity on samples") {
  testing_support::RationalSource src(5);
  auto random_fn = [&]() {
    std::vector<Rational> n, d;
    for (int i = 0; i < 3; ++i) n.push_back(src.any(9, 3));
    d.push_back(src.any(9, 3));
    if (d[0].is_zero()) d[0] = Rational(1);
    d.push_back(src.any(9, 3));
    return EpsRational(EpsPoly(n), EpsPoly(d));
  };
  for (int i = 0; i < 40; ++i) {
    EpsRational a = random_fn(), b = random_fn(), c = random_fn();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a / a == EpsRational(Rational(1)));
    CHECK((a * b).limit_at_zero() == a.limit_at_zero() * b.limit_at_zero());
  }
}

TEST_CASE("first-order expansion at zero") {
  // (1 + 2e) / (1 - e) = 1 + 3e + ...
  auto [v, d] = ratio({1, 2}, {1, -1}).taylor1_at_zero();
  CHECK(v == Rational(1));
  CHECK(d == Rational(3));
}

TEST_CASE("complex values") {
  Complex a(1.0, 2.0), b(3.0, -1.0);
  CHECK((a * b).re() == doctest::Approx(5.0));
  CHECK((a * b).im() == doctest::Approx(5.0));
  CHECK_THROWS_AS(a / Complex(0.0), Error);
  CHECK_THROWS_AS(Complex(std::nan(""), 0.0), Error);
}
