#include <doctest.h>

#include "glmn/partitions.hpp"

using namespace glmn;

TEST_CASE("matched bipartition counts") {
  std::vector<int> r1{1}, r2{2}, r11{1, 1}, r21{2, 1}, r3{3};
  CHECK(enumerate_matched_bipartitions(r1, r1).size() == 2);
  CHECK(enumerate_matched_bipartitions(r2, r2).size() == 6);
  CHECK(enumerate_matched_bipartitions(r11, r11).size() == 4);
  CHECK(enumerate_matched_bipartitions(r21, r21).size() == matched_bipartition_count(r21));
  CHECK(matched_bipartition_count(r3) == 20);
  std::vector<int> bad{1, 2};
  CHECK_THROWS_AS(enumerate_matched_bipartitions(r11, bad), Error);
}

TEST_CASE("bipartitions are matched and complementary") {
  std::vector<int> r{2, 1, 2};
  for (const auto& mb : enumerate_matched_bipartitions(r, r)) {
    for (std::size_t nu = 0; nu < r.size(); ++nu) {
      CHECK(mb.s.part_one[nu].size() == mb.t.part_one[nu].size());
      CHECK(mb.s.part_one[nu].size() + mb.s.part_two[nu].size() == static_cast<std::size_t>(r[nu]));
      CHECK(complement_of(mb.t.part_one[nu], r[nu]) == mb.t.part_two[nu]);
    }
  }
}

TEST_CASE("enumeration order is deterministic") {
  std::vector<int> r{2, 1};
  auto a = enumerate_matched_bipartitions(r, r), b = enumerate_matched_bipartitions(r, r);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].s.part_one == b[i].s.part_one);
    CHECK(a[i].t.part_one == b[i].t.part_one);
  }
  // first pair: everything in part II
  CHECK(a.front().s.part_one[0].empty());
}

TEST_CASE("singleton selections") {
  std::vector<int> r{2, 3};
  CHECK(enumerate_singleton_selections(r, 2, 2).size() == 3);
  std::vector<int> r22{2, 2};
  CHECK(enumerate_singleton_selections(r22, 1, 2).size() == 4);
  auto none = enumerate_singleton_selections(r22, 2, 1);
  REQUIRE(none.size() == 1);
  CHECK(none[0].empty());
  std::vector<int> r0{0, 2};
  try {
    (void)enumerate_singleton_selections(r0, 1, 2);
    FAIL("expected EmptyColor");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyColor);
  }
}

TEST_CASE("complement") {
  ColoredTuple<Rational> t(std::vector<std::vector<Rational>>{{1, 2}, {3}});
  CHECK(t.complement(1, 2) == ColoredTuple<Rational>(std::vector<std::vector<Rational>>{{1}, {3}}));
  CHECK(t.complement(2, 1).r(2) == 0);
  CHECK_THROWS_AS(t.complement(3, 1), Error);
  CHECK_THROWS_AS(t.complement(1, 3), Error);
  CHECK(t.color(0).empty());
  CHECK(t.color(3).empty());
}
