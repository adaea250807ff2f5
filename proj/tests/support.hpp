#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "glmn/partitions.hpp"

namespace testing_support {

using glmn::ColoredTuple;
using glmn::Rational;

// Seeded source of small random rationals; values handed out are globally distinct and
// avoid differences in {0, +-c, +-2c} so that no kernel used anywhere is evaluated at a pole.
class RationalSource {
 public:
  explicit RationalSource(std::uint64_t seed, Rational c = 1) : rng_(seed), c_(std::move(c)) {}

  Rational any(int span = 40, int max_den = 7) {
    std::uniform_int_distribution<int> num(-span, span), den(1, max_den);
    return Rational(num(rng_), den(rng_));
  }

  // The sampling window grows with the number of values handed out, so it never runs dry.
  Rational fresh() {
    while (true) {
      const int span = 50 + static_cast<int>(used_.size());
      std::uniform_int_distribution<int> den(1, 9);
      const int q = den(rng_);
      std::uniform_int_distribution<int> num(-span * q, span * q);
      Rational x(num(rng_), q);
      if (forbidden_.count(x.str())) continue;
      for (int k = -2; k <= 2; ++k) forbidden_.insert((x + Rational(k) * c_).str());
      used_.push_back(x);
      return x;
    }
  }

  ColoredTuple<Rational> tuple(const std::vector<int>& r) {
    std::vector<std::vector<Rational>> out;
    for (int k : r) {
      out.emplace_back();
      for (int i = 0; i < k; ++i) out.back().push_back(fresh());
    }
    return ColoredTuple<Rational>(std::move(out));
  }

  ColoredTuple<Rational> values_like(const std::vector<int>& r, int span = 9, int max_den = 4) {
    std::vector<std::vector<Rational>> out;
    for (int k : r) {
      out.emplace_back();
      for (int i = 0; i < k; ++i) out.back().push_back(any(span, max_den));
    }
    return ColoredTuple<Rational>(std::move(out));
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
  Rational c_;
  std::vector<Rational> used_;
  std::set<std::string> forbidden_;
};

}  // namespace testing_support
