#pragma once

#include "glmn/highest_coefficient.hpp"

namespace glmn {

// Per-session evaluation state: HC memo tables and the worker count.
struct Context {
  HighestCoefficient<Rational> hc_rational;
  HighestCoefficient<EpsRational> hc_eps;
  HighestCoefficient<Complex> hc_complex;
  int threads = 1;

  template <Scalar S>
  const HighestCoefficient<S>& hc() const {
    if constexpr (std::same_as<S, Rational>) return hc_rational;
    else if constexpr (std::same_as<S, EpsRational>) return hc_eps;
    else return hc_complex;
  }

  MemoStats memo_stats() const {
    MemoStats out;
    for (const MemoStats& s : {hc_rational.stats(), hc_eps.stats(), hc_complex.stats()}) {
      out.hits += s.hits;
      out.misses += s.misses;
      out.entries += s.entries;
    }
    return out;
  }
  void clear_memo() {
    hc_rational.clear_memo();
    hc_eps.clear_memo();
    hc_complex.clear_memo();
  }
};

}  // namespace glmn
