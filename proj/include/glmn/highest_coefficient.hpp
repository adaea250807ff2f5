#pragma once

#include <atomic>
#include <cstdint>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "glmn/kernels.hpp"
#include "glmn/partitions.hpp"

namespace glmn {

enum class HcPath {
  PeelFirst,  // recursion on the first color, reducing m when it empties
  PeelLast,   // recursion on the last color, reducing n (then m) when it empties
};

struct HcOptions {
  HcPath path = HcPath::PeelFirst;
  bool closed_form_gl11 = true;  // use Z = g(s,t) directly for gl(1|1)
};

struct MemoStats {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::uint64_t entries = 0;
};

template <Scalar S>
class HighestCoefficient {
 public:
  using Colors = std::vector<std::vector<S>>;

  HighestCoefficient() = default;
  HighestCoefficient(const HighestCoefficient&) = delete;
  HighestCoefficient& operator=(const HighestCoefficient&) = delete;

  S operator()(const Grading& gr, const ColoredTuple<S>& s, const ColoredTuple<S>& t) const {
    return eval(gr, s, t, HcOptions{});
  }
  S eval(const Grading& gr, const ColoredTuple<S>& s, const ColoredTuple<S>& t, HcOptions opts) const;

  // A single recursion step with an explicit fixed element (1-based position in s^1, resp. t^N);
  // the sub-instances use `inner`.
  S peel_first(const Grading& gr, const ColoredTuple<S>& s, const ColoredTuple<S>& t, int pivot,
               HcOptions inner) const;
  S peel_last(const Grading& gr, const ColoredTuple<S>& s, const ColoredTuple<S>& t, int pivot,
              HcOptions inner) const;

  MemoStats stats() const;
  void clear_memo();

  // Internal entry on raw 0-based colors; no validation.
  S z(const Grading& gr, const Colors& s, const Colors& t, const HcOptions& opts) const;

 private:
  S dispatch(const Grading& gr, const Colors& s, const Colors& t, const HcOptions& opts) const;
  S rec_first(const Grading& gr, const Colors& s, const Colors& t, std::size_t pivot, const HcOptions& opts) const;
  S rec_last(const Grading& gr, const Colors& s, const Colors& t, std::size_t pivot, const HcOptions& opts) const;

  mutable std::shared_mutex mu_;
  mutable std::unordered_map<std::string, S> memo_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

void validate_hc_instance(const Grading& gr, int s_colors, int t_colors, std::span<const int> rs,
                          std::span<const int> rt);

struct ResidueReport {
  bool pass = false;
  Rational lhs;  // lim eps * Z with s^mu_j = t^mu_j + eps
  Rational rhs;  // prescribed residue
};

// Residue of Z at s^mu_j -> t^mu_j; the value of s^mu_j in `s` is ignored.
ResidueReport z_residue_check(const HighestCoefficient<EpsRational>& hc_eps, const HighestCoefficient<Rational>& hc,
                              const Grading& gr, const ColoredTuple<Rational>& s, const ColoredTuple<Rational>& t,
                              int mu, int j);

extern template class HighestCoefficient<Rational>;
extern template class HighestCoefficient<EpsRational>;
extern template class HighestCoefficient<Complex>;

}  // namespace glmn
