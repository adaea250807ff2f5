#pragma once

#include <span>
#include <string>
#include <vector>

#include "glmn/field.hpp"

namespace glmn {

using IndexSet = std::vector<int>;  // 0-based positions inside one color

// N colored lists of parameters; colors are addressed 1..N, entries 1..r_nu.
template <Scalar S>
class ColoredTuple {
 public:
  ColoredTuple() = default;
  static ColoredTuple empty(int colors) { return ColoredTuple(std::vector<std::vector<S>>(static_cast<std::size_t>(colors))); }
  explicit ColoredTuple(std::vector<std::vector<S>> colors) : c_(std::move(colors)) {}
  ColoredTuple(std::initializer_list<std::vector<S>> colors) : c_(colors) {}

  int num_colors() const { return static_cast<int>(c_.size()); }
  int r(int nu) const { return static_cast<int>(color(nu).size()); }
  int total() const {
    int t = 0;
    for (const auto& v : c_) t += static_cast<int>(v.size());
    return t;
  }
  std::vector<int> cardinalities() const {
    std::vector<int> r;
    for (const auto& v : c_) r.push_back(static_cast<int>(v.size()));
    return r;
  }

  // Colors 0 and N+1 are the empty boundary sets.
  std::span<const S> color(int nu) const {
    if (nu == 0 || nu == num_colors() + 1) return {};
    check(nu);
    return c_[nu - 1];
  }
  std::vector<S>& mutable_color(int nu) {
    check(nu);
    return c_[nu - 1];
  }
  const S& at(int nu, int j) const {
    check(nu, j);
    return c_[nu - 1][j - 1];
  }
  S& at(int nu, int j) {
    check(nu, j);
    return c_[nu - 1][j - 1];
  }
  const std::vector<std::vector<S>>& colors() const { return c_; }

  ColoredTuple complement(int nu, int j) const {
    check(nu, j);
    ColoredTuple out = *this;
    auto& v = out.c_[nu - 1];
    v.erase(v.begin() + (j - 1));
    return out;
  }

  template <class Fn>
  auto map(Fn&& fn) const {
    using T = std::decay_t<decltype(fn(std::declval<const S&>()))>;
    std::vector<std::vector<T>> out;
    for (const auto& v : c_) {
      out.emplace_back();
      for (const auto& x : v) out.back().push_back(fn(x));
    }
    return ColoredTuple<T>(std::move(out));
  }

  friend bool operator==(const ColoredTuple& a, const ColoredTuple& b) { return a.c_ == b.c_; }

 private:
  void check(int nu) const {
    if (nu < 1 || nu > num_colors())
      fail(ErrorCode::IndexOutOfRange, "color " + std::to_string(nu) + " outside [1, " +
                                           std::to_string(num_colors()) + "]");
  }
  void check(int nu, int j) const {
    check(nu);
    if (j < 1 || j > static_cast<int>(c_[nu - 1].size()))
      fail(ErrorCode::IndexOutOfRange, "entry " + std::to_string(j) + " outside color " + std::to_string(nu) +
                                           " of size " + std::to_string(c_[nu - 1].size()));
  }
  std::vector<std::vector<S>> c_;
};

// Per color: the index sets of part I and part II.
struct Bipartition {
  std::vector<IndexSet> part_one;
  std::vector<IndexSet> part_two;
};

struct MatchedBipartition {
  Bipartition s;
  Bipartition t;
};

// All pairs with #s_I = #t_I in every color, in lexicographic order:
// colors vary slowest-first, inside a color by |I| then by combination order of s_I, then t_I.
std::vector<MatchedBipartition> enumerate_matched_bipartitions(std::span<const int> rs, std::span<const int> rt);

// Number of matched bipartitions, prod_nu sum_k C(r_nu,k)^2.
unsigned long long matched_bipartition_count(std::span<const int> r);

// One 0-based index per color of the inclusive range [first, last]; empty range gives one empty selection.
std::vector<std::vector<int>> enumerate_singleton_selections(std::span<const int> r, int first, int last);

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<IndexSet> combinations(int n, int k);

IndexSet complement_of(const IndexSet& part, int n);

template <Scalar S>
std::vector<S> select(std::span<const S> values, const IndexSet& idx) {
  std::vector<S> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(values[static_cast<std::size_t>(i)]);
  return out;
}

// Values of one color of `tup` picked by `idx`.
template <Scalar S>
std::vector<S> pick(const ColoredTuple<S>& tup, int nu, const IndexSet& idx) {
  return select(tup.color(nu), idx);
}

template <Scalar S>
ColoredTuple<S> pick_all(const ColoredTuple<S>& tup, const std::vector<IndexSet>& parts) {
  std::vector<std::vector<S>> out;
  for (int nu = 1; nu <= tup.num_colors(); ++nu) out.push_back(pick(tup, nu, parts[nu - 1]));
  return ColoredTuple<S>(std::move(out));
}

}  // namespace glmn
