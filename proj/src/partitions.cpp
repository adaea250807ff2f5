#include "glmn/partitions.hpp"

namespace glmn {

std::vector<IndexSet> combinations(int n, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > n) return out;
  IndexSet cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

IndexSet complement_of(const IndexSet& part, int n) {
  IndexSet out;
  std::size_t p = 0;
  for (int i = 0; i < n; ++i) {
    if (p < part.size() && part[p] == i) ++p;
    else out.push_back(i);
  }
  return out;
}

namespace {
struct ColorChoice {
  IndexSet s_one, s_two, t_one, t_two;
};

std::vector<ColorChoice> color_choices(int r) {
  std::vector<ColorChoice> out;
  for (int k = 0; k <= r; ++k) {
    auto subsets = combinations(r, k);
    for (const auto& a : subsets)
      for (const auto& b : subsets)
        out.push_back({a, complement_of(a, r), b, complement_of(b, r)});
  }
  return out;
}
}  // namespace

std::vector<MatchedBipartition> enumerate_matched_bipartitions(std::span<const int> rs, std::span<const int> rt) {
  if (rs.size() != rt.size())
    fail(ErrorCode::CardinalityMismatch, "s and t have different numbers of colors");
  for (std::size_t i = 0; i < rs.size(); ++i)
    if (rs[i] != rt[i])
      fail(ErrorCode::CardinalityMismatch, "color " + std::to_string(i + 1) + ": #s = " + std::to_string(rs[i]) +
                                               ", #t = " + std::to_string(rt[i]));
  std::vector<std::vector<ColorChoice>> per;
  for (int r : rs) per.push_back(color_choices(r));

  std::vector<MatchedBipartition> out;
  out.reserve(matched_bipartition_count(rs));
  std::vector<std::size_t> odo(per.size(), 0);
  while (true) {
    MatchedBipartition mb;
    for (std::size_t nu = 0; nu < per.size(); ++nu) {
      const auto& ch = per[nu][odo[nu]];
      mb.s.part_one.push_back(ch.s_one);
      mb.s.part_two.push_back(ch.s_two);
      mb.t.part_one.push_back(ch.t_one);
      mb.t.part_two.push_back(ch.t_two);
    }
    out.push_back(std::move(mb));
    std::size_t pos = per.size();
    while (pos > 0) {
      --pos;
      if (++odo[pos] < per[pos].size()) break;
      odo[pos] = 0;
      if (pos == 0) return out;
    }
    if (per.empty()) return out;
  }
}

unsigned long long matched_bipartition_count(std::span<const int> r) {
  unsigned long long total = 1;
  for (int n : r) {
    unsigned long long sum = 0, binom = 1;
    for (int k = 0; k <= n; ++k) {
      sum += binom * binom;
      binom = binom * static_cast<unsigned long long>(n - k) / static_cast<unsigned long long>(k + 1);
    }
    total *= sum;
  }
  return total;
}

std::vector<std::vector<int>> enumerate_singleton_selections(std::span<const int> r, int first, int last) {
  std::vector<std::vector<int>> out;
  if (last < first) {
    out.emplace_back();
    return out;
  }
  if (first < 1 || last > static_cast<int>(r.size()))
    fail(ErrorCode::IndexOutOfRange, "singleton color range [" + std::to_string(first) + ", " +
                                         std::to_string(last) + "] outside [1, " + std::to_string(r.size()) + "]");
  for (int nu = first; nu <= last; ++nu)
    if (r[nu - 1] == 0) fail(ErrorCode::EmptyColor, "color " + std::to_string(nu) + " is empty");
  std::vector<int> cur(static_cast<std::size_t>(last - first + 1), 0);
  while (true) {
    out.push_back(cur);
    int pos = static_cast<int>(cur.size()) - 1;
    while (pos >= 0) {
      if (++cur[pos] < r[first - 1 + pos]) break;
      cur[pos] = 0;
      --pos;
    }
    if (pos < 0) return out;
  }
}

}  // namespace glmn
