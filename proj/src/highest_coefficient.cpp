#include "glmn/highest_coefficient.hpp"

#include <mutex>

namespace glmn {

namespace {

template <Scalar S>
std::vector<S> without(const std::vector<S>& v, std::size_t skip) {
  std::vector<S> out;
  out.reserve(v.size() - 1);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != skip) out.push_back(v[i]);
  return out;
}

template <Scalar S>
std::vector<int> sizes(const std::vector<std::vector<S>>& c) {
  std::vector<int> r;
  for (const auto& v : c) r.push_back(static_cast<int>(v.size()));
  return r;
}

template <Scalar S>
std::string memo_key(const Grading& gr, const std::vector<std::vector<S>>& s, const std::vector<std::vector<S>>& t,
                     const HcOptions& opts) {
  std::string key;
  key += opts.path == HcPath::PeelFirst ? 'F' : 'L';
  key += opts.closed_form_gl11 ? '1' : '0';
  key += std::to_string(gr.m) + ':' + std::to_string(gr.n) + ':' + gr.c.str();
  for (const auto* side : {&s, &t}) {
    key += '#';
    for (const auto& col : *side) {
      key += '[';
      for (const auto& x : col) {
        append_key(key, x);
        key += ';';
      }
    }
  }
  return key;
}

}  // namespace

void validate_hc_instance(const Grading& gr, int s_colors, int t_colors, std::span<const int> rs,
                          std::span<const int> rt) {
  gr.validate();
  if (s_colors != gr.N() || t_colors != gr.N())
    fail(ErrorCode::ColoringMismatch, "expected " + std::to_string(gr.N()) + " colors for " + gr.str() + ", got " +
                                          std::to_string(s_colors) + " (s) and " + std::to_string(t_colors) + " (t)");
  for (std::size_t i = 0; i < rs.size(); ++i)
    if (rs[i] != rt[i])
      fail(ErrorCode::CardinalityMismatch, "color " + std::to_string(i + 1) + ": #s = " + std::to_string(rs[i]) +
                                               ", #t = " + std::to_string(rt[i]));
}

template <Scalar S>
S HighestCoefficient<S>::eval(const Grading& gr, const ColoredTuple<S>& s, const ColoredTuple<S>& t,
                              HcOptions opts) const {
  auto rs = s.cardinalities(), rt = t.cardinalities();
  validate_hc_instance(gr, s.num_colors(), t.num_colors(), rs, rt);
  return z(gr, s.colors(), t.colors(), opts);
}

template <Scalar S>
S HighestCoefficient<S>::peel_first(const Grading& gr, const ColoredTuple<S>& s, const ColoredTuple<S>& t, int pivot,
                                    HcOptions inner) const {
  auto rs = s.cardinalities(), rt = t.cardinalities();
  validate_hc_instance(gr, s.num_colors(), t.num_colors(), rs, rt);
  if (pivot < 1 || pivot > s.r(1))
    fail(ErrorCode::IndexOutOfRange, "fixed element " + std::to_string(pivot) + " outside s^1");
  const Grading g = gr.m == 0 ? Grading(gr.n, 0, -gr.c) : gr;
  return rec_first(g, s.colors(), t.colors(), static_cast<std::size_t>(pivot - 1), inner);
}

template <Scalar S>
S HighestCoefficient<S>::peel_last(const Grading& gr, const ColoredTuple<S>& s, const ColoredTuple<S>& t, int pivot,
                                   HcOptions inner) const {
  auto rs = s.cardinalities(), rt = t.cardinalities();
  validate_hc_instance(gr, s.num_colors(), t.num_colors(), rs, rt);
  if (pivot < 1 || pivot > t.r(gr.N()))
    fail(ErrorCode::IndexOutOfRange, "fixed element " + std::to_string(pivot) + " outside t^N");
  const Grading g = gr.m == 0 ? Grading(gr.n, 0, -gr.c) : gr;
  return rec_last(g, s.colors(), t.colors(), static_cast<std::size_t>(pivot - 1), inner);
}

template <Scalar S>
MemoStats HighestCoefficient<S>::stats() const {
  std::shared_lock lock(mu_);
  return {hits_.load(), misses_.load(), static_cast<std::uint64_t>(memo_.size())};
}

template <Scalar S>
void HighestCoefficient<S>::clear_memo() {
  std::unique_lock lock(mu_);
  memo_.clear();
  hits_ = 0;
  misses_ = 0;
}

template <Scalar S>
S HighestCoefficient<S>::z(const Grading& gr, const Colors& s, const Colors& t, const HcOptions& opts) const {
  bool empty = true;
  for (const auto& col : s) empty = empty && col.empty();
  if (empty) return embed<S>(Rational(1));
  if (gr.m == 0) return z(Grading(gr.n, 0, -gr.c), s, t, opts);
  if (gr.m == 1 && gr.n == 1 && opts.closed_form_gl11)
    return set_product<S>([&](const S& a, const S& b) { return g(gr, a, b); }, s[0], t[0]);

  std::string key = memo_key(gr, s, t, opts);
  {
    std::shared_lock lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      ++hits_;
      return it->second;
    }
  }
  ++misses_;
  S value = dispatch(gr, s, t, opts);
  std::unique_lock lock(mu_);
  memo_.emplace(std::move(key), value);
  return value;
}

template <Scalar S>
S HighestCoefficient<S>::dispatch(const Grading& gr, const Colors& s, const Colors& t, const HcOptions& opts) const {
  if (opts.path == HcPath::PeelFirst) {
    if (!s.front().empty()) return rec_first(gr, s, t, 0, opts);
    Colors s2(s.begin() + 1, s.end()), t2(t.begin() + 1, t.end());
    return z(Grading(gr.m - 1, gr.n, gr.c), s2, t2, opts);
  }
  if (!s.back().empty()) return rec_last(gr, s, t, 0, opts);
  Colors s2(s.begin(), s.end() - 1), t2(t.begin(), t.end() - 1);
  Grading g2 = gr.n > 0 ? Grading(gr.m, gr.n - 1, gr.c) : Grading(gr.m - 1, 0, gr.c);
  return z(g2, s2, t2, opts);
}

// Peels the fixed element s^1_I; sums over rho = 2..N+1 and single elements
// t^nu_I (nu < rho) and s^nu_I (2 <= nu < rho).
template <Scalar S>
S HighestCoefficient<S>::rec_first(const Grading& gr, const Colors& s, const Colors& t, std::size_t pivot,
                                   const HcOptions& opts) const {
  const int N = gr.N();
  const std::vector<int> rs = sizes(s), rt = sizes(t);
  const S& s1 = s[0][pivot];
  const std::vector<S> s1_rest = without(s[0], pivot);

  S common = embed<S>(Rational(1));
  if (gr.m == 1)
    for (const S& x : s1_rest) common *= g(gr, x, s1) / f(gr, x, s1);

  S total = embed<S>(Rational(0));
  for (int rho = 2; rho <= N + 1; ++rho) {
    if (rt[rho - 2] == 0 || (rho >= 3 && rs[rho - 2] == 0)) break;
    const auto tsel = enumerate_singleton_selections(rt, 1, rho - 1);
    const auto ssel = enumerate_singleton_selections(rs, 2, rho - 1);
    for (const auto& tc : tsel) {
      for (const auto& sc : ssel) {
        std::vector<S> sI(rho - 1), tI(rho - 1);
        Colors sII(rho - 1), tII(rho - 1);
        sI[0] = s1;
        sII[0] = s1_rest;
        for (int a = 1; a < rho - 1; ++a) {
          sI[a] = s[a][sc[a - 1]];
          sII[a] = without(s[a], sc[a - 1]);
        }
        for (int a = 0; a < rho - 1; ++a) {
          tI[a] = t[a][tc[a]];
          tII[a] = without(t[a], tc[a]);
        }

        S term = common * g_graded(gr, 2, tI[0], sI[0]);
        for (const S& y : tII[0]) term *= gamma(gr, 1, tI[0], y) * f_graded(gr, 1, y, sI[0]);
        if (rho <= N)
          for (const S& x : s[rho - 1]) term /= f_graded(gr, rho, x, sI[rho - 2]);
        for (int nu = 2; nu < rho; ++nu) {
          const int a = nu - 1;
          term *= g_graded(gr, nu + 1, tI[a], tI[a - 1]) * g_graded(gr, nu, sI[a], sI[a - 1]);
          for (const S& y : tII[a]) term *= gamma(gr, nu, tI[a], y);
          for (const S& x : sII[a]) term *= gamma(gr, nu, x, sI[a]);
          for (const S& x : s[a]) term /= f_graded(gr, nu, x, sI[a - 1]);
          for (const S& y : t[a - 1]) term /= f_graded(gr, nu, tI[a], y);
        }

        Colors SS(sII), TT(tII);
        for (int a = rho - 1; a < N; ++a) {
          SS.push_back(s[a]);
          TT.push_back(t[a]);
        }
        total += term * z(gr, SS, TT, opts);
      }
    }
  }
  return total;
}

// Peels the fixed element t^N_I; sums over rho = 1..N and single elements
// s^nu_I (rho <= nu <= N) and t^nu_I (rho <= nu < N).
template <Scalar S>
S HighestCoefficient<S>::rec_last(const Grading& gr, const Colors& s, const Colors& t, std::size_t pivot,
                                  const HcOptions& opts) const {
  const int N = gr.N();
  const std::vector<int> rs = sizes(s), rt = sizes(t);
  const S& tN = t[N - 1][pivot];
  const std::vector<S> tN_rest = without(t[N - 1], pivot);

  S common = embed<S>(Rational(1));
  if (gr.m == N)
    for (const S& y : tN_rest) common *= g(gr, tN, y) / f(gr, y, tN);

  S total = embed<S>(Rational(0));
  for (int rho = N; rho >= 1; --rho) {
    if (rs[rho - 1] == 0 || (rho < N && rt[rho - 1] == 0)) break;
    const auto ssel = enumerate_singleton_selections(rs, rho, N);
    const auto tsel = enumerate_singleton_selections(rt, rho, N - 1);
    for (const auto& sc : ssel) {
      for (const auto& tc : tsel) {
        // index a - (rho-1) into the local arrays for 0-based color a
        const int w = N - rho + 1;
        std::vector<S> sI(w), tI(w);
        Colors sII(w), tII(w);
        for (int k = 0; k < w; ++k) {
          const int a = rho - 1 + k;
          sI[k] = s[a][sc[k]];
          sII[k] = without(s[a], sc[k]);
          if (a < N - 1) {
            tI[k] = t[a][tc[k]];
            tII[k] = without(t[a], tc[k]);
          }
        }
        tI[w - 1] = tN;
        tII[w - 1] = tN_rest;

        S term = common * g_graded(gr, N + 1, tN, sI[w - 1]);
        for (const S& x : sII[w - 1]) term *= f_graded(gr, N + 1, tN, x) * gamma(gr, N, x, sI[w - 1]);
        if (rho >= 2)
          for (const S& y : t[rho - 2]) term /= f_graded(gr, rho, tI[0], y);
        for (int nu = rho; nu < N; ++nu) {
          const int k = nu - rho;
          term *= g_graded(gr, nu, sI[k + 1], sI[k]) * g_graded(gr, nu, tI[k + 1], tI[k]);
          for (const S& x : sII[k]) term *= gamma(gr, nu, x, sI[k]);
          for (const S& y : tII[k]) term *= gamma(gr, nu, tI[k], y);
          for (const S& x : s[nu]) term /= f_graded(gr, nu + 1, x, sI[k]);
          for (const S& y : t[nu - 1]) term /= f_graded(gr, nu + 1, tI[k + 1], y);
        }

        Colors SS(s.begin(), s.begin() + (rho - 1)), TT(t.begin(), t.begin() + (rho - 1));
        for (int k = 0; k < w; ++k) {
          SS.push_back(sII[k]);
          TT.push_back(tII[k]);
        }
        total += term * z(gr, SS, TT, opts);
      }
    }
  }
  return total;
}

ResidueReport z_residue_check(const HighestCoefficient<EpsRational>& hc_eps, const HighestCoefficient<Rational>& hc,
                              const Grading& gr, const ColoredTuple<Rational>& s, const ColoredTuple<Rational>& t,
                              int mu, int j) {
  validate_hc_instance(gr, s.num_colors(), t.num_colors(), s.cardinalities(), t.cardinalities());
  const Rational& tj = t.at(mu, j);
  (void)s.at(mu, j);

  auto lift = [](const Rational& q) { return EpsRational(q); };
  ColoredTuple<EpsRational> se = s.map(lift), te = t.map(lift);
  se.at(mu, j) = EpsRational(tj) + EpsRational::epsilon();
  ResidueReport rep;
  rep.lhs = (EpsRational::epsilon() * hc_eps(gr, se, te)).limit_at_zero();

  const ColoredTuple<Rational> s_red = s.complement(mu, j), t_red = t.complement(mu, j);
  // residue of g_[mu+1](t, s) at s = t
  Rational rhs = -gr.graded_c(mu + 1);
  rhs *= set_product<Rational>(gamma_of<Rational>(gr, mu), t_red.color(mu), tj);
  rhs *= set_product<Rational>(gamma_of<Rational>(gr, mu), tj, s_red.color(mu));
  rhs /= set_product<Rational>(f_of<Rational>(gr, mu + 1), t.color(mu + 1), tj);
  rhs /= set_product<Rational>(f_of<Rational>(gr, mu), tj, s.color(mu - 1));
  rhs *= hc(gr, s_red, t_red);
  rep.rhs = rhs;
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

template class HighestCoefficient<Rational>;
template class HighestCoefficient<EpsRational>;
template class HighestCoefficient<Complex>;

}  // namespace glmn
