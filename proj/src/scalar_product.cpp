#include "glmn/scalar_product.hpp"

#include <algorithm>
#include <exception>
#include <thread>

namespace glmn {

namespace {

template <Scalar S>
using Colors = std::vector<std::vector<S>>;

std::string describe(const MatchedBipartition& mb) {
  auto sets = [](const std::vector<IndexSet>& parts) {
    std::string out;
    for (const auto& p : parts) {
      out += '{';
      for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i] + 1);
      out += '}';
    }
    return out;
  };
  return "bipartition s_I=" + sets(mb.s.part_one) + " t_I=" + sets(mb.t.part_one);
}

template <Scalar S>
Colors<S> pick_colors(const ColoredTuple<S>& tup, const std::vector<IndexSet>& parts) {
  Colors<S> out;
  for (int nu = 1; nu <= tup.num_colors(); ++nu) out.push_back(pick(tup, nu, parts[nu - 1]));
  return out;
}

template <Scalar S>
S alpha_product(const AlphaFamily& alpha, int nu, const std::vector<S>& xs) {
  S acc = embed<S>(Rational(1));
  for (const S& x : xs) acc *= evaluate(alpha, nu, x);
  return acc;
}

template <Scalar S>
S lookup_product(const std::vector<S>& values, const IndexSet& idx) {
  S acc = embed<S>(Rational(1));
  for (int i : idx) acc *= values[static_cast<std::size_t>(i)];
  return acc;
}

template <Scalar S>
struct SumSetup {
  const Context& ctx;
  const Grading& gr;
  const ColoredTuple<S>& s;
  const ColoredTuple<S>& t;
  const AlphaFamily& alpha;
  Formulation form;
  // hat form only: alpha-hat per parameter
  std::vector<std::vector<S>> hat_s, hat_t;
};

template <Scalar S>
S plain_term(const SumSetup<S>& su, const MatchedBipartition& mb) {
  const Grading& gr = su.gr;
  const int N = gr.N();
  const Colors<S> sI = pick_colors(su.s, mb.s.part_one), sII = pick_colors(su.s, mb.s.part_two);
  const Colors<S> tI = pick_colors(su.t, mb.t.part_one), tII = pick_colors(su.t, mb.t.part_two);
  S term = embed<S>(Rational(1));
  for (int nu = 1; nu <= N; ++nu) {
    const auto a = static_cast<std::size_t>(nu - 1);
    term *= alpha_product(su.alpha, nu, sI[a]) * alpha_product(su.alpha, nu, tII[a]);
    term *= set_product<S>(gamma_of<S>(gr, nu), sII[a], sI[a]);
    term *= set_product<S>(gamma_of<S>(gr, nu), tI[a], tII[a]);
  }
  for (int nu = 1; nu < N; ++nu) {
    const auto a = static_cast<std::size_t>(nu - 1);
    term /= set_product<S>(f_of<S>(gr, nu + 1), sII[a + 1], sI[a]);
    term /= set_product<S>(f_of<S>(gr, nu + 1), tI[a + 1], tII[a]);
  }
  const auto& hc = su.ctx.template hc<S>();
  return term * hc.z(gr, sI, tI, HcOptions{}) * hc.z(gr, tII, sII, HcOptions{});
}

template <Scalar S>
S hat_term(const SumSetup<S>& su, const MatchedBipartition& mb) {
  const Grading& gr = su.gr;
  const int N = gr.N();
  const Colors<S> sI = pick_colors(su.s, mb.s.part_one), sII = pick_colors(su.s, mb.s.part_two);
  const Colors<S> tI = pick_colors(su.t, mb.t.part_one), tII = pick_colors(su.t, mb.t.part_two);
  S term = embed<S>(Rational(1));
  for (int nu = 1; nu <= N; ++nu) {
    const auto a = static_cast<std::size_t>(nu - 1);
    term *= lookup_product(su.hat_s[a], mb.s.part_one[a]) * lookup_product(su.hat_t[a], mb.t.part_two[a]);
    term *= set_product<S>(gamma_of<S>(gr, nu), sI[a], sII[a]);
    term *= set_product<S>(gamma_of<S>(gr, nu), tII[a], tI[a]);
  }
  for (int nu = 1; nu < N; ++nu) {
    const auto a = static_cast<std::size_t>(nu - 1);
    term /= set_product<S>(f_of<S>(gr, nu + 1), sI[a + 1], sII[a]);
    term /= set_product<S>(f_of<S>(gr, nu + 1), tII[a + 1], tI[a]);
  }
  const auto& hc = su.ctx.template hc<S>();
  return term * hc.z(gr, sI, tI, HcOptions{}) * hc.z(gr, tII, sII, HcOptions{});
}

// alpha-hat_nu(x_j) = alpha_nu(x_j) / (Bethe right-hand side at x_j)
template <Scalar S>
std::vector<std::vector<S>> alpha_hat(const Grading& gr, const ColoredTuple<S>& x, const AlphaFamily& alpha) {
  std::vector<std::vector<S>> out;
  for (int nu = 1; nu <= x.num_colors(); ++nu) {
    out.emplace_back();
    for (int j = 1; j <= x.r(nu); ++j) out.back().push_back(evaluate(alpha, nu, x.at(nu, j)) / bethe_rhs(gr, x, nu, j));
  }
  return out;
}

template <Scalar S>
S partition_sum(const SumSetup<S>& su) {
  const auto rs = su.s.cardinalities(), rt = su.t.cardinalities();
  const auto parts = enumerate_matched_bipartitions(rs, rt);
  std::vector<S> terms(parts.size());
  auto run = [&](std::size_t lo, std::size_t hi, std::exception_ptr& err) {
    for (std::size_t i = lo; i < hi; ++i) {
      try {
        terms[i] = su.form == Formulation::Plain ? plain_term(su, parts[i]) : hat_term(su, parts[i]);
      } catch (const Error& e) {
        err = std::make_exception_ptr(e.annotated(describe(parts[i])));
        return;
      } catch (...) {
        err = std::current_exception();
        return;
      }
    }
  };

  const std::size_t workers =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(su.ctx.threads, 1)), 1, std::max<std::size_t>(parts.size(), 1));
  std::vector<std::exception_ptr> errs(workers);
  if (workers == 1) {
    run(0, parts.size(), errs[0]);
  } else {
    const std::size_t chunk = (parts.size() + workers - 1) / workers;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t lo = std::min(parts.size(), w * chunk), hi = std::min(parts.size(), lo + chunk);
      pool.emplace_back(run, lo, hi, std::ref(errs[w]));
    }
    for (auto& th : pool) th.join();
  }
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);

  // fixed-order reduction keeps results independent of the worker count
  S total = embed<S>(Rational(0));
  for (const S& x : terms) total += x;
  return total;
}

}  // namespace

template <Scalar S>
S scalar_product(const Context& ctx, const Grading& gr, const ColoredTuple<S>& s, const ColoredTuple<S>& t,
                 const AlphaFamily& alpha, Formulation form) {
  validate_hc_instance(gr, s.num_colors(), t.num_colors(), s.cardinalities(), t.cardinalities());
  require_distinct(s, "s");
  require_distinct(t, "t");
  SumSetup<S> su{ctx, gr, s, t, alpha, form, {}, {}};
  if (form == Formulation::Hat) {
    su.hat_s = alpha_hat(gr, s, alpha);
    su.hat_t = alpha_hat(gr, t, alpha);
  }
  return partition_sum(su);
}

template <Scalar S>
S prop_zero_sum(const Context& ctx, const Grading& gr, const ColoredTuple<S>& s, const ColoredTuple<S>& t) {
  return scalar_product(ctx, gr, s, t, UnitAlpha{}, Formulation::Plain);
}

ColoredTuple<Rational> default_kappa(const ColoredTuple<Rational>& t) {
  long next = 1;
  return t.map([&next](const Rational&) { return Rational(next++); });
}

Rational norm_limit(const Context& ctx, const Grading& gr, const ColoredTuple<Rational>& t, const AlphaFamily& alpha,
                    const std::optional<ColoredTuple<Rational>>& kappa) {
  const ColoredTuple<Rational> k = kappa ? *kappa : default_kappa(t);
  if (k.cardinalities() != t.cardinalities()) fail(ErrorCode::CardinalityMismatch, "kappa is not shaped like t");
  std::vector<std::string> seen;
  for (const auto& col : k.colors())
    for (const auto& x : col) {
      if (x.is_zero()) fail(ErrorCode::InvalidArgument, "regulator direction must be nonzero");
      if (std::find(seen.begin(), seen.end(), x.str()) != seen.end())
        fail(ErrorCode::InvalidArgument, "regulator directions must be distinct, repeated " + x.str());
      seen.push_back(x.str());
    }
  require_distinct(t, "t");

  const EpsRational e = EpsRational::epsilon();
  ColoredTuple<EpsRational> te = t.map([](const Rational& q) { return EpsRational(q); });
  ColoredTuple<EpsRational> se = te;
  for (int nu = 1; nu <= t.num_colors(); ++nu)
    for (int j = 1; j <= t.r(nu); ++j) se.at(nu, j) = te.at(nu, j) + EpsRational(k.at(nu, j)) * e;
  return scalar_product(ctx, gr, se, te, alpha, Formulation::Plain).limit_at_zero();
}

Rational normalized_norm(const Context& ctx, const Grading& gr, const ColoredTuple<Rational>& t,
                         const AlphaFamily& alpha, const std::optional<ColoredTuple<Rational>>& kappa) {
  return norm_limit(ctx, gr, t, alpha, kappa) / norm_prefactor(gr, t);
}

AlphaPtr modified_alpha(AlphaPtr alpha, const Grading& gr, int mu, const Rational& pivot) {
  return std::make_shared<ModifiedAlpha>(std::move(alpha), gr, mu, pivot);
}

XDerivativeReport x_derivative_check(const Context& ctx, const Grading& gr, const ColoredTuple<Rational>& t,
                                     const ColoredTuple<Rational>& X, int mu, int j) {
  const Rational tj = t.at(mu, j);
  XDerivativeReport rep;
  Rational norms[3];
  AlphaPtr base;
  for (int step = 0; step < 3; ++step) {
    ColoredTuple<Rational> Xs = X;
    Xs.at(mu, j) += Rational(step);
    auto a = onshell_hermite(gr, t, Xs);
    norms[step] = norm_limit(ctx, gr, t, *a);
    if (step == 0) base = a;
  }
  rep.lhs = norms[1] - norms[0];
  rep.second_difference = norms[2] - Rational(2) * norms[1] + norms[0];

  const ColoredTuple<Rational> rest = t.complement(mu, j);
  Rational pre = set_product<Rational>(gamma_of<Rational>(gr, mu), rest.color(mu), tj);
  pre *= set_product<Rational>(gamma_of<Rational>(gr, mu), tj, rest.color(mu));
  pre /= set_product<Rational>(f_of<Rational>(gr, mu + 1), t.color(mu + 1), tj);
  pre /= set_product<Rational>(f_of<Rational>(gr, mu), tj, t.color(mu - 1));

  const AlphaPtr mod = modified_alpha(base, gr, mu, tj);
  rep.rhs = pre * norm_limit(ctx, gr, rest, *mod);

  rep.reduced_onshell = true;
  for (int nu = 1; nu <= rest.num_colors(); ++nu)
    for (int k = 1; k <= rest.r(nu); ++k)
      if (!(phi(gr, rest, *mod, nu, k) == Rational(1))) rep.reduced_onshell = false;
  return rep;
}

template Rational scalar_product(const Context&, const Grading&, const ColoredTuple<Rational>&,
                                 const ColoredTuple<Rational>&, const AlphaFamily&, Formulation);
template EpsRational scalar_product(const Context&, const Grading&, const ColoredTuple<EpsRational>&,
                                    const ColoredTuple<EpsRational>&, const AlphaFamily&, Formulation);
template Complex scalar_product(const Context&, const Grading&, const ColoredTuple<Complex>&,
                                const ColoredTuple<Complex>&, const AlphaFamily&, Formulation);
template Rational prop_zero_sum(const Context&, const Grading&, const ColoredTuple<Rational>&,
                                const ColoredTuple<Rational>&);
template EpsRational prop_zero_sum(const Context&, const Grading&, const ColoredTuple<EpsRational>&,
                                   const ColoredTuple<EpsRational>&);
template Complex prop_zero_sum(const Context&, const Grading&, const ColoredTuple<Complex>&,
                               const ColoredTuple<Complex>&);

}  // namespace glmn
