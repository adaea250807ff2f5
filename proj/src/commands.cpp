#include "glmn/commands.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "glmn/bethe_solver.hpp"
#include "glmn/gaudin.hpp"
#include "glmn/scalar_product.hpp"

namespace glmn {

using config::json;
using config::to_json;

namespace {

using RT = ColoredTuple<Rational>;
using CT = ColoredTuple<Complex>;

json grading_json(const Grading& gr) { return {{"m", gr.m}, {"n", gr.n}, {"c", gr.c.str()}}; }

json base_report(const std::string& command, const Grading& gr) {
  return {{"command", command}, {"grading", grading_json(gr)}};
}

bool close(const Complex& a, const Complex& b, double tol) {
  return (a - b).abs() <= tol * std::max({1.0, a.abs(), b.abs()});
}

void require_rational(config::Field f, const std::string& command) {
  if (f != config::Field::Rational) fail(ErrorCode::ConfigError, "/field: " + command + " runs over the rationals only");
}

json check(const std::string& name, bool pass) { return {{"name", name}, {"pass", pass}}; }

bool all_pass(const json& checks) {
  for (const auto& c : checks)
    if (!c["pass"].get<bool>()) return false;
  return true;
}

Outcome finish(json report, json checks) {
  const bool pass = all_pass(checks);
  json out = {{"command", report["command"]}, {"pass", pass}};
  for (auto& [k, v] : report.items())
    if (k != "command") out[k] = v;
  out["checks"] = std::move(checks);
  return {std::move(out), pass};
}

// ---- hc-eval

Outcome hc_eval(Context& ctx, const json& doc) {
  const Grading gr = config::grading(doc);
  const auto fld = config::field(doc);
  const std::string path = config::choice(doc, "path", "first", {"first", "last", "both"});
  const bool closed = !doc.contains("closed_form") || doc["closed_form"].get<bool>();
  const double tol = config::real(doc, "tolerance", 1e-9);
  json rep = base_report("hc-eval", gr), checks = json::array();
  rep["field"] = fld == config::Field::Rational ? "rational" : "complex";
  auto run = [&]<class S>(const HighestCoefficient<S>& hc) {
    const auto s = config::tuple<S>(doc, "s", gr.N()), t = config::tuple<S>(doc, "t", gr.N());
    validate_hc_instance(gr, s.num_colors(), t.num_colors(), s.cardinalities(), t.cardinalities());
    require_distinct(s, "s");
    require_distinct(t, "t");
    const S first = hc.eval(gr, s, t, HcOptions{HcPath::PeelFirst, closed});
    if (path == "last") {
      rep["value"] = to_json(hc.eval(gr, s, t, HcOptions{HcPath::PeelLast, closed}));
    } else {
      rep["value"] = to_json(first);
    }
    if (path == "both") {
      const S last = hc.eval(gr, s, t, HcOptions{HcPath::PeelLast, closed});
      rep["value_last"] = to_json(last);
      bool same;
      if constexpr (std::same_as<S, Complex>) same = close(first, last, tol);
      else same = first == last;
      checks.push_back(check("first and last recursions agree", same));
    }
  };
  if (fld == config::Field::Rational) run(ctx.hc_rational);
  else run(ctx.hc_complex);
  return finish(std::move(rep), std::move(checks));
}

// ---- scalar-product and prop-zero

Outcome scalar_product_cmd(Context& ctx, const json& doc) {
  const Grading gr = config::grading(doc);
  const auto fld = config::field(doc);
  const std::string form = config::choice(doc, "formulation", "both", {"plain", "hat", "both"});
  const double tol = config::real(doc, "tolerance", 1e-9);
  json rep = base_report("scalar-product", gr), checks = json::array();
  rep["field"] = fld == config::Field::Rational ? "rational" : "complex";
  auto run = [&]<class S>() {
    const auto s = config::tuple<S>(doc, "s", gr.N()), t = config::tuple<S>(doc, "t", gr.N());
    std::optional<RT> t_exact;
    if constexpr (std::same_as<S, Rational>) t_exact = t;
    const AlphaPtr alpha = config::alpha(doc, gr, t_exact);
    const Formulation primary = form == "hat" ? Formulation::Hat : Formulation::Plain;
    const S v = scalar_product(ctx, gr, s, t, *alpha, primary);
    rep["value"] = to_json(v);
    if (form == "both") {
      const S h = scalar_product(ctx, gr, s, t, *alpha, Formulation::Hat);
      rep["value_hat"] = to_json(h);
      bool same;
      if constexpr (std::same_as<S, Complex>) same = close(v, h, tol);
      else same = v == h;
      checks.push_back(check("plain and hat formulations agree", same));
    }
  };
  if (fld == config::Field::Rational) run.template operator()<Rational>();
  else run.template operator()<Complex>();
  return finish(std::move(rep), std::move(checks));
}

Outcome prop_zero(Context& ctx, const json& doc) {
  const Grading gr = config::grading(doc);
  const auto fld = config::field(doc);
  const double tol = config::real(doc, "tolerance", 1e-9);
  json rep = base_report("prop-zero", gr), checks = json::array();
  rep["field"] = fld == config::Field::Rational ? "rational" : "complex";
  if (fld == config::Field::Rational) {
    const Rational v = prop_zero_sum(ctx, gr, config::tuple<Rational>(doc, "s", gr.N()),
                                     config::tuple<Rational>(doc, "t", gr.N()));
    rep["value"] = to_json(v);
    checks.push_back(check("sum with alpha = 1 is exactly zero", v.is_zero()));
  } else {
    const Complex v =
        prop_zero_sum(ctx, gr, config::tuple<Complex>(doc, "s", gr.N()), config::tuple<Complex>(doc, "t", gr.N()));
    rep["value"] = to_json(v);
    checks.push_back(check("sum with alpha = 1 vanishes within tolerance", v.abs() <= tol));
  }
  return finish(std::move(rep), std::move(checks));
}

// ---- norm-check, gaudin-det, korepin-check

std::optional<RT> optional_tuple(const json& doc, const std::string& key, int colors) {
  if (!doc.contains(key)) return std::nullopt;
  return config::tuple<Rational>(doc, key, colors);
}

Outcome norm_check(Context& ctx, const json& doc) {
  const Grading gr = config::grading(doc);
  require_rational(config::field(doc), "norm-check");
  const RT t = config::tuple<Rational>(doc, "t", gr.N());
  require_distinct(t, "t");
  AlphaPtr alpha;
  if (doc.contains("alpha")) {
    alpha = config::alpha(doc, gr, t);
  } else {
    const RT X = config::tuple<Rational>(doc, "X", gr.N());
    if (X.cardinalities() != t.cardinalities()) fail(ErrorCode::ConfigError, "/X: not shaped like t");
    alpha = onshell_hermite(gr, t, X);
  }
  const auto kappa = optional_tuple(doc, "kappa", gr.N());
  json rep = base_report("norm-check", gr), checks = json::array();

  bool onshell = true;
  for (int nu = 1; nu <= gr.N(); ++nu)
    for (int j = 1; j <= t.r(nu); ++j)
      if (!(phi(gr, t, *alpha, nu, j) == Rational(1))) onshell = false;
  checks.push_back(check("t is on-shell for alpha", onshell));

  const RT X = extract_x(gr, t, *alpha);
  const Rational limit = norm_limit(ctx, gr, t, *alpha, kappa);
  const Rational pre = norm_prefactor(gr, t);
  const Rational lhs = limit / pre;
  const Rational rhs = gaudin_det(gaudin_matrix(gr, t, X));
  rep["X"] = to_json(X);
  rep["norm_limit"] = to_json(limit);
  rep["prefactor"] = to_json(pre);
  rep["lhs"] = to_json(lhs);
  rep["rhs"] = to_json(rhs);
  checks.push_back(check("normalized norm equals det G", lhs == rhs));
  return finish(std::move(rep), std::move(checks));
}

Outcome gaudin_det_cmd(Context&, const json& doc) {
  const Grading gr = config::grading(doc);
  const auto fld = config::field(doc);
  const double tol = config::real(doc, "tolerance", 1e-9);
  json rep = base_report("gaudin-det", gr), checks = json::array();
  rep["field"] = fld == config::Field::Rational ? "rational" : "complex";
  auto run = [&]<class S>() {
    const auto t = config::tuple<S>(doc, "t", gr.N()), X = config::tuple<S>(doc, "X", gr.N());
    require_distinct(t, "t");
    const auto G = gaudin_matrix(gr, t, X);
    rep["value"] = to_json(gaudin_det(G));
    json rows = json::array();
    bool sums = true, sparse = true;
    for (int mu = 1; mu <= gr.N(); ++mu)
      for (int j = 1; j <= t.r(mu); ++j) {
        json row = json::array();
        S sum = embed<S>(Rational(0));
        for (std::size_t c = 0; c < G.entries.cols(); ++c) {
          row.push_back(to_json(G.entries(G.index(mu, j), c)));
          sum += G.entries(G.index(mu, j), c);
        }
        rows.push_back(std::move(row));
        if constexpr (std::same_as<S, Complex>) sums = sums && close(sum, X.at(mu, j), tol);
        else sums = sums && sum == X.at(mu, j);
        for (int nu = 1; nu <= gr.N(); ++nu)
          if (std::abs(nu - mu) > 1)
            for (int k = 1; k <= t.r(nu); ++k) sparse = sparse && is_zero(G.block(mu, nu, j, k));
      }
    rep["matrix"] = std::move(rows);
    checks.push_back(check("row sums equal X", sums));
    checks.push_back(check("blocks beyond the near diagonal vanish", sparse));
  };
  if (fld == config::Field::Rational) run.template operator()<Rational>();
  else run.template operator()<Complex>();
  return finish(std::move(rep), std::move(checks));
}

Outcome korepin(Context&, const json& doc) {
  const Grading gr = config::grading(doc);
  require_rational(config::field(doc), "korepin-check");
  const RT t = config::tuple<Rational>(doc, "t", gr.N()), X = config::tuple<Rational>(doc, "X", gr.N());
  require_distinct(t, "t");
  if (X.cardinalities() != t.cardinalities()) fail(ErrorCode::ConfigError, "/X: not shaped like t");
  const KorepinReport k = korepin_check(gr, t, X);
  json rep = base_report("korepin-check", gr), checks = json::array();
  rep["value"] = to_json(gaudin_det(gaudin_matrix(gr, t, X)));
  checks.push_back(check("(i) symmetry under simultaneous swaps", k.symmetry));
  checks.push_back(check("(ii) affine in each X", k.affine));
  checks.push_back(check("(iii) single parameter gives X", k.single));
  checks.push_back(check("(iv) derivative in X equals the reduced determinant", k.derivative));
  checks.push_back(check("(v) vanishes at X = 0", k.vanishing));
  rep["failures"] = k.failures;
  return finish(std::move(rep), std::move(checks));
}

// ---- residue-check

Outcome residue(Context& ctx, const json& doc) {
  const Grading gr = config::grading(doc);
  require_rational(config::field(doc), "residue-check");
  const RT s = config::tuple<Rational>(doc, "s", gr.N()), t = config::tuple<Rational>(doc, "t", gr.N());
  validate_hc_instance(gr, s.num_colors(), t.num_colors(), s.cardinalities(), t.cardinalities());
  require_distinct(t, "t");
  const int mu_only = config::integer(doc, "mu", 0, 0, gr.N());
  const int j_only = config::integer(doc, "j", 0, 0, 1 << 20);
  if (j_only && !mu_only) fail(ErrorCode::ConfigError, "/j: needs mu");
  if (j_only && j_only > t.r(mu_only)) fail(ErrorCode::ConfigError, "/j: outside color " + std::to_string(mu_only));
  json rep = base_report("residue-check", gr), checks = json::array(), rows = json::array();
  for (int mu = 1; mu <= gr.N(); ++mu) {
    if (mu_only && mu != mu_only) continue;
    for (int j = 1; j <= t.r(mu); ++j) {
      if (j_only && j != j_only) continue;
      const ResidueReport r = z_residue_check(ctx.hc_eps, ctx.hc_rational, gr, s, t, mu, j);
      rows.push_back({{"mu", mu}, {"j", j}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"pass", r.pass}});
      checks.push_back(check("residue at s(" + std::to_string(mu) + "," + std::to_string(j) + ")", r.pass));
    }
  }
  if (checks.empty()) fail(ErrorCode::ConfigError, "/t: no parameter selected");
  rep["residues"] = std::move(rows);
  return finish(std::move(rep), std::move(checks));
}

// ---- solve-bethe

Outcome solve(Context&, const json& doc) {
  const Grading gr = config::grading(doc);
  if (!doc.contains("xi")) fail(ErrorCode::ConfigError, "/xi: missing");
  const auto xi = config::complex_lists(doc["xi"], "/xi", gr.N());
  const CT t0 = config::tuple<Complex>(doc, "t0", gr.N());
  SolveOptions opts;
  opts.tol = config::real(doc, "tol", opts.tol);
  opts.max_iter = config::integer(doc, "max_iter", opts.max_iter, 0, 100000);
  opts.max_halvings = config::integer(doc, "max_halvings", opts.max_halvings, 0, 60);
  const ProductAlpha alpha = ProductAlpha::from_complex(gr, xi);
  const SolveReport r = solve_newton(gr, alpha, t0, opts);
  json rep = base_report("solve-bethe", gr), checks = json::array();
  rep["t"] = to_json(r.t);
  rep["residual"] = r.residual;
  rep["iterations"] = r.iterations;
  rep["converged"] = r.converged;
  rep["history"] = r.history;
  checks.push_back(check("residual below tolerance", r.converged));
  return finish(std::move(rep), std::move(checks));
}

// ---- verify-all

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  // globally distinct, no two values differ by 0, +-c or +-2c
  Rational fresh(const Rational& c) {
    while (true) {
      std::uniform_int_distribution<int> den(1, 9);
      const int q = den(rng_);
      const int span = 50 + static_cast<int>(forbidden_.size());
      std::uniform_int_distribution<int> num(-span * q, span * q);
      Rational x(num(rng_), q);
      if (forbidden_.count(x.str())) continue;
      for (int k = -2; k <= 2; ++k) forbidden_.insert((x + Rational(k) * c).str());
      return x;
    }
  }
  Rational small() {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
    return Rational(num(rng_), den(rng_));
  }
  RT tuple(const std::vector<int>& r, const Rational& c) {
    std::vector<std::vector<Rational>> out;
    for (int k : r) {
      out.emplace_back();
      for (int i = 0; i < k; ++i) out.back().push_back(fresh(c));
    }
    return RT(std::move(out));
  }
  RT values(const std::vector<int>& r) {
    std::vector<std::vector<Rational>> out;
    for (int k : r) {
      out.emplace_back();
      for (int i = 0; i < k; ++i) out.back().push_back(small());
    }
    return RT(std::move(out));
  }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
  std::set<std::string> forbidden_;
};

struct Shape {
  Grading gr;
  std::vector<int> r;
};

int total(const std::vector<int>& r) {
  int s = 0;
  for (int x : r) s += x;
  return s;
}

std::vector<Shape> grid(int max_total, int max_rank) {
  const std::vector<std::pair<int, int>> gradings = {{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 0}};
  const std::vector<std::vector<int>> shapes = {{1}, {2}, {1, 1}, {2, 1}, {1, 2}, {1, 1, 1}};
  std::vector<Shape> out;
  for (auto [m, n] : gradings) {
    if (m + n > max_rank) continue;
    for (const auto& r : shapes)
      if (static_cast<int>(r.size()) == m + n - 1 && total(r) <= max_total) out.push_back({Grading(m, n, 1), r});
  }
  return out;
}

std::string label(const Shape& sh) {
  std::string r;
  for (int x : sh.r) r += (r.empty() ? "" : ",") + std::to_string(x);
  return sh.gr.str() + " r=(" + r + ")";
}

struct Criterion {
  Criterion(int i, std::string n) : id(i), name(std::move(n)) {}
  int id;
  std::string name;
  int cases = 0;
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures.size() < 20) failures.push_back(what);
  }
};

Outcome verify_all(Context& ctx, const json& doc, const RunOptions& ro) {
  if (!doc.is_object()) fail(ErrorCode::ConfigError, "config: top level must be an object");
  std::uint64_t seed = 20240611;
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) fail(ErrorCode::ConfigError, "/seed: expected a non-negative integer");
    seed = doc["seed"].get<std::uint64_t>();
  }
  if (ro.seed) seed = *ro.seed;
  const int max_total = config::integer(doc, "max_total_r", 4, 1, 6);
  const int max_rank = config::integer(doc, "max_rank", 4, 2, 5);
  Sampler rnd(seed);
  const auto cases = grid(max_total, max_rank);
  std::vector<Criterion> out;

  {
    Criterion c{1, "normalized norm equals det G"};
    for (const auto& sh : cases) {
      const RT t = rnd.tuple(sh.r, sh.gr.c), X = rnd.values(sh.r);
      auto a = onshell_hermite(sh.gr, t, X);
      c.expect(normalized_norm(ctx, sh.gr, t, *a) == gaudin_det(gaudin_matrix(sh.gr, t, X)), label(sh));
    }
    out.push_back(std::move(c));
  }
  {
    Criterion c{2, "residue of the highest coefficient"};
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}}) {
      if (m + n > max_rank) continue;
      const Grading gr(m, n, 1);
      const int N = gr.N();
      std::vector<int> r(static_cast<std::size_t>(N), 0);
      while (true) {
        std::size_t i = 0;
        while (i < r.size() && r[i] == 2) r[i++] = 0;
        if (i == r.size()) break;
        ++r[i];
        if (total(r) > max_total) continue;
        const RT s = rnd.tuple(r, gr.c), t = rnd.tuple(r, gr.c);
        for (int mu = 1; mu <= N; ++mu)
          for (int j = 1; j <= t.r(mu); ++j)
            c.expect(z_residue_check(ctx.hc_eps, ctx.hc_rational, gr, s, t, mu, j).pass,
                     label({gr, r}) + " mu=" + std::to_string(mu) + " j=" + std::to_string(j));
      }
    }
    out.push_back(std::move(c));
  }
  {
    Criterion c{3, "sum with alpha = 1 vanishes"};
    for (int rep = 0; c.cases < 20 && !cases.empty(); ++rep)
      for (const auto& sh : cases) {
        const RT s = rnd.tuple(sh.r, sh.gr.c), t = rnd.tuple(sh.r, sh.gr.c);
        c.expect(prop_zero_sum(ctx, sh.gr, s, t).is_zero(), label(sh));
      }
    out.push_back(std::move(c));
  }
  {
    Criterion c{4, "Korepin criteria"};
    for (const auto& sh : cases) {
      const KorepinReport k = korepin_check(sh.gr, rnd.tuple(sh.r, sh.gr.c), rnd.values(sh.r));
      c.expect(k.pass(), label(sh) + (k.failures.empty() ? "" : " " + k.failures.front()));
    }
    out.push_back(std::move(c));
  }
  {
    Criterion c{5, "highest coefficient: recursions agree, pivot choice irrelevant"};
    for (const auto& sh : cases) {
      const RT s = rnd.tuple(sh.r, sh.gr.c), t = rnd.tuple(sh.r, sh.gr.c);
      const HcOptions first{HcPath::PeelFirst, false}, last{HcPath::PeelLast, false};
      const Rational a = ctx.hc_rational.eval(sh.gr, s, t, first);
      c.expect(a == ctx.hc_rational.eval(sh.gr, s, t, last), label(sh) + " cross");
      for (int p = 1; p <= s.r(1); ++p)
        c.expect(ctx.hc_rational.peel_first(sh.gr, s, t, p, first) == a, label(sh) + " pivot s1_" + std::to_string(p));
      for (int p = 1; p <= t.r(sh.gr.N()); ++p)
        c.expect(ctx.hc_rational.peel_last(sh.gr, s, t, p, last) == a, label(sh) + " pivot tN_" + std::to_string(p));
    }
    out.push_back(std::move(c));
  }
  {
    Criterion c{6, "Gaudin entries equal the logarithmic derivative of Phi"};
    for (const auto& sh : cases) {
      const RT t = rnd.tuple(sh.r, sh.gr.c);
      auto a = onshell_hermite(sh.gr, t, rnd.values(sh.r));
      const auto G = gaudin_matrix(sh.gr, t, extract_x(sh.gr, t, *a));
      bool ok = true;
      for (int mu = 1; mu <= sh.gr.N(); ++mu)
        for (int j = 1; j <= t.r(mu); ++j)
          for (int nu = 1; nu <= sh.gr.N(); ++nu)
            for (int k = 1; k <= t.r(nu); ++k)
              ok = ok && G.block(mu, nu, j, k) == gaudin_entry_by_derivative(sh.gr, t, *a, mu, j, nu, k);
      c.expect(ok, label(sh));
    }
    out.push_back(std::move(c));
  }
  {
    Criterion c{7, "Newton solver and analytic Jacobian"};
    const Grading gr(2, 0, 2);
    const ProductAlpha p(gr, {{Rational(0), Rational(4)}});
    const SolveReport s = solve_newton(gr, p, CT({{Complex(0.8)}}));
    c.expect(s.converged && s.residual < 1e-12 && s.iterations <= 10 && (s.t.at(1, 1) - Complex(1.0)).abs() < 1e-10,
             "closed-form root from 0.8");
    const std::vector<Shape> jac = {{Grading(2, 1, 1), {2, 1}}, {Grading(1, 2, 1), {1, 2}},
                                    {Grading(2, 2, 1), {1, 1, 1}}, {Grading(2, 0, 1), {2}}, {Grading(1, 1, 1), {2}}};
    for (int i = 0; i < 10; ++i) {
      const Shape& sh = jac[static_cast<std::size_t>(i) % jac.size()];
      std::vector<std::vector<Complex>> xi(static_cast<std::size_t>(sh.gr.N())), tv(xi.size());
      for (auto& col : xi)
        for (int k = 0; k < 2; ++k) col.emplace_back(rnd.uniform(-2, 2), rnd.uniform(-2, 2));
      for (std::size_t nu = 0; nu < tv.size(); ++nu)
        for (int k = 0; k < sh.r[nu]; ++k) tv[nu].emplace_back(rnd.uniform(-2, 2), rnd.uniform(-2, 2));
      const auto a = ProductAlpha::from_complex(sh.gr, xi);
      const CT t(tv);
      const auto J = analytic_jacobian(sh.gr, t, a);
      const double h = 1e-7;
      bool ok = true;
      std::size_t col = 0;
      for (int nu = 1; nu <= sh.gr.N(); ++nu)
        for (int k = 1; k <= t.r(nu); ++k, ++col) {
          CT tp = t, tm = t;
          tp.at(nu, k) = t.at(nu, k) + Complex(h);
          tm.at(nu, k) = t.at(nu, k) - Complex(h);
          const auto fp = bethe_residual(sh.gr, tp, a), fm = bethe_residual(sh.gr, tm, a);
          for (std::size_t row = 0; row < fp.size(); ++row)
            ok = ok && ((fp[row] - fm[row]) / Complex(2 * h) - J(row, col)).abs() <= 1e-6 * std::max(1.0, J(row, col).abs());
        }
      c.expect(ok, "Jacobian point " + std::to_string(i + 1) + " " + label(sh));
    }
    out.push_back(std::move(c));
  }
  {
    Criterion c{8, "derivative of the norm in X"};
    for (const Shape& sh : {Shape{Grading(1, 1, 1), {2}}, Shape{Grading(2, 1, 1), {1, 1}}}) {
      if (sh.gr.m + sh.gr.n > max_rank || total(sh.r) > max_total) continue;
      const RT t = rnd.tuple(sh.r, sh.gr.c), X = rnd.values(sh.r);
      for (int mu = 1; mu <= sh.gr.N(); ++mu)
        for (int j = 1; j <= t.r(mu); ++j)
          c.expect(x_derivative_check(ctx, sh.gr, t, X, mu, j).pass(),
                   label(sh) + " mu=" + std::to_string(mu) + " j=" + std::to_string(j));
    }
    out.push_back(std::move(c));
  }
  {
    Criterion c{9, "plain and hat formulations agree"};
    for (int rep = 0; c.cases < 20 && !cases.empty(); ++rep)
      for (const auto& sh : cases) {
        const RT s = rnd.tuple(sh.r, sh.gr.c), t = rnd.tuple(sh.r, sh.gr.c);
        std::vector<std::vector<Rational>> xi(static_cast<std::size_t>(sh.gr.N()));
        for (auto& col : xi) col = {rnd.fresh(sh.gr.c), rnd.fresh(sh.gr.c)};
        const ProductAlpha a(sh.gr, xi);
        c.expect(scalar_product(ctx, sh.gr, s, t, a, Formulation::Plain) ==
                     scalar_product(ctx, sh.gr, s, t, a, Formulation::Hat),
                 label(sh));
      }
    out.push_back(std::move(c));
  }

  json rep = {{"command", "verify-all"}, {"seed", seed}, {"max_total_r", max_total}, {"max_rank", max_rank}};
  json crit = json::array(), checks = json::array();
  for (const auto& c : out) {
    const bool ok = c.failures.empty() && c.cases > 0;
    crit.push_back({{"id", c.id}, {"name", c.name}, {"cases", c.cases}, {"pass", ok}, {"failures", c.failures}});
    checks.push_back(check(std::to_string(c.id) + ". " + c.name, ok));
  }
  rep["criteria"] = std::move(crit);
  return finish(std::move(rep), std::move(checks));
}

using Handler = std::function<Outcome(Context&, const json&, const RunOptions&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h = {
      {"hc-eval", [](Context& c, const json& d, const RunOptions&) { return hc_eval(c, d); }},
      {"scalar-product", [](Context& c, const json& d, const RunOptions&) { return scalar_product_cmd(c, d); }},
      {"prop-zero", [](Context& c, const json& d, const RunOptions&) { return prop_zero(c, d); }},
      {"norm-check", [](Context& c, const json& d, const RunOptions&) { return norm_check(c, d); }},
      {"gaudin-det", [](Context& c, const json& d, const RunOptions&) { return gaudin_det_cmd(c, d); }},
      {"korepin-check", [](Context& c, const json& d, const RunOptions&) { return korepin(c, d); }},
      {"residue-check", [](Context& c, const json& d, const RunOptions&) { return residue(c, d); }},
      {"solve-bethe", [](Context& c, const json& d, const RunOptions&) { return solve(c, d); }},
      {"verify-all", verify_all},
  };
  return h;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"hc-eval",       "scalar-product", "prop-zero",
                                                 "norm-check",    "gaudin-det",     "korepin-check",
                                                 "residue-check", "solve-bethe",    "verify-all"};
  return names;
}

Outcome run_command(Context& ctx, const std::string& command, const json& doc, const RunOptions& opts) {
  auto it = handlers().find(command);
  if (it == handlers().end()) fail(ErrorCode::ConfigError, "unknown command '" + command + "'");
  if (!doc.is_object()) fail(ErrorCode::ConfigError, "config: top level must be an object");
  try {
    return it->second(ctx, doc, opts);
  } catch (const json::exception& e) {
    // type mismatches inside otherwise valid JSON
    fail(ErrorCode::ConfigError, std::string("config: ") + e.what());
  }
}

std::string render_text(const json& report) {
  std::ostringstream out;
  out << report.value("command", "?") << ": " << (report.value("pass", false) ? "PASS" : "FAIL") << '\n';
  for (const auto& [key, v] : report.items()) {
    if (key == "command" || key == "pass" || key == "checks" || key == "criteria" || key == "residues") continue;
    if (key == "grading") {
      out << "  grading: gl(" << v["m"].get<int>() << "|" << v["n"].get<int>() << "), c = " << v["c"].get<std::string>()
          << '\n';
      continue;
    }
    out << "  " << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
  if (report.contains("residues"))
    for (const auto& r : report["residues"])
      out << "  residue mu=" << r["mu"].get<int>() << " j=" << r["j"].get<int>() << ": lhs "
          << r["lhs"].get<std::string>() << ", rhs " << r["rhs"].get<std::string>() << '\n';
  if (report.contains("criteria"))
    for (const auto& c : report["criteria"]) {
      out << "  [" << (c["pass"].get<bool>() ? "PASS" : "FAIL") << "] " << c["id"].get<int>() << ". "
          << c["name"].get<std::string>() << " (" << c["cases"].get<int>() << " cases)\n";
      for (const auto& f : c["failures"]) out << "      failed: " << f.get<std::string>() << '\n';
    }
  else if (report.contains("checks"))
    for (const auto& c : report["checks"])
      out << "  [" << (c["pass"].get<bool>() ? "PASS" : "FAIL") << "] " << c["name"].get<std::string>() << '\n';
  return out.str();
}

}  // namespace glmn
