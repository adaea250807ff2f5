#include "glmn/gaudin.hpp"

#include <algorithm>
#include <cmath>

namespace glmn {

bool lu_decompose(Matrix<Complex>& a, std::vector<std::size_t>& perm, int& sign) {
  const std::size_t n = a.rows();
  perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (a(i, k).abs() > a(p, k).abs()) p = i;
    if (a(p, k).is_zero()) return false;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      std::swap(perm[k], perm[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      a(i, k) = a(i, k) / a(k, k);
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= a(i, k) * a(k, j);
    }
  }
  return true;
}

Complex determinant_lu(Matrix<Complex> a) {
  std::vector<std::size_t> perm;
  int sign = 1;
  if (!lu_decompose(a, perm, sign)) return Complex(0.0);
  Complex d(static_cast<double>(sign));
  for (std::size_t i = 0; i < a.rows(); ++i) d *= a(i, i);
  return d;
}

std::vector<Complex> lu_solve(Matrix<Complex> a, std::vector<Complex> b) {
  std::vector<std::size_t> perm;
  int sign = 1;
  if (!lu_decompose(a, perm, sign)) fail(ErrorCode::SingularJacobian, "matrix is singular");
  const std::size_t n = a.rows();
  std::vector<Complex> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex s = b[perm[i]];
    for (std::size_t j = 0; j < i; ++j) s -= a(i, j) * x[j];
    x[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    Complex s = x[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

namespace {
ColoredTuple<EpsRational> lift(const ColoredTuple<Rational>& t) {
  return t.map([](const Rational& q) { return EpsRational(q); });
}
}  // namespace

ColoredTuple<Rational> extract_x(const Grading& gr, const ColoredTuple<Rational>& t, const AlphaFamily& alpha) {
  ColoredTuple<Rational> X = t;
  for (int mu = 1; mu <= t.num_colors(); ++mu) {
    for (int j = 1; j <= t.r(mu); ++j) {
      const EpsRational z = EpsRational(t.at(mu, j)) + EpsRational::epsilon();
      auto [a, da] = evaluate(alpha, mu, z).taylor1_at_zero();
      if (a.is_zero())
        fail(ErrorCode::DivisionByZero, "alpha_" + std::to_string(mu) + " vanishes at " + t.at(mu, j).str());
      X.at(mu, j) = -gr.graded_c(mu + 1) * da / a;
    }
  }
  return X;
}

Rational gaudin_entry_by_derivative(const Grading& gr, const ColoredTuple<Rational>& t, const AlphaFamily& alpha,
                                    int mu, int j, int nu, int k) {
  ColoredTuple<EpsRational> te = lift(t);
  te.at(nu, k) = te.at(nu, k) + EpsRational::epsilon();
  auto [v, dv] = phi(gr, te, alpha, mu, j).taylor1_at_zero();
  if (v.is_zero())
    fail(ErrorCode::DivisionByZero, "Phi^(" + std::to_string(mu) + ")_" + std::to_string(j) + " vanishes");
  return -gr.graded_c(mu + 1) * dv / v;
}

ColoredTuple<Rational> modified_x(const Grading& gr, const ColoredTuple<Rational>& t, const ColoredTuple<Rational>& X,
                                  int mu, int j) {
  const Rational tj = t.at(mu, j);
  ColoredTuple<Rational> Xm = X.complement(mu, j);
  const ColoredTuple<Rational> tm = t.complement(mu, j);
  for (int k = 1; k <= tm.r(mu); ++k) Xm.at(mu, k) -= korepin_k(gr, mu, tj, tm.at(mu, k));
  if (mu < gr.N())
    for (int k = 1; k <= tm.r(mu + 1); ++k) {
      Rational v = korepin_j(gr, mu + 1, tm.at(mu + 1, k), tj);
      Xm.at(mu + 1, k) += gr.m == mu + 1 ? -v : v;
    }
  if (mu > 1)
    for (int k = 1; k <= tm.r(mu - 1); ++k) Xm.at(mu - 1, k) += korepin_j(gr, mu, tj, tm.at(mu - 1, k));
  return Xm;
}

KorepinReport korepin_check(const Grading& gr, const ColoredTuple<Rational>& t, const ColoredTuple<Rational>& X) {
  KorepinReport rep;
  auto det = [&](const ColoredTuple<Rational>& tt, const ColoredTuple<Rational>& xx) {
    return gaudin_det(gaudin_matrix(gr, tt, xx));
  };
  auto where = [](int mu, int j) { return "(" + std::to_string(mu) + "," + std::to_string(j) + ")"; };
  const Rational base = det(t, X);

  for (int mu = 1; mu <= gr.N(); ++mu)
    for (int j = 1; j <= t.r(mu); ++j)
      for (int k = j + 1; k <= t.r(mu); ++k) {
        ColoredTuple<Rational> t2 = t, X2 = X;
        std::swap(t2.at(mu, j), t2.at(mu, k));
        std::swap(X2.at(mu, j), X2.at(mu, k));
        if (!(det(t2, X2) == base)) {
          rep.symmetry = false;
          rep.failures.push_back("(i) swap " + where(mu, j) + "<->" + where(mu, k));
        }
      }

  for (int mu = 1; mu <= gr.N(); ++mu)
    for (int j = 1; j <= t.r(mu); ++j) {
      ColoredTuple<Rational> X1 = X, X2 = X;
      X1.at(mu, j) += Rational(1);
      X2.at(mu, j) += Rational(2);
      const Rational d1 = det(t, X1), d2 = det(t, X2);
      if (!(d2 - Rational(2) * d1 + base).is_zero()) {
        rep.affine = false;
        rep.failures.push_back("(ii) second difference in X" + where(mu, j));
      }

      std::vector<std::vector<Rational>> tc(static_cast<std::size_t>(gr.N())), xc(tc.size());
      tc[mu - 1].push_back(t.at(mu, j));
      xc[mu - 1].push_back(X.at(mu, j));
      if (!(det(ColoredTuple<Rational>(tc), ColoredTuple<Rational>(xc)) == X.at(mu, j))) {
        rep.single = false;
        rep.failures.push_back("(iii) single parameter " + where(mu, j));
      }

      const Rational reduced = det(t.complement(mu, j), modified_x(gr, t, X, mu, j));
      if (!(d1 - base == reduced)) {
        rep.derivative = false;
        rep.failures.push_back("(iv) derivative in X" + where(mu, j));
      }
    }

  const ColoredTuple<Rational> zero = X.map([](const Rational&) { return Rational(0); });
  if (!det(t, zero).is_zero()) {
    rep.vanishing = false;
    rep.failures.push_back("(v) det at X = 0");
  }
  return rep;
}

}  // namespace glmn
