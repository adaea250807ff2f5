#pragma once

#include <string>
#include <vector>

#include "glmn/alpha.hpp"
#include "glmn/linalg.hpp"
#include "glmn/partitions.hpp"

namespace glmn {

// Phi^(mu)_j; equals 1 exactly when the Bethe equation for t^mu_j holds.
template <Scalar S>
S phi(const Grading& gr, const ColoredTuple<S>& t, const AlphaFamily& alpha, int mu, int j) {
  const S& tj = t.at(mu, j);
  const ColoredTuple<S> rest = t.complement(mu, j);
  S v = evaluate(alpha, mu, tj);
  v *= set_product<S>(gamma_of<S>(gr, mu), rest.color(mu), tj);
  v /= set_product<S>(gamma_of<S>(gr, mu), tj, rest.color(mu));
  v *= set_product<S>(f_of<S>(gr, mu), tj, t.color(mu - 1));
  v /= set_product<S>(f_of<S>(gr, mu + 1), t.color(mu + 1), tj);
  if (mu == gr.m && t.r(gr.m) % 2 == 0) v = -v;
  return v;
}

// K_mu(x,y) = 2c^2 (1 - delta_{mu,m}) / ((x-y)^2 - c^2)
template <Scalar S>
S korepin_k(const Grading& gr, int mu, const S& x, const S& y) {
  if (mu == gr.m) return embed<S>(Rational(0));
  const S c = embed<S>(gr.c);
  const S d = x - y;
  const S den = d * d - c * c;
  if (is_zero(den)) detail::kernel_pole("K", to_string(x), to_string(y));
  return embed<S>(Rational(2)) * c * c / den;
}

// J_[mu](x,y) = c^2 / ((x-y)(x-y+c_[mu]))
template <Scalar S>
S korepin_j(const Grading& gr, int mu, const S& x, const S& y) {
  const S d = x - y;
  const S den = d * (d + embed<S>(gr.graded_c(mu)));
  if (is_zero(den)) detail::kernel_pole("J", to_string(x), to_string(y));
  return embed<S>(gr.c * gr.c) / den;
}

template <Scalar S>
struct GaudinMatrix {
  Grading grading;
  ColoredTuple<S> t;
  ColoredTuple<S> X;
  std::vector<int> offset;  // offset[mu-1] = first row of color mu
  Matrix<S> entries;

  int index(int mu, int j) const { return offset[mu - 1] + (j - 1); }
  const S& block(int mu, int nu, int j, int k) const { return entries(index(mu, j), index(nu, k)); }
};

template <Scalar S>
GaudinMatrix<S> gaudin_matrix(const Grading& gr, const ColoredTuple<S>& t, const ColoredTuple<S>& X) {
  if (t.num_colors() != gr.N())
    fail(ErrorCode::ColoringMismatch, "t has " + std::to_string(t.num_colors()) + " colors, expected " +
                                          std::to_string(gr.N()));
  if (t.cardinalities() != X.cardinalities()) fail(ErrorCode::CardinalityMismatch, "X is not shaped like t");
  GaudinMatrix<S> G{gr, t, X, {}, {}};
  int off = 0;
  for (int mu = 1; mu <= gr.N(); ++mu) {
    G.offset.push_back(off);
    off += t.r(mu);
  }
  G.entries = Matrix<S>(static_cast<std::size_t>(off), static_cast<std::size_t>(off));
  const int N = gr.N();
  for (int mu = 1; mu <= N; ++mu) {
    for (int j = 1; j <= t.r(mu); ++j) {
      const S& x = t.at(mu, j);
      const auto row = static_cast<std::size_t>(G.index(mu, j));
      S diag = X.at(mu, j);
      for (const S& y : t.color(mu)) diag -= korepin_k(gr, mu, x, y);
      S below = embed<S>(Rational(0));
      for (const S& y : t.color(mu - 1)) below += korepin_j(gr, mu, x, y);
      diag += mu == gr.m ? -below : below;
      for (const S& y : t.color(mu + 1)) diag += korepin_j(gr, mu + 1, y, x);
      for (int k = 1; k <= t.r(mu); ++k) {
        S v = korepin_k(gr, mu, x, t.at(mu, k));
        if (k == j) v += diag;
        G.entries(row, static_cast<std::size_t>(G.index(mu, k))) = v;
      }
      if (mu > 1)
        for (int k = 1; k <= t.r(mu - 1); ++k) {
          S v = korepin_j(gr, mu, x, t.at(mu - 1, k));
          G.entries(row, static_cast<std::size_t>(G.index(mu - 1, k))) = mu == gr.m ? v : -v;
        }
      if (mu < N)
        for (int k = 1; k <= t.r(mu + 1); ++k)
          G.entries(row, static_cast<std::size_t>(G.index(mu + 1, k))) = -korepin_j(gr, mu + 1, t.at(mu + 1, k), x);
    }
  }
  return G;
}

template <Scalar S>
S gaudin_det(const GaudinMatrix<S>& G) {
  return determinant(G.entries);
}

// X^mu_j = -c_[mu+1] alpha'_mu(t^mu_j) / alpha_mu(t^mu_j), computed on the eps-field.
ColoredTuple<Rational> extract_x(const Grading& gr, const ColoredTuple<Rational>& t, const AlphaFamily& alpha);

// -c_[mu+1] d log Phi^(mu)_j / d t^nu_k, exact via t^nu_k -> t^nu_k + eps.
Rational gaudin_entry_by_derivative(const Grading& gr, const ColoredTuple<Rational>& t, const AlphaFamily& alpha,
                                    int mu, int j, int nu, int k);

// prod_nu prod_{p != q} gamma_nu(t_p, t_q) / prod_{nu<N} f_[nu+1](t^{nu+1}, t^nu)
template <Scalar S>
S norm_prefactor(const Grading& gr, const ColoredTuple<S>& t) {
  S num = embed<S>(Rational(1)), den = embed<S>(Rational(1));
  for (int nu = 1; nu <= gr.N(); ++nu) {
    auto col = t.color(nu);
    for (std::size_t p = 0; p < col.size(); ++p)
      for (std::size_t q = 0; q < col.size(); ++q)
        if (p != q) num *= gamma(gr, nu, col[p], col[q]);
  }
  for (int nu = 1; nu < gr.N(); ++nu) den *= set_product<S>(f_of<S>(gr, nu + 1), t.color(nu + 1), t.color(nu));
  return num / den;
}

template <Scalar S>
S norm_rhs(const Grading& gr, const ColoredTuple<S>& t, const ColoredTuple<S>& X) {
  return norm_prefactor(gr, t) * gaudin_det(gaudin_matrix(gr, t, X));
}

struct KorepinReport {
  bool symmetry = true;       // (i)
  bool affine = true;         // (ii)
  bool single = true;         // (iii)
  bool derivative = true;     // (iv)
  bool vanishing = true;      // (v)
  std::vector<std::string> failures;
  bool pass() const { return symmetry && affine && single && derivative && vanishing; }
};

// X values of the reduced system after removing t^mu_j.
ColoredTuple<Rational> modified_x(const Grading& gr, const ColoredTuple<Rational>& t, const ColoredTuple<Rational>& X,
                                  int mu, int j);

KorepinReport korepin_check(const Grading& gr, const ColoredTuple<Rational>& t, const ColoredTuple<Rational>& X);

}  // namespace glmn
