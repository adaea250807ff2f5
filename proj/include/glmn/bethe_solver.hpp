#pragma once

#include <vector>

#include "glmn/alpha.hpp"
#include "glmn/gaudin.hpp"

namespace glmn {

// Phi^(nu)_j - 1 in color-major order.
template <Scalar S>
std::vector<S> bethe_residual(const Grading& gr, const ColoredTuple<S>& t, const AlphaFamily& alpha) {
  std::vector<S> out;
  for (int nu = 1; nu <= t.num_colors(); ++nu)
    for (int j = 1; j <= t.r(nu); ++j) out.push_back(phi(gr, t, alpha, nu, j) - embed<S>(Rational(1)));
  return out;
}

// dPhi^(mu)_j / dt^nu_k = -Phi^(mu)_j G^(mu,nu)_jk / c_[mu+1], with X from the product family.
Matrix<Complex> analytic_jacobian(const Grading& gr, const ColoredTuple<Complex>& t, const ProductAlpha& alpha);

struct SolveOptions {
  double tol = 1e-12;
  int max_iter = 100;
  int max_halvings = 30;
};

struct SolveReport {
  ColoredTuple<Complex> t;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> history;  // residual inf-norm before each step, then the final one
};

double inf_norm(const std::vector<Complex>& v);

SolveReport solve_newton(const Grading& gr, const ProductAlpha& alpha, const ColoredTuple<Complex>& t0,
                         const SolveOptions& opts = {});

}  // namespace glmn
