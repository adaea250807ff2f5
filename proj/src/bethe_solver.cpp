#include "glmn/bethe_solver.hpp"

#include <cmath>
#include <exception>

namespace glmn {

double inf_norm(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, x.abs());
  return m;
}

Matrix<Complex> analytic_jacobian(const Grading& gr, const ColoredTuple<Complex>& t, const ProductAlpha& alpha) {
  ColoredTuple<Complex> X = t;
  for (int mu = 1; mu <= t.num_colors(); ++mu)
    for (int j = 1; j <= t.r(mu); ++j) X.at(mu, j) = alpha.x_value(mu, t.at(mu, j));
  const GaudinMatrix<Complex> G = gaudin_matrix(gr, t, X);
  Matrix<Complex> J = G.entries;
  for (int mu = 1; mu <= t.num_colors(); ++mu) {
    const Complex c(gr.graded_c(mu + 1));
    for (int j = 1; j <= t.r(mu); ++j) {
      const Complex p = phi(gr, t, alpha, mu, j);
      const auto row = static_cast<std::size_t>(G.index(mu, j));
      for (std::size_t col = 0; col < J.cols(); ++col) J(row, col) = -(p * J(row, col)) / c;
    }
  }
  return J;
}

namespace {
ColoredTuple<Complex> shifted(const ColoredTuple<Complex>& t, const std::vector<Complex>& step, double scale) {
  ColoredTuple<Complex> out = t;
  std::size_t i = 0;
  for (int nu = 1; nu <= t.num_colors(); ++nu)
    for (int j = 1; j <= t.r(nu); ++j) out.at(nu, j) = t.at(nu, j) + Complex(scale) * step[i++];
  return out;
}
}  // namespace

SolveReport solve_newton(const Grading& gr, const ProductAlpha& alpha, const ColoredTuple<Complex>& t0,
                         const SolveOptions& opts) {
  gr.validate();
  if (t0.num_colors() != gr.N())
    fail(ErrorCode::ColoringMismatch, "initial guess has " + std::to_string(t0.num_colors()) +
                                          " colors, expected " + std::to_string(gr.N()));
  SolveReport rep;
  rep.t = t0;
  // a pole at the guess surfaces here, before any step
  std::vector<Complex> F = bethe_residual(gr, rep.t, alpha);
  rep.residual = inf_norm(F);
  rep.history.push_back(rep.residual);

  while (rep.residual > opts.tol && rep.iterations < opts.max_iter) {
    const Matrix<Complex> J = analytic_jacobian(gr, rep.t, alpha);
    std::vector<Complex> rhs;
    for (const auto& x : F) rhs.push_back(-x);
    const std::vector<Complex> step = lu_solve(J, rhs);

    bool accepted = false, evaluated = false;
    std::exception_ptr pole;
    double scale = 1.0;
    for (int h = 0; h <= opts.max_halvings; ++h, scale *= 0.5) {
      try {
        ColoredTuple<Complex> trial = shifted(rep.t, step, scale);
        std::vector<Complex> Ft = bethe_residual(gr, trial, alpha);
        const double r = inf_norm(Ft);
        evaluated = true;
        if (r < rep.residual) {
          rep.t = std::move(trial);
          F = std::move(Ft);
          rep.residual = r;
          accepted = true;
          break;
        }
      } catch (const Error& e) {
        // the trial point hit a pole; halve and retry
        if (e.code() != ErrorCode::KernelPole && e.code() != ErrorCode::DivisionByZero &&
            e.code() != ErrorCode::InvalidArgument)
          throw;
        pole = std::current_exception();
      }
    }
    if (!accepted && !evaluated && pole) std::rethrow_exception(pole);
    ++rep.iterations;
    rep.history.push_back(rep.residual);
    if (!accepted) break;
  }
  rep.converged = rep.residual <= opts.tol;
  return rep;
}

}  // namespace glmn
