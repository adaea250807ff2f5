#include "glmn/alpha.hpp"

#include <set>

namespace glmn {

ProductAlpha::ProductAlpha(Grading gr, std::vector<std::vector<Rational>> xi)
    : gr_(std::move(gr)), exact_(true), xi_(std::move(xi)) {
  if (static_cast<int>(xi_.size()) > gr_.N())
    fail(ErrorCode::ColoringMismatch, "inhomogeneity lists for " + std::to_string(xi_.size()) +
                                          " colors, grading has " + std::to_string(gr_.N()));
  for (const auto& col : xi_) {
    xi_c_.emplace_back();
    for (const auto& x : col) xi_c_.back().emplace_back(x);
  }
}

ProductAlpha ProductAlpha::from_complex(Grading gr, std::vector<std::vector<Complex>> xi) {
  if (static_cast<int>(xi.size()) > gr.N())
    fail(ErrorCode::ColoringMismatch, "inhomogeneity lists for " + std::to_string(xi.size()) +
                                          " colors, grading has " + std::to_string(gr.N()));
  ProductAlpha a;
  a.gr_ = std::move(gr);
  a.exact_ = false;
  a.xi_c_ = std::move(xi);
  return a;
}

void ProductAlpha::require_exact() const {
  if (!exact_) fail(ErrorCode::FieldMismatch, "complex inhomogeneities cannot be evaluated over an exact field");
}

Rational ProductAlpha::derivative(int nu, const Rational& z) const {
  require_exact();
  if (nu < 1 || nu > static_cast<int>(xi_.size())) return Rational(0);
  // alpha' = alpha * sum_k [1/(z - xi + c) - 1/(z - xi)]
  return eval<Rational>(nu, z) * -(x_value(nu, z) / gr_.graded_c(nu + 1));
}

Rational ProductAlpha::x_value(int mu, const Rational& z) const {
  require_exact();
  Rational sum;
  if (mu >= 1 && mu <= static_cast<int>(xi_.size())) {
    const Rational c = gr_.graded_c(mu);
    for (const Rational& x : xi_[mu - 1]) {
      if ((z - x).is_zero() || (z - x + c).is_zero())
        fail(ErrorCode::KernelPole, "log-derivative of f at z = " + z.str() + ", xi = " + x.str());
      sum += Rational(1) / (z - x + c) - Rational(1) / (z - x);
    }
  }
  return -gr_.graded_c(mu + 1) * sum;
}

Complex ProductAlpha::x_value(int mu, const Complex& z) const {
  Complex sum;
  if (mu >= 1 && mu <= static_cast<int>(xi_c_.size())) {
    const Complex c(gr_.graded_c(mu));
    for (const Complex& x : xi_c_[mu - 1]) {
      if ((z - x).is_zero() || (z - x + c).is_zero())
        fail(ErrorCode::KernelPole, "log-derivative of f at z = " + z.str() + ", xi = " + x.str());
      sum += Complex(1.0) / (z - x + c) - Complex(1.0) / (z - x);
    }
  }
  return -Complex(gr_.graded_c(mu + 1)) * sum;
}

std::vector<Rational> hermite_fit(const std::vector<Rational>& nodes, const std::vector<Rational>& values,
                                  const std::vector<Rational>& derivatives) {
  if (nodes.size() != values.size() || nodes.size() != derivatives.size())
    fail(ErrorCode::InvalidArgument, "hermite_fit: nodes, values and derivatives differ in length");
  std::set<std::string> seen;
  for (const auto& x : nodes)
    if (!seen.insert(x.str()).second) fail(ErrorCode::DuplicateNode, "repeated interpolation node " + x.str());
  const std::size_t n = 2 * nodes.size();
  if (n == 0) return {};

  // Confluent divided differences on z = (x0, x0, x1, x1, ...).
  std::vector<Rational> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = nodes[i / 2];
  std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) q[i][0] = values[i / 2];
  for (std::size_t i = 1; i < n; ++i)
    q[i][1] = (i % 2 == 1) ? derivatives[i / 2] : (q[i][0] - q[i - 1][0]) / (z[i] - z[i - 1]);
  for (std::size_t k = 2; k < n; ++k)
    for (std::size_t i = k; i < n; ++i) q[i][k] = (q[i][k - 1] - q[i - 1][k - 1]) / (z[i] - z[i - k]);

  // Newton form to monomial basis by Horner.
  std::vector<Rational> p{q[n - 1][n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    std::vector<Rational> next(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= p[i] * z[k];
    }
    next[0] += q[k][k];
    p = std::move(next);
  }
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

Rational HermiteAlpha::derivative(int nu, const Rational& z) const {
  if (nu < 1 || nu > static_cast<int>(p_.size())) return Rational(0);
  const auto& p = p_[nu - 1];
  Rational acc;
  for (std::size_t k = p.size(); k-- > 1;) acc = acc * z + p[k] * Rational(static_cast<long>(k));
  return acc;
}

std::shared_ptr<const HermiteAlpha> onshell_hermite(const Grading& gr, const ColoredTuple<Rational>& t,
                                                    const ColoredTuple<Rational>& X) {
  if (t.num_colors() != gr.N())
    fail(ErrorCode::ColoringMismatch, "t has " + std::to_string(t.num_colors()) + " colors, expected " +
                                          std::to_string(gr.N()));
  if (t.cardinalities() != X.cardinalities())
    fail(ErrorCode::CardinalityMismatch, "X is not shaped like t");
  std::vector<std::vector<Rational>> coeffs;
  for (int nu = 1; nu <= gr.N(); ++nu) {
    std::vector<Rational> nodes, values, derivs;
    for (int j = 1; j <= t.r(nu); ++j) {
      Rational a = bethe_rhs(gr, t, nu, j);
      nodes.push_back(t.at(nu, j));
      derivs.push_back(-X.at(nu, j) * a / gr.graded_c(nu + 1));
      values.push_back(std::move(a));
    }
    coeffs.push_back(nodes.empty() ? std::vector<Rational>{Rational(1)} : hermite_fit(nodes, values, derivs));
  }
  return std::make_shared<HermiteAlpha>(std::move(coeffs));
}

EvaluationWeights::EvaluationWeights(Grading gr, std::vector<std::vector<Rational>> xi)
    : gr_(std::move(gr)), xi_(std::move(xi)) {
  if (static_cast<int>(xi_.size()) > gr_.N())
    fail(ErrorCode::ColoringMismatch, "weight lists for " + std::to_string(xi_.size()) + " fundamental weights, " +
                                          "grading has " + std::to_string(gr_.N()));
}

WeightComparison compare_weights_with_product(const EvaluationWeights& w, const std::vector<Rational>& samples) {
  WeightComparison out;
  ProductAlpha prod(w.grading(), w.xi());
  for (int mu = 1; mu <= w.grading().N(); ++mu) {
    for (const auto& u : samples) {
      Rational a = w.ratio(mu, u), b = prod.eval(mu, u);
      if (!(a == b)) {
        out.equal = false;
        out.mismatches.push_back({mu, u, a, b});
      }
    }
  }
  return out;
}

ModifiedAlpha::ModifiedAlpha(AlphaPtr base, Grading gr, int mu, Rational pivot)
    : base_(std::move(base)), gr_(std::move(gr)), mu_(mu), pivot_(std::move(pivot)) {
  if (!base_) fail(ErrorCode::InvalidArgument, "modified alpha needs a base family");
  detail::check_color(gr_, mu_, 1, gr_.N(), "modified alpha color");
}

}  // namespace glmn
