#pragma once

#include <memory>
#include <string>
#include <vector>

#include "glmn/kernels.hpp"
#include "glmn/partitions.hpp"

namespace glmn {

// Functional parameters alpha_nu(z) of the generalized model, usable over every scalar field.
class AlphaFamily {
 public:
  virtual ~AlphaFamily() = default;
  virtual Rational value(int nu, const Rational& z) const = 0;
  virtual EpsRational value(int nu, const EpsRational& z) const = 0;
  virtual Complex value(int nu, const Complex& z) const = 0;
  virtual std::string kind() const = 0;
};

using AlphaPtr = std::shared_ptr<const AlphaFamily>;

template <Scalar S>
S evaluate(const AlphaFamily& a, int nu, const S& z) {
  return a.value(nu, z);
}

template <class Derived>
class AlphaBase : public AlphaFamily {
 public:
  Rational value(int nu, const Rational& z) const override { return self().template eval<Rational>(nu, z); }
  EpsRational value(int nu, const EpsRational& z) const override { return self().template eval<EpsRational>(nu, z); }
  Complex value(int nu, const Complex& z) const override { return self().template eval<Complex>(nu, z); }

 private:
  const Derived& self() const { return static_cast<const Derived&>(*this); }
};

class UnitAlpha : public AlphaBase<UnitAlpha> {
 public:
  template <Scalar S>
  S eval(int, const S&) const { return embed<S>(Rational(1)); }
  std::string kind() const override { return "unit"; }
};

// alpha_mu(u) = prod_j f_[mu](u, xi^(mu)_j).
class ProductAlpha : public AlphaBase<ProductAlpha> {
 public:
  ProductAlpha(Grading gr, std::vector<std::vector<Rational>> xi);
  static ProductAlpha from_complex(Grading gr, std::vector<std::vector<Complex>> xi);

  template <Scalar S>
  S eval(int nu, const S& z) const {
    S acc = embed<S>(Rational(1));
    if (nu < 1 || nu > static_cast<int>(xi_c_.size())) return acc;
    const Rational c = gr_.graded_c(nu);
    if constexpr (std::same_as<S, Complex>) {
      for (const Complex& x : xi_c_[nu - 1]) acc *= kernel_f(c, z, x);
    } else {
      require_exact();
      for (const Rational& x : xi_[nu - 1]) acc *= kernel_f(c, z, embed<S>(x));
    }
    return acc;
  }

  // Exact alpha' by the product rule.
  Rational derivative(int nu, const Rational& z) const;
  // X = -c_[mu+1] alpha'/alpha from the logarithmic derivative.
  Complex x_value(int mu, const Complex& z) const;
  Rational x_value(int mu, const Rational& z) const;

  const Grading& grading() const { return gr_; }
  bool exact() const { return exact_; }
  const std::vector<std::vector<Rational>>& xi() const { return xi_; }
  const std::vector<std::vector<Complex>>& xi_complex() const { return xi_c_; }
  std::string kind() const override { return "product"; }

 private:
  ProductAlpha() = default;
  void require_exact() const;
  Grading gr_;
  bool exact_ = true;
  std::vector<std::vector<Rational>> xi_;
  std::vector<std::vector<Complex>> xi_c_;
};

// Coefficients (ascending powers) of the polynomial of degree <= 2r-1 with the given values and
// first derivatives at distinct nodes.
std::vector<Rational> hermite_fit(const std::vector<Rational>& nodes, const std::vector<Rational>& values,
                                  const std::vector<Rational>& derivatives);

class HermiteAlpha : public AlphaBase<HermiteAlpha> {
 public:
  // One coefficient list per color; colors past the end evaluate to 1.
  explicit HermiteAlpha(std::vector<std::vector<Rational>> coeffs) : p_(std::move(coeffs)) {}

  template <Scalar S>
  S eval(int nu, const S& z) const {
    if (nu < 1 || nu > static_cast<int>(p_.size())) return embed<S>(Rational(1));
    S acc = embed<S>(Rational(0));
    const auto& p = p_[nu - 1];
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + embed<S>(*it);
    return acc;
  }
  Rational derivative(int nu, const Rational& z) const;
  const std::vector<std::vector<Rational>>& coefficients() const { return p_; }
  std::string kind() const override { return "hermite"; }

 private:
  std::vector<std::vector<Rational>> p_;
};

// Value alpha_nu(t^nu_j) must take at an on-shell point.
template <Scalar S>
S bethe_rhs(const Grading& gr, const ColoredTuple<S>& t, int nu, int j) {
  const S& tj = t.at(nu, j);
  const ColoredTuple<S> rest = t.complement(nu, j);
  S v = set_product<S>(gamma_of<S>(gr, nu), tj, rest.color(nu));
  v *= set_product<S>(f_of<S>(gr, nu + 1), t.color(nu + 1), tj);
  v /= set_product<S>(gamma_of<S>(gr, nu), rest.color(nu), tj);
  v /= set_product<S>(f_of<S>(gr, nu), tj, t.color(nu - 1));
  if (nu == gr.m && t.r(gr.m) % 2 == 0) v = -v;
  return v;
}

// Hermite family making t on-shell with logarithmic derivatives realizing X.
std::shared_ptr<const HermiteAlpha> onshell_hermite(const Grading& gr, const ColoredTuple<Rational>& t,
                                                    const ColoredTuple<Rational>& X);

// Weights lambda_mu(u) = prod_{j=mu}^{N} prod_k f_[mu](u, xi^(j)_k), mu = 1..m+n.
class EvaluationWeights {
 public:
  EvaluationWeights(Grading gr, std::vector<std::vector<Rational>> xi);

  template <Scalar S>
  S lambda(int mu, const S& u) const {
    detail::check_color(gr_, mu, 1, gr_.m + gr_.n, "lambda_mu");
    S acc = embed<S>(Rational(1));
    const Rational c = gr_.graded_c(mu);
    for (int j = mu; j <= static_cast<int>(xi_.size()); ++j)
      for (const Rational& x : xi_[j - 1]) acc *= kernel_f(c, u, embed<S>(x));
    return acc;
  }
  template <Scalar S>
  S ratio(int mu, const S& u) const { return lambda(mu, u) / lambda(mu + 1, u); }

  const Grading& grading() const { return gr_; }
  const std::vector<std::vector<Rational>>& xi() const { return xi_; }

 private:
  Grading gr_;
  std::vector<std::vector<Rational>> xi_;
};

// alpha_mu = lambda_mu / lambda_{mu+1} as a family.
class WeightRatioAlpha : public AlphaBase<WeightRatioAlpha> {
 public:
  explicit WeightRatioAlpha(EvaluationWeights w) : w_(std::move(w)) {}
  template <Scalar S>
  S eval(int nu, const S& z) const {
    if (nu < 1 || nu > w_.grading().N()) return embed<S>(Rational(1));
    return w_.ratio(nu, z);
  }
  std::string kind() const override { return "weight-ratio"; }

 private:
  EvaluationWeights w_;
};

struct WeightComparison {
  bool equal = true;
  struct Mismatch {
    int mu;
    Rational u, ratio, product;
  };
  std::vector<Mismatch> mismatches;
};

// Compares lambda_mu/lambda_{mu+1} with the product family built on the same lists at the sample points.
WeightComparison compare_weights_with_product(const EvaluationWeights& w, const std::vector<Rational>& samples);

// Family shifted by removing the parameter `pivot` of color mu.
class ModifiedAlpha : public AlphaBase<ModifiedAlpha> {
 public:
  ModifiedAlpha(AlphaPtr base, Grading gr, int mu, Rational pivot);

  template <Scalar S>
  S eval(int nu, const S& z) const {
    S a = base_->value(nu, z);
    const S p = embed<S>(pivot_);
    if (nu == mu_) {
      a *= gamma(gr_, mu_, p, z) / gamma(gr_, mu_, z, p);
      if (mu_ == gr_.m) a = -a;
    } else if (nu == mu_ + 1) {
      a *= f_graded(gr_, mu_ + 1, z, p);
    } else if (nu == mu_ - 1) {
      a /= f_graded(gr_, mu_, p, z);
    }
    return a;
  }
  std::string kind() const override { return "modified"; }

 private:
  AlphaPtr base_;
  Grading gr_;
  int mu_;
  Rational pivot_;
};

}  // namespace glmn
