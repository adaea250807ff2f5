#pragma once

#include <optional>

#include "glmn/alpha.hpp"
#include "glmn/context.hpp"
#include "glmn/gaudin.hpp"

namespace glmn {

enum class Formulation { Plain, Hat };

// Partition sum for the scalar product of Bethe vectors with parameters s and t.
template <Scalar S>
S scalar_product(const Context& ctx, const Grading& gr, const ColoredTuple<S>& s, const ColoredTuple<S>& t,
                 const AlphaFamily& alpha, Formulation form = Formulation::Plain);

// The same sum with alpha = 1; vanishes identically.
template <Scalar S>
S prop_zero_sum(const Context& ctx, const Grading& gr, const ColoredTuple<S>& s, const ColoredTuple<S>& t);

// Regulator directions 1, 2, 3, ... in color-major order.
ColoredTuple<Rational> default_kappa(const ColoredTuple<Rational>& t);

// lim_{eps->0} of the scalar product at s = t + kappa*eps.
Rational norm_limit(const Context& ctx, const Grading& gr, const ColoredTuple<Rational>& t, const AlphaFamily& alpha,
                    const std::optional<ColoredTuple<Rational>>& kappa = std::nullopt);

AlphaPtr modified_alpha(AlphaPtr alpha, const Grading& gr, int mu, const Rational& pivot);

struct XDerivativeReport {
  Rational lhs;                // norm(X^mu_j + 1) - norm(X^mu_j)
  Rational rhs;                // prefactor * norm of the reduced system with modified alpha
  Rational second_difference;  // in X^mu_j
  bool reduced_onshell = false;
  bool pass() const { return lhs == rhs && second_difference.is_zero() && reduced_onshell; }
};

XDerivativeReport x_derivative_check(const Context& ctx, const Grading& gr, const ColoredTuple<Rational>& t,
                                     const ColoredTuple<Rational>& X, int mu, int j);

// Normalized norm (prod gamma)^{-1} (prod f) * norm_limit for an on-shell family at t.
Rational normalized_norm(const Context& ctx, const Grading& gr, const ColoredTuple<Rational>& t,
                         const AlphaFamily& alpha, const std::optional<ColoredTuple<Rational>>& kappa = std::nullopt);

// Rejects repeated parameters inside a color.
template <Scalar S>
void require_distinct(const ColoredTuple<S>& t, const char* name) {
  for (int nu = 1; nu <= t.num_colors(); ++nu)
    for (int j = 1; j <= t.r(nu); ++j)
      for (int k = j + 1; k <= t.r(nu); ++k)
        if (t.at(nu, j) == t.at(nu, k))
          fail(ErrorCode::InvalidArgument, std::string(name) + ": repeated parameter " + to_string(t.at(nu, j)) +
                                               " in color " + std::to_string(nu));
}

extern template Rational scalar_product(const Context&, const Grading&, const ColoredTuple<Rational>&,
                                        const ColoredTuple<Rational>&, const AlphaFamily&, Formulation);
extern template EpsRational scalar_product(const Context&, const Grading&, const ColoredTuple<EpsRational>&,
                                           const ColoredTuple<EpsRational>&, const AlphaFamily&, Formulation);
extern template Complex scalar_product(const Context&, const Grading&, const ColoredTuple<Complex>&,
                                       const ColoredTuple<Complex>&, const AlphaFamily&, Formulation);

}  // namespace glmn
