#pragma once

#include <span>
#include <string>

#include "glmn/field.hpp"

namespace glmn {

// gl(m|n) grading with coupling c. Sub-gradings reached by reductions may have
// N = 0; validate() enforces the user-facing invariants.
struct Grading {
  int m = 0;
  int n = 0;
  Rational c = 1;

  Grading() = default;
  Grading(int m_, int n_, Rational c_) : m(m_), n(n_), c(std::move(c_)) {}

  int N() const { return m + n - 1; }
  void validate() const;
  int parity(int i) const;
  Rational graded_c(int i) const;
  std::string str() const;
  friend bool operator==(const Grading&, const Grading&) = default;
};

namespace detail {
[[noreturn]] void kernel_pole(const char* kernel, const std::string& u, const std::string& v);
void check_color(const Grading& gr, int i, int lo, int hi, const char* what);
}  // namespace detail

template <Scalar S>
S kernel_g(const Rational& c, const S& u, const S& v) {
  S d = u - v;
  if (is_zero(d)) detail::kernel_pole("g", to_string(u), to_string(v));
  return embed<S>(c) / d;
}

template <Scalar S>
S kernel_f(const Rational& c, const S& u, const S& v) {
  S d = u - v;
  if (is_zero(d)) detail::kernel_pole("f", to_string(u), to_string(v));
  return (d + embed<S>(c)) / d;
}

template <Scalar S>
S g(const Grading& gr, const S& u, const S& v) { return kernel_g(gr.c, u, v); }

template <Scalar S>
S f(const Grading& gr, const S& u, const S& v) { return kernel_f(gr.c, u, v); }

template <Scalar S>
S g_graded(const Grading& gr, int i, const S& u, const S& v) {
  detail::check_color(gr, i, 1, gr.m + gr.n, "g_[i]");
  return kernel_g(gr.graded_c(i), u, v);
}

template <Scalar S>
S f_graded(const Grading& gr, int i, const S& u, const S& v) {
  detail::check_color(gr, i, 1, gr.m + gr.n, "f_[i]");
  return kernel_f(gr.graded_c(i), u, v);
}

template <Scalar S>
S gamma(const Grading& gr, int i, const S& u, const S& v) {
  detail::check_color(gr, i, 1, gr.N(), "gamma_i");
  return i == gr.m ? kernel_g(gr.graded_c(i), u, v) : kernel_f(gr.graded_c(i), u, v);
}

// Double product over A x B; any empty set gives 1.
template <Scalar S, class Kernel>
S set_product(Kernel&& k, std::span<const S> A, std::span<const S> B) {
  S acc = embed<S>(Rational(1));
  for (const S& a : A)
    for (const S& b : B) acc *= k(a, b);
  return acc;
}

template <Scalar S, class Kernel>
S set_product(Kernel&& k, const S& a, std::span<const S> B) {
  return set_product<S>(k, std::span<const S>(&a, 1), B);
}

template <Scalar S, class Kernel>
S set_product(Kernel&& k, std::span<const S> A, const S& b) {
  return set_product<S>(k, A, std::span<const S>(&b, 1));
}

// Bound kernels, convenient with set_product.
template <Scalar S>
auto f_of(const Grading& gr, int i) {
  return [&gr, i](const S& u, const S& v) { return f_graded(gr, i, u, v); };
}
template <Scalar S>
auto g_of(const Grading& gr, int i) {
  return [&gr, i](const S& u, const S& v) { return g_graded(gr, i, u, v); };
}
template <Scalar S>
auto gamma_of(const Grading& gr, int i) {
  return [&gr, i](const S& u, const S& v) { return gamma(gr, i, u, v); };
}

}  // namespace glmn
