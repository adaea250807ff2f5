#pragma once

#include <gmpxx.h>

#include <complex>
#include <concepts>
#include <string>
#include <string_view>
#include <vector>

#include "glmn/errors.hpp"

namespace glmn {

// Exact rational, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I v) : v_(static_cast<long>(v)) {}
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "p", "-p", "p/q"; whitespace is not allowed.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return v_; }
  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

 private:
  mpq_class v_;
};

// Polynomial in the regulator eps with exact coefficients; c_[k] multiplies eps^k.
class EpsPoly {
 public:
  EpsPoly() = default;
  explicit EpsPoly(Rational constant);
  explicit EpsPoly(std::vector<Rational> coeffs);
  static EpsPoly monomial(Rational coeff, std::size_t power);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& lead() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  EpsPoly derivative() const;
  EpsPoly scaled(const Rational& k) const;
  EpsPoly monic() const;
  std::string str() const;

  EpsPoly operator-() const;
  friend EpsPoly operator+(const EpsPoly& a, const EpsPoly& b);
  friend EpsPoly operator-(const EpsPoly& a, const EpsPoly& b);
  friend EpsPoly operator*(const EpsPoly& a, const EpsPoly& b);
  friend bool operator==(const EpsPoly& a, const EpsPoly& b) { return a.c_ == b.c_; }

  // a = q*b + r with deg r < deg b.
  static void divmod(const EpsPoly& a, const EpsPoly& b, EpsPoly& q, EpsPoly& r);
  // Monic gcd; gcd(0,0) = 0.
  static EpsPoly gcd(EpsPoly a, EpsPoly b);

 private:
  void trim();
  std::vector<Rational> c_;
};

// Rational function of eps in canonical form: reduced, monic denominator.
class EpsRational {
 public:
  EpsRational() : den_(Rational(1)) {}
  explicit EpsRational(const Rational& c) : num_(c), den_(Rational(1)) {}
  EpsRational(EpsPoly num, EpsPoly den);
  static EpsRational epsilon();

  const EpsPoly& num() const { return num_; }
  const EpsPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  Rational limit_at_zero() const;
  Rational eval(const Rational& x) const;
  // Value and first derivative at eps = 0.
  std::pair<Rational, Rational> taylor1_at_zero() const;
  std::string str() const;

  EpsRational operator-() const;
  friend EpsRational operator+(const EpsRational& a, const EpsRational& b);
  friend EpsRational operator-(const EpsRational& a, const EpsRational& b);
  friend EpsRational operator*(const EpsRational& a, const EpsRational& b);
  friend EpsRational operator/(const EpsRational& a, const EpsRational& b);
  EpsRational& operator+=(const EpsRational& o) { return *this = *this + o; }
  EpsRational& operator-=(const EpsRational& o) { return *this = *this - o; }
  EpsRational& operator*=(const EpsRational& o) { return *this = *this * o; }
  EpsRational& operator/=(const EpsRational& o) { return *this = *this / o; }
  friend bool operator==(const EpsRational& a, const EpsRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Raw {};
  EpsRational(Raw, EpsPoly num, EpsPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  EpsPoly num_;
  EpsPoly den_;
};

// Double-precision complex; finite by construction, exact-zero divisor rejected.
class Complex {
 public:
  Complex() = default;
  Complex(double re, double im = 0.0);
  explicit Complex(std::complex<double> v) : Complex(v.real(), v.imag()) {}
  explicit Complex(const Rational& q) : Complex(q.to_double(), 0.0) {}

  double re() const { return v_.real(); }
  double im() const { return v_.imag(); }
  double abs() const { return std::abs(v_); }
  std::complex<double> value() const { return v_; }
  bool is_zero() const { return v_ == std::complex<double>(); }
  std::string str() const;

  Complex operator-() const { return Complex(-v_); }
  friend Complex operator+(const Complex& a, const Complex& b) { return Complex(a.v_ + b.v_); }
  friend Complex operator-(const Complex& a, const Complex& b) { return Complex(a.v_ - b.v_); }
  friend Complex operator*(const Complex& a, const Complex& b) { return Complex(a.v_ * b.v_); }
  friend Complex operator/(const Complex& a, const Complex& b);
  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator-=(const Complex& o) { return *this = *this - o; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
  Complex& operator/=(const Complex& o) { return *this = *this / o; }
  friend bool operator==(const Complex& a, const Complex& b) { return a.v_ == b.v_; }

 private:
  std::complex<double> v_;
};

template <class S>
concept Scalar = std::same_as<S, Rational> || std::same_as<S, EpsRational> || std::same_as<S, Complex>;

template <class S>
inline constexpr bool is_exact_v = !std::same_as<S, Complex>;

template <Scalar S>
S embed(const Rational& q) {
  if constexpr (std::same_as<S, Rational>) return q;
  else return S(q);
}

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const EpsRational& x) { return x.is_zero(); }
inline bool is_zero(const Complex& x) { return x.is_zero(); }

inline std::string to_string(const Rational& x) { return x.str(); }
inline std::string to_string(const EpsRational& x) { return x.str(); }
inline std::string to_string(const Complex& x) { return x.str(); }

// Canonical text used for memo keys; equal values give equal keys on exact fields.
void append_key(std::string& out, const Rational& x);
void append_key(std::string& out, const EpsRational& x);
void append_key(std::string& out, const Complex& x);

}  // namespace glmn
