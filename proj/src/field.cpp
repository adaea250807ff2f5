#include "glmn/field.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>

namespace glmn {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PoleAtZero: return "PoleAtZero";
    case ErrorCode::PoleAtPoint: return "PoleAtPoint";
    case ErrorCode::KernelPole: return "KernelPole";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::CardinalityMismatch: return "CardinalityMismatch";
    case ErrorCode::ColoringMismatch: return "ColoringMismatch";
    case ErrorCode::EmptyColor: return "EmptyColor";
    case ErrorCode::DuplicateNode: return "DuplicateNode";
    case ErrorCode::SingularJacobian: return "SingularJacobian";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

// ---- Rational

Rational::Rational(long num, long den) {
  if (den == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  if (!valid_int(num, true) || !valid_int(den, false))
    fail(ErrorCode::InvalidArgument, "not a rational literal: '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) fail(ErrorCode::DivisionByZero, "rational literal with zero denominator: '" + std::string(text) + "'");
  Rational r;
  r.v_ = mpq_class(n, d);
  r.v_.canonicalize();
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::DivisionByZero, "division of " + str() + " by zero");
  v_ /= o.v_;
  return *this;
}

void append_key(std::string& out, const Rational& x) { out += x.str(); }

// ---- EpsPoly

EpsPoly::EpsPoly(Rational constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

EpsPoly::EpsPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

EpsPoly EpsPoly::monomial(Rational coeff, std::size_t power) {
  EpsPoly p;
  if (coeff.is_zero()) return p;
  p.c_.assign(power + 1, Rational());
  p.c_[power] = std::move(coeff);
  return p;
}

void EpsPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational EpsPoly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

EpsPoly EpsPoly::derivative() const {
  EpsPoly d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.c_.push_back(c_[k] * Rational(static_cast<long>(k)));
  d.trim();
  return d;
}

EpsPoly EpsPoly::scaled(const Rational& k) const {
  if (k.is_zero()) return EpsPoly();
  EpsPoly r = *this;
  for (auto& x : r.c_) x *= k;
  return r;
}

EpsPoly EpsPoly::monic() const {
  if (c_.empty() || c_.back() == Rational(1)) return *this;
  return scaled(Rational(1) / c_.back());
}

std::string EpsPoly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c_[k].str() + ")";
    if (k == 1) s += "*e";
    else if (k > 1) s += "*e^" + std::to_string(k);
  }
  return s;
}

EpsPoly EpsPoly::operator-() const {
  EpsPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

EpsPoly operator+(const EpsPoly& a, const EpsPoly& b) {
  EpsPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.coeff(k) + b.coeff(k);
  r.trim();
  return r;
}

EpsPoly operator-(const EpsPoly& a, const EpsPoly& b) { return a + (-b); }

EpsPoly operator*(const EpsPoly& a, const EpsPoly& b) {
  EpsPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

void EpsPoly::divmod(const EpsPoly& a, const EpsPoly& b, EpsPoly& q, EpsPoly& r) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  q = EpsPoly();
  r = a;
  if (r.degree() < b.degree()) return;
  q.c_.assign(r.c_.size() - b.c_.size() + 1, Rational());
  const Rational inv_lead = Rational(1) / b.lead();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    std::size_t shift = r.c_.size() - b.c_.size();
    Rational k = r.lead() * inv_lead;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[shift + j] -= k * b.c_[j];
    q.c_[shift] = k;
    r.trim();
  }
  q.trim();
}

EpsPoly EpsPoly::gcd(EpsPoly a, EpsPoly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return EpsPoly(Rational(1));
  EpsPoly q, r;
  while (!b.is_zero()) {
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ---- EpsRational

EpsRational::EpsRational(EpsPoly num, EpsPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
  normalize();
}

EpsRational EpsRational::epsilon() {
  return EpsRational(Raw{}, EpsPoly::monomial(Rational(1), 1), EpsPoly(Rational(1)));
}

void EpsRational::normalize() {
  if (num_.is_zero()) {
    den_ = EpsPoly(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    EpsPoly g = EpsPoly::gcd(num_, den_);
    if (!g.is_constant()) {
      EpsPoly q, r;
      EpsPoly::divmod(num_, g, q, r);
      num_ = std::move(q);
      EpsPoly::divmod(den_, g, q, r);
      den_ = std::move(q);
    }
  }
  if (!(den_.lead() == Rational(1))) {
    Rational k = Rational(1) / den_.lead();
    num_ = num_.scaled(k);
    den_ = den_.scaled(k);
  }
}

Rational EpsRational::limit_at_zero() const {
  Rational d = den_.coeff(0);
  if (d.is_zero()) fail(ErrorCode::PoleAtZero, "pole at eps = 0 in " + str());
  return num_.coeff(0) / d;
}

Rational EpsRational::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d.is_zero()) fail(ErrorCode::PoleAtPoint, "pole at eps = " + x.str() + " in " + str());
  return num_.eval(x) / d;
}

std::pair<Rational, Rational> EpsRational::taylor1_at_zero() const {
  Rational d0 = den_.coeff(0);
  if (d0.is_zero()) fail(ErrorCode::PoleAtZero, "pole at eps = 0 in " + str());
  Rational n0 = num_.coeff(0), n1 = num_.coeff(1), d1 = den_.coeff(1);
  Rational v = n0 / d0;
  Rational dv = (n1 * d0 - n0 * d1) / (d0 * d0);
  return {v, dv};
}

std::string EpsRational::str() const {
  if (den_.is_constant()) return num_.str();
  return "[" + num_.str() + "] / [" + den_.str() + "]";
}

EpsRational EpsRational::operator-() const { return EpsRational(Raw{}, -num_, den_); }

EpsRational operator+(const EpsRational& a, const EpsRational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_constant() && b.den_.is_constant())
    return EpsRational(EpsRational::Raw{}, a.num_ + b.num_, EpsPoly(Rational(1)));
  if (a.den_ == b.den_) return EpsRational(a.num_ + b.num_, a.den_);
  return EpsRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

EpsRational operator-(const EpsRational& a, const EpsRational& b) { return a + (-b); }

namespace {
// Cancels gcd(x, y) out of both; leaves the remaining parts in place.
void cross_cancel(EpsPoly& x, EpsPoly& y) {
  if (x.is_constant() || y.is_constant()) return;
  EpsPoly g = EpsPoly::gcd(x, y);
  if (g.is_constant()) return;
  EpsPoly q, r;
  EpsPoly::divmod(x, g, q, r);
  x = std::move(q);
  EpsPoly::divmod(y, g, q, r);
  y = std::move(q);
}
}  // namespace

EpsRational operator*(const EpsRational& a, const EpsRational& b) {
  if (a.is_zero() || b.is_zero()) return EpsRational();
  EpsPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  cross_cancel(an, bd);
  cross_cancel(bn, ad);
  EpsPoly num = an * bn, den = ad * bd;
  if (!(den.lead() == Rational(1))) {
    Rational k = Rational(1) / den.lead();
    num = num.scaled(k);
    den = den.scaled(k);
  }
  return EpsRational(EpsRational::Raw{}, std::move(num), std::move(den));
}

EpsRational operator/(const EpsRational& a, const EpsRational& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "division of " + a.str() + " by the zero function");
  return a * EpsRational(EpsRational::Raw{}, b.den_, b.num_);
}

void append_key(std::string& out, const EpsRational& x) {
  for (const auto& c : x.num().coeffs()) { out += c.str(); out += ','; }
  out += '|';
  for (const auto& c : x.den().coeffs()) { out += c.str(); out += ','; }
}

// ---- Complex

Complex::Complex(double re, double im) : v_(re, im) {
  if (!std::isfinite(re) || !std::isfinite(im))
    fail(ErrorCode::InvalidArgument, "non-finite complex value");
}

Complex operator/(const Complex& a, const Complex& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "complex division by zero");
  return Complex(a.v_ / b.v_);
}

std::string Complex::str() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%.17g, %.17g)", re(), im());
  return buf;
}

void append_key(std::string& out, const Complex& x) {
  double parts[2] = {x.re(), x.im()};
  char buf[40];
  for (double p : parts) {
    unsigned long long bits;
    std::memcpy(&bits, &p, sizeof bits);
    std::snprintf(buf, sizeof buf, "%016llx,", bits);
    out += buf;
  }
}

}  // namespace glmn
