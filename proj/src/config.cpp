#include "glmn/config.hpp"

#include <cmath>

namespace glmn::config {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  fail(ErrorCode::ConfigError, (path.empty() ? std::string("config") : path) + ": " + what);
}

const json& require(const json& doc, const std::string& key) {
  if (!doc.is_object()) bad("", "top level must be an object");
  auto it = doc.find(key);
  if (it == doc.end()) bad("/" + key, "missing");
  return *it;
}

std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

template <class T, class Read>
std::vector<std::vector<T>> lists(const json& v, const std::string& path, int max_lists, Read read) {
  if (!v.is_array()) bad(path, "expected an array of per-color arrays");
  if (max_lists >= 0 && static_cast<int>(v.size()) > max_lists)
    bad(path, "has " + std::to_string(v.size()) + " colors, at most " + std::to_string(max_lists) + " allowed");
  std::vector<std::vector<T>> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_array()) bad(at(path, i), "expected an array");
    out.emplace_back();
    for (std::size_t j = 0; j < v[i].size(); ++j) out.back().push_back(read(v[i][j], at(at(path, i), j)));
  }
  return out;
}

}  // namespace

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // count lines up to the failing byte
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(ErrorCode::ConfigError, "malformed JSON at line " + std::to_string(line) + ", column " +
                                     std::to_string(col) + " (byte " + std::to_string(e.byte) + "): " + e.what());
  }
}

Rational rational(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const Error& e) {
      bad(path, e.detail());
    }
  }
  bad(path, "expected a rational as an integer or a \"p/q\" string");
}

Complex complex(const json& v, const std::string& path) {
  if (v.is_array()) {
    if (v.size() != 2 || !v[0].is_number() || !v[1].is_number()) bad(path, "expected [re, im]");
    const double re = v[0].get<double>(), im = v[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) bad(path, "non-finite component");
    return Complex(re, im);
  }
  if (v.is_number()) return Complex(v.get<double>());
  return Complex(rational(v, path));
}

Grading grading(const json& doc) {
  const json& g = require(doc, "grading");
  if (!g.is_object() || !g.contains("m") || !g.contains("n") || !g["m"].is_number_integer() ||
      !g["n"].is_number_integer())
    bad("/grading", "expected {\"m\": int, \"n\": int}");
  Grading gr(g["m"].get<int>(), g["n"].get<int>(), doc.contains("c") ? rational(doc["c"], "/c") : Rational(1));
  if (gr.m < 0 || gr.n < 0 || gr.m + gr.n < 2 || gr.m + gr.n > 12) bad("/grading", "need m, n >= 0 and 2 <= m+n <= 12");
  if (gr.c.is_zero()) bad("/c", "coupling must be nonzero");
  return gr;
}

Field field(const json& doc) {
  return choice(doc, "field", "rational", {"rational", "complex"}) == "complex" ? Field::Complex : Field::Rational;
}

template <Scalar S>
ColoredTuple<S> tuple(const json& doc, const std::string& key, int colors) {
  const std::string path = "/" + key;
  std::vector<std::vector<S>> v;
  if constexpr (std::same_as<S, Complex>)
    v = complex_lists(require(doc, key), path, colors);
  else
    v = rational_lists(require(doc, key), path, colors);
  if (static_cast<int>(v.size()) != colors)
    bad(path, "has " + std::to_string(v.size()) + " colors, grading needs " + std::to_string(colors));
  return ColoredTuple<S>(std::move(v));
}

template ColoredTuple<Rational> tuple(const json&, const std::string&, int);
template ColoredTuple<Complex> tuple(const json&, const std::string&, int);

std::vector<std::vector<Rational>> rational_lists(const json& v, const std::string& path, int max_lists) {
  return lists<Rational>(v, path, max_lists, rational);
}

std::vector<std::vector<Complex>> complex_lists(const json& v, const std::string& path, int max_lists) {
  return lists<Complex>(v, path, max_lists, complex);
}

AlphaPtr alpha(const json& doc, const Grading& gr, const std::optional<ColoredTuple<Rational>>& t) {
  const json& a = require(doc, "alpha");
  if (!a.is_object()) bad("/alpha", "expected an object");
  const std::string kind = choice(a, "kind", "", {"unit", "product", "hermite"});
  if (kind == "unit") return std::make_shared<UnitAlpha>();
  if (kind == "product") {
    if (!a.contains("xi")) bad("/alpha/xi", "missing");
    return std::make_shared<ProductAlpha>(gr, rational_lists(a["xi"], "/alpha/xi", gr.N()));
  }
  if (a.contains("coefficients"))
    return std::make_shared<HermiteAlpha>(rational_lists(a["coefficients"], "/alpha/coefficients", gr.N()));
  if (!a.contains("X")) bad("/alpha", "hermite needs \"coefficients\" or \"X\"");
  if (!t) bad("/alpha/X", "an on-shell hermite family needs t");
  auto X = rational_lists(a["X"], "/alpha/X", gr.N());
  ColoredTuple<Rational> Xt(std::move(X));
  if (Xt.cardinalities() != t->cardinalities()) bad("/alpha/X", "not shaped like t");
  return onshell_hermite(gr, *t, Xt);
}

int integer(const json& doc, const std::string& key, int fallback, int lo, int hi) {
  auto it = doc.find(key);
  if (it == doc.end()) return fallback;
  if (!it->is_number_integer()) bad("/" + key, "expected an integer");
  const long v = it->get<long>();
  if (v < lo || v > hi) bad("/" + key, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

double real(const json& doc, const std::string& key, double fallback) {
  auto it = doc.find(key);
  if (it == doc.end()) return fallback;
  if (!it->is_number() || !std::isfinite(it->get<double>()) || it->get<double>() <= 0)
    bad("/" + key, "expected a positive number");
  return it->get<double>();
}

std::string choice(const json& doc, const std::string& key, const std::string& fallback,
                   std::initializer_list<const char*> allowed) {
  auto it = doc.find(key);
  if (it == doc.end()) {
    if (fallback.empty()) bad("/" + key, "missing");
    return fallback;
  }
  std::string list;
  if (it->is_string())
    for (const char* a : allowed)
      if (it->get<std::string>() == a) return a;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  bad("/" + key, "expected one of " + list);
}

json to_json(const Rational& q) { return q.str(); }

json to_json(const Complex& z) { return json::array({z.re(), z.im()}); }

}  // namespace glmn::config
