#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "glmn/alpha.hpp"
#include "glmn/partitions.hpp"

namespace glmn::config {

using json = nlohmann::ordered_json;

// Parses text into a document; syntax errors become ConfigError with line and column.
json parse_document(const std::string& text);

// Field readers. `path` is a JSON pointer used in error messages.
Rational rational(const json& v, const std::string& path);
Complex complex(const json& v, const std::string& path);

Grading grading(const json& doc);

enum class Field { Rational, Complex };
Field field(const json& doc);

template <Scalar S>
ColoredTuple<S> tuple(const json& doc, const std::string& key, int colors);
extern template ColoredTuple<Rational> tuple(const json&, const std::string&, int);
extern template ColoredTuple<Complex> tuple(const json&, const std::string&, int);

std::vector<std::vector<Rational>> rational_lists(const json& v, const std::string& path, int max_lists);
std::vector<std::vector<Complex>> complex_lists(const json& v, const std::string& path, int max_lists);

// {"kind": "unit" | "product" | "hermite", ...}; hermite takes either per-color "coefficients"
// or "X" (on-shell at t).
AlphaPtr alpha(const json& doc, const Grading& gr, const std::optional<ColoredTuple<Rational>>& t);

int integer(const json& doc, const std::string& key, int fallback, int lo, int hi);
double real(const json& doc, const std::string& key, double fallback);
std::string choice(const json& doc, const std::string& key, const std::string& fallback,
                   std::initializer_list<const char*> allowed);

// Serialization in the same conventions.
json to_json(const Rational& q);
json to_json(const Complex& z);
template <Scalar S>
json to_json(const ColoredTuple<S>& t) {
  json out = json::array();
  for (const auto& col : t.colors()) {
    json c = json::array();
    for (const auto& x : col) c.push_back(to_json(x));
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace glmn::config
