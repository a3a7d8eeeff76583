#pragma once

// Text and JSON formats for fixed point data.
//
// Text: one fixed point per line, "<sign> w1 ... wn" with sign '+' or '-';
// '#' starts a comment line; blank lines are ignored.
// JSON: {"points":[{"sign":1,"weights":[7,2,3]}, ...]}

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "core.hpp"

namespace circlefp {

namespace detail {

inline std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace detail

inline FixedPointData parse_text(std::string_view text) {
  std::vector<FixedPointDatum> points;
  std::size_t line_no = 0;
  std::size_t arity = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = detail::split_whitespace(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    Sign sign;
    if (tokens[0] == "+") {
      sign = Sign::plus();
    } else if (tokens[0] == "-") {
      sign = Sign::minus();
    } else {
      throw ParseError(line_no, "expected sign '+' or '-', got '" + std::string(tokens[0]) + "'");
    }
    if (tokens.size() < 2) throw ParseError(line_no, "a fixed point needs at least one weight");

    std::vector<Integer> weights;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      if (!detail::all_digits(tokens[i])) {
        throw ParseError(line_no, "weight '" + std::string(tokens[i]) + "' is not a positive decimal integer");
      }
      Integer w(std::string(tokens[i]), 10);
      if (w <= 0) throw ParseError(line_no, "weights must be positive");
      weights.push_back(std::move(w));
    }
    if (!points.empty() && weights.size() != arity) {
      throw ParseError(line_no, "expected " + std::to_string(arity) + " weights, got " +
                                    std::to_string(weights.size()));
    }
    arity = weights.size();
    points.emplace_back(sign, std::move(weights));
  }
  return FixedPointData(std::move(points));
}

inline std::string serialize_text(const FixedPointData& d) {
  std::string out;
  for (const auto& p : d) {
    out += p.sign().symbol();
    for (const auto& w : p.weights()) out += " " + w.get_str();
    out += '\n';
  }
  return out;
}

inline nlohmann::json datum_to_json(Sign sign, const std::vector<Integer>& weights) {
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : weights) ws.push_back(integer_to_json(w));
  return {{"sign", sign.value()}, {"weights", std::move(ws)}};
}

inline nlohmann::json to_json(const FixedPointDatum& p) { return datum_to_json(p.sign(), p.weights()); }

inline nlohmann::json to_json(const SignedDatumClass& c) { return datum_to_json(c.sign(), c.weights()); }

inline nlohmann::json to_json(const FixedPointData& d) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : d) points.push_back(to_json(p));
  return {{"points", std::move(points)}};
}

inline FixedPointDatum datum_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("sign") || !j.contains("weights") || !j["weights"].is_array()) {
    throw ParseError(0, "a point must be an object with 'sign' and 'weights'");
  }
  const auto& s = j["sign"];
  if (!s.is_number_integer() || (s.get<int>() != 1 && s.get<int>() != -1)) {
    throw ParseError(0, "sign must be 1 or -1");
  }
  std::vector<Integer> weights;
  for (const auto& w : j["weights"]) weights.push_back(integer_from_json(w));
  try {
    return {Sign(s.get<int>()), std::move(weights)};
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

inline FixedPointData data_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array()) {
    throw ParseError(0, "expected an object with a 'points' array");
  }
  std::vector<FixedPointDatum> points;
  for (const auto& p : j["points"]) points.push_back(datum_from_json(p));
  try {
    return FixedPointData(std::move(points));
  } catch (const DimensionMismatchError& e) {
    throw ParseError(0, e.what());
  }
}

inline FixedPointData parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, e.what());
  }
  return data_from_json(j);
}

inline std::string serialize_json(const FixedPointData& d) { return to_json(d).dump(); }

}  // namespace circlefp
