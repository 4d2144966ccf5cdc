#pragma once

// JSON and plain-text encodings.
//   Permutation   [2,3,1,4]
//   InversionSet  {"n":4,"pairs":[[3,1],[2,1]]}   (descending by a, then b)
//   BracketingFn  {"n":4,"E":[3,2,3,4]}

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tamari/bracketing_fn.hpp"
#include "tamari/inversion_set.hpp"

namespace tamari {

using json = nlohmann::json;

inline json to_json(const Permutation& p) { return p.entries(); }

inline json to_json(const InversionSet& s) {
  json pairs = json::array();
  for (const Pair& p : s.pairs()) pairs.push_back({p.a, p.b});
  return {{"n", s.n()}, {"pairs", pairs}};
}

inline json to_json(const BracketingFn& e) { return {{"n", e.n()}, {"E", e.values()}}; }

inline Permutation permutation_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("permutation JSON must be an array");
  return Permutation(j.get<std::vector<int>>());
}

/// Builds the raw pair set; (I1)/(I2) are not checked here.
inline InversionSet inversion_set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("pairs"))
    throw std::invalid_argument(R"(inversion set JSON needs "n" and "pairs")");
  InversionSet s(j.at("n").get<int>());
  for (const json& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2) throw std::invalid_argument("each pair must be [a,b]");
    s.insert(p[0].get<int>(), p[1].get<int>());
  }
  return s;
}

inline BracketingFn bracketing_fn_from_json(const json& j) {
  if (!j.is_object() || !j.contains("E")) throw std::invalid_argument(R"(bracketing JSON needs "E")");
  auto values = j.at("E").get<std::vector<int>>();
  if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(values.size()))
    throw std::invalid_argument(R"("n" disagrees with the length of "E")");
  return BracketingFn(std::move(values));
}

/// "3,2,3,4" -> {3,2,3,4}. Whitespace around numbers is ignored.
inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos == text.size()) throw std::invalid_argument("empty value list");
  for (;;) {
    skip();
    const std::size_t start = pos;
    int value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos++] - '0');
      if (value > 1'000'000) throw std::invalid_argument("value too large in list");
    }
    if (pos == start) throw std::invalid_argument("expected a number in '" + std::string(text) + "'");
    out.push_back(value);
    skip();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw std::invalid_argument("expected ',' in '" + std::string(text) + "'");
    ++pos;
  }
  return out;
}

}  // namespace tamari
