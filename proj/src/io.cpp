#include "akschur/io.hpp"

#include <charconv>
#include <string>

namespace akschur::io {

using combinatorics::Multipartition;
using combinatorics::Partition;

Multipartition parseMultipartition(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw ParseError("multipartition is not valid JSON: " + std::string(text));
  }
  if (!doc.is_array() || doc.empty())
    throw ParseError("multipartition must be a non-empty array of arrays, e.g. [[2],[],[1,1]]");
  std::vector<Partition> components;
  for (const auto& comp : doc) {
    if (!comp.is_array()) throw ParseError("each component must be an array of positive integers");
    std::vector<int> parts;
    for (const auto& v : comp) {
      if (!v.is_number_integer() || v.get<long>() <= 0)
        throw ParseError("parts must be positive integers");
      parts.push_back(v.get<int>());
    }
    try {
      components.emplace_back(std::move(parts));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return Multipartition(std::move(components));
}

std::vector<long> parseIntegerList(std::string_view text) {
  std::vector<long> out;
  if (text.empty()) throw ParseError("empty integer list");
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    long value = 0;
    const auto* first = item.data();
    const auto* last = item.data() + item.size();
    if (!item.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (item.empty() || ec != std::errc() || ptr != last)
      throw ParseError("not an integer list: " + std::string(text));
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

nlohmann::json toJson(const Multipartition& mp) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : mp.components()) out.push_back(c.parts());
  return out;
}

std::string toLiteral(const Multipartition& mp) { return toJson(mp).dump(); }

std::string renderRational(const mpq_class& x) {
  mpq_class y(x);
  y.canonicalize();
  return y.get_str();
}

std::string render(const exactalg::CyclotomicInt& c) {
  std::string out;
  const auto& coeffs = c.coordinates();
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (sgn(coeffs[i]) == 0) continue;
    const bool negative = sgn(coeffs[i]) < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const mpz_class mag = abs(coeffs[i]);
    std::string mono = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

std::string render(const exactalg::CycloLaurent& f) {
  if (f.isZero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + render(it->second) + ")";
    if (it->first != 0) out += "*u^" + std::to_string(it->first);
  }
  return out;
}

}  // namespace akschur::io
