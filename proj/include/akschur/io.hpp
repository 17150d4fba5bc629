#pragma once

// Text and JSON forms shared by the CLI and the tests.

#include <gmpxx.h>

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "akschur/cyclotomic.hpp"
#include "akschur/partition.hpp"

namespace akschur::io {

class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Parses a literal such as [[2],[],[1,1]]. Throws ParseError.
combinatorics::Multipartition parseMultipartition(std::string_view text);
/// Comma-separated integers, e.g. "3,-1,-2". Throws ParseError.
std::vector<long> parseIntegerList(std::string_view text);

nlohmann::json toJson(const combinatorics::Multipartition& mp);
/// Compact literal, e.g. [[2],[],[1,1]].
std::string toLiteral(const combinatorics::Multipartition& mp);

/// "a/b" in lowest terms with b > 0, or "a" when b = 1.
std::string renderRational(const mpq_class& x);

/// Polynomial in z = zeta_N, e.g. "1 - z^2".
std::string render(const exactalg::CyclotomicInt& c);
/// Sum of "(coefficient)*u^k" terms in decreasing u-degree.
std::string render(const exactalg::CycloLaurent& f);

}  // namespace akschur::io
