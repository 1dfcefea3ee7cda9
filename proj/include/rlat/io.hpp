#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "rlat/theorems.hpp"

namespace rlat {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view schema_version = "rlat/1";

/// Reads the .rlat text format. Tokens are whitespace separated and `#`
/// starts a comment running to the end of the line:
///
///     size 2
///     elements 0 1
///     bottom 0
///     top 1
///     table join  0 1  1 1
///     table meet  0 0  0 1
///     table odot  0 0  0 1
///
/// `table arrow` is optional. Throws ParseError with the offending line.
AlgebraTables parse_rlat(std::string_view text);

/// parse_rlat followed by Algebra::from_tables.
Algebra load_algebra(std::string_view text);
/// Throws ParseError (line 0) when the file cannot be read.
Algebra load_algebra_file(const std::string& path);

enum class RlatLayout { multi_line, single_line };

/// Text accepted by parse_rlat, tables in canonical order.
std::string emit_rlat(const Algebra& alg, RlatLayout layout = RlatLayout::multi_line,
                      bool with_arrow = false);

/// Sorted (canonical element order) array of names.
Json set_json(const Algebra& alg, ElementSet s);
Json algebra_json(const Algebra& alg);
/// {"schema": "rlat/1", "command": ..., "algebra": ...}
Json envelope(std::string_view command, const Algebra& alg);

Json filters_json(const Algebra& alg);
Json spectrum_json(const Algebra& alg);
Json topology_json(const Algebra& alg, const HullKernelSpace& space, Which which);
Json theorems_json(const TheoremReport& report);

/// Hasse diagram of the carrier order (covering pairs only).
std::string hasse_dot(const Algebra& alg);
/// Hasse diagram of a prime collection under inclusion.
std::string collection_dot(const Algebra& alg, const PrimeCollection& pi);

/// Parses spec | max | min | minover:<e1,e2,..> | list:<f1;f2;..> where each
/// filter is a comma-separated list of element names.
PrimeCollection parse_collection(const Algebra& alg, std::string_view arg);

}  // namespace rlat
