#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include <json.hpp>

#include "huffseq/decorrelate.hpp"

namespace huffseq::io {

inline constexpr const char* kToolVersion = "huffseq 0.1.0";

// Interchange format:
//   {"family": "fib", "scale": [re, im], "elements": [[re, im], ...]}
// Grids add "shape": [...]. Element order is row-major.

nlohmann::json to_json(const Sequence& s);
nlohmann::json to_json(const Grid& g, const std::string& family = "composite");
nlohmann::json to_json(const CorrelationProfile& p);
nlohmann::json to_json(const CanonicalReport& r);
nlohmann::json to_json(const DoseReport& d);

/// A document holds a Grid when it carries "shape" with rank != 1.
using Document = std::variant<Sequence, Grid>;

Document document_from_json(const nlohmann::json& j);
Sequence sequence_from_json(const nlohmann::json& j);
Grid grid_from_json(const nlohmann::json& j);

Document read_document(const std::string& path);
void write_json(const std::string& path, const nlohmann::json& j);

/// Comma/whitespace separated rows of reals; all rows must have equal length.
/// A single row yields a rank-1 grid.
Grid read_csv_grid(std::istream& in);
Grid read_csv_grid_file(const std::string& path);

/// lag,re,im rows.
void write_profile_csv(std::ostream& out, const CorrelationProfile& p);

}  // namespace huffseq::io
