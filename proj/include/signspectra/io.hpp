#pragma once

// Matrix files and generator specs.
//
// CSV: one matrix row per line, comma-separated decimal literals, no header.
// JSON: {"n": int, "rows": [[...], ...]}.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "signspectra/core.hpp"
#include "signspectra/gen.hpp"

namespace signspectra {

enum class MatrixFormat { kCsv, kJson };

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, Index line, Index column)
      : std::runtime_error(what), line(line), column(column) {}
  Index line;    // 1-based, 0 when not applicable
  Index column;  // 1-based, 0 when not applicable
};

Matrix parse_csv(std::string_view text);
Matrix parse_matrix_json(std::string_view text);
Matrix parse_matrix(std::string_view text, MatrixFormat format);

/// .json selects JSON, anything else CSV.
MatrixFormat format_from_path(const std::filesystem::path& path);
std::optional<MatrixFormat> parse_format_name(std::string_view name);

/// JSON when the first non-blank character is '{', otherwise CSV.
MatrixFormat sniff_format(std::string_view text);

/// "-" reads standard input. The format is sniffed from the content unless given.
Matrix read_matrix_file(const std::filesystem::path& path, std::optional<MatrixFormat> format = {});

/// Shortest decimal that reads back to the same double; integers print
/// without a fraction and negative zero prints as 0.
std::string format_number(double v);

std::string emit_csv(const Matrix& a);
std::string emit_matrix_json(const Matrix& a);
std::string emit_matrix(const Matrix& a, MatrixFormat format);

/// FNV-1a 64 of the CSV emission, as 16 hex digits.
std::string matrix_digest(const Matrix& a);

// GenSpec <-> JSON. Index sets are 1-based in JSON.
nlohmann::json genspec_to_json(const GenSpec& spec);
GenSpec genspec_from_json(const nlohmann::json& j);

}  // namespace signspectra
