#include "signspectra/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

namespace signspectra {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_decimal(std::string_view field, Index line, Index column) {
  const std::string_view t = trim(field);
  if (t.empty()) throw ParseError("empty field", line, column);
  double v = 0.0;
  const char* first = t.data();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size()) {
    throw ParseError("not a decimal number: '" + std::string(t) + "'", line, column);
  }
  if (!std::isfinite(v)) throw ParseError("non-finite value", line, column);
  return v;
}

std::string where(Index line, Index column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

Matrix parse_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  Index line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (trim(line).empty()) continue;
    std::vector<double> row;
    Index col = 1;
    while (true) {
      const auto comma = line.find(',');
      const std::string_view field = line.substr(0, comma);
      try {
        row.push_back(parse_decimal(field, line_no, col));
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()) + " at " + where(line_no, col) + " (row " +
                             std::to_string(rows.size() + 1) + ")",
                         line_no, col);
      }
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
      col += comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("row " + std::to_string(rows.size() + 1) + " has " + std::to_string(row.size()) +
                           " entries, expected " + std::to_string(rows.front().size()) + " at " +
                           where(line_no, 1),
                       line_no, 1);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty matrix file", 0, 0);
  if (rows.size() != rows.front().size()) {
    throw ParseError("matrix has " + std::to_string(rows.size()) + " rows and " +
                         std::to_string(rows.front().size()) + " columns; expected a square matrix",
                     line_no, 0);
  }
  return Matrix::from_rows(rows);
}

Matrix parse_matrix_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0, e.byte);
  }
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array()) {
    throw ParseError("matrix JSON needs a \"rows\" array", 0, 0);
  }
  std::vector<std::vector<double>> rows;
  for (Index r = 0; r < j["rows"].size(); ++r) {
    const auto& row = j["rows"][r];
    if (!row.is_array()) throw ParseError("row " + std::to_string(r + 1) + " is not an array", r + 1, 0);
    std::vector<double> values;
    for (Index c = 0; c < row.size(); ++c) {
      if (!row[c].is_number()) {
        throw ParseError("row " + std::to_string(r + 1) + ", entry " + std::to_string(c + 1) +
                             " is not a number",
                         r + 1, c + 1);
      }
      values.push_back(row[c].get<double>());
    }
    rows.push_back(std::move(values));
  }
  if (j.contains("n") && (!j["n"].is_number_integer() || j["n"].get<Index>() != rows.size())) {
    throw ParseError("\"n\" does not match the number of rows", 0, 0);
  }
  try {
    return Matrix::from_rows(rows);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

Matrix parse_matrix(std::string_view text, MatrixFormat format) {
  return format == MatrixFormat::kJson ? parse_matrix_json(text) : parse_csv(text);
}

MatrixFormat format_from_path(const std::filesystem::path& path) {
  return path.extension() == ".json" ? MatrixFormat::kJson : MatrixFormat::kCsv;
}

std::optional<MatrixFormat> parse_format_name(std::string_view name) {
  if (name == "csv") return MatrixFormat::kCsv;
  if (name == "json") return MatrixFormat::kJson;
  return std::nullopt;
}

MatrixFormat sniff_format(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string_view::npos && text[first] == '{' ? MatrixFormat::kJson : MatrixFormat::kCsv;
}

Matrix read_matrix_file(const std::filesystem::path& path, std::optional<MatrixFormat> format) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    buf << in.rdbuf();
  }
  const std::string text = buf.str();
  return parse_matrix(text, format.value_or(sniff_format(text)));
}

std::string format_number(double v) {
  v += 0.0;  // -0 -> +0
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string emit_csv(const Matrix& a) {
  std::string out;
  for (Index i = 0; i < a.n(); ++i) {
    for (Index j = 0; j < a.n(); ++j) {
      if (j) out += ',';
      out += format_number(a(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string emit_matrix_json(const Matrix& a) {
  std::string out = "{\"n\": " + std::to_string(a.n()) + ", \"rows\": [";
  for (Index i = 0; i < a.n(); ++i) {
    out += i ? ", [" : "[";
    for (Index j = 0; j < a.n(); ++j) {
      if (j) out += ", ";
      out += format_number(a(i, j));
    }
    out += ']';
  }
  return out + "]}\n";
}

std::string emit_matrix(const Matrix& a, MatrixFormat format) {
  return format == MatrixFormat::kJson ? emit_matrix_json(a) : emit_csv(a);
}

std::string matrix_digest(const Matrix& a) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const char c : emit_csv(a)) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

namespace {

constexpr std::pair<GenKind, std::string_view> kKindNames[] = {
    {GenKind::kNonnegIrreducible, "nonneg_irreducible"},
    {GenKind::kCyclicH, "cyclic_h"},
    {GenKind::kTp2, "tp2"},
    {GenKind::kScrambled, "scrambled"},
    {GenKind::kReducibleBlocks, "reducible_blocks"},
};

std::string_view kind_name(GenKind k) {
  for (const auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "unknown";
}

}  // namespace

nlohmann::json genspec_to_json(const GenSpec& spec) {
  nlohmann::json j;
  j["kind"] = kind_name(spec.kind);
  j["seed"] = spec.seed;
  switch (spec.kind) {
    case GenKind::kNonnegIrreducible:
      j["n"] = spec.n;
      j["density"] = spec.density;
      j["magnitude"] = spec.magnitude;
      break;
    case GenKind::kCyclicH:
      j["n"] = spec.n;
      j["h"] = spec.h;
      j["magnitude"] = spec.magnitude;
      break;
    case GenKind::kTp2:
      j["n"] = spec.n;
      j["magnitude"] = spec.magnitude;
      break;
    case GenKind::kScrambled:
      if (spec.j_set) {
        nlohmann::json js = nlohmann::json::array();
        for (Index i : *spec.j_set) js.push_back(i + 1);
        j["j"] = js;
      }
      j["base"] = genspec_to_json(spec.children.at(0));
      break;
    case GenKind::kReducibleBlocks: {
      nlohmann::json blocks = nlohmann::json::array();
      for (const auto& c : spec.children) blocks.push_back(genspec_to_json(c));
      j["blocks"] = blocks;
      j["coupling"] = spec.coupling;
      j["relabel"] = spec.relabel;
      j["magnitude"] = spec.magnitude;
      break;
    }
  }
  if (spec.rho) j["rho"] = *spec.rho;
  return j;
}

GenSpec genspec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("generator spec must be a JSON object");
  GenSpec spec;
  const std::string kind = j.value("kind", std::string{});
  bool known = false;
  for (const auto& [k, name] : kKindNames) {
    if (name == kind) {
      spec.kind = k;
      known = true;
    }
  }
  if (!known) throw std::invalid_argument("unknown generator kind '" + kind + "'");
  spec.seed = j.value("seed", std::uint64_t{0});
  spec.n = j.value("n", Index{0});
  spec.h = j.value("h", Index{1});
  spec.density = j.value("density", 0.0);
  spec.magnitude = j.value("magnitude", 1.0);
  spec.coupling = j.value("coupling", 0.0);
  spec.relabel = j.value("relabel", false);
  if (j.contains("rho")) spec.rho = j["rho"].get<double>();
  if (j.contains("j")) {
    std::vector<Index> js;
    for (const auto& v : j["j"]) {
      const auto one_based = v.get<Index>();
      if (one_based == 0) throw std::invalid_argument("J indices are 1-based");
      js.push_back(one_based - 1);
    }
    spec.j_set = std::move(js);
  }
  if (spec.kind == GenKind::kScrambled) {
    if (!j.contains("base")) throw std::invalid_argument("scrambled spec needs a \"base\"");
    spec.children.push_back(genspec_from_json(j["base"]));
  }
  if (spec.kind == GenKind::kReducibleBlocks) {
    if (!j.contains("blocks") || !j["blocks"].is_array() || j["blocks"].empty()) {
      throw std::invalid_argument("reducible_blocks spec needs a nonempty \"blocks\" array");
    }
    for (const auto& b : j["blocks"]) spec.children.push_back(genspec_from_json(b));
  }
  if (spec.kind != GenKind::kScrambled && spec.kind != GenKind::kReducibleBlocks && spec.n == 0) {
    throw std::invalid_argument("generator spec needs a positive \"n\"");
  }
  return spec;
}

}  // namespace signspectra
