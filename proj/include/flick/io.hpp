#pragma once

// Rendering of sequences and triangles, OEIS b-files, and the optional
// on-disk cache of triangle rows.

#include "flick/bell.hpp"
#include "flick/bigint.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace flick {

enum class OutputFormat { table, csv, json, bfile };

/// Thrown for requests that are well-formed but not representable, such as a
/// b-file for two-dimensional data.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline OutputFormat parse_format(std::string_view name) {
  if (name == "table") return OutputFormat::table;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "bfile") return OutputFormat::bfile;
  throw usage_error("unknown format '" + std::string(name) + "' (table|csv|json|bfile)");
}

/// "index value" per line, no header.
inline std::string write_bfile(const IntSeq& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    out += std::to_string(seq.offset + i);
    out += ' ';
    out += to_string(seq.values[i]);
    out += '\n';
  }
  return out;
}

/// Parses b-file text. Blank lines and '#' comments are skipped; indices must
/// be consecutive.
inline IntSeq parse_bfile(std::string_view text) {
  IntSeq seq;
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> expected;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string index_text;
    std::string value_text;
    std::string extra;
    if (!(fields >> index_text >> value_text) || (fields >> extra)) {
      throw std::invalid_argument("b-file: malformed line '" + line + "'");
    }
    const BigInt index = parse_bigint(index_text);
    if (index < 0) throw std::invalid_argument("b-file: negative index in '" + line + "'");
    const auto idx = index.convert_to<std::size_t>();
    if (!expected) {
      seq.offset = idx;
    } else if (idx != *expected) {
      throw std::invalid_argument("b-file: index " + index_text + " out of sequence");
    }
    expected = idx + 1;
    seq.values.push_back(parse_bigint(value_text));
  }
  return seq;
}

namespace detail {

inline std::string join(const std::vector<BigInt>& values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += to_string(values[i]);
  }
  return out;
}

inline nlohmann::json strings(const std::vector<BigInt>& values) {
  auto arr = nlohmann::json::array();
  for (const auto& v : values) arr.push_back(to_string(v));
  return arr;
}

}  // namespace detail

inline std::string render_sequence(std::string_view name, const IntSeq& seq, OutputFormat format) {
  switch (format) {
    case OutputFormat::table:
      return detail::join(seq.values, ", ") + "\n";
    case OutputFormat::csv:
      return detail::join(seq.values, ",") + "\n";
    case OutputFormat::json: {
      nlohmann::json doc{{"name", name}, {"offset", seq.offset}, {"values", detail::strings(seq.values)}};
      return doc.dump() + "\n";
    }
    case OutputFormat::bfile:
      return write_bfile(seq);
  }
  throw usage_error("unreachable output format");
}

/// Rows of a triangle or grid; `offset` is the index of the first row.
inline std::string render_grid(std::string_view name, const std::vector<std::vector<BigInt>>& rows,
                               std::size_t offset, OutputFormat format) {
  switch (format) {
    case OutputFormat::table: {
      std::size_t width = 1;
      for (const auto& row : rows) {
        for (const auto& v : row) width = std::max(width, to_string(v).size());
      }
      const std::size_t label = std::to_string(offset + rows.size() - 1).size();
      std::string out;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::string idx = std::to_string(offset + r);
        out += std::string(label - idx.size(), ' ') + idx + " |";
        for (const auto& v : rows[r]) {
          const std::string s = to_string(v);
          out += ' ' + std::string(width - s.size(), ' ') + s;
        }
        out += '\n';
      }
      return out;
    }
    case OutputFormat::csv: {
      std::string out;
      for (const auto& row : rows) out += detail::join(row, ",") + "\n";
      return out;
    }
    case OutputFormat::json: {
      auto values = nlohmann::json::array();
      for (const auto& row : rows) values.push_back(detail::strings(row));
      nlohmann::json doc{{"name", name}, {"offset", offset}, {"values", values}};
      return doc.dump() + "\n";
    }
    case OutputFormat::bfile:
      throw usage_error("b-file output applies only to one-dimensional sequences");
  }
  throw usage_error("unreachable output format");
}

/// Persists triangle rows as b-file shards, one file per (method, row).
class RowCache {
 public:
  explicit RowCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// The cache named by FLICK_CACHE_DIR, if that variable is set and non-empty.
  static std::optional<RowCache> from_environment() {
    const char* dir = std::getenv("FLICK_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return std::nullopt;
    return RowCache(dir);
  }

  std::filesystem::path shard(std::string_view method, unsigned n) const {
    return dir_ / ("triangle-" + std::string(method) + "-row" + std::to_string(n) + ".b");
  }

  /// The stored row, or nothing if the shard is missing or has the wrong length.
  std::optional<std::vector<BigInt>> load(std::string_view method, unsigned n) const {
    std::ifstream in(shard(method, n));
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      IntSeq seq = parse_bfile(buf.str());
      if (seq.offset != 1 || seq.size() != n) return std::nullopt;
      return std::move(seq.values);
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }

  void store(std::string_view method, unsigned n, const std::vector<BigInt>& row) const {
    std::filesystem::create_directories(dir_);
    const auto path = shard(method, n);
    const auto tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << write_bfile(IntSeq{row, 1});
    }
    std::filesystem::rename(tmp, path);
  }

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

}  // namespace flick
