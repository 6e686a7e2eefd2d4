#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "concord/matrix.hpp"

namespace concord {

// Plain-text matrix format, shared by the library and the CLI:
//   - lines whose first character is '#' are comments; blank lines are skipped
//   - the first data line holds the dimension n
//   - then n data lines, each with n whitespace-separated integers
// write_matrix emits the canonical form (no comments, single spaces), so
// parse(write(m)) == m and write(parse(s)) == s for canonical s.

inline bool is_integer_token(const std::string& tok) {
  std::size_t i = 0;
  if (tok.size() > 1 && (tok[0] == '-' || tok[0] == '+')) i = 1;
  if (i == tok.size()) return false;
  for (; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
  return true;
}

inline Int parse_int_token(const std::string& tok) {
  if (!is_integer_token(tok)) fail(errc::non_integer_token, "not an integer: '" + tok + "'");
  // normalize before handing to the bigint: drop any '+', and strip leading
  // zeros, which cpp_int would otherwise read as an octal prefix
  const bool negative = tok[0] == '-';
  std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  while (start + 1 < tok.size() && tok[start] == '0') ++start;
  const Int value(tok.substr(start));
  return negative ? Int(-value) : value;
}

namespace detail {

// Next non-comment, non-blank line split into tokens; empty result at EOF.
inline std::vector<std::string> next_data_line(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == '#') continue;
    std::istringstream split(line);
    std::vector<std::string> tokens;
    for (std::string tok; split >> tok;) tokens.push_back(tok);
    if (!tokens.empty()) return tokens;
  }
  return {};
}

}  // namespace detail

inline IntMatrix read_matrix(std::istream& in) {
  const auto header = detail::next_data_line(in);
  if (header.size() != 1 || !is_integer_token(header[0]) || header[0][0] == '-')
    fail(errc::malformed_header, "first data line must be the dimension");
  unsigned long n = 0;
  try {
    n = std::stoul(header[0]);
  } catch (const std::exception&) {
    fail(errc::malformed_header, "dimension out of range: '" + header[0] + "'");
  }

  IntMatrix m(n);
  for (unsigned long i = 0; i < n; ++i) {
    const auto row = detail::next_data_line(in);
    if (row.empty())
      fail(errc::row_length_mismatch,
           "expected " + std::to_string(n) + " rows, found " + std::to_string(i));
    if (row.size() != n)
      fail(errc::row_length_mismatch, "row " + std::to_string(i + 1) + " has " +
                                          std::to_string(row.size()) + " entries, expected " +
                                          std::to_string(n));
    for (unsigned long j = 0; j < n; ++j) m(i, j) = parse_int_token(row[j]);
  }
  if (!detail::next_data_line(in).empty())
    fail(errc::row_length_mismatch, "trailing data after " + std::to_string(n) + " rows");
  return m;
}

inline IntMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

inline IntMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_failure, "cannot open '" + path + "'");
  return read_matrix(in);
}

inline std::string write_matrix(const IntMatrix& m) {
  std::ostringstream out;
  out << m.dimension() << "\n";
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    for (std::size_t j = 0; j < m.dimension(); ++j) {
      if (j > 0) out << " ";
      out << m(i, j);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace concord
