#pragma once

/**
 * @file text.hpp
 * @brief Text forms of matrices, ring elements and exact decimals.
 *
 * Matrix text is one row per line, entries separated by spaces and/or
 * commas. Alphabets: {0, 1, -1} for m = 2, {0, 1, w, w2} for m = 3 and
 * {0, 1, i, -1, -i} for m = 4. Blank lines and '#' comments are skipped.
 * Ring elements are written a+bi, a-bi, a+bw, ... with optional spaces.
 */

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "resmat/error.hpp"
#include "resmat/integer.hpp"
#include "resmat/quadratic_integer.hpp"
#include "resmat/root_matrix.hpp"

namespace resmat {

/// Malformed input, with a 1-based position (column 0 when not applicable).
class parse_error : public error {
 public:
  parse_error(std::size_t line, std::size_t column, const std::string& what)
      : error(errc::invalid_argument, "line " + std::to_string(line) +
                                          (column ? ", column " + std::to_string(column) : std::string()) + ": " +
                                          what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

template <int M>
std::optional<Root<M>> parse_root(std::string_view token) {
  for (int e = -1; e < M; ++e) {
    const auto r = e < 0 ? Root<M>::zero() : Root<M>::power(e);
    if (token == root_name(r)) return r;
  }
  if constexpr (M == 2 || M == 4) {
    if (token == "+1") return Root<M>::one();
  }
  return std::nullopt;
}

template <int M>
RootMatrix<M> parse_matrix(std::string_view text) {
  struct Cell {
    Root<M> value;
    std::size_t line, column;
  };
  std::vector<std::vector<Cell>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Cell> row;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i])) || line[i] == ',') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != ',') ++j;
      const auto token = line.substr(i, j - i);
      const auto r = parse_root<M>(token);
      if (!r) throw parse_error(line_no, i + 1, "invalid entry '" + std::string(token) + "' for m = " + std::to_string(M));
      row.push_back({*r, line_no, i + 1});
      i = j;
    }
    if (!row.empty()) rows.push_back(std::move(row));
    if (end == text.size()) break;
  }
  if (rows.empty()) throw parse_error(line_no, 0, "empty matrix");
  const std::size_t n = rows.size();
  std::vector<Root<M>> entries;
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw parse_error(rows[i].front().line, 0,
                        "row has " + std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      const auto& c = rows[i][j];
      if (i == j && !c.value.is_zero()) throw parse_error(c.line, c.column, "diagonal entry must be 0");
      if (i != j && c.value.is_zero()) throw parse_error(c.line, c.column, "off-diagonal entry must be a root of unity");
      entries.push_back(c.value);
    }
  }
  return RootMatrix<M>(n, std::move(entries));
}

/// One row per line, entries separated by single spaces.
template <int M>
std::string format_matrix(const RootMatrix<M>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out += ' ';
      out += root_name(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

/// Parses a + b*t, t = Ring::symbol: "3+2i", "-2-3w", "i", "-i", "7", "4 + 3w".
template <class Ring>
QuadraticInteger<Ring> parse_quadratic(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto bad = [&](const std::string& why) -> parse_error {
    return parse_error(1, 0, "cannot parse '" + std::string(text) + "': " + why);
  };
  if (s.empty()) throw bad("empty");
  std::optional<i128> real, imag;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw bad("expected + or -");
    }
    i128 mag = 0;
    std::size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      mag = mag * 10 + (s[i] - '0');
      if (mag > INT64_MAX) throw bad("coefficient too large");
      ++i;
      ++digits;
    }
    const bool has_symbol = i < s.size() && s[i] == Ring::symbol;
    if (has_symbol) ++i;
    if (!digits && !has_symbol) throw bad("missing coefficient");
    if (!digits) mag = 1;
    auto& slot = has_symbol ? imag : real;
    if (slot) throw bad("repeated term");
    slot = sign * mag;
  }
  return QuadraticInteger<Ring>(static_cast<std::int64_t>(real.value_or(0)), static_cast<std::int64_t>(imag.value_or(0)));
}

/// Non-negative rational to `places` decimals, rounding half to even.
inline std::string format_decimal(const boost::rational<std::int64_t>& r, int places) {
  require(r >= 0, errc::invalid_argument, "format_decimal expects a non-negative value");
  i128 scale = 1;
  for (int k = 0; k < places; ++k) scale *= 10;
  const i128 num = static_cast<i128>(r.numerator()) * scale;
  const i128 den = r.denominator();
  i128 q = num / den;
  const i128 rem = num % den;
  if (2 * rem > den || (2 * rem == den && (q & 1))) ++q;
  const auto whole = static_cast<std::int64_t>(q / scale);
  auto frac = static_cast<std::int64_t>(q % scale);
  std::string out = std::to_string(whole);
  if (places > 0) {
    std::string digits = std::to_string(frac);
    out += '.' + std::string(static_cast<std::size_t>(places) - digits.size(), '0') + digits;
  }
  return out;
}

}  // namespace resmat
