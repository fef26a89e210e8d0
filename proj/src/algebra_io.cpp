#include "algint/algebra_io.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

namespace algint {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::invalid_argument(line ? "line " + std::to_string(line) + ": " + message
                                 : message),
      line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view strip_comment(std::string_view s) {
  auto hash = s.find('#');
  return hash == std::string_view::npos ? s : s.substr(0, hash);
}

std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::string current;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::string unquote(std::string s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
  return s;
}

std::size_t parse_count(std::string_view text, std::size_t line, const std::string& field) {
  if (text.empty()) throw ParseError(line, field + ": expected a count");
  std::size_t value = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(line, field + ": expected a count, got '" + std::string(text) + "'");
    value = value * 10 + static_cast<std::size_t>(c - '0');
    if (value > 1000000) throw ParseError(line, field + ": value too large");
  }
  return value;
}

// Lines, split on '\n', with trailing '\r' removed.
std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    start = end + 1;
  }
  return out;
}

}  // namespace

StructureConstants parse_algebra(std::string_view text) {
  std::optional<std::string> name;
  std::optional<std::size_t> dimension;
  std::optional<std::size_t> unit_index;
  std::size_t unit_line = 0;
  std::optional<StructureConstants> sc;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  bool in_entries = false;

  auto lines = lines_of(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::size_t line_no = n + 1;
    std::string_view line = trim(strip_comment(lines[n]));
    if (line.empty()) continue;

    if (in_entries) {
      auto fields = tokens(line);
      if (fields.size() != 4 && fields.size() != 5)
        throw ParseError(line_no, "entry: expected 'i j k re [im]'");
      std::size_t idx[3];
      for (int t = 0; t < 3; ++t) {
        idx[t] = parse_count(fields[t], line_no, "entry index");
        if (idx[t] >= *dimension)
          throw ParseError(line_no, "entry index " + std::to_string(idx[t]) +
                                        " out of range for dimension " +
                                        std::to_string(*dimension));
      }
      if (!seen.insert({idx[0], idx[1], idx[2]}).second)
        throw ParseError(line_no, "duplicate entry (" + std::to_string(idx[0]) + "," +
                                      std::to_string(idx[1]) + "," +
                                      std::to_string(idx[2]) + ")");
      try {
        Rational re = Rational::parse(unquote(fields[3]));
        Rational im = fields.size() == 5 ? Rational::parse(unquote(fields[4])) : Rational(0);
        (*sc)(idx[0], idx[1], idx[2]) = GaussScalar(re, im);
      } catch (const ScalarParseError& e) {
        throw ParseError(line_no, std::string("entry value: ") + e.what());
      }
      continue;
    }

    auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError(line_no, "expected 'key: value', got '" + std::string(line) + "'");
    std::string key(trim(line.substr(0, colon)));
    std::string_view value = trim(line.substr(colon + 1));
    if (key == "name") {
      name = unquote(std::string(value));
    } else if (key == "dimension") {
      dimension = parse_count(value, line_no, "dimension");
      if (*dimension == 0) throw ParseError(line_no, "dimension must be at least 1");
    } else if (key == "unit_index") {
      unit_index = parse_count(value, line_no, "unit_index");
      unit_line = line_no;
    } else if (key == "entries") {
      if (!value.empty()) throw ParseError(line_no, "entries: list starts on the next line");
      if (!dimension) throw ParseError(line_no, "dimension must precede entries");
      if (unit_index && *unit_index >= *dimension)
        throw ParseError(unit_line, "unit_index out of range");
      sc.emplace(name.value_or(""), *dimension, unit_index);
      in_entries = true;
    } else {
      throw ParseError(line_no, "unknown key '" + key + "'");
    }
  }
  if (!dimension) throw ParseError(0, "missing dimension");
  if (!sc) {
    if (unit_index && *unit_index >= *dimension)
      throw ParseError(unit_line, "unit_index out of range");
    sc.emplace(name.value_or(""), *dimension, unit_index);
  }
  try {
    sc->validate();
  } catch (const AlgebraError& e) {
    throw ParseError(unit_line, e.what());
  }
  return std::move(*sc);
}

std::string serialize_algebra(const StructureConstants& sc) {
  std::ostringstream os;
  os << "name: " << sc.name() << "\n";
  os << "dimension: " << sc.dim() << "\n";
  if (sc.unit_index()) os << "unit_index: " << *sc.unit_index() << "\n";
  os << "entries:\n";
  const std::size_t n = sc.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const GaussScalar& v = sc(i, j, k);
        if (v.is_zero()) continue;
        os << i << " " << j << " " << k << " \"" << v.re().str() << "\" \""
           << v.im().str() << "\"\n";
      }
  return os.str();
}

ExactMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<GaussScalar>> rows;
  auto lines = lines_of(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    std::string_view line = trim(strip_comment(lines[n]));
    if (line.empty()) continue;
    std::vector<GaussScalar> row;
    for (auto& t : tokens(line)) {
      try {
        row.push_back(GaussScalar::parse(unquote(t)));
      } catch (const ScalarParseError& e) {
        throw ParseError(n + 1, std::string("matrix entry: ") + e.what());
      }
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError(n + 1, "matrix rows have different lengths");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(0, "empty matrix");
  ExactMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

AlgebraElement parse_element(std::string_view text, std::size_t dim) {
  Vector coeffs;
  for (auto& t : tokens(text)) {
    try {
      coeffs.push_back(GaussScalar::parse(unquote(t)));
    } catch (const ScalarParseError& e) {
      throw ParseError(0, std::string("element coefficient: ") + e.what());
    }
  }
  if (coeffs.size() != dim)
    throw ParseError(0, "element has " + std::to_string(coeffs.size()) +
                            " coefficients, algebra dimension is " + std::to_string(dim));
  return AlgebraElement(std::move(coeffs));
}

}  // namespace algint
