#pragma once

// Text format for arrangements.
//
//   # comment
//   order 3                      optional; root z is exp(2 pi i / 3)
//   x  : 1, 0, 0                 label : a, b, c [: multiplicity]
//   l2 : 1, z, z^2 : 2
//
// Abstract arrangements carry no coordinates:
//
//   abstract
//   a1                           label [: multiplicity]
//   point : a1, b1, c1           lines through one point
//
// Pairs of lines not named together in a point meet in a double point.

#include <cctype>
#include <cstddef>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mnet/arrangement.hpp"
#include "mnet/errors.hpp"
#include "mnet/scalar_parse.hpp"

namespace mnet {

namespace detail {

struct Field {
  std::string_view text;
  std::size_t column;  // 1-based column of text[0], or of the separator when empty
};

inline Field trim_field(std::string_view s, std::size_t column) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return {s.substr(a, b - a), column + a};
}

inline std::vector<Field> split_fields(std::string_view s, char sep, std::size_t column) {
  std::vector<Field> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim_field(s.substr(start, i - start), column + start));
      start = i + 1;
    }
  }
  return out;
}

inline bool valid_label(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (std::isspace(static_cast<unsigned char>(c)) || c == ':' || c == ',' || c == '#') return false;
  return s != "order" && s != "abstract" && s != "point";
}

inline long parse_positive(const Field& f, std::size_t line, const char* what) {
  if (f.text.empty()) throw ParseError(line, f.column, std::string("missing ") + what);
  long v = 0;
  for (std::size_t i = 0; i < f.text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(f.text[i])))
      throw ParseError(line, f.column + i, std::string(what) + " must be a positive integer");
    v = v * 10 + (f.text[i] - '0');
    if (v > 1000000) throw ParseError(line, f.column, std::string(what) + " is too large");
  }
  if (v < 1) throw ParseError(line, f.column, std::string(what) + " must be positive");
  return v;
}

}  // namespace detail

/// Parses the text format.  `default_order` applies when no `order` header
/// is present.  Syntax errors raise ParseError with 1-based line and column.
inline MultiArrangement parse_arrangement(std::string_view text, unsigned default_order = 1) {
  unsigned order = default_order;
  bool abstract = false, seen_record = false, seen_order = false;
  std::vector<ProjLine> lines;
  std::vector<std::string> labels;
  std::vector<long> mult;
  std::vector<std::vector<std::size_t>> points;
  std::vector<std::pair<std::size_t, std::vector<detail::Field>>> pending_points;  // resolved after labels
  std::set<std::string> seen_labels;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const detail::Field whole = detail::trim_field(raw, 1);
    if (whole.text.empty()) {
      if (eol == text.size()) break;
      continue;
    }
    const std::string_view body = whole.text;

    if (body.substr(0, 5) == "order" && (body.size() == 5 || std::isspace(static_cast<unsigned char>(body[5])))) {
      if (seen_record || seen_order) throw ParseError(line_no, whole.column, "'order' must come first, once");
      const auto f = detail::trim_field(body.substr(5), whole.column + 5);
      order = static_cast<unsigned>(detail::parse_positive(f, line_no, "order"));
      seen_order = true;
    } else if (body == "abstract") {
      if (seen_record) throw ParseError(line_no, whole.column, "'abstract' must precede all records");
      abstract = true;
    } else {
      seen_record = true;
      auto parts = detail::split_fields(body, ':', whole.column);
      const auto& head = parts[0];
      if (head.text == "point") {
        if (!abstract) throw ParseError(line_no, head.column, "point records need an 'abstract' header");
        if (parts.size() != 2) throw ParseError(line_no, head.column, "expected 'point : l1, l2, ...'");
        pending_points.push_back({line_no, detail::split_fields(parts[1].text, ',', parts[1].column)});
        continue;
      }
      if (!detail::valid_label(head.text)) throw ParseError(line_no, head.column, "invalid line label");
      const std::string label(head.text);
      if (!seen_labels.insert(label).second)
        throw ParseError(line_no, head.column, "duplicate label '" + label + "'");
      if (abstract) {
        if (parts.size() > 2) throw ParseError(line_no, parts[2].column, "abstract lines take no coordinates");
        labels.push_back(label);
        mult.push_back(parts.size() == 2 ? detail::parse_positive(parts[1], line_no, "multiplicity") : 1);
        continue;
      }
      if (parts.size() < 2) throw ParseError(line_no, head.column + head.text.size(), "expected ': a, b, c'");
      if (parts.size() > 3) throw ParseError(line_no, parts[3].column, "unexpected field");
      const auto coeffs = detail::split_fields(parts[1].text, ',', parts[1].column);
      if (coeffs.size() != 3)
        throw ParseError(line_no, parts[1].column, "a line needs exactly three coefficients");
      Triple t;
      for (int i = 0; i < 3; ++i) {
        if (coeffs[i].text.empty()) throw ParseError(line_no, coeffs[i].column, "empty coefficient");
        t[i] = parse_scalar(coeffs[i].text, order, line_no, coeffs[i].column);
      }
      if (is_zero(t)) throw ParseError(line_no, parts[1].column, "all coefficients are zero");
      lines.emplace_back(t, label);
      labels.push_back(label);
      mult.push_back(parts.size() == 3 ? detail::parse_positive(parts[2], line_no, "multiplicity") : 1);
    }
    if (eol == text.size()) break;
  }

  if (!abstract) return MultiArrangement(std::move(lines), std::move(mult), order);

  for (const auto& [ln, fields] : pending_points) {
    std::vector<std::size_t> pt;
    for (const auto& f : fields) {
      std::size_t idx = labels.size();
      for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == f.text) idx = i;
      if (idx == labels.size()) throw ParseError(ln, f.column, "unknown line '" + std::string(f.text) + "'");
      pt.push_back(idx);
    }
    points.push_back(std::move(pt));
  }
  return MultiArrangement::abstract(std::move(labels), std::move(points), std::move(mult));
}

/// Writes the text format; parse_arrangement(emit_arrangement(a)) rebuilds a.
inline std::string emit_arrangement(const MultiArrangement& arr, const std::string& comment = {}) {
  std::ostringstream os;
  if (!comment.empty()) os << "# " << comment << "\n";
  const auto& labels = arr.labels();
  const auto& mult = arr.multiplicities();
  if (arr.is_abstract()) {
    os << "abstract\n";
    for (std::size_t i = 0; i < labels.size(); ++i) {
      os << labels[i];
      if (mult[i] != 1) os << " : " << mult[i];
      os << "\n";
    }
    for (const auto& p : arr.declared_points()) {
      os << "point : ";
      for (std::size_t j = 0; j < p.size(); ++j) os << (j ? ", " : "") << labels[p[j]];
      os << "\n";
    }
    return os.str();
  }
  os << "order " << arr.order() << "\n";
  const auto& lines = arr.lines();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& c = lines[i].coeffs();
    os << labels[i] << " : " << c[0].str() << ", " << c[1].str() << ", " << c[2].str();
    if (mult[i] != 1) os << " : " << mult[i];
    os << "\n";
  }
  return os.str();
}

}  // namespace mnet
