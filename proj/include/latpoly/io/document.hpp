#pragma once

// Polygon input documents.
//
// Text form, one entry per line:
//
//   # comment (also allowed after an entry)
//   polygon [label]
//   x y
//   x y
//   polygon [label]
//   ...
//
// Points before the first `polygon` header form an unlabeled polygon. Each
// polygon needs at least one point. Coordinates are decimal integers with an
// optional leading sign.
//
// Structured form: a JSON object {"label": "...", "points": [[x, y], ...]}
// or {"polygons": [<object>, ...]}. A document whose first non-blank
// character is '{' is read as JSON.

#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "latpoly/core.hpp"
#include "latpoly/errors.hpp"

namespace latpoly::io {

struct PolygonDocument {
  std::vector<Point2> points;
  std::string label;

  friend bool operator==(const PolygonDocument&, const PolygonDocument&) = default;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line(line),
        column(column) {}

  std::size_t line;
  std::size_t column;
};

namespace detail {

inline bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Cursor over one line; columns are 1-based.
class LineCursor {
 public:
  LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_blanks() {
    while (pos_ < text_.size() && is_blank(text_[pos_])) ++pos_;
  }
  bool at_end() {
    skip_blanks();
    return pos_ == text_.size() || text_[pos_] == '#';
  }
  std::size_t column() const { return pos_ + 1; }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  std::string_view word() {
    skip_blanks();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_blank(text_[pos_]) && text_[pos_] != '#') ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Int integer() {
    skip_blanks();
    const std::size_t col = column();
    const std::string_view token = word();
    if (token.empty()) throw ParseError("expected an integer", line_, col);
    std::string_view digits = token;
    if (digits.front() == '+') digits.remove_prefix(1);
    Int value = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec == std::errc::result_out_of_range) throw ParseError("integer out of range: " + std::string(token), line_, col);
    if (ec != std::errc{} || end != digits.data() + digits.size() || digits.empty())
      throw ParseError("not an integer: " + std::string(token), line_, col);
    return value;
  }

  std::string rest() {
    skip_blanks();
    std::size_t end = text_.find('#', pos_);
    if (end == std::string_view::npos) end = text_.size();
    std::string_view r = text_.substr(pos_, end - pos_);
    while (!r.empty() && is_blank(r.back())) r.remove_suffix(1);
    pos_ = end;
    return std::string(r);
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

inline std::vector<PolygonDocument> parse_text(std::string_view text) {
  std::vector<PolygonDocument> docs;
  bool open_block = false;
  std::size_t header_line = 0;
  std::size_t line_no = 0;
  std::size_t start = 0;
  auto close_block = [&]() {
    if (open_block && docs.back().points.empty()) throw ParseError("polygon block has no points", header_line, 1);
  };
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    LineCursor cur(text.substr(start, end - start), line_no);
    start = end + 1;
    if (cur.at_end()) continue;

    const std::size_t col = cur.column();
    LineCursor probe = cur;
    if (probe.word() == "polygon") {
      close_block();
      cur.word();
      docs.push_back({{}, cur.rest()});
      open_block = true;
      header_line = line_no;
      continue;
    }
    const char first = cur.peek();
    if (!(std::isdigit(static_cast<unsigned char>(first)) || first == '-' || first == '+'))
      throw ParseError("expected 'polygon' or a point 'x y'", line_no, col);
    const Int x = cur.integer();
    const Int y = cur.integer();
    if (!cur.at_end()) throw ParseError("unexpected text after point", line_no, cur.column());
    if (!open_block) {
      docs.push_back({});
      open_block = true;
    }
    docs.back().points.push_back({x, y});
  }
  close_block();
  if (docs.empty()) throw ParseError("document contains no points", line_no, 1);
  return docs;
}

inline PolygonDocument polygon_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("points")) throw ParseError("polygon object needs a \"points\" array", 1, 1);
  PolygonDocument doc;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw ParseError("\"label\" must be a string", 1, 1);
    doc.label = j["label"].get<std::string>();
    if (doc.label.find_first_of("#\n\r") != std::string::npos)
      throw ParseError("label must not contain '#' or line breaks", 1, 1);
    const auto trimmed_start = doc.label.find_first_not_of(" \t");
    doc.label = trimmed_start == std::string::npos ? "" : doc.label.substr(trimmed_start, doc.label.find_last_not_of(" \t") - trimmed_start + 1);
  }
  const auto& pts = j["points"];
  if (!pts.is_array() || pts.empty()) throw ParseError("\"points\" must be a nonempty array", 1, 1);
  for (const auto& p : pts) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      throw ParseError("each point must be an integer pair [x, y]", 1, 1);
    for (const auto& c : p)
      if (c.is_number_unsigned() && c.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<Int>::max()))
        throw ParseError("integer out of range", 1, 1);
    doc.points.push_back({p[0].get<Int>(), p[1].get<Int>()});
  }
  return doc;
}

inline std::vector<PolygonDocument> parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // byte offsets are 1-based; convert to line/column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("malformed JSON", line, col);
  }
  if (j.is_object() && j.contains("polygons")) {
    if (!j["polygons"].is_array() || j["polygons"].empty()) throw ParseError("\"polygons\" must be a nonempty array", 1, 1);
    std::vector<PolygonDocument> docs;
    for (const auto& p : j["polygons"]) docs.push_back(polygon_from_json(p));
    return docs;
  }
  return {polygon_from_json(j)};
}

}  // namespace detail

inline std::vector<PolygonDocument> parse_document(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return detail::parse_json(text);
  return detail::parse_text(text);
}

// Canonical text form: every block gets a header, one point per line.
inline std::string serialize_document(const std::vector<PolygonDocument>& docs) {
  std::ostringstream out;
  for (const auto& doc : docs) {
    out << "polygon";
    if (!doc.label.empty()) out << ' ' << doc.label;
    out << '\n';
    for (const auto& p : doc.points) out << p.x << ' ' << p.y << '\n';
  }
  return out.str();
}

// The hull of a document's points.
inline LatticePolygon to_polygon(const PolygonDocument& doc) { return convex_hull(doc.points); }

}  // namespace latpoly::io
