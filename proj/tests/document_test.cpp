#include <gtest/gtest.h>

#include <random>

#include "latpoly/io/document.hpp"
#include "latpoly/io/svg.hpp"

namespace latpoly::io {
namespace {

TEST(ParseDocument, ImplicitSinglePolygon) {
  const auto docs = parse_document("0 0\n1 0  # corner\n\n  0 1\n");
  ASSERT_EQ(docs.size(), 1u);
  EXPECT_EQ(docs[0].points, (std::vector<Point2>{{0, 0}, {1, 0}, {0, 1}}));
  EXPECT_EQ(docs[0].label, "");
}

TEST(ParseDocument, LabeledBlocks) {
  const auto docs = parse_document("# two triangles\npolygon P1\n0 0\n1 0\n1 -1\npolygon  P2 second # note\n0 0\n+1 2\n2 3\n");
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[0].label, "P1");
  EXPECT_EQ(docs[1].label, "P2 second");
  EXPECT_EQ(docs[1].points[1], (Point2{1, 2}));
}

TEST(ParseDocument, JsonForms) {
  const auto one = parse_document(R"({"label": "sq", "points": [[0,0],[1,0],[1,1],[0,1]]})");
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].label, "sq");
  EXPECT_EQ(one[0].points.size(), 4u);
  const auto many = parse_document(R"({"polygons": [{"points": [[0,0]]}, {"points": [[1,1],[2,2]]}]})");
  ASSERT_EQ(many.size(), 2u);
  EXPECT_EQ(many[1].points[1], (Point2{2, 2}));
}

void expect_parse_error(std::string_view text, std::size_t line, std::size_t column) {
  try {
    parse_document(text);
    FAIL() << "expected ParseError for: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, line) << e.what();
    EXPECT_EQ(e.column, column) << e.what();
  }
}

TEST(ParseDocument, ErrorsCarryPosition) {
  expect_parse_error("0 0\n1 x\n", 2, 3);
  expect_parse_error("0 0\n1\n", 2, 2);
  expect_parse_error("0 0\n  hello 1\n", 2, 3);
  expect_parse_error("0 0 7\n", 1, 5);
  expect_parse_error("polygon A\npolygon B\n1 1\n", 1, 1);
  expect_parse_error("polygon A\n", 1, 1);
  expect_parse_error("", 1, 1);
  expect_parse_error("1 99999999999999999999\n", 1, 3);
  expect_parse_error("1.5 2\n", 1, 1);
  expect_parse_error("{\"points\": [[0,0],\n [1]]}", 1, 1);
  expect_parse_error("{\"points\": [[0,0],\n [1, 2]", 2, 8);
}

TEST(SerializeDocument, CanonicalRoundTrip) {
  const std::string text = "  0 0\n1 0 # c\npolygon  B  \n5 -7\n";
  const auto docs = parse_document(text);
  const auto canonical = serialize_document(docs);
  EXPECT_EQ(canonical, "polygon\n0 0\n1 0\npolygon B\n5 -7\n");
  EXPECT_EQ(parse_document(canonical), docs);
  EXPECT_EQ(serialize_document(parse_document(canonical)), canonical);
}

TEST(SerializeDocument, RandomDocumentsRoundTrip) {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<Int> coord(-1'000'000, 1'000'000);
  std::uniform_int_distribution<int> count(1, 6);
  const std::vector<std::string> labels{"", "P", "hexagon one", "x_2"};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<PolygonDocument> docs(static_cast<std::size_t>(count(rng)));
    for (auto& d : docs) {
      d.label = labels[static_cast<std::size_t>(count(rng)) % labels.size()];
      for (int i = count(rng); i > 0; --i) d.points.push_back({coord(rng), coord(rng)});
    }
    EXPECT_EQ(parse_document(serialize_document(docs)), docs);
  }
}

TEST(ParseDocument, MalformedInputNeverCrashes) {
  std::mt19937_64 rng(62);
  const std::string alphabet = "0123456789 -+\n#polygn{}[],\":x.";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(0, 40);
  for (int trial = 0; trial < 3000; ++trial) {
    std::string text;
    for (int i = len(rng); i > 0; --i) text.push_back(alphabet[pick(rng)]);
    try {
      const auto docs = parse_document(text);
      for (const auto& d : docs) EXPECT_FALSE(d.points.empty());
    } catch (const ParseError&) {
    }
  }
}

TEST(RenderSvg, ContainsFigureElements) {
  const auto square = convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const auto tri = triangulate_primitive(square);
  const auto svg = render_svg(tri);
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  auto count = [&](std::string_view needle) {
    std::size_t n = 0;
    for (auto pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1)) ++n;
    return n;
  };
  // 2 triangles plus the outline.
  EXPECT_EQ(count("<polygon "), 3u);
  EXPECT_EQ(count("r=\"4\""), 4u);
  EXPECT_EQ(svg.find("id=\"decomposition\""), std::string::npos);

  const auto overlay = render_svg(tri, SvgOverlay{decompose(tri, {1, 1}, 2), {1, 1}});
  EXPECT_NE(overlay.find("id=\"decomposition\""), std::string::npos);
}

TEST(EmitSvg, UnwritablePath) {
  const auto tri = triangulate_primitive(convex_hull({{0, 0}, {1, 0}, {0, 1}}));
  EXPECT_THROW(emit_svg(tri, std::nullopt, "/nonexistent-dir/x.svg"), IoError);
}

}  // namespace
}  // namespace latpoly::io
