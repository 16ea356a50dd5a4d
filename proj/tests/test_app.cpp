#include <gtest/gtest.h>

#include <filesystem>
#include <set>

#include "seminest/bench.hpp"
#include "seminest/dataset.hpp"
#include "seminest/metrics.hpp"
#include "seminest/render.hpp"

using namespace seminest;

namespace {

const char* kSquare = R"({"name": "sq", "strip_width": 4, "rotations": [0],
  "pieces": [{"id": "a", "quantity": 1, "vertices": [[0,0],[4,0],[4,4],[0,4]]}]})";

Dataset scaled(const Dataset& d, double k) {
  Dataset s = d;
  s.strip_width *= k;
  for (auto& p : s.pieces) {
    for (auto& v : p.polygon.vertices) {
      v.x *= k;
      v.y *= k;
    }
  }
  return s;
}

}  // namespace

TEST(ParseDataset, MinimalSquare) {
  const Dataset d = parse_dataset_text(kSquare);
  EXPECT_EQ(d.name, "sq");
  EXPECT_DOUBLE_EQ(d.strip_width, 4.0);
  ASSERT_EQ(d.pieces.size(), 1u);
  EXPECT_EQ(d.pieces[0].id, "a");
  EXPECT_DOUBLE_EQ(area(d.pieces[0].polygon), 16.0);
  EXPECT_EQ(d.total_quantity(), 1u);
}

TEST(ParseDataset, FreeRotationAndRoundTrip) {
  const Dataset d = parse_dataset_text(R"({"name": "f", "strip_width": 10, "rotations": "free",
    "pieces": [{"id": "t", "quantity": 3, "vertices": [[0,0],[2,0],[0,1]]}]})");
  EXPECT_TRUE(d.free_rotation);
  EXPECT_EQ(d.rotations, (std::vector<double>{0}));
  const Dataset back = parse_dataset_text(dataset_to_json(d));
  EXPECT_TRUE(back.free_rotation);
  EXPECT_EQ(back.total_quantity(), 3u);
  EXPECT_EQ(back.pieces[0].polygon.vertices.size(), 3u);
}

TEST(ParseDataset, BowTieIsValidationError) {
  try {
    parse_dataset_text(R"({"name": "b", "strip_width": 4, "rotations": [0],
      "pieces": [{"id": "bow", "quantity": 1, "vertices": [[0,0],[2,2],[2,0],[0,2]]}]})");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.piece_id(), "bow");
  }
}

TEST(ParseDataset, MalformedInputs) {
  EXPECT_THROW(parse_dataset_text("{"), ParseError);
  EXPECT_THROW(parse_dataset_text("[]"), ParseError);
  EXPECT_THROW(parse_dataset_text(R"({"name": "x", "rotations": [0], "pieces": []})"), ParseError);
  EXPECT_THROW(parse_dataset_text(R"({"name": "x", "strip_width": -1, "rotations": [0],
    "pieces": [{"id": "a", "quantity": 1, "vertices": [[0,0],[1,0],[0,1]]}]})"),
               ParseError);
  EXPECT_THROW(parse_dataset_text(R"({"name": "x", "strip_width": 1, "rotations": "any",
    "pieces": [{"id": "a", "quantity": 1, "vertices": [[0,0],[1,0],[0,1]]}]})"),
               ParseError);
  EXPECT_THROW(parse_dataset_text(R"({"name": "x", "strip_width": 1, "rotations": [0],
    "pieces": [{"id": "a", "quantity": 0, "vertices": [[0,0],[1,0],[0,1]]}]})"),
               ParseError);
  EXPECT_THROW(parse_dataset_text(R"({"name": "x", "strip_width": 1, "rotations": [0],
    "pieces": [{"id": "a", "quantity": 1, "vertices": [[0,0],[1],[0,1]]}]})"),
               ParseError);
  EXPECT_THROW(parse_dataset("/nonexistent/file.json"), ParseError);
}

TEST(ParseDataset, ShirtsSurrogateShape) {
  const Dataset d = parse_dataset(SEMINEST_DATA_DIR "/shirts.json");
  EXPECT_EQ(d.total_quantity(), 99u);
  EXPECT_EQ(d.pieces.size(), 8u);
  EXPECT_DOUBLE_EQ(d.strip_width, 40.0);
  EXPECT_EQ(d.rotations, (std::vector<double>{0, 180}));
}

TEST(WastedFraction, Examples) {
  EXPECT_DOUBLE_EQ(wasted_fraction(4, 4, 16), 0.0);
  EXPECT_DOUBLE_EQ(wasted_fraction(4, 8, 32), 0.0);
  EXPECT_DOUBLE_EQ(wasted_fraction(10, 4, 30), 25.0);
  EXPECT_THROW(wasted_fraction(0, 4, 0), std::invalid_argument);

  Dataset two = parse_dataset_text(kSquare);
  two.strip_width = 8;
  two.pieces[0].quantity = 2;
  const Layout l = pack(two, SolverConfig{});
  EXPECT_DOUBLE_EQ(l.length, 4.0);
  EXPECT_DOUBLE_EQ(wasted_fraction(l, two), 0.0);
}

TEST(WastedFraction, InvariantUnderUniformScaling) {
  const Dataset d = parse_dataset(SEMINEST_DATA_DIR "/shirts.json");
  SolverConfig c;
  const Layout base = pack(d, c);
  const double wf = wasted_fraction(base, d);
  EXPECT_GT(wf, 0.0);
  EXPECT_LT(wf, 100.0);
  for (double k : {0.5, 2.0, 4.0}) {
    const Dataset s = scaled(d, k);
    SolverConfig sc = c;
    sc.resolution = c.resolution * k;
    const Layout l = pack(s, sc);
    EXPECT_NEAR(l.length, base.length * k, 1e-9 * k * base.length);
    EXPECT_NEAR(wasted_fraction(l, s), wf, 1e-9);
  }
}

TEST(ExtensionArea, IntegerPieceOnIntegerLines) {
  const Polygon p = validate_and_normalize(Polygon{{{0, 0}, {3, 1}, {5, 4}, {1, 3}}});
  EXPECT_EQ(extension_area(p, 1.0), 0.0);
  EXPECT_EQ(extension_area(p, 0.5), 0.0);
}

TEST(ExtensionArea, Diamond) {
  // Vertices (0,2), (2.75,0), (4,2), (2.75,4) with lines at x = 0, 2, 4.
  // The bottom vertex adds a triangle of area 9/44 towards x = 2 plus two
  // trapezoids of area 1.25 inside the slab, the top vertex mirrors it.
  const Polygon p = validate_and_normalize(Polygon{{{0, 2}, {2.75, 0}, {4, 2}, {2.75, 4}}});
  EXPECT_NEAR(extension_area(p, 2.0), 9.0 / 22.0 + 2.5, 1e-12);
}

TEST(ExtensionArea, ZeroForRightAnglesOnGridSets) {
  for (const char* name : {"shirts", "trousers", "poly5b"}) {
    const Dataset d = parse_dataset(std::string(SEMINEST_DATA_DIR) + "/" + name + ".json");
    for (const auto& piece : d.pieces) {
      for (double a : {0.0, 90.0, 180.0, 270.0}) EXPECT_EQ(extension_area(rotate(piece.polygon, a), 1.0), 0.0);
    }
  }
}

TEST(Bench, ReportCountsAndCsvRoundTrip) {
  const Dataset d = parse_dataset(SEMINEST_DATA_DIR "/shirts.json");
  const auto one = bench(d, {1.0}, {{0}}, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].dataset, d.name);
  EXPECT_GE(one[0].disc_ms, 0.0);
  EXPECT_GE(one[0].place_ms, 0.0);

  const auto eight = bench(d, {1, 0.5, 0.2, 0.1}, {{0}, {0, 180}}, 1);
  ASSERT_EQ(eight.size(), 8u);
  std::set<std::pair<double, std::size_t>> keys;
  for (const auto& r : eight) {
    keys.insert({r.resolution, r.rotations.size()});
    EXPECT_GE(r.wf_pct, 0.0);
    EXPECT_LE(r.wf_pct, 100.0);
    EXPECT_GT(r.checks, 0u);
  }
  EXPECT_EQ(keys.size(), 8u);

  const std::string csv = to_csv(eight);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "dataset,R,rotations,length,wf_pct,ext_area,disc_ms,place_ms,checks");
  const auto back = parse_csv(csv);
  ASSERT_EQ(back.size(), eight.size());
  EXPECT_EQ(to_csv(back), csv);
  EXPECT_EQ(back[7].rotations, eight[7].rotations);
  EXPECT_EQ(back[7].checks, eight[7].checks);
}

TEST(Bench, CsvStableApartFromTimings) {
  const Dataset d = parse_dataset(SEMINEST_DATA_DIR "/jakob2.json");
  auto a = bench(d, {2.0}, {{0, 90}}, 2);
  auto b = bench(d, {2.0}, {{0, 90}}, 2);
  for (auto* v : {&a, &b}) {
    for (auto& r : *v) r.disc_ms = r.place_ms = 0.0;
  }
  EXPECT_EQ(to_csv(a), to_csv(b));
}

TEST(Render, EmptyLayoutIsStripOnly) {
  const Dataset d = parse_dataset_text(kSquare);
  Layout empty;
  const std::string svg = render_svg(empty, d, 1.0);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("<rect"), std::string::npos);
  EXPECT_EQ(svg.find("<polygon"), std::string::npos);
}

TEST(Render, OneSquareAndIoError) {
  const Dataset d = parse_dataset_text(kSquare);
  const Layout l = pack(d, SolverConfig{});
  const std::string svg = render_svg(l, d, 1.0);
  EXPECT_NE(svg.find("<polygon"), std::string::npos);
  EXPECT_NE(svg.find("length = 4"), std::string::npos);
  EXPECT_THROW(render_svg(l, d, 1.0, "/nonexistent/dir/out.svg"), IoError);
  const auto path = std::filesystem::temp_directory_path() / "seminest_render_test.svg";
  render_svg(l, d, 1.0, path.string());
  EXPECT_GT(std::filesystem::file_size(path), 0u);
  std::filesystem::remove(path);
}
