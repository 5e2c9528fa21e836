#include <gtest/gtest.h>

#include "lamcoord/dynnikov.hpp"
#include "lamcoord/oracle.hpp"
#include "lamcoord/render.hpp"
#include "svg_geometry.hpp"

namespace lamcoord {
namespace {

using testing::arc_crossings;
using testing::expected_crossings;
using testing::parse_svg;
using testing::strand_crossings;

TriangleCoords lamination_n23() { return make_triangle(signature(2, 3), {4, 2, 2, 6}, {2, 6, 8, 4}, {8}, {1, 1}); }
TriangleCoords lamination_n22() { return make_triangle(signature(2, 2), {4, 2}, {6, 2, 2}, {4}, {1, 0}); }

TEST(Render, Deterministic) {
  const StrandDiagram d = build_diagram(lamination_n23());
  EXPECT_EQ(render_svg(d), render_svg(build_diagram(lamination_n23())));
  RenderOptions opt;
  opt.scale = 20;
  EXPECT_NE(render_svg(d), render_svg(d, opt));
}

TEST(Render, N22Layout) {
  const auto doc = parse_svg(render_svg(build_diagram(lamination_n22())));
  EXPECT_EQ(doc.punctures, 2);
  EXPECT_EQ(doc.crosscaps, 2);
  EXPECT_EQ(doc.labels.at("beta-1"), "6");
  EXPECT_EQ(doc.labels.at("beta-2"), "2");
  EXPECT_EQ(doc.labels.at("beta-3"), "2");
  const auto counts = arc_crossings(doc);
  EXPECT_EQ(counts.at("beta-1"), 6);
  EXPECT_EQ(counts.at("beta-2"), 2);
  EXPECT_EQ(counts.at("beta-3"), 2);
}

TEST(Render, CrossingsEqualCoordinates) {
  for (const auto& tau : {lamination_n23(), lamination_n22()}) {
    const auto doc = parse_svg(render_svg(build_diagram(tau)));
    EXPECT_EQ(arc_crossings(doc), expected_crossings(tau)) << to_string(tau);
    EXPECT_EQ(strand_crossings(doc), 0) << to_string(tau);
    EXPECT_EQ(doc.components().size(), trace(build_diagram(tau)).size());
  }
}

TEST(Render, LabelsMatchCoordinates) {
  const TriangleCoords tau = lamination_n23();
  const auto doc = parse_svg(render_svg(build_diagram(tau)));
  for (const auto& [id, n] : expected_crossings(tau)) EXPECT_EQ(doc.labels.at(id), std::to_string(n)) << id;
  RenderOptions opt;
  opt.labels = false;
  EXPECT_TRUE(parse_svg(render_svg(build_diagram(tau), opt)).labels.empty());
}

TEST(Render, LoneCoreRing) {
  const auto tau = make_triangle(signature(2, 2), {0, 0}, {0, 0, 0}, {0}, {-1, 0});
  const std::string svg = render_svg(build_diagram(tau));
  const auto doc = parse_svg(svg);
  const auto comps = doc.components();
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0]->attr("data-sidedness"), "1-sided");
  EXPECT_FALSE(comps[0]->attr("stroke-dasharray").empty());
  for (const auto& [id, n] : arc_crossings(doc)) EXPECT_EQ(n, 0) << id;
}

TEST(Render, CrossingsAndPlanarityOnBox) {
  for (auto [k, n] : {std::pair{2, 2}, std::pair{1, 3}, std::pair{3, 1}}) {
    const auto sig = signature(k, n);
    oracle::DynnikovBox::cube(sig, 1).for_each([&](const DynnikovCoords& rho) {
      const DecodeOutcome out = try_decode(rho);
      if (!out.result) return;
      const auto doc = parse_svg(render_svg(build_diagram(out.result->tau)));
      ASSERT_EQ(arc_crossings(doc), expected_crossings(out.result->tau)) << to_string(rho);
      ASSERT_EQ(strand_crossings(doc), 0) << to_string(rho);
    });
  }
}

} // namespace
} // namespace lamcoord
