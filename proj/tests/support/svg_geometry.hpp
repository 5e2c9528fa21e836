#pragma once

#include <map>
#include <string>
#include <vector>

#include "lamcoord/triangle.hpp"

namespace lamcoord::testing {

struct Point {
  double x = 0;
  double y = 0;
};

struct Segment {
  Point a;
  Point b;
};

struct SvgPath {
  std::map<std::string, std::string> attrs;
  std::vector<std::vector<Point>> subpaths;
  bool closed = false;

  std::string attr(const std::string& key) const;
  bool has_class(const std::string& cls) const;
  // Non-degenerate segments of every subpath, plus the closing segment.
  std::vector<Segment> segments() const;
};

struct SvgDocument {
  std::vector<SvgPath> paths;
  std::map<std::string, std::string> labels; // data-arc -> text
  int punctures = 0;
  int crosscaps = 0;

  std::vector<const SvgPath*> components() const;
  const SvgPath* arc(const std::string& id) const;
};

// Reads the subset of SVG the renderer emits: path elements with M/L/Z
// data, circles, text labels. Throws std::runtime_error on other path
// commands.
SvgDocument parse_svg(const std::string& text);

bool segments_intersect(const Segment& s, const Segment& t);

// Number of intersections between every arc path and all component paths,
// keyed by arc id.
std::map<std::string, long> arc_crossings(const SvgDocument& doc);

// Expected counts keyed the same way, from the coordinates.
std::map<std::string, long> expected_crossings(const TriangleCoords& tau);

// Intersecting pairs of component segments that are not consecutive along
// one subpath. Zero for a planar drawing.
long strand_crossings(const SvgDocument& doc);

} // namespace lamcoord::testing
