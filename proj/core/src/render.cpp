#include "lamcoord/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

namespace lamcoord {

namespace {

// Layout units: one unit is the slot pitch on a beta arc and the spacing
// between nested lanes around a site. y grows downwards as in SVG.

struct Pt {
  double x;
  double y;
};

using Run = std::vector<Pt>;

struct Site {
  double cx = 0;
  double radius = 0; // puncture lane origin or crosscap circle radius
  double base = 0;   // half width left for non-primitive rings
  double hbase = 0;
  bool crosscap = false;
  int extras = 0;

  double w(int level) const { return base + level; }
  double h(int level) const { return hbase + level; }
};

struct Layout {
  std::vector<Site> sites;
  double spacing = 0; // distance between consecutive sites
  double top = 0;     // boundary at y = -top and y = +top
  double slot_extent = 0;
};

std::string fmt(double v) {
  if (std::fabs(v) < 0.0005) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

Layout make_layout(const StrandDiagram& d) {
  Layout lay;
  for (Int b : d.slot_counts) lay.slot_extent = std::max(lay.slot_extent, static_cast<double>(b - 1) / 2.0);

  double widest = 0;
  for (const RegionMatching& m : d.regions) {
    Site s;
    s.crosscap = m.crosscap > 0;
    if (s.crosscap) {
      s.extras = static_cast<int>(std::count_if(d.extras.begin(), d.extras.end(),
                                                [&](const ExtraCurve& e) { return e.crosscap == m.crosscap; }));
      s.radius = std::max(0.6, 0.15 * static_cast<double>(m.core_points()));
    } else {
      s.radius = 0.35;
    }
    s.base = s.radius + s.extras;
    s.hbase = std::max(lay.slot_extent, s.base) + 0.5;
    widest = std::max(widest, s.w(m.max_level) + 1.0);
    lay.top = std::max(lay.top, s.h(m.max_level) + 1.0);
    lay.sites.push_back(s);
  }
  lay.spacing = std::max(3.0, 2.0 * widest);
  for (std::size_t r = 0; r < lay.sites.size(); ++r) lay.sites[r].cx = static_cast<double>(r) * lay.spacing;
  return lay;
}

double slot_y(const StrandDiagram& d, const SlotRef& s) {
  return static_cast<double>(s.pos) - static_cast<double>(d.slot_counts[static_cast<std::size_t>(s.arc)] - 1) / 2.0;
}

// Point p of the 2c points on a crosscap circle, as an angle measured
// counterclockwise with y up.
double point_angle(const RegionMatching& m, Int p) {
  const double c = static_cast<double>(m.core_points()) / 2.0;
  const double offset = static_cast<double>(2 * p - (m.left_core_ends - 1)) / 2.0;
  return std::numbers::pi + offset * std::numbers::pi / c;
}

Pt circle_point(const Site& s, double angle) {
  return {s.cx + s.radius * std::cos(angle), -s.radius * std::sin(angle)};
}

// From the slot side into the crosscap circle.
Run half_strand(const StrandDiagram& d, const RegionMatching& m, const Site& s, const SlotRef& slot, int level,
                Int point) {
  const bool left = point < m.left_core_ends;
  Int offset = 0;
  if (left) {
    offset = 2 * point - (m.left_core_ends - 1);
  } else {
    // Right points run bottom to top; positive offsets lie above the axis.
    offset = 2 * (point - m.left_core_ends) - (m.right_core_ends - 1);
  }
  const double x = left ? s.cx - s.w(level) : s.cx + s.w(level);
  const double y = slot_y(d, slot);
  const Pt target = circle_point(s, point_angle(m, point));
  if (offset == 0) return {{x, y}, {x, 0.0}, {left ? s.cx - s.radius : s.cx + s.radius, 0.0}};
  const bool upper = left ? offset < 0 : offset > 0;
  const double lane = upper ? -s.h(level) : s.h(level);
  return {{x, y}, {x, lane}, {target.x, lane}, target};
}

// Points of one chord walked from `from` to `to`; two runs for a crosscap
// transit, the first ending at the entry point and the second starting at
// the antipodal exit point.
std::vector<Run> chord_runs(const StrandDiagram& d, const RegionMatching& m, const Site& s, const Chord& ch) {
  const double yf = slot_y(d, ch.from);
  const double yt = slot_y(d, ch.to);
  const int lv = ch.from_level;
  const double w = s.w(lv);
  const double h = s.h(lv);
  switch (ch.kind) {
  case ChordKind::Above: return {{{s.cx - w, yf}, {s.cx - w, -h}, {s.cx + w, -h}, {s.cx + w, yt}}};
  case ChordKind::Below: return {{{s.cx - w, yf}, {s.cx - w, h}, {s.cx + w, h}, {s.cx + w, yt}}};
  case ChordKind::Loop: {
    // A right loop hangs off the left arc and turns around the east side.
    const double near = ch.side == LoopSide::Right ? s.cx - w : s.cx + w;
    const double far = ch.side == LoopSide::Right ? s.cx + w : s.cx - w;
    return {{{near, yf}, {near, -h}, {far, -h}, {far, h}, {near, h}, {near, yt}}};
  }
  case ChordKind::CoreLoop:
  case ChordKind::StraightCore: {
    Run in = half_strand(d, m, s, ch.from, ch.from_level, ch.transit->entry);
    Run out = half_strand(d, m, s, ch.to, ch.to_level, ch.transit->exit);
    std::reverse(out.begin(), out.end());
    return {in, out};
  }
  }
  return {};
}

std::string path_data(const std::vector<Run>& runs, bool closed, double scale, double ox, double oy) {
  std::ostringstream os;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    for (std::size_t i = 0; i < runs[r].size(); ++i) {
      if (r > 0 || i > 0) os << ' ';
      os << (i == 0 ? 'M' : 'L') << fmt((runs[r][i].x + ox) * scale) << ' ' << fmt((runs[r][i].y + oy) * scale);
    }
  }
  if (closed) os << " Z";
  return os.str();
}

const char* kPalette[] = {"#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2", "#7f7f7f"};

} // namespace

std::string render_svg(const StrandDiagram& diagram, const RenderOptions& options) {
  const SurfaceSignature& sig = diagram.sig();
  const int n = sig.punctures();
  const Layout lay = make_layout(diagram);
  const double scale = options.scale;
  const double ox = lay.spacing / 2.0 + 1.0;
  const double oy = lay.top + 1.0;
  const double width = (static_cast<double>(lay.sites.size()) * lay.spacing + 2.0) * scale;
  const double height = (2.0 * lay.top + 2.0) * scale;
  const double sw = options.stroke_width;
  auto X = [&](double x) { return fmt((x + ox) * scale); };
  auto Y = [&](double y) { return fmt((y + oy) * scale); };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n"
      << "<title>" << sig.name() << ' ' << to_string(diagram.tau) << "</title>\n";

  const double left_edge = -lay.spacing / 2.0;
  const double right_edge = (static_cast<double>(lay.sites.size()) - 0.5) * lay.spacing;
  svg << "<rect class=\"boundary\" x=\"" << X(left_edge) << "\" y=\"" << Y(-lay.top) << "\" width=\""
      << fmt((right_edge - left_edge) * scale) << "\" height=\"" << fmt(2.0 * lay.top * scale) << "\" rx=\""
      << fmt(scale) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << fmt(sw) << "\"/>\n";

  struct Label {
    std::string arc;
    double x;
    double y;
    Int value;
  };
  std::vector<Label> labels;
  auto arc_path = [&](const std::string& id, const char* cls, const char* colour, const std::vector<Pt>& pts) {
    svg << "<path id=\"" << id << "\" class=\"arc " << cls << "\" d=\"" << path_data({pts}, false, scale, ox, oy)
        << "\" fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"" << fmt(sw * 0.6)
        << "\" stroke-dasharray=\"" << fmt(sw * 3) << ' ' << fmt(sw * 2) << "\"/>\n";
  };

  for (int a = 0; a < sig.beta_count(); ++a) {
    const double x = (a + 0.5) * lay.spacing;
    const std::string id = "beta-" + std::to_string(a + 1);
    arc_path(id, "beta", "#c0392b", {{x, -lay.top}, {x, lay.top}});
    labels.push_back({id, x + 0.2, -lay.top + 0.8, diagram.tau.beta[static_cast<std::size_t>(a)]});
  }
  for (int i = 1; i <= n - 1; ++i) {
    const Site& s = lay.sites[static_cast<std::size_t>(i)];
    const std::string up = "alpha-" + std::to_string(2 * i - 1);
    const std::string down = "alpha-" + std::to_string(2 * i);
    arc_path(up, "alpha", "#555555", {{s.cx, -s.radius}, {s.cx, -lay.top}});
    arc_path(down, "alpha", "#555555", {{s.cx, s.radius}, {s.cx, lay.top}});
    labels.push_back({up, s.cx + 0.2, -lay.top + 0.8, diagram.tau.alpha[static_cast<std::size_t>(2 * i - 2)]});
    labels.push_back({down, s.cx + 0.2, lay.top - 0.4, diagram.tau.alpha[static_cast<std::size_t>(2 * i - 1)]});
  }
  for (int i = 1; i <= sig.genus() - 1; ++i) {
    const std::size_t r = static_cast<std::size_t>(n - 1 + i);
    const RegionMatching& m = diagram.regions[r];
    const Site& s = lay.sites[r];
    // The cap holds the core block and the non-core loops, nothing else.
    int inner = 0;
    for (const Chord& ch : m.chords) {
      if (ch.kind != ChordKind::Above && ch.kind != ChordKind::Below) {
        inner = std::max({inner, ch.from_level, ch.to_level});
      }
    }
    const double gw = s.w(inner) + 0.5;
    const double gh = s.h(inner) + 0.5;
    const std::string id = "gamma-" + std::to_string(i);
    arc_path(id, "gamma", "#2471a3", {{s.cx - gw, -lay.top}, {s.cx - gw, gh}, {s.cx + gw, gh}, {s.cx + gw, -lay.top}});
    labels.push_back({id, s.cx - gw + 0.2, gh + 0.8, diagram.tau.gamma[static_cast<std::size_t>(i - 1)]});
  }

  for (std::size_t r = 0; r < lay.sites.size(); ++r) {
    const Site& s = lay.sites[r];
    if (!s.crosscap) {
      svg << "<circle class=\"puncture\" cx=\"" << X(s.cx) << "\" cy=\"" << Y(0) << "\" r=\"" << fmt(0.15 * scale)
          << "\" fill=\"black\"/>\n";
      continue;
    }
    svg << "<circle class=\"crosscap\" cx=\"" << X(s.cx) << "\" cy=\"" << Y(0) << "\" r=\"" << fmt(s.radius * scale)
        << "\" fill=\"#f4f4f4\" stroke=\"black\" stroke-width=\"" << fmt(sw * 0.6) << "\"/>\n";
    const double q = s.radius * std::numbers::sqrt2 / 2.0;
    svg << "<path class=\"crosscap-cross\" d=\"M" << X(s.cx - q) << ' ' << Y(-q) << " L" << X(s.cx + q) << ' '
        << Y(q) << " M" << X(s.cx - q) << ' ' << Y(q) << " L" << X(s.cx + q) << ' ' << Y(-q)
        << "\" stroke=\"#999999\" stroke-width=\"" << fmt(sw * 0.5) << "\"/>\n";
  }

  const std::vector<TracedComponent> comps = trace(diagram);
  std::vector<int> ring_index(lay.sites.size(), 0);
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const TracedComponent& comp = comps[ci];
    std::vector<Run> runs;
    bool closed = true;
    const char* dash = "";
    if (comp.extra) {
      const std::size_t r = static_cast<std::size_t>(n - 1 + comp.extra->crosscap);
      const Site& s = lay.sites[r];
      // The core ring sits innermost, bounding curves around it.
      int e = 0;
      const bool has_core = std::any_of(diagram.extras.begin(), diagram.extras.end(), [&](const ExtraCurve& x) {
        return x.crosscap == comp.extra->crosscap && x.one_sided;
      });
      if (comp.extra->one_sided) {
        e = 1;
      } else {
        e = ++ring_index[r] + (has_core ? 1 : 0);
      }
      const double h = s.radius + e - 0.5;
      if (comp.extra->one_sided) {
        runs.push_back({{s.cx, -s.radius}, {s.cx, -h}, {s.cx + h, -h}, {s.cx + h, h}, {s.cx, h}, {s.cx, s.radius}});
        closed = false;
      } else {
        runs.push_back({{s.cx - h, -h}, {s.cx + h, -h}, {s.cx + h, h}, {s.cx - h, h}});
      }
      dash = " stroke-dasharray=\"4 2\"";
    } else {
      Run current;
      bool transit_seen = false;
      for (const TraceStep& step : comp.steps) {
        const RegionMatching& m = diagram.regions[static_cast<std::size_t>(step.region)];
        const Chord& ch = m.chords[static_cast<std::size_t>(step.chord)];
        std::vector<Run> parts = chord_runs(diagram, m, lay.sites[static_cast<std::size_t>(step.region)], ch);
        if (step.reversed) {
          std::reverse(parts.begin(), parts.end());
          for (auto& p : parts) std::reverse(p.begin(), p.end());
        }
        current.insert(current.end(), parts[0].begin(), parts[0].end());
        if (parts.size() == 2) {
          runs.push_back(std::move(current));
          current = parts[1];
          transit_seen = true;
        }
      }
      if (transit_seen) {
        // The tail leads back into the first run.
        current.insert(current.end(), runs[0].begin(), runs[0].end());
        runs[0] = std::move(current);
        closed = false;
      } else {
        runs.push_back(std::move(current));
      }
    }
    svg << "<path id=\"component-" << ci + 1 << "\" class=\"component\" data-sidedness=\"" << to_string(comp.sidedness)
        << "\" data-core-crossings=\"" << comp.core_crossings << "\" d=\"" << path_data(runs, closed, scale, ox, oy)
        << "\" fill=\"none\" stroke=\"" << kPalette[ci % std::size(kPalette)] << "\" stroke-width=\"" << fmt(sw)
        << "\"" << dash << "/>\n";
  }

  if (options.labels) {
    for (const Label& l : labels) {
      svg << "<text class=\"label\" data-arc=\"" << l.arc << "\" x=\"" << X(l.x) << "\" y=\"" << Y(l.y)
          << "\" font-size=\"" << fmt(0.7 * scale) << "\" font-family=\"sans-serif\">" << l.value << "</text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

} // namespace lamcoord
