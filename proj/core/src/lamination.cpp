#include "lamcoord/lamination.hpp"

#include <algorithm>

#include "lamcoord/dynnikov.hpp"

namespace lamcoord {

namespace {

int as_level(Int v) { return static_cast<int>(v); }

Chord through(SlotRef from, SlotRef to, ChordKind kind, int level) {
  Chord c;
  c.from = from;
  c.to = to;
  c.kind = kind;
  c.from_level = level;
  c.to_level = level;
  return c;
}

Chord loop(int arc, Int top, Int bottom, LoopSide side, int level) {
  Chord c = through({arc, top}, {arc, bottom}, ChordKind::Loop, level);
  c.side = side;
  return c;
}

// Nesting rank of the i-th of `count` consecutive half strands meeting a
// crosscap; the middle ones are innermost.
int block_level(Int i, Int count) {
  const Int d = 2 * i - (count - 1);
  return as_level((d < 0 ? -d : d) / 2 + 1);
}

// Half strands from the left arc (top to bottom) take crosscap points
// 0 .. E_L-1, those from the right arc (bottom to top) the rest. Each point
// is glued to its antipode p + c.
void add_core_block(RegionMatching& m, Int left_start, Int right_start) {
  const Int el = m.left_core_ends;
  const Int er = m.right_core_ends;
  const Int c = (el + er) / 2;
  auto slot_of = [&](Int p) -> SlotRef {
    if (p < el) return {m.left_arc, left_start + p};
    return {m.right_arc, right_start + er - 1 - (p - el)};
  };
  auto level_of = [&](Int p) { return p < el ? block_level(p, el) : block_level(p - el, er); };
  for (Int p = 0; p < c; ++p) {
    const Int q = p + c;
    Chord ch;
    ch.from = slot_of(p);
    ch.to = slot_of(q);
    ch.from_level = level_of(p);
    ch.to_level = level_of(q);
    ch.transit = Transit{m.crosscap, p, q};
    if (ch.from.arc == ch.to.arc) {
      ch.kind = ChordKind::CoreLoop;
      ch.side = ch.from.arc == m.left_arc ? LoopSide::Right : LoopSide::Left;
    } else {
      ch.kind = ChordKind::StraightCore;
    }
    m.max_level = std::max({m.max_level, ch.from_level, ch.to_level});
    m.chords.push_back(ch);
  }
}

// Above, loop and below components between two arcs, outside `inner`
// levels already used around the site. left_gap / right_gap count the core
// half strands sitting between the aboves and the belows on each arc.
void add_frame(RegionMatching& m, Int above, Int below, Int loops, LoopSide side, Int left_gap, Int right_gap,
               int inner) {
  const int loop_base = inner;
  for (Int j = 0; j < above; ++j) {
    m.chords.push_back(
        through({m.left_arc, j}, {m.right_arc, j}, ChordKind::Above, as_level(loop_base + loops + above - j)));
  }
  if (loops > 0) {
    const int arc = side == LoopSide::Right ? m.left_arc : m.right_arc;
    const Int span = 2 * loops + (side == LoopSide::Right ? left_gap : right_gap);
    for (Int q = 0; q < loops; ++q) {
      m.chords.push_back(loop(arc, above + q, above + span - 1 - q, side, as_level(loop_base + loops - q)));
    }
  }
  const Int left_below = above + left_gap + (side == LoopSide::Right ? 2 * loops : 0);
  const Int right_below = above + right_gap + (side == LoopSide::Left ? 2 * loops : 0);
  for (Int j = 0; j < below; ++j) {
    m.chords.push_back(through({m.left_arc, left_below + j}, {m.right_arc, right_below + j}, ChordKind::Below,
                               as_level(loop_base + loops + 1 + j)));
  }
  m.max_level = std::max(m.max_level, as_level(loop_base + loops + std::max(above, below)));
}

} // namespace

std::string to_string(ChordKind kind) {
  switch (kind) {
  case ChordKind::Above: return "above";
  case ChordKind::Below: return "below";
  case ChordKind::Loop: return "loop";
  case ChordKind::CoreLoop: return "core-loop";
  case ChordKind::StraightCore: return "straight-core";
  }
  return "?";
}

std::string to_string(Sidedness s) { return s == Sidedness::OneSided ? "1-sided" : "2-sided"; }

StrandDiagram build_diagram(const TriangleCoords& tau, Int max_slots) {
  ValidityReport report = validate(tau);
  if (!report.valid()) throw InvalidTriangleCoords(std::move(report));
  Int total = 0;
  for (Int b : tau.beta) total += b;
  if (total > max_slots) {
    throw DomainError("diagram needs " + std::to_string(total) + " slots, limit is " + std::to_string(max_slots));
  }

  const SurfaceSignature& sig = tau.sig;
  StrandDiagram d{tau, census(tau), tau.beta, {}, {}, 0};
  d.r_components = d.census.r_components;

  for (const RegionId& id : regions(sig)) {
    RegionMatching m;
    m.region = id;
    m.left_arc = left_arc(sig, id);
    m.right_arc = right_arc(sig, id);
    switch (id.kind) {
    case RegionKind::DeltaZero: {
      const Int loops = d.census.delta_zero.left_loops;
      for (Int q = 0; q < loops; ++q) {
        m.chords.push_back(loop(m.right_arc, q, 2 * loops - 1 - q, LoopSide::Left, as_level(loops - q)));
      }
      m.max_level = as_level(loops);
      break;
    }
    case RegionKind::S: {
      const SRegionCensus& s = d.census.s[static_cast<std::size_t>(id.index - 1)];
      add_frame(m, s.above, s.below, s.loops, s.side, 0, 0, 0);
      break;
    }
    case RegionKind::SPrime: {
      const SPrimeRegionCensus& s = d.census.sprime[static_cast<std::size_t>(id.index - 1)];
      m.crosscap = id.index;
      const Int cores = s.core_loops;
      m.left_core_ends = s.straight_cores + (s.side == LoopSide::Right ? 2 * cores : 0);
      m.right_core_ends = s.straight_cores + (s.side == LoopSide::Left ? 2 * cores : 0);
      if (m.core_points() > 0) {
        // Core block sits just inside the non-core loops.
        const Int left_start = s.above + (s.side == LoopSide::Right ? s.noncore_loops : 0);
        const Int right_start = s.above + (s.side == LoopSide::Left ? s.noncore_loops : 0);
        add_core_block(m, left_start, right_start);
      }
      const int inner = m.max_level;
      add_frame(m, s.above, s.below, s.noncore_loops, s.side, m.left_core_ends, m.right_core_ends, inner);
      for (Int e = 0; e < s.crosscap.nonprimitive_two_sided; ++e) d.extras.push_back({id.index, false});
      if (s.crosscap.includes_core) d.extras.push_back({id.index, true});
      break;
    }
    case RegionKind::DeltaPrimeK: {
      const DeltaPrimeKCensus& e = d.census.delta_prime_k;
      m.crosscap = id.index;
      m.left_core_ends = 2 * e.core_loops;
      if (m.left_core_ends > 0) add_core_block(m, e.noncore_loops, 0);
      const int inner = m.max_level;
      for (Int q = 0; q < e.noncore_loops; ++q) {
        const Int span = 2 * e.noncore_loops + m.left_core_ends;
        m.chords.push_back(loop(m.left_arc, q, span - 1 - q, LoopSide::Right, as_level(inner + e.noncore_loops - q)));
      }
      m.max_level = as_level(inner + e.noncore_loops);
      for (Int q = 0; q < e.crosscap.nonprimitive_two_sided; ++q) d.extras.push_back({id.index, false});
      if (e.crosscap.includes_core) d.extras.push_back({id.index, true});
      break;
    }
    }
    d.regions.push_back(std::move(m));
  }
  return d;
}

std::vector<TracedComponent> trace(const StrandDiagram& diagram) {
  const SurfaceSignature& sig = diagram.sig();
  const auto arcs = static_cast<std::size_t>(sig.beta_count());
  if (diagram.slot_counts.size() != arcs) throw MalformedDiagram("slot table does not match the signature");

  struct Ref {
    int region = -1;
    int chord = -1;
  };
  // side 0: chord from the region left of the arc, side 1: from the right.
  std::vector<std::vector<Ref>> side_ref[2];
  for (auto& table : side_ref) {
    table.resize(arcs);
    for (std::size_t a = 0; a < arcs; ++a) table[a].resize(static_cast<std::size_t>(diagram.slot_counts[a]));
  }

  auto attach = [&](int region, int chord, const SlotRef& s) {
    if (s.arc < 0 || static_cast<std::size_t>(s.arc) >= arcs || s.pos < 0 ||
        s.pos >= diagram.slot_counts[static_cast<std::size_t>(s.arc)]) {
      throw MalformedDiagram("chord endpoint beta_" + std::to_string(s.arc + 1) + " slot " +
                             std::to_string(s.pos + 1) + " does not exist");
    }
    int side = -1;
    if (region == s.arc) side = 0;
    if (region == s.arc + 1) side = 1;
    if (side < 0) {
      throw MalformedDiagram("region " + std::to_string(region) + " does not touch beta_" + std::to_string(s.arc + 1));
    }
    Ref& r = side_ref[side][static_cast<std::size_t>(s.arc)][static_cast<std::size_t>(s.pos)];
    if (r.chord >= 0) {
      throw MalformedDiagram("beta_" + std::to_string(s.arc + 1) + " slot " + std::to_string(s.pos + 1) +
                             " is matched twice");
    }
    r = {region, chord};
  };

  for (std::size_t r = 0; r < diagram.regions.size(); ++r) {
    const auto& chords = diagram.regions[r].chords;
    for (std::size_t c = 0; c < chords.size(); ++c) {
      attach(static_cast<int>(r), static_cast<int>(c), chords[c].from);
      attach(static_cast<int>(r), static_cast<int>(c), chords[c].to);
    }
  }
  for (int side = 0; side < 2; ++side) {
    for (std::size_t a = 0; a < arcs; ++a) {
      for (std::size_t p = 0; p < side_ref[side][a].size(); ++p) {
        if (side_ref[side][a][p].chord < 0) {
          throw MalformedDiagram("beta_" + std::to_string(a + 1) + " slot " + std::to_string(p + 1) +
                                 " is unmatched on the " + (side == 0 ? "left" : "right"));
        }
      }
    }
  }

  std::vector<std::vector<char>> visited(diagram.regions.size());
  for (std::size_t r = 0; r < diagram.regions.size(); ++r) visited[r].assign(diagram.regions[r].chords.size(), 0);

  std::vector<TracedComponent> out;
  for (std::size_t r0 = 0; r0 < diagram.regions.size(); ++r0) {
    for (std::size_t c0 = 0; c0 < diagram.regions[r0].chords.size(); ++c0) {
      if (visited[r0][c0]) continue;
      TracedComponent comp;
      int r = static_cast<int>(r0);
      int c = static_cast<int>(c0);
      bool reversed = false;
      while (!visited[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) {
        visited[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 1;
        const Chord& ch = diagram.regions[static_cast<std::size_t>(r)].chords[static_cast<std::size_t>(c)];
        comp.steps.push_back({r, c, reversed});
        if (ch.transit) comp.core_crossings += 1;
        const SlotRef exit = reversed ? ch.from : ch.to;
        comp.strand_cycle.push_back(exit);
        // Cross the arc into the neighbouring region.
        const int other_side = r == exit.arc ? 1 : 0;
        const Ref next = side_ref[other_side][static_cast<std::size_t>(exit.arc)][static_cast<std::size_t>(exit.pos)];
        const Chord& nch = diagram.regions[static_cast<std::size_t>(next.region)].chords[static_cast<std::size_t>(next.chord)];
        r = next.region;
        c = next.chord;
        reversed = !(nch.from == exit);
      }
      if (r != static_cast<int>(r0) || c != static_cast<int>(c0)) {
        throw MalformedDiagram("strand walk did not close up");
      }
      comp.sidedness = comp.core_crossings % 2 == 1 ? Sidedness::OneSided : Sidedness::TwoSided;
      out.push_back(std::move(comp));
    }
  }
  for (const ExtraCurve& e : diagram.extras) {
    TracedComponent comp;
    comp.extra = e;
    comp.core_crossings = e.one_sided ? 1 : 0;
    comp.sidedness = e.one_sided ? Sidedness::OneSided : Sidedness::TwoSided;
    out.push_back(std::move(comp));
  }
  return out;
}

Int component_count(const TriangleCoords& tau) {
  return static_cast<Int>(trace(build_diagram(tau)).size());
}

} // namespace lamcoord
