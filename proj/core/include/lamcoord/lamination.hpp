#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lamcoord/error.hpp"
#include "lamcoord/surface.hpp"
#include "lamcoord/triangle.hpp"

namespace lamcoord {

// One endpoint slot of the lamination on a beta arc. Both fields are
// 0-based: arc 0 is beta_1, position 0 is the slot nearest the top of the
// boundary.
struct SlotRef {
  int arc = 0;
  Int pos = 0;

  friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

enum class ChordKind { Above, Below, Loop, CoreLoop, StraightCore };

std::string to_string(ChordKind kind);

// Passage through a crosscap. Points on the crosscap circle are numbered
// counterclockwise, 0 .. 2c-1, starting with the top end of the left
// block; point p is identified with point p + c.
struct Transit {
  int crosscap = 0; // 1-based
  Int entry = 0;
  Int exit = 0;

  friend bool operator==(const Transit&, const Transit&) = default;
};

// A path component of the lamination inside one region, joining two slots.
// Levels are nesting ranks around the region's puncture or crosscap
// (1 = innermost). A chord through a crosscap is two half strands with
// their own levels; every other chord has from_level == to_level.
struct Chord {
  SlotRef from;
  SlotRef to;
  ChordKind kind = ChordKind::Above;
  LoopSide side = LoopSide::None;
  int from_level = 0;
  int to_level = 0;
  std::optional<Transit> transit;
};

struct RegionMatching {
  RegionId region;
  int left_arc = -1;  // 0-based, -1 for Delta_0
  int right_arc = -1; // 0-based, -1 for Delta'_k
  int crosscap = 0;   // 1-based crosscap inside the region, 0 for punctures
  Int left_core_ends = 0;  // half strands from the left arc into the crosscap
  Int right_core_ends = 0; // half strands from the right arc into the crosscap
  int max_level = 0;
  std::vector<Chord> chords;

  Int core_points() const { return left_core_ends + right_core_ends; }
};

// A non-primitive curve. It misses every arc, so it carries no slots.
struct ExtraCurve {
  int crosscap = 0; // 1-based
  bool one_sided = false;

  friend bool operator==(const ExtraCurve&, const ExtraCurve&) = default;
};

struct StrandDiagram {
  TriangleCoords tau;
  RegionCensus census;
  std::vector<Int> slot_counts;        // equals tau.beta
  std::vector<RegionMatching> regions; // same order as regions(sig)
  std::vector<ExtraCurve> extras;
  Int r_components = 0;

  const SurfaceSignature& sig() const { return tau.sig; }
};

// Upper bound on the total number of slots build_diagram will allocate.
inline constexpr Int kDefaultMaxSlots = Int{1} << 24;

// Canonical planar realization of a valid tau. Throws InvalidTriangleCoords
// (see dynnikov.hpp) for an invalid tau, DomainError when the diagram would
// exceed max_slots.
StrandDiagram build_diagram(const TriangleCoords& tau, Int max_slots = kDefaultMaxSlots);

enum class Sidedness { OneSided, TwoSided };

std::string to_string(Sidedness s);

// Position of a chord in a diagram, with the direction it was walked.
struct TraceStep {
  int region = 0;
  int chord = 0;
  bool reversed = false;
};

struct TracedComponent {
  std::vector<TraceStep> steps;
  std::vector<SlotRef> strand_cycle;
  Int core_crossings = 0;
  Sidedness sidedness = Sidedness::TwoSided;
  std::optional<ExtraCurve> extra;
};

class MalformedDiagram : public DomainError {
public:
  using DomainError::DomainError;
};

// Connected components: closed strand cycles first (in order of their first
// chord), then the extra curves. Throws MalformedDiagram when a slot is
// matched twice from the same side or left unmatched.
std::vector<TracedComponent> trace(const StrandDiagram& diagram);

Int component_count(const TriangleCoords& tau);

} // namespace lamcoord
