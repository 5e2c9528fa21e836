#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lamcoord/dynnikov.hpp"
#include "lamcoord/error.hpp"
#include "lamcoord/lamination.hpp"
#include "lamcoord/surface.hpp"
#include "lamcoord/triangle.hpp"

namespace lamcoord::oracle {

inline constexpr Int kDefaultWorkCeiling = 10'000'000;

// LAMCOORD_WORK_CEILING when set to a positive integer, else `fallback`.
Int work_ceiling_from_env(Int fallback = kDefaultWorkCeiling);

struct EnumerationBudget {
  SurfaceSignature sig;
  Int box_radius = 0;
  // Every beta entry of an enumerated configuration is at most this.
  Int max_strands = 0;
  Int work_ceiling = kDefaultWorkCeiling;
};

class BudgetExceeded : public DomainError {
public:
  using DomainError::DomainError;
};

// Smallest negative core entry the census window admits for a strand bound.
Int core_floor(Int max_strands);

// A product of integer ranges over the Dynnikov tuple (a; b; t; c), minus
// the zero tuple. Visits tuples in lexicographic order of the flattened
// tuple.
class DynnikovBox {
public:
  DynnikovBox(SurfaceSignature sig, std::vector<std::pair<Int, Int>> ranges);

  // Every coordinate in [-radius, radius].
  static DynnikovBox cube(const SurfaceSignature& sig, Int radius);

  // The Dynnikov window that contains every decode of a tau with all beta
  // entries <= max_strands and core entries >= core_floor(max_strands).
  static DynnikovBox induced(const SurfaceSignature& sig, Int max_strands);

  const SurfaceSignature& sig() const { return sig_; }
  const std::vector<std::pair<Int, Int>>& ranges() const { return ranges_; }

  // Number of nonzero tuples; saturates at INT64_MAX.
  Int size() const;

  void for_each(const std::function<void(const DynnikovCoords&)>& visit) const;

private:
  SurfaceSignature sig_;
  std::vector<std::pair<Int, Int>> ranges_;
};

DynnikovBox enumerate_dynnikov_box(const EnumerationBudget& budget);

// A lamination assembled region by region from path components, with the
// census it was built from.
struct CensusConfiguration {
  TriangleCoords tau;
  RegionCensus census;
};

// All configurations with every beta <= max_strands and core entries >=
// core_floor(max_strands), minus those carrying a boundary-parallel curve.
// Built from slot conservation alone; never calls decode or the census
// formulas. Throws BudgetExceeded past the work ceiling.
std::vector<CensusConfiguration> enumerate_census_configurations(const EnumerationBudget& budget);

// True when some t_s and psi_s differ in parity.
bool parity_obstructed(const DynnikovCoords& rho);

struct Counterexample {
  std::string check;
  std::string detail;
};

struct OracleReport {
  SurfaceSignature sig;
  Int box_radius = 0;
  Int max_strands = 0;

  Int box_tuples = 0;      // nonzero tuples visited
  Int out_of_image = 0;    // refused by decode for a parity obstruction
  Int round_trips = 0;     // encode(decode(rho)) == rho
  Int configurations = 0;  // census configurations enumerated
  Int distinct_images = 0; // distinct encode() images of those
  Int decoded_in_window = 0;

  Int failure_count = 0;
  std::vector<Counterexample> first_failures{}; // first failure per check

  bool passed() const { return failure_count == 0; }
  std::string to_string() const;
};

using DecodeFn = std::function<DecodeOutcome(const DynnikovCoords&)>;

// (i) encode(decode(rho)) == rho on the cube of the given radius,
// (ii) decode(encode(tau)) == tau on the census enumeration,
// (iii) encode is injective there, (iv) each decoded tau is valid and, when
// inside the strand window, appears in the enumeration.
OracleReport check_bijection(const EnumerationBudget& budget, const DecodeFn& decode_fn = try_decode);

struct EquivalenceReport {
  SurfaceSignature sig;
  Int max_strands = 0;
  Int enumerated = 0;         // census configurations
  Int enumerated_distinct = 0;
  Int decoded = 0;            // distinct decodes inside the window
  Int only_enumerated = 0;
  Int only_decoded = 0;
  Int encode_collisions = 0;
  Int census_mismatches = 0; // enumerated census != census(tau)
  std::vector<Counterexample> examples{};

  bool passed() const {
    return enumerated_distinct == enumerated && only_enumerated == 0 && only_decoded == 0 &&
           encode_collisions == 0 && census_mismatches == 0;
  }
  std::string to_string() const;
};

// Census enumeration versus decode over DynnikovBox::induced.
EquivalenceReport check_census_equivalence(const SurfaceSignature& sig, Int max_strands,
                                           Int work_ceiling = kDefaultWorkCeiling);

// Component fingerprint: beta slots on the component, crosscap transits,
// sidedness.
struct ComponentKey {
  Int slots = 0;
  Int core_crossings = 0;
  bool one_sided = false;

  friend auto operator<=>(const ComponentKey&, const ComponentKey&) = default;
};

// Sorted keys of a traced diagram.
std::vector<ComponentKey> component_multiset(const std::vector<TracedComponent>& components);

// Rebuilds the lamination from a census with its own gluing code: random
// slot labels and heights, crosscap points paired by sorted angle after a
// random rotation, union-find over slots. Returns sorted keys.
std::vector<ComponentKey> independent_trace(const SurfaceSignature& sig, const RegionCensus& census,
                                            std::uint64_t seed);

} // namespace lamcoord::oracle
