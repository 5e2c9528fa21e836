#pragma once

#include <string>
#include <vector>

#include "lamcoord/surface.hpp"

namespace lamcoord {

// Intersection numbers of a taut lamination with the arc system:
// (alpha_1..alpha_{2n-2}; beta_1..beta_{n+k-1}; gamma_1..gamma_{k-1}; c_1..c_k).
// The core entries are signed: c_i < 0 encodes non-primitive curves at
// crosscap i (see CoreEncoding).
struct TriangleCoords {
  SurfaceSignature sig;
  std::vector<Int> alpha;
  std::vector<Int> beta;
  std::vector<Int> gamma;
  std::vector<Int> core;

  friend bool operator==(const TriangleCoords&, const TriangleCoords&) = default;
};

// Checks the four array lengths against the signature (DomainError otherwise).
// No other condition is checked; see validate().
TriangleCoords make_triangle(const SurfaceSignature& sig, std::vector<Int> alpha, std::vector<Int> beta,
                             std::vector<Int> gamma, std::vector<Int> core);

std::string to_string(const TriangleCoords& tau);

// Decoded form of a single signed core entry c_i.
//   c >= 0      -> (0, false, c)
//   c == -2m    -> (m, false, 0)
//   c == -2m-1  -> (m, true, 0)
struct CoreEncoding {
  Int nonprimitive_two_sided = 0;
  bool includes_core = false;
  Int c_plus = 0;

  friend bool operator==(const CoreEncoding&, const CoreEncoding&) = default;
};

CoreEncoding decode_core(Int c);
Int encode_core(const CoreEncoding& enc);

enum class LoopSide { None, Left, Right };

std::string to_string(LoopSide side);

// Path components of one S_i. A left loop has both ends on beta_{i+1},
// a right loop both ends on beta_i.
struct SRegionCensus {
  Int above = 0;
  Int below = 0;
  Int loops = 0;
  LoopSide side = LoopSide::None;

  friend bool operator==(const SRegionCensus&, const SRegionCensus&) = default;
};

// Path components of one S'_i, plus the non-primitive curves at crosscap i.
struct SPrimeRegionCensus {
  Int above = 0;
  Int below = 0;
  Int noncore_loops = 0;  // lambda_i
  Int core_loops = 0;     // lambda_{c_i}
  Int straight_cores = 0; // psi_i
  LoopSide side = LoopSide::None;
  CoreEncoding crosscap;

  Int loops() const { return noncore_loops + core_loops; }

  friend bool operator==(const SPrimeRegionCensus&, const SPrimeRegionCensus&) = default;
};

struct DeltaZeroCensus {
  Int left_loops = 0;

  friend bool operator==(const DeltaZeroCensus&, const DeltaZeroCensus&) = default;
};

struct DeltaPrimeKCensus {
  Int core_loops = 0;
  Int noncore_loops = 0; // lambda_k
  // c_k^+ - beta_{n+k-1}/2 when positive: core crossings with no room on
  // the last beta arc. Always 0 for a valid tau.
  Int surplus_core = 0;
  CoreEncoding crosscap;

  friend bool operator==(const DeltaPrimeKCensus&, const DeltaPrimeKCensus&) = default;
};

struct EndCensus {
  DeltaZeroCensus delta_zero;
  DeltaPrimeKCensus delta_prime_k;
};

struct RegionCensus {
  std::vector<SRegionCensus> s;           // S_1 .. S_{n-1}
  std::vector<SPrimeRegionCensus> sprime; // S'_1 .. S'_{k-1}
  DeltaZeroCensus delta_zero;
  DeltaPrimeKCensus delta_prime_k;
  // Components ending on the k-th crosscap that cross every alpha once and
  // every beta and gamma twice.
  Int r_components = 0;

  friend bool operator==(const RegionCensus&, const RegionCensus&) = default;
};

// b_i = (beta_i - beta_{i+1}) / 2 for 1 <= i <= n+k-2. Requires even beta.
std::vector<Int> derive_b(const TriangleCoords& tau);

// Census of S_i (1-based i). Throws InfeasibleCensus on a negative count.
SRegionCensus census_s(const TriangleCoords& tau, int i);

// Census of S'_i (1-based i). Throws InfeasibleCensus on a negative count.
SPrimeRegionCensus census_sprime(const TriangleCoords& tau, int i);

EndCensus census_ends(const TriangleCoords& tau);

// Every region at once, plus the R-component count. Throws InfeasibleCensus.
RegionCensus census(const TriangleCoords& tau);

enum class ViolationKind {
  AllZero,
  Negative,
  BetaParity,
  GammaParity,
  AlphaPairParity,
  SEquality,
  SInfeasible,
  SPrimeInfeasible,
  EndInfeasible,
  Fixpoint,
};

// Stable kebab-case identifier, e.g. "beta-parity".
std::string code(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string where;
  std::string message;
};

struct ValidityReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
  std::string to_string() const;
};

// Lists every violated realizability condition. Valid iff the list is empty.
ValidityReport validate(const TriangleCoords& tau);

} // namespace lamcoord
