#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lamcoord {

using Int = std::int64_t;

// N_{k,n}: k crosscaps, n punctures, one boundary component.
//
// Arc indices are 1-based in names and messages (beta_1 ... beta_{n+k-1});
// containers holding per-arc data are 0-based.
class SurfaceSignature {
public:
  int genus() const { return k_; }
  int punctures() const { return n_; }

  int alpha_count() const { return 2 * n_ - 2; }
  int beta_count() const { return n_ + k_ - 1; }
  int gamma_count() const { return k_ - 1; }
  int core_count() const { return k_; }
  int s_region_count() const { return n_ - 1; }
  int sprime_region_count() const { return k_ - 1; }

  // Length of the Dynnikov tuple (a; b; t; c).
  int dynnikov_length() const { return 2 * (n_ + k_ - 2) + k_; }

  std::string name() const;

  friend bool operator==(const SurfaceSignature&, const SurfaceSignature&) = default;

private:
  SurfaceSignature(int k, int n) : k_(k), n_(n) {}
  friend SurfaceSignature signature(int k, int n);

  int k_;
  int n_;
};

// Throws DomainError for k < 1, n < 1 or n + k < 3.
SurfaceSignature signature(int k, int n);

enum class RegionKind { DeltaZero, S, SPrime, DeltaPrimeK };

struct RegionId {
  RegionKind kind;
  int index; // 1-based for S and SPrime, k for DeltaPrimeK, 0 for DeltaZero

  friend bool operator==(const RegionId&, const RegionId&) = default;
};

// Left-to-right: Delta_0, S_1..S_{n-1}, S'_1..S'_{k-1}, Delta'_k.
std::vector<RegionId> regions(const SurfaceSignature& sig);

// Position of a region in the regions() list. Region r sits between
// beta arcs r-1 and r (0-based), so arc i has region i on its left and
// region i+1 on its right.
int region_ordinal(const SurfaceSignature& sig, const RegionId& region);

// 0-based beta index of the region's left/right arc; -1 when absent.
int left_arc(const SurfaceSignature& sig, const RegionId& region);
int right_arc(const SurfaceSignature& sig, const RegionId& region);

std::string to_string(const RegionId& region);

} // namespace lamcoord
