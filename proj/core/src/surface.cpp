#include "lamcoord/surface.hpp"

#include "lamcoord/error.hpp"

namespace lamcoord {

InfeasibleCensus::InfeasibleCensus(std::string region, std::string quantity, long long value)
    : DomainError(region + ": " + quantity + " = " + std::to_string(value) + " is negative"),
      region_(std::move(region)), quantity_(std::move(quantity)), value_(value) {}

std::string SurfaceSignature::name() const {
  return "N_{" + std::to_string(k_) + "," + std::to_string(n_) + "}";
}

SurfaceSignature signature(int k, int n) {
  if (k < 1) throw DomainError("genus k must be >= 1 (got " + std::to_string(k) + ")");
  if (n < 1) throw DomainError("puncture count n must be >= 1 (got " + std::to_string(n) + ")");
  if (n + k < 3) {
    throw DomainError("n + k must be >= 3 (got N_{" + std::to_string(k) + "," + std::to_string(n) +
                      "}, whose coordinates are undefined)");
  }
  return SurfaceSignature(k, n);
}

std::vector<RegionId> regions(const SurfaceSignature& sig) {
  std::vector<RegionId> out;
  out.reserve(static_cast<std::size_t>(sig.punctures() + sig.genus()));
  out.push_back({RegionKind::DeltaZero, 0});
  for (int i = 1; i <= sig.s_region_count(); ++i) out.push_back({RegionKind::S, i});
  for (int i = 1; i <= sig.sprime_region_count(); ++i) out.push_back({RegionKind::SPrime, i});
  out.push_back({RegionKind::DeltaPrimeK, sig.genus()});
  return out;
}

int region_ordinal(const SurfaceSignature& sig, const RegionId& region) {
  switch (region.kind) {
  case RegionKind::DeltaZero: return 0;
  case RegionKind::S: return region.index;
  case RegionKind::SPrime: return sig.punctures() - 1 + region.index;
  case RegionKind::DeltaPrimeK: return sig.punctures() + sig.genus() - 1;
  }
  return -1;
}

int left_arc(const SurfaceSignature& sig, const RegionId& region) {
  return region.kind == RegionKind::DeltaZero ? -1 : region_ordinal(sig, region) - 1;
}

int right_arc(const SurfaceSignature& sig, const RegionId& region) {
  return region.kind == RegionKind::DeltaPrimeK ? -1 : region_ordinal(sig, region);
}

std::string to_string(const RegionId& region) {
  switch (region.kind) {
  case RegionKind::DeltaZero: return "Delta_0";
  case RegionKind::S: return "S_" + std::to_string(region.index);
  case RegionKind::SPrime: return "S'_" + std::to_string(region.index);
  case RegionKind::DeltaPrimeK: return "Delta'_" + std::to_string(region.index);
  }
  return "?";
}

} // namespace lamcoord
