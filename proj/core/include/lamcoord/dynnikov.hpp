#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lamcoord/error.hpp"
#include "lamcoord/surface.hpp"
#include "lamcoord/triangle.hpp"

namespace lamcoord {

// Generalized Dynnikov coordinates (a_1..a_{n-1}; b_1..b_{n+k-2}; t_1..t_{k-1}; c_1..c_k).
struct DynnikovCoords {
  SurfaceSignature sig;
  std::vector<Int> a;
  std::vector<Int> b;
  std::vector<Int> t;
  std::vector<Int> core;

  bool is_zero() const;

  friend bool operator==(const DynnikovCoords&, const DynnikovCoords&) = default;
};

// Checks the array lengths against the signature (DomainError otherwise).
DynnikovCoords make_dynnikov(const SurfaceSignature& sig, std::vector<Int> a, std::vector<Int> b,
                             std::vector<Int> t, std::vector<Int> core);

// Concatenation a ++ b ++ t ++ c, and back.
std::vector<Int> flatten(const DynnikovCoords& rho);
DynnikovCoords unflatten(const SurfaceSignature& sig, const std::vector<Int>& values);

std::string to_string(const DynnikovCoords& rho);

// Everything the inverse computes on the way to tau.
struct InverseIntermediates {
  std::vector<Int> psi;         // psi_1..psi_{k-1}
  std::optional<Int> x;         // absent when n = 1
  std::optional<Int> y;         // absent when k = 1
  std::vector<Int> beta_star;   // beta with the R-components removed
  Int r = 0;                    // number of R-components
  std::vector<Int> a_sprime;    // above components in S'_1..S'_{k-1}
  std::vector<Int> b_sprime;    // below components in S'_1..S'_{k-1}
};

struct DecodeResult {
  TriangleCoords tau;
  InverseIntermediates intermediates;
};

// Raised by encode() for a tau that fails validate().
class InvalidTriangleCoords : public DomainError {
public:
  explicit InvalidTriangleCoords(ValidityReport report);
  const ValidityReport& report() const { return report_; }

private:
  ValidityReport report_;
};

// rho = (a; b; t; c). Throws InvalidTriangleCoords unless validate(tau) passes.
DynnikovCoords encode(const TriangleCoords& tau);

// psi_s = max(c_s^+ - |b_{n+s-1}|, 0), 1-based s.
Int psi_from_dynnikov(const DynnikovCoords& rho, int s);

struct XY {
  std::optional<Int> x;
  std::optional<Int> y;
};

XY compute_xy(const DynnikovCoords& rho);

// R = max(0, 2 c_k - beta*_{n+k-1}) / 2. Requires even beta*.
Int r_count(Int beta_star_last, Int c_k);

enum class DecodeFailure {
  None,
  ZeroTuple,
  // Some t_s and psi_s differ in parity. Every realizable tuple has
  // t_s = psi_s (mod 2), so no integral lamination maps to this one.
  ParityObstruction,
};

struct DecodeOutcome {
  std::optional<DecodeResult> result;
  DecodeFailure failure = DecodeFailure::None;
  int failing_index = 0; // 1-based s for ParityObstruction
};

// Non-throwing inverse; the failure field says why result is empty.
DecodeOutcome try_decode(const DynnikovCoords& rho);

// Inverse of encode. Throws DomainError on the zero tuple or a parity
// obstruction.
DecodeResult decode(const DynnikovCoords& rho);

std::string describe(DecodeFailure failure, int index);

namespace detail {

// The encode formulas without validation. Needs even alpha pairs and beta;
// gamma may be odd, in which case the result is meaningless but defined.
DynnikovCoords encode_unchecked(const TriangleCoords& tau);

} // namespace detail

} // namespace lamcoord
