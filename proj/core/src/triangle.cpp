#include "lamcoord/triangle.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "lamcoord/dynnikov.hpp"
#include "lamcoord/error.hpp"

namespace lamcoord {

namespace {

std::string join(const std::vector<Int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os.str();
}

void require_length(const char* name, std::size_t got, int want) {
  if (got != static_cast<std::size_t>(want)) {
    throw DomainError(std::string(name) + " has " + std::to_string(got) + " entries, expected " +
                      std::to_string(want));
  }
}

Int abs_int(Int v) { return v < 0 ? -v : v; }

LoopSide side_of(Int b) {
  if (b < 0) return LoopSide::Left;
  if (b > 0) return LoopSide::Right;
  return LoopSide::None;
}

void require_nonneg(const std::string& region, const char* quantity, Int value) {
  if (value < 0) throw InfeasibleCensus(region, quantity, value);
}

// Census formulas without the sign checks; the caller decides what to do
// with negative counts.
SRegionCensus raw_census_s(const TriangleCoords& tau, int i) {
  const Int b = (tau.beta[i - 1] - tau.beta[i]) / 2;
  SRegionCensus out;
  out.loops = abs_int(b);
  out.side = side_of(b);
  out.above = tau.alpha[2 * i - 2] - out.loops;
  out.below = tau.alpha[2 * i - 1] - out.loops;
  return out;
}

SPrimeRegionCensus raw_census_sprime(const TriangleCoords& tau, int i) {
  const int n = tau.sig.punctures();
  const Int left = tau.beta[n + i - 2];
  const Int right = tau.beta[n + i - 1];
  const Int b = (left - right) / 2;
  const Int abs_b = abs_int(b);
  const CoreEncoding enc = decode_core(tau.core[i - 1]);
  const Int c_plus = enc.c_plus;

  SPrimeRegionCensus out;
  out.crosscap = enc;
  out.side = side_of(b);
  out.noncore_loops = std::max<Int>(abs_b - c_plus, 0);
  out.core_loops = std::min(abs_b, c_plus);
  out.straight_cores = std::max<Int>(c_plus - abs_b, 0);
  out.above = tau.gamma[i - 1] / 2 - abs_b - out.straight_cores;
  out.below = std::max(left, right) - abs_b - tau.gamma[i - 1] / 2;
  return out;
}

DeltaPrimeKCensus raw_census_last(const TriangleCoords& tau) {
  const Int half = tau.beta.back() / 2;
  DeltaPrimeKCensus out;
  out.crosscap = decode_core(tau.core.back());
  const Int c_plus = out.crosscap.c_plus;
  out.core_loops = std::min(c_plus, half);
  out.noncore_loops = std::max<Int>(half - c_plus, 0);
  out.surplus_core = std::max<Int>(c_plus - half, 0);
  return out;
}

// Outermost strands in every S/S' region together with a core loop at the
// k-th crosscap are R-components; with a non-core loop there they would be
// boundary-parallel curves instead.
Int count_r_components(const RegionCensus& census) {
  if (census.delta_prime_k.noncore_loops > 0 || census.delta_prime_k.core_loops == 0) return 0;
  Int r = -1;
  for (const auto& s : census.s) r = r < 0 ? std::min(s.above, s.below) : std::min({r, s.above, s.below});
  for (const auto& s : census.sprime) r = r < 0 ? std::min(s.above, s.below) : std::min({r, s.above, s.below});
  return std::max<Int>(r, 0);
}

} // namespace

TriangleCoords make_triangle(const SurfaceSignature& sig, std::vector<Int> alpha, std::vector<Int> beta,
                             std::vector<Int> gamma, std::vector<Int> core) {
  require_length("alpha", alpha.size(), sig.alpha_count());
  require_length("beta", beta.size(), sig.beta_count());
  require_length("gamma", gamma.size(), sig.gamma_count());
  require_length("c", core.size(), sig.core_count());
  return TriangleCoords{sig, std::move(alpha), std::move(beta), std::move(gamma), std::move(core)};
}

std::string to_string(const TriangleCoords& tau) {
  return "(" + join(tau.alpha) + "; " + join(tau.beta) + "; " + join(tau.gamma) + "; " + join(tau.core) + ")";
}

CoreEncoding decode_core(Int c) {
  if (c >= 0) return {0, false, c};
  const Int m = -c;
  return {m / 2, m % 2 == 1, 0};
}

Int encode_core(const CoreEncoding& enc) {
  if (enc.nonprimitive_two_sided > 0 || enc.includes_core) {
    return -2 * enc.nonprimitive_two_sided - (enc.includes_core ? 1 : 0);
  }
  return enc.c_plus;
}

std::string to_string(LoopSide side) {
  switch (side) {
  case LoopSide::None: return "none";
  case LoopSide::Left: return "left";
  case LoopSide::Right: return "right";
  }
  return "?";
}

std::vector<Int> derive_b(const TriangleCoords& tau) {
  std::vector<Int> b(tau.beta.size() - 1);
  for (std::size_t i = 0; i + 1 < tau.beta.size(); ++i) b[i] = (tau.beta[i] - tau.beta[i + 1]) / 2;
  return b;
}

SRegionCensus census_s(const TriangleCoords& tau, int i) {
  if (i < 1 || i > tau.sig.s_region_count()) {
    throw DomainError("S region index " + std::to_string(i) + " out of range 1.." +
                      std::to_string(tau.sig.s_region_count()));
  }
  SRegionCensus out = raw_census_s(tau, i);
  const std::string where = "S_" + std::to_string(i);
  require_nonneg(where, "above", out.above);
  require_nonneg(where, "below", out.below);
  return out;
}

SPrimeRegionCensus census_sprime(const TriangleCoords& tau, int i) {
  if (i < 1 || i > tau.sig.sprime_region_count()) {
    throw DomainError("S' region index " + std::to_string(i) + " out of range 1.." +
                      std::to_string(tau.sig.sprime_region_count()));
  }
  SPrimeRegionCensus out = raw_census_sprime(tau, i);
  const std::string where = "S'_" + std::to_string(i);
  require_nonneg(where, "above", out.above);
  require_nonneg(where, "below", out.below);
  return out;
}

EndCensus census_ends(const TriangleCoords& tau) {
  EndCensus out;
  out.delta_zero.left_loops = tau.beta.front() / 2;
  out.delta_prime_k = raw_census_last(tau);
  return out;
}

RegionCensus census(const TriangleCoords& tau) {
  RegionCensus out;
  for (int i = 1; i <= tau.sig.s_region_count(); ++i) out.s.push_back(census_s(tau, i));
  for (int i = 1; i <= tau.sig.sprime_region_count(); ++i) out.sprime.push_back(census_sprime(tau, i));
  const EndCensus ends = census_ends(tau);
  out.delta_zero = ends.delta_zero;
  out.delta_prime_k = ends.delta_prime_k;
  if (out.delta_prime_k.surplus_core > 0) {
    throw InfeasibleCensus("Delta'_" + std::to_string(tau.sig.genus()), "beta/2 - c^+",
                           -out.delta_prime_k.surplus_core);
  }
  out.r_components = count_r_components(out);
  return out;
}

std::string code(ViolationKind kind) {
  switch (kind) {
  case ViolationKind::AllZero: return "all-zero";
  case ViolationKind::Negative: return "negative";
  case ViolationKind::BetaParity: return "beta-parity";
  case ViolationKind::GammaParity: return "gamma-parity";
  case ViolationKind::AlphaPairParity: return "alpha-pair-parity";
  case ViolationKind::SEquality: return "s-equality";
  case ViolationKind::SInfeasible: return "s-infeasible";
  case ViolationKind::SPrimeInfeasible: return "sprime-infeasible";
  case ViolationKind::EndInfeasible: return "end-infeasible";
  case ViolationKind::Fixpoint: return "fixpoint";
  }
  return "?";
}

bool ValidityReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(), [kind](const Violation& v) { return v.kind == kind; });
}

std::string ValidityReport::to_string() const {
  if (valid()) return "valid";
  std::ostringstream os;
  os << "invalid (" << violations.size() << " violation" << (violations.size() == 1 ? "" : "s") << ")";
  for (const auto& v : violations) os << "\n  [" << code(v.kind) << "] " << v.where << ": " << v.message;
  return os.str();
}

ValidityReport validate(const TriangleCoords& tau) {
  ValidityReport report;
  auto add = [&](ViolationKind kind, std::string where, std::string message) {
    report.violations.push_back({kind, std::move(where), std::move(message)});
  };
  const SurfaceSignature& sig = tau.sig;
  const int n = sig.punctures();
  const int k = sig.genus();

  const auto all_zero = [](const std::vector<Int>& v) {
    return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
  };
  if (all_zero(tau.alpha) && all_zero(tau.beta) && all_zero(tau.gamma) && all_zero(tau.core)) {
    add(ViolationKind::AllZero, "tau", "the empty lamination has no coordinates");
    return report;
  }

  bool signs_ok = true;
  auto check_sign = [&](const std::vector<Int>& v, const char* name) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0) {
        signs_ok = false;
        add(ViolationKind::Negative, std::string(name) + "_" + std::to_string(i + 1),
            "intersection count " + std::to_string(v[i]) + " is negative");
      }
    }
  };
  check_sign(tau.alpha, "alpha");
  check_sign(tau.beta, "beta");
  check_sign(tau.gamma, "gamma");

  bool parity_ok = true;
  for (std::size_t i = 0; i < tau.beta.size(); ++i) {
    if (tau.beta[i] % 2 != 0) {
      parity_ok = false;
      add(ViolationKind::BetaParity, "beta_" + std::to_string(i + 1),
          std::to_string(tau.beta[i]) + " is odd; every curve crosses a beta arc an even number of times");
    }
  }
  for (std::size_t i = 0; i < tau.gamma.size(); ++i) {
    if (tau.gamma[i] % 2 != 0) {
      parity_ok = false;
      add(ViolationKind::GammaParity, "gamma_" + std::to_string(i + 1),
          std::to_string(tau.gamma[i]) + " is odd; path components cross gamma arcs in pairs");
    }
  }
  for (int i = 1; i <= sig.s_region_count(); ++i) {
    if ((tau.alpha[2 * i - 2] + tau.alpha[2 * i - 1]) % 2 != 0) {
      parity_ok = false;
      add(ViolationKind::AlphaPairParity, "S_" + std::to_string(i),
          "alpha_" + std::to_string(2 * i - 1) + " + alpha_" + std::to_string(2 * i) + " is odd");
    }
  }
  if (!signs_ok || !parity_ok) return report;

  for (int i = 1; i <= sig.s_region_count(); ++i) {
    const std::string where = "S_" + std::to_string(i);
    const Int sum = tau.alpha[2 * i - 2] + tau.alpha[2 * i - 1];
    const Int widest = std::max(tau.beta[i - 1], tau.beta[i]);
    if (sum != widest) {
      add(ViolationKind::SEquality, where,
          "alpha_" + std::to_string(2 * i - 1) + " + alpha_" + std::to_string(2 * i) + " = " + std::to_string(sum) +
              " but max(beta_" + std::to_string(i) + ", beta_" + std::to_string(i + 1) + ") = " +
              std::to_string(widest));
    }
    const SRegionCensus s = raw_census_s(tau, i);
    if (s.above < 0 || s.below < 0) {
      add(ViolationKind::SInfeasible, where,
          "above = " + std::to_string(s.above) + ", below = " + std::to_string(s.below));
    }
  }
  for (int i = 1; i <= sig.sprime_region_count(); ++i) {
    const SPrimeRegionCensus s = raw_census_sprime(tau, i);
    if (s.above < 0 || s.below < 0) {
      add(ViolationKind::SPrimeInfeasible, "S'_" + std::to_string(i),
          "above = " + std::to_string(s.above) + ", below = " + std::to_string(s.below));
    }
  }
  const DeltaPrimeKCensus last = raw_census_last(tau);
  if (last.surplus_core > 0) {
    add(ViolationKind::EndInfeasible, "Delta'_" + std::to_string(k),
        "c_" + std::to_string(k) + " = " + std::to_string(tau.core.back()) + " needs " +
            std::to_string(2 * decode_core(tau.core.back()).c_plus) + " strands on beta_" +
            std::to_string(n + k - 1) + " but it carries " + std::to_string(tau.beta.back()));
  }

  // The remaining realizability conditions (no boundary-parallel curve, the
  // overall shape of the outermost strands) are exactly the statement that
  // decoding the encoded tuple gives back tau.
  const DynnikovCoords rho = detail::encode_unchecked(tau);
  const DecodeOutcome back = try_decode(rho);
  if (!back.result) {
    add(ViolationKind::Fixpoint, "tau", "encoded tuple does not decode: " + describe(back.failure, back.failing_index));
  } else if (!(back.result->tau == tau)) {
    add(ViolationKind::Fixpoint, "tau",
        "decode(encode(tau)) = " + to_string(back.result->tau) + " differs from tau " + to_string(tau) +
            " (tau carries a boundary-parallel curve or is otherwise not taut)");
  }
  return report;
}

} // namespace lamcoord
