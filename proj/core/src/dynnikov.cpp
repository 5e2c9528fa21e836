#include "lamcoord/dynnikov.hpp"

#include <algorithm>
#include <sstream>

namespace lamcoord {

namespace {

Int abs_int(Int v) { return v < 0 ? -v : v; }
Int plus(Int v) { return v > 0 ? v : 0; }

// Exact halving; an odd argument means a coordinate bug upstream.
Int half_exact(Int v, const char* what) {
  if (v % 2 != 0) throw DomainError(std::string("internal parity error: ") + what + " = " + std::to_string(v) + " is odd");
  return v / 2;
}

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

} // namespace

bool DynnikovCoords::is_zero() const {
  const auto zero = [](const std::vector<Int>& v) { return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; }); };
  return zero(a) && zero(b) && zero(t) && zero(core);
}

DynnikovCoords make_dynnikov(const SurfaceSignature& sig, std::vector<Int> a, std::vector<Int> b,
                             std::vector<Int> t, std::vector<Int> core) {
  require_length("a", a.size(), sig.punctures() - 1);
  require_length("b", b.size(), sig.punctures() + sig.genus() - 2);
  require_length("t", t.size(), sig.genus() - 1);
  require_length("c", core.size(), sig.genus());
  return DynnikovCoords{sig, std::move(a), std::move(b), std::move(t), std::move(core)};
}

std::vector<Int> flatten(const DynnikovCoords& rho) {
  std::vector<Int> out;
  out.reserve(rho.a.size() + rho.b.size() + rho.t.size() + rho.core.size());
  out.insert(out.end(), rho.a.begin(), rho.a.end());
  out.insert(out.end(), rho.b.begin(), rho.b.end());
  out.insert(out.end(), rho.t.begin(), rho.t.end());
  out.insert(out.end(), rho.core.begin(), rho.core.end());
  return out;
}

DynnikovCoords unflatten(const SurfaceSignature& sig, const std::vector<Int>& values) {
  require_length("tuple", values.size(), sig.dynnikov_length());
  const auto n = static_cast<std::size_t>(sig.punctures());
  const auto k = static_cast<std::size_t>(sig.genus());
  auto it = values.begin();
  auto take = [&it](std::size_t count) {
    std::vector<Int> out(it, it + static_cast<std::ptrdiff_t>(count));
    it += static_cast<std::ptrdiff_t>(count);
    return out;
  };
  std::vector<Int> a = take(n - 1);
  std::vector<Int> b = take(n + k - 2);
  std::vector<Int> t = take(k - 1);
  std::vector<Int> c = take(k);
  return DynnikovCoords{sig, std::move(a), std::move(b), std::move(t), std::move(c)};
}

std::string to_string(const DynnikovCoords& rho) {
  return "(" + join(rho.a) + "; " + join(rho.b) + "; " + join(rho.t) + "; " + join(rho.core) + ")";
}

InvalidTriangleCoords::InvalidTriangleCoords(ValidityReport report)
    : DomainError("invalid triangle coordinates: " + report.to_string()), report_(std::move(report)) {}

namespace detail {

DynnikovCoords encode_unchecked(const TriangleCoords& tau) {
  const SurfaceSignature& sig = tau.sig;
  const int n = sig.punctures();
  const int k = sig.genus();
  DynnikovCoords rho{sig, {}, {}, {}, tau.core};
  rho.a.resize(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n - 1; ++i) {
    rho.a[i - 1] = half_exact(tau.alpha[2 * i - 1] - tau.alpha[2 * i - 2], "alpha_{2i} - alpha_{2i-1}");
  }
  rho.b.resize(static_cast<std::size_t>(n + k - 2));
  for (int i = 1; i <= n + k - 2; ++i) rho.b[i - 1] = half_exact(tau.beta[i - 1] - tau.beta[i], "beta_i - beta_{i+1}");
  rho.t.resize(static_cast<std::size_t>(k - 1));
  for (int i = 1; i <= k - 1; ++i) {
    const Int left = tau.beta[n + i - 2];
    const Int right = tau.beta[n + i - 1];
    const Int abs_b = abs_int(rho.b[n + i - 2]);
    const Int psi = plus(plus(tau.core[i - 1]) - abs_b);
    const Int half_gamma = tau.gamma[i - 1] / 2;
    const Int above = half_gamma - abs_b - psi;
    const Int below = std::max(left, right) - abs_b - half_gamma;
    rho.t[i - 1] = above - below;
  }
  return rho;
}

} // namespace detail

DynnikovCoords encode(const TriangleCoords& tau) {
  ValidityReport report = validate(tau);
  if (!report.valid()) throw InvalidTriangleCoords(std::move(report));
  return detail::encode_unchecked(tau);
}

Int psi_from_dynnikov(const DynnikovCoords& rho, int s) {
  const int n = rho.sig.punctures();
  if (s < 1 || s > rho.sig.genus() - 1) {
    throw DomainError("crosscap index s = " + std::to_string(s) + " out of range 1.." + std::to_string(rho.sig.genus() - 1));
  }
  return plus(plus(rho.core[s - 1]) - abs_int(rho.b[n + s - 2]));
}

XY compute_xy(const DynnikovCoords& rho) {
  const int n = rho.sig.punctures();
  const int k = rho.sig.genus();
  XY out;
  Int prefix = 0; // sum of b_1..b_{r-1}
  for (int r = 1; r <= n - 1; ++r) {
    const Int term = 2 * (abs_int(rho.a[r - 1]) + plus(rho.b[r - 1]) + prefix);
    out.x = out.x ? std::max(*out.x, term) : term;
    prefix += rho.b[r - 1];
  }
  // prefix now holds b_1..b_{n-1}
  for (int s = 1; s <= k - 1; ++s) {
    if (s > 1) prefix += rho.b[n + s - 3];
    const Int term = abs_int(rho.t[s - 1]) + 2 * plus(rho.b[n + s - 2]) + psi_from_dynnikov(rho, s) + 2 * prefix;
    out.y = out.y ? std::max(*out.y, term) : term;
  }
  return out;
}

Int r_count(Int beta_star_last, Int c_k) {
  return half_exact(std::max<Int>(0, 2 * c_k - beta_star_last), "2 c_k - beta*");
}

std::string describe(DecodeFailure failure, int index) {
  switch (failure) {
  case DecodeFailure::None: return "ok";
  case DecodeFailure::ZeroTuple: return "the zero tuple is not the coordinate of any lamination";
  case DecodeFailure::ParityObstruction:
    return "t_" + std::to_string(index) + " and psi_" + std::to_string(index) +
           " differ in parity; no integral lamination has these coordinates";
  }
  return "?";
}

DecodeOutcome try_decode(const DynnikovCoords& rho) {
  const SurfaceSignature& sig = rho.sig;
  const int n = sig.punctures();
  const int k = sig.genus();
  DecodeOutcome outcome;
  if (rho.is_zero()) {
    outcome.failure = DecodeFailure::ZeroTuple;
    return outcome;
  }

  InverseIntermediates inter;
  inter.psi.resize(static_cast<std::size_t>(k - 1));
  for (int s = 1; s <= k - 1; ++s) {
    inter.psi[s - 1] = psi_from_dynnikov(rho, s);
    if ((rho.t[s - 1] - inter.psi[s - 1]) % 2 != 0) {
      outcome.failure = DecodeFailure::ParityObstruction;
      outcome.failing_index = s;
      return outcome;
    }
  }

  const XY xy = compute_xy(rho);
  inter.x = xy.x;
  inter.y = xy.y;
  Int top = 0;
  if (xy.x && xy.y) {
    top = std::max(*xy.x, *xy.y);
  } else {
    top = xy.x ? *xy.x : *xy.y;
  }

  const auto arcs = static_cast<std::size_t>(sig.beta_count());
  inter.beta_star.resize(arcs);
  Int prefix = 0;
  for (std::size_t i = 0; i < arcs; ++i) {
    inter.beta_star[i] = top - 2 * prefix;
    if (i < rho.b.size()) prefix += rho.b[i];
  }
  inter.r = r_count(inter.beta_star.back(), rho.core.back());

  TriangleCoords tau{sig, {}, {}, {}, rho.core};
  tau.beta.resize(arcs);
  for (std::size_t i = 0; i < arcs; ++i) tau.beta[i] = inter.beta_star[i] + 2 * inter.r;

  tau.alpha.resize(static_cast<std::size_t>(sig.alpha_count()));
  for (int i = 1; i <= sig.alpha_count(); ++i) {
    const int j = (i + 1) / 2; // ceil(i/2)
    const Int base = rho.b[j - 1] >= 0 ? tau.beta[j - 1] : tau.beta[j];
    const Int sign = i % 2 == 0 ? 1 : -1;
    tau.alpha[i - 1] = sign * rho.a[j - 1] + half_exact(base, "beta");
  }

  tau.gamma.resize(static_cast<std::size_t>(k - 1));
  inter.a_sprime.resize(static_cast<std::size_t>(k - 1));
  inter.b_sprime.resize(static_cast<std::size_t>(k - 1));
  for (int i = 1; i <= k - 1; ++i) {
    const Int abs_b = abs_int(rho.b[n + i - 2]);
    const Int widest = std::max(tau.beta[n + i - 1], tau.beta[n + i - 2]);
    const Int psi = inter.psi[i - 1];
    const Int t = rho.t[i - 1];
    const Int above = half_exact(t - psi + widest - 2 * abs_b, "a_{S'} numerator");
    const Int below = half_exact(-t - psi + widest - 2 * abs_b, "b_{S'} numerator");
    inter.a_sprime[i - 1] = above;
    inter.b_sprime[i - 1] = below;
    tau.gamma[i - 1] = 2 * (above + abs_b + psi);
  }

  outcome.result = DecodeResult{std::move(tau), std::move(inter)};
  return outcome;
}

DecodeResult decode(const DynnikovCoords& rho) {
  DecodeOutcome outcome = try_decode(rho);
  if (!outcome.result) throw DomainError(describe(outcome.failure, outcome.failing_index));
  return std::move(*outcome.result);
}

} // namespace lamcoord
