#include "lamcoord/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>

namespace lamcoord::oracle {

namespace {

using Key = std::vector<Int>;

Key key_of(const TriangleCoords& tau) {
  Key k;
  k.insert(k.end(), tau.alpha.begin(), tau.alpha.end());
  k.insert(k.end(), tau.beta.begin(), tau.beta.end());
  k.insert(k.end(), tau.gamma.begin(), tau.gamma.end());
  k.insert(k.end(), tau.core.begin(), tau.core.end());
  return k;
}

Int saturating_mul(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<Int>::max() / b) return std::numeric_limits<Int>::max();
  return a * b;
}

bool in_window(const TriangleCoords& tau, Int max_strands) {
  const Int floor = core_floor(max_strands);
  return std::all_of(tau.beta.begin(), tau.beta.end(), [&](Int b) { return b <= max_strands; }) &&
         std::all_of(tau.core.begin(), tau.core.end(), [&](Int c) { return c >= floor; });
}

void record(OracleReport& report, const std::string& check, const std::string& detail) {
  ++report.failure_count;
  const bool seen = std::any_of(report.first_failures.begin(), report.first_failures.end(),
                                [&](const Counterexample& c) { return c.check == check; });
  if (!seen) report.first_failures.push_back({check, detail});
}

// Crosscap states allowed when no strand reaches the crosscap: nothing, or
// m bounding curves with or without the core, up to |c| <= floor.
std::vector<CoreEncoding> idle_crosscaps(Int limit) {
  std::vector<CoreEncoding> out{{0, false, 0}};
  for (Int m = 0; 2 * m <= limit; ++m) {
    if (m > 0) out.push_back({m, false, 0});
    if (2 * m + 1 <= limit) out.push_back({m, true, 0});
  }
  return out;
}

std::vector<SRegionCensus> s_options(Int left, Int right) {
  std::vector<SRegionCensus> out;
  for (Int a = 0; a <= left; ++a) {
    for (Int b = 0; a + b <= left; ++b) {
      const Int rest_left = left - a - b;
      const Int rest_right = right - a - b;
      if (rest_right < 0 || rest_left % 2 != 0 || rest_right % 2 != 0) continue;
      if (rest_left > 0 && rest_right > 0) continue; // loops sit on one side only
      SRegionCensus s{a, b, 0, LoopSide::None};
      if (rest_left > 0) s = {a, b, rest_left / 2, LoopSide::Right};
      if (rest_right > 0) s = {a, b, rest_right / 2, LoopSide::Left};
      out.push_back(s);
    }
  }
  return out;
}

std::vector<SPrimeRegionCensus> sprime_options(Int left, Int right, Int limit) {
  std::vector<SPrimeRegionCensus> out;
  const auto idle = idle_crosscaps(limit);
  for (Int a = 0; a <= left; ++a) {
    for (Int b = 0; a + b <= left; ++b) {
      for (Int psi = 0; a + b + psi <= left; ++psi) {
        const Int rest_left = left - a - b - psi;
        const Int rest_right = right - a - b - psi;
        if (rest_right < 0 || rest_left % 2 != 0 || rest_right % 2 != 0) continue;
        if (rest_left > 0 && rest_right > 0) continue;
        const Int loops = (rest_left + rest_right) / 2;
        const LoopSide side = rest_left > 0 ? LoopSide::Right : (rest_right > 0 ? LoopSide::Left : LoopSide::None);
        for (Int core = 0; core <= loops; ++core) {
          const Int noncore = loops - core;
          // A non-core loop around the crosscap blocks any straight core.
          if (noncore > 0 && psi > 0) continue;
          SPrimeRegionCensus s;
          s.above = a;
          s.below = b;
          s.noncore_loops = noncore;
          s.core_loops = core;
          s.straight_cores = psi;
          s.side = side;
          if (core + psi > 0) {
            s.crosscap = {0, false, core + psi};
            out.push_back(s);
          } else {
            for (const auto& enc : idle) {
              s.crosscap = enc;
              out.push_back(s);
            }
          }
        }
      }
    }
  }
  return out;
}

std::vector<DeltaPrimeKCensus> end_options(Int last, Int limit) {
  std::vector<DeltaPrimeKCensus> out;
  const auto idle = idle_crosscaps(limit);
  for (Int core = 0; 2 * core <= last; ++core) {
    DeltaPrimeKCensus e;
    e.core_loops = core;
    e.noncore_loops = last / 2 - core;
    if (core > 0) {
      e.crosscap = {0, false, core};
      out.push_back(e);
    } else {
      for (const auto& enc : idle) {
        e.crosscap = enc;
        out.push_back(e);
      }
    }
  }
  return out;
}

// Outermost strands closing up through the last crosscap instead of around
// it.
Int r_from_configuration(const RegionCensus& c) {
  if (c.delta_prime_k.noncore_loops > 0 || c.delta_prime_k.core_loops == 0) return 0;
  Int r = std::numeric_limits<Int>::max();
  for (const auto& s : c.s) r = std::min({r, s.above, s.below});
  for (const auto& s : c.sprime) r = std::min({r, s.above, s.below});
  return r == std::numeric_limits<Int>::max() ? 0 : r;
}

bool boundary_parallel(const RegionCensus& c) {
  if (c.delta_prime_k.noncore_loops == 0) return false;
  for (const auto& s : c.s) {
    if (std::min(s.above, s.below) == 0) return false;
  }
  for (const auto& s : c.sprime) {
    if (std::min(s.above, s.below) == 0) return false;
  }
  return true;
}

TriangleCoords assemble(const SurfaceSignature& sig, const std::vector<Int>& beta, const RegionCensus& c) {
  TriangleCoords tau{sig, {}, beta, {}, {}};
  for (const auto& s : c.s) {
    tau.alpha.push_back(s.above + s.loops); // upward arc: aboves and loops
    tau.alpha.push_back(s.below + s.loops); // downward arc: belows and loops
  }
  for (const auto& s : c.sprime) {
    // Everything except a below component enters the cap and leaves again.
    tau.gamma.push_back(2 * (s.above + s.noncore_loops + s.core_loops + s.straight_cores));
    tau.core.push_back(encode_core(s.crosscap));
  }
  tau.core.push_back(encode_core(c.delta_prime_k.crosscap));
  return tau;
}

std::string flat_string(const DynnikovCoords& rho) { return to_string(rho); }

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
  std::vector<std::size_t> parent_;
};

} // namespace

Int work_ceiling_from_env(Int fallback) {
  const char* raw = std::getenv("LAMCOORD_WORK_CEILING");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const long long v = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || v <= 0) return fallback;
  return static_cast<Int>(v);
}

Int core_floor(Int max_strands) { return -std::max<Int>(2, max_strands); }

DynnikovBox::DynnikovBox(SurfaceSignature sig, std::vector<std::pair<Int, Int>> ranges)
    : sig_(sig), ranges_(std::move(ranges)) {
  if (ranges_.size() != static_cast<std::size_t>(sig_.dynnikov_length())) {
    throw DomainError("box has " + std::to_string(ranges_.size()) + " ranges, expected " +
                      std::to_string(sig_.dynnikov_length()));
  }
}

DynnikovBox DynnikovBox::cube(const SurfaceSignature& sig, Int radius) {
  if (radius < 0) throw DomainError("box radius must be non-negative");
  return DynnikovBox(sig, std::vector<std::pair<Int, Int>>(static_cast<std::size_t>(sig.dynnikov_length()),
                                                           {-radius, radius}));
}

DynnikovBox DynnikovBox::induced(const SurfaceSignature& sig, Int max_strands) {
  if (max_strands < 0) throw DomainError("max_strands must be non-negative");
  const Int half = max_strands / 2;
  std::vector<std::pair<Int, Int>> r;
  for (int i = 0; i < sig.punctures() - 1; ++i) r.emplace_back(-half, half);
  for (int i = 0; i < sig.punctures() + sig.genus() - 2; ++i) r.emplace_back(-half, half);
  for (int i = 0; i < sig.genus() - 1; ++i) r.emplace_back(-max_strands, max_strands);
  for (int i = 0; i < sig.genus(); ++i) r.emplace_back(core_floor(max_strands), max_strands);
  return DynnikovBox(sig, std::move(r));
}

Int DynnikovBox::size() const {
  Int total = 1;
  bool has_zero = true;
  for (const auto& [lo, hi] : ranges_) {
    if (hi < lo) return 0;
    total = saturating_mul(total, hi - lo + 1);
    has_zero = has_zero && lo <= 0 && 0 <= hi;
  }
  if (total == std::numeric_limits<Int>::max()) return total;
  return has_zero ? total - 1 : total;
}

void DynnikovBox::for_each(const std::function<void(const DynnikovCoords&)>& visit) const {
  for (const auto& [lo, hi] : ranges_) {
    if (hi < lo) return;
  }
  std::vector<Int> v(ranges_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = ranges_[i].first;
  while (true) {
    if (std::any_of(v.begin(), v.end(), [](Int x) { return x != 0; })) visit(unflatten(sig_, v));
    std::size_t i = v.size();
    while (i > 0) {
      --i;
      if (v[i] < ranges_[i].second) {
        ++v[i];
        break;
      }
      v[i] = ranges_[i].first;
      if (i == 0) return;
    }
    if (v.empty()) return;
  }
}

DynnikovBox enumerate_dynnikov_box(const EnumerationBudget& budget) {
  return DynnikovBox::cube(budget.sig, budget.box_radius);
}

std::vector<CensusConfiguration> enumerate_census_configurations(const EnumerationBudget& budget) {
  const SurfaceSignature& sig = budget.sig;
  const int n = sig.punctures();
  const int k = sig.genus();
  const Int limit = -core_floor(budget.max_strands);
  if (budget.max_strands < 0) throw DomainError("max_strands must be non-negative");

  std::vector<CensusConfiguration> out;
  Int work = 0;
  const auto arcs = static_cast<std::size_t>(sig.beta_count());
  std::vector<Int> beta(arcs, 0);
  const Int top = budget.max_strands - budget.max_strands % 2;

  while (true) {
    std::vector<std::vector<SRegionCensus>> s_opts;
    std::vector<std::vector<SPrimeRegionCensus>> sp_opts;
    for (int i = 0; i < n - 1; ++i) s_opts.push_back(s_options(beta[i], beta[i + 1]));
    for (int i = 0; i < k - 1; ++i) sp_opts.push_back(sprime_options(beta[n + i - 1], beta[n + i], limit));
    const auto ends = end_options(beta.back(), limit);

    Int combos = static_cast<Int>(ends.size());
    for (const auto& o : s_opts) combos = saturating_mul(combos, static_cast<Int>(o.size()));
    for (const auto& o : sp_opts) combos = saturating_mul(combos, static_cast<Int>(o.size()));
    if (combos > budget.work_ceiling - work) {
      throw BudgetExceeded("census enumeration for " + sig.name() + " with max_strands " +
                           std::to_string(budget.max_strands) + " exceeds the work ceiling of " +
                           std::to_string(budget.work_ceiling));
    }
    work += combos;

    if (combos > 0) {
      std::vector<std::size_t> idx(s_opts.size() + sp_opts.size() + 1, 0);
      while (true) {
        RegionCensus c;
        for (std::size_t i = 0; i < s_opts.size(); ++i) c.s.push_back(s_opts[i][idx[i]]);
        for (std::size_t i = 0; i < sp_opts.size(); ++i) c.sprime.push_back(sp_opts[i][idx[s_opts.size() + i]]);
        c.delta_zero.left_loops = beta.front() / 2;
        c.delta_prime_k = ends[idx.back()];
        if (!boundary_parallel(c)) {
          c.r_components = r_from_configuration(c);
          TriangleCoords tau = assemble(sig, beta, c);
          const bool empty = std::all_of(tau.beta.begin(), tau.beta.end(), [](Int x) { return x == 0; }) &&
                             std::all_of(tau.core.begin(), tau.core.end(), [](Int x) { return x == 0; });
          if (!empty) out.push_back({std::move(tau), std::move(c)});
        }
        // odometer
        std::size_t j = idx.size();
        bool done = true;
        while (j > 0) {
          --j;
          const std::size_t limit_j = j < s_opts.size()             ? s_opts[j].size()
                                      : j < s_opts.size() + sp_opts.size() ? sp_opts[j - s_opts.size()].size()
                                                                        : ends.size();
          if (idx[j] + 1 < limit_j) {
            ++idx[j];
            done = false;
            break;
          }
          idx[j] = 0;
        }
        if (done) break;
      }
    }

    std::size_t i = arcs;
    bool done = true;
    while (i > 0) {
      --i;
      if (beta[i] + 2 <= top) {
        beta[i] += 2;
        done = false;
        break;
      }
      beta[i] = 0;
    }
    if (done) break;
  }
  return out;
}

bool parity_obstructed(const DynnikovCoords& rho) {
  const int n = rho.sig.punctures();
  for (int s = 1; s < rho.sig.genus(); ++s) {
    const Int c_plus = std::max<Int>(rho.core[static_cast<std::size_t>(s - 1)], 0);
    const Int b = rho.b[static_cast<std::size_t>(n + s - 2)];
    const Int psi = std::max<Int>(c_plus - (b < 0 ? -b : b), 0);
    if ((rho.t[static_cast<std::size_t>(s - 1)] - psi) % 2 != 0) return true;
  }
  return false;
}

std::string OracleReport::to_string() const {
  std::ostringstream os;
  os << sig.name() << " radius " << box_radius << " strands " << max_strands << ": " << box_tuples
     << " tuples, " << round_trips << " round trips, " << out_of_image << " outside the image (parity), "
     << configurations << " configurations, " << distinct_images << " distinct images, " << decoded_in_window
     << " decoded in window, " << failure_count << " failure" << (failure_count == 1 ? "" : "s");
  for (const auto& f : first_failures) os << "\n  first " << f.check << " failure: " << f.detail;
  return os.str();
}

OracleReport check_bijection(const EnumerationBudget& budget, const DecodeFn& decode_fn) {
  OracleReport report{.sig = budget.sig, .box_radius = budget.box_radius, .max_strands = budget.max_strands};
  const DynnikovBox box = enumerate_dynnikov_box(budget);
  if (box.size() > budget.work_ceiling) {
    throw BudgetExceeded("box of radius " + std::to_string(budget.box_radius) + " on " + budget.sig.name() +
                         " has " + std::to_string(box.size()) + " tuples, above the work ceiling of " +
                         std::to_string(budget.work_ceiling));
  }
  const std::vector<CensusConfiguration> configs = enumerate_census_configurations(budget);
  report.configurations = static_cast<Int>(configs.size());

  std::set<Key> enumerated;
  std::map<std::vector<Int>, Key> images;
  for (const auto& cfg : configs) {
    enumerated.insert(key_of(cfg.tau));
    std::optional<DynnikovCoords> encoded;
    try {
      encoded = encode(cfg.tau);
    } catch (const DomainError& e) {
      record(report, "decode(encode(tau))", "encode rejected " + to_string(cfg.tau) + ": " + e.what());
      continue;
    }
    const DynnikovCoords& rho = *encoded;
    const DecodeOutcome back = decode_fn(rho);
    if (!back.result || !(back.result->tau == cfg.tau)) {
      record(report, "decode(encode(tau))",
             "tau " + to_string(cfg.tau) + " -> rho " + flat_string(rho) + " -> " +
                 (back.result ? to_string(back.result->tau) : describe(back.failure, back.failing_index)));
    }
    const auto [it, fresh] = images.emplace(flatten(rho), key_of(cfg.tau));
    if (!fresh) {
      record(report, "injectivity", "rho " + flat_string(rho) + " is the image of two configurations, one is " +
                                        to_string(cfg.tau));
    }
  }
  report.distinct_images = static_cast<Int>(images.size());

  box.for_each([&](const DynnikovCoords& rho) {
    ++report.box_tuples;
    const bool obstructed = parity_obstructed(rho);
    const DecodeOutcome out = decode_fn(rho);
    if (!out.result) {
      if (obstructed && out.failure == DecodeFailure::ParityObstruction) {
        ++report.out_of_image;
      } else {
        record(report, "encode(decode(rho))",
               "decode refused " + flat_string(rho) + ": " + describe(out.failure, out.failing_index));
      }
      return;
    }
    if (obstructed) {
      record(report, "encode(decode(rho))", "decode accepted the parity-obstructed tuple " + flat_string(rho));
      return;
    }
    const TriangleCoords& tau = out.result->tau;
    const ValidityReport validity = validate(tau);
    if (!validity.valid()) {
      record(report, "valid decode", "decode(" + flat_string(rho) + ") = " + to_string(tau) + " is " +
                                         validity.to_string());
      return;
    }
    const DynnikovCoords again = detail::encode_unchecked(tau);
    if (again == rho) {
      ++report.round_trips;
    } else {
      record(report, "encode(decode(rho))",
             flat_string(rho) + " -> " + to_string(tau) + " -> " + flat_string(again));
    }
    if (in_window(tau, budget.max_strands)) {
      ++report.decoded_in_window;
      if (!enumerated.contains(key_of(tau))) {
        record(report, "census coverage",
               "decode(" + flat_string(rho) + ") = " + to_string(tau) + " is missing from the census enumeration");
      }
    }
  });
  return report;
}

std::string EquivalenceReport::to_string() const {
  std::ostringstream os;
  os << sig.name() << " strands " << max_strands << ": " << enumerated << " configurations (" << enumerated_distinct
     << " distinct tau), " << decoded << " decoded tau in window, " << only_enumerated << " only enumerated, "
     << only_decoded << " only decoded, " << encode_collisions << " encode collisions, " << census_mismatches
     << " census mismatches";
  for (const auto& e : examples) os << "\n  " << e.check << ": " << e.detail;
  return os.str();
}

EquivalenceReport check_census_equivalence(const SurfaceSignature& sig, Int max_strands, Int work_ceiling) {
  EquivalenceReport report{.sig = sig, .max_strands = max_strands};
  const auto configs = enumerate_census_configurations({sig, 0, max_strands, work_ceiling});
  report.enumerated = static_cast<Int>(configs.size());
  auto note = [&](const std::string& check, const std::string& detail) {
    if (report.examples.size() < 8) report.examples.push_back({check, detail});
  };

  std::map<Key, const CensusConfiguration*> enumerated;
  std::set<std::vector<Int>> images;
  for (const auto& cfg : configs) {
    if (!enumerated.emplace(key_of(cfg.tau), &cfg).second) note("duplicate", to_string(cfg.tau));
    try {
      if (!images.insert(flatten(encode(cfg.tau))).second) {
        ++report.encode_collisions;
        note("encode collision", to_string(cfg.tau));
      }
    } catch (const DomainError& e) {
      ++report.encode_collisions;
      note("encode rejected", to_string(cfg.tau) + ": " + e.what());
    }
    try {
      if (!(census(cfg.tau) == cfg.census)) {
        ++report.census_mismatches;
        note("census mismatch", to_string(cfg.tau));
      }
    } catch (const DomainError& e) {
      ++report.census_mismatches;
      note("census infeasible", to_string(cfg.tau) + ": " + e.what());
    }
  }
  report.enumerated_distinct = static_cast<Int>(enumerated.size());

  const DynnikovBox box = DynnikovBox::induced(sig, max_strands);
  if (box.size() > work_ceiling) {
    throw BudgetExceeded("induced box for " + sig.name() + " has " + std::to_string(box.size()) +
                         " tuples, above the work ceiling of " + std::to_string(work_ceiling));
  }
  std::set<Key> decoded;
  box.for_each([&](const DynnikovCoords& rho) {
    const DecodeOutcome out = try_decode(rho);
    if (!out.result || !in_window(out.result->tau, max_strands)) return;
    decoded.insert(key_of(out.result->tau));
  });
  report.decoded = static_cast<Int>(decoded.size());
  for (const auto& [key, cfg] : enumerated) {
    if (!decoded.contains(key)) {
      ++report.only_enumerated;
      note("only enumerated", to_string(cfg->tau));
    }
  }
  for (const auto& key : decoded) {
    if (!enumerated.contains(key)) {
      ++report.only_decoded;
      std::ostringstream os;
      for (Int v : key) os << v << ' ';
      note("only decoded", os.str());
    }
  }
  return report;
}

std::vector<ComponentKey> component_multiset(const std::vector<TracedComponent>& components) {
  std::vector<ComponentKey> out;
  out.reserve(components.size());
  for (const auto& c : components) {
    out.push_back({static_cast<Int>(c.strand_cycle.size()), c.core_crossings, c.sidedness == Sidedness::OneSided});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ComponentKey> independent_trace(const SurfaceSignature& sig, const RegionCensus& census,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = sig.punctures();
  const int k = sig.genus();
  const int arcs = sig.beta_count();

  // Slot counts follow from the census alone.
  std::vector<Int> count(static_cast<std::size_t>(arcs), 0);
  count[0] = 2 * census.delta_zero.left_loops;
  for (int i = 0; i < n - 1; ++i) {
    const auto& s = census.s[static_cast<std::size_t>(i)];
    count[static_cast<std::size_t>(i + 1)] = s.above + s.below + (s.side == LoopSide::Left ? 2 * s.loops : 0);
  }
  for (int i = 0; i < k - 1; ++i) {
    const auto& s = census.sprime[static_cast<std::size_t>(i)];
    const Int loops = s.noncore_loops + s.core_loops;
    count[static_cast<std::size_t>(n + i)] =
        s.above + s.below + s.straight_cores + (s.side == LoopSide::Left ? 2 * loops : 0);
  }

  // Random labels: the slot at geometric rank r on arc a is labelled
  // offset[a] + perm[a][r].
  std::vector<std::size_t> offset(static_cast<std::size_t>(arcs) + 1, 0);
  std::vector<std::vector<std::size_t>> perm(static_cast<std::size_t>(arcs));
  for (int a = 0; a < arcs; ++a) {
    offset[static_cast<std::size_t>(a) + 1] = offset[static_cast<std::size_t>(a)] + static_cast<std::size_t>(count[static_cast<std::size_t>(a)]);
    auto& p = perm[static_cast<std::size_t>(a)];
    p.resize(static_cast<std::size_t>(count[static_cast<std::size_t>(a)]));
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::shuffle(p.begin(), p.end(), rng);
  }
  auto label = [&](int arc, Int rank) {
    return offset[static_cast<std::size_t>(arc)] + perm[static_cast<std::size_t>(arc)][static_cast<std::size_t>(rank)];
  };

  struct Piece {
    std::size_t a;
    std::size_t b;
    int transits;
  };
  std::vector<Piece> pieces;

  enum Token { TAbove, TBelow, TOpen, TClose, TCore };
  // Token word on one side of a region, top to bottom.
  auto word = [](Int above, Int loops, Int cores, Int below) {
    std::vector<Token> w;
    w.insert(w.end(), static_cast<std::size_t>(above), TAbove);
    w.insert(w.end(), static_cast<std::size_t>(loops), TOpen);
    w.insert(w.end(), static_cast<std::size_t>(cores), TCore);
    w.insert(w.end(), static_cast<std::size_t>(loops), TClose);
    w.insert(w.end(), static_cast<std::size_t>(below), TBelow);
    return w;
  };
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // Glues one region given its token words on the left and right arcs.
  auto glue = [&](int left, const std::vector<Token>& lw, int right, const std::vector<Token>& rw) {
    std::vector<Int> left_aboves, right_aboves, left_belows, right_belows;
    struct End {
      double angle;
      std::size_t slot;
    };
    std::vector<End> core_ends;
    auto scan = [&](int arc, const std::vector<Token>& w, bool is_left) {
      std::vector<Int> stack;
      // Random heights, sorted so that rank order is top to bottom.
      std::vector<double> h(w.size());
      for (auto& x : h) x = 2.0 * unit(rng) - 1.0;
      std::sort(h.begin(), h.end(), std::greater<>());
      for (std::size_t r = 0; r < w.size(); ++r) {
        const Int rank = static_cast<Int>(r);
        switch (w[r]) {
        case TAbove: (is_left ? left_aboves : right_aboves).push_back(rank); break;
        case TBelow: (is_left ? left_belows : right_belows).push_back(rank); break;
        case TOpen: stack.push_back(rank); break;
        case TClose:
          pieces.push_back({label(arc, stack.back()), label(arc, rank), 0});
          stack.pop_back();
          break;
        case TCore: {
          const double y = std::clamp(h[r], -0.999, 0.999);
          const double x = std::sqrt(1.0 - y * y) * (is_left ? -1.0 : 1.0);
          // Counterclockwise angle with y up: the left side runs top to
          // bottom, the right side bottom to top.
          core_ends.push_back({std::atan2(y, x), label(arc, rank)});
          break;
        }
        }
      }
    };
    if (left >= 0) scan(left, lw, true);
    if (right >= 0) scan(right, rw, false);
    for (std::size_t i = 0; i < left_aboves.size() && i < right_aboves.size(); ++i) {
      pieces.push_back({label(left, left_aboves[i]), label(right, right_aboves[i]), 0});
    }
    for (std::size_t i = 0; i < left_belows.size() && i < right_belows.size(); ++i) {
      pieces.push_back({label(left, left_belows[i]), label(right, right_belows[i]), 0});
    }
    if (!core_ends.empty()) {
      const double rot = 2.0 * std::acos(-1.0) * unit(rng);
      for (auto& e : core_ends) e.angle = std::fmod(e.angle + rot + 8.0 * std::acos(-1.0), 2.0 * std::acos(-1.0));
      std::sort(core_ends.begin(), core_ends.end(), [](const End& x, const End& y) { return x.angle < y.angle; });
      const std::size_t half = core_ends.size() / 2;
      for (std::size_t p = 0; p < half; ++p) pieces.push_back({core_ends[p].slot, core_ends[p + half].slot, 1});
    }
  };

  glue(-1, {}, 0, word(0, census.delta_zero.left_loops, 0, 0));
  for (int i = 0; i < n - 1; ++i) {
    const auto& s = census.s[static_cast<std::size_t>(i)];
    const Int lr = s.side == LoopSide::Right ? s.loops : 0;
    const Int ll = s.side == LoopSide::Left ? s.loops : 0;
    glue(i, word(s.above, lr, 0, s.below), i + 1, word(s.above, ll, 0, s.below));
  }
  for (int i = 0; i < k - 1; ++i) {
    const auto& s = census.sprime[static_cast<std::size_t>(i)];
    const bool right_loops = s.side == LoopSide::Right;
    const bool left_loops = s.side == LoopSide::Left;
    const Int left_cores = s.straight_cores + (right_loops ? 2 * s.core_loops : 0);
    const Int right_cores = s.straight_cores + (left_loops ? 2 * s.core_loops : 0);
    glue(n + i - 1, word(s.above, right_loops ? s.noncore_loops : 0, left_cores, s.below), n + i,
         word(s.above, left_loops ? s.noncore_loops : 0, right_cores, s.below));
  }
  const auto& end = census.delta_prime_k;
  glue(arcs - 1, word(0, end.noncore_loops, 2 * end.core_loops, 0), -1, {});

  std::shuffle(pieces.begin(), pieces.end(), rng);
  UnionFind uf(offset.back());
  for (const auto& p : pieces) uf.unite(p.a, p.b);
  std::map<std::size_t, ComponentKey> by_root;
  for (std::size_t s = 0; s < offset.back(); ++s) by_root[uf.find(s)].slots += 1;
  for (const auto& p : pieces) by_root[uf.find(p.a)].core_crossings += p.transits;

  std::vector<ComponentKey> out;
  for (auto& [root, key] : by_root) {
    key.one_sided = key.core_crossings % 2 == 1;
    out.push_back(key);
  }
  auto extras = [&](const CoreEncoding& enc) {
    for (Int m = 0; m < enc.nonprimitive_two_sided; ++m) out.push_back({0, 0, false});
    if (enc.includes_core) out.push_back({0, 1, true});
  };
  for (const auto& s : census.sprime) extras(s.crosscap);
  extras(end.crosscap);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace lamcoord::oracle
