#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lamcoord/dynnikov.hpp"
#include "lamcoord/triangle.hpp"

namespace lamcoord::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitCounterexample = 4;

// Largest accepted coordinate magnitude and surface size.
inline constexpr Int kMaxMagnitude = Int{1} << 48;
inline constexpr int kMaxSites = 4096;

// Malformed input: bad JSON, wrong types, missing or unknown keys.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// JSON arrays are 0-based; messages name entries by their 1-based index.
TriangleCoords triangle_from_json(const Json& j);
DynnikovCoords dynnikov_from_json(const Json& j);
Json to_json(const TriangleCoords& tau);
Json to_json(const DynnikovCoords& rho);
Json to_json(const InverseIntermediates& im);

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace lamcoord::cli
