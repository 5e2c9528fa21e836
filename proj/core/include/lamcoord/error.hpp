#pragma once

#include <stdexcept>
#include <string>

namespace lamcoord {

// Base for every rejection of out-of-domain input (bad signature, invalid
// coordinates, tuples outside the image of the coordinate map, ...).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A census count came out negative: the coordinates cannot be realized by
// path components in the named region.
class InfeasibleCensus : public DomainError {
public:
  InfeasibleCensus(std::string region, std::string quantity, long long value);

  const std::string& region() const { return region_; }
  const std::string& quantity() const { return quantity_; }
  long long value() const { return value_; }

private:
  std::string region_;
  std::string quantity_;
  long long value_;
};

} // namespace lamcoord
