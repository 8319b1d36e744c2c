#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fg {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct MalformedCycle : Error {
  explicit MalformedCycle(const std::string& what) : Error("malformed cycle: " + what) {}
};

struct PointOutOfRange : Error {
  explicit PointOutOfRange(const std::string& what) : Error("point out of range: " + what) {}
};

struct RepeatedPoint : Error {
  explicit RepeatedPoint(const std::string& what) : Error("repeated point: " + what) {}
};

struct DegreeMismatch : Error {
  explicit DegreeMismatch(const std::string& what) : Error("degree mismatch: " + what) {}
};

struct EmptyGeneratorList : Error {
  EmptyGeneratorList() : Error("empty generator list") {}
};

// Carries the exact order computed from the stabilizer chain so callers can
// report how far over the cap the group is.
struct EnumerationCapExceeded : Error {
  EnumerationCapExceeded(std::uint64_t order, std::uint64_t cap)
      : Error("enumeration cap exceeded: group order " + std::to_string(order) +
              " > cap " + std::to_string(cap)),
        order(order),
        cap(cap) {}
  std::uint64_t order;
  std::uint64_t cap;
};

struct NotAMember : Error {
  explicit NotAMember(const std::string& what) : Error("not a member: " + what) {}
};

struct NotASubgroup : Error {
  explicit NotASubgroup(const std::string& what) : Error("not a subgroup: " + what) {}
};

struct LatticeCapExceeded : Error {
  LatticeCapExceeded(std::uint64_t order, std::uint64_t cap)
      : Error("subgroup lattice cap exceeded: group order " + std::to_string(order) +
              " > cap " + std::to_string(cap)) {}
};

struct UnsupportedSearch : Error {
  explicit UnsupportedSearch(const std::string& what) : Error("unsupported search: " + what) {}
};

struct DegreeLimitExceeded : Error {
  explicit DegreeLimitExceeded(const std::string& what) : Error("degree limit exceeded: " + what) {}
};

struct AmbiguousIdentification : Error {
  explicit AmbiguousIdentification(const std::string& what)
      : Error("ambiguous identification: " + what) {}
};

struct SearchExhausted : Error {
  explicit SearchExhausted(const std::string& what) : Error("search exhausted: " + what) {}
};

struct ParseError : Error {
  ParseError(const std::string& what, int line)
      : Error("parse error at line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

struct UsageError : Error {
  explicit UsageError(const std::string& what) : Error("usage error: " + what) {}
};

}  // namespace fg
