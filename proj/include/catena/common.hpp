#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace catena {

// Error codes for every failure mode the engine can report. The CLI maps
// these onto exit statuses, so additions here need a mapping there too.
enum class Err {
  MissingComposite,
  NonAssociative,
  UnitLawViolation,
  DanglingEndpoint,
  SizeExceeded,
  IncompatibleCospan,
  NotMonotone,
  OutOfRange,
  EndpointMismatch,
  MissingAdjunction,
  HypothesisFailed,
  NotAPullback,
  CounitNotInvertible,
  NoLift,
  FiberAdjointMissing,
  NotOverBase,
  NonAssociativeComposition,
  UnitViolation,
  BadHom,
  TruncationMismatch,
  TruncationTooSmall,
  CapOverflow,
  ParseError,
  UnresolvedReference,
  ValidationError,
  UnknownSuite,
};

const char* err_name(Err e);

struct Error : std::runtime_error {
  Err code;
  Error(Err c, const std::string& msg)
      : std::runtime_error(std::string(err_name(c)) + ": " + msg), code(c) {}
};

[[noreturn]] inline void fail(Err c, const std::string& msg) { throw Error(c, msg); }

// Size caps. Checks that enumerate raise SizeExceeded instead of running away.
struct Caps {
  long long derived_objects = 10000;   // object count of any derived category
  long long enum_candidates = 100000;  // candidate maps visited per enumeration
  int simplex_rank = 8;                // max rank handled by the simplex module
  int string_cap = 4;                  // max length of envelope strings
};

// Deterministic splitmix64 stream; the suites must replay byte-identically
// across platforms, so no std::uniform_int_distribution anywhere.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (next() & 1) != 0; }
};

std::string join(const std::vector<std::string>& parts, const std::string& sep);

}  // namespace catena
