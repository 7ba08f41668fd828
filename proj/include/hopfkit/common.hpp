#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfkit {

/// Dense element index into a finite group's tables.
using Elt = std::uint16_t;

/// Error categories surfaced through the CLI as machine-readable codes.
enum class errc {
  schema_violation = 2,
  group_axiom_violation = 3,
  peiffer_violation = 4,
  illegal_move = 5,
  input_error = 6,
  resource_limit = 7,
  internal_invariant = 8,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::schema_violation: return "schema_violation";
    case errc::group_axiom_violation: return "group_axiom_violation";
    case errc::peiffer_violation: return "peiffer_violation";
    case errc::illegal_move: return "illegal_move";
    case errc::input_error: return "input_error";
    case errc::resource_limit: return "resource_limit";
    case errc::internal_invariant: return "internal_invariant";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

/// FNV-1a over a vector of element indices; used for tuple/configuration hashing.
struct TupleHash {
  std::size_t operator()(const std::vector<Elt>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (Elt e : v) {
      h ^= static_cast<std::uint64_t>(e) + 1;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Deterministic PRNG for sampled checks; never seeded from the environment.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  /// Uniform value in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace hopfkit
