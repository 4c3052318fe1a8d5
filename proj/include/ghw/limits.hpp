#pragma once

#include <cstdint>
#include <optional>

namespace ghw {

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;
inline constexpr int kMaxAmbientDim = 63;
inline constexpr std::uint64_t kDefaultMaxEnum = 10'000'000;

/// Enumeration budget shared by every exhaustive routine.
struct Limits {
  /// Maximum number of candidates (vectors or subspaces) a single call
  /// may enumerate.
  std::uint64_t max_enum = kDefaultMaxEnum;
  /// Worker threads for partitioned searches; 0 means hardware concurrency.
  unsigned threads = 1;

  /// Reads GHW_MAX_ENUM; falls back to the default when unset or invalid.
  static Limits from_env();
};

/// Parses a positive decimal count; nullopt on anything else.
std::optional<std::uint64_t> parse_count(const char* text);

}  // namespace ghw
