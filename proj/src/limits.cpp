#include "ghw/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace ghw {

std::optional<std::uint64_t> parse_count(const char* text) {
  if (text == nullptr || *text == '\0') return std::nullopt;
  std::uint64_t value = 0;
  const char* end = text + std::strlen(text);
  auto [ptr, ec] = std::from_chars(text, end, value);
  if (ec != std::errc() || ptr != end || value == 0) return std::nullopt;
  return value;
}

Limits Limits::from_env() {
  Limits l;
  if (auto v = parse_count(std::getenv("GHW_MAX_ENUM"))) l.max_enum = *v;
  return l;
}

}  // namespace ghw
