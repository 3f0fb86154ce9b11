#include "woplab/limits.hpp"

#include "woplab/error.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

namespace woplab {

std::optional<int> max_n_from_env() {
  const char *raw = std::getenv("WOPLAB_MAX_N");
  if (raw == nullptr)
    return std::nullopt;
  int value = 0;
  const char *end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value <= 0)
    return std::nullopt;
  return value;
}

void check_bound(std::string_view what, int n, int bound) {
  if (n > bound)
    throw ResourceLimitError(std::string(what) + ": n = " + std::to_string(n) +
                             " exceeds the configured bound " + std::to_string(bound));
}

} // namespace woplab
