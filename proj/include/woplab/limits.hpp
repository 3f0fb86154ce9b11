#pragma once

#include <optional>
#include <string_view>

namespace woplab {

// Default enumeration bounds.
inline constexpr int kMaxDecomposeN = 8;
inline constexpr int kMaxOracleN = 3;
inline constexpr int kMaxEnumerateN = 12;

/// Value of WOPLAB_MAX_N when set to a positive integer.
std::optional<int> max_n_from_env();

/// Throws ResourceLimitError when n > bound.
void check_bound(std::string_view what, int n, int bound);

} // namespace woplab
