#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace woplab::cli {

struct Check {
  std::string claim;
  bool pass;
};

enum class Suite { counts, star, oracle, dual, lift };

Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

/// Largest n each suite accepts without --max-n.
int default_bound(Suite suite);

/// Runs one suite at rank n. Bounds are enforced by the caller.
std::vector<Check> run_suite(Suite suite, int n);

/// Matrix identities that do not depend on n: the derivative rules for
/// p_k and (X^k)_ab, the two-operator normal-ordered product, and the
/// correction between composed and normal-ordered products.
std::vector<Check> oracle_identities();

} // namespace woplab::cli
