#pragma once

#include "woplab/limits.hpp"
#include "woplab/permutation.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace woplab {

/// A set partition of {1..n}: blocks ascending inside, ordered by minimum.
struct SetPartition {
  std::vector<std::vector<int>> blocks;

  /// labels[v - 1] names the block of v; equal labels share a block.
  static SetPartition from_labels(const std::vector<int> &labels);

  std::size_t size() const noexcept { return blocks.size(); }
  /// Index into `blocks` of the block holding v.
  std::size_t block_of(int v) const;
  /// Relabels every element through `map` (map[v - 1] is the new name of v).
  SetPartition relabeled(const std::vector<int> &map) const;

  bool operator==(const SetPartition &) const = default;
};

/// Normal form of the summation FS_beta of W([n]):
///
///   FS_beta = 1/n * sum_{k_1..k_n >= 1} prod_{c in cycle_blocks} p_{k(c)}
///                   * prod_{b in derivative_blocks} k(b) d/dp_{k(b)}
///
/// with k(S) = sum of k_v over v in S. The 1/n prefactor is not stored.
struct SummationTemplate {
  Permutation perm;
  SetPartition cycle_blocks;
  SetPartition derivative_blocks;

  int n() const noexcept { return perm.size(); }

  bool operator==(const SummationTemplate &) const = default;
};

/// Walks lift_chain(beta): the base {1} is one derivative block; a Case 0
/// step adds a singleton derivative block for the new point, a step with
/// index j >= 1 puts the new point into the block of j (k_j -> k_j + k_new).
SummationTemplate summation_of(const Permutation &beta);

struct Degree {
  int polynomial;   // dP
  int differential; // dD
  int total() const noexcept { return polynomial + differential; }

  bool operator==(const Degree &) const = default;
};

Degree degree(const SummationTemplate &t);

struct OsType {
  int r;
  int s;

  bool operator==(const OsType &) const = default;
};

/// (dP, dD) when the summation has the maximal degree n + 1.
std::optional<OsType> os_type(const SummationTemplate &t);

/// Condition (*1): every cycle of length >= 2 has exactly one ascent along its
/// arrows (it is the descending cycle on its support); fixed points pass.
bool satisfies_star1(const Permutation &perm);
/// Condition (*2): any two cycle supports are order-separated or one lies
/// between two consecutive elements of the other.
bool satisfies_star2(const Permutation &perm);
bool satisfies_star(const Permutation &perm);

/// summation_of for every beta in S_n, in the order of all_permutations(n).
std::vector<SummationTemplate> decompose_W(int n, int max_n = kMaxDecomposeN + 1);

enum class RenderFormat { plain, latex, json };

RenderFormat parse_render_format(std::string_view name);

/// Deterministic text. `latex` writes the summation in the
/// \sum i_1 ... \frac{\partial^s}{...} style, `plain` an ASCII variant and
/// `json` the per-template object.
std::string render(const SummationTemplate &t, RenderFormat format);

} // namespace woplab
