#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace woplab {

/// An element of the symmetric group S_n.
///
/// Points are 1-based. The cycle decomposition is computed on construction
/// and always lists fixed points as 1-cycles. Cycles are canonical: each
/// starts at its minimum and they are ordered by minimum, so the cycle
/// containing 1 comes first.
class Permutation {
public:
  using Cycle = std::vector<int>;

  /// `images[i - 1]` is the image of i. Throws std::invalid_argument unless
  /// the images form a bijection on {1..n} with n >= 1.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  /// Builds from disjoint cycles; every point of {1..n} must appear exactly
  /// once, where n is the largest point present.
  static Permutation from_cycles(const std::vector<Cycle> &cycles);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  int preimage(int i) const;

  const std::vector<int> &images() const noexcept { return images_; }
  const std::vector<Cycle> &cycles() const noexcept { return cycles_; }
  std::size_t cycle_count() const noexcept { return cycles_.size(); }

  /// Canonical text such as "(1 3)(2)".
  std::string to_string() const;

  /// Each cycle written from its maximum, cycles by decreasing maximum, e.g.
  /// "(4)(3 2 1)". This is how permutations read off a bracket sequence.
  std::string to_descending_string() const;

  bool operator==(const Permutation &other) const { return images_ == other.images_; }
  auto operator<=>(const Permutation &other) const { return images_ <=> other.images_; }

private:
  std::vector<int> images_;
  std::vector<Cycle> cycles_;
};

/// Parses cycle notation such as "(7 2 1)(6 5)(4)(3)". Fixed points must be
/// explicit; n is the largest integer present. Compact text like "(321)" is
/// read one digit per point when the multi-digit reading is invalid.
Permutation parse_permutation(std::string_view text);

/// All of S_n in lexicographic order of the image vectors.
std::vector<Permutation> all_permutations(int n);

struct Arrow {
  int source;
  int target;

  bool operator==(const Arrow &) const = default;
  auto operator<=>(const Arrow &) const = default;
};

/// A finite quiver on vertices {1..vertex_count}; arrows sorted by source.
struct Quiver {
  int vertex_count = 0;
  std::vector<Arrow> arrows;

  bool operator==(const Quiver &) const = default;
};

/// The quiver on {1..n+1} obtained from the cycle quiver by re-rooting the
/// arrow leaving 1 at the fresh vertex n+1: one chain from n+1 plus loops.
struct HatQuiver {
  int n = 0;
  std::vector<Arrow> arrows;

  int vertex_count() const noexcept { return n + 1; }
  /// Source of the unique arrow into v (1 <= v <= n).
  int source_into(int v) const;
  /// Vertices of the chain component, in order from n+1 down to 1.
  std::vector<int> chain() const;
  bool on_chain(int v) const;

  bool operator==(const HatQuiver &) const = default;
};

Quiver to_quiver(const Permutation &perm);
HatQuiver to_hat_quiver(const Permutation &perm);

/// Recovers the permutation whose hat quiver this is. Throws
/// std::invalid_argument if the arrows are not of that shape.
Permutation from_hat_quiver(const HatQuiver &quiver);

struct Projection {
  Permutation alpha;
  int j;
};

/// Deletes vertex n+2 from the hat quiver of beta in S_{n+1} and reconnects,
/// returning the resulting alpha in S_n and the lift index j with
/// lift(alpha, j) == beta. Requires beta.size() >= 2.
Projection project(const Permutation &beta);

/// Case 0 (j = 0): n+1 is inserted right after 1 in the cycle of 1.
/// Case j >= 1: the arrow into j in the hat quiver is cut and the pieces are
/// reconnected through n+1 and n+2, then n+2 is renamed 1.
/// Throws std::out_of_range unless 0 <= j <= alpha.size().
Permutation lift(const Permutation &alpha, int j);

/// js[m - 1] is the index used lifting from S_m to S_{m+1}; js[m - 1] <= m.
struct LiftChain {
  std::vector<int> js;

  bool operator==(const LiftChain &) const = default;
};

LiftChain lift_chain(const Permutation &perm);
Permutation rebuild(const LiftChain &chain);

} // namespace woplab
