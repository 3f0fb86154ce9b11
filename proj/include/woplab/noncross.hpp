#pragma once

#include "woplab/limits.hpp"
#include "woplab/permutation.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace woplab {

/// Contents of one slot between consecutive integers of n ... 1. The
/// enumerator order is the lexicographic order used by `enumerate`.
enum class Gap : std::uint8_t { empty, open, close, close_open };

std::string_view gap_text(Gap g);

/// A matched bracket pair. Labels follow the right brackets from the right:
/// the rightmost ")" closes pair 1.
struct BracketPair {
  int label = 0;
  int high = 0;             // first integer inside the pair
  int low = 0;              // last integer inside the pair
  int parent = 0;           // label of the innermost enclosing pair, 0 if none
  std::vector<int> members; // integers whose innermost pair this is, descending

  bool contains(const BracketPair &other) const { return high >= other.high && low <= other.low; }
};

/// The word n, n-1, ..., 1 with brackets in the n + 1 gaps, satisfying
/// condition (**): balanced, every integer inside some pair, at most one ")"
/// then at most one "(" per gap. Construction validates, so every value of
/// this type is a valid non-crossing sequence.
class BracketSequence {
public:
  /// gaps[0] precedes n, gaps[n] follows 1, gaps[i] sits between n-i+1 and
  /// n-i. Throws std::invalid_argument when (**) fails.
  BracketSequence(int n, std::vector<Gap> gaps);

  int n() const noexcept { return n_; }
  const std::vector<Gap> &gaps() const noexcept { return gaps_; }
  int pair_count() const noexcept { return static_cast<int>(pairs_.size()); }

  Gap gap_before(int k) const { return gaps_[static_cast<std::size_t>(n_ - k)]; }
  Gap gap_after(int k) const { return gaps_[static_cast<std::size_t>(n_ - k + 1)]; }
  bool opens_before(int k) const;
  bool closes_after(int k) const;

  /// Indexed by label - 1.
  const std::vector<BracketPair> &pairs() const noexcept { return pairs_; }
  const BracketPair &pair(int label) const { return pairs_.at(static_cast<std::size_t>(label - 1)); }
  int top_level_count() const;

  /// E.g. "(4(3)2)(1)"; integers are space separated when n >= 10. With
  /// `labels` brackets carry their pair label: "(_2 4 (_3 3 )_3 ...".
  std::string to_string(bool labels = false) const;
  std::string to_json() const;

  bool operator==(const BracketSequence &other) const { return n_ == other.n_ && gaps_ == other.gaps_; }
  auto operator<=>(const BracketSequence &other) const {
    if (auto c = n_ <=> other.n_; c != 0)
      return c;
    return gaps_ <=> other.gaps_;
  }

private:
  int n_;
  std::vector<Gap> gaps_;
  std::vector<BracketPair> pairs_;
};

/// Parses text such as "(4(3)2)(1)"; whitespace is ignored except inside an
/// integer. Throws ParseError on imbalance, uncovered integers, empty pairs,
/// two brackets of one kind in a gap, or integers not reading n, ..., 1.
BracketSequence parse_sequence(std::string_view text);

/// Extracts pairs from the highest label down; each pair's not yet consumed
/// integers form a descending cycle.
Permutation decode(const BracketSequence &seq);

/// Inverse of decode: "(" before each cycle's maximum and ")" after its
/// minimum. Throws std::invalid_argument unless satisfies_star(perm).
BracketSequence encode(const Permutation &perm);

struct PairClass {
  int label;
  bool top_level;
  bool embedded;
  bool bottom_level;
};

struct PairClassification {
  std::vector<PairClass> pairs; // by label
  /// Label pairs (left pair first) with disjoint spans and no integer
  /// between them.
  std::vector<std::pair<int, int>> adjacent;

  bool is_adjacent(int a, int b) const;
};

PairClassification classify_pairs(const BracketSequence &seq);

/// Dual sequence via the 16-row local table around each integer k
/// (positions: ")" of k+1, "(" of k, ")" of k, "(" of k-1).
/// Maps Brk(n, r) onto Brk(n, n - r + 1).
BracketSequence dual(const BracketSequence &seq);

/// Independent dual: toggles every gap between empty and ")(", fixing lone
/// "(" and ")" gaps.
BracketSequence dual_gap_toggle(const BracketSequence &seq);

/// Brk(n, r) in lexicographic order of gap arrays.
std::vector<BracketSequence> enumerate(int n, int r, int max_n = kMaxEnumerateN);
/// The members of Brk(n, r) with exactly one top-level pair.
std::vector<BracketSequence> enumerate_single_top(int n, int r, int max_n = kMaxEnumerateN);

/// Brk(n, r) -> single-top Brk(n+1, r): prepend n+1 and move the "(" of
/// pair 1 in front of it. Corresponds to lift(decode(seq), 0).
BracketSequence lemma402_up(const BracketSequence &seq);
/// Inverse of lemma402_up. Throws std::invalid_argument unless the input
/// has exactly one top-level pair and n >= 2.
BracketSequence lemma402_down(const BracketSequence &seq);

} // namespace woplab
