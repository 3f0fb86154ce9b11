#include "woplab/noncross.hpp"

#include "woplab/error.hpp"
#include "woplab/summation.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace woplab {

namespace {

bool has_close(Gap g) { return g == Gap::close || g == Gap::close_open; }
bool has_open(Gap g) { return g == Gap::open || g == Gap::close_open; }

Gap make_gap(bool close, bool open) {
  if (close)
    return open ? Gap::close_open : Gap::close;
  return open ? Gap::open : Gap::empty;
}

} // namespace

std::string_view gap_text(Gap g) {
  switch (g) {
  case Gap::empty:
    return "";
  case Gap::open:
    return "(";
  case Gap::close:
    return ")";
  case Gap::close_open:
    return ")(";
  }
  return "";
}

BracketSequence::BracketSequence(int n, std::vector<Gap> gaps) : n_(n), gaps_(std::move(gaps)) {
  if (n_ < 1)
    throw std::invalid_argument("sequence needs n >= 1");
  if (static_cast<int>(gaps_.size()) != n_ + 1)
    throw std::invalid_argument("sequence needs exactly n + 1 gaps");
  if (has_close(gaps_.front()))
    throw std::invalid_argument("')' before the first integer");
  if (has_open(gaps_.back()))
    throw std::invalid_argument("'(' after the last integer");

  // Right brackets in left-to-right order get labels r, r-1, ..., 1.
  std::vector<BracketPair> by_open;
  std::vector<std::size_t> stack;
  std::vector<std::size_t> close_order;
  auto close_one = [&](int after) {
    if (stack.empty())
      throw std::invalid_argument("unmatched ')' after " + std::to_string(after));
    by_open[stack.back()].low = after;
    close_order.push_back(stack.back());
    stack.pop_back();
  };

  for (int k = n_; k >= 1; --k) {
    const Gap before = gap_before(k);
    if (has_close(before))
      close_one(k + 1);
    if (has_open(before)) {
      BracketPair p;
      p.high = k;
      p.parent = stack.empty() ? -1 : static_cast<int>(stack.back());
      by_open.push_back(p);
      stack.push_back(by_open.size() - 1);
    }
    if (stack.empty())
      throw std::invalid_argument("integer " + std::to_string(k) + " is not inside any pair");
    by_open[stack.back()].members.push_back(k);
  }
  if (has_close(gaps_.back()))
    close_one(1);
  if (!stack.empty())
    throw std::invalid_argument("unclosed '('");

  const std::size_t r = by_open.size();
  std::vector<int> label_of(r);
  for (std::size_t i = 0; i < close_order.size(); ++i)
    label_of[close_order[i]] = static_cast<int>(r - i);
  pairs_.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    BracketPair p = by_open[i];
    p.label = label_of[i];
    p.parent = p.parent < 0 ? 0 : label_of[static_cast<std::size_t>(p.parent)];
    pairs_[static_cast<std::size_t>(p.label - 1)] = std::move(p);
  }
}

bool BracketSequence::opens_before(int k) const { return has_open(gap_before(k)); }
bool BracketSequence::closes_after(int k) const { return has_close(gap_after(k)); }

int BracketSequence::top_level_count() const {
  return static_cast<int>(std::count_if(pairs_.begin(), pairs_.end(), [](const BracketPair &p) { return p.parent == 0; }));
}

std::string BracketSequence::to_string(bool labels) const {
  // Labels of the brackets in each gap, read from the pair spans.
  std::vector<int> open_label(static_cast<std::size_t>(n_) + 2, 0);
  std::vector<int> close_label(static_cast<std::size_t>(n_) + 2, 0);
  for (const auto &p : pairs_) {
    open_label[static_cast<std::size_t>(p.high)] = p.label;
    close_label[static_cast<std::size_t>(p.low)] = p.label;
  }
  const bool spaced = n_ >= 10 || labels;
  std::string out;
  auto put = [&](const std::string &token) {
    if (spaced && !out.empty())
      out += ' ';
    out += token;
  };
  for (int k = n_; k >= 1; --k) {
    if (k < n_ && closes_after(k + 1))
      put(labels ? ")_" + std::to_string(close_label[static_cast<std::size_t>(k + 1)]) : ")");
    if (opens_before(k))
      put(labels ? "(_" + std::to_string(open_label[static_cast<std::size_t>(k)]) : "(");
    put(std::to_string(k));
  }
  if (closes_after(1))
    put(labels ? ")_" + std::to_string(close_label[1]) : ")");

  if (n_ >= 10 && !labels) {
    // Brackets hug their neighbours; only integers are separated.
    std::string compact;
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i] == ' ') {
        const bool digit_left = i > 0 && std::isdigit(static_cast<unsigned char>(out[i - 1]));
        const bool digit_right = i + 1 < out.size() && std::isdigit(static_cast<unsigned char>(out[i + 1]));
        if (!(digit_left && digit_right))
          continue;
      }
      compact += out[i];
    }
    return compact;
  }
  return out;
}

std::string BracketSequence::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  auto gaps = nlohmann::json::array();
  for (Gap g : gaps_)
    gaps.push_back(std::string(gap_text(g)));
  j["gaps"] = gaps;
  auto pairs = nlohmann::json::array();
  for (const auto &p : pairs_)
    pairs.push_back({{"label", p.label}, {"members", p.members}});
  j["pairs"] = pairs;
  return j.dump();
}

namespace {

std::string descending_digits(int n) {
  std::string out;
  for (int k = n; k >= 1; --k)
    out += std::to_string(k);
  return out;
}

} // namespace

BracketSequence parse_sequence(std::string_view text) {
  std::string digits;
  std::vector<std::size_t> digit_pos;
  std::vector<std::pair<char, std::size_t>> brackets;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      digit_pos.push_back(i);
    } else if (c == '(' || c == ')') {
      brackets.emplace_back(c, i);
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  if (digits.empty())
    throw ParseError("no integers", text.size());

  int n = 0;
  std::size_t best_match = 0;
  for (int cand = 1;; ++cand) {
    const std::string expected = descending_digits(cand);
    if (expected == digits) {
      n = cand;
      break;
    }
    std::size_t common = 0;
    while (common < expected.size() && common < digits.size() && expected[common] == digits[common])
      ++common;
    best_match = std::max(best_match, common);
    if (expected.size() >= digits.size()) {
      const std::size_t at = best_match < digit_pos.size() ? digit_pos[best_match] : text.size();
      throw ParseError("integers must read n, n-1, ..., 1", at);
    }
  }

  // last_digit[k] is the text position of the final digit of integer k.
  std::vector<std::size_t> last_digit(static_cast<std::size_t>(n) + 1);
  std::size_t d = 0;
  for (int k = n; k >= 1; --k) {
    const std::size_t len = std::to_string(k).size();
    for (std::size_t t = 1; t < len; ++t)
      if (digit_pos[d + t] != digit_pos[d + t - 1] + 1)
        throw ParseError("integer " + std::to_string(k) + " is split", digit_pos[d + t]);
    d += len;
    last_digit[static_cast<std::size_t>(k)] = digit_pos[d - 1];
  }

  // Gap g holds brackets after integer n-g+1 (or the start) and before n-g.
  std::vector<std::string> slot(static_cast<std::size_t>(n) + 1);
  std::vector<std::vector<std::size_t>> slot_pos(static_cast<std::size_t>(n) + 1);
  for (auto [c, pos] : brackets) {
    std::size_t g = 0;
    while (g < static_cast<std::size_t>(n) && last_digit[static_cast<std::size_t>(n) - g] < pos)
      ++g;
    slot[g] += c;
    slot_pos[g].push_back(pos);
  }

  std::vector<Gap> gaps;
  for (std::size_t g = 0; g <= static_cast<std::size_t>(n); ++g) {
    const std::string &s = slot[g];
    const auto &ps = slot_pos[g];
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] == '(' && s[i + 1] == ')')
        throw ParseError("empty bracket pair", ps[i + 1]);
    }
    const auto opens = std::count(s.begin(), s.end(), '(');
    const auto closes = std::count(s.begin(), s.end(), ')');
    if (closes > 1)
      throw ParseError("two right brackets in one gap", ps[1]);
    if (opens > 1)
      throw ParseError("two left brackets in one gap", ps[1]);
    if (g == 0 && closes > 0)
      throw ParseError("unmatched ')'", ps[0]);
    if (g == static_cast<std::size_t>(n) && opens > 0)
      throw ParseError("unclosed '('", ps.back());
    gaps.push_back(make_gap(closes == 1, opens == 1));
  }

  // Balance and coverage, with positions.
  int depth = 0;
  for (int k = n; k >= 1; --k) {
    const std::size_t g = static_cast<std::size_t>(n - k);
    if (has_close(gaps[g]) && --depth < 0)
      throw ParseError("unmatched ')'", slot_pos[g].front());
    if (has_open(gaps[g]))
      ++depth;
    if (depth == 0)
      throw ParseError("integer " + std::to_string(k) + " is not inside any pair", last_digit[static_cast<std::size_t>(k)]);
  }
  if (has_close(gaps.back()))
    --depth;
  if (depth != 0)
    throw ParseError(depth > 0 ? "unclosed '('" : "unmatched ')'", text.size());

  return BracketSequence(n, std::move(gaps));
}

Permutation decode(const BracketSequence &seq) {
  const int n = seq.n();
  std::vector<bool> consumed(static_cast<std::size_t>(n) + 1, false);
  std::vector<Permutation::Cycle> cycles;
  for (int label = seq.pair_count(); label >= 1; --label) {
    const BracketPair &p = seq.pair(label);
    Permutation::Cycle cycle;
    for (int k = p.high; k >= p.low; --k) {
      if (!consumed[static_cast<std::size_t>(k)]) {
        consumed[static_cast<std::size_t>(k)] = true;
        cycle.push_back(k);
      }
    }
    cycles.push_back(std::move(cycle));
  }
  return Permutation::from_cycles(cycles);
}

BracketSequence encode(const Permutation &perm) {
  if (!satisfies_star(perm))
    throw std::invalid_argument("permutation " + perm.to_string() + " does not satisfy condition (*)");
  const int n = perm.size();
  std::vector<bool> open_before(static_cast<std::size_t>(n) + 2, false);
  std::vector<bool> close_after(static_cast<std::size_t>(n) + 2, false);
  for (const auto &cycle : perm.cycles()) {
    const auto [lo, hi] = std::minmax_element(cycle.begin(), cycle.end());
    open_before[static_cast<std::size_t>(*hi)] = true;
    close_after[static_cast<std::size_t>(*lo)] = true;
  }
  std::vector<Gap> gaps;
  gaps.push_back(make_gap(false, open_before[static_cast<std::size_t>(n)]));
  for (int k = n - 1; k >= 1; --k)
    gaps.push_back(make_gap(close_after[static_cast<std::size_t>(k + 1)], open_before[static_cast<std::size_t>(k)]));
  gaps.push_back(make_gap(close_after[1], false));
  return BracketSequence(n, std::move(gaps));
}

bool PairClassification::is_adjacent(int a, int b) const {
  return std::any_of(adjacent.begin(), adjacent.end(), [&](const auto &e) {
    return (e.first == a && e.second == b) || (e.first == b && e.second == a);
  });
}

PairClassification classify_pairs(const BracketSequence &seq) {
  PairClassification out;
  const auto &pairs = seq.pairs();
  for (const auto &p : pairs) {
    const bool has_child =
        std::any_of(pairs.begin(), pairs.end(), [&](const BracketPair &q) { return q.parent == p.label; });
    out.pairs.push_back({p.label, p.parent == 0, p.parent != 0, !has_child});
  }
  for (const auto &left : pairs)
    for (const auto &right : pairs)
      if (right.high == left.low - 1)
        out.adjacent.emplace_back(left.label, right.label);
  std::sort(out.adjacent.begin(), out.adjacent.end());
  return out;
}

namespace {

// Window bits around an integer k, in reading order.
enum WindowBit : unsigned { close_prev = 8, open_here = 4, close_here = 2, open_next = 1 };

unsigned window_bits(std::string_view pattern) {
  const auto k = pattern.find('k');
  unsigned bits = 0;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (i < k)
      bits |= pattern[i] == ')' ? close_prev : open_here;
    else if (i > k)
      bits |= pattern[i] == ')' ? close_here : open_next;
  }
  return bits;
}

// Row 15 of the published table repeats the left column of row 14; the row
// pairing 5 <-> 15 fixes it to ")k)(" -> ")k".
constexpr std::array<std::pair<std::string_view, std::string_view>, 16> kDualRows{{
    {"k", ")(k)("},
    {"k)", ")(k)"},
    {"(k", "(k)("},
    {"k(", ")(k("},
    {")k", ")k)("},
    {"(k)", "(k)"},
    {")k(", ")k("},
    {"(k(", "(k("},
    {")k)", ")k)"},
    {")(k", "k)("},
    {"k)(", ")(k"},
    {")(k)", "k)"},
    {"(k)(", "(k"},
    {")(k(", "k("},
    {")k)(", ")k"},
    {")(k)(", "k"},
}};

std::array<unsigned, 16> build_dual_table() {
  std::array<unsigned, 16> table{};
  std::array<bool, 16> seen{};
  for (const auto &[from, to] : kDualRows) {
    const unsigned in = window_bits(from);
    if (seen[in])
      throw std::logic_error("dual table has two rows for one window");
    seen[in] = true;
    table[in] = window_bits(to);
  }
  return table;
}

const std::array<unsigned, 16> &dual_table() {
  static const std::array<unsigned, 16> table = build_dual_table();
  return table;
}

} // namespace

BracketSequence dual(const BracketSequence &seq) {
  const int n = seq.n();
  const auto &table = dual_table();
  // -1 unset, else 0/1; each shared slot is written from both sides.
  std::vector<int> open_before(static_cast<std::size_t>(n) + 2, -1);
  std::vector<int> close_after(static_cast<std::size_t>(n) + 2, -1);
  auto assign = [](int &slot, bool value) {
    const int v = value ? 1 : 0;
    if (slot != -1 && slot != v)
      throw std::logic_error("dual table rows disagree on a shared bracket slot");
    slot = v;
  };

  for (int k = n; k >= 1; --k) {
    unsigned in = 0;
    if (k < n && seq.closes_after(k + 1))
      in |= close_prev;
    if (seq.opens_before(k))
      in |= open_here;
    if (seq.closes_after(k))
      in |= close_here;
    if (k > 1 && seq.opens_before(k - 1))
      in |= open_next;
    const unsigned out = table[in];
    if (k < n)
      assign(close_after[static_cast<std::size_t>(k + 1)], out & close_prev);
    else if (out & close_prev)
      throw std::logic_error("dual produced ')' before the first integer");
    assign(open_before[static_cast<std::size_t>(k)], out & open_here);
    assign(close_after[static_cast<std::size_t>(k)], out & close_here);
    if (k > 1)
      assign(open_before[static_cast<std::size_t>(k - 1)], out & open_next);
    else if (out & open_next)
      throw std::logic_error("dual produced '(' after the last integer");
  }

  std::vector<Gap> gaps;
  gaps.push_back(make_gap(false, open_before[static_cast<std::size_t>(n)] == 1));
  for (int k = n - 1; k >= 1; --k)
    gaps.push_back(make_gap(close_after[static_cast<std::size_t>(k + 1)] == 1, open_before[static_cast<std::size_t>(k)] == 1));
  gaps.push_back(make_gap(close_after[1] == 1, false));
  return BracketSequence(n, std::move(gaps));
}

BracketSequence dual_gap_toggle(const BracketSequence &seq) {
  std::vector<Gap> gaps = seq.gaps();
  for (Gap &g : gaps) {
    if (g == Gap::empty)
      g = Gap::close_open;
    else if (g == Gap::close_open)
      g = Gap::empty;
  }
  return BracketSequence(seq.n(), std::move(gaps));
}

namespace {

void enumerate_gaps(int n, int r, std::size_t g, int depth, int opened, std::vector<Gap> &gaps,
                    std::vector<BracketSequence> &out) {
  const std::size_t last = static_cast<std::size_t>(n);
  if (g == last) {
    // Trailing gap: only ")" closes the final pair.
    if (depth == 1 && opened == r) {
      gaps[g] = Gap::close;
      out.emplace_back(n, gaps);
    }
    return;
  }
  for (Gap candidate : {Gap::empty, Gap::open, Gap::close, Gap::close_open}) {
    if (g == 0 && has_close(candidate))
      continue;
    const int closed = has_close(candidate) ? 1 : 0;
    const int opening = has_open(candidate) ? 1 : 0;
    if (depth - closed < 0 || opened + opening > r)
      continue;
    const int next_depth = depth - closed + opening;
    if (next_depth == 0) // the next integer would be uncovered
      continue;
    gaps[g] = candidate;
    enumerate_gaps(n, r, g + 1, next_depth, opened + opening, gaps, out);
  }
}

} // namespace

std::vector<BracketSequence> enumerate(int n, int r, int max_n) {
  if (n < 1)
    throw std::invalid_argument("enumerate needs n >= 1");
  check_bound("enumerate", n, max_n);
  std::vector<BracketSequence> out;
  if (r < 1 || r > n)
    return out;
  std::vector<Gap> gaps(static_cast<std::size_t>(n) + 1, Gap::empty);
  enumerate_gaps(n, r, 0, 0, 0, gaps, out);
  return out;
}

std::vector<BracketSequence> enumerate_single_top(int n, int r, int max_n) {
  std::vector<BracketSequence> out;
  for (auto &seq : enumerate(n, r, max_n))
    if (seq.top_level_count() == 1)
      out.push_back(std::move(seq));
  return out;
}

BracketSequence lemma402_up(const BracketSequence &seq) {
  const int v = seq.pair(1).high;
  std::vector<Gap> gaps;
  gaps.reserve(seq.gaps().size() + 1);
  gaps.push_back(Gap::open);
  for (Gap g : seq.gaps())
    gaps.push_back(g);
  // Old gap before v sits one further along after prepending n+1.
  Gap &moved = gaps[static_cast<std::size_t>(seq.n() - v) + 1];
  moved = make_gap(has_close(moved), false);
  return BracketSequence(seq.n() + 1, std::move(gaps));
}

BracketSequence lemma402_down(const BracketSequence &seq) {
  if (seq.n() < 2)
    throw std::invalid_argument("lemma402_down needs n >= 2");
  if (seq.top_level_count() != 1)
    throw std::invalid_argument("lemma402_down needs exactly one top-level pair");
  const BracketPair &top = seq.pair(1);
  // members are descending and start with n+1; v is the next direct member.
  const int v = top.members.at(1);
  std::vector<Gap> gaps(seq.gaps().begin() + 1, seq.gaps().end());
  const int n = seq.n() - 1;
  Gap &target = gaps[static_cast<std::size_t>(n - v)];
  target = make_gap(has_close(target), true);
  return BracketSequence(n, std::move(gaps));
}

} // namespace woplab
