#include "woplab/permutation.hpp"

#include "woplab/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace woplab {

namespace {

std::string cycle_text(const Permutation::Cycle &cycle) {
  std::string out = "(";
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i > 0)
      out += ' ';
    out += std::to_string(cycle[i]);
  }
  out += ')';
  return out;
}

} // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  if (n < 1)
    throw std::invalid_argument("permutation must act on at least one point");
  std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
  for (int image : images_) {
    if (image < 1 || image > n)
      throw std::invalid_argument("image " + std::to_string(image) + " outside 1.." + std::to_string(n));
    if (hit[static_cast<std::size_t>(image)])
      throw std::invalid_argument("image " + std::to_string(image) + " repeated");
    hit[static_cast<std::size_t>(image)] = true;
  }

  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)])
      continue;
    Cycle cycle;
    for (int v = start; !seen[static_cast<std::size_t>(v)]; v = (*this)(v)) {
      seen[static_cast<std::size_t>(v)] = true;
      cycle.push_back(v);
    }
    cycles_.push_back(std::move(cycle));
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(const std::vector<Cycle> &cycles) {
  int n = 0;
  for (const auto &cycle : cycles) {
    if (cycle.empty())
      throw std::invalid_argument("empty cycle");
    for (int v : cycle) {
      if (v < 1)
        throw std::invalid_argument("cycle entries must be positive");
      n = std::max(n, v);
    }
  }
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  for (const auto &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int &slot = images[static_cast<std::size_t>(cycle[i] - 1)];
      if (slot != 0)
        throw std::invalid_argument("integer " + std::to_string(cycle[i]) + " repeated");
      slot = cycle[(i + 1) % cycle.size()];
    }
  }
  for (int i = 1; i <= n; ++i)
    if (images[static_cast<std::size_t>(i - 1)] == 0)
      throw std::invalid_argument("integer " + std::to_string(i) + " missing");
  return Permutation(std::move(images));
}

int Permutation::preimage(int i) const {
  auto it = std::find(images_.begin(), images_.end(), i);
  if (it == images_.end())
    throw std::out_of_range("point " + std::to_string(i) + " outside 1.." + std::to_string(size()));
  return static_cast<int>(it - images_.begin()) + 1;
}

std::string Permutation::to_string() const {
  std::string out;
  for (const auto &cycle : cycles_)
    out += cycle_text(cycle);
  return out;
}

std::string Permutation::to_descending_string() const {
  std::vector<Cycle> rotated = cycles_;
  for (auto &cycle : rotated)
    std::rotate(cycle.begin(), std::max_element(cycle.begin(), cycle.end()), cycle.end());
  std::sort(rotated.begin(), rotated.end(),
            [](const Cycle &a, const Cycle &b) { return a.front() > b.front(); });
  std::string out;
  for (const auto &cycle : rotated)
    out += cycle_text(cycle);
  return out;
}

namespace {

struct Token {
  std::string digits;
  std::size_t pos;
};

Permutation permutation_from_tokens(const std::vector<std::vector<Token>> &tokens, std::size_t text_size) {
  std::vector<Permutation::Cycle> cycles;
  std::vector<std::pair<int, std::size_t>> seen; // value, position
  for (const auto &cycle : tokens) {
    cycles.emplace_back();
    for (const auto &[digits, pos] : cycle) {
      if (digits.size() > 6)
        throw ParseError("integer too large", pos);
      const int value = std::stoi(digits);
      if (value == 0)
        throw ParseError("integers must be positive", pos);
      cycles.back().push_back(value);
      seen.emplace_back(value, pos);
    }
  }
  int n = 0;
  for (auto [v, pos] : seen)
    n = std::max(n, v);
  std::vector<bool> present(static_cast<std::size_t>(n) + 1, false);
  for (auto [v, pos] : seen) {
    if (present[static_cast<std::size_t>(v)])
      throw ParseError("integer " + std::to_string(v) + " repeated", pos);
    present[static_cast<std::size_t>(v)] = true;
  }
  for (int v = 1; v <= n; ++v)
    if (!present[static_cast<std::size_t>(v)])
      throw ParseError("integer " + std::to_string(v) + " missing", text_size);
  return Permutation::from_cycles(cycles);
}

} // namespace

Permutation parse_permutation(std::string_view text) {
  std::vector<std::vector<Token>> tokens;
  bool open = false;
  bool multi_digit = false;
  std::size_t open_at = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(') {
      if (open)
        throw ParseError("nested '('", i);
      open = true;
      open_at = i;
      tokens.emplace_back();
      ++i;
    } else if (c == ')') {
      if (!open)
        throw ParseError("unmatched ')'", i);
      if (tokens.back().empty())
        throw ParseError("empty cycle", i);
      open = false;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!open)
        throw ParseError("integer outside a cycle", i);
      const std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      tokens.back().push_back({std::string(text.substr(start, i - start)), start});
      multi_digit = multi_digit || i - start > 1;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  if (open)
    throw ParseError("unclosed '('", open_at);
  if (tokens.empty())
    throw ParseError("no cycles", 0);

  try {
    return permutation_from_tokens(tokens, text.size());
  } catch (const ParseError &) {
    if (!multi_digit)
      throw;
    // Compact notation such as "(321)": one digit per point. A valid reading
    // with multi-digit integers needs 1 and 10 both present, which the
    // digit-wise reading would repeat, so at most one reading succeeds.
    std::vector<std::vector<Token>> split;
    for (const auto &cycle : tokens) {
      split.emplace_back();
      for (const auto &[digits, pos] : cycle)
        for (std::size_t d = 0; d < digits.size(); ++d)
          split.back().push_back({digits.substr(d, 1), pos + d});
    }
    try {
      return permutation_from_tokens(split, text.size());
    } catch (const ParseError &) {
    }
    throw;
  }
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Quiver to_quiver(const Permutation &perm) {
  Quiver q{perm.size(), {}};
  for (int i = 1; i <= perm.size(); ++i)
    q.arrows.push_back({i, perm(i)});
  return q;
}

HatQuiver to_hat_quiver(const Permutation &perm) {
  const int n = perm.size();
  HatQuiver q{n, {}};
  for (int s = 2; s <= n; ++s)
    q.arrows.push_back({s, perm(s)});
  q.arrows.push_back({n + 1, perm(1)});
  return q;
}

int HatQuiver::source_into(int v) const {
  for (const Arrow &a : arrows)
    if (a.target == v)
      return a.source;
  throw std::out_of_range("no arrow into vertex " + std::to_string(v));
}

std::vector<int> HatQuiver::chain() const {
  std::vector<int> out{n + 1};
  int v = n + 1;
  while (v != 1) {
    auto it = std::find_if(arrows.begin(), arrows.end(), [v](const Arrow &a) { return a.source == v; });
    if (it == arrows.end() || static_cast<int>(out.size()) > n + 1)
      throw std::logic_error("malformed hat quiver");
    v = it->target;
    out.push_back(v);
  }
  return out;
}

bool HatQuiver::on_chain(int v) const {
  const auto c = chain();
  return std::find(c.begin(), c.end(), v) != c.end();
}

Permutation from_hat_quiver(const HatQuiver &quiver) {
  const int n = quiver.n;
  if (n < 1 || static_cast<int>(quiver.arrows.size()) != n)
    throw std::invalid_argument("hat quiver must have exactly n arrows");
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  std::vector<bool> source_seen(static_cast<std::size_t>(n) + 2, false);
  for (const Arrow &a : quiver.arrows) {
    if (a.source < 2 || a.source > n + 1 || a.target < 1 || a.target > n)
      throw std::invalid_argument("hat quiver arrow out of range");
    if (source_seen[static_cast<std::size_t>(a.source)])
      throw std::invalid_argument("hat quiver vertex with two outgoing arrows");
    source_seen[static_cast<std::size_t>(a.source)] = true;
    const int from = a.source == n + 1 ? 1 : a.source;
    images[static_cast<std::size_t>(from - 1)] = a.target;
  }
  return Permutation(std::move(images));
}

Projection project(const Permutation &beta) {
  const int m = beta.size(); // m = n + 1
  if (m < 2)
    throw std::invalid_argument("project needs a permutation of at least two points");
  const int n = m - 1;
  std::vector<int> images(static_cast<std::size_t>(n));

  if (beta(1) == m) {
    // The arrow out of n+2 is also the arrow into n+1: drop it.
    for (int s = 2; s <= n; ++s)
      images[static_cast<std::size_t>(s - 1)] = beta(s);
    images[0] = beta(m);
    return {Permutation(std::move(images)), 0};
  }

  // a: n+2 -> beta(1), b: src -> n+1; replace both by src -> beta(1).
  const int i = beta(1);
  const int src = beta.preimage(m);
  auto hat_target = [&](int s) { return s == src ? i : beta(s); };
  for (int s = 2; s <= n; ++s)
    images[static_cast<std::size_t>(s - 1)] = hat_target(s);
  images[0] = hat_target(m);
  return {Permutation(std::move(images)), i};
}

Permutation lift(const Permutation &alpha, int j) {
  const int n = alpha.size();
  if (j < 0 || j > n)
    throw std::out_of_range("lift index " + std::to_string(j) + " outside 0.." + std::to_string(n));

  std::vector<int> images(static_cast<std::size_t>(n) + 1);
  if (j == 0) {
    for (int s = 2; s <= n; ++s)
      images[static_cast<std::size_t>(s - 1)] = alpha(s);
    images[0] = n + 1;
    images[static_cast<std::size_t>(n)] = alpha(1);
    return Permutation(std::move(images));
  }

  // Hat-quiver arrows leave 2..n+1; the arrow into j leaves `cut`.
  const int cut = alpha.preimage(j) == 1 ? n + 1 : alpha.preimage(j);
  for (int s = 2; s <= n; ++s)
    images[static_cast<std::size_t>(s - 1)] = alpha(s);
  images[static_cast<std::size_t>(n)] = alpha(1);
  images[static_cast<std::size_t>(cut - 1)] = n + 1; // cut -> n+1
  images[0] = j;                                      // n+2 -> j, renamed 1 -> j
  return Permutation(std::move(images));
}

LiftChain lift_chain(const Permutation &perm) {
  std::vector<int> reversed;
  Permutation current = perm;
  while (current.size() > 1) {
    auto [alpha, j] = project(current);
    reversed.push_back(j);
    current = std::move(alpha);
  }
  return {std::vector<int>(reversed.rbegin(), reversed.rend())};
}

Permutation rebuild(const LiftChain &chain) {
  Permutation current = Permutation::identity(1);
  for (int j : chain.js)
    current = lift(current, j);
  return current;
}

} // namespace woplab
