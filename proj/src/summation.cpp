#include "woplab/summation.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace woplab {

SetPartition SetPartition::from_labels(const std::vector<int> &labels) {
  std::map<int, std::vector<int>> grouped;
  for (std::size_t i = 0; i < labels.size(); ++i)
    grouped[labels[i]].push_back(static_cast<int>(i) + 1);
  SetPartition out;
  for (auto &[label, block] : grouped)
    out.blocks.push_back(std::move(block));
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const auto &a, const auto &b) { return a.front() < b.front(); });
  return out;
}

std::size_t SetPartition::block_of(int v) const {
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (std::binary_search(blocks[b].begin(), blocks[b].end(), v))
      return b;
  throw std::out_of_range("element " + std::to_string(v) + " not in partition");
}

SetPartition SetPartition::relabeled(const std::vector<int> &map) const {
  std::size_t n = 0;
  for (const auto &block : blocks)
    n += block.size();
  std::vector<int> labels(n);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int v : blocks[b])
      labels.at(static_cast<std::size_t>(map.at(static_cast<std::size_t>(v - 1)) - 1)) = static_cast<int>(b);
  return from_labels(labels);
}

SummationTemplate summation_of(const Permutation &beta) {
  const LiftChain chain = lift_chain(beta);
  // labels[v - 1]: derivative block of point v, named by its first member.
  std::vector<int> labels{1};
  for (std::size_t step = 0; step < chain.js.size(); ++step) {
    const int next = static_cast<int>(step) + 2;
    const int j = chain.js[step];
    labels.push_back(j == 0 ? next : labels[static_cast<std::size_t>(j - 1)]);
  }

  std::vector<int> cycle_labels(static_cast<std::size_t>(beta.size()));
  for (std::size_t c = 0; c < beta.cycles().size(); ++c)
    for (int v : beta.cycles()[c])
      cycle_labels[static_cast<std::size_t>(v - 1)] = static_cast<int>(c);

  return {beta, SetPartition::from_labels(cycle_labels), SetPartition::from_labels(labels)};
}

Degree degree(const SummationTemplate &t) {
  return {static_cast<int>(t.cycle_blocks.size()), static_cast<int>(t.derivative_blocks.size())};
}

std::optional<OsType> os_type(const SummationTemplate &t) {
  const Degree d = degree(t);
  if (d.total() != t.n() + 1)
    return std::nullopt;
  return OsType{d.polynomial, d.differential};
}

bool satisfies_star1(const Permutation &perm) {
  for (const auto &cycle : perm.cycles()) {
    if (cycle.size() < 2)
      continue;
    int ascents = 0;
    for (int v : cycle)
      if (v < perm(v))
        ++ascents;
    if (ascents != 1)
      return false;
  }
  return true;
}

namespace {

// Every element of `a` lies outside the closed range spanned by `b`.
bool outside_range(const std::vector<int> &a, const std::vector<int> &b) {
  const auto [lo, hi] = std::minmax_element(b.begin(), b.end());
  return std::none_of(a.begin(), a.end(), [&](int m) { return *lo < m && m < *hi; });
}

} // namespace

bool satisfies_star2(const Permutation &perm) {
  const auto &cycles = perm.cycles();
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j)
      if (!outside_range(cycles[i], cycles[j]) && !outside_range(cycles[j], cycles[i]))
        return false;
  return true;
}

bool satisfies_star(const Permutation &perm) { return satisfies_star1(perm) && satisfies_star2(perm); }

std::vector<SummationTemplate> decompose_W(int n, int max_n) {
  if (n < 1)
    throw std::invalid_argument("decompose_W needs n >= 1");
  check_bound("decompose_W", n, max_n);
  std::vector<SummationTemplate> out;
  for (const Permutation &beta : all_permutations(n))
    out.push_back(summation_of(beta));
  return out;
}

RenderFormat parse_render_format(std::string_view name) {
  if (name == "plain")
    return RenderFormat::plain;
  if (name == "latex")
    return RenderFormat::latex;
  if (name == "json")
    return RenderFormat::json;
  throw std::invalid_argument("unknown render format '" + std::string(name) + "'");
}

namespace {

std::string index_sum(const std::vector<int> &block, bool latex) {
  std::string out;
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i > 0)
      out += '+';
    out += latex ? "i_" + std::to_string(block[i]) : "k" + std::to_string(block[i]);
  }
  return out;
}

std::string render_text(const SummationTemplate &t, bool latex) {
  const auto &derivs = t.derivative_blocks.blocks;
  std::string out = latex ? "\\sum_{" : "sum_{";
  for (int v = 1; v <= t.n(); ++v) {
    if (v > 1)
      out += ',';
    out += latex ? "i_" + std::to_string(v) : "k" + std::to_string(v);
  }
  out += latex ? " \\geq 1} " : "} ";

  for (const auto &block : derivs) {
    const std::string sum = index_sum(block, latex);
    out += block.size() == 1 ? sum : "(" + sum + ")";
    out += ' ';
  }
  for (const auto &block : t.cycle_blocks.blocks)
    out += "p_{" + index_sum(block, latex) + "}";

  const std::size_t order = derivs.size();
  if (latex) {
    out += "\\frac{\\partial";
    if (order > 1)
      out += "^" + std::to_string(order);
    out += "}{";
    for (std::size_t b = 0; b < order; ++b)
      out += "\\partial p_{" + index_sum(derivs[b], true) + "}";
    out += "}";
  } else {
    out += " d";
    if (order > 1)
      out += "^" + std::to_string(order);
    out += "/";
    for (const auto &block : derivs)
      out += "dp_{" + index_sum(block, false) + "}";
  }
  return out;
}

} // namespace

std::string render(const SummationTemplate &t, RenderFormat format) {
  switch (format) {
  case RenderFormat::plain:
    return render_text(t, false);
  case RenderFormat::latex:
    return render_text(t, true);
  case RenderFormat::json: {
    const Degree d = degree(t);
    const auto os = os_type(t);
    nlohmann::json j;
    j["n"] = t.n();
    j["perm"] = t.perm.cycles();
    j["cycle_blocks"] = t.cycle_blocks.blocks;
    j["derivative_blocks"] = t.derivative_blocks.blocks;
    j["dP"] = d.polynomial;
    j["dD"] = d.differential;
    j["degree"] = d.total();
    j["os_type"] = os ? nlohmann::json::array({os->r, os->s}) : nlohmann::json(nullptr);
    j["latex"] = render_text(t, true);
    return j.dump();
  }
  }
  throw std::invalid_argument("unknown render format");
}

} // namespace woplab
