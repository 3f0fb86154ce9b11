#include "cli.hpp"

#include "verify.hpp"

#include "woplab/counting.hpp"
#include "woplab/error.hpp"
#include "woplab/limits.hpp"
#include "woplab/noncross.hpp"
#include "woplab/p_polynomial.hpp"
#include "woplab/permutation.hpp"
#include "woplab/summation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace woplab::cli {

namespace {

enum class Format { plain, latex, json };

struct Options {
  bool json = false;
  bool latex = false;
  bool plain = false;
  std::optional<int> max_n;

  Format format() const { return json ? Format::json : latex ? Format::latex : Format::plain; }

  int bound(int fallback) const {
    if (max_n)
      return *max_n;
    if (auto env = max_n_from_env())
      return *env;
    return fallback;
  }
};

// A usage problem detected after CLI11 accepted the arguments.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void require_plain_or_json(const Options &opts, const std::string &what) {
  if (opts.latex)
    throw UsageError(what + " has no LaTeX output");
}

std::pair<int, int> parse_range(const std::string &text) {
  try {
    const auto dots = text.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int n = std::stoi(text, &used);
      if (used != text.size())
        throw std::invalid_argument(text);
      return {n, n};
    }
    const std::string lo_text = text.substr(0, dots);
    const std::string hi_text = text.substr(dots + 2);
    const int lo = std::stoi(lo_text, &used);
    if (used != lo_text.size())
      throw std::invalid_argument(text);
    const int hi = std::stoi(hi_text, &used);
    if (used != hi_text.size())
      throw std::invalid_argument(text);
    if (lo > hi)
      throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error &) {
    throw UsageError("bad range '" + text + "', expected n or lo..hi");
  }
}

std::string latex_line(const SummationTemplate &t) {
  std::string line;
  if (t.n() > 1)
    line += "\\frac{1}{" + std::to_string(t.n()) + "}";
  line += render(t, RenderFormat::latex);
  line += " & FS_{" + t.perm.to_string() + "}";
  return line;
}

std::string plain_line(const SummationTemplate &t) {
  const Degree d = degree(t);
  std::string line = t.perm.to_string() + "  degree " + std::to_string(d.total()) + " = " +
                     std::to_string(d.polynomial) + " + " + std::to_string(d.differential);
  if (const auto os = os_type(t))
    line += "  OS(" + std::to_string(os->r) + "," + std::to_string(os->s) + ")";
  line += "  " + render(t, RenderFormat::plain);
  return line;
}

void cmd_decompose(const Options &opts, int n, std::ostream &out) {
  const auto templates = decompose_W(n, opts.bound(kMaxDecomposeN));
  switch (opts.format()) {
  case Format::plain:
    for (const auto &t : templates)
      out << plain_line(t) << '\n';
    break;
  case Format::latex:
    for (const auto &t : templates)
      out << latex_line(t) << '\n';
    break;
  case Format::json:
    out << "[\n";
    for (std::size_t i = 0; i < templates.size(); ++i)
      out << render(templates[i], RenderFormat::json) << (i + 1 < templates.size() ? ",\n" : "\n");
    out << "]\n";
    break;
  }
}

void cmd_apply(const Options &opts, int n, const std::string &poly, const std::string &perm_text, std::ostream &out) {
  require_plain_or_json(opts, "apply");
  const int bound = opts.bound(kMaxDecomposeN);
  check_bound("apply", n, bound);
  if (n < 1)
    throw UsageError("apply needs n >= 1");
  const PPolynomial f = parse_p(poly);
  PPolynomial result;
  if (perm_text.empty()) {
    result = apply_W(n, f, bound);
  } else {
    const Permutation beta = parse_permutation(perm_text);
    if (beta.size() != n)
      throw UsageError("--perm must be a permutation of 1.." + std::to_string(n));
    result = apply_template(summation_of(beta), f) * mpq_class(1, n);
  }
  if (opts.format() == Format::json) {
    nlohmann::json j{{"n", n}, {"input", print_p(f)}, {"result", print_p(result)}};
    if (!perm_text.empty())
      j["perm"] = parse_permutation(perm_text).to_string();
    out << j.dump() << '\n';
  } else {
    out << print_p(result) << '\n';
  }
}

nlohmann::json perm_json(const Permutation &p) {
  return {{"cycles", p.cycles()}, {"text", p.to_string()}, {"descending", p.to_descending_string()}};
}

void print_sequence(const Options &opts, const BracketSequence &s, bool labels, std::ostream &out) {
  if (opts.format() == Format::json)
    out << s.to_json() << '\n';
  else
    out << s.to_string(labels) << '\n';
}

void cmd_seq(const Options &opts, const std::string &action, const std::vector<std::string> &args, bool labels,
             std::ostream &out) {
  require_plain_or_json(opts, "seq");
  const bool json = opts.format() == Format::json;
  auto want = [&](std::size_t count, const char *usage) {
    if (args.size() != count)
      throw UsageError(std::string("usage: seq ") + usage);
  };
  const int bound = opts.bound(kMaxEnumerateN);
  auto parse_bounded = [&](const std::string &text) {
    BracketSequence s = parse_sequence(text);
    check_bound("seq", s.n(), bound);
    return s;
  };

  if (action == "decode") {
    want(1, "decode <sequence>");
    const Permutation p = decode(parse_bounded(args[0]));
    out << (json ? perm_json(p).dump() : p.to_descending_string()) << '\n';
  } else if (action == "encode") {
    want(1, "encode <permutation>");
    const Permutation p = parse_permutation(args[0]);
    check_bound("seq", p.size(), bound);
    print_sequence(opts, encode(p), labels, out);
  } else if (action == "dual") {
    want(1, "dual <sequence>");
    print_sequence(opts, dual(parse_bounded(args[0])), labels, out);
  } else if (action == "classify") {
    want(1, "classify <sequence>");
    const BracketSequence s = parse_bounded(args[0]);
    const PairClassification c = classify_pairs(s);
    if (json) {
      nlohmann::json j;
      j["sequence"] = s.to_string(true);
      auto pairs = nlohmann::json::array();
      for (const auto &p : c.pairs)
        pairs.push_back({{"label", p.label},
                         {"members", s.pair(p.label).members},
                         {"top_level", p.top_level},
                         {"embedded", p.embedded},
                         {"bottom_level", p.bottom_level}});
      j["pairs"] = pairs;
      auto adjacent = nlohmann::json::array();
      for (const auto &[a, b] : c.adjacent)
        adjacent.push_back({a, b});
      j["adjacent"] = adjacent;
      out << j.dump() << '\n';
    } else {
      out << s.to_string(true) << '\n';
      for (const auto &p : c.pairs) {
        const BracketPair &bp = s.pair(p.label);
        out << "pair " << p.label << " [" << bp.high << ".." << bp.low << "]";
        if (p.top_level)
          out << " top-level";
        if (p.embedded)
          out << " embedded";
        if (p.bottom_level)
          out << " bottom-level";
        out << '\n';
      }
      for (const auto &[a, b] : c.adjacent)
        out << "adjacent " << a << ' ' << b << '\n';
    }
  } else if (action == "enumerate") {
    want(2, "enumerate <n> <r>");
    int n = 0;
    int r = 0;
    try {
      n = std::stoi(args[0]);
      r = std::stoi(args[1]);
    } catch (const std::logic_error &) {
      throw UsageError("enumerate needs integers n and r");
    }
    if (n < 1)
      throw UsageError("enumerate needs n >= 1");
    const auto seqs = enumerate(n, r, bound);
    if (json) {
      auto arr = nlohmann::json::array();
      for (const auto &s : seqs)
        arr.push_back(s.to_string(labels));
      out << arr.dump() << '\n';
    } else {
      for (const auto &s : seqs)
        out << s.to_string(labels) << '\n';
    }
  } else {
    throw UsageError("unknown seq action '" + action + "' (decode, encode, dual, classify, enumerate)");
  }
}

int cmd_count(const Options &opts, int n, std::ostream &out) {
  require_plain_or_json(opts, "count");
  const CountReport report = verify_counts(n, opts.bound(kMaxDecomposeN));
  out << (opts.format() == Format::json ? report.to_json() + "\n" : report.to_text());
  return report.ok ? 0 : 1;
}

int cmd_verify(const Options &opts, const std::string &suite_text, const std::string &range, std::ostream &out) {
  require_plain_or_json(opts, "verify");
  const Suite suite = parse_suite(suite_text);
  const auto [lo, hi] = parse_range(range);
  if (lo < 1)
    throw UsageError("verify ranges start at 1");
  check_bound(std::string("verify ") + std::string(suite_name(suite)), hi, opts.bound(default_bound(suite)));

  std::vector<Check> checks;
  for (int n = lo; n <= hi; ++n) {
    auto part = run_suite(suite, n);
    checks.insert(checks.end(), part.begin(), part.end());
  }
  if (suite == Suite::oracle) {
    auto part = oracle_identities();
    checks.insert(checks.end(), part.begin(), part.end());
  }
  const auto failed = std::count_if(checks.begin(), checks.end(), [](const Check &c) { return !c.pass; });

  if (opts.format() == Format::json) {
    auto arr = nlohmann::json::array();
    for (const auto &c : checks)
      arr.push_back({{"claim", c.claim}, {"pass", c.pass}});
    nlohmann::json j{{"suite", suite_name(suite)}, {"from", lo}, {"to", hi}, {"checks", arr}, {"ok", failed == 0}};
    out << j.dump() << '\n';
  } else {
    for (const auto &c : checks)
      out << (c.pass ? "PASS " : "FAIL ") << c.claim << '\n';
    out << "verify " << suite_name(suite) << ' ' << range << ": " << (checks.size() - static_cast<std::size_t>(failed))
        << '/' << checks.size() << " passed\n";
  }
  return failed == 0 ? 0 : 1;
}

void cmd_lift(const Options &opts, const std::string &perm_text, int j, std::ostream &out) {
  require_plain_or_json(opts, "lift");
  const Permutation alpha = parse_permutation(perm_text);
  check_bound("lift", alpha.size() + 1, opts.bound(kMaxEnumerateN));
  const Permutation beta = lift(alpha, j);
  if (opts.format() == Format::json)
    out << nlohmann::json{{"alpha", alpha.to_string()}, {"j", j}, {"beta", beta.to_string()}}.dump() << '\n';
  else
    out << beta.to_string() << '\n';
}

void cmd_project(const Options &opts, const std::string &perm_text, std::ostream &out) {
  require_plain_or_json(opts, "project");
  const Permutation beta = parse_permutation(perm_text);
  check_bound("project", beta.size(), opts.bound(kMaxEnumerateN));
  if (beta.size() < 2)
    throw UsageError("project needs a permutation of at least 2 points");
  const Projection p = project(beta);
  if (opts.format() == Format::json)
    out << nlohmann::json{{"beta", beta.to_string()}, {"alpha", p.alpha.to_string()}, {"j", p.j}}.dump() << '\n';
  else
    out << p.alpha.to_string() << ' ' << p.j << '\n';
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Summations of the W-operators W([n]) and their non-crossing combinatorics", "woplab"};
  app.require_subcommand(1, 1);

  Options opts;
  auto *json_flag = app.add_flag("--json", opts.json, "JSON output");
  auto *latex_flag = app.add_flag("--latex", opts.latex, "LaTeX output");
  auto *plain_flag = app.add_flag("--plain", opts.plain, "plain text output (default)");
  json_flag->excludes(latex_flag, plain_flag);
  latex_flag->excludes(plain_flag);
  int max_n = 0;
  auto *max_n_opt = app.add_option("--max-n", max_n, "raise or lower the size bound of the subcommand")
                        ->check(CLI::PositiveNumber);

  int n = 0;
  int r_or_j = 0;
  std::string text;
  std::string perm_text;
  std::string range;
  std::vector<std::string> seq_args;
  std::string action;
  bool labels = false;

  auto *decompose = app.add_subcommand("decompose", "list the n! summations of W([n])");
  decompose->add_option("n", n, "rank")->required();

  auto *apply = app.add_subcommand("apply", "apply W([n]), or one summation with --perm, to a polynomial in p_k");
  apply->add_option("n", n, "rank")->required();
  apply->add_option("polynomial", text, "e.g. \"p1^3 + 1/2*p2*p1\"")->required();
  apply->add_option("--perm", perm_text, "apply only the summation of this permutation");

  auto *seq = app.add_subcommand("seq", "non-crossing bracket sequences");
  seq->add_option("action", action, "decode, encode, dual, classify or enumerate")->required();
  seq->add_option("args", seq_args, "sequence, permutation, or n r");
  seq->add_flag("--labels", labels, "write pair labels as (_k and )_k");

  auto *count = app.add_subcommand("count", "Narayana and Catalan counts at rank n");
  count->add_option("n", n, "rank")->required();

  auto *verify = app.add_subcommand("verify", "run a verification suite over a range of ranks");
  verify->add_option("suite", text, "counts, star, oracle, dual or lift")->required();
  verify->add_option("range", range, "n or lo..hi")->required();

  auto *lift_cmd = app.add_subcommand("lift", "lift a permutation of S_n to S_{n+1}");
  lift_cmd->add_option("perm", text, "permutation in cycle notation")->required();
  lift_cmd->add_option("j", r_or_j, "lift index 0..n")->required();

  auto *project_cmd = app.add_subcommand("project", "project a permutation of S_{n+1} to S_n and its lift index");
  project_cmd->add_option("perm", text, "permutation in cycle notation")->required();

  for (auto *sub : app.get_subcommands({}))
    sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  if (max_n_opt->count() > 0)
    opts.max_n = max_n;

  try {
    if (decompose->parsed()) {
      cmd_decompose(opts, n, out);
    } else if (apply->parsed()) {
      cmd_apply(opts, n, text, perm_text, out);
    } else if (seq->parsed()) {
      cmd_seq(opts, action, seq_args, labels, out);
    } else if (count->parsed()) {
      return cmd_count(opts, n, out);
    } else if (verify->parsed()) {
      return cmd_verify(opts, text, range, out);
    } else if (lift_cmd->parsed()) {
      cmd_lift(opts, text, r_or_j, out);
    } else if (project_cmd->parsed()) {
      cmd_project(opts, text, out);
    }
  } catch (const ParseError &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceLimitError &e) {
    err << "error: " << e.what() << " (use --max-n or WOPLAB_MAX_N to raise it)\n";
    return 2;
  } catch (const std::logic_error &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

} // namespace woplab::cli
