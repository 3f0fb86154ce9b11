#include "woplab/matrix_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace woplab {

XPolynomial::XPolynomial(int N) : N_(N) {
  if (N < 1)
    throw std::invalid_argument("matrix size must be positive");
}

XPolynomial XPolynomial::constant(int N, const mpq_class &c) {
  XPolynomial out(N);
  out.add_term({}, c);
  return out;
}

XPolynomial XPolynomial::variable(int N, int a, int b) {
  XPolynomial out(N);
  out.add_term({out.code(a, b)}, 1);
  return out;
}

int XPolynomial::code(int a, int b) const {
  if (a < 1 || a > N_ || b < 1 || b > N_)
    throw std::out_of_range("matrix index outside 1.." + std::to_string(N_));
  return (a - 1) * N_ + (b - 1);
}

void XPolynomial::add_term(XMonomial m, const mpq_class &c) {
  if (c == 0)
    return;
  std::sort(m.begin(), m.end());
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

namespace {

void require_same_size(const XPolynomial &a, const XPolynomial &b) {
  if (a.N() != b.N())
    throw std::invalid_argument("matrix sizes differ");
}

} // namespace

XPolynomial &XPolynomial::operator+=(const XPolynomial &other) {
  require_same_size(*this, other);
  for (const auto &[m, c] : other.terms_)
    add_term(m, c);
  return *this;
}

XPolynomial &XPolynomial::operator-=(const XPolynomial &other) {
  require_same_size(*this, other);
  for (const auto &[m, c] : other.terms_)
    add_term(m, -c);
  return *this;
}

XPolynomial &XPolynomial::operator*=(const mpq_class &scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, c] : terms_)
    c *= scalar;
  return *this;
}

XPolynomial operator*(const XPolynomial &a, const XPolynomial &b) {
  require_same_size(a, b);
  XPolynomial out(a.N());
  for (const auto &[ma, ca] : a.terms())
    for (const auto &[mb, cb] : b.terms()) {
      XPolynomial::XMonomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(std::move(m), ca * cb);
    }
  return out;
}

std::string XPolynomial::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[m, c] : terms_) {
    const bool negative = c < 0;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    const mpq_class magnitude = abs(c);
    if (m.empty()) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1)
      out += magnitude.get_str() + "*";
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i])
        ++j;
      if (i > 0)
        out += '*';
      out += "X" + std::to_string(row(m[i])) + std::to_string(col(m[i]));
      if (j - i > 1)
        out += "^" + std::to_string(j - i);
      i = j;
    }
  }
  return out;
}

XPolynomial matrix_power_entry(int N, int k, int a, int b) {
  if (k < 0)
    throw std::invalid_argument("matrix power must be non-negative");
  XPolynomial out(N);
  out.code(a, b); // bounds check
  if (k == 0) {
    if (a == b)
      out.add_term({}, 1);
    return out;
  }
  // Sum over paths a = i_0 -> i_1 -> ... -> i_k = b.
  std::vector<int> path(static_cast<std::size_t>(k) + 1, 1);
  path.front() = a;
  path.back() = b;
  while (true) {
    XPolynomial::XMonomial m;
    for (int s = 0; s < k; ++s)
      m.push_back(out.code(path[static_cast<std::size_t>(s)], path[static_cast<std::size_t>(s) + 1]));
    out.add_term(std::move(m), 1);
    int s = k - 1;
    while (s >= 1 && path[static_cast<std::size_t>(s)] == N)
      path[static_cast<std::size_t>(s--)] = 1;
    if (s < 1)
      break;
    ++path[static_cast<std::size_t>(s)];
  }
  return out;
}

XPolynomial p_to_x(const PPolynomial &f, int N) {
  std::map<int, XPolynomial> traces;
  auto trace = [&](int k) -> const XPolynomial & {
    auto it = traces.find(k);
    if (it == traces.end()) {
      XPolynomial t(N);
      for (int a = 1; a <= N; ++a)
        t += matrix_power_entry(N, k, a, a);
      it = traces.emplace(k, std::move(t)).first;
    }
    return it->second;
  };
  XPolynomial out(N);
  for (const auto &[m, c] : f.terms()) {
    XPolynomial term = XPolynomial::constant(N, c);
    for (int k : m)
      term = term * trace(k);
    out += term;
  }
  return out;
}

XPolynomial D_apply(int a, int b, const XPolynomial &g) {
  return normal_ordered_apply({{a, b}}, g);
}

XPolynomial composed_apply(const std::vector<std::pair<int, int>> &pairs, const XPolynomial &g) {
  XPolynomial out = g;
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it)
    out = D_apply(it->first, it->second, out);
  return out;
}

namespace {

// Differentiating a monomial by prod d/dX_{b_i e_i} picks an ordered tuple of
// distinct occurrences whose rows are b_1..b_m; multiplying by X_{a_i e_i}
// then puts row a_i on occurrence i.
class NormalOrdered {
public:
  NormalOrdered(const std::vector<std::pair<int, int>> &pairs, const XPolynomial &g, XPolynomial &out)
      : pairs_(pairs), g_(g), out_(out), used_(), hits_(pairs.size()) {}

  void run() {
    for (const auto &[m, c] : g_.terms()) {
      if (m.size() < pairs_.size())
        continue;
      monomial_ = &m;
      coeff_ = &c;
      used_.assign(m.size(), false);
      choose(0);
    }
  }

private:
  void choose(std::size_t i) {
    const auto &m = *monomial_;
    if (i == pairs_.size()) {
      XPolynomial::XMonomial next = m;
      for (std::size_t t = 0; t < hits_.size(); ++t)
        next[hits_[t]] = g_.code(pairs_[t].first, g_.col(m[hits_[t]]));
      out_.add_term(std::move(next), *coeff_);
      return;
    }
    for (std::size_t pos = 0; pos < m.size(); ++pos) {
      if (used_[pos] || g_.row(m[pos]) != pairs_[i].second)
        continue;
      used_[pos] = true;
      hits_[i] = pos;
      choose(i + 1);
      used_[pos] = false;
    }
  }

  const std::vector<std::pair<int, int>> &pairs_;
  const XPolynomial &g_;
  XPolynomial &out_;
  const XPolynomial::XMonomial *monomial_ = nullptr;
  const mpq_class *coeff_ = nullptr;
  std::vector<bool> used_;
  std::vector<std::size_t> hits_;
};

void check_oracle_args(int n, const PPolynomial &f, int N, int max_n) {
  if (n < 1)
    throw std::invalid_argument("tr(D^n) needs n >= 1");
  check_bound("tr_Dn_apply", n, max_n);
  if (N < f.max_weight() + n)
    throw std::invalid_argument("matrix size " + std::to_string(N) + " is below weight + n = " +
                                std::to_string(f.max_weight() + n));
}

} // namespace

XPolynomial normal_ordered_apply(const std::vector<std::pair<int, int>> &pairs, const XPolynomial &g) {
  for (const auto &[a, b] : pairs) {
    g.code(a, b);
  }
  XPolynomial out(g.N());
  NormalOrdered(pairs, g, out).run();
  return out;
}

XPolynomial tr_Dn_apply(int n, const PPolynomial &f, int N, int max_n) {
  check_oracle_args(n, f, N, max_n);
  const XPolynomial g = p_to_x(f, N);
  XPolynomial out(N);
  std::vector<int> a(static_cast<std::size_t>(n) + 1, 1); // a[1..n]
  while (true) {
    std::vector<std::pair<int, int>> pairs;
    pairs.emplace_back(a[1], a[static_cast<std::size_t>(n)]);
    for (int m = n; m >= 2; --m)
      pairs.emplace_back(a[static_cast<std::size_t>(m)], a[static_cast<std::size_t>(m) - 1]);
    out += normal_ordered_apply(pairs, g);
    int i = n;
    while (i >= 1 && a[static_cast<std::size_t>(i)] == N)
      a[static_cast<std::size_t>(i--)] = 1;
    if (i < 1)
      break;
    ++a[static_cast<std::size_t>(i)];
  }
  return out;
}

namespace {

// Expands each p-monomial into its trace words while remembering which word
// and position every entry came from, so each term of the normal-ordered
// expansion can be traced back to the hits that produced it.
class PatternExpansion {
public:
  PatternExpansion(int n, int N, std::map<Permutation, XPolynomial> &out) : n_(n), N_(N), out_(out) {}

  void add(const Monomial &m, const mpq_class &c) {
    coeff_ = c;
    word_.clear();
    start_.clear();
    length_.clear();
    int offset = 0;
    for (int k : m) {
      for (int q = 0; q < k; ++q)
        word_.push_back(static_cast<int>(start_.size()));
      start_.push_back(offset);
      length_.push_back(k);
      offset += k;
    }
    if (static_cast<int>(word_.size()) < n_)
      return;
    index_.assign(word_.size(), 1);
    while (true) {
      expand_hits();
      std::size_t i = index_.size();
      while (i > 0 && index_[i - 1] == N_)
        index_[--i] = 1;
      if (i == 0)
        break;
      ++index_[i - 1];
    }
  }

private:
  int row(std::size_t pos) const { return index_[pos]; }
  int col(std::size_t pos) const {
    const int w = word_[pos];
    const int local = static_cast<int>(pos) - start_[static_cast<std::size_t>(w)];
    const int next = (local + 1) % length_[static_cast<std::size_t>(w)];
    return index_[static_cast<std::size_t>(start_[static_cast<std::size_t>(w)] + next)];
  }
  int code(int a, int b) const { return (a - 1) * N_ + (b - 1); }

  void expand_hits() {
    hits_.assign(static_cast<std::size_t>(n_), 0);
    used_.assign(word_.size(), false);
    choose(0);
  }

  void choose(std::size_t t) {
    if (t == hits_.size()) {
      emit();
      return;
    }
    for (std::size_t pos = 0; pos < word_.size(); ++pos) {
      if (used_[pos])
        continue;
      used_[pos] = true;
      hits_[t] = pos;
      choose(t + 1);
      used_[pos] = false;
    }
  }

  void emit() {
    XPolynomial::XMonomial m;
    m.reserve(word_.size());
    for (std::size_t pos = 0; pos < word_.size(); ++pos)
      m.push_back(code(row(pos), col(pos)));
    // Hit t takes the row freed by hit t - 1 (cyclically).
    const std::size_t n = hits_.size();
    for (std::size_t t = 0; t < n; ++t) {
      const std::size_t prev = hits_[(t + n - 1) % n];
      m[hits_[t]] = code(row(prev), col(hits_[t]));
    }
    const Permutation beta = pattern();
    auto it = out_.find(beta);
    if (it == out_.end())
      it = out_.emplace(beta, XPolynomial(N_)).first;
    it->second.add_term(std::move(m), coeff_);
  }

  Permutation pattern() const {
    const std::size_t n = hits_.size();
    std::vector<int> gamma(n);
    for (std::size_t t = 0; t < n; ++t) {
      const int w = word_[hits_[t]];
      const int len = length_[static_cast<std::size_t>(w)];
      const int base = start_[static_cast<std::size_t>(w)];
      const int here = static_cast<int>(hits_[t]) - base;
      int best = len + 1;
      std::size_t next = t;
      for (std::size_t u = 0; u < n; ++u) {
        if (word_[hits_[u]] != w)
          continue;
        int d = (static_cast<int>(hits_[u]) - base - here + len) % len;
        if (d == 0)
          d = len;
        if (d < best) {
          best = d;
          next = u;
        }
      }
      gamma[t] = static_cast<int>(next) + 1;
    }
    // Reversing the hit labels turns (shift o gamma, gamma) into
    // (beta, beta o shift) for beta = r o gamma o shift o r.
    const int size = static_cast<int>(n);
    std::vector<int> images(n);
    for (int s = 1; s <= size; ++s) {
      const int shifted = (size - s + 1) % size + 1;
      images[static_cast<std::size_t>(s - 1)] = size + 1 - gamma[static_cast<std::size_t>(shifted - 1)];
    }
    return Permutation(std::move(images));
  }

  int n_;
  int N_;
  std::map<Permutation, XPolynomial> &out_;
  mpq_class coeff_;
  std::vector<int> word_;  // trace word of each position
  std::vector<int> start_; // first position of each word
  std::vector<int> length_;
  std::vector<int> index_; // matrix index at each position
  std::vector<std::size_t> hits_;
  std::vector<bool> used_;
};

} // namespace

std::map<Permutation, XPolynomial> tr_Dn_apply_by_pattern(int n, const PPolynomial &f, int N, int max_n) {
  check_oracle_args(n, f, N, max_n);
  std::map<Permutation, XPolynomial> out;
  PatternExpansion expansion(n, N, out);
  for (const auto &[m, c] : f.terms())
    expansion.add(m, c);
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

bool equal_as_p(const XPolynomial &g, const PPolynomial &f) { return g == p_to_x(f, g.N()); }

} // namespace woplab
