#include "woplab/p_polynomial.hpp"

#include "woplab/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace woplab {

int weight(const Monomial &m) { return std::accumulate(m.begin(), m.end(), 0); }

bool GradedLexOrder::operator()(const Monomial &a, const Monomial &b) const {
  const int wa = weight(a);
  const int wb = weight(b);
  if (wa != wb)
    return wa < wb;
  return a < b;
}

PPolynomial PPolynomial::constant(const mpq_class &c) { return from_monomial({}, c); }

PPolynomial PPolynomial::from_monomial(Monomial m, const mpq_class &c) {
  PPolynomial out;
  out.add_term(std::move(m), c);
  return out;
}

PPolynomial PPolynomial::p(int k) {
  if (k < 1)
    throw std::invalid_argument("p index must be positive");
  return from_monomial({k});
}

void PPolynomial::add_term(Monomial m, const mpq_class &c) {
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

std::optional<int> PPolynomial::weight() const {
  if (terms_.empty())
    return std::nullopt;
  const int w = woplab::weight(terms_.begin()->first);
  for (const auto &[m, c] : terms_)
    if (woplab::weight(m) != w)
      return std::nullopt;
  return w;
}

int PPolynomial::max_weight() const {
  // Terms are graded, so the last one has the largest weight.
  return terms_.empty() ? 0 : woplab::weight(terms_.rbegin()->first);
}

std::map<int, PPolynomial> PPolynomial::homogeneous_components() const {
  std::map<int, PPolynomial> out;
  for (const auto &[m, c] : terms_)
    out[woplab::weight(m)].terms_.emplace(m, c);
  return out;
}

PPolynomial PPolynomial::derivative(int k) const {
  PPolynomial out;
  for (const auto &[m, c] : terms_) {
    const auto [lo, hi] = std::equal_range(m.begin(), m.end(), k);
    const auto multiplicity = hi - lo;
    if (multiplicity == 0)
      continue;
    Monomial reduced = m;
    reduced.erase(reduced.begin() + (lo - m.begin()));
    out.add_term(std::move(reduced), c * static_cast<long>(multiplicity));
  }
  return out;
}

PPolynomial &PPolynomial::operator+=(const PPolynomial &other) {
  for (const auto &[m, c] : other.terms_)
    add_term(m, c);
  return *this;
}

PPolynomial &PPolynomial::operator-=(const PPolynomial &other) {
  for (const auto &[m, c] : other.terms_)
    add_term(m, -c);
  return *this;
}

PPolynomial &PPolynomial::operator*=(const mpq_class &scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, c] : terms_)
    c *= scalar;
  return *this;
}

PPolynomial operator*(const PPolynomial &a, const PPolynomial &b) {
  PPolynomial out;
  for (const auto &[ma, ca] : a.terms())
    for (const auto &[mb, cb] : b.terms()) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(std::move(m), ca * cb);
    }
  return out;
}

namespace {

class PolyParser {
public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  PPolynomial parse() {
    PPolynomial out;
    skip_space();
    if (at_end())
      throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      auto [m, c] = term();
      out.add_term(std::move(m), negative ? mpq_class(-c) : c);
      skip_space();
      if (at_end())
        break;
      if (peek() != '+' && peek() != '-')
        throw ParseError(std::string("expected '+' or '-', found '") + peek() + "'", pos_);
      negative = peek() == '-';
      ++pos_;
    }
    return out;
  }

private:
  std::pair<Monomial, mpq_class> term() {
    skip_space();
    mpq_class coeff = 1;
    Monomial m;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = rational();
      skip_space();
      if (at_end() || peek() != '*')
        return {m, coeff};
      ++pos_;
    }
    factor(m);
    while (true) {
      skip_space();
      if (at_end() || peek() != '*')
        break;
      ++pos_;
      factor(m);
    }
    return {m, coeff};
  }

  void factor(Monomial &m) {
    skip_space();
    if (at_end() || peek() != 'p')
      throw ParseError("expected factor 'p<k>'", pos_);
    ++pos_;
    const std::size_t at = pos_;
    const long index = integer();
    if (index < 1)
      throw ParseError("p index must be positive", at);
    long exponent = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      exponent = integer();
    }
    for (long e = 0; e < exponent; ++e)
      m.push_back(static_cast<int>(index));
  }

  mpq_class rational() {
    const std::size_t start = pos_;
    std::string digits = digit_run();
    skip_space();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_space();
      const std::size_t den_at = pos_;
      std::string den = digit_run();
      mpz_class d(den);
      if (d == 0)
        throw ParseError("zero denominator", den_at);
      mpq_class q(mpz_class(digits), d);
      q.canonicalize();
      return q;
    }
    (void)start;
    return mpq_class(mpz_class(digits));
  }

  long integer() {
    const std::size_t at = pos_;
    const std::string digits = digit_run();
    if (digits.size() > 6)
      throw ParseError("integer too large", at);
    return std::stol(digits);
  }

  std::string digit_run() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (start == pos_)
      throw ParseError("expected integer", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial &m) {
  std::string out;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i])
      ++j;
    if (!out.empty())
      out += '*';
    out += "p" + std::to_string(m[i]);
    if (j - i > 1)
      out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

} // namespace

PPolynomial parse_p(std::string_view text) { return PolyParser(text).parse(); }

std::string print_p(const PPolynomial &poly) {
  if (poly.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[m, c] : poly.terms()) {
    const bool negative = c < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const mpq_class magnitude = abs(c);
    if (m.empty()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1)
        out += magnitude.get_str() + "*";
      out += monomial_text(m);
    }
  }
  return out;
}

namespace {

void partitions(int remaining, int max_part, Monomial &current, std::vector<Monomial> &out) {
  if (remaining == 0) {
    Monomial sorted(current.rbegin(), current.rend());
    out.push_back(std::move(sorted));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

// Applies one template to one monomial. Derivative blocks first pick which
// p-index they differentiate (with multiplicity), then every composition of
// that index over the block's k-variables is summed.
class TemplateApplication {
public:
  TemplateApplication(const SummationTemplate &t, const Monomial &m, const mpq_class &c, PPolynomial &out)
      : t_(t), coeff_(c), out_(out), k_(static_cast<std::size_t>(t.n()) + 1, 0) {
    for (int v : m) {
      if (values_.empty() || values_.back().first != v)
        values_.emplace_back(v, 0);
      ++values_.back().second;
    }
    chosen_.resize(t.derivative_blocks.size());
  }

  void run() { choose_derivatives(0, 1); }

private:
  void choose_derivatives(std::size_t block, long multiplicity) {
    if (block == chosen_.size()) {
      mpq_class c = coeff_ * multiplicity;
      for (int idx : chosen_)
        c *= idx;
      remaining_.clear();
      for (const auto &[v, count] : values_)
        remaining_.insert(remaining_.end(), static_cast<std::size_t>(count), v);
      scale_ = c;
      compose(0, 0, chosen_.empty() ? 0 : chosen_[0]);
      return;
    }
    for (auto &[v, count] : values_) {
      if (count == 0)
        continue;
      const long available = count;
      --count;
      chosen_[block] = v;
      choose_derivatives(block + 1, multiplicity * available);
      ++count;
    }
  }

  // Distributes chosen_[block] over the k-variables of that block.
  void compose(std::size_t block, std::size_t slot, int left) {
    const auto &blocks = t_.derivative_blocks.blocks;
    if (block == blocks.size()) {
      emit();
      return;
    }
    const auto &members = blocks[block];
    const int v = members[slot];
    if (slot + 1 == members.size()) {
      k_[static_cast<std::size_t>(v)] = left;
      const int next_left = block + 1 < blocks.size() ? chosen_[block + 1] : 0;
      compose(block + 1, 0, next_left);
      return;
    }
    const int later = static_cast<int>(members.size() - slot - 1);
    for (int part = 1; part <= left - later; ++part) {
      k_[static_cast<std::size_t>(v)] = part;
      compose(block, slot + 1, left - part);
    }
  }

  void emit() {
    Monomial m = remaining_;
    for (const auto &cycle : t_.cycle_blocks.blocks) {
      int index = 0;
      for (int v : cycle)
        index += k_[static_cast<std::size_t>(v)];
      m.push_back(index);
    }
    out_.add_term(std::move(m), scale_);
  }

  const SummationTemplate &t_;
  mpq_class coeff_;
  PPolynomial &out_;
  std::vector<std::pair<int, int>> values_; // distinct index, multiplicity
  std::vector<int> chosen_;
  std::vector<int> k_;
  Monomial remaining_;
  mpq_class scale_;
};

} // namespace

std::vector<Monomial> monomials_of_weight(int w) {
  std::vector<Monomial> out;
  if (w < 0)
    return out;
  Monomial current;
  partitions(w, w, current, out);
  std::sort(out.begin(), out.end(), GradedLexOrder{});
  return out;
}

PPolynomial apply_template(const SummationTemplate &t, const PPolynomial &f) {
  PPolynomial out;
  const std::size_t order = t.derivative_blocks.size();
  for (const auto &[m, c] : f.terms()) {
    if (m.size() < order)
      continue;
    TemplateApplication(t, m, c, out).run();
  }
  return out;
}

PPolynomial apply_W(int n, const PPolynomial &f, int max_n) {
  PPolynomial out;
  for (const auto &t : decompose_W(n, max_n))
    out += apply_template(t, f);
  out *= mpq_class(1, n);
  return out;
}

} // namespace woplab
