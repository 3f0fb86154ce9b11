#pragma once

#include "woplab/limits.hpp"
#include "woplab/summation.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace woplab {

/// A monomial in p_1, p_2, ...: the multiset of its indices, sorted
/// ascending. p_1^2 p_3 is {1, 1, 3}; the empty vector is the constant 1.
using Monomial = std::vector<int>;

/// p_k has weight k.
int weight(const Monomial &m);

/// Graded-lex: lower weight first, then lexicographic on the sorted indices.
struct GradedLexOrder {
  bool operator()(const Monomial &a, const Monomial &b) const;
};

/// Exact polynomial in C[p_1, p_2, ...] with rational coefficients.
/// No zero coefficient is ever stored.
class PPolynomial {
public:
  using Terms = std::map<Monomial, mpq_class, GradedLexOrder>;

  PPolynomial() = default;
  static PPolynomial constant(const mpq_class &c);
  static PPolynomial from_monomial(Monomial m, const mpq_class &c = 1);
  /// p_k
  static PPolynomial p(int k);

  /// Adds c * m; `m` need not be sorted.
  void add_term(Monomial m, const mpq_class &c);

  const Terms &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// The common weight of all terms; empty for zero or mixed weights.
  std::optional<int> weight() const;
  /// Largest term weight (0 for the zero polynomial).
  int max_weight() const;
  std::map<int, PPolynomial> homogeneous_components() const;

  /// d/dp_k
  PPolynomial derivative(int k) const;

  PPolynomial &operator+=(const PPolynomial &other);
  PPolynomial &operator-=(const PPolynomial &other);
  PPolynomial &operator*=(const mpq_class &scalar);

  friend PPolynomial operator+(PPolynomial a, const PPolynomial &b) { return a += b; }
  friend PPolynomial operator-(PPolynomial a, const PPolynomial &b) { return a -= b; }
  friend PPolynomial operator*(PPolynomial a, const mpq_class &s) { return a *= s; }
  friend PPolynomial operator*(const mpq_class &s, PPolynomial a) { return a *= s; }
  friend PPolynomial operator*(const PPolynomial &a, const PPolynomial &b);

  bool operator==(const PPolynomial &other) const { return terms_ == other.terms_; }

private:
  Terms terms_;
};

/// Grammar (whitespace allowed between tokens):
///   poly     := ["+"|"-"] term (("+"|"-") term)*
///   term     := rational ["*" factors] | factors
///   factors  := factor ("*" factor)*
///   factor   := "p" int ["^" int]
///   rational := int ["/" int]
/// Throws ParseError with the offending position.
PPolynomial parse_p(std::string_view text);

/// Canonical text: graded-lex order, explicit "*", e.g. "3*p1*p2 - 1/2*p3".
std::string print_p(const PPolynomial &poly);

/// All monomials of the given weight (partitions of w), in graded-lex order.
std::vector<Monomial> monomials_of_weight(int w);

/// Applies the template's operator sum (without 1/n) to F exactly. Only the
/// finitely many k-tuples whose derivative indices occur in F contribute.
PPolynomial apply_template(const SummationTemplate &t, const PPolynomial &f);

/// W([n]) F = 1/n * sum over beta in S_n of apply_template(FS_beta, F).
PPolynomial apply_W(int n, const PPolynomial &f, int max_n = kMaxDecomposeN + 1);

} // namespace woplab
