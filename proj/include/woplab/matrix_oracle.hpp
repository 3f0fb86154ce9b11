#pragma once

#include "woplab/limits.hpp"
#include "woplab/p_polynomial.hpp"
#include "woplab/permutation.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace woplab {

/// Polynomial in the entries X_ab (1 <= a, b <= N) of a generic N x N
/// matrix. A monomial is the sorted multiset of variable codes
/// (a - 1) * N + (b - 1).
class XPolynomial {
public:
  using XMonomial = std::vector<int>;
  using Terms = std::map<XMonomial, mpq_class>;

  explicit XPolynomial(int N);

  static XPolynomial constant(int N, const mpq_class &c);
  /// X_ab
  static XPolynomial variable(int N, int a, int b);

  int N() const noexcept { return N_; }
  const Terms &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  int code(int a, int b) const;
  int row(int code) const noexcept { return code / N_ + 1; }
  int col(int code) const noexcept { return code % N_ + 1; }

  void add_term(XMonomial m, const mpq_class &c);

  XPolynomial &operator+=(const XPolynomial &other);
  XPolynomial &operator-=(const XPolynomial &other);
  XPolynomial &operator*=(const mpq_class &scalar);

  friend XPolynomial operator+(XPolynomial a, const XPolynomial &b) { return a += b; }
  friend XPolynomial operator-(XPolynomial a, const XPolynomial &b) { return a -= b; }
  friend XPolynomial operator*(XPolynomial a, const mpq_class &s) { return a *= s; }
  friend XPolynomial operator*(const XPolynomial &a, const XPolynomial &b);

  bool operator==(const XPolynomial &other) const { return N_ == other.N_ && terms_ == other.terms_; }

  /// E.g. "X11^2 + 2*X12*X21 + X22^2".
  std::string to_string() const;

private:
  int N_;
  Terms terms_;
};

/// (X^k)_ab; X^0 is the identity.
XPolynomial matrix_power_entry(int N, int k, int a, int b);

/// Substitutes p_k -> tr(X^k).
XPolynomial p_to_x(const PPolynomial &f, int N);

/// D_ab G = sum_c X_ac dG/dX_bc.
XPolynomial D_apply(int a, int b, const XPolynomial &g);

/// D_{a_1 b_1} ... D_{a_m b_m} applied one after another, rightmost first.
XPolynomial composed_apply(const std::vector<std::pair<int, int>> &pairs, const XPolynomial &g);

/// :D_{a_1 b_1} ... D_{a_m b_m}: G = sum_e prod X_{a_i e_i}
/// prod d/dX_{b_i e_i} G, every X left of every derivative.
XPolynomial normal_ordered_apply(const std::vector<std::pair<int, int>> &pairs, const XPolynomial &g);

/// sum over a_1..a_n in {1..N} of :D_{a_1 a_n} D_{a_n a_{n-1}} ... D_{a_2 a_1}:
/// applied to p_to_x(F); the 1/n is left to the caller. Throws
/// std::invalid_argument when N < max_weight(F) + n and ResourceLimitError
/// when n exceeds `max_n`.
XPolynomial tr_Dn_apply(int n, const PPolynomial &f, int N, int max_n = kMaxOracleN);

/// The same sum split by the summation that produced each contribution.
/// Each term of the expansion differentiates n entries of the trace words of
/// F; for hit t let gamma(t) be the next hit along the same trace word. The
/// contribution is filed under beta = r o gamma o shift o r, where
/// shift(t) = t + 1 mod n and r(t) = n + 1 - t, so that its sum equals
/// apply_template(summation_of(beta), F) after trace substitution.
std::map<Permutation, XPolynomial> tr_Dn_apply_by_pattern(int n, const PPolynomial &f, int N,
                                                          int max_n = kMaxOracleN);

/// True iff g == p_to_x(f, g.N()).
bool equal_as_p(const XPolynomial &g, const PPolynomial &f);

} // namespace woplab
