#include "oracles.hpp"

#include "woplab/error.hpp"
#include "woplab/matrix_oracle.hpp"

#include <doctest.h>

using namespace woplab;

namespace {

PPolynomial P(const char *text) { return parse_p(text); }

XPolynomial X(int N, int a, int b) { return XPolynomial::variable(N, a, b); }

} // namespace

TEST_CASE("trace substitution") {
  CHECK(p_to_x(P("p1"), 2) == X(2, 1, 1) + X(2, 2, 2));
  const XPolynomial p2 = X(2, 1, 1) * X(2, 1, 1) + X(2, 1, 2) * X(2, 2, 1) * mpq_class(2) + X(2, 2, 2) * X(2, 2, 2);
  CHECK(p_to_x(P("p2"), 2) == p2);
  CHECK(p_to_x(P("p2"), 2).to_string() == "X11^2 + 2*X12*X21 + X22^2");
  CHECK(p_to_x(P("5"), 3) == XPolynomial::constant(3, 5));
  CHECK(p_to_x(PPolynomial(), 3).is_zero());
}

TEST_CASE("matrix powers") {
  CHECK(matrix_power_entry(3, 0, 2, 2) == XPolynomial::constant(3, 1));
  CHECK(matrix_power_entry(3, 0, 1, 2).is_zero());
  CHECK(matrix_power_entry(2, 1, 1, 2) == X(2, 1, 2));
  CHECK(matrix_power_entry(2, 2, 1, 2) == X(2, 1, 1) * X(2, 1, 2) + X(2, 1, 2) * X(2, 2, 2));
  CHECK_THROWS_AS(matrix_power_entry(2, 1, 3, 1), std::out_of_range);
}

TEST_CASE("D on p_k") {
  for (int N = 1; N <= 4; ++N)
    for (int a = 1; a <= N; ++a)
      for (int b = 1; b <= N; ++b) {
        CHECK(D_apply(a, b, p_to_x(P("p1"), N)) == X(N, a, b));
        CHECK(D_apply(a, b, XPolynomial::constant(N, 3)).is_zero());
        for (int k = 1; k <= 3; ++k)
          CHECK(D_apply(a, b, p_to_x(PPolynomial::p(k), N)) == matrix_power_entry(N, k, a, b) * mpq_class(k));
      }
  CHECK_THROWS_AS(D_apply(3, 1, p_to_x(P("p1"), 2)), std::out_of_range);
}

TEST_CASE("D on polynomials in p") {
  for (int N = 1; N <= 5; ++N)
    for (int w = 1; w <= 4; ++w)
      for (const Monomial &m : monomials_of_weight(w)) {
        const PPolynomial f = PPolynomial::from_monomial(m);
        const XPolynomial g = p_to_x(f, N);
        for (int a = 1; a <= N; ++a)
          for (int b = 1; b <= N; ++b) {
            XPolynomial rhs(N);
            for (int k = 1; k <= w; ++k)
              rhs += matrix_power_entry(N, k, a, b) * p_to_x(f.derivative(k), N) * mpq_class(k);
            CHECK(D_apply(a, b, g) == rhs);
          }
      }
}

TEST_CASE("D on matrix power entries splits the path") {
  for (int N = 1; N <= 4; ++N)
    for (int k = 1; k <= 4; ++k)
      for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b)
          for (int c = 1; c <= N; ++c)
            for (int d = 1; d <= N; ++d) {
              XPolynomial rhs(N);
              for (int j = 0; j < k; ++j)
                rhs += matrix_power_entry(N, j, a, d) * matrix_power_entry(N, k - j, c, b);
              CHECK(D_apply(c, d, matrix_power_entry(N, k, a, b)) == rhs);
            }
}

TEST_CASE("normal ordering") {
  const int N = 3;
  const XPolynomial g = p_to_x(P("p1^2*p2"), N);
  CHECK(normal_ordered_apply({{2, 3}}, g) == D_apply(2, 3, g));

  // Two operators on p_i: the two-sum form.
  for (int i = 1; i <= 2; ++i) {
    const PPolynomial f = PPolynomial::p(i);
    for (int x = 1; x <= N; ++x)
      for (int y = 1; y <= N; ++y)
        for (int z = 1; z <= N; ++z) {
          XPolynomial rhs(N);
          for (int k = 1; k < i; ++k) {
            const int j = i - k;
            rhs += matrix_power_entry(N, j, y, y) * matrix_power_entry(N, k, x, z) * mpq_class(i);
          }
          CHECK(normal_ordered_apply({{x, y}, {y, z}}, p_to_x(f, N)) == rhs);
        }
  }

  // The composed product differs by the contraction term.
  for (const char *text : {"p1^2", "p2", "p1*p2", "p3"}) {
    const XPolynomial h = p_to_x(P(text), N);
    for (int a = 1; a <= N; ++a)
      for (int b = 1; b <= N; ++b)
        for (int c = 1; c <= N; ++c)
          for (int d = 1; d <= N; ++d) {
            const XPolynomial diff = composed_apply({{a, b}, {c, d}}, h) - normal_ordered_apply({{a, b}, {c, d}}, h);
            CHECK(diff == (b == c ? D_apply(a, d, h) : XPolynomial(N)));
          }
  }
}

TEST_CASE("tr(D^n) examples") {
  CHECK(equal_as_p(tr_Dn_apply(1, P("p1^2*p3"), 6), P("5*p1^2*p3")));
  CHECK(equal_as_p(tr_Dn_apply(2, P("p1^3"), 5), P("6*p1*p2")));
  CHECK(equal_as_p(tr_Dn_apply(2, P("p1^3"), 5), apply_W(2, P("p1^3")) * mpq_class(2)));
  CHECK(equal_as_p(tr_Dn_apply(3, P("p2"), 5), apply_W(3, P("p2")) * mpq_class(3)));
  CHECK_THROWS_AS(tr_Dn_apply(2, P("p1^3"), 4), std::invalid_argument);
  CHECK_THROWS_AS(tr_Dn_apply(4, P("p1"), 6), ResourceLimitError);
  CHECK_NOTHROW(tr_Dn_apply(4, P("p1"), 5, 4));
}

TEST_CASE("equal_as_p") {
  CHECK(equal_as_p(p_to_x(P("p2"), 3), P("p2")));
  CHECK_FALSE(equal_as_p(p_to_x(P("p2"), 3), P("p1^2")));
  CHECK(equal_as_p(XPolynomial(2), PPolynomial()));
}

TEST_CASE("tr(D^n) equals n W([n]) on all monomials of weight <= 4") {
  for (int n = 1; n <= 3; ++n)
    for (int w = 1; w <= 4; ++w)
      for (const Monomial &m : monomials_of_weight(w)) {
        const PPolynomial f = PPolynomial::from_monomial(m);
        const int N = w + n + 1;
        CHECK(equal_as_p(tr_Dn_apply(n, f, N), apply_W(n, f) * mpq_class(n)));
      }
}

TEST_CASE("each summation is one share of tr(D^n)") {
  for (int n = 1; n <= 3; ++n) {
    const auto templates = decompose_W(n);
    for (int w = 1; w <= 4; ++w)
      for (const Monomial &m : monomials_of_weight(w)) {
        const PPolynomial f = PPolynomial::from_monomial(m, mpq_class(2, 3));
        const int N = w + n + 1;
        const auto groups = tr_Dn_apply_by_pattern(n, f, N);
        XPolynomial total(N);
        for (const auto &[beta, share] : groups) {
          CHECK(beta.size() == n);
          total += share;
        }
        CHECK(total == tr_Dn_apply(n, f, N));
        for (const auto &t : templates) {
          const auto it = groups.find(t.perm);
          const XPolynomial share = it == groups.end() ? XPolynomial(N) : it->second;
          CHECK(equal_as_p(share, apply_template(t, f)));
        }
      }
  }
}
