#include "verify.hpp"

#include "woplab/counting.hpp"
#include "woplab/matrix_oracle.hpp"
#include "woplab/noncross.hpp"
#include "woplab/p_polynomial.hpp"
#include "woplab/summation.hpp"

#include <set>
#include <stdexcept>

namespace woplab::cli {

Suite parse_suite(std::string_view name) {
  if (name == "counts")
    return Suite::counts;
  if (name == "star")
    return Suite::star;
  if (name == "oracle")
    return Suite::oracle;
  if (name == "dual")
    return Suite::dual;
  if (name == "lift")
    return Suite::lift;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "' (counts, star, oracle, dual, lift)");
}

std::string_view suite_name(Suite suite) {
  switch (suite) {
  case Suite::counts:
    return "counts";
  case Suite::star:
    return "star";
  case Suite::oracle:
    return "oracle";
  case Suite::dual:
    return "dual";
  case Suite::lift:
    return "lift";
  }
  return "";
}

int default_bound(Suite suite) {
  switch (suite) {
  case Suite::oracle:
    return kMaxOracleN;
  case Suite::dual:
    return kMaxEnumerateN;
  default:
    return kMaxDecomposeN;
  }
}

namespace {

std::string at(int n) { return " n=" + std::to_string(n); }

std::vector<Check> counts_suite(int n) {
  const CountReport report = verify_counts(n, n);
  std::vector<Check> out;
  for (const auto &row : report.rows)
    out.push_back({"counts" + at(n) + " r=" + std::to_string(row.r) + ": enumerated=" + row.enumerated.get_str() +
                       " os=" + row.os_count.get_str() + " narayana=" + row.narayana.get_str() +
                       " recurrence=" + row.recurrence.get_str() + " single-top(n+1)=" + row.tilde_next.get_str(),
                   row.ok});
  out.push_back({"counts" + at(n) + ": maximal-degree templates=" + report.total.get_str() +
                     " catalan=" + report.catalan.get_str(),
                 report.total == report.catalan && report.table.total == report.catalan});
  return out;
}

std::vector<Check> star_suite(int n) {
  long checked = 0;
  long mismatches = 0;
  for (const auto &t : decompose_W(n, n)) {
    ++checked;
    if (os_type(t).has_value() != satisfies_star(t.perm))
      ++mismatches;
  }
  return {{"star" + at(n) + ": maximal degree <=> (*) on " + std::to_string(checked) + " permutations",
           mismatches == 0}};
}

std::vector<Check> oracle_suite(int n) {
  std::vector<Check> out;
  const auto templates = decompose_W(n, n);
  for (int w = 1; w <= 4; ++w) {
    for (const Monomial &m : monomials_of_weight(w)) {
      const PPolynomial f = PPolynomial::from_monomial(m);
      const int N = w + n + 1;
      const std::string label = print_p(f) + " N=" + std::to_string(N);

      const XPolynomial lhs = tr_Dn_apply(n, f, N, n);
      const bool total = equal_as_p(lhs, apply_W(n, f, n) * mpq_class(n));
      out.push_back({"oracle" + at(n) + " F=" + label + ": tr(D^n) = n W([n])", total});

      const auto groups = tr_Dn_apply_by_pattern(n, f, N, n);
      bool each = true;
      for (const auto &t : templates) {
        const auto it = groups.find(t.perm);
        const XPolynomial got = it == groups.end() ? XPolynomial(N) : it->second;
        each = each && equal_as_p(got, apply_template(t, f));
      }
      out.push_back({"oracle" + at(n) + " F=" + label + ": each summation matches its share", each});
    }
  }
  return out;
}

std::vector<Check> dual_suite(int n) {
  std::vector<Check> out;
  for (int r = 1; r <= n; ++r) {
    bool involution = true;
    bool type_swap = true;
    bool toggle = true;
    std::set<BracketSequence> images;
    const auto seqs = enumerate(n, r, n);
    for (const auto &s : seqs) {
      const BracketSequence d = dual(s);
      involution = involution && dual(d) == s;
      type_swap = type_swap && d.pair_count() == n - r + 1;
      toggle = toggle && d == dual_gap_toggle(s);
      images.insert(d);
    }
    const bool onto = images.size() == enumerate(n, n - r + 1, n).size();
    const std::string where = "dual" + at(n) + " r=" + std::to_string(r) + " (" + std::to_string(seqs.size()) + ")";
    out.push_back({where + ": dual o dual = id", involution});
    out.push_back({where + ": image is Brk(n, n-r+1)", type_swap && onto});
    out.push_back({where + ": table = gap toggle", toggle});
  }
  return out;
}

std::vector<Check> lift_suite(int n) {
  std::set<Permutation> lifted;
  long count = 0;
  bool round_trip = true;
  bool transitions = true;
  for (const Permutation &alpha : all_permutations(n)) {
    const Degree da = degree(summation_of(alpha));
    const HatQuiver hat = to_hat_quiver(alpha);
    for (int j = 0; j <= n; ++j) {
      const Permutation beta = lift(alpha, j);
      ++count;
      lifted.insert(beta);
      const Projection back = project(beta);
      round_trip = round_trip && back.alpha == alpha && back.j == j;

      const Degree db = degree(summation_of(beta));
      if (j == 0)
        transitions = transitions && db.polynomial == da.polynomial && db.differential == da.differential + 1;
      else if (hat.on_chain(j))
        transitions = transitions && db.polynomial == da.polynomial + 1 && db.differential == da.differential;
      else
        transitions = transitions && db.polynomial == da.polynomial - 1 && db.differential == da.differential;
    }
  }
  long factorial = 1;
  for (int k = 2; k <= n + 1; ++k)
    factorial *= k;
  return {
      {"lift" + at(n) + ": " + std::to_string(count) + " lifts are distinct and exhaust S_" + std::to_string(n + 1),
       static_cast<long>(lifted.size()) == count && count == factorial},
      {"lift" + at(n) + ": project(lift(alpha, j)) = (alpha, j)", round_trip},
      {"lift" + at(n) + ": degree transitions for j = 0, j on the chain, j off the chain", transitions},
  };
}

} // namespace

std::vector<Check> run_suite(Suite suite, int n) {
  if (n < 1)
    throw std::invalid_argument("suite ranks start at 1");
  switch (suite) {
  case Suite::counts:
    return counts_suite(n);
  case Suite::star:
    return star_suite(n);
  case Suite::oracle:
    return oracle_suite(n);
  case Suite::dual:
    return dual_suite(n);
  case Suite::lift:
    return lift_suite(n);
  }
  return {};
}

std::vector<Check> oracle_identities() {
  std::vector<Check> out;

  // D_ab F = sum_k k (X^k)_ab dF/dp_k
  bool first = true;
  for (int N = 1; N <= 4; ++N)
    for (int w = 1; w <= 4; ++w)
      for (const Monomial &m : monomials_of_weight(w)) {
        const PPolynomial f = PPolynomial::from_monomial(m);
        const XPolynomial g = p_to_x(f, N);
        for (int a = 1; a <= N; ++a)
          for (int b = 1; b <= N; ++b) {
            XPolynomial rhs(N);
            for (int k = 1; k <= w; ++k)
              rhs += matrix_power_entry(N, k, a, b) * p_to_x(f.derivative(k), N) * mpq_class(k);
            first = first && D_apply(a, b, g) == rhs;
          }
      }
  out.push_back({"identity D_ab F = sum k (X^k)_ab dF/dp_k (weight <= 4, N <= 4)", first});

  // D_cd (X^k)_ab = sum_{j<k} (X^j)_ad (X^{k-j})_cb
  bool split = true;
  for (int N = 1; N <= 4; ++N)
    for (int k = 1; k <= 4; ++k)
      for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b) {
          const XPolynomial entry = matrix_power_entry(N, k, a, b);
          for (int c = 1; c <= N; ++c)
            for (int d = 1; d <= N; ++d) {
              XPolynomial rhs(N);
              for (int j = 0; j < k; ++j)
                rhs += matrix_power_entry(N, j, a, d) * matrix_power_entry(N, k - j, c, b);
              split = split && D_apply(c, d, entry) == rhs;
            }
        }
  out.push_back({"identity D_cd (X^k)_ab = sum (X^j)_ad (X^(k-j))_cb (k <= 4, N <= 4)", split});

  // :D_xy D_yz: on p-polynomials, and D D - :D D: = delta_bc D_ad.
  bool normal = true;
  bool correction = true;
  const int N = 3;
  for (int w = 1; w <= 3; ++w)
    for (const Monomial &m : monomials_of_weight(w)) {
      const PPolynomial f = PPolynomial::from_monomial(m);
      const XPolynomial g = p_to_x(f, N);
      for (int x = 1; x <= N; ++x)
        for (int y = 1; y <= N; ++y)
          for (int z = 1; z <= N; ++z) {
            XPolynomial rhs(N);
            for (int k = 1; k <= w; ++k)
              for (int j = 1; j <= w; ++j) {
                if (k + j <= w)
                  rhs += matrix_power_entry(N, j, y, y) * matrix_power_entry(N, k, x, z) *
                         p_to_x(f.derivative(k + j), N) * mpq_class(k + j);
                rhs += matrix_power_entry(N, k, y, z) * matrix_power_entry(N, j, x, y) *
                       p_to_x(f.derivative(k).derivative(j), N) * mpq_class(k * j);
              }
            normal = normal && normal_ordered_apply({{x, y}, {y, z}}, g) == rhs;
          }
      for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b)
          for (int c = 1; c <= N; ++c)
            for (int d = 1; d <= N; ++d) {
              const XPolynomial diff = composed_apply({{a, b}, {c, d}}, g) - normal_ordered_apply({{a, b}, {c, d}}, g);
              correction = correction && diff == (b == c ? D_apply(a, d, g) : XPolynomial(N));
            }
    }
  out.push_back({"identity :D_xy D_yz: = two-sum form (weight <= 3, N = 3)", normal});
  out.push_back({"identity D_ab D_cd - :D_ab D_cd: = delta_bc D_ad (weight <= 3, N = 3)", correction});
  return out;
}

} // namespace woplab::cli
