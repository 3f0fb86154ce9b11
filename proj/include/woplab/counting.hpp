#pragma once

#include "woplab/limits.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace woplab {

mpz_class binomial(long n, long k);

/// C_n = binom(2n, n) / (n + 1)
mpz_class catalan(long n);

/// N(n, r) = binom(n+1, r) binom(n-1, r-1) / (n + 1) for 1 <= r <= n, else 0.
mpz_class narayana(long n, long r);

/// a^r_n via the convolution over top-level pairs: a sequence splits into
/// its top-level pairs, and a single-top sequence on m integers with t pairs
/// is counted by a^t_{m-1} (m >= 2) or [t == 1] (m == 1). Memoised, exact.
mpz_class narayana_by_recurrence(int n, int r);

/// Coefficients c_0..c_order of the power series G with G = 1 + x G^2,
/// obtained by fixed-point iteration on truncated series.
std::vector<mpz_class> catalan_series(int order);

struct CountTable {
  int n = 0;
  std::map<int, mpz_class> by_r;       // |Brk(n, r)|
  std::map<int, mpz_class> tilde_by_r; // single-top-level members of Brk(n, r)
  mpz_class total;                     // sum of by_r
};

struct CountRow {
  int r = 0;
  mpz_class enumerated; // |enumerate(n, r)|
  mpz_class os_count;   // templates of type (r, n - r + 1) in decompose_W(n)
  mpz_class narayana;
  mpz_class recurrence;  // narayana_by_recurrence(n, r)
  mpz_class tilde_next; // single-top members of Brk(n + 1, r)
  bool ok = false;
};

struct CountReport {
  int n = 0;
  CountTable table;
  std::vector<CountRow> rows;
  mpz_class total;   // number of degree n + 1 templates
  mpz_class catalan;
  bool ok = false;
  std::vector<std::string> failures;

  std::string to_text() const;
  std::string to_json() const;
};

/// Recomputes every count by independent routes (bracket enumeration,
/// classification of all n! templates, closed formulas, the top-level
/// recurrence, and the single-top sequences of rank n + 1) and compares
/// them exactly. Mismatches are listed in `failures` with their (n, r).
CountReport verify_counts(int n, int max_n = kMaxDecomposeN);

} // namespace woplab
