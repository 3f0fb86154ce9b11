#include "woplab/counting.hpp"

#include "woplab/noncross.hpp"
#include "woplab/summation.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace woplab {

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n)
    return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

mpz_class catalan(long n) {
  if (n < 0)
    throw std::invalid_argument("catalan needs n >= 0");
  mpz_class out = binomial(2 * n, n);
  mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), static_cast<unsigned long>(n + 1));
  return out;
}

mpz_class narayana(long n, long r) {
  if (n < 1)
    throw std::invalid_argument("narayana needs n >= 1");
  if (r < 1 || r > n)
    return 0;
  mpz_class out = binomial(n + 1, r) * binomial(n - 1, r - 1);
  mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), static_cast<unsigned long>(n + 1));
  return out;
}

namespace {

class Recurrence {
public:
  mpz_class a(int n, int r) {
    if (n == 0)
      return r == 0 ? 1 : 0; // the empty tail of a composition
    if (r < 1 || r > n)
      return 0;
    const auto key = std::make_pair(n, r);
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;
    // First top-level pair holds m integers and t pairs.
    mpz_class sum = 0;
    for (int m = 1; m <= n; ++m)
      for (int t = 1; t <= r; ++t) {
        const mpz_class head = single_top(m, t);
        if (head != 0)
          sum += head * a(n - m, r - t);
      }
    memo_.emplace(key, sum);
    return sum;
  }

private:
  mpz_class single_top(int m, int t) {
    if (m == 1)
      return t == 1 ? 1 : 0;
    return a(m - 1, t);
  }

  std::map<std::pair<int, int>, mpz_class> memo_;
};

} // namespace

mpz_class narayana_by_recurrence(int n, int r) {
  Recurrence rec;
  return rec.a(n, r);
}

std::vector<mpz_class> catalan_series(int order) {
  if (order < 0)
    throw std::invalid_argument("series order must be non-negative");
  const std::size_t len = static_cast<std::size_t>(order) + 1;
  std::vector<mpz_class> g(len, 0);
  // Each pass fixes one more coefficient of G = 1 + x G^2.
  for (int pass = 0; pass <= order; ++pass) {
    std::vector<mpz_class> next(len, 0);
    next[0] = 1;
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t j = 0; i + j + 1 < len; ++j)
        next[i + j + 1] += g[i] * g[j];
    g = std::move(next);
  }
  return g;
}

CountReport verify_counts(int n, int max_n) {
  if (n < 1)
    throw std::invalid_argument("verify_counts needs n >= 1");
  check_bound("verify_counts", n, max_n);

  CountReport report;
  report.n = n;
  report.table.n = n;

  std::map<int, mpz_class> os_by_r;
  mpz_class top_degree = 0;
  for (const auto &t : decompose_W(n, max_n)) {
    if (const auto os = os_type(t)) {
      os_by_r[os->r] += 1;
      top_degree += 1;
    }
  }

  const int enum_bound = std::max(max_n, kMaxEnumerateN);
  const bool next_rank = n + 1 <= enum_bound;
  mpz_class enumerated_total = 0;
  for (int r = 1; r <= n; ++r) {
    CountRow row;
    row.r = r;
    const auto seqs = enumerate(n, r, enum_bound);
    row.enumerated = seqs.size();
    mpz_class single = 0;
    for (const auto &s : seqs)
      if (s.top_level_count() == 1)
        single += 1;
    report.table.by_r[r] = row.enumerated;
    report.table.tilde_by_r[r] = single;
    enumerated_total += row.enumerated;

    row.os_count = os_by_r[r];
    row.narayana = narayana(n, r);
    row.recurrence = narayana_by_recurrence(n, r);
    row.tilde_next = next_rank ? mpz_class(enumerate_single_top(n + 1, r, enum_bound).size()) : row.enumerated;
    row.ok = row.enumerated == row.narayana && row.os_count == row.narayana && row.recurrence == row.narayana &&
             row.tilde_next == row.enumerated;
    if (!row.ok)
      report.failures.push_back("count mismatch at (n, r) = (" + std::to_string(n) + ", " + std::to_string(r) + ")");
    report.rows.push_back(std::move(row));
  }
  report.table.total = enumerated_total;
  report.total = top_degree;
  report.catalan = catalan(n);
  if (report.total != report.catalan || enumerated_total != report.catalan)
    report.failures.push_back("Catalan mismatch at n = " + std::to_string(n));
  report.ok = report.failures.empty();
  return report;
}

std::string CountReport::to_text() const {
  std::ostringstream out;
  out << "n = " << n << '\n';
  out << std::setw(4) << "r" << std::setw(14) << "enumerated" << std::setw(14) << "os_count" << std::setw(14)
      << "narayana" << std::setw(14) << "recurrence" << std::setw(14) << "tilde(n+1)" << "  status\n";
  for (const auto &row : rows) {
    out << std::setw(4) << row.r << std::setw(14) << row.enumerated.get_str() << std::setw(14)
        << row.os_count.get_str() << std::setw(14) << row.narayana.get_str() << std::setw(14)
        << row.recurrence.get_str() << std::setw(14) << row.tilde_next.get_str() << "  "
        << (row.ok ? "PASS" : "FAIL") << '\n';
  }
  out << "total = " << total.get_str() << ", catalan = " << catalan.get_str() << "  " << (ok ? "PASS" : "FAIL")
      << '\n';
  return out.str();
}

namespace {

// Counts stay exact: small values as JSON integers, others as strings.
nlohmann::json exact(const mpz_class &v) {
  if (v.fits_slong_p())
    return v.get_si();
  return v.get_str();
}

} // namespace

std::string CountReport::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  auto rows_json = nlohmann::json::array();
  for (const auto &row : rows)
    rows_json.push_back({{"r", row.r},
                         {"enumerated", exact(row.enumerated)},
                         {"os_count", exact(row.os_count)},
                         {"narayana", exact(row.narayana)},
                         {"recurrence", exact(row.recurrence)},
                         {"tilde_next", exact(row.tilde_next)},
                         {"ok", row.ok}});
  j["rows"] = rows_json;
  j["total"] = exact(total);
  j["catalan"] = exact(catalan);
  j["ok"] = ok;
  return j.dump();
}

} // namespace woplab
