#include "oracles.hpp"

#include "woplab/error.hpp"
#include "woplab/summation.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace woplab;

namespace {

SetPartition blocks(std::vector<std::vector<int>> b) { return SetPartition{std::move(b)}; }

SummationTemplate of(const char *perm) { return summation_of(parse_permutation(perm)); }

} // namespace

TEST_CASE("templates of S_1 and S_2") {
  const SummationTemplate one = of("(1)");
  CHECK(one.cycle_blocks == blocks({{1}}));
  CHECK(one.derivative_blocks == blocks({{1}}));
  CHECK(degree(one).total() == 2);

  const SummationTemplate swap = of("(21)");
  CHECK(swap.cycle_blocks == blocks({{1, 2}}));
  CHECK(swap.derivative_blocks == blocks({{1}, {2}}));
  CHECK(os_type(swap) == OsType{1, 2});

  const SummationTemplate id = of("(1)(2)");
  CHECK(id.cycle_blocks == blocks({{1}, {2}}));
  CHECK(id.derivative_blocks == blocks({{1, 2}}));
  CHECK(os_type(id) == OsType{2, 1});
}

TEST_CASE("templates of S_3") {
  CHECK(of("(321)").derivative_blocks == blocks({{1}, {2}, {3}}));
  CHECK(of("(321)").cycle_blocks == blocks({{1, 2, 3}}));
  CHECK(of("(123)").derivative_blocks == blocks({{1, 2, 3}}));
  CHECK(degree(of("(123)")) == Degree{1, 1});
  CHECK_FALSE(os_type(of("(123)")).has_value());
  CHECK(of("(1)(2)(3)").derivative_blocks == blocks({{1, 2, 3}}));
  CHECK(of("(13)(2)").derivative_blocks == blocks({{1, 2}, {3}}));
  CHECK(of("(12)(3)").derivative_blocks == blocks({{1}, {2, 3}}));
  CHECK(of("(1)(23)").derivative_blocks == blocks({{1, 3}, {2}}));
}

TEST_CASE("derivative blocks follow the lift chain") {
  for (int n = 1; n <= 7; ++n)
    for (const Permutation &beta : all_permutations(n)) {
      const SummationTemplate t = summation_of(beta);
      const auto [cyc, der] = oracle::closed_form_blocks(beta);
      CHECK(t.cycle_blocks == cyc);
      CHECK(t.derivative_blocks == der);
      CHECK(degree(t).polynomial == static_cast<int>(beta.cycle_count()));
    }
}

TEST_CASE("degree parity and range") {
  for (int n = 1; n <= 7; ++n)
    for (const auto &t : decompose_W(n)) {
      const int d = degree(t).total();
      CHECK(d <= n + 1);
      CHECK(d >= 2);
      CHECK((n + 1 - d) % 2 == 0);
    }
}

TEST_CASE("condition (*) examples") {
  CHECK(satisfies_star(parse_permutation("(531)(2)(4)(6)")));
  CHECK(satisfies_star(parse_permutation("(7 2 1)(6 5)(4)(3)")));
  CHECK(satisfies_star(Permutation::identity(5)));
  CHECK_FALSE(satisfies_star1(parse_permutation("(123)")));
  CHECK(satisfies_star1(parse_permutation("(321)")));
  // {1,3} and {2,4} interleave.
  CHECK(satisfies_star1(parse_permutation("(31)(42)")));
  CHECK_FALSE(satisfies_star2(parse_permutation("(31)(42)")));
  CHECK(satisfies_star2(parse_permutation("(41)(32)")));
}

TEST_CASE("maximal degree holds exactly under (*)") {
  for (int n = 1; n <= 7; ++n)
    for (const auto &t : decompose_W(n))
      CHECK(os_type(t).has_value() == satisfies_star(t.perm));
}

TEST_CASE("decompose order and bounds") {
  const auto w3 = decompose_W(3);
  REQUIRE(w3.size() == 6);
  CHECK(w3.front().perm == Permutation::identity(3));
  CHECK(decompose_W(1).size() == 1);
  CHECK_THROWS_AS(decompose_W(0), std::invalid_argument);
  CHECK_THROWS_AS(decompose_W(5, 4), ResourceLimitError);
}

TEST_CASE("rendering") {
  const SummationTemplate t = of("(321)");
  CHECK(render(t, RenderFormat::latex) ==
        "\\sum_{i_1,i_2,i_3 \\geq 1} i_1 i_2 i_3 p_{i_1+i_2+i_3}"
        "\\frac{\\partial^3}{\\partial p_{i_1}\\partial p_{i_2}\\partial p_{i_3}}");
  CHECK(render(of("(1)"), RenderFormat::plain) == "sum_{k1} k1 p_{k1} d/dp_{k1}");
  const auto j = nlohmann::json::parse(render(of("(13)(2)"), RenderFormat::json));
  CHECK(j["degree"] == 4);
  CHECK(j["os_type"] == nlohmann::json::array({2, 2}));
  CHECK(j["derivative_blocks"] == nlohmann::json::parse("[[1,2],[3]]"));
  CHECK(nlohmann::json::parse(render(of("(123)"), RenderFormat::json))["os_type"].is_null());
  CHECK(parse_render_format("latex") == RenderFormat::latex);
  CHECK_THROWS_AS(parse_render_format("html"), std::invalid_argument);
}
