#include "oracles.hpp"

#include "woplab/error.hpp"
#include "woplab/noncross.hpp"
#include "woplab/summation.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace woplab;

namespace {

BracketSequence S(const char *text) { return parse_sequence(text); }
Permutation P(const char *text) { return parse_permutation(text); }

} // namespace

TEST_CASE("parsing and printing") {
  const BracketSequence s = S("(4(3)2)(1)");
  CHECK(s.n() == 4);
  CHECK(s.pair_count() == 3);
  CHECK(s.to_string() == "(4(3)2)(1)");
  CHECK(S(" ( 4 ( 3 ) 2 ) ( 1 ) ") == s);
  CHECK(s.gaps() == std::vector<Gap>{Gap::open, Gap::open, Gap::close, Gap::close_open, Gap::close});

  const BracketSequence ten = S("(10 9)(8 7 6 5 4 3 2 1)");
  CHECK(ten.n() == 10);
  CHECK(ten.to_string() == "(10 9)(8 7 6 5 4 3 2 1)");
  CHECK(S("(109)(87654321)") == ten);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(S("(4)32(1)"), ParseError);
  CHECK_THROWS_AS(S("(43(2))(1)"), ParseError);
  CHECK_THROWS_AS(S("((21))"), ParseError);
  CHECK_THROWS_AS(S("(2)()(1)"), ParseError);
  CHECK_THROWS_AS(S("(21"), ParseError);
  CHECK_THROWS_AS(S("21)"), ParseError);
  CHECK_THROWS_AS(S("(12)"), ParseError);
  CHECK_THROWS_AS(S("(3 1)"), ParseError);
  CHECK_THROWS_AS(S(""), ParseError);
  CHECK_THROWS_AS(S("(2a1)"), ParseError);
  CHECK_THROWS_AS(BracketSequence(2, {Gap::open, Gap::empty, Gap::empty}), std::invalid_argument);
}

TEST_CASE("pair labels run from the right") {
  const BracketSequence s = S("(6)(5(4)3(2)1)");
  CHECK(s.to_string(true) == "(_4 6 )_4 (_1 5 (_3 4 )_3 3 (_2 2 )_2 1 )_1");
  CHECK(s.pair(1).members == std::vector<int>{5, 3, 1});
  CHECK(s.pair(4).members == std::vector<int>{6});
  CHECK(s.top_level_count() == 2);
  const auto j = nlohmann::json::parse(s.to_json());
  CHECK(j["n"] == 6);
  CHECK(j["gaps"].size() == 7);
  CHECK(j["gaps"][0] == "(");
  CHECK(j["pairs"][0]["members"] == nlohmann::json::parse("[5,3,1]"));
}

TEST_CASE("decode and encode examples") {
  CHECK(decode(S("(4)(321)")) == P("(4)(321)"));
  CHECK(decode(S("(1)")) == P("(1)"));
  CHECK(decode(S("(5(4)321)")) == P("(4)(5321)"));
  CHECK(encode(P("(5 3 1)(2)(4)(6)")).to_string() == "(6)(5(4)3(2)1)");
  CHECK(encode(P("(7 2 1)(6 5)(4)(3)")).to_string() == "(7(65)(4)(3)21)");
  CHECK(encode(Permutation::identity(2)).to_string() == "(2)(1)");
  CHECK_THROWS_AS(encode(P("(123)")), std::invalid_argument);
}

TEST_CASE("decode is a bijection onto the permutations satisfying (*)") {
  for (int n = 1; n <= 8; ++n) {
    std::map<int, std::set<Permutation>> star;
    for (const Permutation &p : all_permutations(n))
      if (satisfies_star(p))
        star[static_cast<int>(p.cycle_count())].insert(p);
    for (int r = 1; r <= n; ++r) {
      std::set<Permutation> image;
      for (const auto &s : enumerate(n, r)) {
        const Permutation p = decode(s);
        CHECK(image.insert(p).second);
        CHECK(encode(p) == s);
      }
      CHECK(image == star[r]);
    }
  }
}

TEST_CASE("classification") {
  const BracketSequence s = S("(6)(5(4)3(2)1)");
  const PairClassification c = classify_pairs(s);
  const auto &six = c.pairs[3];
  CHECK(six.top_level);
  CHECK(six.bottom_level);
  for (int label : {2, 3}) {
    CHECK(c.pairs[static_cast<std::size_t>(label - 1)].embedded);
    CHECK(c.pairs[static_cast<std::size_t>(label - 1)].bottom_level);
  }
  CHECK_FALSE(c.is_adjacent(2, 3));
  CHECK(c.is_adjacent(4, 1));
  CHECK(c.is_adjacent(1, 4));

  const PairClassification single = classify_pairs(S("(1)"));
  CHECK(single.pairs[0].top_level);
  CHECK(single.pairs[0].bottom_level);
  CHECK_FALSE(single.pairs[0].embedded);

  const PairClassification two = classify_pairs(S("(2)(1)"));
  CHECK(two.pairs[0].top_level);
  CHECK(two.pairs[1].top_level);
  CHECK(two.is_adjacent(2, 1));
}

TEST_CASE("dual examples") {
  CHECK(dual(S("(7(65)(4)(3)21)")).to_string() == "(7(6)(543)2)(1)");
  CHECK(decode(dual(S("(7(65)(4)(3)21)"))) == P("(72)(6)(543)(1)"));
  CHECK(dual(S("(54)(321)")).to_string() == "(5)(43)(2)(1)");
  CHECK(dual(S("(5(4)321)")).to_string() == "(5(4)3)(2)(1)");
  CHECK(dual(S("(1)")) == S("(1)"));
}

TEST_CASE("dual is an involution swapping r and n-r+1") {
  for (int n = 1; n <= 10; ++n)
    for (int r = 1; r <= n; ++r) {
      std::set<BracketSequence> image;
      for (const auto &s : enumerate(n, r)) {
        const BracketSequence d = dual(s);
        CHECK(d.pair_count() == n - r + 1);
        CHECK(dual(d) == s);
        CHECK(d == dual_gap_toggle(s));
        image.insert(d);
      }
      CHECK(image.size() == enumerate(n, n - r + 1).size());
    }
}

TEST_CASE("enumeration") {
  CHECK(enumerate(3, 2).size() == 3);
  CHECK(enumerate(1, 1).size() == 1);
  std::vector<std::size_t> four;
  for (int r = 1; r <= 4; ++r)
    four.push_back(enumerate(4, r).size());
  CHECK(four == std::vector<std::size_t>{1, 6, 6, 1});
  CHECK(enumerate(3, 0).empty());
  CHECK(enumerate(3, 4).empty());
  CHECK_THROWS_AS(enumerate(13, 2), ResourceLimitError);

  for (int n = 1; n <= 7; ++n) {
    const auto brute = oracle::brute_force_brk_counts(n);
    for (int r = 1; r <= n; ++r) {
      const auto seqs = enumerate(n, r);
      CHECK(static_cast<long>(seqs.size()) == (brute.count(r) ? brute.at(r) : 0L));
      CHECK(std::is_sorted(seqs.begin(), seqs.end()));
      CHECK(std::adjacent_find(seqs.begin(), seqs.end()) == seqs.end());
    }
  }
}

TEST_CASE("single top-level maps") {
  CHECK(lemma402_down(S("(5(4)321)")).to_string() == "(4)(321)");
  CHECK(lemma402_up(S("(1)")).to_string() == "(21)");
  CHECK_THROWS_AS(lemma402_down(S("(2)(1)")), std::invalid_argument);
  CHECK_THROWS_AS(lemma402_down(S("(1)")), std::invalid_argument);

  for (int n = 1; n <= 9; ++n)
    for (int r = 1; r <= n; ++r) {
      const auto base = enumerate(n, r);
      const auto single = enumerate_single_top(n + 1, r);
      CHECK(base.size() == single.size());
      std::set<BracketSequence> image;
      for (const auto &s : base) {
        const BracketSequence up = lemma402_up(s);
        CHECK(up.top_level_count() == 1);
        CHECK(lemma402_down(up) == s);
        image.insert(up);
        if (n <= 7) {
          CHECK(decode(up) == lift(decode(s), 0));
        }
      }
      CHECK(image == std::set<BracketSequence>(single.begin(), single.end()));
    }
}

TEST_CASE("random sequences round trip through text and permutations") {
  oracle::Gen gen(314);
  for (int trial = 0; trial < 200; ++trial) {
    const BracketSequence s = gen.sequence(gen.uniform(1, 9));
    CHECK(parse_sequence(s.to_string()) == s);
    CHECK(encode(decode(s)) == s);
    CHECK(dual(dual(s)) == s);
    CHECK(satisfies_star(decode(s)));
  }
}
