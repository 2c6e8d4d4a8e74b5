#include "doctest.h"
#include "qmonoid/oracle.hpp"
#include "support.hpp"

using namespace qmonoid;
using namespace qmonoid::test;

TEST_CASE("word enumeration sizes") {
  CHECK(words_of_length(ab, 0).size() == 1);
  CHECK(words_of_length(ab, 3).size() == 64);
  CHECK(all_words(ab, 3).size() == 1 + 4 + 16 + 64);
  CHECK(all_letter_words(ab, 2) == std::vector<Letters>{"", "a", "b", "aa", "ab", "ba", "bb"});
  CHECK(all_words(Alphabet("abc"), 2).size() == 1 + 6 + 36);
}

TEST_CASE("oracle examples") {
  Alphabet abc("abc");
  CHECK(equiv_oracle(abc, parse_word("Ac", abc), parse_word("cA", abc)));
  CHECK_FALSE(equiv_oracle(ab, W("aA"), W("Aa")));
  CHECK(equiv_oracle(ab, W("aBAb"), W("aBAb")));
  CHECK(oracle_queue_bound(W("aA"), W("b")) == 3);
}

TEST_CASE("oracle bound override") {
  // aA and Aa differ only on the empty queue.
  CHECK_FALSE(equiv_oracle(ab, W("aA"), W("Aa"), 0));
  // Two reads of a cannot be told from a read of a then b on queues of length ≤ 1:
  // every such queue ends in ⊥ for both.
  CHECK(equiv_oracle(ab, W("AA"), W("AB"), 1));
  CHECK_FALSE(equiv_oracle(ab, W("AA"), W("AB"), 2));
}

TEST_CASE("completeness of normal forms against the oracle") {
  auto words = all_words(ab, 4);
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i; j < words.size(); ++j) {
      bool same = rewrite_normalize(words[i]) == rewrite_normalize(words[j]);
      REQUIRE(equiv_oracle(ab, words[i], words[j]) == same);
    }
  }
}

TEST_CASE("behavior table agrees with the oracle") {
  auto          words = all_words(ab, 3);
  BehaviorTable table(ab, words, 6);
  REQUIRE(table.size() == words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      REQUIRE(table.equivalent(i, j) == equiv_oracle(ab, words[i], words[j]));
    }
  }
}

TEST_CASE("behavior table rejects pairs beyond its queue bound") {
  BehaviorTable table(ab, {W("aaa"), W("AAA")}, 4);
  CHECK_THROWS_AS(table.equivalent(0, 1), std::out_of_range);
}
