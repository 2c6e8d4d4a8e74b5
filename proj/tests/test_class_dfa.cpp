#include <regex>

#include "doctest.h"
#include "qmonoid/class_dfa.hpp"
#include "qmonoid/oracle.hpp"
#include "support.hpp"

using namespace qmonoid;
using namespace qmonoid::test;

namespace {
  SymbolSet const sigma(ab, SymbolSpace::sigma);

  Nfa finite_language(std::vector<Word> const& ws) {
    Nfa out = empty_language(sigma);
    for (auto const& w : ws) {
      out = unite(out, word_language(sigma, sigma.encode(w)));
    }
    return out;
  }
}  // namespace

TEST_CASE("class of a b̄ by the oracle") {
  std::vector<Word> expected;
  for (auto const& v : words_of_length(ab, 2)) {
    if (equiv_oracle(ab, v, W("aB"))) {
      expected.push_back(v);
    }
  }
  REQUIRE(expected == std::vector<Word>{W("aB"), W("Ba")});

  Dfa d = class_dfa(W("aB"), ab);
  for (auto const& v : all_words(ab, 4)) {
    bool want = std::find(expected.begin(), expected.end(), v) != expected.end();
    CHECK(d.accepts(v) == want);
  }
}

TEST_CASE("class of the empty word") {
  Dfa d = class_dfa(W(""), ab);
  CHECK(d.accepts(W("")));
  for (auto const& v : all_words(ab, 3)) {
    CHECK(d.accepts(v) == v.empty());
  }
}

TEST_CASE("class DFA accepts exactly the class") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (auto const& w : words_of_length(ab, n)) {
      Dfa        d = class_dfa(w, ab);
      NormalForm x = rewrite_normalize(w);
      CHECK(d.state_count() <= (n + 1) * (n + 1) * (n + 1) + 2 * (n + 1) * (n + 1));
      for (auto const& v : all_words(ab, n + 1)) {
        REQUIRE(d.accepts(v) == (v.size() == n && rewrite_normalize(v) == x));
      }
    }
  }
}

TEST_CASE("reachable quadruples are states and denote the prefix class") {
  std::regex quad(R"(\((\d+),(\d+),(\d+),(\d+)\))");
  for (auto const& w : words_of_length(ab, 4)) {
    ClassAutomaton ca(w);
    Dfa            d = class_dfa(w, ab);
    for (State s = 0; s < d.state_count(); ++s) {
      std::smatch m;
      std::string label = d.label(s);
      REQUIRE(std::regex_match(label, m, quad));
      Quad q{std::stoul(m[1]), std::stoul(m[2]), std::stoul(m[3]), std::stoul(m[4])};
      CHECK(ca.is_state(q));
      CHECK(d.is_accepting(s) == ca.is_accepting(q));
    }
    // Running any prefix of a class member lands on the state denoting it.
    for (auto const& v : words_of_length(ab, 4)) {
      if (rewrite_normalize(v) != rewrite_normalize(w)) {
        continue;
      }
      std::optional<Quad> q = ca.initial();
      Word                prefix;
      for (Symbol c : v) {
        q = ca.step(*q, c);
        REQUIRE(q.has_value());
        prefix.push_back(c);
        CHECK(ca.denoted(*q) == rewrite_normalize(prefix));
      }
      CHECK(ca.is_accepting(*q));
    }
  }
}

TEST_CASE("rational membership examples") {
  CHECK(rational_member(W("aB"), finite_language({W("Ba")})));
  CHECK_FALSE(rational_member(W("aBAb"), empty_language(sigma)));
  CHECK_FALSE(rational_member(W("aA"), finite_language({W("Aa")})));
  CHECK(rational_member(W("abB"), star(finite_language({W("B"), W("a"), W("b")}))));
  CHECK_FALSE(rational_member(W("aBB"), star(finite_language({W("aB")}))));
}

TEST_CASE("rational membership against brute force") {
  std::mt19937_64                      rng(5);
  std::bernoulli_distribution          coin(0.35);
  std::uniform_int_distribution<State> pick(0, 3);
  std::uniform_int_distribution<int>   len(0, 5);
  for (int round = 0; round < 60; ++round) {
    Nfa a(sigma);
    for (State s = 0; s < 4; ++s) {
      a.add_state(s == 0, coin(rng));
    }
    for (State s = 0; s < 4; ++s) {
      for (SymbolId c = 0; c < 4; ++c) {
        if (coin(rng)) {
          a.add_transition(s, c, pick(rng));
        }
      }
    }
    Word       w = random_word(rng, ab, len(rng));
    NormalForm x = rewrite_normalize(w);
    bool       brute = false;
    for (auto const& v : words_of_length(ab, w.size())) {
      if (a.accepts(v) && rewrite_normalize(v) == x) {
        brute = true;
        break;
      }
    }
    REQUIRE(rational_member(w, a) == brute);
  }
}

TEST_CASE("rational membership rejects a foreign alphabet") {
  Nfa a = universal_language(SymbolSet(Alphabet("abc"), SymbolSpace::sigma));
  CHECK_THROWS_AS(rational_member(W("c"), universal_language(sigma)), std::invalid_argument);
  CHECK(rational_member(parse_word("cA"), a));
}
