#include <sstream>

#include "doctest.h"
#include "qmonoid/automata.hpp"
#include "qmonoid/oracle.hpp"
#include "support.hpp"

using namespace qmonoid;
using namespace qmonoid::test;

namespace {
  SymbolSet const sigma(ab, SymbolSpace::sigma);
  SymbolSet const letters(ab, SymbolSpace::letters);

  Nfa random_nfa(std::mt19937_64& rng, SymbolSet const& symbols, std::size_t states) {
    Nfa                                 x(symbols);
    std::bernoulli_distribution         coin(0.3);
    std::uniform_int_distribution<State> pick(0, states - 1);
    for (State s = 0; s < states; ++s) {
      x.add_state(s == 0 || coin(rng), coin(rng));
    }
    for (State s = 0; s < states; ++s) {
      for (SymbolId a = 0; a < symbols.size(); ++a) {
        if (coin(rng)) {
          x.add_transition(s, a, pick(rng));
        }
      }
      if (coin(rng) && coin(rng)) {
        x.add_epsilon(s, pick(rng));
      }
    }
    return x;
  }

  Nfa words(std::initializer_list<char const*> ws) {
    Nfa out = empty_language(sigma);
    for (auto w : ws) {
      out = unite(out, word_language(sigma, sigma.encode(W(w))));
    }
    return out;
  }
}  // namespace

TEST_CASE("symbol ids") {
  CHECK(sigma.size() == 4);
  CHECK(sigma.id(Symbol::write('b')) == 1);
  CHECK(sigma.id(Symbol::read('a')) == 2);
  CHECK(sigma.name(3) == "B");
  CHECK(sigma.parse("A") == 2);
  CHECK(letters.size() == 2);
  CHECK_THROWS_AS(letters.id(Symbol::read('a')), std::invalid_argument);
  CHECK_THROWS_AS(sigma.parse("c"), ParseError);
}

TEST_CASE("basic languages") {
  CHECK(is_empty(empty_language(sigma)));
  CHECK(universal_language(sigma).accepts(W("aBBa")));
  Nfa x = words({"Ba", "aB"});
  CHECK(x.accepts(W("aB")));
  CHECK_FALSE(x.accepts(W("a")));
  auto w = shortest_accepted(x);
  REQUIRE(w.has_value());
  CHECK(w->size() == 2);
  CHECK_FALSE(shortest_accepted(empty_language(sigma)).has_value());
  CHECK(is_empty(intersect(x, complement(x).to_nfa())));
}

TEST_CASE("boolean operations match their definitions") {
  std::mt19937_64 rng(7);
  auto            sample = all_words(ab, 5);
  for (int round = 0; round < 30; ++round) {
    Nfa x = random_nfa(rng, sigma, 4), y = random_nfa(rng, sigma, 4);
    Nfa u = unite(x, y), i = intersect(x, y), d = difference(x, y);
    Nfa c = concat(x, y), s = star(x), r = reverse(x);
    Dfa dx = determinize(x), mx = minimize(dx), cx = complement(x);
    Dfa pu = product(determinize(x), determinize(y), true);
    Dfa pi = product(determinize(x), determinize(y), false);
    CHECK(cx.is_complete());
    CHECK(mx.state_count() <= complete(dx).state_count());
    for (auto const& w : sample) {
      bool in_x = x.accepts(w), in_y = y.accepts(w);
      REQUIRE(u.accepts(w) == (in_x || in_y));
      REQUIRE(i.accepts(w) == (in_x && in_y));
      REQUIRE(d.accepts(w) == (in_x && !in_y));
      REQUIRE(dx.accepts(w) == in_x);
      REQUIRE(mx.accepts(w) == in_x);
      REQUIRE(cx.accepts(w) == !in_x);
      REQUIRE(pu.accepts(w) == (in_x || in_y));
      REQUIRE(pi.accepts(w) == (in_x && in_y));
      REQUIRE(remove_epsilon(x).accepts(w) == in_x);
      REQUIRE(trim(x).accepts(w) == in_x);
      REQUIRE(r.accepts(Word(w.rbegin(), w.rend())) == in_x);
      bool split = false;
      for (std::size_t k = 0; k <= w.size() && !split; ++k) {
        split = x.accepts(Word(w.begin(), w.begin() + k))
                && y.accepts(Word(w.begin() + k, w.end()));
      }
      REQUIRE(c.accepts(w) == split);
    }
    CHECK(s.accepts(W("")));
    CHECK(equivalent(x, mx.to_nfa()));
    CHECK(equivalent(x, dual_automaton(dual_automaton(x))));
    auto shortest = shortest_accepted(x);
    CHECK(shortest.has_value() == !is_empty(x));
    if (shortest) {
      CHECK(x.accepts(*shortest));
      for (auto const& w : sample) {
        if (w.size() < shortest->size()) {
          REQUIRE_FALSE(x.accepts(w));
        }
      }
    }
  }
}

TEST_CASE("star") {
  Nfa x = star(words({"aB"}));
  CHECK(x.accepts(W("")));
  CHECK(x.accepts(W("aBaB")));
  CHECK_FALSE(x.accepts(W("aBa")));
}

TEST_CASE("alphabet mismatch is rejected") {
  Nfa x = universal_language(sigma);
  Nfa y = universal_language(letters);
  Nfa z = universal_language(SymbolSet(Alphabet("abc"), SymbolSpace::sigma));
  CHECK_THROWS_AS(intersect(x, y), std::invalid_argument);
  CHECK_THROWS_AS(unite(x, z), std::invalid_argument);
  CHECK_THROWS_AS(concat(x, z), std::invalid_argument);
}

TEST_CASE("inverse projections") {
  Nfa a_star = star(word_language(letters, letters.encode(Letters("a"))));
  Nfa pi     = inverse_pi(a_star);
  Nfa pibar  = inverse_pibar(a_star);
  for (auto const& w : all_words(ab, 4)) {
    auto [p, pb] = proj(w);
    CHECK(pi.accepts(w) == (p.find('b') == Letters::npos));
    CHECK(pibar.accepts(w) == (pb.find('b') == Letters::npos));
  }
}

TEST_CASE("dual automaton") {
  Nfa x = words({"aB"});
  Nfa d = dual_automaton(x);
  CHECK(d.accepts(W("bA")));
  CHECK_FALSE(d.accepts(W("aB")));
  std::mt19937_64 rng(11);
  for (int round = 0; round < 10; ++round) {
    Nfa y  = random_nfa(rng, sigma, 5);
    Nfa dy = dual_automaton(y);
    for (auto const& w : all_words(ab, 5)) {
      REQUIRE(dy.accepts(dual(w)) == y.accepts(w));
    }
  }
}

TEST_CASE("text format round trip") {
  std::mt19937_64 rng(3);
  Nfa             x = remove_epsilon(random_nfa(rng, sigma, 5));
  std::ostringstream out;
  write_text(out, x);
  std::istringstream in(out.str());
  Nfa                y = read_text(in);
  CHECK(equivalent(x, y));

  std::istringstream text(
      "# two words\n"
      "alphabet: ab\n"
      "state 0 initial\n"
      "state 1\n"
      "state 2 accepting\n"
      "trans 0 a 1\n"
      "trans 1 B 2\n");
  Nfa z = read_text(text);
  CHECK(z.accepts(W("aB")));
  CHECK_FALSE(z.accepts(W("Ba")));
}

TEST_CASE("text format errors carry line numbers") {
  auto fails = [](std::string const& text) {
    std::istringstream in(text);
    try {
      read_text(in);
    } catch (ParseError const& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(fails("state 0\n").find("line 1") != std::string::npos);
  CHECK(fails("alphabet: ab\nstate 0\ntrans 0 c 0\n").find("line 3") != std::string::npos);
  CHECK(fails("alphabet: ab\nstate 0\ntrans 0 a 4\n") != "");
  CHECK(fails("alphabet: ab\nstate x\nstate x\n").find("line 3") != std::string::npos);
  CHECK(fails("trans 0 a 0\n").find("alphabet") != std::string::npos);
  CHECK(fails("alphabet: ab\nbogus\n") != "");
}

TEST_CASE("dot export") {
  Dfa                d = determinize(words({"aB"}));
  std::ostringstream out;
  write_dot(out, d);
  std::string dot = out.str();
  CHECK(dot.starts_with("digraph"));
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot.find("label=\"B\"") != std::string::npos);
}

TEST_CASE("relabel erases and renames symbols") {
  Nfa x = words({"aBb"});
  Nfa p = relabel(x, letters, [](SymbolId id) -> std::optional<SymbolId> {
    if (id < 2) {
      return id;
    }
    return std::nullopt;
  });
  CHECK(p.accepts(Letters("ab")));
  CHECK_FALSE(p.accepts(Letters("abb")));
}
