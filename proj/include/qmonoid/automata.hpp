#pragma once

// Finite automata over A (letters) or Σ = A ∪ Ā (queue symbols).
//
// Symbols are addressed by dense ids. Over A, letter i of the alphabet has
// id i. Over Σ, the write symbol of letter i has id i and the read symbol
// has id n + i, where n = |A|. Partial DFAs are allowed everywhere; only
// complement() completes with an explicit dead state.

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "qmonoid/core.hpp"

namespace qmonoid {

  enum class SymbolSpace : unsigned char { letters, sigma };

  using State    = std::size_t;
  using SymbolId = std::size_t;
  using IdWord   = std::vector<SymbolId>;

  // The alphabet an automaton reads, with symbol/id conversions.
  class SymbolSet {
   public:
    SymbolSet(Alphabet alphabet, SymbolSpace space)
        : _alphabet(std::move(alphabet)), _space(space) {}

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    SymbolSpace space() const noexcept {
      return _space;
    }
    std::size_t size() const noexcept {
      return _space == SymbolSpace::sigma ? 2 * _alphabet.size()
                                          : _alphabet.size();
    }

    SymbolId id(Symbol s) const;
    SymbolId id(char letter) const;  // write symbol / plain letter
    Symbol   symbol(SymbolId id) const;
    // Symbol syntax of words: lowercase write, uppercase read.
    std::string name(SymbolId id) const;
    SymbolId    parse(std::string_view token) const;

    IdWord  encode(Word const& w) const;
    IdWord  encode(Letters const& v) const;
    Word    decode(IdWord const& w) const;
    Letters decode_letters(IdWord const& w) const;

    bool operator==(SymbolSet const&) const = default;

   private:
    Alphabet    _alphabet;
    SymbolSpace _space;
  };

  class Nfa {
   public:
    explicit Nfa(SymbolSet symbols) : _symbols(std::move(symbols)) {}
    Nfa(Alphabet alphabet, SymbolSpace space)
        : Nfa(SymbolSet(std::move(alphabet), space)) {}

    SymbolSet const& symbols() const noexcept {
      return _symbols;
    }
    std::size_t state_count() const noexcept {
      return _accepting.size();
    }
    std::size_t transition_count() const;

    State add_state(bool initial = false, bool accepting = false);
    void  set_initial(State s, bool value = true);
    void  set_accepting(State s, bool value = true);
    void  set_label(State s, std::string label);
    void  add_transition(State from, SymbolId symbol, State to);
    void  add_epsilon(State from, State to);

    bool is_initial(State s) const {
      return _initial.at(s) != 0;
    }
    bool is_accepting(State s) const {
      return _accepting.at(s) != 0;
    }
    std::string const& label(State s) const {
      return _labels.at(s);
    }
    std::vector<State> initial_states() const;
    std::vector<State> const& successors(State s, SymbolId symbol) const {
      return _delta.at(s).at(symbol);
    }
    std::vector<State> const& epsilon_successors(State s) const {
      return _epsilon.at(s);
    }
    bool has_epsilon() const;

    // Sorted epsilon closure of a set of states.
    std::vector<State> closure(std::vector<State> states) const;

    bool accepts(IdWord const& w) const;
    bool accepts(Word const& w) const;
    bool accepts(Letters const& v) const;

   private:
    SymbolSet                                    _symbols;
    std::vector<char>                            _initial;
    std::vector<char>                            _accepting;
    std::vector<std::string>                     _labels;
    std::vector<std::vector<std::vector<State>>> _delta;
    std::vector<std::vector<State>>              _epsilon;
  };

  class Dfa {
   public:
    static constexpr State none = std::numeric_limits<State>::max();

    explicit Dfa(SymbolSet symbols) : _symbols(std::move(symbols)) {}
    Dfa(Alphabet alphabet, SymbolSpace space)
        : Dfa(SymbolSet(std::move(alphabet), space)) {}

    SymbolSet const& symbols() const noexcept {
      return _symbols;
    }
    std::size_t state_count() const noexcept {
      return _accepting.size();
    }

    State add_state(bool accepting = false);
    void  set_accepting(State s, bool value = true);
    void  set_label(State s, std::string label);
    void  set_transition(State from, SymbolId symbol, State to);
    void  set_initial(State s);

    // Dfa::none when the automaton has no states.
    State initial() const noexcept {
      return _initial;
    }
    State next(State s, SymbolId symbol) const {
      return _delta.at(s).at(symbol);
    }
    bool is_accepting(State s) const {
      return _accepting.at(s) != 0;
    }
    std::string const& label(State s) const {
      return _labels.at(s);
    }
    bool is_complete() const;

    bool accepts(IdWord const& w) const;
    bool accepts(Word const& w) const;
    bool accepts(Letters const& v) const;

    Nfa to_nfa() const;

   private:
    SymbolSet                       _symbols;
    State                           _initial = none;
    std::vector<char>               _accepting;
    std::vector<std::string>        _labels;
    std::vector<std::vector<State>> _delta;
  };

  // Construction helpers.
  Nfa empty_language(SymbolSet const& symbols);
  Nfa universal_language(SymbolSet const& symbols);  // Σ* (or A*)
  Nfa word_language(SymbolSet const& symbols, IdWord const& w);  // {w}
  Nfa any_symbol(SymbolSet const& symbols);  // every single-symbol word
  // Single-symbol words whose symbol satisfies pred.
  Nfa symbol_class(SymbolSet const&                     symbols,
                   std::function<bool(SymbolId)> const& pred);

  Nfa concat(Nfa const& x, Nfa const& y);
  Nfa star(Nfa const& x);
  Nfa unite(Nfa const& x, Nfa const& y);
  Nfa intersect(Nfa const& x, Nfa const& y);
  Nfa difference(Nfa const& x, Nfa const& y);

  Nfa remove_epsilon(Nfa const& x);
  Nfa trim(Nfa const& x);  // drop states not on an accepting path
  Nfa reverse(Nfa const& x);
  // Maps each symbol of x to a symbol of target or to ε (nullopt).
  Nfa relabel(Nfa const&                                              x,
              SymbolSet const&                                        target,
              std::function<std::optional<SymbolId>(SymbolId)> const& map);

  Dfa determinize(Nfa const& x);
  Dfa complete(Dfa const& x);
  Dfa complement(Dfa const& x);
  Dfa complement(Nfa const& x);
  Dfa minimize(Dfa const& x);
  Dfa product(Dfa const& x, Dfa const& y, bool want_union);

  bool                  is_empty(Nfa const& x);
  std::optional<IdWord> shortest_accepted(Nfa const& x);
  // Both directions of inclusion, via difference emptiness.
  bool equivalent(Nfa const& x, Nfa const& y);

  // π⁻¹(L) and π̄⁻¹(L) for L over A: symbols of the other kind self-loop.
  Nfa inverse_pi(Nfa const& letters_nfa);
  Nfa inverse_pibar(Nfa const& letters_nfa);
  // { δ(w) | w ∈ L(x) }: reversed, each write/read kind toggled.
  Nfa dual_automaton(Nfa const& x);

  // Text and DOT interchange.
  //   alphabet: <letters>
  //   state <id> [initial] [accepting]
  //   trans <src> <symbol> <dst>
  void write_text(std::ostream& out, Nfa const& x);
  void write_text(std::ostream& out, Dfa const& x);
  Nfa  read_text(std::istream& in, SymbolSpace space = SymbolSpace::sigma);
  void write_dot(std::ostream& out, Nfa const& x);
  void write_dot(std::ostream& out, Dfa const& x);

}  // namespace qmonoid
