#pragma once

// A deterministic automaton accepting the class [w] = { v | v ≡ w }.
//
// States are quadruples (i, j, k, l) of positions in w = w₁…wₙ. A state
// denotes the normal-form word p̄₁⟨p₂|p₂⟩p₃ with
//   p₁ = π̄(w[1..i]),  p₂ = π̄(w[i+1..j]) = π(w[1..k]),  p₃ = π(w[k+1..l]),
// where i and j are 0 or read positions, and k and l are 0 or write
// positions. After reading v the automaton sits in the state denoting
// nf(v), as long as [v] is a left divisor of [w].

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qmonoid/automata.hpp"
#include "qmonoid/core.hpp"

namespace qmonoid {

  struct Quad {
    std::size_t i = 0, j = 0, k = 0, l = 0;

    auto operator<=>(Quad const&) const = default;
  };

  std::string to_string(Quad const& q);

  class ClassAutomaton {
   public:
    explicit ClassAutomaton(Word w);

    Word const& word() const noexcept {
      return _w;
    }
    Quad initial() const noexcept {
      return {};
    }
    // Successor on s, or nullopt when the automaton has no s-move.
    std::optional<Quad> step(Quad const& p, Symbol s) const;
    bool                is_accepting(Quad const& p) const;
    // Checks the defining conditions of a state.
    bool       is_state(Quad const& p) const;
    NormalForm denoted(Quad const& p) const;

   private:
    // Number of reads (writes) among w[1..pos].
    std::size_t _reads_upto(std::size_t pos) const {
      return _reads_before[pos];
    }
    std::size_t _writes_upto(std::size_t pos) const {
      return pos - _reads_before[pos];
    }

    Word                     _w;
    Letters                  _pi, _pibar;
    std::vector<std::size_t> _read_pos, _write_pos;  // 1-based positions
    std::vector<std::size_t> _reads_before;          // size |w|+1
    Quad                     _accept;
  };

  // Eager construction over the reachable quadruples; states are labelled
  // "(i,j,k,l)".
  Dfa class_dfa(Word const& w, Alphabet const& alphabet);

  // True iff some v ∈ L(a) satisfies v ≡ w. Explores the product of a with
  // the class automaton on demand.
  bool rational_member(Word const& w, Nfa const& a);

}  // namespace qmonoid
