#pragma once

// Conjugacy in the monoid of queue actions, and automata for conjugator
// sets C(x,y) = { z | xz = zy }.

#include <cstddef>
#include <optional>

#include "qmonoid/automata.hpp"
#include "qmonoid/core.hpp"

namespace qmonoid {

  // u and v are cyclic shifts of each other.
  bool free_conjugate(Letters const& u, Letters const& v);

  // p ≈ q, decided through the projections: π(p) ~ π(q) and π̄(p) ~ π̄(q).
  bool conjugate(NormalForm const& p, NormalForm const& q);

  // { z ∈ A* | uz = zv }, over letters.
  Nfa free_conjugator_lang(Alphabet const& alphabet,
                           Letters const&  u,
                           Letters const&  v);

  // The normal-form words Ā*{aā}*A*.
  Nfa normal_form_language(Alphabet const& alphabet);

  // Words z with π(xz) = π(zy) and π̄(xz) = π̄(zy).
  Nfa overconj_nfa(Alphabet const&   alphabet,
                   NormalForm const& x,
                   NormalForm const& y);

  // Normal-form words z of the previous set with ow(xz) − ow(z) ≥ k.
  Nfa g_k_nfa(Alphabet const&   alphabet,
              NormalForm const& x,
              NormalForm const& y,
              std::size_t       k);

  struct ConjugatorAutomaton {
    NormalForm x;
    NormalForm y;
    Nfa        nfa;  // accepts exactly the nf-words of C(x,y)

    bool accepts(NormalForm const& z) const {
      return nfa.accepts(z.to_word());
    }
  };

  ConjugatorAutomaton conjugator_nfa(Alphabet const&   alphabet,
                                     NormalForm const& x,
                                     NormalForm const& y);

  // A verified z with pz = zq, shortest in the conjugator automaton.
  std::optional<NormalForm> find_conjugator(Alphabet const&   alphabet,
                                            NormalForm const& p,
                                            NormalForm const& q);

}  // namespace qmonoid
