#include "qmonoid/conjugacy.hpp"

#include <stdexcept>

namespace qmonoid {

  namespace {
    void require_letters(Alphabet const& alphabet, Letters const& v) {
      for (char c : v) {
        if (!alphabet.contains(c)) {
          throw std::invalid_argument(std::string("letter '") + c
                                      + "' is not in the alphabet");
        }
      }
    }

    void require_over(Alphabet const& alphabet, NormalForm const& x) {
      require_letters(alphabet, x.reads);
      require_letters(alphabet, x.shuffled);
      require_letters(alphabet, x.writes);
    }

    // Appends a path spelling w from `from`; returns the last state.
    State add_path(Nfa& nfa, State from, IdWord const& w) {
      for (SymbolId a : w) {
        State next = nfa.add_state();
        nfa.add_transition(from, a, next);
        from = next;
      }
      return from;
    }

    // X_u = A*u ∪ { z₁ | u = v z₁, v a suffix of x₂ }.
    Nfa suffix_language(SymbolSet const& letters,
                        Letters const&   u,
                        Letters const&   x2) {
      Nfa   out(letters);
      State start = out.add_state(true, false);
      for (SymbolId a = 0; a < letters.size(); ++a) {
        out.add_transition(start, a, start);
      }
      out.set_accepting(add_path(out, start, letters.encode(u)));
      for (std::size_t cut = 0; cut <= u.size(); ++cut) {
        Letters v = u.substr(0, cut);
        if (v.size() <= x2.size()
            && x2.compare(x2.size() - v.size(), v.size(), v) == 0) {
          State s = out.add_state(true, false);
          out.set_accepting(add_path(out, s, letters.encode(u.substr(cut))));
        }
      }
      return out;
    }

    // Y_u for a prefix u of x₂x₃: A* if u = x₂x₃, otherwise the prefix
    // closure of v* where x₂x₃ = uv.
    Nfa prefix_power_language(SymbolSet const& letters,
                              Letters const&   u,
                              Letters const&   pi_x) {
      if (u == pi_x) {
        return universal_language(letters);
      }
      Letters v = pi_x.substr(u.size());
      Nfa     out(letters);
      State   first = out.add_state(true, true);
      State   s     = first;
      for (std::size_t i = 0; i < v.size(); ++i) {
        State t = i + 1 == v.size() ? first : out.add_state(false, true);
        out.add_transition(s, letters.id(v[i]), t);
        s = t;
      }
      return out;
    }

    // φ(L) for L over letters, where φ(a) = a ā.
    Nfa shuffle_image(Nfa const& letters_nfa0) {
      Nfa const   letters_nfa = remove_epsilon(letters_nfa0);
      SymbolSet   sigma(letters_nfa.symbols().alphabet(), SymbolSpace::sigma);
      std::size_t n = sigma.alphabet().size();
      Nfa         out(sigma);
      for (State s = 0; s < letters_nfa.state_count(); ++s) {
        out.add_state(letters_nfa.is_initial(s), letters_nfa.is_accepting(s));
      }
      for (State s = 0; s < letters_nfa.state_count(); ++s) {
        for (SymbolId a = 0; a < n; ++a) {
          for (State t : letters_nfa.successors(s, a)) {
            State mid = out.add_state();
            out.add_transition(s, a, mid);
            out.add_transition(mid, n + a, t);
          }
        }
      }
      return out;
    }

    Nfa as_reads(Nfa const& letters_nfa) {
      SymbolSet   sigma(letters_nfa.symbols().alphabet(), SymbolSpace::sigma);
      std::size_t n = sigma.alphabet().size();
      return relabel(letters_nfa, sigma, [n](SymbolId a) -> std::optional<SymbolId> {
        return n + a;
      });
    }

    Nfa writes_star(SymbolSet const& sigma) {
      std::size_t n = sigma.alphabet().size();
      Nfa         out(sigma);
      State       s = out.add_state(true, true);
      for (SymbolId a = 0; a < n; ++a) {
        out.add_transition(s, a, s);
      }
      return out;
    }

    Nfa compact(Nfa const& x) {
      return minimize(determinize(x)).to_nfa();
    }

    // E_k = G_k \ G_{k+1}.
    Nfa exact_gain(Alphabet const&   alphabet,
                   NormalForm const& x,
                   NormalForm const& y,
                   std::size_t       k) {
      Dfa gk  = determinize(g_k_nfa(alphabet, x, y, k));
      Dfa gk1 = determinize(g_k_nfa(alphabet, x, y, k + 1));
      return minimize(product(gk, complement(gk1), false)).to_nfa();
    }
  }  // namespace

  bool free_conjugate(Letters const& u, Letters const& v) {
    return u.size() == v.size() && (u + u).find(v) != std::string::npos;
  }

  bool conjugate(NormalForm const& p, NormalForm const& q) {
    return free_conjugate(p.pi(), q.pi()) && free_conjugate(p.pibar(), q.pibar());
  }

  Nfa free_conjugator_lang(Alphabet const& alphabet,
                           Letters const&  u,
                           Letters const&  v) {
    require_letters(alphabet, u);
    require_letters(alphabet, v);
    SymbolSet letters(alphabet, SymbolSpace::letters);
    if (u.size() != v.size()) {
      return empty_language(letters);
    }
    if (u.empty()) {
      return universal_language(letters);
    }
    // z ∈ r(sr)* for every factorization u = rs with v = sr.
    Nfa   out(letters);
    State start = out.add_state(true, false);
    for (std::size_t cut = 0; cut < u.size(); ++cut) {
      Letters r = u.substr(0, cut), s = u.substr(cut);
      if (s + r != v) {
        continue;
      }
      State hub = add_path(out, start, letters.encode(r));
      out.set_accepting(hub);
      IdWord loop = letters.encode(s + r);
      State  cur  = hub;
      for (std::size_t i = 0; i < loop.size(); ++i) {
        State next = i + 1 == loop.size() ? hub : out.add_state();
        out.add_transition(cur, loop[i], next);
        cur = next;
      }
    }
    return trim(out);
  }

  Nfa normal_form_language(Alphabet const& alphabet) {
    SymbolSet   sigma(alphabet, SymbolSpace::sigma);
    std::size_t n = alphabet.size();
    Nfa         out(sigma);
    State       reads  = out.add_state(true, true);
    State       paired = out.add_state(false, true);
    State       writes = out.add_state(false, true);
    for (SymbolId a = 0; a < n; ++a) {
      State open = out.add_state();
      out.add_transition(reads, n + a, reads);
      out.add_transition(reads, a, open);
      out.add_transition(paired, a, open);
      out.add_transition(open, n + a, paired);
      out.add_transition(reads, a, writes);
      out.add_transition(paired, a, writes);
      out.add_transition(writes, a, writes);
    }
    return out;
  }

  Nfa overconj_nfa(Alphabet const&   alphabet,
                   NormalForm const& x,
                   NormalForm const& y) {
    require_over(alphabet, x);
    require_over(alphabet, y);
    return intersect(inverse_pi(free_conjugator_lang(alphabet, x.pi(), y.pi())),
                     inverse_pibar(
                         free_conjugator_lang(alphabet, x.pibar(), y.pibar())));
  }

  Nfa g_k_nfa(Alphabet const&   alphabet,
              NormalForm const& x,
              NormalForm const& y,
              std::size_t       k) {
    require_over(alphabet, x);
    require_over(alphabet, y);
    SymbolSet letters(alphabet, SymbolSpace::letters);
    SymbolSet sigma(alphabet, SymbolSpace::sigma);
    Letters   pi_x = x.pi();
    if (k > pi_x.size()) {
      return empty_language(sigma);
    }
    // Only prefixes u of x₂x₃ give a nonempty Y_u.
    Nfa shapes = empty_language(sigma);
    for (std::size_t len = k; len <= pi_x.size(); ++len) {
      Letters u    = pi_x.substr(0, len);
      Nfa     term = concat(
          concat(as_reads(suffix_language(letters, u, x.shuffled)),
                 shuffle_image(prefix_power_language(letters, u, pi_x))),
          writes_star(sigma));
      shapes = unite(shapes, term);
    }
    Nfa nf_shapes = intersect(shapes, normal_form_language(alphabet));
    return intersect(overconj_nfa(alphabet, x, y), nf_shapes);
  }

  ConjugatorAutomaton conjugator_nfa(Alphabet const&   alphabet,
                                     NormalForm const& x,
                                     NormalForm const& y) {
    require_over(alphabet, x);
    require_over(alphabet, y);
    SymbolSet  sigma(alphabet, SymbolSpace::sigma);
    NormalForm dx = dual_nf(x), dy = dual_nf(y);
    Nfa        result = empty_language(sigma);
    for (std::size_t k = 0; k <= x.pi().size(); ++k) {
      Nfa e = exact_gain(alphabet, x, y, k);
      if (is_empty(e)) {
        continue;
      }
      // F_k = δ(E_k for the pair (δ(y), δ(x))).
      Nfa f = dual_automaton(exact_gain(alphabet, dy, dx, k));
      result = unite(result, intersect(e, f));
    }
    return {x, y, compact(result)};
  }

  std::optional<NormalForm> find_conjugator(Alphabet const&   alphabet,
                                            NormalForm const& p,
                                            NormalForm const& q) {
    if (!conjugate(p, q)) {
      return std::nullopt;
    }
    auto ca  = conjugator_nfa(alphabet, p, q);
    auto ids = shortest_accepted(ca.nfa);
    if (!ids) {
      throw std::logic_error("conjugate elements without a conjugator: "
                             + to_string(p) + ", " + to_string(q));
    }
    NormalForm z = NormalForm::from_word(ca.nfa.symbols().decode(*ids));
    if (mul(p, z) != mul(z, q)) {
      throw std::logic_error("conjugator automaton produced a non-witness "
                             + to_string(z));
    }
    return z;
  }

}  // namespace qmonoid
