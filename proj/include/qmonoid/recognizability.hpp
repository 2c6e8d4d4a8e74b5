#pragma once

// Ω_k sets, k-shuffled words, and simple sets: Boolean combinations of
// π⁻¹(R), π̄⁻¹(R) and Ω_k, evaluated directly or compiled to automata.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qmonoid/automata.hpp"
#include "qmonoid/core.hpp"

namespace qmonoid {

  // The i-th write symbol occurs before the i-th of the last k reads,
  // for every i ≤ k; needs at least k writes and k reads.
  bool k_shuffled(Word const& w, std::size_t k);

  // q ∈ Ω_k: no ℓ with ow(q) < ℓ ≤ k such that some word of length ℓ is a
  // suffix of π̄(q) and a prefix of π(q).
  bool in_omega(NormalForm const& q, std::size_t k);

  // The ℓ-shuffled words.
  Nfa shuffled_nfa(Alphabet const& alphabet, std::size_t ell);

  // η⁻¹(Ω_k), deterministic and minimal.
  Dfa omega_dfa(Alphabet const& alphabet, std::size_t k);
  Nfa omega_nfa(Alphabet const& alphabet, std::size_t k);

  // Regular expressions over A: letters, juxtaposition, |, *, parentheses,
  // 1 for the empty word and 0 for the empty language.
  Nfa parse_regex(std::string_view text, Alphabet const& alphabet);

  class SimpleSetExpr {
   public:
    struct PiIn {
      std::string source;
      Nfa         language;  // over letters
    };
    struct PiBarIn {
      std::string source;
      Nfa         language;
    };
    struct Omega {
      std::size_t k;
    };
    struct And {
      std::shared_ptr<SimpleSetExpr const> lhs, rhs;
    };
    struct Or {
      std::shared_ptr<SimpleSetExpr const> lhs, rhs;
    };
    struct Not {
      std::shared_ptr<SimpleSetExpr const> operand;
    };
    using Node = std::variant<PiIn, PiBarIn, Omega, And, Or, Not>;

    explicit SimpleSetExpr(Node node) : _node(std::move(node)) {}

    static SimpleSetExpr pi_in(Nfa language, std::string source = "R");
    static SimpleSetExpr pibar_in(Nfa language, std::string source = "R");
    static SimpleSetExpr omega(std::size_t k);

    Node const& node() const noexcept {
      return _node;
    }

   private:
    Node _node;
  };

  SimpleSetExpr operator&&(SimpleSetExpr a, SimpleSetExpr b);
  SimpleSetExpr operator||(SimpleSetExpr a, SimpleSetExpr b);
  SimpleSetExpr operator!(SimpleSetExpr a);

  std::string to_string(SimpleSetExpr const& e);

  // Syntax: pi(REGEX), pibar(REGEX), omega(K), &, |, !, parentheses.
  SimpleSetExpr parse_simple(std::string_view text, Alphabet const& alphabet);

  bool eval_simple(SimpleSetExpr const& e, NormalForm const& q);

  // Accepts exactly { w | eval_simple(e, nf(w)) }.
  Dfa compile_simple(SimpleSetExpr const& e, Alphabet const& alphabet);

}  // namespace qmonoid
