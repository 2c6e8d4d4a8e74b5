#pragma once

// Queue actions: words over write letters a and read letters ā, the
// rewriting system that normalizes them, and closed-form multiplication of
// normal forms.

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qmonoid {

  class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Words over the base alphabet A are plain strings of lowercase letters.
  using Letters = std::string;

  class Alphabet {
   public:
    explicit Alphabet(std::string_view letters);

    std::string const& letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    char operator[](std::size_t i) const {
      return _letters[i];
    }
    bool contains(char c) const noexcept;
    // Position of c in the fixed letter order; throws if c is not a letter.
    std::size_t index_of(char c) const;

    bool operator==(Alphabet const&) const = default;

   private:
    std::string _letters;
  };

  enum class Kind : unsigned char { write, read };

  struct Symbol {
    char letter;
    Kind kind;

    static constexpr Symbol write(char c) noexcept {
      return {c, Kind::write};
    }
    static constexpr Symbol read(char c) noexcept {
      return {c, Kind::read};
    }
    constexpr bool is_write() const noexcept {
      return kind == Kind::write;
    }
    constexpr bool is_read() const noexcept {
      return kind == Kind::read;
    }

    auto operator<=>(Symbol const&) const = default;
  };

  using Word = std::vector<Symbol>;

  // Word syntax: lowercase c is the write symbol c, uppercase C is the read
  // symbol c̄. The empty word is "" or "e".
  Word        parse_word(std::string_view text);
  Word        parse_word(std::string_view text, Alphabet const& alphabet);
  std::string to_string(Word const& w);
  std::string to_string(Symbol s);

  Word writes_of(Letters const& v);  // v as write symbols
  Word reads_of(Letters const& v);   // v̄
  Word concat(Word a, Word const& b);

  // Queue contents or ⊥. ⊥ absorbs every action.
  class QueueState {
   public:
    QueueState() = default;
    explicit QueueState(Letters contents) : _contents(std::move(contents)) {}

    static QueueState bottom() {
      QueueState q;
      q._contents.reset();
      return q;
    }
    bool is_bottom() const noexcept {
      return !_contents.has_value();
    }
    Letters const& contents() const;

    bool operator==(QueueState const&) const = default;

   private:
    std::optional<Letters> _contents = Letters{};
  };

  std::string to_string(QueueState const& q);  // ⊥ prints as BOT
  QueueState  parse_queue(std::string_view text, Alphabet const& alphabet);

  QueueState act(QueueState const& q, Word const& w);

  // The canonical representative ū₁⟨u₂|u₂⟩u₃ of a queue action, stored as
  // the triple (reads, shuffled, writes) = (u₁, u₂, u₃).
  struct NormalForm {
    Letters reads;
    Letters shuffled;
    Letters writes;

    static NormalForm identity() {
      return {};
    }
    // Parses an irreducible word; throws std::invalid_argument otherwise.
    static NormalForm from_word(Word const& w);

    Word to_word() const;

    Letters pi() const {
      return shuffled + writes;
    }
    Letters pibar() const {
      return reads + shuffled;
    }
    std::size_t overlap_width() const noexcept {
      return shuffled.size();
    }
    std::size_t length() const noexcept {
      return reads.size() + 2 * shuffled.size() + writes.size();
    }

    auto operator<=>(NormalForm const&) const = default;
  };

  std::string to_string(NormalForm const& x);

  struct NormalFormHash {
    std::size_t operator()(NormalForm const& x) const noexcept;
  };

  // Rewriting rules, in priority order.
  enum class Rule : unsigned char {
    swap_distinct,  // a b̄ → b̄ a, a ≠ b
    pull_read,      // a b b̄ → a b̄ b
    push_write,     // a ā b̄ → ā a b̄
  };

  struct RewriteStep {
    std::size_t position;
    Rule        rule;
    Word        result;
  };

  // Rule applicable at position pos, preferring the earlier rule.
  std::optional<Rule> redex_at(Word const& w, std::size_t pos);
  Word                apply_rule(Word const& w, std::size_t pos, Rule rule);
  bool                is_irreducible(Word const& w);
  // Every word reachable from w in exactly one rewriting step.
  std::vector<Word> one_step_rewrites(Word const& w);

  // Leftmost redex first; trace receives every intermediate word.
  Word       rewrite_to_irreducible(Word w,
                                    std::vector<RewriteStep>* trace = nullptr);
  NormalForm rewrite_normalize(Word const& w,
                               std::vector<RewriteStep>* trace = nullptr);

  // Longest suffix of v that is also a prefix of u.
  Letters overlap(std::string_view v, std::string_view u);

  NormalForm mul(NormalForm const& x, NormalForm const& y);
  NormalForm generator(Symbol s);
  NormalForm eval_word(Word const& w);

  std::pair<Letters, Letters> proj(Word const& w);
  std::pair<Letters, Letters> proj(NormalForm const& x);

  std::size_t ow(Word const& w);
  std::size_t ow(NormalForm const& x);

  Word       dual(Word const& w);
  NormalForm dual_nf(NormalForm const& x);

  // ⟨v|w⟩ = v₁w̄₁v₂w̄₂…; requires |v| = |w|.
  Word shuffle(Letters const& v, Letters const& w);

  // φ(αᵢ) = a^{n+i} b a^{n-i} b for the i-th (1-based) letter of source.
  Letters embed_q2_letter(Alphabet const& source, char letter);
  Word    embed_q2(Word const& w, Alphabet const& source);

  // α: {a,b}* × {c,d}* → 𝒬 with a ↦ [a], b ↦ [ab], c ↦ [b̄], d ↦ [āb̄b̄].
  NormalForm embed_product(std::string_view s, std::string_view t);

}  // namespace qmonoid
