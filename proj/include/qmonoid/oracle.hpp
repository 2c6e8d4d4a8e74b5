#pragma once

// Brute-force semantics: word enumeration and queue-by-queue equivalence.
// Nothing here consults the rewriting system.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qmonoid/core.hpp"

namespace qmonoid {

  // Words over Σ = A ∪ Ā of length ≤ max_length, shortest first.
  std::vector<Word> all_words(Alphabet const& alphabet,
                              std::size_t     max_length);
  std::vector<Word> words_of_length(Alphabet const& alphabet,
                                    std::size_t     length);
  // Words over A of length ≤ max_length, shortest first.
  std::vector<Letters> all_letter_words(Alphabet const& alphabet,
                                        std::size_t     max_length);

  // Queue-length bound used by equiv_oracle: |u| + |v| unless overridden.
  std::size_t oracle_queue_bound(Word const& u, Word const& v);

  // True iff q.u = q.v for every queue q over A of length ≤ bound
  // (default oracle_queue_bound(u, v)).
  bool equiv_oracle(Alphabet const&            alphabet,
                    Word const&                u,
                    Word const&                v,
                    std::optional<std::size_t> bound = std::nullopt);

  // Caches the action of a batch of words on every queue of length
  // ≤ max_queue_length, for many oracle queries over the same word set.
  // Answers exactly what equiv_oracle answers with the default bound,
  // provided that bound does not exceed max_queue_length.
  class BehaviorTable {
   public:
    BehaviorTable(Alphabet const&   alphabet,
                  std::vector<Word> words,
                  std::size_t       max_queue_length);

    std::size_t size() const noexcept {
      return _words.size();
    }
    Word const& word(std::size_t i) const {
      return _words[i];
    }
    bool equivalent(std::size_t i, std::size_t j) const;

   private:
    std::size_t                        _queue_count_upto(std::size_t) const;
    std::size_t                        _max_queue_length;
    std::vector<Word>                  _words;
    std::vector<std::size_t>           _queues_upto;  // cumulative counts
    std::vector<std::vector<uint64_t>> _rows;
  };

}  // namespace qmonoid
