#include "qmonoid/oracle.hpp"

#include <stdexcept>

namespace qmonoid {

  namespace {
    Symbol sigma_symbol(Alphabet const& alphabet, std::size_t i) {
      std::size_t n = alphabet.size();
      return i < n ? Symbol::write(alphabet[i]) : Symbol::read(alphabet[i - n]);
    }

    // Calls f on every A-word of length exactly len, in lexicographic order
    // of letter indices.
    template <typename F>
    void for_each_letter_word(Alphabet const& alphabet, std::size_t len, F&& f) {
      std::vector<std::size_t> digits(len, 0);
      Letters                  q(len, alphabet[0]);
      while (true) {
        f(q);
        std::size_t i = len;
        while (i > 0 && ++digits[i - 1] == alphabet.size()) {
          digits[--i] = 0;
          q[i]        = alphabet[0];
        }
        if (i == 0) {
          return;
        }
        q[i - 1] = alphabet[digits[i - 1]];
      }
    }

    // act() without allocation; returns false on ⊥.
    bool run(Letters& buf, std::size_t& head, Word const& w) {
      for (Symbol s : w) {
        if (s.is_write()) {
          buf.push_back(s.letter);
        } else if (head < buf.size() && buf[head] == s.letter) {
          ++head;
        } else {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  std::vector<Word> words_of_length(Alphabet const& alphabet,
                                    std::size_t     length) {
    std::size_t              m = 2 * alphabet.size();
    std::vector<Word>        out;
    std::vector<std::size_t> digits(length, 0);
    while (true) {
      Word w(length, Symbol::write(alphabet[0]));
      for (std::size_t i = 0; i < length; ++i) {
        w[i] = sigma_symbol(alphabet, digits[i]);
      }
      out.push_back(std::move(w));
      std::size_t i = length;
      while (i > 0 && ++digits[i - 1] == m) {
        digits[--i] = 0;
      }
      if (i == 0) {
        return out;
      }
    }
  }

  std::vector<Word> all_words(Alphabet const& alphabet,
                              std::size_t     max_length) {
    std::vector<Word> out;
    for (std::size_t len = 0; len <= max_length; ++len) {
      auto ws = words_of_length(alphabet, len);
      out.insert(out.end(),
                 std::make_move_iterator(ws.begin()),
                 std::make_move_iterator(ws.end()));
    }
    return out;
  }

  std::vector<Letters> all_letter_words(Alphabet const& alphabet,
                                        std::size_t     max_length) {
    std::vector<Letters> out;
    for (std::size_t len = 0; len <= max_length; ++len) {
      for_each_letter_word(
          alphabet, len, [&](Letters const& q) { out.push_back(q); });
    }
    return out;
  }

  std::size_t oracle_queue_bound(Word const& u, Word const& v) {
    return u.size() + v.size();
  }

  bool equiv_oracle(Alphabet const&            alphabet,
                    Word const&                u,
                    Word const&                v,
                    std::optional<std::size_t> bound) {
    std::size_t max_len = bound.value_or(oracle_queue_bound(u, v));
    Letters     bu, bv;
    bool        same = true;
    for (std::size_t len = 0; len <= max_len && same; ++len) {
      for_each_letter_word(alphabet, len, [&](Letters const& q) {
        if (!same) {
          return;
        }
        bu.assign(q);
        bv.assign(q);
        std::size_t hu = 0, hv = 0;
        bool        ok_u = run(bu, hu, u);
        bool        ok_v = run(bv, hv, v);
        if (ok_u != ok_v
            || (ok_u && bu.compare(hu, std::string::npos, bv, hv) != 0)) {
          same = false;
        }
      });
    }
    return same;
  }

  ////////////////////////////////////////////////////////////////////////
  // BehaviorTable
  ////////////////////////////////////////////////////////////////////////

  BehaviorTable::BehaviorTable(Alphabet const&   alphabet,
                               std::vector<Word> words,
                               std::size_t       max_queue_length)
      : _max_queue_length(max_queue_length), _words(std::move(words)) {
    // Results are packed as base-(n+1) digits behind a leading 1; ⊥ is 0.
    std::size_t longest = 0;
    for (auto const& w : _words) {
      longest = std::max(longest, w.size());
    }
    std::size_t base = alphabet.size() + 1;
    long double cap  = 1;
    for (std::size_t i = 0; i <= max_queue_length + longest; ++i) {
      cap *= static_cast<long double>(base);
    }
    if (cap >= 1.8e19L) {
      throw std::invalid_argument(
          "BehaviorTable: queue results do not fit in 64 bits");
    }

    std::vector<Letters> queues;
    _queues_upto.clear();
    for (std::size_t len = 0; len <= max_queue_length; ++len) {
      for_each_letter_word(
          alphabet, len, [&](Letters const& q) { queues.push_back(q); });
      _queues_upto.push_back(queues.size());
    }

    _rows.reserve(_words.size());
    Letters buf;
    for (auto const& w : _words) {
      std::vector<uint64_t> row;
      row.reserve(queues.size());
      for (auto const& q : queues) {
        buf.assign(q);
        std::size_t head = 0;
        if (!run(buf, head, w)) {
          row.push_back(0);
          continue;
        }
        uint64_t code = 1;
        for (std::size_t i = head; i < buf.size(); ++i) {
          code = code * base + alphabet.index_of(buf[i]) + 1;
        }
        row.push_back(code);
      }
      _rows.push_back(std::move(row));
    }
  }

  std::size_t BehaviorTable::_queue_count_upto(std::size_t len) const {
    if (len > _max_queue_length) {
      throw std::out_of_range(
          "BehaviorTable: oracle bound exceeds the tabulated queue length");
    }
    return _queues_upto[len];
  }

  bool BehaviorTable::equivalent(std::size_t i, std::size_t j) const {
    std::size_t n  = _queue_count_upto(oracle_queue_bound(_words[i], _words[j]));
    auto const& ri = _rows[i];
    auto const& rj = _rows[j];
    for (std::size_t q = 0; q < n; ++q) {
      if (ri[q] != rj[q]) {
        return false;
      }
    }
    return true;
  }

}  // namespace qmonoid
