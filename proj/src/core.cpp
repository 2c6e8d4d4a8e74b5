#include "qmonoid/core.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qmonoid {

  ////////////////////////////////////////////////////////////////////////
  // Alphabet, symbols, words
  ////////////////////////////////////////////////////////////////////////

  Alphabet::Alphabet(std::string_view letters) : _letters(letters) {
    if (_letters.size() < 2) {
      throw std::invalid_argument("alphabet needs at least two letters, got \""
                                  + _letters + "\"");
    }
    for (std::size_t i = 0; i < _letters.size(); ++i) {
      char c = _letters[i];
      if (c < 'a' || c > 'z') {
        throw std::invalid_argument(
            std::string("alphabet letters must be lowercase ASCII, got '") + c
            + "'");
      }
      if (_letters.find(c, i + 1) != std::string::npos) {
        throw std::invalid_argument(std::string("duplicate alphabet letter '")
                                    + c + "'");
      }
    }
  }

  bool Alphabet::contains(char c) const noexcept {
    return _letters.find(c) != std::string::npos;
  }

  std::size_t Alphabet::index_of(char c) const {
    auto pos = _letters.find(c);
    if (pos == std::string::npos) {
      throw std::invalid_argument(std::string("letter '") + c
                                  + "' is not in the alphabet");
    }
    return pos;
  }

  Word parse_word(std::string_view text) {
    Word w;
    if (text == "e") {
      return w;
    }
    w.reserve(text.size());
    for (char c : text) {
      if (c >= 'a' && c <= 'z') {
        w.push_back(Symbol::write(c));
      } else if (c >= 'A' && c <= 'Z') {
        w.push_back(Symbol::read(static_cast<char>(c - 'A' + 'a')));
      } else {
        throw ParseError(std::string("invalid character '") + c
                         + "' in word \"" + std::string(text) + "\"");
      }
    }
    return w;
  }

  Word parse_word(std::string_view text, Alphabet const& alphabet) {
    Word w = parse_word(text);
    for (Symbol s : w) {
      if (!alphabet.contains(s.letter)) {
        throw ParseError(std::string("letter '") + s.letter
                         + "' is not in the alphabet \"" + alphabet.letters()
                         + "\"");
      }
    }
    return w;
  }

  std::string to_string(Symbol s) {
    return std::string(
        1,
        s.is_write() ? s.letter : static_cast<char>(s.letter - 'a' + 'A'));
  }

  std::string to_string(Word const& w) {
    std::string out;
    out.reserve(w.size());
    for (Symbol s : w) {
      out += to_string(s);
    }
    return out;
  }

  Word writes_of(Letters const& v) {
    Word w;
    w.reserve(v.size());
    for (char c : v) {
      w.push_back(Symbol::write(c));
    }
    return w;
  }

  Word reads_of(Letters const& v) {
    Word w;
    w.reserve(v.size());
    for (char c : v) {
      w.push_back(Symbol::read(c));
    }
    return w;
  }

  Word concat(Word a, Word const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  ////////////////////////////////////////////////////////////////////////
  // Queue semantics
  ////////////////////////////////////////////////////////////////////////

  Letters const& QueueState::contents() const {
    if (!_contents) {
      throw std::logic_error("QueueState::contents called on BOT");
    }
    return *_contents;
  }

  std::string to_string(QueueState const& q) {
    return q.is_bottom() ? "BOT" : q.contents();
  }

  QueueState parse_queue(std::string_view text, Alphabet const& alphabet) {
    if (text == "e") {
      return QueueState{};
    }
    if (text == "BOT") {
      return QueueState::bottom();
    }
    for (char c : text) {
      if (!alphabet.contains(c)) {
        throw ParseError(std::string("invalid queue letter '") + c + "'");
      }
    }
    return QueueState(Letters(text));
  }

  QueueState act(QueueState const& q, Word const& w) {
    if (q.is_bottom()) {
      return q;
    }
    Letters     buf  = q.contents();
    std::size_t head = 0;
    for (Symbol s : w) {
      if (s.is_write()) {
        buf.push_back(s.letter);
      } else if (head < buf.size() && buf[head] == s.letter) {
        ++head;
      } else {
        return QueueState::bottom();
      }
    }
    return QueueState(buf.substr(head));
  }

  ////////////////////////////////////////////////////////////////////////
  // Normal forms
  ////////////////////////////////////////////////////////////////////////

  NormalForm NormalForm::from_word(Word const& w) {
    NormalForm  x;
    std::size_t i = 0;
    while (i < w.size() && w[i].is_read()) {
      x.reads.push_back(w[i++].letter);
    }
    while (i + 1 < w.size() && w[i].is_write() && w[i + 1].is_read()
           && w[i].letter == w[i + 1].letter) {
      x.shuffled.push_back(w[i].letter);
      i += 2;
    }
    while (i < w.size() && w[i].is_write()) {
      x.writes.push_back(w[i++].letter);
    }
    if (i != w.size()) {
      throw std::invalid_argument("word \"" + to_string(w)
                                  + "\" is not in normal form");
    }
    return x;
  }

  Word NormalForm::to_word() const {
    Word w = reads_of(reads);
    w.reserve(length());
    for (char c : shuffled) {
      w.push_back(Symbol::write(c));
      w.push_back(Symbol::read(c));
    }
    for (char c : writes) {
      w.push_back(Symbol::write(c));
    }
    return w;
  }

  std::string to_string(NormalForm const& x) {
    auto s = to_string(x.to_word());
    return s.empty() ? "e" : s;
  }

  std::size_t NormalFormHash::operator()(NormalForm const& x) const noexcept {
    std::hash<std::string> h;
    std::size_t            seed = h(x.reads);
    seed ^= h(x.shuffled) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    seed ^= h(x.writes) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rewriting
  ////////////////////////////////////////////////////////////////////////

  std::optional<Rule> redex_at(Word const& w, std::size_t pos) {
    if (pos + 1 >= w.size() || !w[pos].is_write()) {
      return std::nullopt;
    }
    Symbol s1 = w[pos], s2 = w[pos + 1];
    if (s2.is_read() && s1.letter != s2.letter) {
      return Rule::swap_distinct;
    }
    if (pos + 2 >= w.size()) {
      return std::nullopt;
    }
    Symbol s3 = w[pos + 2];
    if (s2.is_write() && s3.is_read() && s2.letter == s3.letter) {
      return Rule::pull_read;
    }
    if (s2.is_read() && s1.letter == s2.letter && s3.is_read()) {
      return Rule::push_write;
    }
    return std::nullopt;
  }

  namespace {
    // Every rule applicable at pos, not only the preferred one.
    std::vector<Rule> redexes_at(Word const& w, std::size_t pos) {
      std::vector<Rule> out;
      if (pos + 1 >= w.size() || !w[pos].is_write()) {
        return out;
      }
      Symbol s1 = w[pos], s2 = w[pos + 1];
      if (s2.is_read() && s1.letter != s2.letter) {
        out.push_back(Rule::swap_distinct);
      }
      if (pos + 2 < w.size()) {
        Symbol s3 = w[pos + 2];
        if (s2.is_write() && s3.is_read() && s2.letter == s3.letter) {
          out.push_back(Rule::pull_read);
        }
        if (s2.is_read() && s1.letter == s2.letter && s3.is_read()) {
          out.push_back(Rule::push_write);
        }
      }
      return out;
    }

    void apply_in_place(Word& w, std::size_t pos, Rule rule) {
      switch (rule) {
        case Rule::swap_distinct:
          std::swap(w[pos], w[pos + 1]);
          break;
        case Rule::pull_read:
          std::swap(w[pos + 1], w[pos + 2]);
          break;
        case Rule::push_write:
          std::swap(w[pos], w[pos + 1]);
          break;
      }
    }
  }  // namespace

  Word apply_rule(Word const& w, std::size_t pos, Rule rule) {
    auto rules = redexes_at(w, pos);
    if (std::find(rules.begin(), rules.end(), rule) == rules.end()) {
      throw std::invalid_argument("rule does not apply at this position");
    }
    Word out = w;
    apply_in_place(out, pos, rule);
    return out;
  }

  bool is_irreducible(Word const& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (redex_at(w, i)) {
        return false;
      }
    }
    return true;
  }

  std::vector<Word> one_step_rewrites(Word const& w) {
    std::vector<Word> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (Rule r : redexes_at(w, i)) {
        Word v = w;
        apply_in_place(v, i, r);
        out.push_back(std::move(v));
      }
    }
    return out;
  }

  Word rewrite_to_irreducible(Word w, std::vector<RewriteStep>* trace) {
    std::size_t pos = 0;
    while (pos < w.size()) {
      auto rule = redex_at(w, pos);
      if (!rule) {
        ++pos;
        continue;
      }
      apply_in_place(w, pos, *rule);
      if (trace != nullptr) {
        trace->push_back({pos, *rule, w});
      }
      // A rewrite at pos only touches pos..pos+2, so no redex can start
      // before pos-2.
      pos = pos >= 2 ? pos - 2 : 0;
    }
    return w;
  }

  NormalForm rewrite_normalize(Word const& w, std::vector<RewriteStep>* trace) {
    return NormalForm::from_word(rewrite_to_irreducible(w, trace));
  }

  ////////////////////////////////////////////////////////////////////////
  // Multiplication
  ////////////////////////////////////////////////////////////////////////

  Letters overlap(std::string_view v, std::string_view u) {
    // Prefix function of u#v; letters are lowercase so '#' never matches.
    std::string s;
    s.reserve(u.size() + v.size() + 1);
    s.append(u);
    s.push_back('#');
    s.append(v);
    std::vector<std::size_t> fail(s.size(), 0);
    for (std::size_t i = 1; i < s.size(); ++i) {
      std::size_t k = fail[i - 1];
      while (k > 0 && s[i] != s[k]) {
        k = fail[k - 1];
      }
      if (s[i] == s[k]) {
        ++k;
      }
      fail[i] = k;
    }
    return Letters(u.substr(0, fail.back()));
  }

  NormalForm mul(NormalForm const& x, NormalForm const& y) {
    Letters reads  = x.shuffled + y.reads + y.shuffled;
    Letters writes = x.shuffled + x.writes + y.shuffled;
    Letters s      = overlap(reads, writes);
    NormalForm out;
    out.reads = x.reads + reads.substr(0, reads.size() - s.size());
    out.writes = writes.substr(s.size()) + y.writes;
    out.shuffled = std::move(s);
    return out;
  }

  NormalForm generator(Symbol s) {
    NormalForm x;
    (s.is_write() ? x.writes : x.reads).push_back(s.letter);
    return x;
  }

  NormalForm eval_word(Word const& w) {
    NormalForm x;
    for (Symbol s : w) {
      x = mul(x, generator(s));
    }
    return x;
  }

  std::pair<Letters, Letters> proj(Word const& w) {
    std::pair<Letters, Letters> out;
    for (Symbol s : w) {
      (s.is_write() ? out.first : out.second).push_back(s.letter);
    }
    return out;
  }

  std::pair<Letters, Letters> proj(NormalForm const& x) {
    return {x.pi(), x.pibar()};
  }

  std::size_t ow(Word const& w) {
    return rewrite_normalize(w).overlap_width();
  }

  std::size_t ow(NormalForm const& x) {
    return x.overlap_width();
  }

  Word dual(Word const& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back(it->is_write() ? Symbol::read(it->letter)
                                   : Symbol::write(it->letter));
    }
    return out;
  }

  NormalForm dual_nf(NormalForm const& x) {
    // δ(ū₁⟨u₂|u₂⟩u₃) = ū₃ᴿ⟨u₂ᴿ|u₂ᴿ⟩u₁ᴿ, already irreducible.
    return {Letters(x.writes.rbegin(), x.writes.rend()),
            Letters(x.shuffled.rbegin(), x.shuffled.rend()),
            Letters(x.reads.rbegin(), x.reads.rend())};
  }

  Word shuffle(Letters const& v, Letters const& w) {
    if (v.size() != w.size()) {
      throw std::invalid_argument("shuffle needs words of equal length");
    }
    Word out;
    out.reserve(2 * v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      out.push_back(Symbol::write(v[i]));
      out.push_back(Symbol::read(w[i]));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Embeddings
  ////////////////////////////////////////////////////////////////////////

  Letters embed_q2_letter(Alphabet const& source, char letter) {
    std::size_t n = source.size();
    std::size_t i = source.index_of(letter) + 1;
    return Letters(n + i, 'a') + 'b' + Letters(n - i, 'a') + 'b';
  }

  Word embed_q2(Word const& w, Alphabet const& source) {
    Word out;
    for (Symbol s : w) {
      for (char c : embed_q2_letter(source, s.letter)) {
        out.push_back({c, s.kind});
      }
    }
    return out;
  }

  NormalForm embed_product(std::string_view s, std::string_view t) {
    Word w;
    for (char c : s) {
      switch (c) {
        case 'a':
          w.push_back(Symbol::write('a'));
          break;
        case 'b':
          w.push_back(Symbol::write('a'));
          w.push_back(Symbol::write('b'));
          break;
        default:
          throw std::invalid_argument(
              "first component must be a word over {a,b}");
      }
    }
    for (char c : t) {
      switch (c) {
        case 'c':
          w.push_back(Symbol::read('b'));
          break;
        case 'd':
          w.push_back(Symbol::read('a'));
          w.push_back(Symbol::read('b'));
          w.push_back(Symbol::read('b'));
          break;
        default:
          throw std::invalid_argument(
              "second component must be a word over {c,d}");
      }
    }
    return eval_word(w);
  }

}  // namespace qmonoid
