#include "qmonoid/recognizability.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace qmonoid {

  ////////////////////////////////////////////////////////////////////////
  // Ω_k and shuffledness
  ////////////////////////////////////////////////////////////////////////

  bool k_shuffled(Word const& w, std::size_t k) {
    std::vector<std::size_t> writes, reads;
    for (std::size_t p = 0; p < w.size(); ++p) {
      (w[p].is_write() ? writes : reads).push_back(p);
    }
    if (writes.size() < k || reads.size() < k) {
      return false;
    }
    std::size_t tail = reads.size() - k;
    for (std::size_t i = 0; i < k; ++i) {
      if (writes[i] > reads[tail + i]) {
        return false;
      }
    }
    return true;
  }

  bool in_omega(NormalForm const& q, std::size_t k) {
    Letters     pi = q.pi(), pibar = q.pibar();
    std::size_t top = std::min({k, pi.size(), pibar.size()});
    for (std::size_t ell = q.overlap_width() + 1; ell <= top; ++ell) {
      if (pibar.compare(pibar.size() - ell, ell, pi, 0, ell) == 0) {
        return false;
      }
    }
    return true;
  }

  namespace {
    // Letter words of length exactly n.
    Nfa exact_length(SymbolSet const& letters, std::size_t n) {
      Nfa   out(letters);
      State s = out.add_state(true, n == 0);
      for (std::size_t i = 0; i < n; ++i) {
        State t = out.add_state(false, i + 1 == n);
        for (SymbolId a = 0; a < letters.size(); ++a) {
          out.add_transition(s, a, t);
        }
        s = t;
      }
      return out;
    }

    Nfa with_suffix(SymbolSet const& letters, IdWord const& u) {
      return concat(universal_language(letters), word_language(letters, u));
    }

    Nfa with_prefix(SymbolSet const& letters, IdWord const& u) {
      return concat(word_language(letters, u), universal_language(letters));
    }

    // Letter words of length ≤ k, shortest first.
    std::vector<IdWord> short_words(std::size_t n, std::size_t k) {
      std::vector<IdWord> out{IdWord{}};
      for (std::size_t start = 0; start < out.size(); ++start) {
        if (out[start].size() == k) {
          continue;
        }
        for (SymbolId a = 0; a < n; ++a) {
          IdWord w = out[start];
          w.push_back(a);
          out.push_back(std::move(w));
        }
      }
      return out;
    }
  }  // namespace

  Nfa shuffled_nfa(Alphabet const& alphabet, std::size_t ell) {
    SymbolSet   letters(alphabet, SymbolSpace::letters);
    SymbolSet   sigma(alphabet, SymbolSpace::sigma);
    std::size_t n = alphabet.size();
    Nfa const   write = symbol_class(sigma, [n](SymbolId a) { return a < n; });
    Nfa const   read  = symbol_class(sigma, [n](SymbolId a) { return a >= n; });
    // S_ℓ = ⋂ᵢ π⁻¹(A^{i−1}) A Σ* Ā π̄⁻¹(A^{ℓ−i}).
    Nfa out = universal_language(sigma);
    for (std::size_t i = 1; i <= ell; ++i) {
      Nfa term = concat(
          concat(concat(concat(inverse_pi(exact_length(letters, i - 1)), write),
                        universal_language(sigma)),
                 read),
          inverse_pibar(exact_length(letters, ell - i)));
      out = intersect(out, term);
    }
    return out;
  }

  Dfa omega_dfa(Alphabet const& alphabet, std::size_t k) {
    SymbolSet letters(alphabet, SymbolSpace::letters);
    SymbolSet sigma(alphabet, SymbolSpace::sigma);
    std::vector<Dfa> shuffled;
    for (std::size_t ell = 0; ell <= k; ++ell) {
      shuffled.push_back(determinize(shuffled_nfa(alphabet, ell)));
    }
    // ⋂_{u ∈ A^{≤k}} (Σ* \ (π⁻¹(uA*) ∩ π̄⁻¹(A*u))) ∪ S_{|u|}.
    Dfa out = determinize(universal_language(sigma));
    for (IdWord const& u : short_words(alphabet.size(), k)) {
      if (u.empty()) {
        continue;  // S_0 = Σ*
      }
      Nfa premise = intersect(inverse_pi(with_prefix(letters, u)),
                              inverse_pibar(with_suffix(letters, u)));
      Dfa term    = product(complement(premise), shuffled[u.size()], true);
      out         = minimize(product(out, term, false));
    }
    return minimize(out);
  }

  Nfa omega_nfa(Alphabet const& alphabet, std::size_t k) {
    return omega_dfa(alphabet, k).to_nfa();
  }

  ////////////////////////////////////////////////////////////////////////
  // Regular expressions over letters
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class RegexParser {
     public:
      RegexParser(std::string_view text, Alphabet const& alphabet)
          : _text(text), _letters(alphabet, SymbolSpace::letters) {}

      Nfa parse() {
        Nfa out = _alternation();
        _skip_space();
        if (_pos != _text.size()) {
          _fail("unexpected '" + std::string(1, _text[_pos]) + "'");
        }
        return out;
      }

     private:
      Nfa _alternation() {
        Nfa out = _concatenation();
        while (_peek() == '|') {
          ++_pos;
          out = unite(out, _concatenation());
        }
        return out;
      }

      Nfa _concatenation() {
        Nfa out = _repetition();
        while (true) {
          char c = _peek();
          if (c == '\0' || c == '|' || c == ')') {
            return out;
          }
          out = concat(out, _repetition());
        }
      }

      Nfa _repetition() {
        Nfa out = _base();
        while (_peek() == '*') {
          ++_pos;
          out = star(out);
        }
        return out;
      }

      Nfa _base() {
        char c = _peek();
        ++_pos;
        if (c == '(') {
          Nfa out = _alternation();
          if (_peek() != ')') {
            _fail("missing ')'");
          }
          ++_pos;
          return out;
        }
        if (c == '0') {
          return empty_language(_letters);
        }
        if (c == '1') {
          return word_language(_letters, {});
        }
        if (c >= 'a' && c <= 'z') {
          if (!_letters.alphabet().contains(c)) {
            _fail(std::string("letter '") + c + "' is not in the alphabet");
          }
          return word_language(_letters, {_letters.id(c)});
        }
        --_pos;
        _fail(c == '\0' ? "unexpected end of expression"
                        : "unexpected '" + std::string(1, c) + "'");
      }

      char _peek() {
        _skip_space();
        return _pos < _text.size() ? _text[_pos] : '\0';
      }

      void _skip_space() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      [[noreturn]] void _fail(std::string const& msg) const {
        throw ParseError("regex \"" + std::string(_text) + "\" at column "
                         + std::to_string(_pos + 1) + ": " + msg);
      }

      std::string_view _text;
      SymbolSet        _letters;
      std::size_t      _pos = 0;
    };
  }  // namespace

  Nfa parse_regex(std::string_view text, Alphabet const& alphabet) {
    return RegexParser(text, alphabet).parse();
  }

  ////////////////////////////////////////////////////////////////////////
  // Simple sets
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void require_letters_nfa(Nfa const& language) {
      if (language.symbols().space() != SymbolSpace::letters) {
        throw std::invalid_argument(
            "simple-set atoms need a regular language over letters");
      }
    }

    std::shared_ptr<SimpleSetExpr const> share(SimpleSetExpr e) {
      return std::make_shared<SimpleSetExpr const>(std::move(e));
    }
  }  // namespace

  SimpleSetExpr SimpleSetExpr::pi_in(Nfa language, std::string source) {
    require_letters_nfa(language);
    return SimpleSetExpr(PiIn{std::move(source), std::move(language)});
  }

  SimpleSetExpr SimpleSetExpr::pibar_in(Nfa language, std::string source) {
    require_letters_nfa(language);
    return SimpleSetExpr(PiBarIn{std::move(source), std::move(language)});
  }

  SimpleSetExpr SimpleSetExpr::omega(std::size_t k) {
    return SimpleSetExpr(Omega{k});
  }

  SimpleSetExpr operator&&(SimpleSetExpr a, SimpleSetExpr b) {
    return SimpleSetExpr(SimpleSetExpr::And{share(std::move(a)), share(std::move(b))});
  }

  SimpleSetExpr operator||(SimpleSetExpr a, SimpleSetExpr b) {
    return SimpleSetExpr(SimpleSetExpr::Or{share(std::move(a)), share(std::move(b))});
  }

  SimpleSetExpr operator!(SimpleSetExpr a) {
    return SimpleSetExpr(SimpleSetExpr::Not{share(std::move(a))});
  }

  std::string to_string(SimpleSetExpr const& e) {
    struct Printer {
      std::string operator()(SimpleSetExpr::PiIn const& a) const {
        return "pi(" + a.source + ")";
      }
      std::string operator()(SimpleSetExpr::PiBarIn const& a) const {
        return "pibar(" + a.source + ")";
      }
      std::string operator()(SimpleSetExpr::Omega const& a) const {
        return "omega(" + std::to_string(a.k) + ")";
      }
      std::string operator()(SimpleSetExpr::And const& a) const {
        return "(" + to_string(*a.lhs) + " & " + to_string(*a.rhs) + ")";
      }
      std::string operator()(SimpleSetExpr::Or const& a) const {
        return "(" + to_string(*a.lhs) + " | " + to_string(*a.rhs) + ")";
      }
      std::string operator()(SimpleSetExpr::Not const& a) const {
        return "!" + to_string(*a.operand);
      }
    };
    return std::visit(Printer{}, e.node());
  }

  namespace {
    class SimpleParser {
     public:
      SimpleParser(std::string_view text, Alphabet const& alphabet)
          : _text(text), _alphabet(alphabet) {}

      SimpleSetExpr parse() {
        auto out = _or();
        if (_peek() != '\0') {
          _fail("unexpected '" + std::string(1, _text[_pos]) + "'");
        }
        return out;
      }

     private:
      SimpleSetExpr _or() {
        auto out = _and();
        while (_peek() == '|') {
          ++_pos;
          out = std::move(out) || _and();
        }
        return out;
      }

      SimpleSetExpr _and() {
        auto out = _unary();
        while (_peek() == '&') {
          ++_pos;
          out = std::move(out) && _unary();
        }
        return out;
      }

      SimpleSetExpr _unary() {
        char c = _peek();
        if (c == '!') {
          ++_pos;
          return !_unary();
        }
        if (c == '(') {
          ++_pos;
          auto out = _or();
          _expect(')');
          return out;
        }
        return _atom();
      }

      SimpleSetExpr _atom() {
        _peek();
        std::size_t start = _pos;
        while (_pos < _text.size()
               && std::isalpha(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
        std::string_view name = _text.substr(start, _pos - start);
        if (name.empty()) {
          _fail(_pos < _text.size()
                    ? "unexpected '" + std::string(1, _text[_pos]) + "'"
                    : "unexpected end of expression");
        }
        _expect('(');
        std::string_view arg = _argument();
        if (name == "pi") {
          return SimpleSetExpr::pi_in(parse_regex(arg, _alphabet),
                                      std::string(arg));
        }
        if (name == "pibar") {
          return SimpleSetExpr::pibar_in(parse_regex(arg, _alphabet),
                                         std::string(arg));
        }
        if (name == "omega") {
          std::size_t k = 0;
          auto trimmed  = _trim(arg);
          auto [ptr, ec]
              = std::from_chars(trimmed.data(), trimmed.data() + trimmed.size(), k);
          if (ec != std::errc{} || ptr != trimmed.data() + trimmed.size()
              || trimmed.empty()) {
            _fail("omega needs a natural number, got \"" + std::string(arg)
                  + "\"");
          }
          return SimpleSetExpr::omega(k);
        }
        _fail("unknown atom \"" + std::string(name) + "\"");
      }

      // Text up to the ')' matching an already consumed '('.
      std::string_view _argument() {
        std::size_t start = _pos, depth = 1;
        for (; _pos < _text.size(); ++_pos) {
          if (_text[_pos] == '(') {
            ++depth;
          } else if (_text[_pos] == ')' && --depth == 0) {
            auto arg = _text.substr(start, _pos - start);
            ++_pos;
            return arg;
          }
        }
        _fail("missing ')'");
      }

      static std::string_view _trim(std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
          s.remove_prefix(1);
        }
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
          s.remove_suffix(1);
        }
        return s;
      }

      void _expect(char c) {
        if (_peek() != c) {
          _fail(std::string("expected '") + c + "'");
        }
        ++_pos;
      }

      char _peek() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
        return _pos < _text.size() ? _text[_pos] : '\0';
      }

      [[noreturn]] void _fail(std::string const& msg) const {
        throw ParseError("expression \"" + std::string(_text) + "\" at column "
                         + std::to_string(_pos + 1) + ": " + msg);
      }

      std::string_view _text;
      Alphabet const&  _alphabet;
      std::size_t      _pos = 0;
    };
  }  // namespace

  SimpleSetExpr parse_simple(std::string_view text, Alphabet const& alphabet) {
    return SimpleParser(text, alphabet).parse();
  }

  bool eval_simple(SimpleSetExpr const& e, NormalForm const& q) {
    struct Eval {
      NormalForm const& q;
      bool operator()(SimpleSetExpr::PiIn const& a) const {
        return a.language.accepts(q.pi());
      }
      bool operator()(SimpleSetExpr::PiBarIn const& a) const {
        return a.language.accepts(q.pibar());
      }
      bool operator()(SimpleSetExpr::Omega const& a) const {
        return in_omega(q, a.k);
      }
      bool operator()(SimpleSetExpr::And const& a) const {
        return eval_simple(*a.lhs, q) && eval_simple(*a.rhs, q);
      }
      bool operator()(SimpleSetExpr::Or const& a) const {
        return eval_simple(*a.lhs, q) || eval_simple(*a.rhs, q);
      }
      bool operator()(SimpleSetExpr::Not const& a) const {
        return !eval_simple(*a.operand, q);
      }
    };
    return std::visit(Eval{q}, e.node());
  }

  Dfa compile_simple(SimpleSetExpr const& e, Alphabet const& alphabet) {
    struct Compile {
      Alphabet const& alphabet;
      void check(Nfa const& language) const {
        if (!(language.symbols().alphabet() == alphabet)) {
          throw std::invalid_argument(
              "simple-set atom over a different alphabet");
        }
      }
      Dfa operator()(SimpleSetExpr::PiIn const& a) const {
        check(a.language);
        return minimize(determinize(inverse_pi(a.language)));
      }
      Dfa operator()(SimpleSetExpr::PiBarIn const& a) const {
        check(a.language);
        return minimize(determinize(inverse_pibar(a.language)));
      }
      Dfa operator()(SimpleSetExpr::Omega const& a) const {
        return omega_dfa(alphabet, a.k);
      }
      Dfa operator()(SimpleSetExpr::And const& a) const {
        return minimize(product(compile_simple(*a.lhs, alphabet),
                                compile_simple(*a.rhs, alphabet),
                                false));
      }
      Dfa operator()(SimpleSetExpr::Or const& a) const {
        return minimize(product(compile_simple(*a.lhs, alphabet),
                                compile_simple(*a.rhs, alphabet),
                                true));
      }
      Dfa operator()(SimpleSetExpr::Not const& a) const {
        return minimize(complement(compile_simple(*a.operand, alphabet)));
      }
    };
    return std::visit(Compile{alphabet}, e.node());
  }

}  // namespace qmonoid
