#include "qmonoid/automata.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qmonoid {

  ////////////////////////////////////////////////////////////////////////
  // SymbolSet
  ////////////////////////////////////////////////////////////////////////

  SymbolId SymbolSet::id(Symbol s) const {
    std::size_t i = _alphabet.index_of(s.letter);
    if (s.is_read()) {
      if (_space == SymbolSpace::letters) {
        throw std::invalid_argument("read symbol in a letters automaton");
      }
      return _alphabet.size() + i;
    }
    return i;
  }

  SymbolId SymbolSet::id(char letter) const {
    return _alphabet.index_of(letter);
  }

  Symbol SymbolSet::symbol(SymbolId id) const {
    std::size_t n = _alphabet.size();
    if (id >= size()) {
      throw std::out_of_range("symbol id out of range");
    }
    return id < n ? Symbol::write(_alphabet[id])
                  : Symbol::read(_alphabet[id - n]);
  }

  std::string SymbolSet::name(SymbolId id) const {
    return to_string(symbol(id));
  }

  SymbolId SymbolSet::parse(std::string_view token) const {
    Word w = parse_word(token);
    if (w.size() != 1 || token == "e") {
      throw ParseError("expected a single symbol, got \"" + std::string(token)
                       + "\"");
    }
    if (!_alphabet.contains(w[0].letter)) {
      throw ParseError("symbol \"" + std::string(token)
                       + "\" is not over the alphabet \""
                       + _alphabet.letters() + "\"");
    }
    if (w[0].is_read() && _space == SymbolSpace::letters) {
      throw ParseError("read symbol \"" + std::string(token)
                       + "\" in a letters automaton");
    }
    return id(w[0]);
  }

  IdWord SymbolSet::encode(Word const& w) const {
    IdWord out;
    out.reserve(w.size());
    for (Symbol s : w) {
      out.push_back(id(s));
    }
    return out;
  }

  IdWord SymbolSet::encode(Letters const& v) const {
    IdWord out;
    out.reserve(v.size());
    for (char c : v) {
      out.push_back(id(c));
    }
    return out;
  }

  Word SymbolSet::decode(IdWord const& w) const {
    Word out;
    out.reserve(w.size());
    for (SymbolId s : w) {
      out.push_back(symbol(s));
    }
    return out;
  }

  Letters SymbolSet::decode_letters(IdWord const& w) const {
    Letters out;
    for (SymbolId s : w) {
      Symbol sym = symbol(s);
      if (sym.is_read()) {
        throw std::invalid_argument("decode_letters: read symbol in word");
      }
      out.push_back(sym.letter);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Nfa
  ////////////////////////////////////////////////////////////////////////

  State Nfa::add_state(bool initial, bool accepting) {
    _initial.push_back(initial);
    _accepting.push_back(accepting);
    _labels.emplace_back();
    _delta.emplace_back(_symbols.size());
    _epsilon.emplace_back();
    return _accepting.size() - 1;
  }

  void Nfa::set_initial(State s, bool value) {
    _initial.at(s) = value;
  }

  void Nfa::set_accepting(State s, bool value) {
    _accepting.at(s) = value;
  }

  void Nfa::set_label(State s, std::string label) {
    _labels.at(s) = std::move(label);
  }

  void Nfa::add_transition(State from, SymbolId symbol, State to) {
    if (to >= state_count() || symbol >= _symbols.size()) {
      throw std::out_of_range("Nfa::add_transition: bad state or symbol");
    }
    auto& succ = _delta.at(from)[symbol];
    if (std::find(succ.begin(), succ.end(), to) == succ.end()) {
      succ.push_back(to);
    }
  }

  void Nfa::add_epsilon(State from, State to) {
    if (to >= state_count()) {
      throw std::out_of_range("Nfa::add_epsilon: bad state");
    }
    auto& succ = _epsilon.at(from);
    if (from != to && std::find(succ.begin(), succ.end(), to) == succ.end()) {
      succ.push_back(to);
    }
  }

  std::size_t Nfa::transition_count() const {
    std::size_t n = 0;
    for (State s = 0; s < state_count(); ++s) {
      for (auto const& succ : _delta[s]) {
        n += succ.size();
      }
      n += _epsilon[s].size();
    }
    return n;
  }

  std::vector<State> Nfa::initial_states() const {
    std::vector<State> out;
    for (State s = 0; s < state_count(); ++s) {
      if (_initial[s]) {
        out.push_back(s);
      }
    }
    return out;
  }

  bool Nfa::has_epsilon() const {
    return std::any_of(
        _epsilon.begin(), _epsilon.end(), [](auto const& e) { return !e.empty(); });
  }

  std::vector<State> Nfa::closure(std::vector<State> states) const {
    std::vector<char>  seen(state_count(), 0);
    std::vector<State> stack;
    for (State s : states) {
      if (!seen[s]) {
        seen[s] = 1;
        stack.push_back(s);
      }
    }
    std::vector<State> out;
    while (!stack.empty()) {
      State s = stack.back();
      stack.pop_back();
      out.push_back(s);
      for (State t : _epsilon[s]) {
        if (!seen[t]) {
          seen[t] = 1;
          stack.push_back(t);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool Nfa::accepts(IdWord const& w) const {
    std::vector<State> current = closure(initial_states());
    for (SymbolId a : w) {
      std::vector<State> next;
      for (State s : current) {
        auto const& succ = _delta[s].at(a);
        next.insert(next.end(), succ.begin(), succ.end());
      }
      current = closure(std::move(next));
      if (current.empty()) {
        return false;
      }
    }
    return std::any_of(
        current.begin(), current.end(), [&](State s) { return is_accepting(s); });
  }

  bool Nfa::accepts(Word const& w) const {
    return accepts(_symbols.encode(w));
  }

  bool Nfa::accepts(Letters const& v) const {
    return accepts(_symbols.encode(v));
  }

  ////////////////////////////////////////////////////////////////////////
  // Dfa
  ////////////////////////////////////////////////////////////////////////

  State Dfa::add_state(bool accepting) {
    _accepting.push_back(accepting);
    _labels.emplace_back();
    _delta.emplace_back(_symbols.size(), none);
    if (_initial == none) {
      _initial = 0;
    }
    return _accepting.size() - 1;
  }

  void Dfa::set_accepting(State s, bool value) {
    _accepting.at(s) = value;
  }

  void Dfa::set_label(State s, std::string label) {
    _labels.at(s) = std::move(label);
  }

  void Dfa::set_transition(State from, SymbolId symbol, State to) {
    if (to != none && to >= state_count()) {
      throw std::out_of_range("Dfa::set_transition: bad target state");
    }
    _delta.at(from).at(symbol) = to;
  }

  void Dfa::set_initial(State s) {
    if (s >= state_count()) {
      throw std::out_of_range("Dfa::set_initial: bad state");
    }
    _initial = s;
  }

  bool Dfa::is_complete() const {
    for (auto const& row : _delta) {
      if (std::find(row.begin(), row.end(), none) != row.end()) {
        return false;
      }
    }
    return true;
  }

  bool Dfa::accepts(IdWord const& w) const {
    State s = _initial;
    for (SymbolId a : w) {
      if (s == none) {
        return false;
      }
      s = _delta[s].at(a);
    }
    return s != none && is_accepting(s);
  }

  bool Dfa::accepts(Word const& w) const {
    return accepts(_symbols.encode(w));
  }

  bool Dfa::accepts(Letters const& v) const {
    return accepts(_symbols.encode(v));
  }

  Nfa Dfa::to_nfa() const {
    Nfa out(_symbols);
    for (State s = 0; s < state_count(); ++s) {
      out.add_state(s == _initial, is_accepting(s));
      out.set_label(s, _labels[s]);
    }
    for (State s = 0; s < state_count(); ++s) {
      for (SymbolId a = 0; a < _symbols.size(); ++a) {
        if (_delta[s][a] != none) {
          out.add_transition(s, a, _delta[s][a]);
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Construction helpers
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void require_same_symbols(SymbolSet const& x, SymbolSet const& y) {
      if (!(x == y)) {
        throw std::invalid_argument(
            "automata over different alphabets: \"" + x.alphabet().letters()
            + "\" vs \"" + y.alphabet().letters() + "\"");
      }
    }

    // Copies the states and transitions of x into out; returns the offset.
    State embed(Nfa& out, Nfa const& x, bool keep_initial, bool keep_accepting) {
      State offset = out.state_count();
      for (State s = 0; s < x.state_count(); ++s) {
        State t = out.add_state(keep_initial && x.is_initial(s),
                                keep_accepting && x.is_accepting(s));
        out.set_label(t, x.label(s));
      }
      for (State s = 0; s < x.state_count(); ++s) {
        for (SymbolId a = 0; a < x.symbols().size(); ++a) {
          for (State t : x.successors(s, a)) {
            out.add_transition(offset + s, a, offset + t);
          }
        }
        for (State t : x.epsilon_successors(s)) {
          out.add_epsilon(offset + s, offset + t);
        }
      }
      return offset;
    }
  }  // namespace

  Nfa empty_language(SymbolSet const& symbols) {
    return Nfa(symbols);
  }

  Nfa universal_language(SymbolSet const& symbols) {
    Nfa   out(symbols);
    State s = out.add_state(true, true);
    for (SymbolId a = 0; a < symbols.size(); ++a) {
      out.add_transition(s, a, s);
    }
    return out;
  }

  Nfa word_language(SymbolSet const& symbols, IdWord const& w) {
    Nfa   out(symbols);
    State s = out.add_state(true, w.empty());
    for (std::size_t i = 0; i < w.size(); ++i) {
      State t = out.add_state(false, i + 1 == w.size());
      out.add_transition(s, w[i], t);
      s = t;
    }
    return out;
  }

  Nfa symbol_class(SymbolSet const&                     symbols,
                   std::function<bool(SymbolId)> const& pred) {
    Nfa   out(symbols);
    State s = out.add_state(true, false);
    State t = out.add_state(false, true);
    for (SymbolId a = 0; a < symbols.size(); ++a) {
      if (pred(a)) {
        out.add_transition(s, a, t);
      }
    }
    return out;
  }

  Nfa any_symbol(SymbolSet const& symbols) {
    return symbol_class(symbols, [](SymbolId) { return true; });
  }

  Nfa concat(Nfa const& x, Nfa const& y) {
    require_same_symbols(x.symbols(), y.symbols());
    Nfa   out(x.symbols());
    State ox = embed(out, x, true, false);
    State oy = embed(out, y, false, true);
    for (State s = 0; s < x.state_count(); ++s) {
      if (!x.is_accepting(s)) {
        continue;
      }
      for (State t = 0; t < y.state_count(); ++t) {
        if (y.is_initial(t)) {
          out.add_epsilon(ox + s, oy + t);
        }
      }
    }
    return out;
  }

  Nfa star(Nfa const& x) {
    Nfa   out(x.symbols());
    State hub = out.add_state(true, true);
    State ox  = embed(out, x, false, false);
    for (State s = 0; s < x.state_count(); ++s) {
      if (x.is_initial(s)) {
        out.add_epsilon(hub, ox + s);
      }
      if (x.is_accepting(s)) {
        out.add_epsilon(ox + s, hub);
      }
    }
    return out;
  }

  Nfa unite(Nfa const& x, Nfa const& y) {
    require_same_symbols(x.symbols(), y.symbols());
    Nfa out(x.symbols());
    embed(out, x, true, true);
    embed(out, y, true, true);
    return out;
  }

  Nfa remove_epsilon(Nfa const& x) {
    if (!x.has_epsilon()) {
      return x;
    }
    Nfa out(x.symbols());
    std::vector<std::vector<State>> closures(x.state_count());
    for (State s = 0; s < x.state_count(); ++s) {
      closures[s]    = x.closure({s});
      bool accepting = std::any_of(closures[s].begin(),
                                   closures[s].end(),
                                   [&](State t) { return x.is_accepting(t); });
      out.add_state(x.is_initial(s), accepting);
      out.set_label(s, x.label(s));
    }
    for (State s = 0; s < x.state_count(); ++s) {
      for (State c : closures[s]) {
        for (SymbolId a = 0; a < x.symbols().size(); ++a) {
          for (State t : x.successors(c, a)) {
            out.add_transition(s, a, t);
          }
        }
      }
    }
    return trim(out);
  }

  Nfa intersect(Nfa const& x0, Nfa const& y0) {
    require_same_symbols(x0.symbols(), y0.symbols());
    Nfa const x = remove_epsilon(x0);
    Nfa const y = remove_epsilon(y0);
    Nfa       out(x.symbols());
    std::map<std::pair<State, State>, State> index;
    std::deque<std::pair<State, State>>      queue;
    auto visit = [&](State s, State t) {
      auto [it, inserted] = index.try_emplace({s, t}, 0);
      if (inserted) {
        it->second = out.add_state(false, x.is_accepting(s) && y.is_accepting(t));
        queue.emplace_back(s, t);
      }
      return it->second;
    };
    for (State s : x.initial_states()) {
      for (State t : y.initial_states()) {
        out.set_initial(visit(s, t));
      }
    }
    while (!queue.empty()) {
      auto [s, t] = queue.front();
      queue.pop_front();
      State from = index.at({s, t});
      for (SymbolId a = 0; a < x.symbols().size(); ++a) {
        for (State s2 : x.successors(s, a)) {
          for (State t2 : y.successors(t, a)) {
            out.add_transition(from, a, visit(s2, t2));
          }
        }
      }
    }
    return trim(out);
  }

  Nfa difference(Nfa const& x, Nfa const& y) {
    require_same_symbols(x.symbols(), y.symbols());
    return intersect(x, complement(y).to_nfa());
  }

  Nfa trim(Nfa const& x) {
    std::size_t n = x.state_count();
    // Forward reachability.
    std::vector<char>  fwd(n, 0);
    std::vector<State> stack = x.initial_states();
    for (State s : stack) {
      fwd[s] = 1;
    }
    std::vector<std::vector<State>> preds(n);
    for (State s = 0; s < n; ++s) {
      for (SymbolId a = 0; a < x.symbols().size(); ++a) {
        for (State t : x.successors(s, a)) {
          preds[t].push_back(s);
        }
      }
      for (State t : x.epsilon_successors(s)) {
        preds[t].push_back(s);
      }
    }
    while (!stack.empty()) {
      State s = stack.back();
      stack.pop_back();
      auto push = [&](State t) {
        if (!fwd[t]) {
          fwd[t] = 1;
          stack.push_back(t);
        }
      };
      for (SymbolId a = 0; a < x.symbols().size(); ++a) {
        for (State t : x.successors(s, a)) {
          push(t);
        }
      }
      for (State t : x.epsilon_successors(s)) {
        push(t);
      }
    }
    // Backward reachability from accepting states.
    std::vector<char> bwd(n, 0);
    for (State s = 0; s < n; ++s) {
      if (x.is_accepting(s)) {
        bwd[s] = 1;
        stack.push_back(s);
      }
    }
    while (!stack.empty()) {
      State s = stack.back();
      stack.pop_back();
      for (State p : preds[s]) {
        if (!bwd[p]) {
          bwd[p] = 1;
          stack.push_back(p);
        }
      }
    }
    Nfa                out(x.symbols());
    std::vector<State> map(n, Dfa::none);
    for (State s = 0; s < n; ++s) {
      if (fwd[s] && bwd[s]) {
        map[s] = out.add_state(x.is_initial(s), x.is_accepting(s));
        out.set_label(map[s], x.label(s));
      }
    }
    for (State s = 0; s < n; ++s) {
      if (map[s] == Dfa::none) {
        continue;
      }
      for (SymbolId a = 0; a < x.symbols().size(); ++a) {
        for (State t : x.successors(s, a)) {
          if (map[t] != Dfa::none) {
            out.add_transition(map[s], a, map[t]);
          }
        }
      }
      for (State t : x.epsilon_successors(s)) {
        if (map[t] != Dfa::none) {
          out.add_epsilon(map[s], map[t]);
        }
      }
    }
    return out;
  }

  Nfa reverse(Nfa const& x) {
    Nfa out(x.symbols());
    for (State s = 0; s < x.state_count(); ++s) {
      out.add_state(x.is_accepting(s), x.is_initial(s));
      out.set_label(s, x.label(s));
    }
    for (State s = 0; s < x.state_count(); ++s) {
      for (SymbolId a = 0; a < x.symbols().size(); ++a) {
        for (State t : x.successors(s, a)) {
          out.add_transition(t, a, s);
        }
      }
      for (State t : x.epsilon_successors(s)) {
        out.add_epsilon(t, s);
      }
    }
    return out;
  }

  Nfa relabel(Nfa const&                                              x,
              SymbolSet const&                                        target,
              std::function<std::optional<SymbolId>(SymbolId)> const& map) {
    Nfa out(target);
    for (State s = 0; s < x.state_count(); ++s) {
      out.add_state(x.is_initial(s), x.is_accepting(s));
      out.set_label(s, x.label(s));
    }
    for (State s = 0; s < x.state_count(); ++s) {
      for (SymbolId a = 0; a < x.symbols().size(); ++a) {
        auto b = map(a);
        for (State t : x.successors(s, a)) {
          if (b) {
            out.add_transition(s, *b, t);
          } else {
            out.add_epsilon(s, t);
          }
        }
      }
      for (State t : x.epsilon_successors(s)) {
        out.add_epsilon(s, t);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Deterministic automata
  ////////////////////////////////////////////////////////////////////////

  Dfa determinize(Nfa const& x) {
    Dfa out(x.symbols());
    std::map<std::vector<State>, State> index;
    std::deque<std::vector<State>>      queue;
    auto visit = [&](std::vector<State> set) {
      auto it = index.find(set);
      if (it != index.end()) {
        return it->second;
      }
      bool accepting = std::any_of(
          set.begin(), set.end(), [&](State s) { return x.is_accepting(s); });
      State id = out.add_state(accepting);
      index.emplace(set, id);
      queue.push_back(std::move(set));
      return id;
    };
    auto start = x.closure(x.initial_states());
    if (start.empty()) {
      return out;
    }
    visit(std::move(start));
    while (!queue.empty()) {
      auto set = std::move(queue.front());
      queue.pop_front();
      State from = index.at(set);
      for (SymbolId a = 0; a < x.symbols().size(); ++a) {
        std::vector<State> next;
        for (State s : set) {
          auto const& succ = x.successors(s, a);
          next.insert(next.end(), succ.begin(), succ.end());
        }
        if (next.empty()) {
          continue;
        }
        next = x.closure(std::move(next));
        out.set_transition(from, a, visit(std::move(next)));
      }
    }
    return out;
  }

  Dfa complete(Dfa const& x) {
    if (x.state_count() > 0 && x.is_complete()) {
      return x;
    }
    Dfa out = x;
    State dead = out.add_state(false);
    for (State s = 0; s < out.state_count(); ++s) {
      for (SymbolId a = 0; a < out.symbols().size(); ++a) {
        if (out.next(s, a) == Dfa::none) {
          out.set_transition(s, a, dead);
        }
      }
    }
    return out;
  }

  Dfa complement(Dfa const& x) {
    Dfa out = complete(x);
    for (State s = 0; s < out.state_count(); ++s) {
      out.set_accepting(s, !out.is_accepting(s));
    }
    return out;
  }

  Dfa complement(Nfa const& x) {
    return complement(determinize(x));
  }

  Dfa minimize(Dfa const& x0) {
    if (x0.state_count() == 0) {
      return x0;
    }
    // Restrict to reachable states, then complete.
    Dfa x = complete(determinize(x0.to_nfa()));
    std::size_t n = x.state_count();
    std::size_t m = x.symbols().size();

    std::vector<std::size_t> block(n);
    for (State s = 0; s < n; ++s) {
      block[s] = x.is_accepting(s) ? 1 : 0;
    }
    std::size_t block_count = 0;
    while (true) {
      std::map<std::vector<std::size_t>, std::size_t> sig_index;
      std::vector<std::size_t>                        next(n);
      for (State s = 0; s < n; ++s) {
        std::vector<std::size_t> sig;
        sig.reserve(m + 1);
        sig.push_back(block[s]);
        for (SymbolId a = 0; a < m; ++a) {
          sig.push_back(block[x.next(s, a)]);
        }
        next[s] = sig_index.try_emplace(std::move(sig), sig_index.size())
                      .first->second;
      }
      bool stable = sig_index.size() == block_count;
      block_count = sig_index.size();
      block       = std::move(next);
      if (stable) {
        break;
      }
    }

    // Blocks that cannot reach acceptance are dropped, making the result
    // partial again.
    std::vector<std::vector<std::size_t>> preds(block_count);
    std::vector<char>                     live(block_count, 0);
    std::vector<std::size_t>              stack;
    for (State s = 0; s < n; ++s) {
      for (SymbolId a = 0; a < m; ++a) {
        preds[block[x.next(s, a)]].push_back(block[s]);
      }
      if (x.is_accepting(s) && !live[block[s]]) {
        live[block[s]] = 1;
        stack.push_back(block[s]);
      }
    }
    while (!stack.empty()) {
      auto b = stack.back();
      stack.pop_back();
      for (auto p : preds[b]) {
        if (!live[p]) {
          live[p] = 1;
          stack.push_back(p);
        }
      }
    }

    Dfa out(x.symbols());
    if (!live[block[x.initial()]]) {
      return out;
    }
    // Number blocks in BFS order from the initial block.
    std::vector<State>       id(block_count, Dfa::none);
    std::vector<State>       rep(block_count, Dfa::none);
    for (State s = 0; s < n; ++s) {
      if (rep[block[s]] == Dfa::none) {
        rep[block[s]] = s;
      }
    }
    std::deque<std::size_t> queue{block[x.initial()]};
    id[block[x.initial()]] = out.add_state(x.is_accepting(x.initial()));
    while (!queue.empty()) {
      auto b = queue.front();
      queue.pop_front();
      State s = rep[b];
      for (SymbolId a = 0; a < m; ++a) {
        auto c = block[x.next(s, a)];
        if (!live[c]) {
          continue;
        }
        if (id[c] == Dfa::none) {
          id[c] = out.add_state(x.is_accepting(rep[c]));
          queue.push_back(c);
        }
        out.set_transition(id[b], a, id[c]);
      }
    }
    return out;
  }

  Dfa product(Dfa const& x0, Dfa const& y0, bool want_union) {
    require_same_symbols(x0.symbols(), y0.symbols());
    Dfa out(x0.symbols());
    // Union needs both sides complete; intersection works on partial DFAs.
    Dfa const x = want_union ? complete(x0) : x0;
    Dfa const y = want_union ? complete(y0) : y0;
    if (x.initial() == Dfa::none || y.initial() == Dfa::none) {
      return out;
    }
    std::map<std::pair<State, State>, State> index;
    std::deque<std::pair<State, State>>      queue;
    auto visit = [&](State s, State t) {
      auto [it, inserted] = index.try_emplace({s, t}, 0);
      if (inserted) {
        bool acc = want_union ? (x.is_accepting(s) || y.is_accepting(t))
                              : (x.is_accepting(s) && y.is_accepting(t));
        it->second = out.add_state(acc);
        queue.emplace_back(s, t);
      }
      return it->second;
    };
    visit(x.initial(), y.initial());
    while (!queue.empty()) {
      auto [s, t] = queue.front();
      queue.pop_front();
      State from = index.at({s, t});
      for (SymbolId a = 0; a < x.symbols().size(); ++a) {
        State s2 = x.next(s, a), t2 = y.next(t, a);
        if (s2 != Dfa::none && t2 != Dfa::none) {
          out.set_transition(from, a, visit(s2, t2));
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Emptiness and witnesses
  ////////////////////////////////////////////////////////////////////////

  std::optional<IdWord> shortest_accepted(Nfa const& x0) {
    Nfa const x = remove_epsilon(x0);
    std::vector<State>                          parent(x.state_count(), Dfa::none);
    std::vector<SymbolId>                       via(x.state_count(), 0);
    std::vector<char>                           seen(x.state_count(), 0);
    std::deque<State>                           queue;
    for (State s : x.initial_states()) {
      seen[s] = 1;
      queue.push_back(s);
    }
    while (!queue.empty()) {
      State s = queue.front();
      queue.pop_front();
      if (x.is_accepting(s)) {
        IdWord w;
        for (State t = s; parent[t] != Dfa::none; t = parent[t]) {
          w.push_back(via[t]);
        }
        std::reverse(w.begin(), w.end());
        return w;
      }
      for (SymbolId a = 0; a < x.symbols().size(); ++a) {
        for (State t : x.successors(s, a)) {
          if (!seen[t]) {
            seen[t]   = 1;
            parent[t] = s;
            via[t]    = a;
            queue.push_back(t);
          }
        }
      }
    }
    return std::nullopt;
  }

  bool is_empty(Nfa const& x) {
    return !shortest_accepted(x).has_value();
  }

  bool equivalent(Nfa const& x, Nfa const& y) {
    return is_empty(difference(x, y)) && is_empty(difference(y, x));
  }

  ////////////////////////////////////////////////////////////////////////
  // Projections and duality
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Nfa inverse_projection(Nfa const& letters_nfa, Kind followed) {
      if (letters_nfa.symbols().space() != SymbolSpace::letters) {
        throw std::invalid_argument(
            "inverse projection needs an automaton over letters");
      }
      Alphabet const& alphabet = letters_nfa.symbols().alphabet();
      SymbolSet       sigma(alphabet, SymbolSpace::sigma);
      std::size_t     n    = alphabet.size();
      std::size_t     base = followed == Kind::write ? 0 : n;
      std::size_t     loop = followed == Kind::write ? n : 0;
      Nfa out = relabel(letters_nfa, sigma, [&](SymbolId a) -> std::optional<SymbolId> {
        return base + a;
      });
      for (State s = 0; s < out.state_count(); ++s) {
        for (std::size_t i = 0; i < n; ++i) {
          out.add_transition(s, loop + i, s);
        }
      }
      return out;
    }
  }  // namespace

  Nfa inverse_pi(Nfa const& letters_nfa) {
    return inverse_projection(letters_nfa, Kind::write);
  }

  Nfa inverse_pibar(Nfa const& letters_nfa) {
    return inverse_projection(letters_nfa, Kind::read);
  }

  Nfa dual_automaton(Nfa const& x) {
    if (x.symbols().space() != SymbolSpace::sigma) {
      throw std::invalid_argument("dual_automaton needs an automaton over Σ");
    }
    std::size_t n = x.symbols().alphabet().size();
    return relabel(reverse(x), x.symbols(), [n](SymbolId a) -> std::optional<SymbolId> {
      return a < n ? a + n : a - n;
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Text and DOT
  ////////////////////////////////////////////////////////////////////////

  void write_text(std::ostream& out, Nfa const& x0) {
    Nfa const x = remove_epsilon(x0);
    out << "alphabet: " << x.symbols().alphabet().letters() << '\n';
    for (State s = 0; s < x.state_count(); ++s) {
      out << "state " << s;
      if (x.is_initial(s)) {
        out << " initial";
      }
      if (x.is_accepting(s)) {
        out << " accepting";
      }
      out << '\n';
    }
    for (State s = 0; s < x.state_count(); ++s) {
      for (SymbolId a = 0; a < x.symbols().size(); ++a) {
        for (State t : x.successors(s, a)) {
          out << "trans " << s << ' ' << x.symbols().name(a) << ' ' << t
              << '\n';
        }
      }
    }
  }

  void write_text(std::ostream& out, Dfa const& x) {
    write_text(out, x.to_nfa());
  }

  Nfa read_text(std::istream& in, SymbolSpace space) {
    std::optional<Nfa>                     nfa;
    std::unordered_map<std::string, State> ids;
    std::string                            line;
    std::size_t                            lineno = 0;
    auto fail = [&](std::string const& msg) {
      throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    auto declared = [&](std::string const& name) {
      auto it = ids.find(name);
      if (it == ids.end()) {
        fail("undeclared state \"" + name + "\"");
      }
      return it->second;
    };
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream tokens(line);
      std::string        head;
      if (!(tokens >> head)) {
        continue;
      }
      if (head == "alphabet:") {
        std::string letters;
        if (nfa || !(tokens >> letters)) {
          fail("alphabet must be declared once, before any state");
        }
        try {
          nfa.emplace(Alphabet(letters), space);
        } catch (std::invalid_argument const& e) {
          fail(e.what());
        }
        continue;
      }
      if (!nfa) {
        fail("missing \"alphabet:\" header");
      }
      if (head == "state") {
        std::string name, flag;
        if (!(tokens >> name)) {
          fail("state needs an id");
        }
        if (ids.contains(name)) {
          fail("state \"" + name + "\" declared twice");
        }
        State s = nfa->add_state();
        nfa->set_label(s, name);
        ids.emplace(name, s);
        while (tokens >> flag) {
          if (flag == "initial") {
            nfa->set_initial(s);
          } else if (flag == "accepting") {
            nfa->set_accepting(s);
          } else {
            fail("unknown state flag \"" + flag + "\"");
          }
        }
      } else if (head == "trans") {
        std::string src, sym, dst, extra;
        if (!(tokens >> src >> sym >> dst) || (tokens >> extra)) {
          fail("expected: trans <src> <symbol> <dst>");
        }
        SymbolId a = 0;
        try {
          a = nfa->symbols().parse(sym);
        } catch (ParseError const& e) {
          fail(e.what());
        }
        State from = declared(src);
        nfa->add_transition(from, a, declared(dst));
      } else {
        fail("unknown directive \"" + head + "\"");
      }
    }
    if (!nfa) {
      throw ParseError("empty automaton description");
    }
    return std::move(*nfa);
  }

  namespace {
    std::string dot_escape(std::string const& s) {
      std::string out;
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out.push_back('\\');
        }
        out.push_back(c);
      }
      return out;
    }
  }  // namespace

  void write_dot(std::ostream& out, Nfa const& x0) {
    Nfa const x = remove_epsilon(x0);
    out << "digraph automaton {\n  rankdir=LR;\n";
    for (State s = 0; s < x.state_count(); ++s) {
      std::string label = x.label(s).empty() ? std::to_string(s) : x.label(s);
      out << "  q" << s << " [label=\"" << dot_escape(label) << "\", shape="
          << (x.is_accepting(s) ? "doublecircle" : "circle") << "];\n";
      if (x.is_initial(s)) {
        out << "  init" << s << " [shape=point];\n  init" << s << " -> q" << s
            << ";\n";
      }
    }
    for (State s = 0; s < x.state_count(); ++s) {
      std::map<State, std::string> edges;
      for (SymbolId a = 0; a < x.symbols().size(); ++a) {
        for (State t : x.successors(s, a)) {
          auto& lbl = edges[t];
          lbl += (lbl.empty() ? "" : ",") + x.symbols().name(a);
        }
      }
      for (auto const& [t, lbl] : edges) {
        out << "  q" << s << " -> q" << t << " [label=\"" << lbl << "\"];\n";
      }
    }
    out << "}\n";
  }

  void write_dot(std::ostream& out, Dfa const& x) {
    write_dot(out, x.to_nfa());
  }

}  // namespace qmonoid
