#include "qmonoid/class_dfa.hpp"

#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace qmonoid {

  std::string to_string(Quad const& q) {
    return "(" + std::to_string(q.i) + "," + std::to_string(q.j) + ","
           + std::to_string(q.k) + "," + std::to_string(q.l) + ")";
  }

  ClassAutomaton::ClassAutomaton(Word w) : _w(std::move(w)) {
    _reads_before.push_back(0);
    for (std::size_t p = 1; p <= _w.size(); ++p) {
      Symbol s = _w[p - 1];
      if (s.is_read()) {
        _read_pos.push_back(p);
        _pibar.push_back(s.letter);
      } else {
        _write_pos.push_back(p);
        _pi.push_back(s.letter);
      }
      _reads_before.push_back(_read_pos.size());
    }
    // The accepting state denotes nf(w) = ū₁⟨u₂|u₂⟩u₃.
    NormalForm  x  = eval_word(_w);
    std::size_t r1 = x.reads.size(), r2 = r1 + x.shuffled.size();
    std::size_t w2 = x.shuffled.size(), w3 = w2 + x.writes.size();
    _accept.i = r1 == 0 ? 0 : _read_pos[r1 - 1];
    _accept.j = r2 == 0 ? 0 : _read_pos[r2 - 1];
    _accept.k = w2 == 0 ? 0 : _write_pos[w2 - 1];
    _accept.l = w3 == 0 ? 0 : _write_pos[w3 - 1];
  }

  bool ClassAutomaton::is_state(Quad const& p) const {
    std::size_t n = _w.size();
    if (p.i > n || p.j > n || p.k > n || p.l > n || p.i > p.j || p.k > p.l) {
      return false;
    }
    auto read_or_zero = [&](std::size_t q) {
      return q == 0 || _w[q - 1].is_read();
    };
    auto write_or_zero = [&](std::size_t q) {
      return q == 0 || _w[q - 1].is_write();
    };
    if (!read_or_zero(p.i) || !read_or_zero(p.j) || !write_or_zero(p.k)
        || !write_or_zero(p.l)) {
      return false;
    }
    std::size_t ri = _reads_upto(p.i), rj = _reads_upto(p.j);
    return _pibar.compare(ri, rj - ri, _pi, 0, _writes_upto(p.k)) == 0
           && rj - ri == _writes_upto(p.k);
  }

  NormalForm ClassAutomaton::denoted(Quad const& p) const {
    std::size_t ri = _reads_upto(p.i), rj = _reads_upto(p.j);
    std::size_t wk = _writes_upto(p.k), wl = _writes_upto(p.l);
    return {_pibar.substr(0, ri), _pibar.substr(ri, rj - ri),
            _pi.substr(wk, wl - wk)};
  }

  bool ClassAutomaton::is_accepting(Quad const& p) const {
    return p == _accept;
  }

  std::optional<Quad> ClassAutomaton::step(Quad const& p, Symbol s) const {
    if (s.is_write()) {
      // Next write position after l must carry the same letter.
      std::size_t next = _writes_upto(p.l);
      if (next >= _write_pos.size() || _pi[next] != s.letter) {
        return std::nullopt;
      }
      return Quad{p.i, p.j, p.k, _write_pos[next]};
    }
    std::size_t next = _reads_upto(p.j);
    if (next >= _read_pos.size() || _pibar[next] != s.letter) {
      return std::nullopt;
    }
    std::size_t j2 = _read_pos[next];
    // s = OL(π̄(w[i+1..j']), π(w[1..l])).
    std::size_t ri = _reads_upto(p.i);
    std::size_t wl = _writes_upto(p.l);
    std::string_view pibar(_pibar), pi(_pi);
    std::size_t      len = overlap(pibar.substr(ri, next + 1 - ri),
                              pi.substr(0, wl))
                          .size();
    // i' and k' delimit the overlap: the read block ends at read number
    // next+1-len, the shuffle's write part at write number len.
    std::size_t reads_before = next + 1 - len;
    Quad        q;
    q.i = reads_before == 0 ? 0 : _read_pos[reads_before - 1];
    q.j = j2;
    q.k = len == 0 ? 0 : _write_pos[len - 1];
    q.l = p.l;
    return q;
  }

  Dfa class_dfa(Word const& w, Alphabet const& alphabet) {
    for (Symbol s : w) {
      if (!alphabet.contains(s.letter)) {
        throw std::invalid_argument("class_dfa: word not over the alphabet");
      }
    }
    ClassAutomaton   ca(w);
    SymbolSet        sigma(alphabet, SymbolSpace::sigma);
    Dfa              out(sigma);
    std::map<Quad, State> index;
    std::deque<Quad>      queue;
    auto visit = [&](Quad const& q) {
      auto [it, inserted] = index.try_emplace(q, 0);
      if (inserted) {
        it->second = out.add_state(ca.is_accepting(q));
        out.set_label(it->second, to_string(q));
        queue.push_back(q);
      }
      return it->second;
    };
    visit(ca.initial());
    while (!queue.empty()) {
      Quad p = queue.front();
      queue.pop_front();
      State from = index.at(p);
      for (SymbolId a = 0; a < sigma.size(); ++a) {
        if (auto q = ca.step(p, sigma.symbol(a))) {
          out.set_transition(from, a, visit(*q));
        }
      }
    }
    return out;
  }

  bool rational_member(Word const& w, Nfa const& a0) {
    if (a0.symbols().space() != SymbolSpace::sigma) {
      throw std::invalid_argument("rational_member needs an automaton over Σ");
    }
    for (Symbol s : w) {
      if (!a0.symbols().alphabet().contains(s.letter)) {
        throw std::invalid_argument(
            "rational_member: word not over the automaton's alphabet");
      }
    }
    Nfa const        a = remove_epsilon(a0);
    ClassAutomaton   ca(w);
    SymbolSet const& sigma = a.symbols();
    std::set<std::pair<State, Quad>>   seen;
    std::deque<std::pair<State, Quad>> queue;
    for (State s : a.initial_states()) {
      if (seen.emplace(s, ca.initial()).second) {
        queue.emplace_back(s, ca.initial());
      }
    }
    while (!queue.empty()) {
      auto [s, p] = queue.front();
      queue.pop_front();
      if (a.is_accepting(s) && ca.is_accepting(p)) {
        return true;
      }
      for (SymbolId x = 0; x < sigma.size(); ++x) {
        auto const& succ = a.successors(s, x);
        if (succ.empty()) {
          continue;
        }
        auto q = ca.step(p, sigma.symbol(x));
        if (!q) {
          continue;
        }
        for (State t : succ) {
          if (seen.emplace(t, *q).second) {
            queue.emplace_back(t, *q);
          }
        }
      }
    }
    return false;
  }

}  // namespace qmonoid
