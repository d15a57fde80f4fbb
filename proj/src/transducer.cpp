#include "wqo/transducer.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace wqo {

void SequentialTransducer::validate() const {
  if (num_states == 0) throw Error("transducer needs at least one state");
  if (in_alphabet.empty()) throw Error("transducer needs an input alphabet");
  if (out_alphabet.empty()) throw Error("transducer needs an output alphabet");
  auto check_sorted = [](const std::vector<Symbol>& v) {
    for (size_t i = 1; i < v.size(); ++i)
      if (v[i - 1] >= v[i]) throw Error("alphabet must be sorted and duplicate-free");
  };
  check_sorted(in_alphabet);
  check_sorted(out_alphabet);
  if (initial >= num_states) throw Error("initial state out of range");
  if (delta.size() != num_states || out.size() != num_states ||
      final_out.size() != num_states)
    throw Error("transducer table size mismatch");
  auto check_out_word = [&](const Word& w) {
    for (Symbol a : w)
      if (!std::binary_search(out_alphabet.begin(), out_alphabet.end(), a))
        throw Error("output word uses a symbol outside the output alphabet");
  };
  for (State q = 0; q < num_states; ++q) {
    if (delta[q].size() != in_alphabet.size() || out[q].size() != in_alphabet.size())
      throw Error("transducer must be complete");
    for (State t : delta[q])
      if (t >= num_states) throw Error("transition target out of range");
    for (const Word& w : out[q]) check_out_word(w);
    check_out_word(final_out[q]);
  }
}

size_t SequentialTransducer::in_index(Symbol a) const {
  auto it = std::lower_bound(in_alphabet.begin(), in_alphabet.end(), a);
  if (it == in_alphabet.end() || *it != a)
    throw Error("symbol not in the transducer input alphabet");
  return static_cast<size_t>(it - in_alphabet.begin());
}

Word SequentialTransducer::apply_word(const Word& w) const {
  Word result;
  State q = initial;
  for (Symbol a : w) {
    size_t i = in_index(a);
    const Word& o = out[q][i];
    result.insert(result.end(), o.begin(), o.end());
    q = delta[q][i];
  }
  result.insert(result.end(), final_out[q].begin(), final_out[q].end());
  return result;
}

Nfa apply_transducer(const SequentialTransducer& f, const Nfa& l0, size_t cap) {
  f.validate();
  Nfa l = nfa_remove_epsilon(nfa_trim(l0));
  // Pair states (transducer, language); transitions emit output words, which
  // become chains of fresh states. Final outputs get their own chains into a
  // single accepting state.
  Nfa r;
  r.alphabet = f.out_alphabet;
  std::map<std::pair<State, State>, State> index;
  std::deque<std::pair<State, State>> work;
  std::vector<Edge> edges;
  uint32_t next_state = 0;
  auto intern = [&](State q, State p) {
    auto [it, fresh] = index.try_emplace({q, p}, next_state);
    if (fresh) {
      ++next_state;
      work.push_back({q, p});
    }
    return it->second;
  };
  auto chain = [&](State from, const Word& w, State to) {
    State cur = from;
    for (size_t i = 0; i < w.size(); ++i) {
      State nxt = (i + 1 == w.size()) ? to : next_state++;
      edges.push_back({cur, w[i], nxt});
      cur = nxt;
    }
    if (w.empty()) edges.push_back({from, kEpsilon, to});
  };
  std::set<State> lfin(l.final_states.begin(), l.final_states.end());
  std::vector<State> starts;
  for (State p : l.initial) starts.push_back(intern(f.initial, p));
  State accept = next_state++;  // single accepting sink
  while (!work.empty()) {
    auto [q, p] = work.front();
    work.pop_front();
    State s = index.at({q, p});
    if (lfin.count(p)) chain(s, f.final_out[q], accept);
    for (const Edge& e : l.edges) {
      if (e.from != p) continue;
      // Letters outside the input alphabet have no image under f.
      if (!std::binary_search(f.in_alphabet.begin(), f.in_alphabet.end(),
                              e.label))
        continue;
      size_t i = f.in_index(e.label);
      State t = intern(f.delta[q][i], e.to);
      chain(s, f.out[q][i], t);
    }
  }
  r.num_states = next_state;
  r.edges = std::move(edges);
  r.initial = starts;
  std::sort(r.initial.begin(), r.initial.end());
  r.initial.erase(std::unique(r.initial.begin(), r.initial.end()), r.initial.end());
  r.final_states = {accept};
  std::sort(r.final_states.begin(), r.final_states.end());
  if (r.num_states == 0) return nfa_empty_language(f.out_alphabet);
  r.validate();
  (void)cap;
  return nfa_trim(r);
}

Nfa inverse_apply_transducer(const SequentialTransducer& f, const Nfa& l0,
                             size_t cap) {
  f.validate();
  Nfa wide = nfa_widen_alphabet(l0, alphabet_union(l0.alphabet, f.out_alphabet));
  Nfa d = nfa_determinize(wide, cap);
  // d is a complete DFA; advancing it over a fixed word is a function.
  std::vector<std::vector<State>> dd(d.num_states,
                                     std::vector<State>(d.alphabet.size(), 0));
  for (const Edge& e : d.edges) dd[e.from][d.symbol_index(e.label)] = e.to;
  auto advance = [&](State p, const Word& w) {
    for (Symbol a : w) p = dd[p][d.symbol_index(a)];
    return p;
  };
  std::set<State> dfin(d.final_states.begin(), d.final_states.end());
  Nfa r;
  r.alphabet = f.in_alphabet;
  r.num_states = f.num_states * d.num_states;
  auto id = [&](State q, State p) { return q * d.num_states + p; };
  for (State q = 0; q < f.num_states; ++q)
    for (State p = 0; p < d.num_states; ++p)
      for (size_t i = 0; i < f.in_alphabet.size(); ++i)
        r.edges.push_back({id(q, p), f.in_alphabet[i],
                           id(f.delta[q][i], advance(p, f.out[q][i]))});
  r.initial = {id(f.initial, d.initial[0])};
  for (State q = 0; q < f.num_states; ++q)
    for (State p = 0; p < d.num_states; ++p)
      if (dfin.count(advance(p, f.final_out[q]))) r.final_states.push_back(id(q, p));
  r.validate();
  return nfa_trim(r);
}

SequentialTransducer transducer_identity(std::vector<Symbol> alphabet) {
  SequentialTransducer f;
  f.num_states = 1;
  f.initial = 0;
  f.in_alphabet = alphabet;
  f.out_alphabet = std::move(alphabet);
  f.delta = {std::vector<State>(f.in_alphabet.size(), 0)};
  f.out = {std::vector<Word>(f.in_alphabet.size())};
  for (size_t i = 0; i < f.in_alphabet.size(); ++i) f.out[0][i] = {f.in_alphabet[i]};
  f.final_out = {Word{}};
  f.validate();
  return f;
}

SequentialTransducer transducer_run_map(const LabelingAutomaton& a) {
  SequentialTransducer f;
  f.num_states = a.num_states;
  f.initial = a.initial;
  f.in_alphabet = a.alphabet;
  for (uint32_t e = 0; e < a.num_edges(); ++e) f.out_alphabet.push_back(e);
  f.delta.assign(a.num_states, std::vector<State>(a.alphabet.size(), 0));
  f.out.assign(a.num_states, std::vector<Word>(a.alphabet.size()));
  for (State q = 0; q < a.num_states; ++q)
    for (size_t i = 0; i < a.alphabet.size(); ++i) {
      f.delta[q][i] = a.delta[q][i];
      f.out[q][i] = {a.edge_id(q, a.alphabet[i])};
    }
  f.final_out.assign(a.num_states, Word{});
  f.validate();
  return f;
}

}  // namespace wqo
