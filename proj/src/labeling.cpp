#include "wqo/labeling.hpp"

#include <algorithm>

namespace wqo {

size_t LabelingAutomaton::symbol_index(Symbol a) const {
  auto it = std::lower_bound(alphabet.begin(), alphabet.end(), a);
  if (it == alphabet.end() || *it != a) throw Error("symbol not in alphabet");
  return static_cast<size_t>(it - alphabet.begin());
}

State LabelingAutomaton::step(State q, Symbol a) const {
  return delta[q][symbol_index(a)];
}

State LabelingAutomaton::run_from(State q, const Word& w) const {
  for (Symbol a : w) q = step(q, a);
  return q;
}

std::pair<State, State> LabelingAutomaton::sigma(const Word& w) const {
  return {initial, run_from(initial, w)};
}

uint32_t LabelingAutomaton::edge_id(State q, Symbol a) const {
  return q * static_cast<uint32_t>(alphabet.size()) +
         static_cast<uint32_t>(symbol_index(a));
}

void LabelingAutomaton::validate() const {
  if (num_states == 0) throw Error("labeling automaton needs at least one state");
  if (alphabet.empty()) throw Error("labeling automaton needs a non-empty alphabet");
  for (size_t i = 1; i < alphabet.size(); ++i)
    if (alphabet[i - 1] >= alphabet[i])
      throw Error("alphabet must be sorted and duplicate-free");
  if (initial >= num_states) throw Error("initial state out of range");
  if (delta.size() != num_states) throw Error("transition table size mismatch");
  for (const auto& row : delta) {
    if (row.size() != alphabet.size()) throw Error("transition table is not complete");
    for (State q : row)
      if (q >= num_states) throw Error("transition target out of range");
  }
}

Nfa LabelingAutomaton::to_nfa() const {
  Nfa r;
  r.num_states = num_states;
  r.alphabet = alphabet;
  for (State q = 0; q < num_states; ++q)
    for (size_t i = 0; i < alphabet.size(); ++i)
      r.edges.push_back({q, alphabet[i], delta[q][i]});
  r.initial = {initial};
  for (State q = 0; q < num_states; ++q) r.final_states.push_back(q);
  r.validate();
  return r;
}

LabelingRun labeling_run(const LabelingAutomaton& a, const Word& w) {
  LabelingRun r;
  r.edge_ids.reserve(w.size());
  State q = a.initial;
  for (Symbol x : w) {
    r.edge_ids.push_back(a.edge_id(q, x));
    q = a.step(q, x);
  }
  r.sigma = {a.initial, q};
  return r;
}

LabelingAutomaton build_md(uint32_t d, std::vector<Symbol> alphabet) {
  if (d == 0) throw Error("modulus must be positive");
  LabelingAutomaton a;
  a.num_states = d;
  a.alphabet = std::move(alphabet);
  a.initial = 0;
  a.delta.assign(d, std::vector<State>(a.alphabet.size(), 0));
  for (State q = 0; q < d; ++q)
    for (size_t i = 0; i < a.alphabet.size(); ++i) a.delta[q][i] = (q + 1) % d;
  a.validate();
  return a;
}

LabelingAutomaton labeling_from_nfa(const Nfa& n) {
  n.validate();
  if (n.initial.size() != 1)
    throw Error("labeling automaton needs exactly one initial state");
  LabelingAutomaton a;
  a.num_states = n.num_states;
  a.alphabet = n.alphabet;
  a.initial = n.initial[0];
  a.delta.assign(n.num_states, std::vector<State>(n.alphabet.size(), 0));
  std::vector<std::vector<bool>> seen(n.num_states,
                                      std::vector<bool>(n.alphabet.size(), false));
  for (const Edge& e : n.edges) {
    if (e.label == kEpsilon)
      throw Error("labeling automaton cannot have epsilon edges");
    size_t i = n.symbol_index(e.label);
    if (seen[e.from][i]) throw Error("labeling automaton must be deterministic");
    seen[e.from][i] = true;
    a.delta[e.from][i] = e.to;
  }
  for (State q = 0; q < n.num_states; ++q)
    for (size_t i = 0; i < n.alphabet.size(); ++i)
      if (!seen[q][i]) throw Error("labeling automaton must be complete");
  a.validate();
  return a;
}

}  // namespace wqo
