#pragma once

#include <memory>
#include <utility>

#include "wqo/nfa.hpp"

namespace wqo {

// Deterministic, complete, epsilon-free automaton with a single initial state
// in which every state is accepting. Such an automaton has exactly one run on
// every word, so "insert loops of the automaton" is a well-defined order.
struct LabelingAutomaton {
  uint32_t num_states = 0;
  std::vector<Symbol> alphabet;  // sorted, unique
  State initial = 0;
  // delta[q][i] = successor of q on alphabet[i]
  std::vector<std::vector<State>> delta;

  State step(State q, Symbol a) const;
  State run_from(State q, const Word& w) const;
  // Start and end state of the unique run on w from the initial state.
  std::pair<State, State> sigma(const Word& w) const;
  // Edges are identified as q * |alphabet| + symbol_index.
  uint32_t edge_id(State q, Symbol a) const;
  uint32_t num_edges() const { return num_states * static_cast<uint32_t>(alphabet.size()); }
  State edge_source(uint32_t id) const { return id / static_cast<uint32_t>(alphabet.size()); }
  Symbol edge_label(uint32_t id) const { return alphabet[id % alphabet.size()]; }
  State edge_target(uint32_t id) const { return delta[edge_source(id)][id % alphabet.size()]; }
  size_t symbol_index(Symbol a) const;

  void validate() const;
  Nfa to_nfa() const;
};

// Edge identifiers of the run on w, plus sigma(w).
struct LabelingRun {
  std::vector<uint32_t> edge_ids;
  std::pair<State, State> sigma;
};

LabelingRun labeling_run(const LabelingAutomaton& a, const Word& w);

// Cycle automaton with d states: state = length read modulo d.
LabelingAutomaton build_md(uint32_t d, std::vector<Symbol> alphabet);

// Checks the shape (deterministic, complete, epsilon-free, one initial state)
// and converts. Every state is treated as accepting regardless of the input's
// final set.
LabelingAutomaton labeling_from_nfa(const Nfa& a);

}  // namespace wqo
