#pragma once

#include "wqo/nfa.hpp"

namespace wqo {

struct SequentialTransducer;

constexpr uint32_t kMaxCounters = 64;

struct CounterEdge {
  State from;
  Symbol label;  // kEpsilon allowed
  State to;
  std::vector<uint64_t> inc;  // one entry per counter
  friend bool operator==(const CounterEdge&, const CounterEdge&) = default;
};

// Nondeterministic automaton whose transitions add to a vector of counters.
// The value of a word is the best run: sup over accepting runs of the minimum
// counter reached.
struct CounterAutomaton {
  uint32_t num_states = 0;
  std::vector<Symbol> alphabet;
  uint32_t num_counters = 0;
  std::vector<CounterEdge> edges;
  std::vector<State> initial;
  std::vector<State> final_states;

  void validate() const;
  Nfa skeleton() const;  // same automaton with counters dropped
};

// Synchronized product with an NFA: letter edges pair up, epsilon edges on
// either side move alone. Alphabets must agree. Counters are a's.
CounterAutomaton counter_product(const CounterAutomaton& a, const Nfa& r);

// Product with disjoint counter sets: the result has a's counters followed by
// b's, so its value on w is min(value_a(w), value_b(w)) over paired runs.
CounterAutomaton counter_pair_product(const CounterAutomaton& a,
                                      const CounterAutomaton& b);

// Composition through a sequential transducer: the result's value on w equals
// a's value on f(w). Transition outputs and final outputs of f are threaded
// through a by epsilon chains carrying a's increments.
CounterAutomaton counter_compose(const CounterAutomaton& a,
                                 const SequentialTransducer& f);

// True iff some accepting run on w drives every counter to at least k.
// Counter values saturate at k during the search, so epsilon cycles with
// increments are handled. With zero counters this is plain acceptance.
bool counter_value_at_least(const CounterAutomaton& a, const Word& w, uint64_t k);

// Deterministic, complete, epsilon-free automaton computing a counter vector
// for every word, including a final increment applied at the end of input.
struct CountingAutomaton {
  uint32_t num_states = 0;
  State initial = 0;
  std::vector<Symbol> alphabet;  // sorted, unique
  uint32_t num_counters = 0;
  std::vector<std::vector<State>> delta;                  // [state][symbol]
  std::vector<std::vector<std::vector<uint64_t>>> inc;    // [state][symbol][counter]
  std::vector<std::vector<uint64_t>> final_inc;           // [state][counter]
  std::vector<std::string> counter_names;                 // optional, for IO

  void validate() const;
  size_t symbol_index(Symbol a) const;
};

std::vector<uint64_t> counting_eval(const CountingAutomaton& a, const Word& w);

// Counting automaton for the length-k local/threshold order: for every word
// u over the alphabet with |u| <= k it tracks a prefix flag, a suffix flag
// and the number of occurrences of u. The empty word counts |w| + 1
// occurrences. Counters are laid out per u as [prefix, suffix, count].
CountingAutomaton build_pk(uint32_t k, std::vector<Symbol> alphabet);

// Index helpers for build_pk counter layout.
std::vector<Word> words_up_to(uint32_t k, const std::vector<Symbol>& alphabet);

}  // namespace wqo
