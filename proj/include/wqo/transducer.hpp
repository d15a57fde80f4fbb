#pragma once

#include "wqo/labeling.hpp"
#include "wqo/nfa.hpp"

namespace wqo {

// Deterministic, complete, epsilon-free transducer computing a total function.
// Each transition emits a (possibly empty) output word; each state carries a
// final output appended when the input ends there.
struct SequentialTransducer {
  uint32_t num_states = 0;
  State initial = 0;
  std::vector<Symbol> in_alphabet;   // sorted, unique
  std::vector<Symbol> out_alphabet;  // sorted, unique
  std::vector<std::vector<State>> delta;   // [state][in symbol index]
  std::vector<std::vector<Word>> out;      // [state][in symbol index]
  std::vector<Word> final_out;             // [state]

  void validate() const;
  size_t in_index(Symbol a) const;
  Word apply_word(const Word& w) const;
};

// Image automaton: accepts { f(w) : w in L(l) }.
Nfa apply_transducer(const SequentialTransducer& f, const Nfa& l,
                     size_t cap = kDefaultDeterminizeCap);

// Preimage automaton: accepts { w : f(w) in L(l) }.
Nfa inverse_apply_transducer(const SequentialTransducer& f, const Nfa& l,
                             size_t cap = kDefaultDeterminizeCap);

// Identity on the given alphabet.
SequentialTransducer transducer_identity(std::vector<Symbol> alphabet);

// Maps each word to the edge-id word of its run in a labeling automaton.
// Output symbols are the edge identifiers of `a`.
SequentialTransducer transducer_run_map(const LabelingAutomaton& a);

}  // namespace wqo
