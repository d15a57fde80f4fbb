#pragma once

#include "wqo/counter.hpp"

namespace wqo {

// Audit trail for an unboundedness verdict: an initial-to-final path through
// the SCC condensation of the (product) automaton and the counter subsets
// covered by the cycles of each visited SCC. When the verdict is "unbounded"
// the union of the covered subsets is the full counter set.
struct UnboundednessWitness {
  std::vector<uint32_t> scc_path;    // condensation node ids, initial to final
  std::vector<uint64_t> covered;     // per path node, covered-counter bitmask
  uint64_t total = 0;
};

struct UnboundednessResult {
  bool unbounded = false;
  std::optional<UnboundednessWitness> witness;
};

// Is sup over w in L of the automaton value unbounded? L is the language of
// `restrict` intersected with the skeleton, or the skeleton alone when
// restrict is null. With zero counters the value of any accepted word is
// infinite, so unboundedness degenerates to non-emptiness.
UnboundednessResult counter_unbounded(const CounterAutomaton& a,
                                      const Nfa* restrict_to = nullptr);

// Simultaneous unboundedness: is a1*...an* contained in the subword downward
// closure of L? Requires L(l) to be a subset of a1*...an*.
bool sup_decide(const Nfa& l, const Word& letters);

}  // namespace wqo
