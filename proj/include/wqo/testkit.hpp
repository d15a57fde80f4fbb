#pragma once

#include <random>

#include "wqo/counter.hpp"
#include "wqo/order.hpp"

namespace wqo {

// Explicit bounded slice of a regular language.
struct BoundedLanguage {
  std::vector<Symbol> alphabet;
  size_t bound = 0;
  std::set<Word> words;
};

// All accepted words of length at most bound, by direct enumeration.
BoundedLanguage enum_words(const Nfa& a, size_t bound);

// Bounded downward closure by a direct search, independent of the closure
// engine: a word is kept when some accepted word of length at most
// bound + (bound+1)*|Q|*d dominates it. Subword and Mod orders only.
BoundedLanguage dcl_oracle(const OrderSpec& o, const Nfa& a, size_t bound);

// Exhaustive run search up to length_cap edges: can some accepting run drive
// every counter to at least k?
bool unbounded_oracle(const CounterAutomaton& ca, size_t length_cap,
                      uint64_t k);

// Quadratic dynamic-programming subword check.
bool subword_oracle(const Word& u, const Word& v);

// Brute-force search for a strictly monotone, letter- and residue-preserving
// embedding with matching length congruence.
bool mod_embed_oracle(uint32_t d, const Word& u, const Word& v);

// Number of positions where u occurs as a factor of w; the empty word occurs
// |w| + 1 times.
size_t count_occurrences(const Word& u, const Word& w);

// Seeded random instances for the property suites.
Nfa random_nfa(std::mt19937& rng, uint32_t max_states,
               const std::vector<Symbol>& alphabet);
CounterAutomaton random_counter_automaton(std::mt19937& rng,
                                          uint32_t max_states,
                                          uint32_t max_counters,
                                          const std::vector<Symbol>& alphabet);

}  // namespace wqo
