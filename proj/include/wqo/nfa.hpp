#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace wqo {

using Symbol = uint32_t;
using State = uint32_t;
using Word = std::vector<Symbol>;

// Epsilon label on edges. Never a member of an alphabet.
constexpr Symbol kEpsilon = std::numeric_limits<Symbol>::max();

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Subset construction exceeded the configured state cap.
class DeterminizationCapExceeded : public Error {
public:
  explicit DeterminizationCapExceeded(size_t cap)
      : Error("determinization exceeded state cap " + std::to_string(cap)),
        cap_(cap) {}
  size_t cap() const { return cap_; }

private:
  size_t cap_;
};

constexpr size_t kDefaultDeterminizeCap = 1u << 16;

struct Edge {
  State from;
  Symbol label;  // kEpsilon allowed
  State to;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Nondeterministic finite automaton with epsilon edges.
struct Nfa {
  uint32_t num_states = 0;
  std::vector<Symbol> alphabet;  // sorted, unique, non-empty
  std::vector<Edge> edges;
  std::vector<State> initial;       // sorted
  std::vector<State> final_states;  // sorted
  std::vector<std::string> state_names;  // optional, for IO round trips

  void validate() const;
  bool has_symbol(Symbol a) const;
  size_t symbol_index(Symbol a) const;
};

Word word_from_string(const std::string& s);
std::string word_to_string(const Word& w);

// -- construction helpers ----------------------------------------------------

Nfa nfa_empty_language(std::vector<Symbol> alphabet);
Nfa nfa_word(const Word& w, std::vector<Symbol> alphabet);
Nfa nfa_universal(std::vector<Symbol> alphabet);
// (Gamma)* as a one-state automaton over the given alphabet.
Nfa nfa_letters_star(const std::set<Symbol>& gamma, std::vector<Symbol> alphabet);
Nfa nfa_concat(const Nfa& a, const Nfa& b);
Nfa nfa_union(const Nfa& a, const Nfa& b);
Nfa nfa_star(const Nfa& a);

std::vector<Symbol> alphabet_union(const std::vector<Symbol>& a,
                                   const std::vector<Symbol>& b);

// -- algebra -----------------------------------------------------------------

std::set<State> eps_closure(const Nfa& a, const std::set<State>& s);
bool nfa_accepts(const Nfa& a, const Word& w);
Nfa nfa_trim(const Nfa& a);
Nfa nfa_remove_epsilon(const Nfa& a);
Nfa nfa_intersect(const Nfa& a, const Nfa& b);
// Complete DFA over a.alphabet (single initial state, total transitions).
Nfa nfa_determinize(const Nfa& a, size_t cap = kDefaultDeterminizeCap);
Nfa nfa_complement(const Nfa& a, size_t cap = kDefaultDeterminizeCap);
bool nfa_is_empty(const Nfa& a);
// True iff L(b) is a subset of L(a).
bool nfa_includes(const Nfa& a, const Nfa& b, size_t cap = kDefaultDeterminizeCap);
bool nfa_equivalent(const Nfa& a, const Nfa& b, size_t cap = kDefaultDeterminizeCap);
bool nfa_is_deterministic(const Nfa& a);
// Shortest accepted word, if the language is non-empty.
std::optional<Word> nfa_shortest_word(const Nfa& a);
// Relabel every edge through a mapping defined on the alphabet.
Nfa nfa_relabel(const Nfa& a, const std::vector<std::pair<Symbol, Symbol>>& map,
                std::vector<Symbol> new_alphabet);
// Same language over a larger alphabet.
Nfa nfa_widen_alphabet(const Nfa& a, std::vector<Symbol> alphabet);
// Minimal complete DFA (Brzozowski: reverse, determinize, and again).
Nfa nfa_minimize(const Nfa& a, size_t cap = kDefaultDeterminizeCap);

}  // namespace wqo
