#pragma once

#include <memory>
#include <variant>

#include "wqo/kappa.hpp"
#include "wqo/order.hpp"

namespace wqo {

// Jullien form {a0, eps} G1* {a1, eps} ... Gn* {an, eps}, flattened into a
// sequence of atoms.
struct SubwordAtom {
  bool is_star = false;
  Symbol letter = 0;          // when !is_star
  std::set<Symbol> letters;   // when is_star; non-empty
  friend bool operator==(const SubwordAtom&, const SubwordAtom&) = default;
  friend auto operator<=>(const SubwordAtom&, const SubwordAtom&) = default;
};

struct SubwordIdeal {
  std::vector<SubwordAtom> atoms;
  friend bool operator==(const SubwordIdeal&, const SubwordIdeal&) = default;
};

// Downward closure of u0 v1* u1 ... vn* un for a labeling automaton whose
// run on u0 v1 u1 ... vn un loops at every vi.
struct LoopPattern {
  std::vector<Word> connectors;  // n + 1 entries
  std::vector<Word> loops;       // n entries
  friend bool operator==(const LoopPattern&, const LoopPattern&) = default;
};

// Mod(d) pattern with residue exponents: denotes the downward closure of
// u0 v1* w1 u1 ... vn* wn un where wi is the length-ri prefix of vi.
struct ExtLoopPattern {
  uint32_t d = 0;
  std::vector<Word> connectors;    // n + 1 entries
  std::vector<Word> loops;         // n entries, each length divisible by d
  std::vector<uint32_t> residues;  // n entries in [0, d-1]
  friend bool operator==(const ExtLoopPattern&, const ExtLoopPattern&) = default;
};

// Generic fallback: the ideal { u : u <= w }, available for every order.
struct WordIdeal {
  Word w;
  friend bool operator==(const WordIdeal&, const WordIdeal&) = default;
};

struct IdealRep;

// Intersection of component ideals, one per conjunct of a conjunction order.
struct ConjIdeal {
  std::vector<std::shared_ptr<const IdealRep>> parts;
};

// Preimage f^-1(J) of an inner-order ideal J under the transduction f.
struct TransductionIdeal {
  std::shared_ptr<const IdealRep> inner;
};

struct IdealRep {
  std::variant<SubwordIdeal, LoopPattern, ExtLoopPattern, WordIdeal, ConjIdeal,
               TransductionIdeal>
      rep;
};

// -- validation and conversion -----------------------------------------------

// Checks that the representation fits the order; for patterns this includes
// the loop conditions (runs loop / lengths divisible by d), for ConjIdeal the
// adherence certificate of the component family, for TransductionIdeal the
// saturation condition.
void validate_ideal(const OrderSpec& o, const IdealRep& i);

// Word of the full pattern u0 v1 u1 ... vn un.
Word pattern_word(const std::vector<Word>& connectors,
                  const std::vector<Word>& loops);

// Plain Mod(d) pattern equivalent to an extended one: the residue prefixes
// are folded into the connectors.
LoopPattern ext_to_plain(const ExtLoopPattern& p);

// NFA for the Jullien-form language itself, over any alphabet.
Nfa subword_ideal_nfa(const SubwordIdeal& i, std::vector<Symbol> alphabet);

// NFA for u0 v1* u1 ... vn* un (the generator language, not its closure).
Nfa pattern_generator_nfa(const std::vector<Word>& connectors,
                          const std::vector<Word>& loops,
                          std::vector<Symbol> alphabet);

Nfa ideal_to_nfa(const OrderSpec& o, const IdealRep& i);
bool ideal_includes(const OrderSpec& o, const IdealRep& i, const IdealRep& j);
bool ideal_equal(const OrderSpec& o, const IdealRep& i, const IdealRep& j);

// The ideal { u : u <= w } in the strongest available representation.
IdealRep word_ideal(const OrderSpec& o, const Word& w);

// -- irreducibility ------------------------------------------------------------

bool pattern_irreducible(const OrderSpec& o, const IdealRep& p);

// Length-minimizing rewriting into an irreducible extended pattern with the
// same ideal; loop periods are preserved by the rewriting rules.
ExtLoopPattern make_extended_irreducible(const OrderSpec& o, ExtLoopPattern p);

// -- literals -----------------------------------------------------------------

// Syntax: `u0 (v1)[r1] u1 (v2)[r2] ... un`, residues default to 0.
ExtLoopPattern parse_pattern_literal(const std::string& text, uint32_t d);
std::string pattern_to_string(const IdealRep& i);

}  // namespace wqo
