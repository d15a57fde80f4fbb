#pragma once

#include <optional>
#include <set>

#include "wqo/nfa.hpp"

namespace wqo {

// Per-residue letter profile: classes[i] is the set of letters occurring at
// positions p with p = i+1 (mod d), for i in [0, d-1]. Positions are 1-based,
// so classes[0] describes residue 1 and classes[d-1] describes residue 0.
struct KappaProfile {
  uint32_t d = 0;
  std::vector<std::set<Symbol>> classes;

  // Letters allowed at residue class i for 1-based i in [1, d].
  const std::set<Symbol>& at(uint32_t i) const;
  bool subset_of(const KappaProfile& other) const;
  friend bool operator==(const KappaProfile&, const KappaProfile&) = default;
};

KappaProfile kappa(uint32_t d, const Word& w);

// Smallest divisor t of d such that the profile of v is invariant under
// shifting by t inside the window [1, d-t].
uint32_t period(uint32_t d, const Word& v);

enum class RotateDirection { Right, Left };

// Right rotation sends va to av; left rotation is its inverse.
Word rotate(const Word& w, RotateDirection dir, uint32_t count = 1);

// Strictly monotone, letter- and residue-preserving position map witnessing
// u below v in the Mod(d) order, 0-based positions into v. Leftmost-greedy.
std::optional<std::vector<size_t>> d_embedding(uint32_t d, const Word& u,
                                               const Word& v);

// DFA for { u : |u| = r (mod d), kappa_d(u) subset of kappa_d(v) }, which is
// the single-loop ideal membership language.
Nfa kappa_ideal_nfa(uint32_t d, const Word& v, uint32_t r,
                    std::vector<Symbol> alphabet);

// Canonical loop word realizing a profile: for each residue i in [1, d], the
// letters of the profile at i, padded into whole length-d blocks. Any two
// words with the same profile generate the same single-loop ideal.
Word canonical_profile_word(const KappaProfile& profile);

}  // namespace wqo
