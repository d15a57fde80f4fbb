#pragma once

#include "wqo/ideal.hpp"

namespace wqo {

// Word-level pumping step behind pattern lifting: repeats a cycle-read block
// of whole period-length factors inside an accepted word u of the Mod(d)
// ideal of v^[r]. Requires d to be a multiple of (m^3)!, the period of v at
// most m^2, the automaton at most m states, and |u| >= m * period(d, v).
// The result is accepted, has length |u| + (l-1)d, and dominates u at Mod(d)
// since the inserted length is a multiple of d.
Word pump_word_up(const Nfa& a, uint32_t m, uint32_t d, const Word& v,
                  uint32_t r, const Word& u, uint32_t ell);

// Lifts an irreducible extended pattern whose ideal is in the Mod(d)
// adherence of L(a) to modulus l*d by raising every loop to its l-th power
// (connectors and residues unchanged). Requires d to be a multiple of
// 2*(m^3)! and all loop periods at most m^2. The result is certified to be in
// the Mod(l*d) adherence of L(a); a certification failure is an internal
// error, not an input error.
ExtLoopPattern pump_pattern(const Nfa& a, uint32_t m, uint32_t d,
                            const ExtLoopPattern& p, uint32_t ell);

}  // namespace wqo
