#pragma once

#include "wqo/ideal.hpp"

namespace wqo {

// Counter automaton A_I with: for every regular L, A_I unbounded on L iff
// I is in the adherence of L under o.
CounterAutomaton build_adherence_ca(const OrderSpec& o, const IdealRep& i);

// I in Adh_o(L)? Decided via the counter automaton and cross-checked against
// the inclusion route I <= down(L intersect I) where closures are available.
bool adherence_member(const OrderSpec& o, const IdealRep& i, const Nfa& l);

// Family adherence for conjunctions: one directed set D <= L realizing every
// component ideal at once, decided by the disjoint-counter product automaton.
bool conj_family_adherent(const OrderSpec& conj, const ConjIdeal& fam,
                          const Nfa& l);

// Association of a Mod(d) loop pattern (plain when p holds a LoopPattern,
// extended otherwise) to L, decided by a segment-structured counter automaton.
bool association_check(const OrderSpec& o, const IdealRep& p, const Nfa& l);

}  // namespace wqo
