#include "wqo/closure.hpp"

#include <algorithm>

#include "wqo/adherence.hpp"
#include "wqo/decompose.hpp"
#include "wqo/ideal.hpp"
#include "wqo/transducer.hpp"

namespace wqo {

namespace {

// Letters become optional: an epsilon copy of every letter edge.
Nfa subword_down(const Nfa& l) {
  Nfa a = l;
  for (const Edge& e : l.edges)
    if (e.label != kEpsilon) a.edges.push_back({e.from, kEpsilon, e.to});
  return a;
}

// Arbitrary letters may be inserted anywhere.
Nfa subword_up(const Nfa& l) {
  Nfa a = l;
  for (State q = 0; q < a.num_states; ++q)
    for (Symbol x : a.alphabet) a.edges.push_back({q, x, q});
  return a;
}

// DFA over edge identifiers accepting the valid run words of `a` that start
// in the initial state and end in q.
Nfa run_language(const LabelingAutomaton& a, State q) {
  Nfa r;
  r.num_states = a.num_states;
  r.alphabet.resize(a.num_edges());
  for (uint32_t e = 0; e < a.num_edges(); ++e) r.alphabet[e] = e;
  for (uint32_t e = 0; e < a.num_edges(); ++e)
    r.edges.push_back({a.edge_source(e), e, a.edge_target(e)});
  r.initial = {a.initial};
  r.final_states = {q};
  r.validate();
  return r;
}

Nfa project_run_word(const LabelingAutomaton& a, const Nfa& runs,
                     std::vector<Symbol> alphabet) {
  std::vector<std::pair<Symbol, Symbol>> map;
  map.reserve(a.num_edges());
  for (uint32_t e = 0; e < a.num_edges(); ++e)
    map.emplace_back(e, a.edge_label(e));
  return nfa_relabel(runs, map, std::move(alphabet));
}

// The closure of an automaton order decomposes per end state of the run:
// lift L to its run words, subword-close those, keep the valid run words
// with the same sigma, and read the labels back off.
Nfa labeling_closure(const OrderSpec& o, const Nfa& l, bool down) {
  const LabelingAutomaton& a = *o.lab;
  SequentialTransducer run_map = transducer_run_map(a);
  Nfa runs_all = apply_transducer(run_map, l);
  Nfa result = nfa_empty_language(o.alphabet);
  for (State q = 0; q < a.num_states; ++q) {
    Nfa runs_q = run_language(a, q);
    Nfa k = nfa_intersect(runs_all, runs_q);
    if (nfa_is_empty(k)) continue;
    Nfa closed = down ? subword_down(k) : subword_up(k);
    Nfa valid = nfa_intersect(closed, runs_q);
    result = nfa_union(result, project_run_word(a, valid, o.alphabet));
  }
  return nfa_trim(result);
}

// Generic ideal-union search for conjunction orders: grow a set of ideals
// known to sit inside the closure until their union provably swallows L.
// Union <= closure holds throughout, so a positive inclusion check is a
// proof; running out of budget is reported as such, never as an answer.
Nfa conjunction_down(const OrderSpec& o, const Nfa& l, uint32_t budget) {
  if (nfa_is_empty(l)) return nfa_empty_language(o.alphabet);
  std::vector<std::vector<IdealRep>> part_ideals;
  for (const OrderPtr& part : o.parts)
    part_ideals.push_back(ideal_decompose(*part, downward_closure(*part, l, budget)));

  // Tuples from the per-part decompositions that one directed subset of L
  // realizes simultaneously; each such intersection lies inside the closure.
  std::vector<Nfa> pieces;
  std::vector<size_t> index(o.parts.size(), 0);
  for (bool done = false; !done;) {
    ConjIdeal tuple;
    for (size_t s = 0; s < o.parts.size(); ++s)
      tuple.parts.push_back(
          std::make_shared<IdealRep>(part_ideals[s][index[s]]));
    if (conj_family_adherent(o, tuple, l))
      pieces.push_back(ideal_to_nfa(o, IdealRep{tuple}));
    done = true;
    for (size_t s = 0; s < o.parts.size(); ++s) {
      if (++index[s] < part_ideals[s].size()) {
        done = false;
        break;
      }
      index[s] = 0;
    }
  }

  Nfa u = nfa_empty_language(o.alphabet);
  for (const Nfa& piece : pieces) u = nfa_union(u, piece);
  if (nfa_includes(u, l)) return nfa_trim(u);

  // Fall back to word ideals of short members of L, by increasing length.
  for (uint32_t b = 1; b <= budget; ++b) {
    std::vector<Word> stack = {{}};
    while (!stack.empty()) {
      Word w = stack.back();
      stack.pop_back();
      if (nfa_accepts(l, w))
        u = nfa_union(u, ideal_to_nfa(o, word_ideal(o, w)));
      if (w.size() < b)
        for (Symbol x : o.alphabet) {
          Word next = w;
          next.push_back(x);
          stack.push_back(std::move(next));
        }
    }
    if (nfa_includes(u, l)) return nfa_trim(u);
  }
  throw Inconclusive(budget);
}

}  // namespace

Nfa downward_closure(const OrderSpec& o, const Nfa& l, uint32_t budget) {
  Nfa wide = nfa_widen_alphabet(l, alphabet_union(l.alphabet, o.alphabet));
  switch (o.kind) {
    case OrderSpec::Kind::Subword:
      return nfa_trim(subword_down(wide));
    case OrderSpec::Kind::Labeling:
    case OrderSpec::Kind::Mod:
      return labeling_closure(o, wide, true);
    case OrderSpec::Kind::ViaTransduction:
      return nfa_trim(inverse_apply_transducer(
          *o.trans,
          downward_closure(*o.inner, apply_transducer(*o.trans, wide), budget)));
    case OrderSpec::Kind::Conjunction:
      return conjunction_down(o, wide, budget);
    default:
      throw Error("downward closure unsupported for " + o.describe());
  }
}

Nfa upward_closure(const OrderSpec& o, const Nfa& l) {
  Nfa wide = nfa_widen_alphabet(l, alphabet_union(l.alphabet, o.alphabet));
  switch (o.kind) {
    case OrderSpec::Kind::Subword:
      return nfa_trim(subword_up(wide));
    case OrderSpec::Kind::Labeling:
    case OrderSpec::Kind::Mod:
      return labeling_closure(o, wide, false);
    case OrderSpec::Kind::ViaTransduction:
      return nfa_trim(inverse_apply_transducer(
          *o.trans, upward_closure(*o.inner, apply_transducer(*o.trans, wide))));
    default:
      throw Error("upward closure unsupported for " + o.describe());
  }
}

}  // namespace wqo
