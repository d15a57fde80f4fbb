#include "wqo/adherence.hpp"

#include <algorithm>

#include "wqo/closure.hpp"
#include "wqo/unbounded.hpp"

namespace wqo {

namespace {

CounterAutomaton widen_ca(CounterAutomaton a, std::vector<Symbol> alphabet) {
  a.alphabet = alphabet_union(a.alphabet, alphabet);
  return a;
}

// Nondeterministic subsequence matcher for a0 w1^k a1 ... wn^k an where wi
// lists the letters of the i-th star atom once each; completed traversals of
// wi bump counter i. Unread input letters are skipped by self-loops.
CounterAutomaton subword_matcher_ca(const SubwordIdeal& ideal,
                                    const std::vector<Symbol>& alphabet) {
  CounterAutomaton m;
  m.alphabet = alphabet;
  for (const SubwordAtom& atom : ideal.atoms)
    if (atom.is_star) ++m.num_counters;
  std::vector<uint64_t> zero(m.num_counters, 0);
  uint32_t counter = 0;
  State cur = 0;
  for (const SubwordAtom& atom : ideal.atoms) {
    if (atom.is_star) {
      Word rep(atom.letters.begin(), atom.letters.end());
      State entry = cur;
      for (size_t j = 0; j < rep.size(); ++j) {
        auto inc = zero;
        if (j + 1 == rep.size()) inc[counter] = 1;
        State next = j + 1 == rep.size() ? entry : cur + 1;
        m.edges.push_back({cur, rep[j], next, inc});
        if (j + 1 < rep.size()) ++cur;
      }
      cur = entry + static_cast<State>(rep.size());
      // Leaving after a whole number of traversals is always possible:
      // partially matched copies could have been skipped instead.
      m.edges.push_back({entry, kEpsilon, cur, zero});
      ++counter;
    } else {
      m.edges.push_back({cur, atom.letter, cur + 1, zero});
      ++cur;
    }
  }
  m.num_states = cur + 1;
  for (State s = 0; s < m.num_states; ++s)
    for (Symbol x : alphabet) m.edges.push_back({s, x, s, zero});
  m.initial = {0};
  m.final_states = {cur};
  m.validate();
  return m;
}

CounterAutomaton subword_adherence_ca(const SubwordIdeal& ideal,
                                      const std::vector<Symbol>& alphabet) {
  return counter_product(subword_matcher_ca(ideal, alphabet),
                         subword_ideal_nfa(ideal, alphabet));
}

// For automaton orders, the order is the conjunction of run-subword (through
// the run transducer) and end-state equality; the adherence automaton is the
// subword construction over edge identifiers composed with the run map,
// filtered by the end-state class of the pattern.
CounterAutomaton labeling_pattern_ca(const OrderSpec& o, const LoopPattern& p) {
  const LabelingAutomaton& a = *o.lab;
  std::vector<Symbol> edge_alphabet(a.num_edges());
  for (uint32_t e = 0; e < a.num_edges(); ++e) edge_alphabet[e] = e;
  SubwordIdeal run_ideal;
  State q = a.initial;
  for (size_t k = 0; k < p.connectors.size(); ++k) {
    for (Symbol x : p.connectors[k]) {
      run_ideal.atoms.push_back({false, a.edge_id(q, x), {}});
      q = a.step(q, x);
    }
    if (k < p.loops.size()) {
      std::set<Symbol> gamma;
      State s = q;
      for (Symbol x : p.loops[k]) {
        gamma.insert(a.edge_id(s, x));
        s = a.step(s, x);
      }
      if (s != q) throw Error("run does not loop at a pattern loop");
      run_ideal.atoms.push_back({true, 0, std::move(gamma)});
    }
  }
  CounterAutomaton over_runs = subword_adherence_ca(run_ideal, edge_alphabet);
  CounterAutomaton lifted = counter_compose(over_runs, transducer_run_map(a));
  Nfa sigma_class;
  sigma_class.num_states = a.num_states;
  sigma_class.alphabet = a.alphabet;
  for (State s = 0; s < a.num_states; ++s)
    for (Symbol x : a.alphabet)
      sigma_class.edges.push_back({s, x, a.step(s, x)});
  sigma_class.initial = {a.initial};
  sigma_class.final_states = {q};
  return counter_product(lifted, sigma_class);
}

// -- association -------------------------------------------------------------

// The association automata are assembled from segment fragments chained by
// epsilon edges; a run chooses the decomposition u0 v1 u1 ... of the input.
struct Assembly {
  CounterAutomaton ca;
  std::vector<State> exits;  // of the last attached segment

  explicit Assembly(std::vector<Symbol> alphabet, uint32_t counters) {
    ca.alphabet = std::move(alphabet);
    ca.num_counters = counters;
  }

  State fresh() { return ca.num_states++; }

  void attach(const std::vector<State>& entries) {
    if (exits.empty()) {
      for (State e : entries) ca.initial.push_back(e);
    } else {
      std::vector<uint64_t> zero(ca.num_counters, 0);
      for (State x : exits)
        for (State e : entries) ca.edges.push_back({x, kEpsilon, e, zero});
    }
  }
};

// Exact connector: the segment must be the word z itself.
void attach_exact(Assembly& as, const Word& z) {
  std::vector<uint64_t> zero(as.ca.num_counters, 0);
  State first = as.fresh();
  as.attach({first});
  State cur = first;
  for (Symbol x : z) {
    State next = as.fresh();
    as.ca.edges.push_back({cur, x, next, zero});
    cur = next;
  }
  as.exits = {cur};
}

// Membership-only segment: any word of L(n).
void attach_member(Assembly& as, const Nfa& n) {
  std::vector<uint64_t> zero(as.ca.num_counters, 0);
  State base = as.ca.num_states;
  as.ca.num_states += n.num_states;
  for (const Edge& e : n.edges)
    as.ca.edges.push_back({base + e.from, e.label, base + e.to, zero});
  std::vector<State> entries;
  for (State q : n.initial) entries.push_back(base + q);
  as.attach(entries);
  as.exits.clear();
  for (State q : n.final_states) as.exits.push_back(base + q);
}

// Segment that must lie in L(n), embed u at positions matching modulo d, and
// end after a length congruent to |u| modulo d.
void attach_embed_member(Assembly& as, const Word& u, const Nfa& n, uint32_t d) {
  std::vector<uint64_t> zero(as.ca.num_counters, 0);
  auto idx = [&](size_t c, uint32_t t, State q) {
    return static_cast<State>((c * d + t) * n.num_states + q);
  };
  State base = as.ca.num_states;
  as.ca.num_states += static_cast<uint32_t>((u.size() + 1) * d * n.num_states);
  for (size_t c = 0; c <= u.size(); ++c)
    for (uint32_t t = 0; t < d; ++t)
      for (const Edge& e : n.edges) {
        if (e.label == kEpsilon) {
          as.ca.edges.push_back(
              {base + idx(c, t, e.from), kEpsilon, base + idx(c, t, e.to), zero});
          continue;
        }
        as.ca.edges.push_back({base + idx(c, t, e.from), e.label,
                               base + idx(c, (t + 1) % d, e.to), zero});
        if (c < u.size() && e.label == u[c] && t == c % d)
          as.ca.edges.push_back({base + idx(c, t, e.from), e.label,
                                 base + idx(c + 1, (t + 1) % d, e.to), zero});
      }
  std::vector<State> entries;
  for (State q : n.initial) entries.push_back(base + idx(0, 0, q));
  as.attach(entries);
  as.exits.clear();
  for (State q : n.final_states)
    as.exits.push_back(base + idx(u.size(), static_cast<uint32_t>(u.size()) % d, q));
}

// Loop segment: words of length r (mod d) whose letters fit kappa_d(v), with
// one counter bump per fully embedded copy of v. Exits after an embedding of
// v^k w, where w is the length-r prefix of v; for plain patterns r = 0 and
// any partially matched copy may be abandoned.
void attach_loop(Assembly& as, const Word& v, uint32_t r, uint32_t counter,
                 uint32_t d, bool extended) {
  std::vector<uint64_t> zero(as.ca.num_counters, 0);
  KappaProfile prof = kappa(d, v);
  auto idx = [&](size_t j, uint32_t t) {
    return static_cast<State>(j * d + t);
  };
  State base = as.ca.num_states;
  as.ca.num_states += static_cast<uint32_t>(v.size() * d);
  for (size_t j = 0; j < v.size(); ++j)
    for (uint32_t t = 0; t < d; ++t)
      for (Symbol x : prof.at(t + 1)) {
        as.ca.edges.push_back({base + idx(j, t), x, base + idx(j, (t + 1) % d), zero});
        if (x == v[j] && t == j % d) {
          auto inc = zero;
          if (j + 1 == v.size()) inc[counter] = 1;
          as.ca.edges.push_back({base + idx(j, t), x,
                                 base + idx((j + 1) % v.size(), (t + 1) % d), inc});
        }
      }
  as.attach({base + idx(0, 0)});
  as.exits.clear();
  if (extended) {
    as.exits.push_back(base + idx(r, r % d));
  } else {
    for (size_t j = 0; j < v.size(); ++j) as.exits.push_back(base + idx(j, 0));
  }
}

Nfa down_generator(const OrderSpec& o, const std::vector<Word>& connectors,
                   const std::vector<Word>& loops) {
  return downward_closure(
      o, pattern_generator_nfa(connectors, loops, o.alphabet));
}

// Segment language for the i-th connector of a plain association witness:
// down_d of u0 v1* (i = 0), v_i* u_i v_{i+1}* (middle) or v_n* u_n (i = n).
Nfa plain_connector_language(const OrderSpec& o, const LoopPattern& p, size_t i) {
  size_t n = p.loops.size();
  std::vector<Word> connectors;
  std::vector<Word> loops;
  if (i > 0) {
    connectors.emplace_back();
    loops.push_back(p.loops[i - 1]);
  }
  connectors.push_back(p.connectors[i]);
  if (i < n) {
    loops.push_back(p.loops[i]);
    connectors.emplace_back();
  }
  return down_generator(o, connectors, loops);
}

CounterAutomaton plain_association_ca(const OrderSpec& o, const LoopPattern& p) {
  uint32_t d = o.mod_d;
  size_t n = p.loops.size();
  Assembly as(o.alphabet, static_cast<uint32_t>(n));
  attach_embed_member(as, p.connectors[0], plain_connector_language(o, p, 0), d);
  for (size_t i = 1; i <= n; ++i) {
    attach_loop(as, p.loops[i - 1], 0, static_cast<uint32_t>(i - 1), d, false);
    attach_embed_member(as, p.connectors[i], plain_connector_language(o, p, i), d);
  }
  as.ca.final_states = as.exits;
  std::sort(as.ca.initial.begin(), as.ca.initial.end());
  std::sort(as.ca.final_states.begin(), as.ca.final_states.end());
  as.ca.validate();
  return as.ca;
}

CounterAutomaton ext_association_ca(const OrderSpec& o, const ExtLoopPattern& p) {
  uint32_t d = p.d;
  size_t n = p.loops.size();
  Assembly as(o.alphabet, static_cast<uint32_t>(n));
  attach_exact(as, p.connectors[0]);
  for (size_t i = 1; i <= n; ++i) {
    attach_loop(as, p.loops[i - 1], p.residues[i - 1],
                static_cast<uint32_t>(i - 1), d, true);
    const Word& u = p.connectors[i];
    if (i == n || !u.empty()) {
      attach_exact(as, u);
    } else {
      // An empty middle connector may be padded from the neighboring loops:
      // any word in down_d of lambda^{r_i}(v_i)* v_{i+1}*.
      Word rotated = rotate(p.loops[i - 1], RotateDirection::Left, p.residues[i - 1]);
      attach_member(as, down_generator(o, {{}, {}, {}}, {rotated, p.loops[i]}));
    }
  }
  as.ca.final_states = as.exits;
  std::sort(as.ca.initial.begin(), as.ca.initial.end());
  std::sort(as.ca.final_states.begin(), as.ca.final_states.end());
  as.ca.validate();
  return as.ca;
}

}  // namespace

CounterAutomaton build_adherence_ca(const OrderSpec& o, const IdealRep& i) {
  return std::visit(
      [&](const auto& rep) -> CounterAutomaton {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, SubwordIdeal>) {
          return subword_adherence_ca(rep, o.alphabet);
        } else if constexpr (std::is_same_v<T, LoopPattern>) {
          return labeling_pattern_ca(o, rep);
        } else if constexpr (std::is_same_v<T, ExtLoopPattern>) {
          return labeling_pattern_ca(o, ext_to_plain(rep));
        } else if constexpr (std::is_same_v<T, WordIdeal>) {
          IdealRep strongest = word_ideal(o, rep.w);
          if (std::holds_alternative<WordIdeal>(strongest.rep))
            throw Error("adherence unsupported for " + o.describe());
          return build_adherence_ca(o, strongest);
        } else if constexpr (std::is_same_v<T, ConjIdeal>) {
          CounterAutomaton acc = build_adherence_ca(*o.parts[0], *rep.parts[0]);
          for (size_t k = 1; k < rep.parts.size(); ++k)
            acc = counter_pair_product(
                acc, build_adherence_ca(*o.parts[k], *rep.parts[k]));
          return acc;
        } else {
          static_assert(std::is_same_v<T, TransductionIdeal>);
          return counter_compose(build_adherence_ca(*o.inner, *rep.inner),
                                 *o.trans);
        }
      },
      i.rep);
}

bool adherence_member(const OrderSpec& o, const IdealRep& i, const Nfa& l) {
  std::vector<Symbol> joint = alphabet_union(o.alphabet, l.alphabet);
  Nfa wide = nfa_widen_alphabet(l, joint);
  CounterAutomaton ca = widen_ca(build_adherence_ca(o, i), joint);
  bool by_counters = counter_unbounded(ca, &wide).unbounded;
  // Cross-check against I <= down(L intersect I) where closures are direct.
  switch (o.kind) {
    case OrderSpec::Kind::Subword:
    case OrderSpec::Kind::Labeling:
    case OrderSpec::Kind::Mod: {
      Nfa ideal_nfa = ideal_to_nfa(o, i);
      Nfa down = downward_closure(o, nfa_intersect(wide, nfa_widen_alphabet(ideal_nfa, joint)));
      bool by_inclusion = nfa_includes(nfa_widen_alphabet(down, joint),
                                       nfa_widen_alphabet(ideal_nfa, joint));
      if (by_inclusion != by_counters)
        throw Error("adherence decision routes disagree");
      break;
    }
    default:
      break;
  }
  return by_counters;
}

bool conj_family_adherent(const OrderSpec& conj, const ConjIdeal& fam,
                          const Nfa& l) {
  if (conj.kind != OrderSpec::Kind::Conjunction ||
      fam.parts.size() != conj.parts.size())
    throw Error("family does not match the conjunction order");
  CounterAutomaton acc = build_adherence_ca(*conj.parts[0], *fam.parts[0]);
  for (size_t k = 1; k < fam.parts.size(); ++k)
    acc = counter_pair_product(
        acc, build_adherence_ca(*conj.parts[k], *fam.parts[k]));
  std::vector<Symbol> joint = alphabet_union(conj.alphabet, l.alphabet);
  Nfa wide = nfa_widen_alphabet(l, joint);
  return counter_unbounded(widen_ca(std::move(acc), joint), &wide).unbounded;
}

bool association_check(const OrderSpec& o, const IdealRep& p, const Nfa& l) {
  if (o.kind != OrderSpec::Kind::Mod)
    throw Error("association is defined for Mod orders");
  validate_ideal(o, p);
  CounterAutomaton ca;
  if (const auto* plain = std::get_if<LoopPattern>(&p.rep))
    ca = plain_association_ca(o, *plain);
  else if (const auto* ext = std::get_if<ExtLoopPattern>(&p.rep))
    ca = ext_association_ca(o, *ext);
  else
    throw Error("association requires a loop pattern");
  std::vector<Symbol> joint = alphabet_union(o.alphabet, l.alphabet);
  Nfa wide = nfa_widen_alphabet(l, joint);
  return counter_unbounded(widen_ca(std::move(ca), joint), &wide).unbounded;
}

}  // namespace wqo
