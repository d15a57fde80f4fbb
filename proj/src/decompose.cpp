#include "wqo/decompose.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

#include "wqo/counter.hpp"
#include "wqo/kappa.hpp"

namespace wqo {

namespace {

// SCC ids in some order; comp[s] is the component of state s.
struct SccMap {
  std::vector<uint32_t> comp;
  uint32_t num_comps = 0;
};

SccMap scc_condense(uint32_t num_states, const std::vector<Edge>& edges) {
  SccMap c;
  c.comp.assign(num_states, UINT32_MAX);
  std::vector<std::vector<State>> succ(num_states);
  for (const Edge& e : edges) succ[e.from].push_back(e.to);
  std::vector<uint32_t> index(num_states, UINT32_MAX), low(num_states, 0);
  std::vector<char> on_stack(num_states, 0);
  std::vector<State> stack;
  uint32_t next_index = 0;
  struct Frame {
    State v;
    size_t child;
  };
  for (State root = 0; root < num_states; ++root) {
    if (index[root] != UINT32_MAX) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.child < succ[f.v].size()) {
        State w = succ[f.v][f.child++];
        if (index[w] == UINT32_MAX) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          uint32_t id = c.num_comps++;
          for (;;) {
            State w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            c.comp[w] = id;
            if (w == f.v) break;
          }
        }
        State v = f.v;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }
  return c;
}

// -- subword -------------------------------------------------------------------

// Jullien-form pieces read off the condensation: a Star atom per component
// with internal edges, an OptLetter atom per bridge edge on the path.
std::vector<IdealRep> decompose_subword(const Nfa& l) {
  Nfa t = nfa_trim(nfa_remove_epsilon(l));
  std::vector<IdealRep> out;
  if (t.num_states == 0 || t.final_states.empty()) return out;
  SccMap c = scc_condense(t.num_states, t.edges);
  std::vector<std::set<Symbol>> gamma(c.num_comps);
  std::vector<std::set<std::pair<Symbol, uint32_t>>> bridges(c.num_comps);
  for (const Edge& e : t.edges) {
    if (c.comp[e.from] == c.comp[e.to])
      gamma[c.comp[e.from]].insert(e.label);
    else
      bridges[c.comp[e.from]].insert({e.label, c.comp[e.to]});
  }
  std::vector<char> has_final(c.num_comps, 0);
  for (State s : t.final_states) has_final[c.comp[s]] = 1;
  std::set<uint32_t> starts;
  for (State s : t.initial) starts.insert(c.comp[s]);

  std::set<std::vector<SubwordAtom>> emitted;
  std::function<void(uint32_t, std::vector<SubwordAtom>)> walk =
      [&](uint32_t comp, std::vector<SubwordAtom> atoms) {
        if (!gamma[comp].empty()) {
          SubwordAtom star;
          star.is_star = true;
          star.letters = gamma[comp];
          atoms.push_back(std::move(star));
        }
        if (has_final[comp]) emitted.insert(atoms);
        for (const auto& [a, next] : bridges[comp]) {
          std::vector<SubwordAtom> ext = atoms;
          SubwordAtom opt;
          opt.letter = a;
          ext.push_back(std::move(opt));
          walk(next, std::move(ext));
        }
      };
  for (uint32_t comp : starts) walk(comp, {});
  for (auto& atoms : emitted) out.push_back(IdealRep{SubwordIdeal{atoms}});
  return out;
}

// -- labeling / Mod --------------------------------------------------------------

// Product of the language automaton with the labeling automaton, so that every
// cycle corresponds to a loop of the labeling run.
struct LiftedAutomaton {
  Nfa prod;                 // edges carry letters; states are pairs
  std::vector<State> nfa_part;
  std::vector<State> lab_part;
};

LiftedAutomaton lift(const Nfa& l, const LabelingAutomaton& a) {
  Nfa t = nfa_trim(nfa_remove_epsilon(l));
  std::vector<std::vector<const Edge*>> out(t.num_states);
  for (const Edge& e : t.edges) out[e.from].push_back(&e);
  LiftedAutomaton r;
  r.prod.alphabet = t.alphabet;
  std::map<std::pair<State, State>, State> index;
  std::deque<std::pair<State, State>> work;
  auto intern = [&](State n, State q) {
    auto [it, fresh] = index.try_emplace({n, q}, r.prod.num_states);
    if (fresh) {
      ++r.prod.num_states;
      r.nfa_part.push_back(n);
      r.lab_part.push_back(q);
      work.push_back({n, q});
    }
    return it->second;
  };
  for (State n : t.initial) r.prod.initial.push_back(intern(n, a.initial));
  std::set<State> tfin(t.final_states.begin(), t.final_states.end());
  while (!work.empty()) {
    auto [n, q] = work.front();
    work.pop_front();
    State s = index.at({n, q});
    if (tfin.count(n)) r.prod.final_states.push_back(s);
    for (const Edge* e : out[n]) {
      // Letters outside the labeling alphabet are outside the order's domain.
      if (!std::binary_search(a.alphabet.begin(), a.alphabet.end(), e->label))
        continue;
      r.prod.edges.push_back({s, e->label, intern(e->to, a.step(q, e->label))});
    }
  }
  std::sort(r.prod.initial.begin(), r.prod.initial.end());
  std::sort(r.prod.final_states.begin(), r.prod.final_states.end());
  return r;
}

// Shortest path between two states of one component, using internal edges
// only; returns its label word.
Word internal_path(const std::vector<std::vector<const Edge*>>& internal_succ,
                   State from, State to) {
  if (from == to) return {};
  std::map<State, const Edge*> via;
  std::queue<State> q;
  q.push(from);
  while (!q.empty()) {
    State s = q.front();
    q.pop();
    for (const Edge* e : internal_succ[s]) {
      if (e->to == from || via.count(e->to)) continue;
      via[e->to] = e;
      if (e->to == to) {
        Word w;
        State cur = to;
        while (cur != from) {
          const Edge* b = via.at(cur);
          w.push_back(b->label);
          cur = b->from;
        }
        std::reverse(w.begin(), w.end());
        return w;
      }
      q.push(e->to);
    }
  }
  throw Error("internal: component not strongly connected");
}

// Closed walk at `base` traversing every internal edge of its component once;
// concatenating those traversals yields the loop word of the pattern.
Word cover_cycle(const std::vector<std::vector<const Edge*>>& internal_succ,
                 const std::vector<const Edge*>& internal_edges, State base) {
  Word w;
  State cur = base;
  for (const Edge* e : internal_edges) {
    Word hop = internal_path(internal_succ, cur, e->from);
    w.insert(w.end(), hop.begin(), hop.end());
    w.push_back(e->label);
    cur = e->to;
  }
  Word back = internal_path(internal_succ, cur, base);
  w.insert(w.end(), back.begin(), back.end());
  return w;
}

std::vector<IdealRep> decompose_labeling(const OrderSpec& o, const Nfa& l) {
  LiftedAutomaton lifted = lift(l, *o.lab);
  const Nfa& p = lifted.prod;
  std::vector<IdealRep> out;
  if (p.num_states == 0 || p.final_states.empty()) return out;
  SccMap c = scc_condense(p.num_states, p.edges);

  std::vector<std::vector<const Edge*>> succ(p.num_states);
  std::vector<std::vector<const Edge*>> comp_edges(c.num_comps);
  std::vector<std::vector<const Edge*>> comp_bridges(c.num_comps);
  for (const Edge& e : p.edges) {
    if (c.comp[e.from] == c.comp[e.to]) {
      succ[e.from].push_back(&e);
      comp_edges[c.comp[e.from]].push_back(&e);
    } else {
      comp_bridges[c.comp[e.from]].push_back(&e);
    }
  }
  std::set<State> pfin(p.final_states.begin(), p.final_states.end());
  std::vector<std::vector<State>> comp_finals(c.num_comps);
  for (State s : p.final_states) comp_finals[c.comp[s]].push_back(s);

  // Dedup on the raw pattern shape before any language-level filtering.
  std::set<std::pair<std::vector<Word>, std::vector<Word>>> emitted;
  struct Partial {
    std::vector<Word> connectors;  // completed ones
    std::vector<Word> loops;
    Word cur;  // connector in progress
  };
  std::function<void(State, Partial)> walk = [&](State entry, Partial acc) {
    uint32_t comp = c.comp[entry];
    if (!comp_edges[comp].empty()) {
      Word loop = cover_cycle(succ, comp_edges[comp], entry);
      // For Mod orders the loop's ideal depends only on its letter profile,
      // so a short canonical loop keeps the downstream automata small.
      if (o.kind == OrderSpec::Kind::Mod)
        loop = canonical_profile_word(kappa(o.mod_d, loop));
      acc.loops.push_back(std::move(loop));
      acc.connectors.push_back(acc.cur);
      acc.cur.clear();
    }
    for (State f : comp_finals[comp]) {
      Partial done = acc;
      Word tail = internal_path(succ, entry, f);
      done.cur.insert(done.cur.end(), tail.begin(), tail.end());
      done.connectors.push_back(done.cur);
      emitted.insert({done.connectors, done.loops});
    }
    for (const Edge* b : comp_bridges[comp]) {
      Partial next = acc;
      Word hop = internal_path(succ, entry, b->from);
      next.cur.insert(next.cur.end(), hop.begin(), hop.end());
      next.cur.push_back(b->label);
      walk(b->to, std::move(next));
    }
  };
  for (State s : p.initial) walk(s, {});
  for (auto& [connectors, loops] : emitted)
    out.push_back(IdealRep{LoopPattern{connectors, loops}});
  return out;
}

}  // namespace

std::vector<IdealRep> ideal_decompose(const OrderSpec& o, const Nfa& l0) {
  // A small automaton keeps the lifted product and its cover cycles small;
  // fall back to the raw input when determinization is infeasible.
  Nfa l = l0;
  try {
    l = nfa_minimize(l0);
  } catch (const DeterminizationCapExceeded&) {
  }
  std::vector<IdealRep> cand;
  switch (o.kind) {
    case OrderSpec::Kind::Subword:
      cand = decompose_subword(l);
      break;
    case OrderSpec::Kind::Labeling:
    case OrderSpec::Kind::Mod:
      cand = decompose_labeling(o, l);
      break;
    default:
      throw Error("ideal decomposition needs a subword, labeling or Mod order");
  }
  // Keep only inclusion-maximal ideals; ties collapse to one representative.
  std::vector<IdealRep> kept;
  std::vector<Nfa> kept_langs;
  for (const IdealRep& i : cand) {
    Nfa lang = ideal_to_nfa(o, i);
    bool dominated = false;
    for (const Nfa& k : kept_langs)
      if (nfa_includes(k, lang)) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    for (size_t j = kept.size(); j-- > 0;)
      if (nfa_includes(lang, kept_langs[j])) {
        kept.erase(kept.begin() + static_cast<ptrdiff_t>(j));
        kept_langs.erase(kept_langs.begin() + static_cast<ptrdiff_t>(j));
      }
    kept.push_back(i);
    kept_langs.push_back(std::move(lang));
  }
  std::vector<Symbol> wide = l.alphabet;
  for (const Nfa& k : kept_langs) wide = alphabet_union(wide, k.alphabet);
  Nfa covered = nfa_empty_language(wide);
  for (const Nfa& k : kept_langs)
    covered = nfa_union(covered, nfa_widen_alphabet(k, wide));
  if (!nfa_equivalent(covered, nfa_widen_alphabet(l, wide)))
    throw Error(
        "ideal decomposition does not cover the input; "
        "the language is not downward closed for this order");
  return kept;
}

bool sample_downward_closed(const OrderSpec& o, const Nfa& l, size_t len_bound) {
  std::vector<Word> words =
      words_up_to(static_cast<uint32_t>(len_bound), l.alphabet);
  std::vector<char> in(words.size(), 0);
  for (size_t i = 0; i < words.size(); ++i) in[i] = nfa_accepts(l, words[i]);
  for (size_t i = 0; i < words.size(); ++i) {
    if (!in[i]) continue;
    for (size_t j = 0; j < words.size(); ++j) {
      if (in[j] || words[j].size() > words[i].size()) continue;
      if (order_leq(o, words[j], words[i])) return false;
    }
  }
  return true;
}

}  // namespace wqo
