#include "wqo/unbounded.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "wqo/closure.hpp"
#include "wqo/order.hpp"

namespace wqo {

namespace {

uint64_t edge_support(const CounterEdge& e) {
  uint64_t m = 0;
  for (size_t c = 0; c < e.inc.size(); ++c)
    if (e.inc[c] > 0) m |= uint64_t{1} << c;
  return m;
}

CounterAutomaton trim(const CounterAutomaton& a) {
  std::vector<char> fwd(a.num_states, 0), bwd(a.num_states, 0);
  std::queue<State> q;
  for (State s : a.initial) {
    fwd[s] = 1;
    q.push(s);
  }
  while (!q.empty()) {
    State s = q.front();
    q.pop();
    for (const CounterEdge& e : a.edges)
      if (e.from == s && !fwd[e.to]) {
        fwd[e.to] = 1;
        q.push(e.to);
      }
  }
  for (State s : a.final_states)
    if (!bwd[s]) {
      bwd[s] = 1;
      q.push(s);
    }
  while (!q.empty()) {
    State s = q.front();
    q.pop();
    for (const CounterEdge& e : a.edges)
      if (e.to == s && !bwd[e.from]) {
        bwd[e.from] = 1;
        q.push(e.from);
      }
  }
  std::vector<State> remap(a.num_states, 0);
  CounterAutomaton t;
  t.alphabet = a.alphabet;
  t.num_counters = a.num_counters;
  for (State s = 0; s < a.num_states; ++s)
    if (fwd[s] && bwd[s]) remap[s] = t.num_states++;
  auto alive = [&](State s) { return fwd[s] && bwd[s]; };
  for (const CounterEdge& e : a.edges)
    if (alive(e.from) && alive(e.to))
      t.edges.push_back({remap[e.from], e.label, remap[e.to], e.inc});
  for (State s : a.initial)
    if (alive(s)) t.initial.push_back(remap[s]);
  for (State s : a.final_states)
    if (alive(s)) t.final_states.push_back(remap[s]);
  return t;
}

struct Condensation {
  std::vector<uint32_t> comp;            // state -> SCC id
  uint32_t num_comps = 0;
  std::vector<uint64_t> pump_mask;       // per SCC, internal-edge support union
};

Condensation condense(const CounterAutomaton& a) {
  // Iterative Tarjan.
  Condensation c;
  c.comp.assign(a.num_states, UINT32_MAX);
  std::vector<std::vector<std::pair<State, const CounterEdge*>>> succ(a.num_states);
  for (const CounterEdge& e : a.edges) succ[e.from].push_back({e.to, &e});
  std::vector<uint32_t> index(a.num_states, UINT32_MAX), low(a.num_states, 0);
  std::vector<char> on_stack(a.num_states, 0);
  std::vector<State> stack;
  uint32_t next_index = 0;
  struct Frame {
    State v;
    size_t child;
  };
  for (State root = 0; root < a.num_states; ++root) {
    if (index[root] != UINT32_MAX) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.child < succ[f.v].size()) {
        State w = succ[f.v][f.child++].first;
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
          uint32_t comp_id = c.num_comps++;
          for (;;) {
            State w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            c.comp[w] = comp_id;
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
  c.pump_mask.assign(c.num_comps, 0);
  for (const CounterEdge& e : a.edges)
    if (c.comp[e.from] == c.comp[e.to])
      c.pump_mask[c.comp[e.from]] |= edge_support(e);
  return c;
}

}  // namespace

UnboundednessResult counter_unbounded(const CounterAutomaton& a,
                                      const Nfa* restrict_to) {
  CounterAutomaton p = restrict_to ? counter_product(a, *restrict_to) : a;
  p = trim(p);
  if (p.initial.empty() || p.final_states.empty()) return {false, std::nullopt};
  if (p.num_counters == 0) {
    // inf over the empty counter set is infinite on every accepted word.
    UnboundednessWitness w;
    w.scc_path = {};
    return {true, w};
  }
  Condensation c = condense(p);
  uint64_t full = p.num_counters >= 64 ? ~uint64_t{0}
                                       : (uint64_t{1} << p.num_counters) - 1;
  std::vector<std::set<uint32_t>> dag_succ(c.num_comps);
  for (const CounterEdge& e : p.edges)
    if (c.comp[e.from] != c.comp[e.to])
      dag_succ[c.comp[e.from]].insert(c.comp[e.to]);
  std::vector<char> comp_final(c.num_comps, 0);
  for (State s : p.final_states) comp_final[c.comp[s]] = 1;

  // Worklist over (SCC, accumulated mask); per SCC only inclusion-maximal
  // masks are kept, which preserves reachability of the full set.
  std::vector<std::vector<uint64_t>> kept(c.num_comps);
  std::map<std::pair<uint32_t, uint64_t>, std::pair<uint32_t, uint64_t>> parent;
  std::queue<std::pair<uint32_t, uint64_t>> work;
  auto offer = [&](uint32_t node, uint64_t mask,
                   std::optional<std::pair<uint32_t, uint64_t>> from) {
    mask |= c.pump_mask[node];
    for (uint64_t m : kept[node])
      if ((mask & m) == mask) return;
    std::erase_if(kept[node], [&](uint64_t m) { return (m & mask) == m; });
    kept[node].push_back(mask);
    if (from) parent[{node, mask}] = *from;
    work.push({node, mask});
  };
  for (State s : p.initial) offer(c.comp[s], 0, std::nullopt);
  while (!work.empty()) {
    auto [node, mask] = work.front();
    work.pop();
    for (uint32_t next : dag_succ[node]) offer(next, mask, {{node, mask}});
  }
  for (uint32_t node = 0; node < c.num_comps; ++node) {
    if (!comp_final[node]) continue;
    for (uint64_t m : kept[node]) {
      if (m != full) continue;
      UnboundednessWitness w;
      std::pair<uint32_t, uint64_t> cur{node, m};
      for (;;) {
        w.scc_path.push_back(cur.first);
        w.covered.push_back(c.pump_mask[cur.first]);
        auto it = parent.find(cur);
        if (it == parent.end()) break;
        cur = it->second;
      }
      std::reverse(w.scc_path.begin(), w.scc_path.end());
      std::reverse(w.covered.begin(), w.covered.end());
      w.total = full;
      return {true, w};
    }
  }
  return {false, std::nullopt};
}

bool sup_decide(const Nfa& l, const Word& letters) {
  std::vector<Symbol> alphabet = l.alphabet;
  for (Symbol x : letters)
    alphabet = alphabet_union(alphabet, {x});
  Nfa pattern;
  pattern.alphabet = alphabet;
  pattern.num_states = static_cast<uint32_t>(letters.size());
  if (pattern.num_states == 0) pattern.num_states = 1;
  for (uint32_t i = 0; i < letters.size(); ++i) {
    pattern.edges.push_back({i, letters[i], i});
    if (i + 1 < letters.size()) pattern.edges.push_back({i, kEpsilon, i + 1});
  }
  pattern.initial = {0};
  pattern.final_states = {pattern.num_states - 1};
  pattern.validate();
  if (!nfa_includes(pattern, l))
    throw Error("input language is not contained in the letter pattern");
  OrderPtr sub = OrderSpec::subword(alphabet);
  return nfa_includes(downward_closure(*sub, l), pattern);
}

}  // namespace wqo
