#include "wqo/testkit.hpp"

#include <algorithm>
#include <queue>

namespace wqo {

BoundedLanguage enum_words(const Nfa& a, size_t bound) {
  BoundedLanguage r;
  r.alphabet = a.alphabet;
  r.bound = bound;
  for (const Word& w : words_up_to(static_cast<uint32_t>(bound), a.alphabet))
    if (nfa_accepts(a, w)) r.words.insert(w);
  return r;
}

namespace {

// Does some accepted word of a dominate w in the Mod(d) order? Configurations
// (state, matched prefix of w, consumed length mod d) saturate, so the search
// is a plain fixpoint; the length bound from the pumping argument is implied.
bool dominated_in_language(const Nfa& a, const Word& w, uint32_t d) {
  struct Cfg {
    State q;
    size_t i;
    uint32_t pm;
    auto operator<=>(const Cfg&) const = default;
  };
  std::set<Cfg> seen;
  std::queue<Cfg> work;
  std::set<State> fin(a.final_states.begin(), a.final_states.end());
  auto offer = [&](Cfg c) {
    if (seen.insert(c).second) work.push(c);
  };
  for (State s : a.initial) offer({s, 0, 0});
  uint32_t want = static_cast<uint32_t>(w.size() % d);
  while (!work.empty()) {
    Cfg c = work.front();
    work.pop();
    if (c.i == w.size() && c.pm == want && fin.count(c.q)) return true;
    for (const Edge& e : a.edges) {
      if (e.from != c.q) continue;
      uint32_t pm = (c.pm + 1) % d;
      offer({e.to, c.i, pm});
      if (c.i < w.size() && e.label == w[c.i] && c.pm == c.i % d)
        offer({e.to, c.i + 1, pm});
    }
  }
  return false;
}

}  // namespace

BoundedLanguage dcl_oracle(const OrderSpec& o, const Nfa& a0, size_t bound) {
  uint32_t d = 1;
  if (o.kind == OrderSpec::Kind::Mod)
    d = o.mod_d;
  else if (o.kind != OrderSpec::Kind::Subword)
    throw Error("the closure oracle handles subword and Mod orders only");
  std::vector<Symbol> sigma = alphabet_union(o.alphabet, a0.alphabet);
  Nfa a = nfa_remove_epsilon(nfa_trim(nfa_widen_alphabet(a0, sigma)));
  BoundedLanguage r;
  r.alphabet = sigma;
  r.bound = bound;
  for (const Word& w : words_up_to(static_cast<uint32_t>(bound), sigma))
    if (dominated_in_language(a, w, d)) r.words.insert(w);
  return r;
}

bool unbounded_oracle(const CounterAutomaton& ca, size_t length_cap,
                      uint64_t k) {
  struct Cfg {
    State q;
    std::vector<uint64_t> vals;  // saturated at k
    auto operator<=>(const Cfg&) const = default;
  };
  std::set<Cfg> seen;
  std::queue<Cfg> layer;
  std::set<State> fin(ca.final_states.begin(), ca.final_states.end());
  auto offer = [&](Cfg c, std::queue<Cfg>& out) {
    if (seen.insert(c).second) out.push(std::move(c));
  };
  auto accepting = [&](const Cfg& c) {
    if (!fin.count(c.q)) return false;
    for (uint64_t v : c.vals)
      if (v < k) return false;
    return true;
  };
  for (State s : ca.initial)
    offer({s, std::vector<uint64_t>(ca.num_counters, 0)}, layer);
  for (size_t step = 0; step <= length_cap; ++step) {
    std::queue<Cfg> next;
    while (!layer.empty()) {
      Cfg c = layer.front();
      layer.pop();
      if (accepting(c)) return true;
      if (step == length_cap) continue;
      for (const CounterEdge& e : ca.edges) {
        if (e.from != c.q) continue;
        Cfg n{e.to, c.vals};
        for (size_t i = 0; i < n.vals.size(); ++i)
          n.vals[i] = std::min(k, n.vals[i] + e.inc[i]);
        offer(std::move(n), next);
      }
    }
    layer = std::move(next);
  }
  return false;
}

bool subword_oracle(const Word& u, const Word& v) {
  std::vector<std::vector<char>> dp(u.size() + 1,
                                    std::vector<char>(v.size() + 1, 0));
  for (size_t j = 0; j <= v.size(); ++j) dp[0][j] = 1;
  for (size_t i = 1; i <= u.size(); ++i)
    for (size_t j = 1; j <= v.size(); ++j)
      dp[i][j] = dp[i][j - 1] || (u[i - 1] == v[j - 1] && dp[i - 1][j - 1]);
  return dp[u.size()][v.size()];
}

namespace {

bool embed_from(uint32_t d, const Word& u, const Word& v, size_t i,
                size_t next) {
  if (i == u.size()) return true;
  for (size_t p = next; p < v.size(); ++p)
    if (v[p] == u[i] && p % d == i % d && embed_from(d, u, v, i + 1, p + 1))
      return true;
  return false;
}

}  // namespace

bool mod_embed_oracle(uint32_t d, const Word& u, const Word& v) {
  if (d == 0) throw Error("modulus must be positive");
  if (u.size() % d != v.size() % d) return false;
  return embed_from(d, u, v, 0, 0);
}

size_t count_occurrences(const Word& u, const Word& w) {
  if (u.empty()) return w.size() + 1;
  if (u.size() > w.size()) return 0;
  size_t count = 0;
  for (size_t p = 0; p + u.size() <= w.size(); ++p)
    if (std::equal(u.begin(), u.end(), w.begin() + static_cast<ptrdiff_t>(p)))
      ++count;
  return count;
}

Nfa random_nfa(std::mt19937& rng, uint32_t max_states,
               const std::vector<Symbol>& alphabet) {
  std::uniform_int_distribution<uint32_t> nstates(1, max_states);
  std::bernoulli_distribution edge(0.3), final_state(0.4);
  Nfa a;
  a.alphabet = alphabet;
  a.num_states = nstates(rng);
  for (State q = 0; q < a.num_states; ++q)
    for (Symbol x : alphabet)
      for (State t = 0; t < a.num_states; ++t)
        if (edge(rng)) a.edges.push_back({q, x, t});
  a.initial = {0};
  for (State q = 0; q < a.num_states; ++q)
    if (final_state(rng)) a.final_states.push_back(q);
  if (a.final_states.empty()) a.final_states.push_back(a.num_states - 1);
  a.validate();
  return a;
}

CounterAutomaton random_counter_automaton(std::mt19937& rng,
                                          uint32_t max_states,
                                          uint32_t max_counters,
                                          const std::vector<Symbol>& alphabet) {
  std::uniform_int_distribution<uint32_t> nstates(1, max_states);
  std::uniform_int_distribution<uint32_t> ncounters(1, max_counters);
  std::bernoulli_distribution edge(0.3), final_state(0.4), bump(0.5);
  CounterAutomaton a;
  a.alphabet = alphabet;
  a.num_states = nstates(rng);
  a.num_counters = ncounters(rng);
  for (State q = 0; q < a.num_states; ++q)
    for (Symbol x : alphabet)
      for (State t = 0; t < a.num_states; ++t) {
        if (!edge(rng)) continue;
        std::vector<uint64_t> inc(a.num_counters, 0);
        for (auto& v : inc)
          if (bump(rng)) v = 1;
        a.edges.push_back({q, x, t, std::move(inc)});
      }
  a.initial = {0};
  for (State q = 0; q < a.num_states; ++q)
    if (final_state(rng)) a.final_states.push_back(q);
  if (a.final_states.empty()) a.final_states.push_back(a.num_states - 1);
  a.validate();
  return a;
}

}  // namespace wqo
