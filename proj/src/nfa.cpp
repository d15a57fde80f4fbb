#include "wqo/nfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>

namespace wqo {

namespace {

bool sorted_unique(const std::vector<Symbol>& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] >= v[i]) return false;
  return true;
}

bool sorted_states(const std::vector<State>& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] >= v[i]) return false;
  return true;
}

std::vector<State> to_sorted(std::set<State> s) {
  return {s.begin(), s.end()};
}

}  // namespace

void Nfa::validate() const {
  if (alphabet.empty()) throw Error("automaton needs a non-empty alphabet");
  if (!sorted_unique(alphabet)) throw Error("alphabet must be sorted and duplicate-free");
  if (!sorted_states(initial) || !sorted_states(final_states))
    throw Error("state sets must be sorted and duplicate-free");
  for (Symbol a : alphabet)
    if (a == kEpsilon) throw Error("epsilon cannot be an alphabet symbol");
  for (const Edge& e : edges) {
    if (e.from >= num_states || e.to >= num_states)
      throw Error("edge references an unknown state");
    if (e.label != kEpsilon && !has_symbol(e.label))
      throw Error("edge label outside the alphabet");
  }
  for (State q : initial)
    if (q >= num_states) throw Error("initial state out of range");
  for (State q : final_states)
    if (q >= num_states) throw Error("final state out of range");
  if (!state_names.empty() && state_names.size() != num_states)
    throw Error("state name list does not match the state count");
}

bool Nfa::has_symbol(Symbol a) const {
  return std::binary_search(alphabet.begin(), alphabet.end(), a);
}

size_t Nfa::symbol_index(Symbol a) const {
  auto it = std::lower_bound(alphabet.begin(), alphabet.end(), a);
  if (it == alphabet.end() || *it != a) throw Error("symbol not in alphabet");
  return static_cast<size_t>(it - alphabet.begin());
}

Word word_from_string(const std::string& s) {
  Word w;
  w.reserve(s.size());
  for (char c : s) w.push_back(static_cast<Symbol>(static_cast<unsigned char>(c)));
  return w;
}

std::string word_to_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Symbol a : w) {
    if (a > 0x7f) throw Error("word has symbols with no character form");
    s.push_back(static_cast<char>(a));
  }
  return s;
}

Nfa nfa_empty_language(std::vector<Symbol> alphabet) {
  Nfa a;
  a.num_states = 1;
  a.alphabet = std::move(alphabet);
  a.initial = {0};
  a.validate();
  return a;
}

Nfa nfa_word(const Word& w, std::vector<Symbol> alphabet) {
  Nfa a;
  a.num_states = static_cast<uint32_t>(w.size()) + 1;
  a.alphabet = std::move(alphabet);
  for (size_t i = 0; i < w.size(); ++i)
    a.edges.push_back({static_cast<State>(i), w[i], static_cast<State>(i + 1)});
  a.initial = {0};
  a.final_states = {static_cast<State>(w.size())};
  a.validate();
  return a;
}

Nfa nfa_universal(std::vector<Symbol> alphabet) {
  std::set<Symbol> all(alphabet.begin(), alphabet.end());
  return nfa_letters_star(all, std::move(alphabet));
}

Nfa nfa_letters_star(const std::set<Symbol>& gamma, std::vector<Symbol> alphabet) {
  Nfa a;
  a.num_states = 1;
  a.alphabet = std::move(alphabet);
  for (Symbol s : gamma) a.edges.push_back({0, s, 0});
  a.initial = {0};
  a.final_states = {0};
  a.validate();
  return a;
}

std::vector<Symbol> alphabet_union(const std::vector<Symbol>& a,
                                   const std::vector<Symbol>& b) {
  std::vector<Symbol> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Nfa nfa_concat(const Nfa& a, const Nfa& b) {
  Nfa r;
  r.num_states = a.num_states + b.num_states;
  r.alphabet = alphabet_union(a.alphabet, b.alphabet);
  r.edges = a.edges;
  for (const Edge& e : b.edges)
    r.edges.push_back({e.from + a.num_states, e.label, e.to + a.num_states});
  for (State f : a.final_states)
    for (State i : b.initial) r.edges.push_back({f, kEpsilon, i + a.num_states});
  r.initial = a.initial;
  for (State f : b.final_states) r.final_states.push_back(f + a.num_states);
  r.validate();
  return r;
}

Nfa nfa_union(const Nfa& a, const Nfa& b) {
  Nfa r;
  r.num_states = a.num_states + b.num_states;
  r.alphabet = alphabet_union(a.alphabet, b.alphabet);
  r.edges = a.edges;
  for (const Edge& e : b.edges)
    r.edges.push_back({e.from + a.num_states, e.label, e.to + a.num_states});
  r.initial = a.initial;
  for (State i : b.initial) r.initial.push_back(i + a.num_states);
  r.final_states = a.final_states;
  for (State f : b.final_states) r.final_states.push_back(f + a.num_states);
  std::sort(r.initial.begin(), r.initial.end());
  std::sort(r.final_states.begin(), r.final_states.end());
  r.validate();
  return r;
}

Nfa nfa_star(const Nfa& a) {
  Nfa r;
  r.num_states = a.num_states + 1;  // fresh initial+final hub as last state
  r.alphabet = a.alphabet;
  r.edges = a.edges;
  State hub = a.num_states;
  for (State i : a.initial) r.edges.push_back({hub, kEpsilon, i});
  for (State f : a.final_states) r.edges.push_back({f, kEpsilon, hub});
  r.initial = {hub};
  r.final_states = {hub};
  r.validate();
  return r;
}

std::set<State> eps_closure(const Nfa& a, const std::set<State>& s) {
  std::set<State> out = s;
  std::deque<State> work(s.begin(), s.end());
  while (!work.empty()) {
    State q = work.front();
    work.pop_front();
    for (const Edge& e : a.edges)
      if (e.from == q && e.label == kEpsilon && out.insert(e.to).second)
        work.push_back(e.to);
  }
  return out;
}

bool nfa_accepts(const Nfa& a, const Word& w) {
  std::set<State> cur = eps_closure(a, {a.initial.begin(), a.initial.end()});
  for (Symbol x : w) {
    std::set<State> next;
    for (const Edge& e : a.edges)
      if (e.label == x && cur.count(e.from)) next.insert(e.to);
    cur = eps_closure(a, next);
    if (cur.empty()) return false;
  }
  for (State f : a.final_states)
    if (cur.count(f)) return true;
  return false;
}

Nfa nfa_trim(const Nfa& a) {
  std::vector<bool> fwd(a.num_states, false), bwd(a.num_states, false);
  std::vector<std::vector<State>> succ(a.num_states), pred(a.num_states);
  for (const Edge& e : a.edges) {
    succ[e.from].push_back(e.to);
    pred[e.to].push_back(e.from);
  }
  std::deque<State> work;
  for (State q : a.initial) {
    fwd[q] = true;
    work.push_back(q);
  }
  while (!work.empty()) {
    State q = work.front();
    work.pop_front();
    for (State t : succ[q])
      if (!fwd[t]) {
        fwd[t] = true;
        work.push_back(t);
      }
  }
  for (State q : a.final_states) {
    bwd[q] = true;
    work.push_back(q);
  }
  while (!work.empty()) {
    State q = work.front();
    work.pop_front();
    for (State t : pred[q])
      if (!bwd[t]) {
        bwd[t] = true;
        work.push_back(t);
      }
  }
  std::vector<State> remap(a.num_states, 0);
  uint32_t n = 0;
  for (State q = 0; q < a.num_states; ++q)
    if (fwd[q] && bwd[q]) remap[q] = n++;
  Nfa r;
  r.alphabet = a.alphabet;
  if (n == 0) return nfa_empty_language(a.alphabet);
  r.num_states = n;
  for (const Edge& e : a.edges)
    if (fwd[e.from] && bwd[e.from] && fwd[e.to] && bwd[e.to])
      r.edges.push_back({remap[e.from], e.label, remap[e.to]});
  for (State q : a.initial)
    if (fwd[q] && bwd[q]) r.initial.push_back(remap[q]);
  for (State q : a.final_states)
    if (fwd[q] && bwd[q]) r.final_states.push_back(remap[q]);
  r.validate();
  return r;
}

Nfa nfa_remove_epsilon(const Nfa& a) {
  bool has_eps = false;
  for (const Edge& e : a.edges) has_eps = has_eps || e.label == kEpsilon;
  if (!has_eps) return a;
  std::vector<std::vector<State>> eps_succ(a.num_states);
  std::vector<std::vector<const Edge*>> letter_out(a.num_states);
  for (const Edge& e : a.edges) {
    if (e.label == kEpsilon)
      eps_succ[e.from].push_back(e.to);
    else
      letter_out[e.from].push_back(&e);
  }
  std::vector<std::vector<State>> closures(a.num_states);
  std::vector<bool> seen(a.num_states, false);
  for (State q = 0; q < a.num_states; ++q) {
    std::vector<State>& out = closures[q];
    out.push_back(q);
    seen[q] = true;
    for (size_t i = 0; i < out.size(); ++i)
      for (State t : eps_succ[out[i]])
        if (!seen[t]) {
          seen[t] = true;
          out.push_back(t);
        }
    for (State t : out) seen[t] = false;
  }
  Nfa r;
  r.num_states = a.num_states;
  r.alphabet = a.alphabet;
  std::set<Edge> edges;
  std::vector<bool> fin(a.num_states, false);
  for (State f : a.final_states) fin[f] = true;
  std::set<State> newfin;
  for (State q = 0; q < a.num_states; ++q) {
    for (State c : closures[q]) {
      if (fin[c]) newfin.insert(q);
      for (const Edge* e : letter_out[c])
        for (State t : closures[e->to]) edges.insert({q, e->label, t});
    }
  }
  r.edges.assign(edges.begin(), edges.end());
  r.initial = {a.initial.begin(), a.initial.end()};
  r.final_states = to_sorted(newfin);
  r.validate();
  return r;
}

Nfa nfa_intersect(const Nfa& a0, const Nfa& b0) {
  Nfa a = nfa_remove_epsilon(a0);
  Nfa b = nfa_remove_epsilon(b0);
  std::vector<std::vector<const Edge*>> asucc(a.num_states), bsucc(b.num_states);
  for (const Edge& e : a.edges) asucc[e.from].push_back(&e);
  for (const Edge& e : b.edges) bsucc[e.from].push_back(&e);
  std::vector<Symbol> sigma;
  std::set_intersection(a.alphabet.begin(), a.alphabet.end(), b.alphabet.begin(),
                        b.alphabet.end(), std::back_inserter(sigma));
  if (sigma.empty()) sigma = alphabet_union(a.alphabet, b.alphabet);
  Nfa r;
  r.alphabet = sigma;
  std::map<std::pair<State, State>, State> index;
  std::deque<std::pair<State, State>> work;
  auto intern = [&](State p, State q) {
    auto [it, fresh] = index.try_emplace({p, q}, static_cast<State>(index.size()));
    if (fresh) work.push_back({p, q});
    return it->second;
  };
  for (State p : a.initial)
    for (State q : b.initial) r.initial.push_back(intern(p, q));
  std::set<State> afin(a.final_states.begin(), a.final_states.end());
  std::set<State> bfin(b.final_states.begin(), b.final_states.end());
  std::set<State> fin;
  while (!work.empty()) {
    auto [p, q] = work.front();
    work.pop_front();
    State s = index.at({p, q});
    if (afin.count(p) && bfin.count(q)) fin.insert(s);
    for (const Edge* ea : asucc[p])
      for (const Edge* eb : bsucc[q])
        if (eb->label == ea->label)
          r.edges.push_back({s, ea->label, intern(ea->to, eb->to)});
  }
  r.num_states = static_cast<uint32_t>(index.size());
  if (r.num_states == 0) return nfa_empty_language(sigma);
  std::sort(r.initial.begin(), r.initial.end());
  r.initial.erase(std::unique(r.initial.begin(), r.initial.end()), r.initial.end());
  r.final_states = to_sorted(fin);
  std::sort(r.edges.begin(), r.edges.end());
  r.edges.erase(std::unique(r.edges.begin(), r.edges.end()), r.edges.end());
  r.validate();
  return nfa_trim(r);
}

Nfa nfa_determinize(const Nfa& a, size_t cap) {
  std::map<std::set<State>, State> index;
  std::deque<std::set<State>> work;
  std::vector<std::vector<const Edge*>> out(a.num_states);
  for (const Edge& e : a.edges)
    if (e.label != kEpsilon) out[e.from].push_back(&e);
  Nfa r;
  r.alphabet = a.alphabet;
  auto intern = [&](std::set<State> s) {
    auto [it, fresh] = index.try_emplace(s, static_cast<State>(index.size()));
    if (fresh) {
      if (index.size() > cap) throw DeterminizationCapExceeded(cap);
      work.push_back(std::move(s));
    }
    return it->second;
  };
  intern(eps_closure(a, {a.initial.begin(), a.initial.end()}));
  r.initial = {0};
  std::set<State> afin(a.final_states.begin(), a.final_states.end());
  std::set<State> fin;
  while (!work.empty()) {
    std::set<State> cur = work.front();
    work.pop_front();
    State s = index.at(cur);
    for (State q : cur)
      if (afin.count(q)) {
        fin.insert(s);
        break;
      }
    for (Symbol x : a.alphabet) {
      std::set<State> next;
      for (State q : cur)
        for (const Edge* e : out[q])
          if (e->label == x) next.insert(e->to);
      r.edges.push_back({s, x, intern(eps_closure(a, next))});
    }
  }
  r.num_states = static_cast<uint32_t>(index.size());
  r.final_states = to_sorted(fin);
  r.validate();
  return r;
}

Nfa nfa_complement(const Nfa& a, size_t cap) {
  Nfa d = nfa_determinize(a, cap);
  std::set<State> fin(d.final_states.begin(), d.final_states.end());
  std::set<State> cofin;
  for (State q = 0; q < d.num_states; ++q)
    if (!fin.count(q)) cofin.insert(q);
  d.final_states = to_sorted(cofin);
  return d;
}

bool nfa_is_empty(const Nfa& a) {
  return nfa_trim(a).final_states.empty();
}

bool nfa_includes(const Nfa& a, const Nfa& b, size_t cap) {
  Nfa wide_a = nfa_widen_alphabet(a, alphabet_union(a.alphabet, b.alphabet));
  Nfa wide_b = nfa_widen_alphabet(b, wide_a.alphabet);
  return nfa_is_empty(nfa_intersect(wide_b, nfa_complement(wide_a, cap)));
}

bool nfa_equivalent(const Nfa& a, const Nfa& b, size_t cap) {
  return nfa_includes(a, b, cap) && nfa_includes(b, a, cap);
}

bool nfa_is_deterministic(const Nfa& a) {
  if (a.initial.size() != 1) return false;
  std::set<std::pair<State, Symbol>> seen;
  for (const Edge& e : a.edges) {
    if (e.label == kEpsilon) return false;
    if (!seen.insert({e.from, e.label}).second) return false;
  }
  return true;
}

std::optional<Word> nfa_shortest_word(const Nfa& a) {
  // BFS over epsilon-free form; parent pointers reconstruct the word.
  Nfa e = nfa_remove_epsilon(a);
  std::vector<int64_t> parent(e.num_states, -1);
  std::vector<Symbol> via(e.num_states, 0);
  std::vector<bool> seen(e.num_states, false);
  std::deque<State> work;
  for (State q : e.initial) {
    seen[q] = true;
    work.push_back(q);
  }
  std::set<State> fin(e.final_states.begin(), e.final_states.end());
  std::optional<State> hit;
  for (State q : e.initial)
    if (fin.count(q)) hit = q;
  while (!hit && !work.empty()) {
    State q = work.front();
    work.pop_front();
    for (const Edge& ed : e.edges) {
      if (ed.from != q || seen[ed.to]) continue;
      seen[ed.to] = true;
      parent[ed.to] = q;
      via[ed.to] = ed.label;
      if (fin.count(ed.to)) {
        hit = ed.to;
        break;
      }
      work.push_back(ed.to);
    }
  }
  if (!hit) return std::nullopt;
  Word w;
  State q = *hit;
  while (parent[q] >= 0) {
    w.push_back(via[q]);
    q = static_cast<State>(parent[q]);
  }
  std::reverse(w.begin(), w.end());
  return w;
}

Nfa nfa_relabel(const Nfa& a, const std::vector<std::pair<Symbol, Symbol>>& map,
                std::vector<Symbol> new_alphabet) {
  Nfa r = a;
  r.alphabet = std::move(new_alphabet);
  for (Edge& e : r.edges) {
    if (e.label == kEpsilon) continue;
    bool found = false;
    for (const auto& [from, to] : map)
      if (from == e.label) {
        e.label = to;
        found = true;
        break;
      }
    if (!found) throw Error("relabel map misses an edge label");
  }
  r.validate();
  return r;
}

Nfa nfa_widen_alphabet(const Nfa& a, std::vector<Symbol> alphabet) {
  for (Symbol s : a.alphabet)
    if (!std::binary_search(alphabet.begin(), alphabet.end(), s))
      throw Error("widened alphabet must contain the original one");
  Nfa r = a;
  r.alphabet = std::move(alphabet);
  r.validate();
  return r;
}

namespace {

Nfa nfa_reverse(const Nfa& a) {
  Nfa r;
  r.num_states = a.num_states;
  r.alphabet = a.alphabet;
  for (const Edge& e : a.edges) r.edges.push_back({e.to, e.label, e.from});
  r.initial = a.final_states;
  r.final_states = a.initial;
  r.validate();
  return r;
}

}  // namespace

Nfa nfa_minimize(const Nfa& a, size_t cap) {
  Nfa t = nfa_trim(a);
  if (t.final_states.empty()) return nfa_empty_language(a.alphabet);
  Nfa co = nfa_determinize(nfa_reverse(t), cap);
  return nfa_determinize(nfa_reverse(nfa_trim(co)), cap);
}

}  // namespace wqo
