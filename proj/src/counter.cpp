#include "wqo/counter.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "wqo/transducer.hpp"

namespace wqo {

void CounterAutomaton::validate() const {
  if (alphabet.empty()) throw Error("counter automaton needs an alphabet");
  if (num_counters > kMaxCounters)
    throw Error("too many counters (limit " + std::to_string(kMaxCounters) + ")");
  for (size_t i = 1; i < alphabet.size(); ++i)
    if (alphabet[i - 1] >= alphabet[i])
      throw Error("alphabet must be sorted and duplicate-free");
  for (const CounterEdge& e : edges) {
    if (e.from >= num_states || e.to >= num_states)
      throw Error("edge references an unknown state");
    if (e.label != kEpsilon &&
        !std::binary_search(alphabet.begin(), alphabet.end(), e.label))
      throw Error("edge label outside the alphabet");
    if (e.inc.size() != num_counters)
      throw Error("edge increment vector has the wrong length");
  }
  for (State q : initial)
    if (q >= num_states) throw Error("initial state out of range");
  for (State q : final_states)
    if (q >= num_states) throw Error("final state out of range");
}

Nfa CounterAutomaton::skeleton() const {
  Nfa r;
  r.num_states = num_states;
  r.alphabet = alphabet;
  for (const CounterEdge& e : edges) r.edges.push_back({e.from, e.label, e.to});
  r.initial = initial;
  r.final_states = final_states;
  std::sort(r.initial.begin(), r.initial.end());
  r.initial.erase(std::unique(r.initial.begin(), r.initial.end()), r.initial.end());
  std::sort(r.final_states.begin(), r.final_states.end());
  r.final_states.erase(std::unique(r.final_states.begin(), r.final_states.end()),
                       r.final_states.end());
  std::sort(r.edges.begin(), r.edges.end());
  r.edges.erase(std::unique(r.edges.begin(), r.edges.end()), r.edges.end());
  r.validate();
  return r;
}

CounterAutomaton counter_product(const CounterAutomaton& a, const Nfa& r) {
  if (a.alphabet != r.alphabet) throw Error("product alphabet mismatch");
  CounterAutomaton p;
  p.alphabet = a.alphabet;
  p.num_counters = a.num_counters;
  std::map<std::pair<State, State>, State> id;
  std::vector<std::pair<State, State>> todo;
  auto intern = [&](State qa, State qr) {
    auto [it, fresh] = id.try_emplace({qa, qr}, static_cast<State>(id.size()));
    if (fresh) todo.push_back({qa, qr});
    return it->second;
  };
  for (State qa : a.initial)
    for (State qr : r.initial) intern(qa, qr);
  std::vector<std::vector<const CounterEdge*>> by_src(a.num_states);
  for (const CounterEdge& e : a.edges) by_src[e.from].push_back(&e);
  std::vector<std::vector<const Edge*>> r_by_src(r.num_states);
  for (const Edge& e : r.edges) r_by_src[e.from].push_back(&e);
  const std::vector<uint64_t> zero(a.num_counters, 0);
  for (size_t i = 0; i < todo.size(); ++i) {
    auto [qa, qr] = todo[i];
    State from = id.at({qa, qr});
    for (const CounterEdge* ea : by_src[qa]) {
      if (ea->label == kEpsilon) {
        p.edges.push_back({from, kEpsilon, intern(ea->to, qr), ea->inc});
      } else {
        for (const Edge* er : r_by_src[qr])
          if (er->label == ea->label)
            p.edges.push_back({from, ea->label, intern(ea->to, er->to), ea->inc});
      }
    }
    for (const Edge* er : r_by_src[qr])
      if (er->label == kEpsilon)
        p.edges.push_back({from, kEpsilon, intern(qa, er->to), zero});
  }
  p.num_states = static_cast<uint32_t>(id.size());
  for (const auto& [key, q] : id) {
    if (std::binary_search(a.final_states.begin(), a.final_states.end(),
                           key.first) &&
        std::binary_search(r.final_states.begin(), r.final_states.end(),
                           key.second))
      p.final_states.push_back(q);
  }
  for (State qa : a.initial)
    for (State qr : r.initial) p.initial.push_back(id.at({qa, qr}));
  std::sort(p.initial.begin(), p.initial.end());
  p.initial.erase(std::unique(p.initial.begin(), p.initial.end()),
                  p.initial.end());
  std::sort(p.final_states.begin(), p.final_states.end());
  return p;
}

CounterAutomaton counter_pair_product(const CounterAutomaton& a,
                                      const CounterAutomaton& b) {
  if (a.alphabet != b.alphabet) throw Error("product alphabet mismatch");
  if (a.num_counters + b.num_counters > kMaxCounters)
    throw Error("too many counters in product");
  CounterAutomaton p;
  p.alphabet = a.alphabet;
  p.num_counters = a.num_counters + b.num_counters;
  auto join = [&](const std::vector<uint64_t>* ia, const std::vector<uint64_t>* ib) {
    std::vector<uint64_t> v(p.num_counters, 0);
    if (ia) std::copy(ia->begin(), ia->end(), v.begin());
    if (ib) std::copy(ib->begin(), ib->end(), v.begin() + a.num_counters);
    return v;
  };
  std::map<std::pair<State, State>, State> id;
  std::vector<std::pair<State, State>> todo;
  auto intern = [&](State qa, State qb) {
    auto [it, fresh] = id.try_emplace({qa, qb}, static_cast<State>(id.size()));
    if (fresh) todo.push_back({qa, qb});
    return it->second;
  };
  for (State qa : a.initial)
    for (State qb : b.initial) intern(qa, qb);
  std::vector<std::vector<const CounterEdge*>> a_src(a.num_states), b_src(b.num_states);
  for (const CounterEdge& e : a.edges) a_src[e.from].push_back(&e);
  for (const CounterEdge& e : b.edges) b_src[e.from].push_back(&e);
  for (size_t i = 0; i < todo.size(); ++i) {
    auto [qa, qb] = todo[i];
    State from = id.at({qa, qb});
    for (const CounterEdge* ea : a_src[qa]) {
      if (ea->label == kEpsilon) {
        p.edges.push_back({from, kEpsilon, intern(ea->to, qb), join(&ea->inc, nullptr)});
      } else {
        for (const CounterEdge* eb : b_src[qb])
          if (eb->label == ea->label)
            p.edges.push_back({from, ea->label, intern(ea->to, eb->to),
                               join(&ea->inc, &eb->inc)});
      }
    }
    for (const CounterEdge* eb : b_src[qb])
      if (eb->label == kEpsilon)
        p.edges.push_back({from, kEpsilon, intern(qa, eb->to), join(nullptr, &eb->inc)});
  }
  p.num_states = static_cast<uint32_t>(id.size());
  for (const auto& [key, q] : id) {
    if (std::binary_search(a.final_states.begin(), a.final_states.end(),
                           key.first) &&
        std::binary_search(b.final_states.begin(), b.final_states.end(),
                           key.second))
      p.final_states.push_back(q);
  }
  for (State qa : a.initial)
    for (State qb : b.initial) p.initial.push_back(id.at({qa, qb}));
  std::sort(p.initial.begin(), p.initial.end());
  p.initial.erase(std::unique(p.initial.begin(), p.initial.end()), p.initial.end());
  std::sort(p.final_states.begin(), p.final_states.end());
  return p;
}

CounterAutomaton counter_compose(const CounterAutomaton& a,
                                 const SequentialTransducer& f) {
  if (a.alphabet != f.out_alphabet)
    throw Error("composition alphabet mismatch");
  CounterAutomaton r;
  r.alphabet = f.in_alphabet;
  r.num_counters = a.num_counters;

  // State kinds: base (f state, a state); tchain = threading the output of a
  // transition of f through a; fchain = threading a final output of f.
  enum Kind { kBase, kTrans, kFinal };
  struct Desc {
    Kind kind;
    State p;      // f state
    size_t i;     // input symbol index (kTrans)
    size_t pos;   // output letters consumed (kTrans, kFinal)
    State qa;     // a state
    auto operator<=>(const Desc&) const = default;
  };
  std::map<Desc, State> id;
  std::vector<Desc> todo;
  auto intern = [&](Desc d) {
    auto [it, fresh] = id.try_emplace(d, static_cast<State>(id.size()));
    if (fresh) todo.push_back(d);
    return it->second;
  };
  std::vector<std::vector<const CounterEdge*>> a_src(a.num_states);
  for (const CounterEdge& e : a.edges) a_src[e.from].push_back(&e);
  std::set<State> a_final(a.final_states.begin(), a.final_states.end());
  const std::vector<uint64_t> zero(a.num_counters, 0);

  for (State qa : a.initial) intern({kBase, f.initial, 0, 0, qa});
  for (size_t n = 0; n < todo.size(); ++n) {
    Desc d = todo[n];
    State from = id.at(d);
    // a's epsilon moves are available in every kind of state.
    for (const CounterEdge* ea : a_src[d.qa])
      if (ea->label == kEpsilon) {
        Desc next = d;
        next.qa = ea->to;
        r.edges.push_back({from, kEpsilon, intern(next), ea->inc});
      }
    if (d.kind == kBase) {
      for (size_t i = 0; i < f.in_alphabet.size(); ++i) {
        const Word& y = f.out[d.p][i];
        State p2 = f.delta[d.p][i];
        if (y.empty()) {
          r.edges.push_back(
              {from, f.in_alphabet[i], intern({kBase, p2, 0, 0, d.qa}), zero});
          continue;
        }
        for (const CounterEdge* ea : a_src[d.qa]) {
          if (ea->label != y[0]) continue;
          Desc next = y.size() == 1 ? Desc{kBase, p2, 0, 0, ea->to}
                                    : Desc{kTrans, d.p, i, 1, ea->to};
          r.edges.push_back({from, f.in_alphabet[i], intern(next), ea->inc});
        }
      }
      const Word& z = f.final_out[d.p];
      if (z.empty()) {
        if (a_final.count(d.qa)) r.final_states.push_back(from);
      } else {
        for (const CounterEdge* ea : a_src[d.qa])
          if (ea->label == z[0])
            r.edges.push_back(
                {from, kEpsilon, intern({kFinal, d.p, 0, 1, ea->to}), ea->inc});
      }
    } else if (d.kind == kTrans) {
      const Word& y = f.out[d.p][d.i];
      State p2 = f.delta[d.p][d.i];
      for (const CounterEdge* ea : a_src[d.qa]) {
        if (ea->label != y[d.pos]) continue;
        Desc next = d.pos + 1 == y.size() ? Desc{kBase, p2, 0, 0, ea->to}
                                          : Desc{kTrans, d.p, d.i, d.pos + 1, ea->to};
        r.edges.push_back({from, kEpsilon, intern(next), ea->inc});
      }
    } else {
      const Word& z = f.final_out[d.p];
      if (d.pos == z.size()) {
        if (a_final.count(d.qa)) r.final_states.push_back(from);
      } else {
        for (const CounterEdge* ea : a_src[d.qa])
          if (ea->label == z[d.pos])
            r.edges.push_back(
                {from, kEpsilon, intern({kFinal, d.p, 0, d.pos + 1, ea->to}),
                 ea->inc});
      }
    }
  }
  r.num_states = static_cast<uint32_t>(id.size());
  for (State qa : a.initial)
    r.initial.push_back(id.at({kBase, f.initial, 0, 0, qa}));
  std::sort(r.initial.begin(), r.initial.end());
  r.initial.erase(std::unique(r.initial.begin(), r.initial.end()), r.initial.end());
  std::sort(r.final_states.begin(), r.final_states.end());
  r.final_states.erase(std::unique(r.final_states.begin(), r.final_states.end()),
                       r.final_states.end());
  return r;
}

bool counter_value_at_least(const CounterAutomaton& a, const Word& w, uint64_t k) {
  a.validate();
  using Config = std::pair<State, std::vector<uint64_t>>;
  auto bump = [&](std::vector<uint64_t> c, const std::vector<uint64_t>& inc) {
    for (size_t i = 0; i < c.size(); ++i) c[i] = std::min(k, c[i] + inc[i]);
    return c;
  };
  // Saturating epsilon closure over configurations.
  auto eps_saturate = [&](std::set<Config>& configs) {
    std::deque<Config> work(configs.begin(), configs.end());
    while (!work.empty()) {
      Config cur = work.front();
      work.pop_front();
      for (const CounterEdge& e : a.edges) {
        if (e.label != kEpsilon || e.from != cur.first) continue;
        Config nxt{e.to, bump(cur.second, e.inc)};
        if (configs.insert(nxt).second) work.push_back(std::move(nxt));
      }
    }
  };
  std::set<Config> cur;
  std::vector<uint64_t> zero(a.num_counters, 0);
  for (State q : a.initial) cur.insert({q, zero});
  eps_saturate(cur);
  for (Symbol x : w) {
    std::set<Config> next;
    for (const Config& c : cur)
      for (const CounterEdge& e : a.edges)
        if (e.label == x && e.from == c.first)
          next.insert({e.to, bump(c.second, e.inc)});
    eps_saturate(next);
    cur = std::move(next);
    if (cur.empty()) return false;
  }
  std::set<State> fin(a.final_states.begin(), a.final_states.end());
  for (const Config& c : cur) {
    if (!fin.count(c.first)) continue;
    bool ok = true;
    for (uint64_t v : c.second)
      if (v < k) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

void CountingAutomaton::validate() const {
  if (num_states == 0) throw Error("counting automaton needs at least one state");
  if (alphabet.empty()) throw Error("counting automaton needs an alphabet");
  for (size_t i = 1; i < alphabet.size(); ++i)
    if (alphabet[i - 1] >= alphabet[i])
      throw Error("alphabet must be sorted and duplicate-free");
  if (initial >= num_states) throw Error("initial state out of range");
  if (delta.size() != num_states || inc.size() != num_states ||
      final_inc.size() != num_states)
    throw Error("counting automaton table size mismatch");
  for (State q = 0; q < num_states; ++q) {
    if (delta[q].size() != alphabet.size() || inc[q].size() != alphabet.size())
      throw Error("counting automaton must be complete");
    for (State t : delta[q])
      if (t >= num_states) throw Error("transition target out of range");
    for (const auto& v : inc[q])
      if (v.size() != num_counters)
        throw Error("increment vector has the wrong length");
    if (final_inc[q].size() != num_counters)
      throw Error("final increment vector has the wrong length");
  }
  if (!counter_names.empty() && counter_names.size() != num_counters)
    throw Error("counter name list does not match the counter count");
}

size_t CountingAutomaton::symbol_index(Symbol a) const {
  auto it = std::lower_bound(alphabet.begin(), alphabet.end(), a);
  if (it == alphabet.end() || *it != a) throw Error("symbol not in alphabet");
  return static_cast<size_t>(it - alphabet.begin());
}

std::vector<uint64_t> counting_eval(const CountingAutomaton& a, const Word& w) {
  std::vector<uint64_t> c(a.num_counters, 0);
  State q = a.initial;
  for (Symbol x : w) {
    size_t i = a.symbol_index(x);
    for (size_t j = 0; j < a.num_counters; ++j) c[j] += a.inc[q][i][j];
    q = a.delta[q][i];
  }
  for (size_t j = 0; j < a.num_counters; ++j) c[j] += a.final_inc[q][j];
  return c;
}

std::vector<Word> words_up_to(uint32_t k, const std::vector<Symbol>& alphabet) {
  std::vector<Word> out{{}};
  size_t begin = 0;
  for (uint32_t len = 1; len <= k; ++len) {
    size_t end = out.size();
    for (size_t i = begin; i < end; ++i)
      for (Symbol a : alphabet) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

CountingAutomaton build_pk(uint32_t k, std::vector<Symbol> alphabet) {
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  if (alphabet.empty()) throw Error("alphabet must be non-empty");
  std::vector<Word> pieces = words_up_to(k, alphabet);
  std::map<Word, size_t> piece_index;
  for (size_t i = 0; i < pieces.size(); ++i) piece_index[pieces[i]] = i;

  CountingAutomaton a;
  a.alphabet = alphabet;
  a.num_counters = static_cast<uint32_t>(3 * pieces.size());
  for (const Word& u : pieces) {
    std::string s = u.empty() ? "eps" : word_to_string(u);
    a.counter_names.push_back("prefix:" + s);
    a.counter_names.push_back("suffix:" + s);
    a.counter_names.push_back("count:" + s);
  }
  // State = (window of the last min(|w|, k) letters, whether the window is
  // the entire word read so far). The flag separates prefixes from later
  // windows of the same content so prefix flags fire exactly once.
  struct St {
    Word window;
    bool fresh;
    auto operator<=>(const St&) const = default;
  };
  std::map<St, State> index;
  std::vector<St> states;
  auto intern = [&](St s) {
    auto [it, ok] = index.try_emplace(s, static_cast<State>(states.size()));
    if (ok) states.push_back(std::move(s));
    return it->second;
  };
  intern({{}, true});
  a.initial = 0;
  for (size_t s = 0; s < states.size(); ++s) {
    St cur = states[s];
    for (Symbol x : alphabet) {
      Word w = cur.window;
      w.push_back(x);
      bool fresh = cur.fresh && w.size() <= k;
      Word window = w;
      if (window.size() > k) window.erase(window.begin());
      intern({window, fresh});
    }
  }
  // The lambda above pinned down the reachable state set; now fill tables.
  a.num_states = static_cast<uint32_t>(states.size());
  a.delta.assign(a.num_states, std::vector<State>(alphabet.size(), 0));
  a.inc.assign(a.num_states,
               std::vector<std::vector<uint64_t>>(
                   alphabet.size(), std::vector<uint64_t>(a.num_counters, 0)));
  a.final_inc.assign(a.num_states, std::vector<uint64_t>(a.num_counters, 0));
  auto c_prefix = [&](const Word& u) { return 3 * piece_index.at(u); };
  auto c_suffix = [&](const Word& u) { return 3 * piece_index.at(u) + 1; };
  auto c_count = [&](const Word& u) { return 3 * piece_index.at(u) + 2; };
  for (State s = 0; s < a.num_states; ++s) {
    const St& cur = states[s];
    for (size_t i = 0; i < alphabet.size(); ++i) {
      Word w = cur.window;
      w.push_back(alphabet[i]);
      bool fresh = cur.fresh && w.size() <= k;
      Word window = w;
      if (window.size() > k) window.erase(window.begin());
      a.delta[s][i] = index.at({window, fresh});
      auto& v = a.inc[s][i];
      // Occurrences completed by this letter: every non-empty suffix of the
      // extended window, plus one more position where the empty word occurs.
      v[c_count(Word{})] += 1;
      for (size_t start = 0; start < w.size(); ++start) {
        Word u(w.begin() + static_cast<long>(start), w.end());
        if (u.size() <= k) v[c_count(u)] += 1;
      }
      // Prefix flag: fires when the word read so far first equals u.
      if (cur.fresh && w.size() <= k) v[c_prefix(w)] += 1;
    }
    auto& fin = a.final_inc[s];
    fin[c_count(Word{})] += 1;  // the empty word occurs |w| + 1 times
    fin[c_prefix(Word{})] += 1;
    fin[c_suffix(Word{})] += 1;
    for (size_t start = 0; start < cur.window.size(); ++start) {
      Word u(cur.window.begin() + static_cast<long>(start), cur.window.end());
      fin[c_suffix(u)] += 1;
    }
  }
  a.validate();
  return a;
}

}  // namespace wqo
