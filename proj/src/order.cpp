#include "wqo/order.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace wqo {

namespace {

bool subword_leq(const Word& u, const Word& v) {
  size_t i = 0;
  for (Symbol a : v) {
    if (i < u.size() && u[i] == a) ++i;
    if (i == u.size()) return true;
  }
  return i == u.size();
}

void check_word(const OrderSpec& o, const Word& w) {
  for (Symbol a : w)
    if (!std::binary_search(o.alphabet.begin(), o.alphabet.end(), a))
      throw Error("word uses a symbol outside the order's alphabet");
}

std::string structural_key(const OrderSpec& o) {
  std::ostringstream s;
  s << static_cast<int>(o.kind) << '[';
  for (Symbol a : o.alphabet) s << a << ',';
  s << ']';
  switch (o.kind) {
    case OrderSpec::Kind::Subword:
      break;
    case OrderSpec::Kind::ViaTransduction: {
      const auto& f = *o.trans;
      s << 'T' << f.num_states << ';' << f.initial << ';';
      for (State q = 0; q < f.num_states; ++q) {
        for (size_t i = 0; i < f.in_alphabet.size(); ++i) {
          s << f.delta[q][i] << ':';
          for (Symbol a : f.out[q][i]) s << a << '.';
          s << ',';
        }
        for (Symbol a : f.final_out[q]) s << a << '.';
        s << ';';
      }
      s << '(' << structural_key(*o.inner) << ')';
      break;
    }
    case OrderSpec::Kind::Conjunction:
      for (const OrderPtr& p : o.parts) s << '(' << structural_key(*p) << ')';
      break;
    case OrderSpec::Kind::Labeling:
    case OrderSpec::Kind::Mod: {
      const auto& a = *o.lab;
      s << 'L' << a.num_states << ';' << a.initial << ';';
      for (const auto& row : a.delta) {
        for (State q : row) s << q << ',';
        s << ';';
      }
      break;
    }
    case OrderSpec::Kind::Counting: {
      const auto& a = *o.counting;
      s << 'C' << a.num_states << ';' << a.initial << ';' << a.num_counters << ';';
      for (State q = 0; q < a.num_states; ++q) {
        for (size_t i = 0; i < a.alphabet.size(); ++i) {
          s << a.delta[q][i] << ':';
          for (uint64_t x : a.inc[q][i]) s << x << '.';
          s << ',';
        }
        for (uint64_t x : a.final_inc[q]) s << x << '.';
        s << ';';
      }
      break;
    }
    case OrderSpec::Kind::Morphism: {
      const auto& m = *o.morph;
      s << 'M' << m.monoid.size << ';' << m.monoid.identity << ';';
      for (const auto& row : m.monoid.table) {
        for (uint32_t x : row) s << x << ',';
        s << ';';
      }
      for (const auto& [a, x] : m.theta) s << a << '>' << x << ',';
      break;
    }
  }
  return s.str();
}

std::vector<Symbol> sorted_alphabet(std::vector<Symbol> a) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (a.empty()) throw Error("order needs a non-empty alphabet");
  return a;
}

}  // namespace

OrderPtr OrderSpec::subword(std::vector<Symbol> alphabet) {
  auto o = std::make_shared<OrderSpec>();
  o->kind = Kind::Subword;
  o->alphabet = sorted_alphabet(std::move(alphabet));
  return o;
}

OrderPtr OrderSpec::via(SequentialTransducer f, OrderPtr inner) {
  f.validate();
  if (f.out_alphabet != inner->alphabet)
    throw Error("transducer output alphabet must match the inner order");
  auto o = std::make_shared<OrderSpec>();
  o->kind = Kind::ViaTransduction;
  o->alphabet = f.in_alphabet;
  o->trans = std::make_shared<SequentialTransducer>(std::move(f));
  o->inner = std::move(inner);
  return o;
}

OrderPtr OrderSpec::conjunction(std::vector<OrderPtr> parts) {
  if (parts.empty()) throw Error("conjunction needs at least one component");
  std::vector<OrderPtr> flat;
  std::set<std::string> seen;
  std::deque<OrderPtr> work(parts.begin(), parts.end());
  while (!work.empty()) {
    OrderPtr p = work.front();
    work.pop_front();
    if (p->kind == Kind::Conjunction) {
      for (const OrderPtr& q : p->parts) work.push_back(q);
      continue;
    }
    if (seen.insert(structural_key(*p)).second) flat.push_back(p);
  }
  for (const OrderPtr& p : flat)
    if (p->alphabet != flat[0]->alphabet)
      throw Error("conjunction components must share one alphabet");
  if (flat.size() == 1) return flat[0];
  auto o = std::make_shared<OrderSpec>();
  o->kind = Kind::Conjunction;
  o->alphabet = flat[0]->alphabet;
  o->parts = std::move(flat);
  return o;
}

OrderPtr OrderSpec::labeling(LabelingAutomaton a) {
  a.validate();
  auto o = std::make_shared<OrderSpec>();
  o->kind = Kind::Labeling;
  o->alphabet = a.alphabet;
  o->lab = std::make_shared<LabelingAutomaton>(std::move(a));
  return o;
}

OrderPtr OrderSpec::mod(uint32_t d, std::vector<Symbol> alphabet) {
  auto o = std::make_shared<OrderSpec>();
  o->kind = Kind::Mod;
  o->alphabet = sorted_alphabet(std::move(alphabet));
  o->mod_d = d;
  o->lab = std::make_shared<LabelingAutomaton>(build_md(d, o->alphabet));
  return o;
}

OrderPtr OrderSpec::counting_order(CountingAutomaton a) {
  a.validate();
  auto o = std::make_shared<OrderSpec>();
  o->kind = Kind::Counting;
  o->alphabet = a.alphabet;
  o->counting = std::make_shared<CountingAutomaton>(std::move(a));
  return o;
}

OrderPtr OrderSpec::morphism(MonoidMorphism m) {
  m.validate();
  auto o = std::make_shared<OrderSpec>();
  o->kind = Kind::Morphism;
  o->alphabet = sorted_alphabet(m.alphabet());
  o->morph = std::make_shared<MonoidMorphism>(std::move(m));
  return o;
}

std::string OrderSpec::describe() const {
  switch (kind) {
    case Kind::Subword:
      return "subword";
    case Kind::Mod:
      return "mod:" + std::to_string(mod_d);
    case Kind::Labeling:
      return "labeling(" + std::to_string(lab->num_states) + " states)";
    case Kind::Counting:
      return "counting(" + std::to_string(counting->num_states) + " states, " +
             std::to_string(counting->num_counters) + " counters)";
    case Kind::Morphism:
      return "morphism(" + std::to_string(morph->monoid.size) + " elements)";
    case Kind::ViaTransduction:
      return "via(" + std::to_string(trans->num_states) + " states > " +
             inner->describe() + ")";
    case Kind::Conjunction: {
      std::string s = "conj(";
      for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ", ";
        s += parts[i]->describe();
      }
      return s + ")";
    }
  }
  return "?";
}

bool mod_leq(uint32_t d, const Word& u, const Word& v) {
  if (u.size() > v.size() || (v.size() - u.size()) % d != 0) return false;
  size_t i = 0;
  for (size_t p = 0; p < v.size() && i < u.size(); ++p)
    if (v[p] == u[i] && p % d == i % d) ++i;
  return i == u.size();
}

bool order_leq(const OrderSpec& o, const Word& u, const Word& v) {
  check_word(o, u);
  check_word(o, v);
  switch (o.kind) {
    case OrderSpec::Kind::Subword:
      return subword_leq(u, v);
    case OrderSpec::Kind::Mod:
      return mod_leq(o.mod_d, u, v);
    case OrderSpec::Kind::Labeling: {
      LabelingRun ru = labeling_run(*o.lab, u);
      LabelingRun rv = labeling_run(*o.lab, v);
      if (ru.sigma != rv.sigma) return false;
      return subword_leq(ru.edge_ids, rv.edge_ids);
    }
    case OrderSpec::Kind::Counting: {
      std::vector<uint64_t> cu = counting_eval(*o.counting, u);
      std::vector<uint64_t> cv = counting_eval(*o.counting, v);
      for (size_t i = 0; i < cu.size(); ++i)
        if (cu[i] > cv[i]) return false;
      return true;
    }
    case OrderSpec::Kind::Morphism:
      return morphism_leq(*o.morph, u, v);
    case OrderSpec::Kind::ViaTransduction:
      return order_leq(*o.inner, o.trans->apply_word(u), o.trans->apply_word(v));
    case OrderSpec::Kind::Conjunction:
      for (const OrderPtr& p : o.parts)
        if (!order_leq(*p, u, v)) return false;
      return true;
  }
  throw Error("unknown order kind");
}

namespace {

Nfa labeling_upward_closure(const LabelingAutomaton& a, const Word& w) {
  // States (i, q): i letters of w matched, current automaton state q. Skips
  // keep i and follow the automaton, so inserted factors must loop at the
  // state the run of w had at each match point.
  std::vector<State> run(w.size() + 1);
  run[0] = a.initial;
  for (size_t i = 0; i < w.size(); ++i) run[i + 1] = a.step(run[i], w[i]);
  uint32_t n = static_cast<uint32_t>(w.size());
  Nfa r;
  r.alphabet = a.alphabet;
  r.num_states = (n + 1) * a.num_states;
  auto id = [&](uint32_t i, State q) { return i * a.num_states + q; };
  for (uint32_t i = 0; i <= n; ++i)
    for (State q = 0; q < a.num_states; ++q)
      for (Symbol x : a.alphabet) {
        r.edges.push_back({id(i, q), x, id(i, a.step(q, x))});
        if (i < n && q == run[i] && x == w[i])
          r.edges.push_back({id(i, q), x, id(i + 1, run[i + 1])});
      }
  std::sort(r.edges.begin(), r.edges.end());
  r.edges.erase(std::unique(r.edges.begin(), r.edges.end()), r.edges.end());
  r.initial = {id(0, a.initial)};
  r.final_states = {id(n, run[n])};
  r.validate();
  return nfa_trim(r);
}

Nfa counting_upward_closure(const CountingAutomaton& a, const Word& w) {
  std::vector<uint64_t> target = counting_eval(a, w);
  // Explore (state, counter vector saturated at its target); accept when the
  // final increment pushes every counter to its target.
  using Config = std::pair<State, std::vector<uint64_t>>;
  std::map<Config, State> index;
  std::deque<Config> work;
  auto intern = [&](Config c) {
    auto [it, fresh] = index.try_emplace(c, static_cast<State>(index.size()));
    if (fresh) work.push_back(std::move(c));
    return it->second;
  };
  Nfa r;
  r.alphabet = a.alphabet;
  Config start{a.initial, std::vector<uint64_t>(a.num_counters, 0)};
  for (size_t j = 0; j < a.num_counters; ++j)
    start.second[j] = std::min(start.second[j], target[j]);
  r.initial = {intern(start)};
  std::set<State> fin;
  while (!work.empty()) {
    Config cur = work.front();
    work.pop_front();
    State s = index.at(cur);
    bool ok = true;
    for (size_t j = 0; j < a.num_counters; ++j)
      if (std::min(target[j], cur.second[j] + a.final_inc[cur.first][j]) < target[j])
        ok = false;
    if (ok) fin.insert(s);
    for (size_t i = 0; i < a.alphabet.size(); ++i) {
      Config nxt{a.delta[cur.first][i], cur.second};
      for (size_t j = 0; j < a.num_counters; ++j)
        nxt.second[j] = std::min(target[j], nxt.second[j] + a.inc[cur.first][i][j]);
      r.edges.push_back({s, a.alphabet[i], intern(std::move(nxt))});
    }
  }
  r.num_states = static_cast<uint32_t>(index.size());
  r.final_states = {fin.begin(), fin.end()};
  r.validate();
  return r;
}

}  // namespace

Nfa upward_closure_word(const OrderSpec& o, const Word& w) {
  check_word(o, w);
  switch (o.kind) {
    case OrderSpec::Kind::Subword: {
      Nfa r;
      r.alphabet = o.alphabet;
      r.num_states = static_cast<uint32_t>(w.size()) + 1;
      for (State q = 0; q < r.num_states; ++q)
        for (Symbol x : o.alphabet) r.edges.push_back({q, x, q});
      for (size_t i = 0; i < w.size(); ++i)
        r.edges.push_back({static_cast<State>(i), w[i], static_cast<State>(i + 1)});
      std::sort(r.edges.begin(), r.edges.end());
      r.edges.erase(std::unique(r.edges.begin(), r.edges.end()), r.edges.end());
      r.initial = {0};
      r.final_states = {static_cast<State>(w.size())};
      r.validate();
      return r;
    }
    case OrderSpec::Kind::Labeling:
    case OrderSpec::Kind::Mod:
      return labeling_upward_closure(*o.lab, w);
    case OrderSpec::Kind::Counting:
      return counting_upward_closure(*o.counting, w);
    case OrderSpec::Kind::ViaTransduction:
      return inverse_apply_transducer(*o.trans,
                                      upward_closure_word(*o.inner, o.trans->apply_word(w)));
    case OrderSpec::Kind::Conjunction: {
      Nfa r = upward_closure_word(*o.parts[0], w);
      for (size_t i = 1; i < o.parts.size(); ++i)
        r = nfa_intersect(r, upward_closure_word(*o.parts[i], w));
      return r;
    }
    case OrderSpec::Kind::Morphism:
      throw Error("upward closures are not available for morphism orders");
  }
  throw Error("unknown order kind");
}

}  // namespace wqo
