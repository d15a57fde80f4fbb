#pragma once

#include <algorithm>
#include <initializer_list>
#include <tuple>

#include "wqo/nfa.hpp"
#include "wqo/order.hpp"

namespace wqo {

inline Word w(const char* s) { return word_from_string(s); }

inline std::vector<Symbol> sigma(const char* s) {
  Word x = word_from_string(s);
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  return x;
}

// Edge labels are chars; 0 stands for epsilon.
inline Nfa machine(uint32_t n, const char* alphabet,
                   std::initializer_list<std::tuple<State, char, State>> edges,
                   std::initializer_list<State> initial,
                   std::initializer_list<State> final_states) {
  Nfa a;
  a.num_states = n;
  a.alphabet = sigma(alphabet);
  for (auto [from, c, to] : edges)
    a.edges.push_back(
        {from, c ? static_cast<Symbol>(c) : kEpsilon, to});
  a.initial = initial;
  a.final_states = final_states;
  a.validate();
  return a;
}

// u (loop)* as in a(abba)*: a prefix followed by one simple cycle.
inline Nfa prefix_loop(const char* prefix, const char* loop,
                       const char* alphabet) {
  Word p = w(prefix), v = w(loop);
  Nfa a;
  a.alphabet = sigma(alphabet);
  a.num_states = static_cast<uint32_t>(p.size() + v.size());
  for (size_t i = 0; i < p.size(); ++i)
    a.edges.push_back({static_cast<State>(i), p[i], static_cast<State>(i + 1)});
  State base = static_cast<State>(p.size());
  for (size_t i = 0; i < v.size(); ++i)
    a.edges.push_back(
        {static_cast<State>(base + i), v[i],
         static_cast<State>(i + 1 < v.size() ? base + i + 1 : base)});
  a.initial = {0};
  a.final_states = {base};
  a.validate();
  return a;
}

}  // namespace wqo
