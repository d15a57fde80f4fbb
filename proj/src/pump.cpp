#include "wqo/pump.hpp"

#include <algorithm>

#include "wqo/adherence.hpp"

namespace wqo {

namespace {

// d must be a multiple of scale * (m^3)!. Factorials are compared against d
// incrementally, so the check never overflows even when (m^3)! would.
bool multiple_of_scaled_factorial(uint32_t d, uint32_t m, uint32_t scale) {
  if (d == 0) return false;
  uint64_t n = uint64_t{m} * m * m;
  uint64_t f = scale;
  for (uint64_t i = 2; i <= n; ++i) {
    if (f > d) return false;
    f *= i;
  }
  return f <= d && d % f == 0;
}

// States of one accepting run on u, length |u| + 1. Throws when u is not
// accepted.
std::vector<State> accepting_run(const Nfa& a0, const Word& u) {
  Nfa a = nfa_remove_epsilon(a0);
  size_t n = u.size();
  std::vector<std::vector<char>> fwd(n + 1,
                                     std::vector<char>(a.num_states, 0));
  for (State s : a.initial) fwd[0][s] = 1;
  for (size_t p = 0; p < n; ++p)
    for (const Edge& e : a.edges)
      if (e.label == u[p] && fwd[p][e.from]) fwd[p + 1][e.to] = 1;
  std::vector<std::vector<char>> bwd(n + 1,
                                     std::vector<char>(a.num_states, 0));
  for (State s : a.final_states) bwd[n][s] = 1;
  for (size_t p = n; p-- > 0;)
    for (const Edge& e : a.edges)
      if (e.label == u[p] && bwd[p + 1][e.to]) bwd[p][e.from] = 1;
  std::vector<State> run;
  State cur = 0;
  bool found = false;
  for (State s = 0; s < a.num_states && !found; ++s)
    if (fwd[0][s] && bwd[0][s]) {
      cur = s;
      found = true;
    }
  if (!found) throw Error("the automaton does not accept the given word");
  run.push_back(cur);
  for (size_t p = 0; p < n; ++p) {
    bool stepped = false;
    for (const Edge& e : a.edges)
      if (e.from == cur && e.label == u[p] && bwd[p + 1][e.to]) {
        cur = e.to;
        stepped = true;
        break;
      }
    if (!stepped) throw Error("the automaton does not accept the given word");
    run.push_back(cur);
  }
  return run;
}

std::vector<Symbol> pattern_alphabet(const Nfa& a, const ExtLoopPattern& p) {
  std::vector<Symbol> sigma = a.alphabet;
  for (const Word& w : p.connectors)
    for (Symbol x : w) sigma = alphabet_union(sigma, {x});
  for (const Word& w : p.loops)
    for (Symbol x : w) sigma = alphabet_union(sigma, {x});
  return sigma;
}

}  // namespace

Word pump_word_up(const Nfa& a, uint32_t m, uint32_t d, const Word& v,
                  uint32_t r, const Word& u, uint32_t ell) {
  if (m == 0) throw Error("state bound must be positive");
  if (ell == 0) throw Error("pump exponent must be positive");
  if (d == 0 || v.empty() || v.size() % d != 0)
    throw Error("loop word length must be a positive multiple of d");
  if (r >= d) throw Error("residue out of range");
  if (!multiple_of_scaled_factorial(d, m, 1))
    throw Error("d must be a multiple of (m^3)!");
  if (a.num_states > m)
    throw Error("automaton has more states than the bound m");
  uint32_t t = period(d, v);
  if (uint64_t{t} > uint64_t{m} * m) throw Error("loop period exceeds m^2");
  if (u.size() % d != r)
    throw Error("word length does not have the required residue");
  if (!kappa(d, u).subset_of(kappa(d, v)))
    throw Error("word is not in the ideal of the loop");
  if (u.size() < size_t{m} * t) throw Error("word too short to pump");

  // The first m+1 block boundaries at multiples of the period visit at most
  // m states, so two coincide; the enclosed block is read on a cycle.
  std::vector<State> run = accepting_run(a, u);
  size_t lo = 0, hi = 0;
  for (size_t i = 0; i <= m && hi == 0; ++i)
    for (size_t j = i + 1; j <= m; ++j)
      if (run[i * t] == run[j * t]) {
        lo = i * t;
        hi = j * t;
        break;
      }
  if (hi == 0) throw Error("internal: no cycle among the block boundaries");
  size_t block = hi - lo;  // at most m^3, hence divides d
  uint64_t reps = 1 + uint64_t{ell - 1} * d / block;
  Word out(u.begin(), u.begin() + static_cast<ptrdiff_t>(lo));
  for (uint64_t i = 0; i < reps; ++i)
    out.insert(out.end(), u.begin() + static_cast<ptrdiff_t>(lo),
               u.begin() + static_cast<ptrdiff_t>(hi));
  out.insert(out.end(), u.begin() + static_cast<ptrdiff_t>(hi), u.end());
  return out;
}

ExtLoopPattern pump_pattern(const Nfa& a, uint32_t m, uint32_t d,
                            const ExtLoopPattern& p, uint32_t ell) {
  if (m == 0) throw Error("state bound must be positive");
  if (ell == 0) throw Error("pump exponent must be positive");
  if (!multiple_of_scaled_factorial(d, m, 2))
    throw Error("d must be a multiple of 2*(m^3)!");
  if (p.d != d) throw Error("pattern modulus does not match d");
  if (a.num_states > m)
    throw Error("automaton has more states than the bound m");
  for (const Word& v : p.loops)
    if (uint64_t{period(d, v)} > uint64_t{m} * m)
      throw Error("loop period exceeds m^2");
  std::vector<Symbol> sigma = pattern_alphabet(a, p);
  OrderPtr od = OrderSpec::mod(d, sigma);
  IdealRep rep{p};
  validate_ideal(*od, rep);
  if (!pattern_irreducible(*od, rep))
    throw Error("pattern must be irreducible");
  if (!adherence_member(*od, rep, a))
    throw Error("pattern ideal is not in the adherence of the language");

  ExtLoopPattern q;
  q.d = d * ell;
  q.connectors = p.connectors;
  q.residues = p.residues;
  for (const Word& v : p.loops) {
    Word w;
    for (uint32_t i = 0; i < ell; ++i) w.insert(w.end(), v.begin(), v.end());
    q.loops.push_back(std::move(w));
  }
  OrderPtr oq = OrderSpec::mod(q.d, sigma);
  IdealRep qrep{q};
  validate_ideal(*oq, qrep);
  if (!adherence_member(*oq, qrep, a))
    throw Error("internal: pumped pattern failed adherence certification");
  return q;
}

}  // namespace wqo
