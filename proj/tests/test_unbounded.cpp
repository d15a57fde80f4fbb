#include <doctest.h>

#include <random>

#include "wqo/testkit.hpp"
#include "wqo/unbounded.hpp"

#include "fixtures.hpp"

using namespace wqo;

namespace {

CounterAutomaton two_counter(std::initializer_list<CounterEdge> edges,
                             std::initializer_list<State> initial,
                             std::initializer_list<State> final_states,
                             uint32_t n, uint32_t k) {
  CounterAutomaton ca;
  ca.num_states = n;
  ca.alphabet = sigma("ab");
  ca.num_counters = k;
  ca.edges = edges;
  ca.initial = initial;
  ca.final_states = final_states;
  ca.validate();
  return ca;
}

}  // namespace

TEST_CASE("a loop bumping every counter is unbounded") {
  CounterAutomaton ca = two_counter(
      {{0, 'a', 0, {1, 0}}, {0, 'b', 0, {0, 1}}}, {0}, {0}, 1, 2);
  UnboundednessResult r = counter_unbounded(ca);
  CHECK(r.unbounded);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->total == 0b11);
}

TEST_CASE("a counter bumped only before a one-way switch stays bounded") {
  // Counter 0 grows in state 0, counter 1 in state 1; runs must end in
  // state 1, so both grow, and the verdict is unbounded. Cutting the b edge
  // that enters state 1 leaves counter 1 at zero: bounded.
  CounterAutomaton ca = two_counter(
      {{0, 'a', 0, {1, 0}}, {0, 'b', 1, {0, 0}}, {1, 'a', 1, {0, 1}}},
      {0}, {1}, 2, 2);
  CHECK(counter_unbounded(ca).unbounded);

  CounterAutomaton cut = two_counter(
      {{0, 'a', 0, {1, 0}}, {0, 'b', 1, {0, 1}}}, {0}, {1}, 2, 2);
  CHECK(!counter_unbounded(cut).unbounded);
}

TEST_CASE("restriction can break unboundedness") {
  CounterAutomaton ca = two_counter(
      {{0, 'a', 0, {1}}, {0, 'b', 0, {0}}}, {0}, {0}, 1, 1);
  CHECK(counter_unbounded(ca).unbounded);
  Nfa bs = nfa_star(nfa_word(w("b"), sigma("ab")));  // b*
  CHECK(!counter_unbounded(ca, &bs).unbounded);
  Nfa abs = prefix_loop("", "ab", "ab");  // (ab)*
  CHECK(counter_unbounded(ca, &abs).unbounded);
}

TEST_CASE("verdicts agree with the exhaustive run search") {
  std::mt19937 rng(43);
  for (int i = 0; i < 40; ++i) {
    CounterAutomaton ca = random_counter_automaton(rng, 4, 2, sigma("ab"));
    bool expect = unbounded_oracle(ca, 20, 4);
    UnboundednessResult r = counter_unbounded(ca);
    CHECK(r.unbounded == expect);
    if (r.unbounded) {
      REQUIRE(r.witness.has_value());
      uint64_t all = ca.num_counters == 64
                         ? ~uint64_t{0}
                         : (uint64_t{1} << ca.num_counters) - 1;
      CHECK(r.witness->total == all);
    }
  }
}

TEST_CASE("simultaneous unboundedness over letter blocks") {
  // a*b* is its own closure: sup holds.
  Nfa asbs = nfa_concat(nfa_star(nfa_word(w("a"), sigma("ab"))),
                        nfa_star(nfa_word(w("b"), sigma("ab"))));
  CHECK(sup_decide(asbs, w("ab")));
  // a*b misses the words without b entirely once both blocks must pump.
  Nfa asb = nfa_concat(nfa_star(nfa_word(w("a"), sigma("ab"))),
                       nfa_word(w("b"), sigma("ab")));
  CHECK(!sup_decide(asb, w("ab")));
  // One block: a* under a*.
  CHECK(sup_decide(nfa_star(nfa_word(w("a"), sigma("a"))), w("a")));
  CHECK(!sup_decide(nfa_word(w("aa"), sigma("a")), w("a")));
}
