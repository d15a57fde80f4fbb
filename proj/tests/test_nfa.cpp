#include <doctest.h>

#include <random>

#include "wqo/testkit.hpp"

#include "fixtures.hpp"

using namespace wqo;

TEST_CASE("basic constructions accept what they should") {
  Nfa e = nfa_empty_language(sigma("ab"));
  CHECK(nfa_is_empty(e));
  CHECK(!nfa_accepts(e, w("")));

  Nfa u = nfa_universal(sigma("ab"));
  CHECK(nfa_accepts(u, w("")));
  CHECK(nfa_accepts(u, w("abba")));

  Nfa word = nfa_word(w("abb"), sigma("ab"));
  CHECK(nfa_accepts(word, w("abb")));
  CHECK(!nfa_accepts(word, w("ab")));
  CHECK(!nfa_accepts(word, w("abba")));

  Nfa star = nfa_letters_star({'a'}, sigma("ab"));
  CHECK(nfa_accepts(star, w("aaa")));
  CHECK(!nfa_accepts(star, w("ab")));
}

TEST_CASE("concat, union, star behave like regular operations") {
  Nfa a = nfa_word(w("a"), sigma("ab"));
  Nfa b = nfa_word(w("b"), sigma("ab"));
  Nfa ab = nfa_concat(a, b);
  CHECK(nfa_accepts(ab, w("ab")));
  CHECK(!nfa_accepts(ab, w("ba")));

  Nfa a_or_b = nfa_union(a, b);
  CHECK(nfa_accepts(a_or_b, w("a")));
  CHECK(nfa_accepts(a_or_b, w("b")));
  CHECK(!nfa_accepts(a_or_b, w("ab")));

  Nfa ab_star = nfa_star(ab);
  CHECK(nfa_accepts(ab_star, w("")));
  CHECK(nfa_accepts(ab_star, w("abab")));
  CHECK(!nfa_accepts(ab_star, w("aba")));
}

TEST_CASE("epsilon removal preserves language and state count") {
  Nfa a = machine(3, "ab",
                  {{0, 'a', 1}, {1, 0, 2}, {2, 'b', 2}, {0, 0, 2}},
                  {0}, {2});
  Nfa b = nfa_remove_epsilon(a);
  CHECK(b.num_states == a.num_states);
  for (const Edge& e : b.edges) CHECK(e.label != kEpsilon);
  for (const Word& u : words_up_to(6, a.alphabet))
    CHECK(nfa_accepts(a, u) == nfa_accepts(b, u));
}

TEST_CASE("double complement is the identity on random automata") {
  std::mt19937 rng(7);
  for (int i = 0; i < 25; ++i) {
    Nfa a = random_nfa(rng, 4, sigma("ab"));
    Nfa cc = nfa_complement(nfa_complement(a));
    CHECK(nfa_equivalent(a, cc));
  }
}

TEST_CASE("intersection and inclusion agree with enumeration") {
  std::mt19937 rng(11);
  for (int i = 0; i < 25; ++i) {
    Nfa a = random_nfa(rng, 4, sigma("ab"));
    Nfa b = random_nfa(rng, 4, sigma("ab"));
    Nfa both = nfa_intersect(a, b);
    bool includes = nfa_includes(a, b);
    bool saw_counterexample = false;
    for (const Word& u : words_up_to(6, a.alphabet)) {
      CHECK(nfa_accepts(both, u) == (nfa_accepts(a, u) && nfa_accepts(b, u)));
      if (nfa_accepts(b, u) && !nfa_accepts(a, u)) saw_counterexample = true;
    }
    if (saw_counterexample) CHECK(!includes);
  }
}

TEST_CASE("determinize yields an equivalent complete DFA") {
  std::mt19937 rng(13);
  for (int i = 0; i < 15; ++i) {
    Nfa a = random_nfa(rng, 4, sigma("ab"));
    Nfa d = nfa_determinize(a);
    CHECK(nfa_is_deterministic(d));
    CHECK(nfa_equivalent(a, d));
  }
}

TEST_CASE("minimize preserves the language and reaches the minimal DFA") {
  std::mt19937 rng(17);
  for (int i = 0; i < 15; ++i) {
    Nfa a = random_nfa(rng, 4, sigma("ab"));
    Nfa m = nfa_minimize(a);
    CHECK(nfa_equivalent(a, m));
    CHECK(nfa_is_deterministic(m));
    CHECK(m.num_states <= nfa_determinize(a).num_states);
  }
  // (aa)* through a redundant 4-state presentation.
  Nfa redundant = machine(
      4, "a", {{0, 'a', 1}, {1, 'a', 2}, {2, 'a', 3}, {3, 'a', 0}}, {0},
      {0, 2});
  CHECK(nfa_minimize(redundant).num_states <= 3);
}

TEST_CASE("shortest word and trim") {
  Nfa a = prefix_loop("ab", "ba", "ab");
  CHECK(nfa_shortest_word(a) == w("ab"));
  CHECK(!nfa_shortest_word(nfa_empty_language(sigma("ab"))).has_value());
  Nfa t = nfa_trim(machine(3, "ab", {{0, 'a', 1}, {2, 'b', 1}}, {0}, {1}));
  CHECK(t.num_states == 2);
  CHECK(nfa_accepts(t, w("a")));
}
