#include <doctest.h>

#include <random>

#include "wqo/io.hpp"
#include "wqo/testkit.hpp"

#include "fixtures.hpp"

using namespace wqo;

TEST_CASE("NFA JSON round trips are bit exact") {
  std::mt19937 rng(53);
  for (int i = 0; i < 10; ++i) {
    Nfa a = random_nfa(rng, 5, sigma("ab"));
    std::string text = nfa_to_json(a);
    Nfa back = nfa_from_json(text);
    CHECK(back.edges == a.edges);
    CHECK(back.initial == a.initial);
    CHECK(back.final_states == a.final_states);
    CHECK(nfa_to_json(back) == text);
  }
  // Epsilon edges survive as empty-string labels.
  Nfa eps = machine(2, "ab", {{0, 0, 1}}, {0}, {1});
  CHECK(nfa_from_json(nfa_to_json(eps)).edges == eps.edges);
}

TEST_CASE("counter automaton JSON round trips are bit exact") {
  std::mt19937 rng(59);
  for (int i = 0; i < 10; ++i) {
    CounterAutomaton ca = random_counter_automaton(rng, 4, 3, sigma("ab"));
    std::string text = counter_to_json(ca);
    CounterAutomaton back = counter_from_json(text);
    CHECK(counter_to_json(back) == text);
    CHECK(back.edges == ca.edges);
    CHECK(back.num_counters == ca.num_counters);
  }
}

TEST_CASE("transducer JSON round trips preserve behavior") {
  SequentialTransducer f;
  f.num_states = 2;
  f.in_alphabet = sigma("ab");
  f.out_alphabet = sigma("ab");
  f.delta = {{1, 0}, {0, 1}};
  f.out = {{w("ab"), w("")}, {w(""), w("b")}};
  f.final_out = {w(""), w("a")};
  f.validate();
  SequentialTransducer back = transducer_from_json(transducer_to_json(f));
  CHECK(transducer_to_json(back) == transducer_to_json(f));
  for (const Word& u : words_up_to(5, sigma("ab")))
    CHECK(back.apply_word(u) == f.apply_word(u));
}

TEST_CASE("counting automaton JSON keeps counter names and increments") {
  CountingAutomaton p1 = build_pk(1, sigma("ab"));
  CountingAutomaton back = counting_from_json(counting_to_json(p1));
  CHECK(counting_to_json(back) == counting_to_json(p1));
  CHECK(back.counter_names == p1.counter_names);
  for (const Word& u : words_up_to(4, sigma("ab")))
    CHECK(counting_eval(back, u) == counting_eval(p1, u));
}

TEST_CASE("morphism JSON round trips preserve the table") {
  MonoidMorphism m;
  m.monoid.size = 2;
  m.monoid.identity = 0;
  m.monoid.table = {{0, 1}, {1, 0}};
  m.monoid.element_names = {"e", "g"};
  m.theta = {{'a', 1}, {'b', 0}};
  m.validate();
  MonoidMorphism back = morphism_from_json(morphism_to_json(m));
  CHECK(morphism_to_json(back) == morphism_to_json(m));
  for (const Word& u : words_up_to(4, sigma("ab")))
    CHECK(back.eval(u) == m.eval(u));
}

TEST_CASE("order strings parse into the expected kinds") {
  std::vector<Symbol> ab = sigma("ab");
  CHECK(parse_order("subword", ab)->kind == OrderSpec::Kind::Subword);
  OrderPtr m3 = parse_order("mod:3", ab);
  CHECK(m3->kind == OrderSpec::Kind::Mod);
  CHECK(m3->mod_d == 3);
  OrderPtr ltt = parse_order("ltt:2", ab);
  CHECK(ltt->kind == OrderSpec::Kind::Counting);
  OrderPtr conj = parse_order("conj(subword,mod:2)", ab);
  CHECK(conj->kind == OrderSpec::Kind::Conjunction);
  CHECK(conj->parts.size() == 2);
  CHECK_THROWS_AS(parse_order("mod:0", ab), Error);
  CHECK_THROWS_AS(parse_order("nonsense", ab), Error);
}

TEST_CASE("DOT output names every state and edge") {
  Nfa a = machine(2, "ab", {{0, 'a', 1}, {1, 0, 0}}, {0}, {1});
  std::string dot = nfa_to_dot(a);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("q0") != std::string::npos);
  CHECK(dot.find("q1") != std::string::npos);
  CHECK(dot.find("a") != std::string::npos);
}

TEST_CASE("verdicts serialize with their evidence") {
  OrderPtr m2 = OrderSpec::mod(2, sigma("ab"));
  Nfa k = nfa_star(nfa_word(w("aa"), sigma("ab")));
  Nfa l = nfa_concat(nfa_word(w("a"), sigma("ab")), k);
  SeparabilityVerdict sep = ptl_separate(*m2, k, l);
  std::string text = verdict_to_text(sep);
  CHECK(text.find("SEPARABLE") != std::string::npos);
  std::string json = verdict_to_json(sep);
  CHECK(json.find("separable") != std::string::npos);

  OrderPtr sub = OrderSpec::subword(sigma("ab"));
  SeparabilityVerdict insep = ptl_separate(*sub, k, l);
  CHECK(verdict_to_text(insep).find("INSEPARABLE") != std::string::npos);
}

TEST_CASE("malformed JSON is rejected with an error") {
  CHECK_THROWS(nfa_from_json("{"));
  CHECK_THROWS(nfa_from_json("{\"states\": 1}"));
  CHECK_THROWS(counter_from_json("[]"));
}
