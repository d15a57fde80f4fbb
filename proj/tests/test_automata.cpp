#include <doctest.h>

#include "wqo/counter.hpp"
#include "wqo/labeling.hpp"
#include "wqo/testkit.hpp"
#include "wqo/transducer.hpp"

#include "fixtures.hpp"

using namespace wqo;

namespace {

// Projection onto {a}: erases every b.
SequentialTransducer projection_a() {
  SequentialTransducer f;
  f.num_states = 1;
  f.in_alphabet = sigma("ab");
  f.out_alphabet = sigma("a");
  f.delta = {{0, 0}};
  f.out = {{w("a"), w("")}};
  f.final_out = {w("")};
  f.validate();
  return f;
}

uint64_t pk_counter(const CountingAutomaton& pk, const std::string& name,
                    const Word& input) {
  std::vector<uint64_t> vals = counting_eval(pk, input);
  for (size_t i = 0; i < pk.counter_names.size(); ++i)
    if (pk.counter_names[i] == name) return vals[i];
  FAIL("no counter named ", name);
  return 0;
}

}  // namespace

TEST_CASE("transducer image and preimage of a projection") {
  SequentialTransducer f = projection_a();
  CHECK(f.apply_word(w("abba")) == w("aa"));
  CHECK(f.apply_word(w("bbb")) == w(""));

  Nfa l = prefix_loop("", "abba", "ab");  // (abba)*
  Nfa image = apply_transducer(f, l);
  for (const Word& u : words_up_to(6, sigma("a")))
    CHECK(nfa_accepts(image, u) == (u.size() % 2 == 0));

  Nfa pre = inverse_apply_transducer(f, nfa_word(w("aa"), sigma("a")));
  for (const Word& u : words_up_to(6, sigma("ab"))) {
    size_t count_a = static_cast<size_t>(std::count(u.begin(), u.end(), 'a'));
    CHECK(nfa_accepts(pre, u) == (count_a == 2));
  }
}

TEST_CASE("identity transducer maps every word to itself") {
  SequentialTransducer id = transducer_identity(sigma("ab"));
  for (const Word& u : words_up_to(5, sigma("ab"))) CHECK(id.apply_word(u) == u);
}

TEST_CASE("run map emits one edge id per letter and tracks the run") {
  LabelingAutomaton m2 = build_md(2, sigma("ab"));
  SequentialTransducer rm = transducer_run_map(m2);
  Word word = w("abba");
  Word run = rm.apply_word(word);
  REQUIRE(run.size() == word.size());
  State q = m2.initial;
  for (size_t i = 0; i < word.size(); ++i) {
    CHECK(run[i] == m2.edge_id(q, word[i]));
    q = m2.step(q, word[i]);
  }
}

TEST_CASE("M_d cycles through residues") {
  LabelingAutomaton m3 = build_md(3, sigma("ab"));
  CHECK(m3.num_states == 3);
  CHECK(m3.run_from(0, w("ab")) == 2);
  CHECK(m3.run_from(0, w("aba")) == 0);
  CHECK(m3.sigma(w("abab")).second == 1);
}

TEST_CASE("labeling runs separate words exactly when sigma or subword differs") {
  LabelingAutomaton m2 = build_md(2, sigma("ab"));
  LabelingRun r1 = labeling_run(m2, w("ab"));
  LabelingRun r2 = labeling_run(m2, w("abab"));
  CHECK(r1.sigma == r2.sigma);
  CHECK(r1.edge_ids.size() == 2);
  CHECK(subword_oracle(r1.edge_ids, r2.edge_ids));
}

TEST_CASE("P_k counts factor occurrences with prefix and suffix flags") {
  CountingAutomaton p2 = build_pk(2, sigma("ab"));
  CHECK(pk_counter(p2, "count:ab", w("abab")) == 2);
  CHECK(pk_counter(p2, "count:ba", w("abab")) == 1);
  CHECK(pk_counter(p2, "prefix:ab", w("abab")) == 1);
  CHECK(pk_counter(p2, "suffix:ab", w("abab")) == 1);
  CHECK(pk_counter(p2, "suffix:ba", w("abab")) == 0);

  // The empty factor occurs |w| + 1 times.
  CHECK(pk_counter(p2, "count:eps", w("abab")) == 5);
  CHECK(pk_counter(p2, "count:eps", w("")) == 1);

  CountingAutomaton p1 = build_pk(1, sigma("ab"));
  for (const Word& u : words_up_to(5, sigma("ab"))) {
    CHECK(pk_counter(p1, "count:a", u) == count_occurrences(w("a"), u));
    CHECK(pk_counter(p1, "count:eps", u) == u.size() + 1);
  }
}

TEST_CASE("P_2 counts agree with the sliding-window oracle") {
  CountingAutomaton p2 = build_pk(2, sigma("ab"));
  for (const Word& u : words_up_to(6, sigma("ab")))
    for (const Word& piece : words_up_to(2, sigma("ab"))) {
      std::string name =
          "count:" + (piece.empty() ? std::string("eps") : word_to_string(piece));
      CHECK(pk_counter(p2, name, u) == count_occurrences(piece, u));
    }
}

TEST_CASE("counter automaton products track both components") {
  // One counter bumped per a, restricted to (ab)*.
  CounterAutomaton ca;
  ca.num_states = 1;
  ca.alphabet = sigma("ab");
  ca.num_counters = 1;
  ca.edges = {{0, 'a', 0, {1}}, {0, 'b', 0, {0}}};
  ca.initial = {0};
  ca.final_states = {0};
  ca.validate();
  CounterAutomaton prod = counter_product(ca, prefix_loop("", "ab", "ab"));
  CHECK(counter_value_at_least(prod, w("abab"), 2));
  CHECK(!counter_value_at_least(prod, w("abab"), 3));
  CHECK(!counter_value_at_least(prod, w("aaaa"), 1));  // not in (ab)*
}
