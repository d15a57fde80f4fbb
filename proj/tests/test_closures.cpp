#include <doctest.h>

#include <random>

#include "wqo/closure.hpp"
#include "wqo/testkit.hpp"

#include "fixtures.hpp"

using namespace wqo;

namespace {

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

}  // namespace

TEST_CASE("downward closures match the bounded direct search") {
  std::vector<OrderPtr> orders = {
      OrderSpec::subword(sigma("ab")),
      OrderSpec::mod(2, sigma("ab")),
      OrderSpec::mod(3, sigma("ab")),
  };
  std::mt19937 rng(29);
  for (int i = 0; i < 12; ++i) {
    Nfa l = random_nfa(rng, 4, sigma("ab"));
    for (const OrderPtr& o : orders) {
      Nfa down = downward_closure(*o, l);
      std::set<Word> expect = dcl_oracle(*o, l, 7).words;
      for (const Word& u : words_up_to(7, sigma("ab")))
        CHECK(nfa_accepts(down, u) == expect.count(u));
    }
  }
}

TEST_CASE("different languages can share a Mod closure") {
  OrderPtr o = OrderSpec::mod(2, sigma("ab"));
  Nfa l1 = prefix_loop("", "abba", "ab");                      // (abba)*
  Nfa l2 = nfa_concat(nfa_star(nfa_word(w("aa"), sigma("ab"))),
                      prefix_loop("", "abba", "ab"));          // (aa)*(abba)*
  Nfa d1 = downward_closure(*o, l1);
  Nfa d2 = downward_closure(*o, l2);
  CHECK(nfa_equivalent(d1, d2));
  for (const Word& u : words_up_to(7, sigma("ab")))
    CHECK(nfa_accepts(d1, u) == (u.size() % 2 == 0));
}

TEST_CASE("upward closures match pointwise comparison") {
  std::vector<OrderPtr> orders = {
      OrderSpec::subword(sigma("ab")),
      OrderSpec::mod(2, sigma("ab")),
  };
  std::mt19937 rng(31);
  for (int i = 0; i < 8; ++i) {
    Nfa l = random_nfa(rng, 3, sigma("ab"));
    std::set<Word> lang = enum_words(l, 5).words;
    for (const OrderPtr& o : orders) {
      Nfa up = upward_closure(*o, l);
      for (const Word& v : words_up_to(5, sigma("ab"))) {
        bool expect = false;
        for (const Word& u : lang) expect = expect || order_leq(*o, u, v);
        // Words of L longer than v never sit below it, so the bounded
        // enumeration of L is exact here.
        CHECK(nfa_accepts(up, v) == expect);
      }
    }
  }
}

TEST_CASE("transduction closures are preimages of inner closures") {
  OrderPtr o = OrderSpec::via(projection_a(), OrderSpec::subword(sigma("a")));
  Nfa l = prefix_loop("a", "ba", "ab");  // a(ba)*
  Nfa down = downward_closure(*o, l);
  // u is below some a(ba)^k exactly when it is below in a-count.
  for (const Word& u : words_up_to(6, sigma("ab")))
    CHECK(nfa_accepts(down, u));
  Nfa single = nfa_word(w("a"), sigma("ab"));
  Nfa down1 = downward_closure(*o, single);
  for (const Word& u : words_up_to(5, sigma("ab"))) {
    size_t count_a = static_cast<size_t>(std::count(u.begin(), u.end(), 'a'));
    CHECK(nfa_accepts(down1, u) == (count_a <= 1));
  }
}

TEST_CASE("conjunction closures agree with the intersection of parts") {
  OrderPtr sub = OrderSpec::subword(sigma("ab"));
  OrderPtr m2 = OrderSpec::mod(2, sigma("ab"));
  OrderPtr both = OrderSpec::conjunction({sub, m2});
  std::mt19937 rng(37);
  for (int i = 0; i < 6; ++i) {
    Nfa l = random_nfa(rng, 3, sigma("ab"));
    Nfa down;
    try {
      down = downward_closure(*both, l);
    } catch (const Inconclusive&) {
      continue;  // budget exhausted is a legal outcome
    }
    // The closure lies between L and the intersection of the per-part
    // closures, and is itself downward closed.
    Nfa ds = downward_closure(*sub, l);
    Nfa dm = downward_closure(*m2, l);
    std::set<Word> lang = enum_words(l, 6).words;
    for (const Word& u : words_up_to(6, sigma("ab"))) {
      if (lang.count(u)) CHECK(nfa_accepts(down, u));
      if (nfa_accepts(down, u))
        CHECK((nfa_accepts(ds, u) && nfa_accepts(dm, u)));
    }
    for (const Word& v : words_up_to(6, sigma("ab")))
      if (nfa_accepts(down, v))
        for (const Word& u : words_up_to(6, sigma("ab")))
          if (order_leq(*both, u, v)) CHECK(nfa_accepts(down, u));
  }
}

TEST_CASE("labeling closures reduce to Mod when the automaton is a cycle") {
  OrderPtr lab = OrderSpec::labeling(build_md(2, sigma("ab")));
  OrderPtr m2 = OrderSpec::mod(2, sigma("ab"));
  std::mt19937 rng(41);
  for (int i = 0; i < 8; ++i) {
    Nfa l = random_nfa(rng, 3, sigma("ab"));
    Nfa dl = downward_closure(*lab, l);
    Nfa dm = downward_closure(*m2, l);
    CHECK(nfa_equivalent(dl, dm));
  }
}
