#include <doctest.h>

#include <random>

#include "wqo/order.hpp"
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

MonoidMorphism z2_morphism() {
  MonoidMorphism m;
  m.monoid.size = 2;
  m.monoid.identity = 0;
  m.monoid.table = {{0, 1}, {1, 0}};
  m.theta = {{'a', 1}, {'b', 0}};
  m.validate();
  return m;
}

MonoidMorphism trivial_morphism() {
  MonoidMorphism m;
  m.monoid.size = 1;
  m.monoid.identity = 0;
  m.monoid.table = {{0}};
  m.theta = {{'a', 0}, {'b', 0}};
  m.validate();
  return m;
}

}  // namespace

TEST_CASE("subword order agrees with the dynamic-programming oracle") {
  OrderPtr o = OrderSpec::subword(sigma("ab"));
  std::vector<Word> ws = words_up_to(6, sigma("ab"));
  for (const Word& u : ws)
    for (const Word& v : ws)
      CHECK(order_leq(*o, u, v) == subword_oracle(u, v));
}

TEST_CASE("mod order agrees with the embedding oracle") {
  for (uint32_t d : {2u, 3u}) {
    OrderPtr o = OrderSpec::mod(d, sigma("ab"));
    std::vector<Word> ws = words_up_to(6, sigma("ab"));
    for (const Word& u : ws)
      for (const Word& v : ws) {
        bool expect = mod_embed_oracle(d, u, v);
        CHECK(order_leq(*o, u, v) == expect);
        CHECK(mod_leq(d, u, v) == expect);
      }
  }
}

TEST_CASE("mod embeddings preserve residues, not just letters") {
  CHECK(mod_leq(2, w("ab"), w("abab")));
  CHECK(!mod_leq(2, w("ab"), w("ba")));    // residues swapped
  CHECK(!mod_leq(2, w("a"), w("ab")));     // length parity differs
  CHECK(mod_leq(2, w("a"), w("abb")));
  CHECK(mod_leq(1, w("ba"), w("ab")) == subword_oracle(w("ba"), w("ab")));
}

TEST_CASE("counting order compares prefix, suffix and occurrence counts") {
  OrderPtr o = OrderSpec::counting_order(build_pk(1, sigma("ab")));
  CHECK(order_leq(*o, w("ab"), w("aab")));
  CHECK(!order_leq(*o, w("a"), w("aab")));   // suffix letter differs
  CHECK(!order_leq(*o, w("aab"), w("ab")));  // fewer a's
  CHECK(order_leq(*o, w(""), w("")));
  CHECK(!order_leq(*o, w("a"), w("")));
}

TEST_CASE("morphism order over Z/2Z permits even insertions only") {
  OrderPtr o = OrderSpec::morphism(z2_morphism());
  CHECK(order_leq(*o, w("a"), w("aaa")));
  CHECK(!order_leq(*o, w("a"), w("aa")));
  CHECK(order_leq(*o, w("a"), w("ab")));   // b maps to the identity
  CHECK(order_leq(*o, w("b"), w("aab"))); // inserted block aa is even
  CHECK(!order_leq(*o, w("ab"), w("aab")));
  CHECK(!order_leq(*o, w("b"), w("ab")));
}

TEST_CASE("morphism order through the trivial monoid is the subword order") {
  OrderPtr o = OrderSpec::morphism(trivial_morphism());
  std::vector<Word> ws = words_up_to(5, sigma("ab"));
  for (const Word& u : ws)
    for (const Word& v : ws)
      CHECK(order_leq(*o, u, v) == subword_oracle(u, v));
}

TEST_CASE("transduction order pulls back through the projection") {
  OrderPtr o = OrderSpec::via(projection_a(), OrderSpec::subword(sigma("a")));
  for (const Word& u : words_up_to(5, sigma("ab")))
    for (const Word& v : words_up_to(5, sigma("ab"))) {
      auto count_a = [](const Word& x) {
        return std::count(x.begin(), x.end(), 'a');
      };
      CHECK(order_leq(*o, u, v) == (count_a(u) <= count_a(v)));
    }
}

TEST_CASE("conjunction holds exactly when every part does") {
  OrderPtr sub = OrderSpec::subword(sigma("ab"));
  OrderPtr m2 = OrderSpec::mod(2, sigma("ab"));
  OrderPtr both = OrderSpec::conjunction({sub, m2});
  for (const Word& u : words_up_to(5, sigma("ab")))
    for (const Word& v : words_up_to(5, sigma("ab")))
      CHECK(order_leq(*both, u, v) ==
            (order_leq(*sub, u, v) && order_leq(*m2, u, v)));
}

TEST_CASE("orders are reflexive and transitive on random samples") {
  std::vector<OrderPtr> orders = {
      OrderSpec::subword(sigma("ab")),
      OrderSpec::mod(3, sigma("ab")),
      OrderSpec::counting_order(build_pk(1, sigma("ab"))),
      OrderSpec::morphism(z2_morphism()),
  };
  std::mt19937 rng(23);
  std::vector<Word> ws = words_up_to(5, sigma("ab"));
  std::uniform_int_distribution<size_t> pick(0, ws.size() - 1);
  for (const OrderPtr& o : orders) {
    for (int i = 0; i < 50; ++i) {
      const Word& u = ws[pick(rng)];
      CHECK(order_leq(*o, u, u));
    }
    for (int i = 0; i < 200; ++i) {
      const Word& u = ws[pick(rng)];
      const Word& v = ws[pick(rng)];
      const Word& x = ws[pick(rng)];
      if (order_leq(*o, u, v) && order_leq(*o, v, x)) CHECK(order_leq(*o, u, x));
    }
  }
}

TEST_CASE("upward closure of a word matches pointwise comparison") {
  std::vector<OrderPtr> orders = {
      OrderSpec::subword(sigma("ab")),
      OrderSpec::mod(2, sigma("ab")),
  };
  for (const OrderPtr& o : orders)
    for (const Word& u : {w(""), w("a"), w("ab"), w("ba")}) {
      Nfa up = upward_closure_word(*o, u);
      for (const Word& v : words_up_to(6, sigma("ab")))
        CHECK(nfa_accepts(up, v) == order_leq(*o, u, v));
    }
}
