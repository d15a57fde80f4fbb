#include <doctest.h>

#include "wqo/ideal.hpp"
#include "wqo/testkit.hpp"

#include "fixtures.hpp"

using namespace wqo;

namespace {

IdealRep plain(std::vector<Word> connectors, std::vector<Word> loops) {
  return IdealRep{LoopPattern{std::move(connectors), std::move(loops)}};
}

IdealRep ext(uint32_t d, const std::string& literal) {
  return IdealRep{parse_pattern_literal(literal, d)};
}

// Bounded membership oracle: the ideal of a pattern is the downward closure
// of its generator language.
std::set<Word> pattern_ideal_oracle(const OrderSpec& o,
                                    const std::vector<Word>& connectors,
                                    const std::vector<Word>& loops,
                                    size_t bound) {
  Nfa gen = pattern_generator_nfa(connectors, loops, o.alphabet);
  return dcl_oracle(o, gen, bound).words;
}

}  // namespace

TEST_CASE("Jullien-form automata are downward closed and match their atoms") {
  SubwordIdeal i;
  i.atoms.push_back({true, 0, {'a'}});        // a*
  i.atoms.push_back({false, 'b', {}});        // optional b
  OrderPtr o = OrderSpec::subword(sigma("ab"));
  Nfa n = ideal_to_nfa(*o, IdealRep{i});
  CHECK(nfa_accepts(n, w("")));
  CHECK(nfa_accepts(n, w("aaab")));
  CHECK(nfa_accepts(n, w("b")));
  CHECK(!nfa_accepts(n, w("ba")));
  CHECK(!nfa_accepts(n, w("abb")));
  for (const Word& v : words_up_to(5, sigma("ab")))
    for (const Word& u : words_up_to(5, sigma("ab")))
      if (nfa_accepts(n, v) && subword_oracle(u, v)) CHECK(nfa_accepts(n, u));
}

TEST_CASE("pattern ideals match the closure of their generator language") {
  struct Instance {
    uint32_t d;
    std::vector<Word> connectors;
    std::vector<Word> loops;
  };
  std::vector<Instance> instances = {
      {2, {w("a"), w("")}, {w("abba")}},
      {2, {w(""), w("")}, {w("ab")}},
      {2, {w(""), w("b"), w("")}, {w("aa"), w("bb")}},
      {3, {w(""), w("a")}, {w("aab")}},
      {1, {w("b"), w("")}, {w("a")}},
  };
  for (const Instance& inst : instances) {
    OrderPtr o = OrderSpec::mod(inst.d, sigma("ab"));
    IdealRep i = plain(inst.connectors, inst.loops);
    Nfa n = ideal_to_nfa(*o, i);
    std::set<Word> expect =
        pattern_ideal_oracle(*o, inst.connectors, inst.loops, 6);
    for (const Word& u : words_up_to(6, sigma("ab")))
      CHECK(nfa_accepts(n, u) == expect.count(u));
  }
}

TEST_CASE("a single-loop ideal is cut out by residue profile and length") {
  for (uint32_t d : {1u, 2u})
    for (const char* loop : {"ab", "abba", "aa", "bb"})
      for (uint32_t r = 0; r < d; ++r) {
        OrderPtr o = OrderSpec::mod(d, sigma("ab"));
        Word v = w(loop);
        ExtLoopPattern p{d, {w(""), w("")}, {v}, {r}};
        Nfa n = ideal_to_nfa(*o, IdealRep{p});
        KappaProfile pv = kappa(d, v);
        for (const Word& u : words_up_to(7, sigma("ab"))) {
          bool expect = u.size() % d == r && kappa(d, u).subset_of(pv);
          CHECK(nfa_accepts(n, u) == expect);
        }
      }
}

TEST_CASE("residue exponents fold into the connectors") {
  OrderPtr o = OrderSpec::mod(2, sigma("ab"));
  ExtLoopPattern p = parse_pattern_literal("a(abba)[1]b", 2);
  LoopPattern q = ext_to_plain(p);
  CHECK(q.connectors == std::vector<Word>{w("a"), w("ab")});
  CHECK(q.loops == std::vector<Word>{w("abba")});
  CHECK(ideal_equal(*o, IdealRep{p}, IdealRep{q}));
}

TEST_CASE("inclusion between single loops reduces to profile containment") {
  OrderPtr o = OrderSpec::mod(2, sigma("ab"));
  IdealRep small = ext(2, "(ab)[0]");
  IdealRep big = ext(2, "(abba)[0]");
  IdealRep odd = ext(2, "(abba)[1]");
  CHECK(ideal_includes(*o, big, small));
  CHECK(!ideal_includes(*o, small, big));
  CHECK(!ideal_includes(*o, big, odd));
  CHECK(ideal_equal(*o, big, ext(2, "(baab)[0]")));  // same profile
}

TEST_CASE("word ideals agree with the order") {
  OrderPtr sub = OrderSpec::subword(sigma("ab"));
  IdealRep i = word_ideal(*sub, w("abb"));
  Nfa n = ideal_to_nfa(*sub, i);
  for (const Word& u : words_up_to(5, sigma("ab")))
    CHECK(nfa_accepts(n, u) == subword_oracle(u, w("abb")));

  OrderPtr m2 = OrderSpec::mod(2, sigma("ab"));
  IdealRep j = word_ideal(*m2, w("abb"));
  Nfa nj = ideal_to_nfa(*m2, j);
  for (const Word& u : words_up_to(5, sigma("ab")))
    CHECK(nfa_accepts(nj, u) == mod_embed_oracle(2, u, w("abb")));
}

TEST_CASE("irreducibility of plain patterns is loop dropping") {
  OrderPtr o = OrderSpec::mod(2, sigma("ab"));
  CHECK(pattern_irreducible(*o, plain({w("a"), w("")}, {w("abba")})));
  // (aa) is swallowed by (abba), so the two-loop pattern reduces.
  CHECK(!pattern_irreducible(
      *o, plain({w(""), w(""), w("")}, {w("aa"), w("abba")})));
}

TEST_CASE("extended irreducibility also inspects connector boundaries") {
  OrderPtr o = OrderSpec::mod(2, sigma("ab"));
  // The leading a sits in the profile of the loop, so it can be absorbed.
  CHECK(!pattern_irreducible(*o, ext(2, "a(abba)[0]")));
  CHECK(pattern_irreducible(*o, ext(2, "(bbaa)[1]")));
  CHECK(pattern_irreducible(*o, ext(2, "(ab)[0]")));
  CHECK(!pattern_irreducible(*o, ext(2, "(aa)[0](abba)[0]")));
}

TEST_CASE("reduction yields an irreducible pattern with the same ideal") {
  for (const char* literal :
       {"a(abba)[0]", "(aa)[0](abba)[0]", "a(abba)[1]b", "ab(aa)[1]",
        "(ab)[0]a(ba)[1]"}) {
    OrderPtr o = OrderSpec::mod(2, sigma("ab"));
    ExtLoopPattern p = parse_pattern_literal(literal, 2);
    ExtLoopPattern q = make_extended_irreducible(*o, p);
    CHECK(pattern_irreducible(*o, IdealRep{q}));
    CHECK(ideal_equal(*o, IdealRep{p}, IdealRep{q}));
  }
}

TEST_CASE("pattern literals round trip through printing") {
  for (const char* literal : {"a(abba)[1]b", "(ab)[0]", "ab", "(aa)[1](bb)[0]a"}) {
    ExtLoopPattern p = parse_pattern_literal(literal, 2);
    ExtLoopPattern back =
        parse_pattern_literal(pattern_to_string(IdealRep{p}), 2);
    CHECK(p == back);
  }
}
