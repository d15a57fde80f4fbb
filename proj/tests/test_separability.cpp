#include <doctest.h>

#include "wqo/separability.hpp"
#include "wqo/testkit.hpp"

#include "fixtures.hpp"

using namespace wqo;

using Status = SeparabilityVerdict::Status;

namespace {

void check_separable(const OrderSpec& o, const SeparabilityVerdict& v,
                     const Nfa& k, const Nfa& l) {
  REQUIRE(v.status == Status::Separable);
  REQUIRE(v.formula.has_value());
  CHECK(verify_separator(o, *v.formula, k, l));
}

void check_inseparable(const OrderSpec& o, const SeparabilityVerdict& v) {
  REQUIRE(v.status == Status::Inseparable);
  REQUIRE(v.certificate.has_value());
  validate_ideal(o, *v.certificate);
}

}  // namespace

TEST_CASE("formula languages are boolean combinations of upward cones") {
  OrderPtr sub = OrderSpec::subword(sigma("ab"));
  PtlFormula f = PtlFormula::conj(
      {PtlFormula::up(w("a")), PtlFormula::neg(PtlFormula::up(w("ba")))});
  Nfa n = formula_language(*sub, f, sigma("ab"));
  for (const Word& u : words_up_to(6, sigma("ab"))) {
    bool expect =
        subword_oracle(w("a"), u) && !subword_oracle(w("ba"), u);
    CHECK(nfa_accepts(n, u) == expect);
  }
}

TEST_CASE("parity alone separates the even from the odd power words") {
  OrderPtr m2 = OrderSpec::mod(2, sigma("ab"));
  Nfa k = nfa_star(nfa_word(w("aa"), sigma("ab")));                  // (aa)*
  Nfa l = nfa_concat(nfa_word(w("a"), sigma("ab")), k);              // a(aa)*
  SeparabilityVerdict v = ptl_separate(*m2, k, l);
  check_separable(*m2, v, k, l);
}

TEST_CASE("the subword order cannot see parity") {
  OrderPtr sub = OrderSpec::subword(sigma("ab"));
  Nfa k = nfa_star(nfa_word(w("aa"), sigma("ab")));
  Nfa l = nfa_concat(nfa_word(w("a"), sigma("ab")), k);
  SeparabilityVerdict v = ptl_separate(*sub, k, l);
  check_inseparable(*sub, v);
  // The common adherence point is the a-star ideal.
  Nfa cert = ideal_to_nfa(*sub, *v.certificate);
  for (const Word& u : words_up_to(5, sigma("ab"))) {
    size_t count_b = static_cast<size_t>(std::count(u.begin(), u.end(), 'b'));
    CHECK(nfa_accepts(cert, u) == (count_b == 0));
  }
}

TEST_CASE("prefixed copies of one loop share all their parity behavior") {
  OrderPtr m2 = OrderSpec::mod(2, sigma("ab"));
  Nfa k = prefix_loop("a", "abba", "ab");  // a(abba)*
  Nfa l = prefix_loop("b", "abba", "ab");  // b(abba)*
  SeparabilityVerdict v = ptl_separate(*m2, k, l);
  check_inseparable(*m2, v);
  // Any certificate must contain unboundedly long words of both languages'
  // closures; here the odd words qualify.
  Nfa cert = ideal_to_nfa(*m2, *v.certificate);
  CHECK(nfa_accepts(cert, w("a")));
  CHECK(nfa_accepts(cert, w("b")));
}

TEST_CASE("distinct loop residues are separable at the right modulus") {
  OrderPtr m2 = OrderSpec::mod(2, sigma("ab"));
  Nfa k = prefix_loop("a", "ba", "ab");  // a(ba)*
  Nfa l = prefix_loop("b", "ab", "ab");  // b(ab)*
  SeparabilityVerdict v = ptl_separate(*m2, k, l);
  check_separable(*m2, v, k, l);
}

TEST_CASE("separability is symmetric in verdict status") {
  OrderPtr m2 = OrderSpec::mod(2, sigma("ab"));
  Nfa k = prefix_loop("a", "abba", "ab");
  Nfa l = prefix_loop("b", "abba", "ab");
  CHECK(ptl_separate(*m2, k, l).status == ptl_separate(*m2, l, k).status);
  Nfa k2 = prefix_loop("a", "ba", "ab");
  Nfa l2 = prefix_loop("b", "ab", "ab");
  CHECK(ptl_separate(*m2, k2, l2).status == ptl_separate(*m2, l2, k2).status);
}

TEST_CASE("a language is expressible exactly when it separates from its rest") {
  OrderPtr sub = OrderSpec::subword(sigma("ab"));
  // a*b* is the complement of the cone above ba.
  Nfa asbs = nfa_concat(nfa_star(nfa_word(w("a"), sigma("ab"))),
                        nfa_star(nfa_word(w("b"), sigma("ab"))));
  SeparabilityVerdict yes = is_ptl(*sub, asbs);
  REQUIRE(yes.status == Status::Separable);
  REQUIRE(yes.separator.has_value());
  CHECK(nfa_equivalent(*yes.separator, asbs));

  Nfa aas = nfa_star(nfa_word(w("aa"), sigma("ab")));  // (aa)*: parity again
  CHECK(is_ptl(*sub, aas).status == Status::Inseparable);
}

TEST_CASE("the definitive modulus bound grows factorially") {
  CHECK(mod_bound(1) == 2);
  CHECK(mod_bound(2) == 80640);  // 2 * 8!
}

TEST_CASE("the modulus search reports when its verdict is definitive") {
  Nfa k = nfa_star(nfa_word(w("aa"), sigma("a")));              // (aa)*
  Nfa l = nfa_concat(nfa_word(w("a"), sigma("a")), k);          // a(aa)*
  ModSeparateResult r = mod_separate(k, l);
  CHECK(r.verdict.status == Status::Separable);
  CHECK(r.definitive);
  CHECK(mod_separate_fixed(r.d_used, k, l).status == Status::Separable);

  // Same pair, and the one-state inputs make d = 2 the definitive bound.
  Nfa k1 = nfa_star(nfa_word(w("a"), sigma("a")));
  ModSeparateResult all = mod_separate(k1, k1);
  CHECK(all.verdict.status == Status::Inseparable);
  CHECK(all.definitive);
}

TEST_CASE("a larger modulus can separate what a smaller one cannot") {
  Nfa k = prefix_loop("a", "abba", "ab");
  Nfa l = prefix_loop("b", "abba", "ab");
  OrderPtr m2 = OrderSpec::mod(2, sigma("ab"));
  CHECK(mod_separate_fixed(2, k, l).status == Status::Inseparable);
  // At modulus 4 the residue-0 positions of a(abba)^k are all a, so the
  // cone above babba misses K while meeting every b(abba)^k with k >= 1.
  SeparabilityVerdict v4 = mod_separate_fixed(4, k, l);
  OrderPtr m4 = OrderSpec::mod(4, sigma("ab"));
  check_separable(*m4, v4, k, l);
  ModSeparateResult r = mod_separate(k, l);
  CHECK(r.verdict.status == Status::Separable);
}
