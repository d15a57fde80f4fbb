// Acceptance suite: one verdict line per criterion, non-zero exit on failure.

#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "wqo/adherence.hpp"
#include "wqo/closure.hpp"
#include "wqo/decompose.hpp"
#include "wqo/pump.hpp"
#include "wqo/separability.hpp"
#include "wqo/testkit.hpp"
#include "wqo/unbounded.hpp"

using namespace wqo;

namespace {

std::vector<Symbol> kAB = {'a', 'b'};

Word w(const char* s) { return word_from_string(s); }

Nfa loop_language(const char* prefix, const char* loop) {
  Word p = w(prefix), v = w(loop);
  Nfa a;
  a.alphabet = kAB;
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

// 1. Greedy subword decision vs the DP oracle on all short pairs.
bool criterion1(std::string& note) {
  OrderPtr o = OrderSpec::subword(kAB);
  std::vector<Word> ws = words_up_to(8, kAB);
  size_t mismatches = 0;
  for (const Word& u : ws)
    for (const Word& v : ws)
      if (order_leq(*o, u, v) != subword_oracle(u, v)) ++mismatches;
  note = std::to_string(ws.size() * ws.size()) + " pairs, " +
         std::to_string(mismatches) + " mismatches";
  return mismatches == 0;
}

// 2. Downward closures vs the bounded direct search on random NFAs.
bool criterion2(std::string& note) {
  std::vector<OrderPtr> orders = {
      OrderSpec::subword(kAB),
      OrderSpec::mod(2, kAB),
      OrderSpec::mod(3, kAB),
  };
  std::mt19937 rng(101);
  size_t mismatches = 0;
  std::vector<Word> ws = words_up_to(7, kAB);
  for (int i = 0; i < 50; ++i) {
    Nfa l = random_nfa(rng, 4, kAB);
    for (const OrderPtr& o : orders) {
      Nfa down = downward_closure(*o, l);
      std::set<Word> expect = dcl_oracle(*o, l, 7).words;
      for (const Word& u : ws)
        if (nfa_accepts(down, u) != (expect.count(u) != 0)) ++mismatches;
    }
  }
  note = "50 automata x 3 orders, " + std::to_string(mismatches) +
         " mismatches";
  return mismatches == 0;
}

// 3. Mod(2) closures of (aa)*(abba)* and (abba)* both equal the even words.
bool criterion3(std::string& note) {
  OrderPtr o = OrderSpec::mod(2, kAB);
  Nfa abba = loop_language("", "abba");
  Nfa aa_abba = nfa_concat(nfa_star(nfa_word(w("aa"), kAB)), abba);
  Nfa d1 = downward_closure(*o, aa_abba);
  Nfa d2 = downward_closure(*o, abba);
  Nfa even = nfa_star(
      nfa_concat(nfa_union(nfa_word(w("a"), kAB), nfa_word(w("b"), kAB)),
                 nfa_union(nfa_word(w("a"), kAB), nfa_word(w("b"), kAB))));
  bool ok = nfa_equivalent(d1, d2) && nfa_equivalent(d1, even);
  note = ok ? "both closures equal the even-length words" : "not equivalent";
  return ok;
}

// 4. Adherence, association and irreducibility worked examples.
bool criterion4(std::string& note) {
  OrderPtr o = OrderSpec::mod(2, kAB);
  // Down(a(abba)*) at Mod(2) is the ideal of (abba)^[1].
  IdealRep odd{parse_pattern_literal("(abba)[1]", 2)};
  Nfa b_sigma = nfa_concat(nfa_word(w("b"), kAB), nfa_universal(kAB));
  bool adh = adherence_member(*o, odd, b_sigma);
  IdealRep two_loops{
      LoopPattern{{w(""), w(""), w("")}, {w("aa"), w("abba")}}};
  bool assoc = association_check(*o, two_loops, loop_language("", "abba"));
  IdealRep a_abba{LoopPattern{{w("a"), w("")}, {w("abba")}}};
  bool irr = pattern_irreducible(*o, a_abba);
  note = std::string("adherent=") + (adh ? "yes" : "no") +
         " associated=" + (assoc ? "yes" : "no") +
         " irreducible=" + (irr ? "yes" : "no");
  return adh && !assoc && irr;
}

// 5. Single-loop ideals vs the profile/length characterization.
bool criterion5(std::string& note) {
  size_t mismatches = 0, checks = 0;
  std::vector<Word> ws = words_up_to(8, kAB);
  for (uint32_t d : {1u, 2u}) {
    OrderPtr o = OrderSpec::mod(d, kAB);
    for (uint32_t len = d; len <= 4; len += d)
      for (const Word& v : words_up_to(len, kAB)) {
        if (v.size() != len) continue;
        for (uint32_t r = 0; r < d; ++r) {
          ExtLoopPattern p{d, {w(""), w("")}, {v}, {r}};
          Nfa n = ideal_to_nfa(*o, IdealRep{p});
          KappaProfile pv = kappa(d, v);
          for (const Word& u : ws) {
            bool expect = u.size() % d == r && kappa(d, u).subset_of(pv);
            if (nfa_accepts(n, u) != expect) ++mismatches;
            ++checks;
          }
        }
      }
  }
  note = std::to_string(checks) + " memberships, " +
         std::to_string(mismatches) + " mismatches";
  return mismatches == 0;
}

// 6. The four separability instances with re-verification.
bool criterion6(std::string& note) {
  OrderPtr m2 = OrderSpec::mod(2, kAB);
  OrderPtr sub = OrderSpec::subword(kAB);
  Nfa aas = nfa_star(nfa_word(w("aa"), kAB));
  Nfa a_aas = nfa_concat(nfa_word(w("a"), kAB), aas);

  SeparabilityVerdict i1 = ptl_separate(*m2, aas, a_aas);
  bool ok1 = i1.status == SeparabilityVerdict::Status::Separable &&
             i1.formula && verify_separator(*m2, *i1.formula, aas, a_aas);

  SeparabilityVerdict i2 = ptl_separate(*sub, aas, a_aas);
  SubwordIdeal astar;
  astar.atoms.push_back({true, 0, {'a'}});
  bool ok2 = i2.status == SeparabilityVerdict::Status::Inseparable &&
             i2.certificate &&
             ideal_equal(*sub, *i2.certificate, IdealRep{astar}) &&
             adherence_member(*sub, *i2.certificate, aas) &&
             adherence_member(*sub, *i2.certificate, a_aas);

  Nfa a_abba = loop_language("a", "abba");
  Nfa b_abba = loop_language("b", "abba");
  SeparabilityVerdict i3 = ptl_separate(*m2, a_abba, b_abba);
  bool ok3 = i3.status == SeparabilityVerdict::Status::Inseparable &&
             i3.certificate &&
             adherence_member(*m2, *i3.certificate, a_abba) &&
             adherence_member(*m2, *i3.certificate, b_abba);

  Nfa a_ba = loop_language("a", "ba");
  Nfa b_ab = loop_language("b", "ab");
  SeparabilityVerdict i4 = ptl_separate(*m2, a_ba, b_ab);
  bool ok4 = i4.status == SeparabilityVerdict::Status::Separable &&
             i4.formula && verify_separator(*m2, *i4.formula, a_ba, b_ab);

  note = std::string("(i)=") + (ok1 ? "ok" : "BAD") +
         " (ii)=" + (ok2 ? "ok" : "BAD") + " (iii)=" + (ok3 ? "ok" : "BAD") +
         " (iv)=" + (ok4 ? "ok" : "BAD");
  return ok1 && ok2 && ok3 && ok4;
}

// 7. Certificate lifting for instance (iii) to moduli 4 and 6.
bool criterion7(std::string& note) {
  Nfa a_abba = loop_language("a", "abba");
  Nfa b_abba = loop_language("b", "abba");
  OrderPtr m2 = OrderSpec::mod(2, kAB);
  SeparabilityVerdict base = ptl_separate(*m2, a_abba, b_abba);
  bool have_cert = base.status == SeparabilityVerdict::Status::Inseparable &&
                   base.certificate.has_value();

  std::string pump_note = "pump not attempted";
  bool pumped = false;
  if (have_cert) {
    const auto* p = std::get_if<ExtLoopPattern>(&base.certificate->rep);
    ExtLoopPattern cert =
        p ? *p
          : make_extended_irreducible(
                *m2, parse_pattern_literal("(abba)[1]", 2));
    try {
      uint32_t m = std::max(a_abba.num_states, b_abba.num_states);
      ExtLoopPattern lifted = pump_pattern(a_abba, m, 2, cert, 2);
      OrderPtr m4 = OrderSpec::mod(4, kAB);
      pumped = adherence_member(*m4, IdealRep{lifted}, a_abba) &&
               adherence_member(*m4, IdealRep{lifted}, b_abba);
      pump_note = "pump to d=4 " + std::string(pumped ? "ok" : "rejected");
    } catch (const Error& e) {
      pump_note = std::string("pump rejected: ") + e.what();
    }
  }

  SeparabilityVerdict v4 = mod_separate_fixed(4, a_abba, b_abba);
  SeparabilityVerdict v6 = mod_separate_fixed(6, a_abba, b_abba);
  bool insep4 = v4.status == SeparabilityVerdict::Status::Inseparable;
  bool insep6 = v6.status == SeparabilityVerdict::Status::Inseparable;

  auto status_name = [](const SeparabilityVerdict& v) {
    switch (v.status) {
      case SeparabilityVerdict::Status::Separable: return "Separable";
      case SeparabilityVerdict::Status::Inseparable: return "Inseparable";
      default: return "Inconclusive";
    }
  };
  note = pump_note + "; d=4 " + status_name(v4) + ", d=6 " + status_name(v6);
  return pumped && insep4 && insep6;
}

// 8. Definitive modulus bound and the 1-state definitive search.
bool criterion8(std::string& note) {
  bool bounds = mod_bound(1) == 2 && mod_bound(2) == 80640;

  std::vector<Symbol> ka = {'a'};
  Nfa a1;  // 1-state a*
  a1.num_states = 1;
  a1.alphabet = ka;
  a1.edges = {{0, 'a', 0}};
  a1.initial = {0};
  a1.final_states = {0};
  a1.validate();
  Nfa b1 = a1;  // 1-state b* over {a,b}
  b1.alphabet = kAB;
  b1.edges = {{0, 'b', 0}};
  Nfa a1ab = a1;
  a1ab.alphabet = kAB;
  Nfa empty = nfa_empty_language(ka);

  bool ok = bounds;
  for (const auto& [k, l] :
       {std::pair{a1, a1}, {a1, empty}, {empty, a1}, {a1ab, b1}}) {
    ModSeparateResult r = mod_separate(k, l);
    ok = ok && r.definitive && r.d_used <= 2 &&
         r.verdict.status == mod_separate_fixed(2, k, l).status;
  }
  note = bounds ? "bounds ok, 1-state searches definitive at d<=2"
                : "mod_bound mismatch";
  return ok;
}

// 9. Counter unboundedness engine vs the exhaustive oracle.
bool criterion9(std::string& note) {
  std::mt19937 rng(103);
  size_t mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    CounterAutomaton ca = random_counter_automaton(rng, 4, 3, kAB);
    if (counter_unbounded(ca).unbounded != unbounded_oracle(ca, 20, 4))
      ++mismatches;
  }
  note = "200 automata, " + std::to_string(mismatches) + " mismatches";
  return mismatches == 0;
}

// 10. Simultaneous unboundedness on letter blocks.
bool criterion10(std::string& note) {
  bool ok = true;
  for (const char* letters : {"a", "ab", "abc"}) {
    Word ls = w(letters);
    Nfa blocks = nfa_star(nfa_word(Word{ls[0]}, ls));
    for (size_t i = 1; i < ls.size(); ++i)
      blocks = nfa_concat(blocks, nfa_star(nfa_word(Word{ls[i]}, ls)));
    ok = ok && sup_decide(blocks, ls);
  }
  Nfa asb = nfa_concat(nfa_star(nfa_word(w("a"), kAB)), nfa_word(w("b"), kAB));
  ok = ok && !sup_decide(asb, w("ab"));
  note = ok ? "full blocks in, a*b out" : "wrong verdict";
  return ok;
}

// 11. Decomposition: union equivalence and pairwise incomparability.
bool criterion11(std::string& note) {
  std::vector<OrderPtr> orders = {
      OrderSpec::subword(kAB),
      OrderSpec::mod(2, kAB),
  };
  std::mt19937 rng(107);
  size_t bad = 0;
  for (int i = 0; i < 20; ++i) {
    const OrderPtr& o = orders[i % orders.size()];
    Nfa l = downward_closure(*o, random_nfa(rng, 4, kAB));
    std::vector<IdealRep> parts = ideal_decompose(*o, l);
    Nfa covered = nfa_empty_language(kAB);
    for (const IdealRep& p : parts)
      covered = nfa_union(covered, ideal_to_nfa(*o, p));
    if (!nfa_equivalent(covered, l)) ++bad;
    for (size_t x = 0; x < parts.size(); ++x)
      for (size_t y = 0; y < parts.size(); ++y)
        if (x != y && ideal_includes(*o, parts[x], parts[y])) ++bad;
  }
  note = "20 inputs, " + std::to_string(bad) + " violations";
  return bad == 0;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<bool(std::string&)> run;
  };
  std::vector<Criterion> criteria = {
      {"subword oracle agreement", criterion1},
      {"closure correctness", criterion2},
      {"shared even-words closure", criterion3},
      {"adherence, association, irreducibility examples", criterion4},
      {"single-loop ideal characterization", criterion5},
      {"separability verdicts", criterion6},
      {"certificate lifting to d=4 and d=6", criterion7},
      {"definitive modulus bound", criterion8},
      {"counter unboundedness", criterion9},
      {"simultaneous unboundedness", criterion10},
      {"ideal decomposition", criterion11},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string note;
    bool ok = false;
    try {
      ok = criteria[i].run(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("%s criterion %zu: %s (%s)\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name, note.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
