#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

#include "wqo/closure.hpp"
#include "wqo/ideal.hpp"

namespace wqo {

// Boolean combination of upward closures of single words.
struct PtlFormula {
  enum class Kind { Atom, And, Or, Not };
  Kind kind = Kind::Atom;
  Word atom;                          // Kind::Atom
  std::vector<PtlFormula> children;   // And/Or: any arity; Not: exactly one

  static PtlFormula up(Word w);
  static PtlFormula conj(std::vector<PtlFormula> fs);
  static PtlFormula disj(std::vector<PtlFormula> fs);
  static PtlFormula neg(PtlFormula f);
};

std::string formula_to_string(const PtlFormula& f);

// Language of the formula over the given alphabet.
Nfa formula_language(const OrderSpec& o, const PtlFormula& f,
                     std::vector<Symbol> alphabet);

struct SeparabilityVerdict {
  enum class Status { Separable, Inseparable, Inconclusive };
  Status status = Status::Inconclusive;
  std::optional<PtlFormula> formula;   // Separable
  std::optional<Nfa> separator;        // Separable: materialized formula
  std::optional<IdealRep> certificate; // Inseparable: ideal in both adherences
  uint32_t budget = 0;                 // Inconclusive: exhausted budget
};

// Separability of K from L by boolean combinations of upward closures.
// Separable verdicts are re-verified against both inputs, Inseparable
// certificates pass the adherence engine on both inputs, and budget
// exhaustion yields Inconclusive, never a wrong claim.
SeparabilityVerdict ptl_separate(const OrderSpec& o, const Nfa& k, const Nfa& l,
                                 uint32_t budget = kDefaultBudget);

// Is L itself such a boolean combination? Separates L from its complement.
SeparabilityVerdict is_ptl(const OrderSpec& o, const Nfa& l,
                           uint32_t budget = kDefaultBudget);

// Separability over the Mod(d) order; Inseparable certificates are reduced
// to irreducible extended patterns when possible.
SeparabilityVerdict mod_separate_fixed(uint32_t d, const Nfa& k, const Nfa& l,
                                       uint32_t budget = kDefaultBudget);

// 2 * (m^3)!, the modulus at which Mod separability of m-state automata
// becomes definitive.
boost::multiprecision::cpp_int mod_bound(uint32_t m);

struct ModSeparateResult {
  SeparabilityVerdict verdict;
  uint32_t d_used = 0;
  // True when the verdict settles separability for every modulus; false for
  // verdicts obtained below the definitive bound.
  bool definitive = false;
};

// Separability by Mod(d) combinations for some d. The definitive modulus is
// mod_bound(max state count); when it exceeds max_d, an ascending search over
// division-friendly moduli runs instead, where only Separable is definitive.
ModSeparateResult mod_separate(const Nfa& k, const Nfa& l, uint32_t max_d = 64,
                               uint32_t budget = kDefaultBudget);

// Audits a Separable verdict: K inside the formula's language, L disjoint.
bool verify_separator(const OrderSpec& o, const PtlFormula& f, const Nfa& k,
                      const Nfa& l);

}  // namespace wqo
