#pragma once

#include <memory>

#include "wqo/counter.hpp"
#include "wqo/labeling.hpp"
#include "wqo/monoid.hpp"
#include "wqo/transducer.hpp"

namespace wqo {

struct OrderSpec;
using OrderPtr = std::shared_ptr<const OrderSpec>;

// A parameterized WQO on words, built from the subword order by functional
// transductions and conjunctions, plus the derived families that get
// dedicated decision procedures.
struct OrderSpec {
  enum class Kind {
    Subword,
    ViaTransduction,
    Conjunction,
    Labeling,
    Mod,
    Counting,
    Morphism,
  };

  Kind kind = Kind::Subword;
  std::vector<Symbol> alphabet;  // sorted, unique

  // ViaTransduction
  std::shared_ptr<const SequentialTransducer> trans;
  OrderPtr inner;
  // Conjunction (flattened, structurally deduplicated)
  std::vector<OrderPtr> parts;
  // Labeling and Mod (Mod keeps the cycle automaton so both share one theory)
  std::shared_ptr<const LabelingAutomaton> lab;
  uint32_t mod_d = 0;
  // Counting
  std::shared_ptr<const CountingAutomaton> counting;
  // Morphism
  std::shared_ptr<const MonoidMorphism> morph;

  static OrderPtr subword(std::vector<Symbol> alphabet);
  static OrderPtr via(SequentialTransducer f, OrderPtr inner);
  static OrderPtr conjunction(std::vector<OrderPtr> parts);
  static OrderPtr labeling(LabelingAutomaton a);
  static OrderPtr mod(uint32_t d, std::vector<Symbol> alphabet);
  static OrderPtr counting_order(CountingAutomaton a);
  static OrderPtr morphism(MonoidMorphism m);

  std::string describe() const;
};

bool order_leq(const OrderSpec& o, const Word& u, const Word& v);

// Automaton for { v : w <= v }. Morphism orders are not supported.
Nfa upward_closure_word(const OrderSpec& o, const Word& w);

// Greedy residue-indexed matcher for the Mod(d) order; also exposed for the
// pattern machinery. Matches u into v at positions congruent modulo d and
// checks the length congruence.
bool mod_leq(uint32_t d, const Word& u, const Word& v);

}  // namespace wqo
