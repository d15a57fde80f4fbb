#pragma once

#include "wqo/order.hpp"

namespace wqo {

// Raised by budget-bounded procedures instead of ever returning a wrong
// answer.
class Inconclusive : public Error {
 public:
  explicit Inconclusive(uint32_t budget)
      : Error("inconclusive at budget " + std::to_string(budget)),
        budget_(budget) {}
  uint32_t budget() const { return budget_; }

 private:
  uint32_t budget_;
};

constexpr uint32_t kDefaultBudget = 4;

// Automaton for the downward closure of L(l) under o. Subword, labeling and
// Mod orders and transduction chains over them use direct constructions;
// conjunctions run a budgeted ideal-union search and throw Inconclusive when
// the budget runs out. Counting and morphism orders are unsupported.
Nfa downward_closure(const OrderSpec& o, const Nfa& l,
                     uint32_t budget = kDefaultBudget);

// Automaton for the upward closure of L(l); conjunctions of languages are
// unsupported (use upward_closure_word per conjunct instead).
Nfa upward_closure(const OrderSpec& o, const Nfa& l);

}  // namespace wqo
