#pragma once

#include <map>

#include "wqo/nfa.hpp"

namespace wqo {

struct FiniteMonoid {
  uint32_t size = 0;
  uint32_t identity = 0;
  std::vector<std::vector<uint32_t>> table;  // table[x][y] = x * y
  std::vector<std::string> element_names;    // optional, for IO

  void validate() const;
  uint32_t mul(uint32_t x, uint32_t y) const { return table[x][y]; }
};

struct MonoidMorphism {
  FiniteMonoid monoid;
  std::map<Symbol, uint32_t> theta;

  void validate() const;
  uint32_t eval(const Word& w) const;
  uint32_t image(Symbol a) const;
  std::vector<Symbol> alphabet() const;
};

// u is below v when v arises from u by inserting blocks whose image is
// idempotent-like relative to the split point: v = x0 y1 x1 ... yn xn with
// u = x0 x1 ... xn and theta(x0..x_{i-1}) * theta(yi) absorbing on both sides.
bool morphism_leq(const MonoidMorphism& m, const Word& u, const Word& v);

}  // namespace wqo
