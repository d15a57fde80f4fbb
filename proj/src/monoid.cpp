#include "wqo/monoid.hpp"

namespace wqo {

void FiniteMonoid::validate() const {
  if (size == 0) throw Error("monoid must be non-empty");
  if (identity >= size) throw Error("identity out of range");
  if (table.size() != size) throw Error("multiplication table size mismatch");
  for (const auto& row : table) {
    if (row.size() != size) throw Error("multiplication table size mismatch");
    for (uint32_t x : row)
      if (x >= size) throw Error("multiplication table entry out of range");
  }
  for (uint32_t x = 0; x < size; ++x) {
    if (table[identity][x] != x || table[x][identity] != x)
      throw Error("identity element does not act as identity");
    for (uint32_t y = 0; y < size; ++y)
      for (uint32_t z = 0; z < size; ++z)
        if (table[table[x][y]][z] != table[x][table[y][z]])
          throw Error("multiplication table is not associative");
  }
  if (!element_names.empty() && element_names.size() != size)
    throw Error("element name list does not match the monoid size");
}

void MonoidMorphism::validate() const {
  monoid.validate();
  if (theta.empty()) throw Error("morphism needs a non-empty alphabet");
  for (const auto& [a, m] : theta) {
    if (a == kEpsilon) throw Error("epsilon cannot be mapped by a morphism");
    if (m >= monoid.size) throw Error("morphism image out of range");
  }
}

uint32_t MonoidMorphism::image(Symbol a) const {
  auto it = theta.find(a);
  if (it == theta.end()) throw Error("symbol not in the morphism alphabet");
  return it->second;
}

uint32_t MonoidMorphism::eval(const Word& w) const {
  uint32_t m = monoid.identity;
  for (Symbol a : w) m = monoid.mul(m, image(a));
  return m;
}

std::vector<Symbol> MonoidMorphism::alphabet() const {
  std::vector<Symbol> out;
  for (const auto& [a, _] : theta) out.push_back(a);
  return out;
}

bool morphism_leq(const MonoidMorphism& m, const Word& u, const Word& v) {
  if (u.size() > v.size()) return false;
  const FiniteMonoid& mo = m.monoid;
  // Images of all prefixes and suffixes of u.
  std::vector<uint32_t> pre(u.size() + 1), suf(u.size() + 1);
  pre[0] = mo.identity;
  for (size_t i = 0; i < u.size(); ++i) pre[i + 1] = mo.mul(pre[i], m.image(u[i]));
  suf[u.size()] = mo.identity;
  for (size_t i = u.size(); i-- > 0;)
    suf[i] = mo.mul(m.image(u[i]), suf[i + 1]);
  // DP over (position in u, position in v, block accumulator). The
  // accumulator is the image of the currently open inserted factor, or
  // "closed". A factor inserted at position i may close only when it fixes
  // theta(u[0..i)) from the right and theta(u[i..)) from the left.
  constexpr uint32_t kClosed = std::numeric_limits<uint32_t>::max();
  auto key = [&](size_t i, size_t j, uint32_t acc) {
    return (i * (v.size() + 1) + j) * (static_cast<size_t>(mo.size) + 1) +
           (acc == kClosed ? mo.size : acc);
  };
  std::vector<int8_t> memo(
      (u.size() + 1) * (v.size() + 1) * (static_cast<size_t>(mo.size) + 1), -1);
  auto rec = [&](auto&& self, size_t i, size_t j, uint32_t acc) -> bool {
    int8_t& slot = memo[key(i, j, acc)];
    if (slot >= 0) return slot == 1;
    slot = 0;
    bool ok = false;
    if (acc != kClosed && mo.mul(pre[i], acc) == pre[i] &&
        mo.mul(acc, suf[i]) == suf[i])
      ok = self(self, i, j, kClosed);
    if (!ok && i == u.size() && j == v.size() && acc == kClosed) ok = true;
    if (!ok && j < v.size()) {
      uint32_t x = m.image(v[j]);
      if (acc == kClosed) {
        if (i < u.size() && u[i] == v[j]) ok = self(self, i + 1, j + 1, kClosed);
        if (!ok) ok = self(self, i, j + 1, x);  // open a block
      } else {
        ok = self(self, i, j + 1, mo.mul(acc, x));  // extend the block
      }
    }
    slot = ok ? 1 : 0;
    return ok;
  };
  return rec(rec, 0, 0, kClosed);
}

}  // namespace wqo
