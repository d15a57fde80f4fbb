#include "wqo/kappa.hpp"

#include <algorithm>

namespace wqo {

const std::set<Symbol>& KappaProfile::at(uint32_t i) const {
  if (i < 1 || i > d) throw Error("residue class index out of range");
  return classes[i - 1];
}

bool KappaProfile::subset_of(const KappaProfile& other) const {
  if (d != other.d) throw Error("profile modulus mismatch");
  for (uint32_t i = 0; i < d; ++i)
    if (!std::includes(other.classes[i].begin(), other.classes[i].end(),
                       classes[i].begin(), classes[i].end()))
      return false;
  return true;
}

KappaProfile kappa(uint32_t d, const Word& w) {
  if (d == 0) throw Error("modulus must be positive");
  KappaProfile p;
  p.d = d;
  p.classes.resize(d);
  for (size_t pos = 0; pos < w.size(); ++pos)
    p.classes[pos % d].insert(w[pos]);
  return p;
}

uint32_t period(uint32_t d, const Word& v) {
  KappaProfile p = kappa(d, v);
  for (uint32_t t = 1; t <= d; ++t) {
    if (d % t != 0) continue;
    bool ok = true;
    // Shift-invariance of the profile inside the window [1, d-t].
    for (uint32_t i = 1; i + t <= d && ok; ++i)
      if (p.at(i + t) != p.at(i)) ok = false;
    if (ok) return t;
  }
  return d;
}

Word rotate(const Word& w, RotateDirection dir, uint32_t count) {
  if (w.empty()) return w;
  Word r = w;
  count %= static_cast<uint32_t>(w.size());
  if (dir == RotateDirection::Right)
    std::rotate(r.begin(), r.end() - count, r.end());
  else
    std::rotate(r.begin(), r.begin() + count, r.end());
  return r;
}

std::optional<std::vector<size_t>> d_embedding(uint32_t d, const Word& u,
                                               const Word& v) {
  if (d == 0) throw Error("modulus must be positive");
  if (u.size() > v.size() || (v.size() - u.size()) % d != 0) return std::nullopt;
  std::vector<size_t> map;
  map.reserve(u.size());
  size_t i = 0;
  for (size_t p = 0; p < v.size() && i < u.size(); ++p)
    if (v[p] == u[i] && p % d == i % d) map.push_back(p), ++i;
  if (i < u.size()) return std::nullopt;
  return map;
}

Nfa kappa_ideal_nfa(uint32_t d, const Word& v, uint32_t r,
                    std::vector<Symbol> alphabet) {
  if (d == 0) throw Error("modulus must be positive");
  if (v.size() % d != 0) throw Error("loop word length must be a multiple of d");
  if (r >= d) throw Error("residue out of range");
  KappaProfile p = kappa(d, v);
  Nfa a;
  a.num_states = d;
  a.alphabet = std::move(alphabet);
  for (State s = 0; s < d; ++s)
    for (Symbol x : p.at(s % d + 1))
      a.edges.push_back({s, x, (s + 1) % d});
  a.initial = {0};
  a.final_states = {r};
  a.validate();
  return a;
}

Word canonical_profile_word(const KappaProfile& profile) {
  size_t max_size = 0;
  bool any_empty = false, all_empty = true;
  for (const auto& c : profile.classes) {
    max_size = std::max(max_size, c.size());
    if (c.empty()) any_empty = true;
    else all_empty = false;
  }
  if (all_empty) return {};
  if (any_empty)
    throw Error("profile with a mix of empty and non-empty classes is not realizable");
  Word w;
  w.reserve(max_size * profile.d);
  for (size_t block = 0; block < max_size; ++block)
    for (uint32_t i = 0; i < profile.d; ++i) {
      const auto& c = profile.classes[i];
      size_t j = std::min(block, c.size() - 1);
      w.push_back(*std::next(c.begin(), static_cast<long>(j)));
    }
  return w;
}

}  // namespace wqo
