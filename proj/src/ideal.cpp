#include "wqo/ideal.hpp"

#include <algorithm>
#include <sstream>

#include "wqo/adherence.hpp"
#include "wqo/closure.hpp"

namespace wqo {

namespace {

bool in_alphabet(const std::vector<Symbol>& alphabet, Symbol a) {
  return std::binary_search(alphabet.begin(), alphabet.end(), a);
}

void check_letters(const std::vector<Symbol>& alphabet, const Word& w) {
  for (Symbol a : w)
    if (!in_alphabet(alphabet, a)) throw Error("letter outside order alphabet");
}

const LabelingAutomaton& order_labeling(const OrderSpec& o) {
  if (o.kind != OrderSpec::Kind::Labeling && o.kind != OrderSpec::Kind::Mod)
    throw Error("order has no labeling automaton");
  return *o.lab;
}

// Length-r_i prefixes of the loops.
std::vector<Word> residue_prefixes(const ExtLoopPattern& p) {
  std::vector<Word> w;
  w.reserve(p.loops.size());
  for (size_t i = 0; i < p.loops.size(); ++i)
    w.emplace_back(p.loops[i].begin(), p.loops[i].begin() + p.residues[i]);
  return w;
}

void check_pattern_shape(const std::vector<Word>& connectors,
                         const std::vector<Word>& loops) {
  if (connectors.size() != loops.size() + 1)
    throw Error("pattern needs one more connector than loops");
  for (const Word& v : loops)
    if (v.empty()) throw Error("pattern loops must be non-empty");
}

// Extended drop-loop step: v_i^{[r_i]} u_i collapses to w_i u_i.
ExtLoopPattern drop_loop(const ExtLoopPattern& p, size_t i) {
  ExtLoopPattern q;
  q.d = p.d;
  Word prefix(p.loops[i].begin(), p.loops[i].begin() + p.residues[i]);
  for (size_t k = 0; k < p.loops.size(); ++k) {
    if (k == i) continue;
    q.loops.push_back(p.loops[k]);
    q.residues.push_back(p.residues[k]);
  }
  for (size_t k = 0; k + 1 < p.connectors.size(); ++k) {
    if (k == i) {
      Word merged = p.connectors[i];
      merged.insert(merged.end(), prefix.begin(), prefix.end());
      merged.insert(merged.end(), p.connectors[i + 1].begin(),
                    p.connectors[i + 1].end());
      q.connectors.push_back(std::move(merged));
      // The two connectors around the dropped loop merged into one.
      for (size_t m = i + 2; m < p.connectors.size(); ++m)
        q.connectors.push_back(p.connectors[m]);
      return q;
    }
    q.connectors.push_back(p.connectors[k]);
  }
  q.connectors.push_back(p.connectors.back());
  return q;
}

bool same_ideal_after_drop(const OrderSpec& o, const ExtLoopPattern& p,
                           const Nfa& full, size_t i) {
  IdealRep dropped{drop_loop(p, i)};
  // Dropping only shrinks the ideal, so equality is one inclusion.
  return nfa_includes(ideal_to_nfa(o, dropped), full);
}

}  // namespace

Nfa subword_ideal_nfa(const SubwordIdeal& i, std::vector<Symbol> alphabet) {
  Nfa a;
  a.alphabet = std::move(alphabet);
  a.num_states = static_cast<uint32_t>(i.atoms.size()) + 1;
  for (uint32_t k = 0; k < i.atoms.size(); ++k) {
    const SubwordAtom& atom = i.atoms[k];
    if (atom.is_star) {
      for (Symbol x : atom.letters) a.edges.push_back({k, x, k});
      a.edges.push_back({k, kEpsilon, k + 1});
    } else {
      a.edges.push_back({k, atom.letter, k + 1});
      a.edges.push_back({k, kEpsilon, k + 1});
    }
  }
  a.initial = {0};
  a.final_states = {a.num_states - 1};
  a.validate();
  return a;
}

void validate_ideal(const OrderSpec& o, const IdealRep& i) {
  std::visit(
      [&](const auto& rep) {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, SubwordIdeal>) {
          if (o.kind != OrderSpec::Kind::Subword)
            throw Error("Jullien form is only an ideal of the subword order");
          for (const SubwordAtom& atom : rep.atoms) {
            if (atom.is_star) {
              if (atom.letters.empty()) throw Error("empty star atom");
              for (Symbol x : atom.letters)
                if (!in_alphabet(o.alphabet, x))
                  throw Error("letter outside order alphabet");
            } else if (!in_alphabet(o.alphabet, atom.letter)) {
              throw Error("letter outside order alphabet");
            }
          }
        } else if constexpr (std::is_same_v<T, LoopPattern>) {
          const LabelingAutomaton& a = order_labeling(o);
          check_pattern_shape(rep.connectors, rep.loops);
          for (const Word& u : rep.connectors) check_letters(o.alphabet, u);
          // The run must be in the same state before and after each loop.
          State q = a.initial;
          for (size_t k = 0; k < rep.loops.size(); ++k) {
            q = a.run_from(q, rep.connectors[k]);
            if (a.run_from(q, rep.loops[k]) != q)
              throw Error("run does not loop at pattern loop " +
                          std::to_string(k + 1));
          }
        } else if constexpr (std::is_same_v<T, ExtLoopPattern>) {
          if (o.kind != OrderSpec::Kind::Mod || rep.d != o.mod_d)
            throw Error("extended pattern modulus does not match the order");
          check_pattern_shape(rep.connectors, rep.loops);
          if (rep.residues.size() != rep.loops.size())
            throw Error("pattern needs one residue per loop");
          for (const Word& u : rep.connectors) check_letters(o.alphabet, u);
          for (size_t k = 0; k < rep.loops.size(); ++k) {
            check_letters(o.alphabet, rep.loops[k]);
            if (rep.loops[k].size() % rep.d != 0)
              throw Error("loop length must be a multiple of d");
            if (rep.residues[k] >= rep.d) throw Error("residue out of range");
          }
        } else if constexpr (std::is_same_v<T, WordIdeal>) {
          check_letters(o.alphabet, rep.w);
        } else if constexpr (std::is_same_v<T, ConjIdeal>) {
          if (o.kind != OrderSpec::Kind::Conjunction)
            throw Error("component family requires a conjunction order");
          if (rep.parts.size() != o.parts.size())
            throw Error("one component ideal per conjunct required");
          for (size_t k = 0; k < rep.parts.size(); ++k)
            validate_ideal(*o.parts[k], *rep.parts[k]);
          // The family must be realizable by a single directed set inside
          // the intersection; otherwise the intersection is no ideal.
          if (!conj_family_adherent(o, rep, ideal_to_nfa(o, i)))
            throw Error("component ideals are not jointly directed");
        } else {
          static_assert(std::is_same_v<T, TransductionIdeal>);
          if (o.kind != OrderSpec::Kind::ViaTransduction)
            throw Error("preimage ideal requires a transduction order");
          validate_ideal(*o.inner, *rep.inner);
          Nfa j = ideal_to_nfa(*o.inner, *rep.inner);
          Nfa pre = inverse_apply_transducer(*o.trans, j);
          Nfa img = apply_transducer(*o.trans, pre);
          if (!nfa_includes(downward_closure(*o.inner, img), j))
            throw Error("inner ideal is not saturated under the transduction");
        }
      },
      i.rep);
}

Word pattern_word(const std::vector<Word>& connectors,
                  const std::vector<Word>& loops) {
  Word w;
  for (size_t k = 0; k < connectors.size(); ++k) {
    w.insert(w.end(), connectors[k].begin(), connectors[k].end());
    if (k < loops.size()) w.insert(w.end(), loops[k].begin(), loops[k].end());
  }
  return w;
}

LoopPattern ext_to_plain(const ExtLoopPattern& p) {
  std::vector<Word> prefixes = residue_prefixes(p);
  LoopPattern q;
  q.loops = p.loops;
  q.connectors.push_back(p.connectors[0]);
  for (size_t k = 0; k < p.loops.size(); ++k) {
    Word u = prefixes[k];
    u.insert(u.end(), p.connectors[k + 1].begin(), p.connectors[k + 1].end());
    q.connectors.push_back(std::move(u));
  }
  return q;
}

Nfa pattern_generator_nfa(const std::vector<Word>& connectors,
                          const std::vector<Word>& loops,
                          std::vector<Symbol> alphabet) {
  check_pattern_shape(connectors, loops);
  Nfa a;
  a.alphabet = std::move(alphabet);
  uint32_t chain_len = 0;
  for (const Word& u : connectors) chain_len += static_cast<uint32_t>(u.size());
  a.num_states = chain_len + 1;
  uint32_t pos = 0;
  for (size_t k = 0; k < connectors.size(); ++k) {
    if (k > 0) {
      const Word& v = loops[k - 1];
      State cur = pos;
      for (size_t j = 0; j + 1 < v.size(); ++j) {
        a.edges.push_back({cur, v[j], a.num_states});
        cur = a.num_states++;
      }
      a.edges.push_back({cur, v.back(), pos});
    }
    for (Symbol x : connectors[k]) {
      a.edges.push_back({pos, x, pos + 1});
      ++pos;
    }
  }
  a.initial = {0};
  a.final_states = {chain_len};
  a.validate();
  return a;
}

Nfa ideal_to_nfa(const OrderSpec& o, const IdealRep& i) {
  return std::visit(
      [&](const auto& rep) -> Nfa {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, SubwordIdeal>) {
          return subword_ideal_nfa(rep, o.alphabet);
        } else if constexpr (std::is_same_v<T, LoopPattern>) {
          return downward_closure(
              o, pattern_generator_nfa(rep.connectors, rep.loops, o.alphabet));
        } else if constexpr (std::is_same_v<T, ExtLoopPattern>) {
          LoopPattern plain = ext_to_plain(rep);
          return downward_closure(
              o, pattern_generator_nfa(plain.connectors, plain.loops,
                                       o.alphabet));
        } else if constexpr (std::is_same_v<T, WordIdeal>) {
          return downward_closure(o, nfa_word(rep.w, o.alphabet));
        } else if constexpr (std::is_same_v<T, ConjIdeal>) {
          Nfa acc = ideal_to_nfa(*o.parts[0], *rep.parts[0]);
          for (size_t k = 1; k < rep.parts.size(); ++k)
            acc = nfa_intersect(acc, ideal_to_nfa(*o.parts[k], *rep.parts[k]));
          return acc;
        } else {
          static_assert(std::is_same_v<T, TransductionIdeal>);
          return inverse_apply_transducer(
              *o.trans, ideal_to_nfa(*o.inner, *rep.inner));
        }
      },
      i.rep);
}

bool ideal_includes(const OrderSpec& o, const IdealRep& i, const IdealRep& j) {
  const auto* pi = std::get_if<ExtLoopPattern>(&i.rep);
  const auto* pj = std::get_if<ExtLoopPattern>(&j.rep);
  auto bare_single_loop = [](const ExtLoopPattern* p) {
    return p && p->loops.size() == 1 && p->connectors[0].empty() &&
           p->connectors[1].empty();
  };
  if (bare_single_loop(pi) && bare_single_loop(pj) && pi->d == pj->d) {
    // down_d v^[r] <= down_d w^[s] iff r = s and kappa_d(v) <= kappa_d(w).
    return pi->residues[0] == pj->residues[0] &&
           kappa(pj->d, pj->loops[0]).subset_of(kappa(pi->d, pi->loops[0]));
  }
  return nfa_includes(ideal_to_nfa(o, i), ideal_to_nfa(o, j));
}

bool ideal_equal(const OrderSpec& o, const IdealRep& i, const IdealRep& j) {
  return nfa_equivalent(ideal_to_nfa(o, i), ideal_to_nfa(o, j));
}

IdealRep word_ideal(const OrderSpec& o, const Word& w) {
  switch (o.kind) {
    case OrderSpec::Kind::Subword: {
      SubwordIdeal i;
      for (Symbol a : w) i.atoms.push_back({false, a, {}});
      return IdealRep{std::move(i)};
    }
    case OrderSpec::Kind::Labeling:
    case OrderSpec::Kind::Mod: {
      LoopPattern p;
      p.connectors = {w};
      return IdealRep{std::move(p)};
    }
    case OrderSpec::Kind::Conjunction: {
      ConjIdeal c;
      for (const OrderPtr& part : o.parts)
        c.parts.push_back(
            std::make_shared<IdealRep>(word_ideal(*part, w)));
      return IdealRep{std::move(c)};
    }
    case OrderSpec::Kind::ViaTransduction: {
      TransductionIdeal t;
      t.inner = std::make_shared<IdealRep>(
          word_ideal(*o.inner, o.trans->apply_word(w)));
      return IdealRep{std::move(t)};
    }
    default:
      return IdealRep{WordIdeal{w}};
  }
}

bool pattern_irreducible(const OrderSpec& o, const IdealRep& p) {
  if (const auto* plain = std::get_if<LoopPattern>(&p.rep)) {
    Nfa full = ideal_to_nfa(o, p);
    for (size_t i = 0; i < plain->loops.size(); ++i) {
      LoopPattern q;
      q.loops = plain->loops;
      q.loops.erase(q.loops.begin() + static_cast<long>(i));
      q.connectors = plain->connectors;
      Word merged = q.connectors[i];
      merged.insert(merged.end(), q.connectors[i + 1].begin(),
                    q.connectors[i + 1].end());
      q.connectors[i] = std::move(merged);
      q.connectors.erase(q.connectors.begin() + static_cast<long>(i) + 1);
      if (nfa_includes(ideal_to_nfa(o, IdealRep{std::move(q)}), full))
        return false;
    }
    return true;
  }
  const auto& ext = std::get<ExtLoopPattern>(p.rep);
  size_t n = ext.loops.size();
  for (size_t i = 0; i < n; ++i) {
    // Last letter of u_i absorbable into the next loop.
    const Word& u = ext.connectors[i];
    if (!u.empty() && kappa(ext.d, ext.loops[i]).at(ext.d).count(u.back()))
      return false;
    // First letter of u_{i+1} absorbable into the residue.
    const Word& u2 = ext.connectors[i + 1];
    if (!u2.empty() &&
        kappa(ext.d, ext.loops[i]).at(ext.residues[i] + 1).count(u2.front()))
      return false;
  }
  Nfa full = ideal_to_nfa(o, p);
  for (size_t i = 0; i < n; ++i)
    if (same_ideal_after_drop(o, ext, full, i)) return false;
  return true;
}

ExtLoopPattern make_extended_irreducible(const OrderSpec& o,
                                         ExtLoopPattern p) {
  validate_ideal(o, IdealRep{p});
  for (bool changed = true; changed;) {
    changed = false;
    Nfa full = ideal_to_nfa(o, IdealRep{p});
    for (size_t i = 0; i < p.loops.size(); ++i)
      if (same_ideal_after_drop(o, p, full, i)) {
        p = drop_loop(p, i);
        changed = true;
        break;
      }
    if (changed) continue;
    for (size_t i = 0; i < p.loops.size(); ++i) {
      Word& u = p.connectors[i + 1];
      if (!u.empty() &&
          kappa(p.d, p.loops[i]).at(p.residues[i] + 1).count(u.front())) {
        // v^[r] a u' and v^[r+1] u' generate the same ideal.
        p.residues[i] = (p.residues[i] + 1) % p.d;
        u.erase(u.begin());
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (size_t i = 0; i < p.loops.size(); ++i) {
      Word& u = p.connectors[i];
      if (!u.empty() && kappa(p.d, p.loops[i]).at(p.d).count(u.back())) {
        // u' a v^[r] and u' lambda(v)^[r+1] generate the same ideal.
        u.pop_back();
        p.loops[i] = rotate(p.loops[i], RotateDirection::Left, 1);
        p.residues[i] = (p.residues[i] + 1) % p.d;
        changed = true;
        break;
      }
    }
  }
  return p;
}

ExtLoopPattern parse_pattern_literal(const std::string& text, uint32_t d) {
  if (d == 0) throw Error("modulus must be positive");
  ExtLoopPattern p;
  p.d = d;
  p.connectors.emplace_back();
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  for (skip_ws(); pos < text.size(); skip_ws()) {
    char c = text[pos];
    if (c == '_') {
      ++pos;
    } else if (c == '(') {
      ++pos;
      Word v;
      while (pos < text.size() && text[pos] != ')') v.push_back(text[pos++]);
      if (pos == text.size()) throw Error("unterminated loop in pattern");
      ++pos;
      uint32_t r = 0;
      if (pos < text.size() && text[pos] == '[') {
        size_t close = text.find(']', pos);
        if (close == std::string::npos)
          throw Error("unterminated residue in pattern");
        std::string num = text.substr(pos + 1, close - pos - 1);
        try {
          r = static_cast<uint32_t>(std::stoul(num)) % d;
        } catch (const std::exception&) {
          throw Error("bad residue in pattern: " + num);
        }
        pos = close + 1;
      }
      if (v.empty()) throw Error("pattern loops must be non-empty");
      if (v.size() % d != 0) throw Error("loop length must be a multiple of d");
      p.loops.push_back(std::move(v));
      p.residues.push_back(r);
      p.connectors.emplace_back();
    } else if (c == ')' || c == '[' || c == ']') {
      throw Error(std::string("unexpected '") + c + "' in pattern");
    } else {
      p.connectors.back().push_back(static_cast<Symbol>(c));
      ++pos;
    }
  }
  return p;
}

namespace {

std::string word_or_blank(const Word& w) {
  return w.empty() ? std::string() : word_to_string(w);
}

std::string pattern_body(const std::vector<Word>& connectors,
                         const std::vector<Word>& loops,
                         const std::vector<uint32_t>* residues) {
  std::ostringstream out;
  for (size_t k = 0; k < connectors.size(); ++k) {
    out << word_or_blank(connectors[k]);
    if (k < loops.size()) {
      out << '(' << word_to_string(loops[k]) << ')';
      if (residues) out << '[' << (*residues)[k] << ']';
    }
  }
  std::string s = out.str();
  return s.empty() ? "_" : s;
}

}  // namespace

std::string pattern_to_string(const IdealRep& i) {
  return std::visit(
      [&](const auto& rep) -> std::string {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, SubwordIdeal>) {
          std::ostringstream out;
          for (const SubwordAtom& atom : rep.atoms) {
            if (atom.is_star) {
              out << '{';
              bool first = true;
              for (Symbol x : atom.letters) {
                if (!first) out << ',';
                first = false;
                out << static_cast<char>(x);
              }
              out << "}*";
            } else {
              out << static_cast<char>(atom.letter) << '?';
            }
          }
          std::string s = out.str();
          return s.empty() ? "_" : s;
        } else if constexpr (std::is_same_v<T, LoopPattern>) {
          return pattern_body(rep.connectors, rep.loops, nullptr);
        } else if constexpr (std::is_same_v<T, ExtLoopPattern>) {
          return pattern_body(rep.connectors, rep.loops, &rep.residues);
        } else if constexpr (std::is_same_v<T, WordIdeal>) {
          return "word:" + word_or_blank(rep.w);
        } else if constexpr (std::is_same_v<T, ConjIdeal>) {
          std::string s = "conj(";
          for (size_t k = 0; k < rep.parts.size(); ++k) {
            if (k > 0) s += "; ";
            s += pattern_to_string(*rep.parts[k]);
          }
          return s + ")";
        } else {
          static_assert(std::is_same_v<T, TransductionIdeal>);
          return "via(" + pattern_to_string(*rep.inner) + ")";
        }
      },
      i.rep);
}

}  // namespace wqo
