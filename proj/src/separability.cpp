#include "wqo/separability.hpp"

#include <algorithm>
#include <functional>

#include "wqo/adherence.hpp"
#include "wqo/counter.hpp"
#include "wqo/decompose.hpp"

namespace wqo {

PtlFormula PtlFormula::up(Word w) {
  PtlFormula f;
  f.kind = Kind::Atom;
  f.atom = std::move(w);
  return f;
}

PtlFormula PtlFormula::conj(std::vector<PtlFormula> fs) {
  PtlFormula f;
  f.kind = Kind::And;
  f.children = std::move(fs);
  return f;
}

PtlFormula PtlFormula::disj(std::vector<PtlFormula> fs) {
  PtlFormula f;
  f.kind = Kind::Or;
  f.children = std::move(fs);
  return f;
}

PtlFormula PtlFormula::neg(PtlFormula f) {
  PtlFormula r;
  r.kind = Kind::Not;
  r.children.push_back(std::move(f));
  return r;
}

std::string formula_to_string(const PtlFormula& f) {
  switch (f.kind) {
    case PtlFormula::Kind::Atom:
      return "up(" + word_to_string(f.atom) + ")";
    case PtlFormula::Kind::Not:
      return "!" + formula_to_string(f.children.at(0));
    case PtlFormula::Kind::And:
    case PtlFormula::Kind::Or: {
      if (f.children.empty())
        return f.kind == PtlFormula::Kind::And ? "true" : "false";
      std::string sep = f.kind == PtlFormula::Kind::And ? " & " : " | ";
      std::string out = "(";
      for (size_t i = 0; i < f.children.size(); ++i) {
        if (i) out += sep;
        out += formula_to_string(f.children[i]);
      }
      return out + ")";
    }
  }
  throw Error("corrupt formula");
}

Nfa formula_language(const OrderSpec& o, const PtlFormula& f,
                     std::vector<Symbol> alphabet) {
  switch (f.kind) {
    case PtlFormula::Kind::Atom:
      return nfa_widen_alphabet(upward_closure_word(o, f.atom), alphabet);
    case PtlFormula::Kind::Not:
      return nfa_complement(
          formula_language(o, f.children.at(0), alphabet));
    case PtlFormula::Kind::And: {
      Nfa r = nfa_universal(alphabet);
      for (const PtlFormula& c : f.children)
        r = nfa_intersect(r, formula_language(o, c, alphabet));
      return nfa_widen_alphabet(r, alphabet);
    }
    case PtlFormula::Kind::Or: {
      Nfa r = nfa_empty_language(alphabet);
      for (const PtlFormula& c : f.children)
        r = nfa_union(r, formula_language(o, c, alphabet));
      return r;
    }
  }
  throw Error("corrupt formula");
}

namespace {

void check_supported(const OrderSpec& o) {
  switch (o.kind) {
    case OrderSpec::Kind::Subword:
    case OrderSpec::Kind::Labeling:
    case OrderSpec::Kind::Mod:
      return;
    case OrderSpec::Kind::ViaTransduction:
      check_supported(*o.inner);
      return;
    case OrderSpec::Kind::Conjunction:
      for (const OrderPtr& p : o.parts) check_supported(*p);
      return;
    default:
      throw Error("separability is not supported for this order");
  }
}

struct RoundOutcome {
  std::optional<std::pair<PtlFormula, Nfa>> separator;
  std::optional<Word> equiv_word;  // in K, order-equivalent to a word of L
};

// Refines an atom set until the atom cells split K from L, an order-equivalent
// cross pair shows up, or the atom budget for this round runs out.
RoundOutcome separator_round(const OrderSpec& o, const Nfa& k, const Nfa& l,
                             std::vector<Word>& atoms, uint32_t max_atoms,
                             const std::vector<Symbol>& sigma) {
  for (;;) {
    size_t n = atoms.size();
    std::vector<Nfa> up, co;
    for (const Word& a : atoms) {
      up.push_back(nfa_widen_alphabet(upward_closure_word(o, a), sigma));
      co.push_back(nfa_complement(up.back()));
    }
    std::vector<PtlFormula> good_cells;
    Nfa covered = nfa_empty_language(sigma);
    bool refined = false;
    for (uint64_t bits = 0; bits < (uint64_t{1} << n) && !refined; ++bits) {
      Nfa cell = nfa_universal(sigma);
      for (size_t i = 0; i < n; ++i)
        cell = nfa_widen_alphabet(
            nfa_intersect(cell, (bits >> i) & 1 ? up[i] : co[i]), sigma);
      Nfa kc = nfa_intersect(cell, k);
      Nfa lc = nfa_intersect(cell, l);
      bool ke = nfa_is_empty(kc), le = nfa_is_empty(lc);
      if (!ke && !le) {
        Word u = *nfa_shortest_word(kc);
        Word v = *nfa_shortest_word(lc);
        bool uv = order_leq(o, u, v), vu = order_leq(o, v, u);
        if (uv && vu) return {.separator = {}, .equiv_word = u};
        if (atoms.size() >= max_atoms) return {};
        atoms.push_back(uv ? v : u);
        refined = true;
        break;
      }
      if (!ke) {
        std::vector<PtlFormula> lits;
        for (size_t i = 0; i < n; ++i) {
          PtlFormula a = PtlFormula::up(atoms[i]);
          lits.push_back((bits >> i) & 1 ? std::move(a)
                                         : PtlFormula::neg(std::move(a)));
        }
        good_cells.push_back(PtlFormula::conj(std::move(lits)));
        covered = nfa_union(covered, cell);
      }
    }
    if (refined) continue;
    return {.separator = {{PtlFormula::disj(std::move(good_cells)),
                           std::move(covered)}},
            .equiv_word = {}};
  }
}

// Mod certificates read better (and pump further) in irreducible form.
IdealRep reduce_mod_certificate(const OrderSpec& o, IdealRep cert) {
  if (o.kind != OrderSpec::Kind::Mod) return cert;
  ExtLoopPattern e;
  if (const auto* p = std::get_if<LoopPattern>(&cert.rep)) {
    e.d = o.mod_d;
    e.connectors = p->connectors;
    e.loops = p->loops;
    e.residues.assign(p->loops.size(), 0);
  } else if (const auto* x = std::get_if<ExtLoopPattern>(&cert.rep)) {
    e = *x;
  } else {
    return cert;
  }
  try {
    return IdealRep{make_extended_irreducible(o, e)};
  } catch (const Error&) {
    return cert;
  }
}

std::vector<IdealRep> certificate_candidates(const OrderSpec& o, const Nfa& k,
                                             const Nfa& l, uint32_t b) {
  std::vector<IdealRep> out;
  std::set<std::string> seen;
  auto add = [&](IdealRep i) {
    if (seen.insert(pattern_to_string(i)).second) out.push_back(std::move(i));
  };
  auto add_decomposed = [&](const OrderSpec& oo, const Nfa& lang) {
    try {
      for (IdealRep& i : ideal_decompose(oo, lang)) add(std::move(i));
    } catch (const Error&) {
    }
  };
  switch (o.kind) {
    case OrderSpec::Kind::Subword:
    case OrderSpec::Kind::Labeling:
    case OrderSpec::Kind::Mod: {
      try {
        Nfa dk = nfa_minimize(downward_closure(o, k, b));
        Nfa dl = nfa_minimize(downward_closure(o, l, b));
        add_decomposed(o, nfa_intersect(dk, dl));
        add_decomposed(o, dk);
        add_decomposed(o, dl);
      } catch (const Error&) {
      }
      if (o.kind == OrderSpec::Kind::Mod) {
        // All per-residue letter profiles, when that space is small: any loop
        // ideal equals the ideal of the canonical word of its profile.
        uint32_t d = o.mod_d;
        uint64_t nsub = uint64_t{1} << o.alphabet.size();
        uint64_t total = 1;
        bool feasible = true;
        for (uint32_t i = 0; i < d && feasible; ++i) {
          total *= nsub;
          if (total > 64) feasible = false;
        }
        for (uint64_t code = 0; feasible && code < total; ++code) {
          uint64_t c = code;
          KappaProfile prof;
          prof.d = d;
          prof.classes.resize(d);
          bool any = false;
          for (uint32_t i = 0; i < d; ++i) {
            uint64_t mask = c % nsub;
            c /= nsub;
            for (size_t bit = 0; bit < o.alphabet.size(); ++bit)
              if ((mask >> bit) & 1) {
                prof.classes[i].insert(o.alphabet[bit]);
                any = true;
              }
          }
          if (!any) continue;
          // Only fully populated profiles are realizable as loop words.
          bool full = true;
          for (const auto& cls : prof.classes) full = full && !cls.empty();
          if (!full) continue;
          Word v = canonical_profile_word(prof);
          if (v.empty() || v.size() % d != 0) continue;
          for (uint32_t r = 0; r < d; ++r)
            add(IdealRep{ExtLoopPattern{d, {Word{}, Word{}}, {v}, {r}}});
        }
      }
      break;
    }
    case OrderSpec::Kind::ViaTransduction: {
      Nfa fk = apply_transducer(*o.trans, k);
      Nfa fl = apply_transducer(*o.trans, l);
      for (IdealRep& j : certificate_candidates(*o.inner, fk, fl, b))
        add(IdealRep{
            TransductionIdeal{std::make_shared<IdealRep>(std::move(j))}});
      break;
    }
    case OrderSpec::Kind::Conjunction: {
      std::vector<std::vector<IdealRep>> per_part;
      bool ok = true;
      for (const OrderPtr& part : o.parts) {
        try {
          Nfa dk = downward_closure(*part, k, b);
          Nfa dl = downward_closure(*part, l, b);
          per_part.push_back(ideal_decompose(*part, nfa_intersect(dk, dl)));
          if (per_part.back().empty()) ok = false;
        } catch (const Error&) {
          ok = false;
        }
        if (!ok) break;
      }
      if (ok) {
        uint64_t tuples = 1;
        for (const auto& v : per_part) tuples *= v.size();
        if (tuples <= 64) {
          for (uint64_t t = 0; t < tuples; ++t) {
            uint64_t c = t;
            ConjIdeal ci;
            for (size_t s = 0; s < per_part.size(); ++s) {
              size_t idx = c % per_part[s].size();
              c /= per_part[s].size();
              ci.parts.push_back(
                  std::make_shared<IdealRep>(per_part[s][idx]));
            }
            add(IdealRep{std::move(ci)});
          }
        }
      }
      break;
    }
    default:
      break;
  }
  // Principal ideals of short accepted words back every order.
  std::vector<Symbol> sigma = alphabet_union(k.alphabet, l.alphabet);
  for (const Word& w : words_up_to(b, sigma))
    if (nfa_accepts(k, w) || nfa_accepts(l, w)) add(word_ideal(o, w));
  return out;
}

}  // namespace

SeparabilityVerdict ptl_separate(const OrderSpec& o, const Nfa& k0,
                                 const Nfa& l0, uint32_t budget) {
  check_supported(o);
  std::vector<Symbol> sigma =
      alphabet_union(alphabet_union(k0.alphabet, l0.alphabet), o.alphabet);
  Nfa k = nfa_widen_alphabet(k0, sigma);
  Nfa l = nfa_widen_alphabet(l0, sigma);
  Nfa both = nfa_intersect(k, l);
  if (!nfa_is_empty(both)) {
    SeparabilityVerdict v;
    v.status = SeparabilityVerdict::Status::Inseparable;
    v.certificate = word_ideal(o, *nfa_shortest_word(both));
    return v;
  }
  std::vector<Word> atoms;
  for (uint32_t b = 1; b <= budget; ++b) {
    RoundOutcome round = separator_round(o, k, l, atoms, b, sigma);
    if (round.equiv_word) {
      SeparabilityVerdict v;
      v.status = SeparabilityVerdict::Status::Inseparable;
      v.certificate =
          reduce_mod_certificate(o, word_ideal(o, *round.equiv_word));
      return v;
    }
    if (round.separator) {
      auto& [formula, lang] = *round.separator;
      if (!verify_separator(o, formula, k, l))
        throw Error("internal: candidate separator failed verification");
      SeparabilityVerdict v;
      v.status = SeparabilityVerdict::Status::Separable;
      v.formula = std::move(formula);
      v.separator = std::move(lang);
      return v;
    }
    for (IdealRep& cand : certificate_candidates(o, k, l, b)) {
      try {
        validate_ideal(o, cand);
        if (adherence_member(o, cand, k) && adherence_member(o, cand, l)) {
          SeparabilityVerdict v;
          v.status = SeparabilityVerdict::Status::Inseparable;
          v.certificate = reduce_mod_certificate(o, std::move(cand));
          return v;
        }
      } catch (const Error&) {
      }
    }
  }
  SeparabilityVerdict v;
  v.status = SeparabilityVerdict::Status::Inconclusive;
  v.budget = budget;
  return v;
}

SeparabilityVerdict is_ptl(const OrderSpec& o, const Nfa& l, uint32_t budget) {
  std::vector<Symbol> sigma = alphabet_union(o.alphabet, l.alphabet);
  Nfa wide = nfa_widen_alphabet(l, sigma);
  return ptl_separate(o, wide, nfa_complement(wide), budget);
}

SeparabilityVerdict mod_separate_fixed(uint32_t d, const Nfa& k, const Nfa& l,
                                       uint32_t budget) {
  if (d == 0) throw Error("modulus must be positive");
  OrderPtr o = OrderSpec::mod(d, alphabet_union(k.alphabet, l.alphabet));
  return ptl_separate(*o, k, l, budget);
}

boost::multiprecision::cpp_int mod_bound(uint32_t m) {
  if (m == 0) throw Error("state bound must be positive");
  boost::multiprecision::cpp_int f = 1;
  uint64_t n = uint64_t{m} * m * m;
  for (uint64_t i = 2; i <= n; ++i) f *= i;
  return 2 * f;
}

ModSeparateResult mod_separate(const Nfa& k, const Nfa& l, uint32_t max_d,
                               uint32_t budget) {
  ModSeparateResult r;
  Nfa both = nfa_intersect(nfa_widen_alphabet(k, alphabet_union(k.alphabet, l.alphabet)),
                           nfa_widen_alphabet(l, alphabet_union(k.alphabet, l.alphabet)));
  if (!nfa_is_empty(both)) {
    // Intersecting languages have no separator of any kind.
    OrderPtr o1 = OrderSpec::mod(1, alphabet_union(k.alphabet, l.alphabet));
    r.verdict.status = SeparabilityVerdict::Status::Inseparable;
    r.verdict.certificate = word_ideal(*o1, *nfa_shortest_word(both));
    r.d_used = 1;
    r.definitive = true;
    return r;
  }
  uint32_t m = std::max(k.num_states, l.num_states);
  boost::multiprecision::cpp_int full = mod_bound(m);
  if (full <= max_d) {
    uint32_t d = full.convert_to<uint32_t>();
    r.verdict = mod_separate_fixed(d, k, l, budget);
    r.d_used = d;
    r.definitive =
        r.verdict.status != SeparabilityVerdict::Status::Inconclusive;
    return r;
  }
  // Below the definitive bound only Separable transfers to every modulus.
  static const uint32_t kModuli[] = {1,  2,  4,  6,  8,  12, 16,
                                     24, 32, 36, 48, 60, 64};
  std::optional<SeparabilityVerdict> last_insep;
  uint32_t last_insep_d = 0, last_d = 0;
  for (uint32_t d : kModuli) {
    if (d > max_d) break;
    last_d = d;
    SeparabilityVerdict v = mod_separate_fixed(d, k, l, budget);
    if (v.status == SeparabilityVerdict::Status::Separable) {
      r.verdict = std::move(v);
      r.d_used = d;
      r.definitive = true;
      return r;
    }
    if (v.status == SeparabilityVerdict::Status::Inseparable) {
      last_insep = std::move(v);
      last_insep_d = d;
    }
  }
  r.verdict.status = SeparabilityVerdict::Status::Inconclusive;
  r.verdict.budget = budget;
  if (last_insep) {
    r.verdict.certificate = last_insep->certificate;
    r.d_used = last_insep_d;
  } else {
    r.d_used = last_d;
  }
  r.definitive = false;
  return r;
}

bool verify_separator(const OrderSpec& o, const PtlFormula& f, const Nfa& k,
                      const Nfa& l) {
  std::function<void(const PtlFormula&)> check_atoms =
      [&](const PtlFormula& g) {
        if (g.kind == PtlFormula::Kind::Atom) {
          for (Symbol a : g.atom)
            if (!std::binary_search(o.alphabet.begin(), o.alphabet.end(), a))
              throw Error("formula atom uses a letter outside the alphabet");
        }
        for (const PtlFormula& c : g.children) check_atoms(c);
      };
  check_atoms(f);
  std::vector<Symbol> sigma =
      alphabet_union(alphabet_union(k.alphabet, l.alphabet), o.alphabet);
  Nfa s = formula_language(o, f, sigma);
  return nfa_includes(s, nfa_widen_alphabet(k, sigma)) &&
         nfa_is_empty(nfa_intersect(s, nfa_widen_alphabet(l, sigma)));
}

}  // namespace wqo
