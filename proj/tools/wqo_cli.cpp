#include <cctype>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wqo/adherence.hpp"
#include "wqo/closure.hpp"
#include "wqo/decompose.hpp"
#include "wqo/io.hpp"
#include "wqo/kappa.hpp"
#include "wqo/pump.hpp"
#include "wqo/separability.hpp"
#include "wqo/unbounded.hpp"

namespace {

using namespace wqo;

struct Options {
  std::string order = "subword";
  std::string alphabet;  // overrides the inferred one
  bool json = false;
  bool dot = false;
  uint32_t budget = kDefaultBudget;
  uint32_t max_d = 64;
};

std::vector<Symbol> infer_alphabet(const Options& opt,
                                   const std::vector<const Nfa*>& automata,
                                   const std::vector<const Word*>& words) {
  if (!opt.alphabet.empty()) {
    Word w = word_from_string(opt.alphabet);
    std::set<Symbol> s(w.begin(), w.end());
    return {s.begin(), s.end()};
  }
  std::set<Symbol> s;
  for (const Nfa* a : automata) s.insert(a->alphabet.begin(), a->alphabet.end());
  for (const Word* w : words) s.insert(w->begin(), w->end());
  if (s.empty()) throw Error("cannot infer an alphabet; pass --alphabet");
  return {s.begin(), s.end()};
}

void print_automaton(const Options& opt, const Nfa& a) {
  if (opt.dot)
    std::cout << nfa_to_dot(a);
  else
    std::cout << nfa_to_json(a) << "\n";
}

void print_bool(bool b) { std::cout << (b ? "true" : "false") << "\n"; }

uint32_t require_mod(const OrderSpec& o) {
  if (o.kind != OrderSpec::Kind::Mod)
    throw Error("this command takes a mod:<d> order");
  return o.mod_d;
}

int dispatch(const std::string& cmd, const Options& opt,
             const std::vector<std::string>& args) {
  auto load = [&](size_t i) { return nfa_from_json(read_file(args.at(i))); };
  // Letters appearing in a pattern literal, for alphabet inference.
  auto pattern_letters = [&](size_t i) {
    Word w;
    for (char c : args.at(i))
      if (std::isalpha(static_cast<unsigned char>(c)))
        w.push_back(static_cast<Symbol>(static_cast<unsigned char>(c)));
    return w;
  };
  auto order_for = [&](const std::vector<const Nfa*>& automata,
                       const std::vector<const Word*>& words) {
    return parse_order(opt.order, infer_alphabet(opt, automata, words));
  };
  // Literals without residue annotations denote plain loop patterns; the two
  // kinds differ for irreducibility and association.
  auto parse_pattern = [&](const std::string& text, uint32_t d) {
    ExtLoopPattern p = parse_pattern_literal(text, d);
    if (text.find('[') == std::string::npos)
      return IdealRep{ext_to_plain(p)};
    return IdealRep{std::move(p)};
  };

  if (cmd == "compare") {
    Word u = word_from_string(args.at(0)), v = word_from_string(args.at(1));
    print_bool(order_leq(*order_for({}, {&u, &v}), u, v));
  } else if (cmd == "up-word") {
    Word w = word_from_string(args.at(0));
    print_automaton(opt, upward_closure_word(*order_for({}, {&w}), w));
  } else if (cmd == "down" || cmd == "up") {
    Nfa l = load(0);
    OrderPtr o = order_for({&l}, {});
    print_automaton(opt, cmd == "down" ? downward_closure(*o, l, opt.budget)
                                       : upward_closure(*o, l));
  } else if (cmd == "ideals") {
    Nfa l = load(0);
    OrderPtr o = order_for({&l}, {});
    for (const IdealRep& i : ideal_decompose(*o, l))
      std::cout << pattern_to_string(i) << "\n";
  } else if (cmd == "member") {
    Word w = word_from_string(args.at(1));
    Word pw = pattern_letters(0);
    OrderPtr o = order_for({}, {&w, &pw});
    IdealRep rep = parse_pattern(args.at(0), require_mod(*o));
    validate_ideal(*o, rep);
    print_bool(nfa_accepts(ideal_to_nfa(*o, rep), w));
  } else if (cmd == "kappa") {
    uint32_t d = static_cast<uint32_t>(std::stoul(args.at(0)));
    KappaProfile prof = kappa(d, word_from_string(args.at(1)));
    for (uint32_t i = 1; i <= d; ++i) {
      std::cout << i << ": ";
      for (Symbol a : prof.at(i)) std::cout << static_cast<char>(a);
      std::cout << "\n";
    }
  } else if (cmd == "period") {
    uint32_t d = static_cast<uint32_t>(std::stoul(args.at(0)));
    std::cout << period(d, word_from_string(args.at(1))) << "\n";
  } else if (cmd == "embed") {
    uint32_t d = static_cast<uint32_t>(std::stoul(args.at(0)));
    auto map = d_embedding(d, word_from_string(args.at(1)),
                           word_from_string(args.at(2)));
    if (!map) {
      std::cout << "none\n";
    } else {
      for (size_t i = 0; i < map->size(); ++i)
        std::cout << (i ? " " : "") << (*map)[i];
      std::cout << "\n";
    }
  } else if (cmd == "irreducible") {
    Word pw = pattern_letters(0);
    OrderPtr o = order_for({}, {&pw});
    IdealRep rep = parse_pattern(args.at(0), require_mod(*o));
    validate_ideal(*o, rep);
    print_bool(pattern_irreducible(*o, rep));
  } else if (cmd == "reduce-pattern") {
    Word pw = pattern_letters(0);
    OrderPtr o = order_for({}, {&pw});
    ExtLoopPattern p = parse_pattern_literal(args.at(0), require_mod(*o));
    std::cout << pattern_to_string(
                     IdealRep{make_extended_irreducible(*o, p)})
              << "\n";
  } else if (cmd == "associate") {
    Nfa l = load(1);
    Word pw = pattern_letters(0);
    OrderPtr o = order_for({&l}, {&pw});
    print_bool(association_check(*o, parse_pattern(args.at(0), require_mod(*o)), l));
  } else if (cmd == "unbounded") {
    CounterAutomaton ca = counter_from_json(read_file(args.at(0)));
    print_bool(counter_unbounded(ca).unbounded);
  } else if (cmd == "sup") {
    Nfa l = load(0);
    print_bool(sup_decide(l, word_from_string(args.at(1))));
  } else if (cmd == "adhere") {
    Nfa l = load(1);
    Word pw = pattern_letters(0);
    OrderPtr o = order_for({&l}, {&pw});
    IdealRep rep = parse_pattern(args.at(0), require_mod(*o));
    validate_ideal(*o, rep);
    print_bool(adherence_member(*o, rep, l));
  } else if (cmd == "separate" || cmd == "is-ptl") {
    Nfa k = load(0);
    SeparabilityVerdict v;
    if (cmd == "separate") {
      Nfa l = load(1);
      v = ptl_separate(*order_for({&k, &l}, {}), k, l, opt.budget);
    } else {
      v = is_ptl(*order_for({&k}, {}), k, opt.budget);
    }
    std::cout << (opt.json ? verdict_to_json(v) : verdict_to_text(v)) << "\n";
    if (v.status == SeparabilityVerdict::Status::Inconclusive) return 2;
  } else if (cmd == "mod-separate") {
    Nfa k = load(0), l = load(1);
    ModSeparateResult r = mod_separate(k, l, opt.max_d, opt.budget);
    std::cout << (opt.json ? verdict_to_json(r.verdict)
                           : verdict_to_text(r.verdict))
              << "\n"
              << "d-used: " << r.d_used
              << (r.definitive ? " (definitive)" : " (not definitive)")
              << "\n";
    if (r.verdict.status == SeparabilityVerdict::Status::Inconclusive)
      return 2;
  } else if (cmd == "mod-bound") {
    std::cout << mod_bound(static_cast<uint32_t>(std::stoul(args.at(0))))
              << "\n";
  } else if (cmd == "pump") {
    // pump <pattern> <automaton> <m> <ell> with --order mod:<d>
    Nfa a = load(1);
    Word pw = pattern_letters(0);
    OrderPtr o = order_for({&a}, {&pw});
    uint32_t d = require_mod(*o);
    ExtLoopPattern p = parse_pattern_literal(args.at(0), d);
    uint32_t m = static_cast<uint32_t>(std::stoul(args.at(2)));
    uint32_t ell = static_cast<uint32_t>(std::stoul(args.at(3)));
    std::cout << pattern_to_string(IdealRep{pump_pattern(a, m, d, p, ell)})
              << "\n";
  } else {
    throw Error("unknown command: " + cmd);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision procedures for word well-quasi-orders"};
  app.require_subcommand(1);
  Options opt;

  struct Sub {
    const char* name;
    const char* help;
    size_t min_args;
  };
  static const Sub subs[] = {
      {"compare", "order_leq on two words: compare <u> <v>", 2},
      {"up-word", "upward closure automaton of a word: up-word <w>", 1},
      {"down", "downward closure of a language: down <aut.json>", 1},
      {"up", "upward closure of a language: up <aut.json>", 1},
      {"ideals", "ideal decomposition of a downward-closed language", 1},
      {"member", "ideal membership: member <pattern> <word>", 2},
      {"kappa", "per-residue letter profile: kappa <d> <w>", 2},
      {"period", "profile period: period <d> <v>", 2},
      {"embed", "residue-preserving embedding: embed <d> <u> <v>", 3},
      {"irreducible", "pattern irreducibility: irreducible <pattern>", 1},
      {"reduce-pattern", "irreducible form: reduce-pattern <pattern>", 1},
      {"associate", "pattern association: associate <pattern> <aut.json>", 2},
      {"unbounded", "counter unboundedness: unbounded <ca.json>", 1},
      {"sup", "simultaneous unboundedness: sup <aut.json> <letters>", 2},
      {"adhere", "adherence membership: adhere <pattern> <aut.json>", 2},
      {"separate", "PTL separability: separate <K.json> <L.json>", 2},
      {"is-ptl", "PTL membership: is-ptl <L.json>", 1},
      {"mod-separate", "modular separability: mod-separate <K.json> <L.json>",
       2},
      {"mod-bound", "definitive modulus 2*(m^3)!: mod-bound <m>", 1},
      {"pump", "pattern pumping: pump <pattern> <aut.json> <m> <ell>", 4},
  };

  std::string chosen;
  std::vector<std::string> args;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--order", opt.order, "order mini-language expression");
    sub->add_option("--alphabet", opt.alphabet, "explicit alphabet letters");
    sub->add_flag("--json", opt.json, "structured output");
    sub->add_flag("--dot", opt.dot, "DOT output for automata");
    sub->add_option("--budget", opt.budget, "search budget");
    sub->add_option("--max-d", opt.max_d, "modulus feasibility cap");
    sub->add_option("args", args, "positional arguments")
        ->expected(static_cast<int>(s.min_args), -1);
    sub->callback([&chosen, name = std::string(s.name)] { chosen = name; });
  }

  CLI11_PARSE(app, argc, argv);
  try {
    return dispatch(chosen, opt, args);
  } catch (const Inconclusive& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
