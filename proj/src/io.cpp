#include "wqo/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wqo/ideal.hpp"
#include "wqo/labeling.hpp"

namespace wqo {

namespace {

using nlohmann::json;

json symbol_to_json(Symbol a) {
  if (a >= 0x21 && a <= 0x7e) return std::string(1, static_cast<char>(a));
  return a;
}

Symbol symbol_from_json(const json& j) {
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    if (s.size() != 1) throw Error("symbol must be a single character: " + s);
    return static_cast<Symbol>(static_cast<unsigned char>(s[0]));
  }
  if (j.is_number_unsigned()) return j.get<Symbol>();
  throw Error("symbol must be a one-character string or a number");
}

Symbol label_from_json(const json& j) {
  if (j.is_string() && j.get_ref<const std::string&>().empty())
    return kEpsilon;
  return symbol_from_json(j);
}

json label_to_json(Symbol a) {
  if (a == kEpsilon) return std::string();
  return symbol_to_json(a);
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error("malformed JSON input");
  return j;
}

std::vector<Symbol> alphabet_from_json(const json& j) {
  std::vector<Symbol> sigma;
  for (const json& s : j) sigma.push_back(symbol_from_json(s));
  std::sort(sigma.begin(), sigma.end());
  sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());
  return sigma;
}

json alphabet_to_json(const std::vector<Symbol>& sigma) {
  json j = json::array();
  for (Symbol a : sigma) j.push_back(symbol_to_json(a));
  return j;
}

struct StateTable {
  std::vector<std::string> names;
  std::map<std::string, State> index;
};

StateTable states_from_json(const json& j) {
  StateTable t;
  for (const json& s : j.at("states")) {
    std::string name = s.get<std::string>();
    if (!t.index.try_emplace(name, static_cast<State>(t.names.size())).second)
      throw Error("duplicate state name: " + name);
    t.names.push_back(std::move(name));
  }
  return t;
}

State state_ref(const StateTable& t, const json& j) {
  std::string name = j.get<std::string>();
  auto it = t.index.find(name);
  if (it == t.index.end()) throw Error("unknown state: " + name);
  return it->second;
}

std::vector<std::string> default_names(uint32_t n, const char* prefix) {
  std::vector<std::string> names;
  for (uint32_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

std::vector<std::string> names_or_default(const Nfa& a) {
  if (a.state_names.size() == a.num_states) return a.state_names;
  return default_names(a.num_states, "q");
}

std::vector<uint64_t> inc_from_json(const json& j,
                                    const std::vector<std::string>& counters) {
  std::vector<uint64_t> inc(counters.size(), 0);
  if (j.is_null()) return inc;
  if (j.is_array()) {
    if (j.size() != counters.size())
      throw Error("increment vector length mismatch");
    for (size_t i = 0; i < counters.size(); ++i) inc[i] = j[i].get<uint64_t>();
    return inc;
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto pos = std::find(counters.begin(), counters.end(), it.key());
    if (pos == counters.end()) throw Error("unknown counter: " + it.key());
    inc[static_cast<size_t>(pos - counters.begin())] = it->get<uint64_t>();
  }
  return inc;
}

json inc_to_json(const std::vector<uint64_t>& inc,
                 const std::vector<std::string>& counters) {
  json j = json::object();
  for (size_t i = 0; i < inc.size(); ++i)
    if (inc[i] != 0) j[counters[i]] = inc[i];
  return j;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Nfa nfa_from_json(const std::string& text) {
  json j = parse(text);
  StateTable t = states_from_json(j);
  Nfa a;
  a.num_states = static_cast<uint32_t>(t.names.size());
  a.state_names = t.names;
  a.alphabet = alphabet_from_json(j.at("alphabet"));
  for (const json& e : j.value("edges", json::array()))
    a.edges.push_back({state_ref(t, e.at("from")),
                       label_from_json(e.at("label")),
                       state_ref(t, e.at("to"))});
  for (const json& s : j.at("initial")) a.initial.push_back(state_ref(t, s));
  for (const json& s : j.at("final")) a.final_states.push_back(state_ref(t, s));
  std::sort(a.initial.begin(), a.initial.end());
  std::sort(a.final_states.begin(), a.final_states.end());
  a.validate();
  return a;
}

std::string nfa_to_json(const Nfa& a) {
  std::vector<std::string> names = names_or_default(a);
  json j;
  j["states"] = names;
  j["alphabet"] = alphabet_to_json(a.alphabet);
  json edges = json::array();
  for (const Edge& e : a.edges)
    edges.push_back({{"from", names[e.from]},
                     {"label", label_to_json(e.label)},
                     {"to", names[e.to]}});
  j["edges"] = std::move(edges);
  json init = json::array(), fin = json::array();
  for (State s : a.initial) init.push_back(names[s]);
  for (State s : a.final_states) fin.push_back(names[s]);
  j["initial"] = std::move(init);
  j["final"] = std::move(fin);
  return j.dump(2);
}

CounterAutomaton counter_from_json(const std::string& text) {
  json j = parse(text);
  StateTable t = states_from_json(j);
  std::vector<std::string> counters;
  for (const json& c : j.value("counters", json::array()))
    counters.push_back(c.get<std::string>());
  CounterAutomaton a;
  a.num_states = static_cast<uint32_t>(t.names.size());
  a.alphabet = alphabet_from_json(j.at("alphabet"));
  a.num_counters = static_cast<uint32_t>(counters.size());
  for (const json& e : j.value("edges", json::array()))
    a.edges.push_back({state_ref(t, e.at("from")),
                       label_from_json(e.at("label")),
                       state_ref(t, e.at("to")),
                       inc_from_json(e.value("inc", json()), counters)});
  for (const json& s : j.at("initial")) a.initial.push_back(state_ref(t, s));
  for (const json& s : j.at("final")) a.final_states.push_back(state_ref(t, s));
  std::sort(a.initial.begin(), a.initial.end());
  std::sort(a.final_states.begin(), a.final_states.end());
  a.validate();
  return a;
}

std::string counter_to_json(const CounterAutomaton& a) {
  std::vector<std::string> names = default_names(a.num_states, "q");
  std::vector<std::string> counters = default_names(a.num_counters, "c");
  json j;
  j["states"] = names;
  j["alphabet"] = alphabet_to_json(a.alphabet);
  j["counters"] = counters;
  json edges = json::array();
  for (const CounterEdge& e : a.edges) {
    json je = {{"from", names[e.from]},
               {"label", label_to_json(e.label)},
               {"to", names[e.to]}};
    json inc = inc_to_json(e.inc, counters);
    if (!inc.empty()) je["inc"] = std::move(inc);
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  json init = json::array(), fin = json::array();
  for (State s : a.initial) init.push_back(names[s]);
  for (State s : a.final_states) fin.push_back(names[s]);
  j["initial"] = std::move(init);
  j["final"] = std::move(fin);
  return j.dump(2);
}

SequentialTransducer transducer_from_json(const std::string& text) {
  json j = parse(text);
  StateTable t = states_from_json(j);
  SequentialTransducer f;
  f.num_states = static_cast<uint32_t>(t.names.size());
  f.in_alphabet = alphabet_from_json(j.at("in_alphabet"));
  f.out_alphabet = alphabet_from_json(j.at("out_alphabet"));
  f.initial = state_ref(t, j.at("initial"));
  size_t n = f.in_alphabet.size();
  f.delta.assign(f.num_states, std::vector<State>(n, UINT32_MAX));
  f.out.assign(f.num_states, std::vector<Word>(n));
  f.final_out.assign(f.num_states, Word{});
  for (const json& e : j.at("edges")) {
    State from = state_ref(t, e.at("from"));
    Symbol a = symbol_from_json(e.at("label"));
    auto it = std::lower_bound(f.in_alphabet.begin(), f.in_alphabet.end(), a);
    if (it == f.in_alphabet.end() || *it != a)
      throw Error("edge label outside the input alphabet");
    size_t i = static_cast<size_t>(it - f.in_alphabet.begin());
    if (f.delta[from][i] != UINT32_MAX)
      throw Error("transducer has two edges for one state and letter");
    f.delta[from][i] = state_ref(t, e.at("to"));
    f.out[from][i] = word_from_string(e.value("out", std::string()));
  }
  for (State q = 0; q < f.num_states; ++q)
    for (size_t i = 0; i < n; ++i)
      if (f.delta[q][i] == UINT32_MAX)
        throw Error("transducer must be complete: state " + t.names[q] +
                    " misses a letter");
  if (j.contains("final_out"))
    for (auto it = j["final_out"].begin(); it != j["final_out"].end(); ++it)
      f.final_out[state_ref(t, json(it.key()))] =
          word_from_string(it->get<std::string>());
  f.validate();
  return f;
}

std::string transducer_to_json(const SequentialTransducer& f) {
  std::vector<std::string> names = default_names(f.num_states, "q");
  json j;
  j["states"] = names;
  j["in_alphabet"] = alphabet_to_json(f.in_alphabet);
  j["out_alphabet"] = alphabet_to_json(f.out_alphabet);
  j["initial"] = names[f.initial];
  json edges = json::array();
  for (State q = 0; q < f.num_states; ++q)
    for (size_t i = 0; i < f.in_alphabet.size(); ++i)
      edges.push_back({{"from", names[q]},
                       {"label", symbol_to_json(f.in_alphabet[i])},
                       {"to", names[f.delta[q][i]]},
                       {"out", word_to_string(f.out[q][i])}});
  j["edges"] = std::move(edges);
  json fo = json::object();
  for (State q = 0; q < f.num_states; ++q)
    if (!f.final_out[q].empty()) fo[names[q]] = word_to_string(f.final_out[q]);
  j["final_out"] = std::move(fo);
  return j.dump(2);
}

CountingAutomaton counting_from_json(const std::string& text) {
  json j = parse(text);
  StateTable t = states_from_json(j);
  std::vector<std::string> counters;
  for (const json& c : j.at("counters")) counters.push_back(c.get<std::string>());
  CountingAutomaton a;
  a.num_states = static_cast<uint32_t>(t.names.size());
  a.alphabet = alphabet_from_json(j.at("alphabet"));
  a.num_counters = static_cast<uint32_t>(counters.size());
  a.counter_names = counters;
  a.initial = state_ref(t, j.at("initial"));
  size_t n = a.alphabet.size();
  a.delta.assign(a.num_states, std::vector<State>(n, UINT32_MAX));
  a.inc.assign(a.num_states, std::vector<std::vector<uint64_t>>(
                                 n, std::vector<uint64_t>(counters.size(), 0)));
  a.final_inc.assign(a.num_states, std::vector<uint64_t>(counters.size(), 0));
  for (const json& e : j.at("edges")) {
    State from = state_ref(t, e.at("from"));
    Symbol x = symbol_from_json(e.at("label"));
    auto it = std::lower_bound(a.alphabet.begin(), a.alphabet.end(), x);
    if (it == a.alphabet.end() || *it != x)
      throw Error("edge label outside the alphabet");
    size_t i = static_cast<size_t>(it - a.alphabet.begin());
    if (a.delta[from][i] != UINT32_MAX)
      throw Error("counting automaton has two edges for one state and letter");
    a.delta[from][i] = state_ref(t, e.at("to"));
    a.inc[from][i] = inc_from_json(e.value("inc", json()), counters);
  }
  for (State q = 0; q < a.num_states; ++q)
    for (size_t i = 0; i < n; ++i)
      if (a.delta[q][i] == UINT32_MAX)
        throw Error("counting automaton must be complete");
  if (j.contains("final_inc"))
    for (auto it = j["final_inc"].begin(); it != j["final_inc"].end(); ++it)
      a.final_inc[state_ref(t, json(it.key()))] =
          inc_from_json(*it, counters);
  a.validate();
  return a;
}

std::string counting_to_json(const CountingAutomaton& a) {
  std::vector<std::string> names = default_names(a.num_states, "q");
  std::vector<std::string> counters = a.counter_names.size() == a.num_counters
                                          ? a.counter_names
                                          : default_names(a.num_counters, "c");
  json j;
  j["states"] = names;
  j["alphabet"] = alphabet_to_json(a.alphabet);
  j["counters"] = counters;
  j["initial"] = names[a.initial];
  json edges = json::array();
  for (State q = 0; q < a.num_states; ++q)
    for (size_t i = 0; i < a.alphabet.size(); ++i) {
      json je = {{"from", names[q]},
                 {"label", symbol_to_json(a.alphabet[i])},
                 {"to", names[a.delta[q][i]]}};
      json inc = inc_to_json(a.inc[q][i], counters);
      if (!inc.empty()) je["inc"] = std::move(inc);
      edges.push_back(std::move(je));
    }
  j["edges"] = std::move(edges);
  json fi = json::object();
  for (State q = 0; q < a.num_states; ++q) {
    json inc = inc_to_json(a.final_inc[q], counters);
    if (!inc.empty()) fi[names[q]] = std::move(inc);
  }
  j["final_inc"] = std::move(fi);
  return j.dump(2);
}

MonoidMorphism morphism_from_json(const std::string& text) {
  json j = parse(text);
  MonoidMorphism m;
  std::vector<std::string> elements;
  for (const json& e : j.at("elements")) elements.push_back(e.get<std::string>());
  auto element_ref = [&](const json& e) {
    std::string name = e.get<std::string>();
    auto it = std::find(elements.begin(), elements.end(), name);
    if (it == elements.end()) throw Error("unknown monoid element: " + name);
    return static_cast<uint32_t>(it - elements.begin());
  };
  m.monoid.size = static_cast<uint32_t>(elements.size());
  m.monoid.element_names = elements;
  m.monoid.identity = element_ref(j.at("identity"));
  for (const json& row : j.at("table")) {
    std::vector<uint32_t> r;
    for (const json& e : row) r.push_back(element_ref(e));
    m.monoid.table.push_back(std::move(r));
  }
  for (auto it = j.at("map").begin(); it != j.at("map").end(); ++it) {
    if (it.key().size() != 1)
      throw Error("morphism map keys must be single letters");
    m.theta[static_cast<Symbol>(static_cast<unsigned char>(it.key()[0]))] =
        element_ref(*it);
  }
  m.validate();
  return m;
}

std::string morphism_to_json(const MonoidMorphism& m) {
  std::vector<std::string> elements =
      m.monoid.element_names.size() == m.monoid.size
          ? m.monoid.element_names
          : default_names(m.monoid.size, "m");
  json j;
  j["elements"] = elements;
  j["identity"] = elements[m.monoid.identity];
  json table = json::array();
  for (const auto& row : m.monoid.table) {
    json r = json::array();
    for (uint32_t e : row) r.push_back(elements[e]);
    table.push_back(std::move(r));
  }
  j["table"] = std::move(table);
  json map = json::object();
  for (const auto& [a, e] : m.theta)
    map[std::string(1, static_cast<char>(a))] = elements[e];
  j["map"] = std::move(map);
  return j.dump(2);
}

std::string nfa_to_dot(const Nfa& a) {
  std::vector<std::string> names = names_or_default(a);
  std::set<State> fin(a.final_states.begin(), a.final_states.end());
  std::ostringstream out;
  out << "digraph nfa {\n  rankdir=LR;\n";
  for (State s = 0; s < a.num_states; ++s)
    out << "  \"" << names[s] << "\" [shape="
        << (fin.count(s) ? "doublecircle" : "circle") << "];\n";
  for (State s : a.initial) {
    out << "  \"_start_" << s << "\" [shape=point];\n";
    out << "  \"_start_" << s << "\" -> \"" << names[s] << "\";\n";
  }
  for (const Edge& e : a.edges) {
    std::string label =
        e.label == kEpsilon
            ? "eps"
            : (e.label >= 0x21 && e.label <= 0x7e
                   ? std::string(1, static_cast<char>(e.label))
                   : std::to_string(e.label));
    out << "  \"" << names[e.from] << "\" -> \"" << names[e.to]
        << "\" [label=\"" << label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

}  // namespace

OrderPtr parse_order(const std::string& text,
                     const std::vector<Symbol>& alphabet) {
  std::string s = strip(text);
  if (s == "subword") return OrderSpec::subword(alphabet);
  if (s.rfind("mod:", 0) == 0) {
    uint32_t d = static_cast<uint32_t>(std::stoul(s.substr(4)));
    return OrderSpec::mod(d, alphabet);
  }
  if (s.rfind("ltt:", 0) == 0) {
    uint32_t k = static_cast<uint32_t>(std::stoul(s.substr(4)));
    return OrderSpec::counting_order(build_pk(k, alphabet));
  }
  if (s.rfind("labeling:", 0) == 0)
    return OrderSpec::labeling(labeling_from_nfa(nfa_from_json(read_file(s.substr(9)))));
  if (s.rfind("counting:", 0) == 0)
    return OrderSpec::counting_order(counting_from_json(read_file(s.substr(9))));
  if (s.rfind("morphism:", 0) == 0)
    return OrderSpec::morphism(morphism_from_json(read_file(s.substr(9))));
  if (s.rfind("via:", 0) == 0) {
    size_t sep = s.find('>', 4);
    if (sep == std::string::npos)
      throw Error("via order needs `via:<file>><inner>`");
    SequentialTransducer f = transducer_from_json(read_file(s.substr(4, sep - 4)));
    OrderPtr inner = parse_order(s.substr(sep + 1), f.out_alphabet);
    return OrderSpec::via(std::move(f), std::move(inner));
  }
  if (s.rfind("conj(", 0) == 0 && s.back() == ')') {
    std::vector<OrderPtr> parts;
    for (const std::string& p : split_top_level(s.substr(5, s.size() - 6)))
      parts.push_back(parse_order(p, alphabet));
    return OrderSpec::conjunction(std::move(parts));
  }
  throw Error("cannot parse order: " + s);
}

std::string verdict_to_text(const SeparabilityVerdict& v) {
  switch (v.status) {
    case SeparabilityVerdict::Status::Separable:
      return "SEPARABLE separator: " + formula_to_string(*v.formula);
    case SeparabilityVerdict::Status::Inseparable:
      return "INSEPARABLE certificate: " + pattern_to_string(*v.certificate);
    case SeparabilityVerdict::Status::Inconclusive:
      return "INCONCLUSIVE budget: " + std::to_string(v.budget);
  }
  throw Error("corrupt verdict");
}

std::string verdict_to_json(const SeparabilityVerdict& v) {
  json j;
  switch (v.status) {
    case SeparabilityVerdict::Status::Separable:
      j["status"] = "separable";
      j["separator"] = formula_to_string(*v.formula);
      break;
    case SeparabilityVerdict::Status::Inseparable:
      j["status"] = "inseparable";
      j["certificate"] = pattern_to_string(*v.certificate);
      break;
    case SeparabilityVerdict::Status::Inconclusive:
      j["status"] = "inconclusive";
      j["budget"] = v.budget;
      break;
  }
  return j.dump(2);
}

}  // namespace wqo
