#pragma once

#include <string>

#include "wqo/counter.hpp"
#include "wqo/monoid.hpp"
#include "wqo/order.hpp"
#include "wqo/separability.hpp"

namespace wqo {

// JSON serialization with bit-exact round trips. Symbols are written as
// single-character strings when printable and as numbers otherwise; the empty
// string is the epsilon label.
Nfa nfa_from_json(const std::string& text);
std::string nfa_to_json(const Nfa& a);
CounterAutomaton counter_from_json(const std::string& text);
std::string counter_to_json(const CounterAutomaton& a);
SequentialTransducer transducer_from_json(const std::string& text);
std::string transducer_to_json(const SequentialTransducer& f);
CountingAutomaton counting_from_json(const std::string& text);
std::string counting_to_json(const CountingAutomaton& a);
MonoidMorphism morphism_from_json(const std::string& text);
std::string morphism_to_json(const MonoidMorphism& m);

std::string nfa_to_dot(const Nfa& a);

// Order mini-language: `subword`, `mod:<d>`, `ltt:<k>`, `labeling:<file>`,
// `counting:<file>`, `morphism:<file>`, `via:<file>><inner>`,
// `conj(<o1>,<o2>,...)`. The alphabet seeds the orders that do not carry
// their own; file paths resolve against the working directory.
OrderPtr parse_order(const std::string& text,
                     const std::vector<Symbol>& alphabet);

std::string verdict_to_text(const SeparabilityVerdict& v);
std::string verdict_to_json(const SeparabilityVerdict& v);

std::string read_file(const std::string& path);

}  // namespace wqo
