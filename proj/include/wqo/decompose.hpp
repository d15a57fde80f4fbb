#pragma once

#include "wqo/ideal.hpp"

namespace wqo {

// Decomposition of a downward-closed regular language into finitely many
// inclusion-maximal, pairwise incomparable ideals whose union is the input.
// Supported for the subword, labeling and Mod orders. The input language must
// be downward closed for o; this is the caller's responsibility (see
// sample_downward_closed for a randomized check).
std::vector<IdealRep> ideal_decompose(const OrderSpec& o, const Nfa& l);

// Randomized validator for the ideal_decompose precondition: samples accepted
// words up to the length bound and checks all their minorants are accepted.
bool sample_downward_closed(const OrderSpec& o, const Nfa& l, size_t len_bound);

}  // namespace wqo
