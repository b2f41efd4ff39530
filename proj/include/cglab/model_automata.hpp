#pragma once

#include "cglab/dfa.hpp"
#include "cglab/group_model.hpp"

namespace cglab {

SymbolTable model_symbols(const GroupModel& g);

// Accepts exactly the geodesic normal forms: freely reduced words for free
// groups, alternating words for free products.
Dfa geodesic_dfa(const GroupModel& g);

// Accepts the words of minimal length in their conjugacy class: cyclically
// reduced (free groups) / cyclically alternating (free products) words.
Dfa geo_conj_dfa(const GroupModel& g);

}  // namespace cglab
