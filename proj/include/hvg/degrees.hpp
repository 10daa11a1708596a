#pragma once

#include <vector>

#include "hvg/graph.hpp"

namespace hvg {

// Ordered degree sequence (delta_1, ..., delta_n).
using DegreeSequence = std::vector<int>;

// One reduction step: the vertex removed (by its original label) and the
// two protocolled edges incident to it.
struct ReductionStep {
    int removed_label;
    Edge left;
    Edge right;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    std::vector<int> chain_labels;  // survivors, joined left to right at the end
};

// 1-based position of the next removable degree-2 entry: position 2 when
// delta_2 = 2 and delta_1 != 1, otherwise the smallest i in [3, n-1] with
// delta_i = 2 and delta_{i-1} >= 3.  Throws when no position qualifies.
int select_removable_two(const DegreeSequence& deltas);

// The unique graph with a pairwise-distinct realization whose ordered
// degree sequence equals deltas; throws when no such graph exists.
Graph from_degree_sequence(const DegreeSequence& deltas);

// Same, also reporting which vertex was peeled at each step.
std::pair<Graph, ReductionTrace> from_degree_sequence_traced(const DegreeSequence& deltas);

} // namespace hvg
