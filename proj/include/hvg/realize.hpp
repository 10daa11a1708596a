#pragma once

#include "hvg/construct.hpp"
#include "hvg/graph.hpp"

namespace hvg {

// Canonical pairwise-distinct realization: vertices ordered by decreasing
// nesting degree (ties broken toward the larger vertex index), the vertex
// at rank r receiving value r.  Guarantees d_1 = n.  Rebuilding from the
// result recovers g exactly when g has a pairwise-distinct realization;
// throws when g is not a horizontal visibility graph at all.
DataSequence standard_sequence(const Graph& g);

// Realization d_i = n - nesting_degree(i).  Recovers every horizontal
// visibility graph, duplicates permitted.  Throws when g is not one.
DataSequence nesting_realization(const Graph& g);

// True when some pairwise-distinct sequence realizes g, decided by
// rebuilding from standard_sequence(g).  Throws when g is not a
// horizontal visibility graph.
bool is_distinct_realizable(const Graph& g);

} // namespace hvg
