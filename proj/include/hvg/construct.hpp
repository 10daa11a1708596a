#pragma once

#include <vector>

#include "hvg/graph.hpp"

namespace hvg {

// Finite data sequence (d_1, ..., d_n).  Values may repeat; integer-valued
// entries are stored exactly as doubles.
using DataSequence = std::vector<double>;

// One sample of a timed sequence: measurement `value` taken at time `t`.
struct TimedPoint {
    double t;
    double value;
};

using TimedSequence = std::vector<TimedPoint>;

// Horizontal visibility graph by the definition: {i, j} is an edge iff
// every intermediate value is strictly below both endpoints.  O(n^2)
// worst case.
Graph build_naive(const DataSequence& d);

// Same graph via a single left-to-right pass with a monotone stack of
// indices whose values strictly decrease; O(n) amortized.
Graph build_fast(const DataSequence& d);

// Replace every value by its rank |{j : d_j <= d_i}|.  Preserves the
// horizontal visibility graph and maps into {1, ..., n}.
DataSequence rank_normalize(const DataSequence& d);

// Ordinary (non-horizontal) visibility graph: {i, j} is an edge iff every
// intermediate point lies strictly below the segment joining points i and
// j.  Time stamps must be strictly increasing.  Integral inputs are
// decided in exact integer arithmetic.
Graph build_vg(const TimedSequence& s);

} // namespace hvg
