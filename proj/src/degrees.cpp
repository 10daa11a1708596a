#include "hvg/degrees.hpp"

#include <numeric>
#include <string>

#include "hvg/error.hpp"
#include "hvg/realize.hpp"

namespace hvg {

namespace {

[[noreturn]] void reject(const std::string& why) {
    throw DomainError("invalid degree sequence: " + why);
}

bool is_base_shape(const DegreeSequence& cur) {
    if (cur.front() != 1 || cur.back() != 1) return false;
    for (std::size_t i = 1; i + 1 < cur.size(); ++i)
        if (cur[i] != 2) return false;
    return true;
}

} // namespace

int select_removable_two(const DegreeSequence& deltas) {
    const int n = static_cast<int>(deltas.size());
    if (n < 3) reject("no interior position in a sequence of length " + std::to_string(n));
    if (deltas[1] == 2 && deltas[0] != 1) return 2;
    for (int i = 3; i <= n - 1; ++i)
        if (deltas[i - 1] == 2 && deltas[i - 2] >= 3) return i;
    reject("no removable degree-2 entry");
}

std::pair<Graph, ReductionTrace> from_degree_sequence_traced(const DegreeSequence& deltas) {
    const int n = static_cast<int>(deltas.size());
    if (n == 0) reject("empty");
    if (n == 1) {
        if (deltas[0] != 0) reject("a single vertex has degree 0");
        return {Graph::path(1), {}};
    }
    for (int v : deltas)
        if (v < 1 || v > n - 1)
            reject("entry " + std::to_string(v) + " outside [1," + std::to_string(n - 1) + "]");

    DegreeSequence cur = deltas;
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    std::vector<Edge> edges;
    ReductionTrace trace;

    while (!is_base_shape(cur)) {
        const int p = select_removable_two(cur);  // 1-based, interior
        const Edge left{labels[p - 2], labels[p - 1]};
        const Edge right{labels[p - 1], labels[p]};
        edges.push_back(left);
        edges.push_back(right);
        trace.steps.push_back({labels[p - 1], left, right});
        if (--cur[p - 2] < 1 || --cur[p] < 1) reject("neighbor degree dropped below 1");
        cur.erase(cur.begin() + (p - 1));
        labels.erase(labels.begin() + (p - 1));
    }

    // Base shape (1, 2, ..., 2, 1): join the survivors into a chain.
    trace.chain_labels = labels;
    for (std::size_t i = 0; i + 1 < labels.size(); ++i)
        edges.emplace_back(labels[i], labels[i + 1]);

    Graph g(n, std::move(edges));
    if (g.degree_sequence() != deltas) reject("reduction does not reproduce the input degrees");
    if (!is_hvg(g) || !is_distinct_realizable(g))
        reject("no graph with a pairwise-distinct realization has these degrees");
    return {std::move(g), std::move(trace)};
}

Graph from_degree_sequence(const DegreeSequence& deltas) {
    return from_degree_sequence_traced(deltas).first;
}

} // namespace hvg
