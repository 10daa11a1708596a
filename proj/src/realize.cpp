#include "hvg/realize.hpp"

#include <algorithm>
#include <numeric>

#include "hvg/error.hpp"

namespace hvg {

namespace {

DataSequence nesting_realization_unchecked(const Graph& g) {
    const std::vector<int> profile = g.nesting_profile();
    DataSequence d(profile.size());
    for (std::size_t i = 0; i < profile.size(); ++i)
        d[i] = static_cast<double>(g.size() - profile[i]);
    return d;
}

void require_hvg(const Graph& g) {
    if (!is_hvg(g)) throw DomainError("graph is not a horizontal visibility graph");
}

} // namespace

bool is_hvg(const Graph& g) {
    return build_fast(nesting_realization_unchecked(g)) == g;
}

DataSequence nesting_realization(const Graph& g) {
    require_hvg(g);
    return nesting_realization_unchecked(g);
}

DataSequence standard_sequence(const Graph& g) {
    require_hvg(g);
    const std::vector<int> profile = g.nesting_profile();
    std::vector<int> order(g.size());
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (profile[a - 1] != profile[b - 1]) return profile[a - 1] > profile[b - 1];
        return a > b;
    });
    DataSequence d(g.size());
    for (int rank = 1; rank <= g.size(); ++rank)
        d[order[rank - 1] - 1] = static_cast<double>(rank);
    return d;
}

bool is_distinct_realizable(const Graph& g) {
    return build_fast(standard_sequence(g)) == g;
}

} // namespace hvg
