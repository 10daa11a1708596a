#include <doctest.h>

#include <vector>

#include "hvg/construct.hpp"
#include "hvg/enumerate.hpp"
#include "hvg/error.hpp"
#include "hvg/graph.hpp"
#include "hvg/realize.hpp"

using hvg::DataSequence;
using hvg::Graph;

TEST_CASE("standard sequence of worked examples") {
    // the 7-vertex example graph has two natural realizations; the
    // canonical one orders ties right to left
    Graph g = hvg::build_fast({7, 4, 2, 3, 6, 1, 5});
    DataSequence standard = hvg::standard_sequence(g);
    CHECK(standard == DataSequence{7, 4, 1, 2, 6, 3, 5});
    CHECK(hvg::build_fast(standard) == g);
    CHECK(hvg::build_fast({7, 4, 1, 2, 6, 3, 5}) == g); // both sequences realize it

    Graph square = hvg::build_fast({3, 1, 1, 4});
    CHECK(hvg::standard_sequence(square) == DataSequence{4, 2, 1, 3});

    CHECK(hvg::standard_sequence(Graph::path(4)) == DataSequence{4, 3, 2, 1});
    CHECK(hvg::standard_sequence(Graph(1)) == DataSequence{1});
}

TEST_CASE("standard sequence starts at the full height") {
    for (const Graph& g : hvg::enumerate_all_bruteforce(6).graphs) {
        DataSequence d = hvg::standard_sequence(g);
        CHECK(d.front() == 6);
        std::vector<int> profile = g.nesting_profile();
        CHECK(d.back() == 6 - static_cast<int>(g.non_nested().size()) + 1);
        // values decrease along falling nesting degree
        for (int v = 1; v <= 6; ++v) {
            for (int w = 1; w <= 6; ++w) {
                if (profile[v - 1] < profile[w - 1]) {
                    CHECK(d[static_cast<std::size_t>(v - 1)] >
                          d[static_cast<std::size_t>(w - 1)]);
                }
            }
        }
    }
}

TEST_CASE("nesting realization of worked examples") {
    Graph square = hvg::build_fast({3, 1, 1, 4});
    CHECK(hvg::nesting_realization(square) == DataSequence{4, 3, 3, 4});
    CHECK(hvg::build_fast({4, 3, 3, 4}) == square);
    CHECK(hvg::nesting_realization(Graph(1)) == DataSequence{1});
}

TEST_CASE("realizations rebuild every census graph") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : hvg::enumerate_all_bruteforce(n).graphs) {
            CHECK(hvg::build_fast(hvg::nesting_realization(g)) == g);
        }
        for (const Graph& g : hvg::enumerate_distinct_bruteforce(n).graphs) {
            DataSequence standard = hvg::standard_sequence(g);
            CHECK(hvg::build_fast(standard) == g);
            CHECK(hvg::is_distinct_realizable(g));
        }
    }
}

TEST_CASE("distinct realizability separates the two universes") {
    Graph square = hvg::build_fast({3, 1, 1, 4});
    CHECK_FALSE(hvg::is_distinct_realizable(square));

    // same degree sequence (2,2,3,2,3,2,2), opposite answers
    Graph nested_pair(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 7}, {3, 5}});
    Graph sided_pair(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}, {5, 7}});
    CHECK(nested_pair.degree_sequence() == sided_pair.degree_sequence());
    CHECK(hvg::is_hvg(nested_pair));
    CHECK(hvg::is_hvg(sided_pair));
    CHECK_FALSE(hvg::is_distinct_realizable(nested_pair));
    CHECK(hvg::is_distinct_realizable(sided_pair));
    CHECK(hvg::build_fast({7, 2, 6, 5, 4, 1, 3}) == sided_pair);
}

TEST_CASE("non-members are rejected") {
    Graph star(4, {{1, 2}, {1, 3}, {1, 4}});
    CHECK_THROWS_AS(hvg::standard_sequence(star), hvg::DomainError);
    CHECK_THROWS_AS(hvg::nesting_realization(star), hvg::DomainError);
    CHECK_THROWS_AS(hvg::is_distinct_realizable(star), hvg::DomainError);
    CHECK_THROWS_AS(hvg::nesting_realization(Graph(2)), hvg::DomainError);
}

TEST_CASE("every census size stays within the counting bounds") {
    // cross-check the two universes pointwise: distinct-realizable
    // membership inside the full census matches the distinct census
    for (int n = 2; n <= 6; ++n) {
        hvg::Census all = hvg::enumerate_all_bruteforce(n);
        std::size_t realizable = 0;
        for (const Graph& g : all.graphs) {
            if (hvg::is_distinct_realizable(g)) ++realizable;
        }
        CHECK(realizable == hvg::enumerate_distinct_bruteforce(n).graphs.size());
    }
}
