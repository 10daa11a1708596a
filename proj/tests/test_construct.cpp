#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "hvg/construct.hpp"
#include "hvg/error.hpp"
#include "hvg/graph.hpp"
#include "oracles.hpp"

using hvg::DataSequence;
using hvg::Edge;
using hvg::Graph;

TEST_CASE("worked construction examples") {
    Graph g = hvg::build_naive({4, 3, 1, 2, 5});
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {4, 5}});
    CHECK(hvg::build_fast({4, 3, 1, 2, 5}) == g);

    // ties block visibility: (3, 1, 1, 4) keeps {1,4} but not {1,3}
    Graph tied = hvg::build_fast({3, 1, 1, 4});
    CHECK(tied.edges() == std::vector<Edge>{{1, 2}, {1, 4}, {2, 3}, {3, 4}});

    CHECK(hvg::build_fast({7}) == Graph(1));
    CHECK(hvg::build_fast({5, 5}) == Graph::path(2));
    CHECK(hvg::build_fast({1, 2, 3, 4}) == Graph::path(4));
    CHECK(hvg::build_fast({2, 2, 2}) == Graph::path(3));
}

TEST_CASE("constructions reject empty and non-finite input") {
    CHECK_THROWS_AS(hvg::build_fast({}), hvg::DomainError);
    CHECK_THROWS_AS(hvg::build_naive({}), hvg::DomainError);
    CHECK_THROWS_AS(hvg::build_fast({1, std::nan("")}), hvg::DomainError);
    CHECK_THROWS_AS(hvg::build_fast({std::numeric_limits<double>::infinity()}),
                    hvg::DomainError);
}

TEST_CASE("both constructions match the definitional scan exhaustively") {
    for (int n = 1; n <= 5; ++n) {
        long long total = 1;
        for (int i = 0; i < n; ++i) total *= n;
        DataSequence d(static_cast<std::size_t>(n));
        for (long long idx = 0; idx < total; ++idx) {
            long long rest = idx;
            for (int pos = n - 1; pos >= 0; --pos) {
                d[static_cast<std::size_t>(pos)] = static_cast<double>(rest % n + 1);
                rest /= n;
            }
            Graph expected = oracle::build_definitional(d);
            CHECK(hvg::build_naive(d) == expected);
            CHECK(hvg::build_fast(d) == expected);
        }
    }
}

TEST_CASE("constructions agree on long random input with duplicates") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 512);
        int values = 2 + static_cast<int>(rng() % 63);
        DataSequence d = oracle::random_sequence(n, values, rng);
        CHECK(hvg::build_naive(d) == hvg::build_fast(d));
    }
}

TEST_CASE("structural facts hold on random graphs") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 40);
        Graph g = hvg::build_fast(oracle::random_sequence(n, 8, rng));
        for (int v = 1; v + 1 <= n; ++v) CHECK(g.has_edge(v, v + 1));
        CHECK(g.edge_count() <= static_cast<std::size_t>(std::max(2 * n - 3, 0)));
        CHECK(g.is_non_crossing());
    }
}

TEST_CASE("construction is translation and scale invariant") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        DataSequence d = oracle::random_sequence(30, 10, rng);
        DataSequence shifted = d, scaled = d;
        for (double& v : shifted) v += 1234.5;
        for (double& v : scaled) v *= 3.25;
        Graph g = hvg::build_fast(d);
        CHECK(hvg::build_fast(shifted) == g);
        CHECK(hvg::build_fast(scaled) == g);
    }
}

TEST_CASE("rank normalization preserves the graph and the order pattern") {
    // rank of v = how many entries are <= v, so ties share a rank
    DataSequence d{3.5, -2, 7, 0.25, 7, 3.5};
    DataSequence ranks = hvg::rank_normalize(d);
    CHECK(ranks == DataSequence{4, 1, 6, 2, 6, 4});
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 100; ++trial) {
        DataSequence random = oracle::random_sequence(25, 12, rng);
        DataSequence normalized = hvg::rank_normalize(random);
        CHECK(hvg::build_fast(normalized) == hvg::build_fast(random));
        for (double v : normalized) {
            CHECK(v >= 1);
            CHECK(v <= 25);
        }
    }
}

TEST_CASE("visibility graphs of timed points") {
    // equally spaced (2, 1, 2): the dip keeps the segment clear
    hvg::TimedSequence points{{1, 2}, {2, 1}, {3, 2}};
    Graph g = hvg::build_vg(points);
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});

    // collinear middle point blocks: (1,1), (2,2), (3,3)
    hvg::TimedSequence collinear{{1, 1}, {2, 2}, {3, 3}};
    CHECK(hvg::build_vg(collinear) == Graph::path(3));

    hvg::TimedSequence unordered{{2, 1}, {1, 2}};
    CHECK_THROWS_AS(hvg::build_vg(unordered), hvg::DomainError);
    hvg::TimedSequence stalled{{1, 1}, {1, 2}};
    CHECK_THROWS_AS(hvg::build_vg(stalled), hvg::DomainError);
    CHECK_THROWS_AS(hvg::build_vg({}), hvg::DomainError);
}

TEST_CASE("horizontal visibility implies ordinary visibility at unit spacing") {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 20);
        DataSequence d = oracle::random_sequence(n, 10, rng);
        hvg::TimedSequence points(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            points[static_cast<std::size_t>(i)] = {static_cast<double>(i + 1),
                                                   d[static_cast<std::size_t>(i)]};
        }
        Graph horizontal = hvg::build_fast(d);
        Graph ordinary = hvg::build_vg(points);
        for (const Edge& e : horizontal.edges()) {
            CHECK(ordinary.has_edge(e.first, e.second));
        }
    }
}

TEST_CASE("exact and floating segment tests agree on integral input") {
    std::mt19937_64 rng(26);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 12);
        hvg::TimedSequence exact(static_cast<std::size_t>(n));
        hvg::TimedSequence offset(static_cast<std::size_t>(n));
        double t = 0;
        for (int i = 0; i < n; ++i) {
            t += 1 + static_cast<double>(rng() % 4);
            double v = static_cast<double>(rng() % 50);
            exact[static_cast<std::size_t>(i)] = {t, v};
            // nudging values off the integers forces the floating path
            offset[static_cast<std::size_t>(i)] = {t, v + 0.5};
        }
        CHECK(hvg::build_vg(exact) == hvg::build_vg(offset));
    }
}
