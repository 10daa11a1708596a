#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "hvg/enumerate.hpp"
#include "hvg/error.hpp"
#include "hvg/graph.hpp"
#include "hvg/realize.hpp"
#include "oracles.hpp"

using hvg::BigInt;
using hvg::Census;
using hvg::Graph;

TEST_CASE("counting functions match independent formulas") {
    std::vector<long long> catalan_start{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
    for (int m = 0; m < static_cast<int>(catalan_start.size()); ++m) {
        CHECK(hvg::catalan(m) == catalan_start[static_cast<std::size_t>(m)]);
    }
    for (int m = 0; m <= 25; ++m) {
        CHECK(hvg::catalan(m) == oracle::catalan_closed(m));
    }

    std::vector<long long> schroder_start{1, 2, 6, 22, 90, 394, 1806, 8558};
    for (int m = 0; m < static_cast<int>(schroder_start.size()); ++m) {
        CHECK(hvg::schroder_large(m) == schroder_start[static_cast<std::size_t>(m)]);
    }
    CHECK(hvg::schroder_little(0) == 1);
    CHECK(hvg::schroder_little(5) == 197);
    for (int m = 0; m <= 25; ++m) {
        CHECK(hvg::schroder_little(m) == oracle::schroder_little_recurrence(m));
        if (m >= 1) CHECK(hvg::schroder_large(m) == 2 * hvg::schroder_little(m));
    }
    // the arithmetic must stay exact far beyond machine words
    CHECK(hvg::catalan(40) == BigInt("2622127042276492108820"));
    CHECK_THROWS_AS(hvg::catalan(-1), hvg::DomainError);
    CHECK_THROWS_AS(hvg::schroder_little(-1), hvg::DomainError);
}

TEST_CASE("the summation identity reproduces every Catalan number") {
    for (int m = 0; m <= 20; ++m) {
        CHECK(hvg::catalan_identity_check(m));
    }
}

TEST_CASE("distinct census counts follow the Catalan numbers") {
    for (int n = 1; n <= 7; ++n) {
        Census brute = hvg::enumerate_distinct_bruteforce(n);
        CHECK(brute.graphs.size() == hvg::catalan(n - 1));
        CHECK(brute.n == n);
        // canonical order, no duplicates
        for (std::size_t i = 1; i < brute.graphs.size(); ++i) {
            CHECK(brute.graphs[i - 1] < brute.graphs[i]);
        }
    }
}

TEST_CASE("full census counts follow the Schroder numbers") {
    for (int n = 2; n <= 7; ++n) {
        Census brute = hvg::enumerate_all_bruteforce(n);
        CHECK(brute.graphs.size() == hvg::schroder_large(n - 2));
        for (std::size_t i = 1; i < brute.graphs.size(); ++i) {
            CHECK(brute.graphs[i - 1] < brute.graphs[i]);
        }
    }
    CHECK(hvg::enumerate_all_bruteforce(1).graphs == std::vector<Graph>{Graph(1)});
}

TEST_CASE("bijective strategies produce the same sets as exhaustion") {
    for (int n = 1; n <= 7; ++n) {
        CHECK(hvg::enumerate_distinct_bijective(n).graphs ==
              hvg::enumerate_distinct_bruteforce(n).graphs);
    }
    for (int n = 2; n <= 7; ++n) {
        CHECK(hvg::enumerate_all_bijective(n).graphs ==
              hvg::enumerate_all_bruteforce(n).graphs);
    }
    CHECK(hvg::enumerate_distinct_bijective(10).graphs.size() == 4862);
}

TEST_CASE("parallel and serial census kernels agree") {
    for (int workers : {1, 2, 5}) {
        CHECK(hvg::enumerate_distinct_bruteforce(6, workers).graphs ==
              hvg::enumerate_distinct_reference(6).graphs);
        CHECK(hvg::enumerate_all_bruteforce(6, workers).graphs ==
              hvg::enumerate_all_reference(6).graphs);
    }
}

TEST_CASE("census size limits") {
    CHECK_THROWS_AS(hvg::enumerate_distinct_bruteforce(10), hvg::SizeError);
    CHECK_THROWS_AS(hvg::enumerate_all_bruteforce(9), hvg::SizeError);
    CHECK_THROWS_AS(hvg::enumerate_distinct_bruteforce(0), hvg::SizeError);
    CHECK_THROWS_AS(hvg::enumerate_all_bijective(1), hvg::SizeError);
    CHECK_THROWS_AS(hvg::vg_census_random(9, 10, 1), hvg::SizeError);
}

TEST_CASE("degree census separates graphs only at seven vertices and up") {
    auto [graphs3, degrees3] = hvg::degree_census(3);
    CHECK(graphs3 == 2);
    CHECK(degrees3 == 2);
    for (int n = 2; n <= 6; ++n) {
        auto [graphs, degrees] = hvg::degree_census(n);
        CHECK(graphs == degrees);
    }
}

TEST_CASE("splitting the distinct census at the first long edge") {
    // the graphs whose lowest-index long reach is s split as a product:
    // prefix patterns on s vertices times a full census on the rest
    for (int n = 3; n <= 7; ++n) {
        std::map<int, std::size_t> by_reach;
        for (const Graph& g : hvg::enumerate_distinct_bruteforce(n).graphs) {
            ++by_reach[g.max_neighbor(1)];
        }
        for (int s = 2; s <= n; ++s) {
            std::size_t with_full_reach = 0;
            for (const Graph& g : hvg::enumerate_distinct_bruteforce(s).graphs) {
                if (g.max_neighbor(1) == s) ++with_full_reach;
            }
            CHECK(by_reach[s] == with_full_reach * hvg::catalan(n - s));
        }
        // reach n alone: as many as distinct graphs one size down
        CHECK(by_reach[n] == hvg::catalan(n - 2));
    }
}

TEST_CASE("the neighbors of the top vertex are the non-nested prefix vertices") {
    for (int n = 3; n <= 7; ++n) {
        for (const Graph& g : hvg::enumerate_distinct_bruteforce(n).graphs) {
            if (g.max_neighbor(1) != n) continue;
            std::set<int> neighbors;
            for (const hvg::Edge& e : g.edges()) {
                if (e.second == n) neighbors.insert(e.first);
            }
            std::set<int> non_nested_prefix;
            for (int v : g.induced_interval(1, n - 1).non_nested()) {
                non_nested_prefix.insert(v);
            }
            CHECK(neighbors == non_nested_prefix);
        }
    }
    // fails outside the distinct universe: the square's vertex 4 sees
    // {1, 3} but every prefix vertex is non-nested
    Graph square(4, {{1, 2}, {1, 4}, {2, 3}, {3, 4}});
    std::set<int> neighbors{1, 3};
    std::vector<int> prefix = square.induced_interval(1, 3).non_nested();
    CHECK(std::set<int>(prefix.begin(), prefix.end()) != neighbors);
}

TEST_CASE("sampled visibility census is deterministic and worker independent") {
    std::size_t one = hvg::vg_census_random(5, 4000, 99, 1000, 1);
    CHECK(hvg::vg_census_random(5, 4000, 99, 1000, 3) == one);
    CHECK(hvg::vg_census_random(5, 4000, 99, 1000, 8) == one);
    CHECK(hvg::vg_census_random(1, 50, 7) == 1);
    CHECK(hvg::vg_census_random(2, 50, 7) == 1);
    CHECK(hvg::vg_census_random(3, 500, 7) == 2);
    CHECK(hvg::vg_census_random(4, 0, 7) == 0); // zero trials find nothing
}

TEST_CASE("generated balanced words cover the whole family") {
    std::set<std::string> seen;
    for (const hvg::ParenString& word : hvg::all_balanced_parens(4)) {
        seen.insert(word.text());
    }
    CHECK(seen.size() == 14);
    CHECK(seen.count("[][][][]") == 1);
    CHECK(seen.count("[[[[]]]]") == 1);
}

TEST_CASE("every induced interval of a census graph is itself constructible") {
    for (int n = 3; n <= 6; ++n) {
        hvg::Census census = hvg::enumerate_all_bruteforce(n);
        for (const Graph& g : census.graphs) {
            for (int i = 1; i < n; ++i) {
                for (int j = i + 1; j <= n; ++j) {
                    CHECK(hvg::is_hvg(g.induced_interval(i, j)));
                }
            }
        }
    }
}
