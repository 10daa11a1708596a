#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hvg/bijections.hpp"
#include "hvg/graph.hpp"

namespace hvg {

using BigInt = boost::multiprecision::cpp_int;

enum class CensusProvenance { brute_force, bijective };

// Every horizontal visibility graph on n vertices, sorted canonically
// and free of duplicates regardless of how many workers produced it.
struct Census {
    int n = 0;
    std::vector<Graph> graphs;
    CensusProvenance provenance = CensusProvenance::brute_force;
};

// Graphs of all pairwise-distinct sequences, via every permutation of
// {1..n}.  Supported for 1 <= n <= 9.  threads <= 0 picks the OpenMP
// default.
Census enumerate_distinct_bruteforce(int n, int threads = 0);

// Graphs of all sequences with values in {1..n} (every graph on n
// vertices arises this way).  Supported for 1 <= n <= 8.
Census enumerate_all_bruteforce(int n, int threads = 0);

// Single-threaded reference implementations of the two census kernels,
// kept for testing and benchmarking the parallel paths against.
Census enumerate_distinct_reference(int n);
Census enumerate_all_reference(int n);

// Censuses generated through the encodings instead of exhaustion:
// balanced-parentheses words for the distinct universe, bracketings plus
// the top-edge toggle for the full one (n >= 2).
Census enumerate_distinct_bijective(int n);
Census enumerate_all_bijective(int n);

// All balanced words with the given number of bracket pairs.
std::vector<ParenString> all_balanced_parens(int pairs);

// All bracketings of a row of `len` letters, in normal form.
std::vector<Bracketing> all_bracketings(int len);

// Exact counting.  catalan(m) is the number of binary bracketings /
// balanced words with m pairs; schroder_large(m) counts the full census
// on m+2 vertices; schroder_little(m) = schroder_large(m)/2 for m >= 1.
BigInt catalan(int m);
BigInt schroder_large(int m);
BigInt schroder_little(int m);

// Verifies catalan(m) against the independent summation formula
// 1 + sum_{k=3}^{m+1} 3/(2k-3) * binom(2k-3, k); every summand must
// divide exactly or an Error is thrown.
bool catalan_identity_check(int m);

// (number of graphs, number of distinct ordered degree sequences) over
// the full census on n vertices.
std::pair<std::size_t, std::size_t> degree_census(int n, int threads = 0);
std::pair<std::size_t, std::size_t> degree_census(const Census& census);

// Distinct ordinary visibility graphs found among `trials` random
// integer sequences with values uniform in [0, value_max] sampled at
// times t_i = i.  Deterministic for a fixed seed, any worker count.
std::size_t vg_census_random(int n, long long trials, std::uint64_t seed,
                             long long value_max = 1000000000LL, int threads = 0);

} // namespace hvg
