#include "hvg/enumerate.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <string>

#include <omp.h>

#include "hvg/construct.hpp"
#include "hvg/degrees.hpp"
#include "hvg/error.hpp"

namespace hvg {

namespace {

constexpr int kDistinctLimit = 9;
constexpr int kAllLimit = 8;

void check_census_size(int n, int limit, const char* universe) {
    if (n < 1) {
        throw SizeError("census needs at least one vertex, got " + std::to_string(n));
    }
    if (n > limit) {
        throw SizeError(std::string("exhaustive census over the ") + universe +
                        " universe is capped at " + std::to_string(limit) +
                        " vertices, got " + std::to_string(n));
    }
}

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    int fallback = omp_get_max_threads();
    return fallback > 0 ? fallback : 1;
}

// idx in [0, n!) -> idx-th permutation of {1..n} in lexicographic order.
void nth_permutation(long long idx, int n, DataSequence& out) {
    std::array<long long, 10> fact{};
    fact[0] = 1;
    for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
    std::array<int, 10> avail{};
    for (int i = 0; i < n; ++i) avail[i] = i + 1;
    int left = n;
    for (int pos = 0; pos < n; ++pos) {
        long long f = fact[left - 1];
        int pick = static_cast<int>(idx / f);
        idx %= f;
        out[pos] = avail[pick];
        for (int i = pick; i + 1 < left; ++i) avail[i] = avail[i + 1];
        --left;
    }
}

// idx in [0, n^n) -> word over {1..n} of length n (base-n digits).
void nth_word(long long idx, int n, DataSequence& out) {
    for (int pos = n - 1; pos >= 0; --pos) {
        out[pos] = static_cast<double>(idx % n + 1);
        idx /= n;
    }
}

long long power_count(int n) {
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= n;
    return total;
}

long long factorial_count(int n) {
    long long total = 1;
    for (int i = 2; i <= n; ++i) total *= i;
    return total;
}

template <typename Decode>
Census exhaust_parallel(int n, long long total, int threads, Decode decode) {
    int t = resolve_threads(threads);
    std::vector<std::set<Graph>> locals(static_cast<std::size_t>(t));
#pragma omp parallel num_threads(t)
    {
        std::set<Graph>& mine = locals[static_cast<std::size_t>(omp_get_thread_num())];
        DataSequence d(static_cast<std::size_t>(n));
#pragma omp for schedule(static)
        for (long long idx = 0; idx < total; ++idx) {
            decode(idx, n, d);
            mine.insert(build_fast(d));
        }
    }
    std::set<Graph> merged;
    for (const auto& local : locals) merged.insert(local.begin(), local.end());
    Census census;
    census.n = n;
    census.graphs.assign(merged.begin(), merged.end());
    census.provenance = CensusProvenance::brute_force;
    return census;
}

BigInt binomial(int top, int bottom) {
    if (bottom < 0 || bottom > top) return 0;
    BigInt result = 1;
    for (int i = 1; i <= bottom; ++i) {
        result *= top - bottom + i;
        result /= i; // exact at every step of the running product
    }
    return result;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t block) {
    // splitmix64 finalizer over (seed, block) so every block gets an
    // independent stream no matter how trials are split across workers
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (block + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

Census enumerate_distinct_bruteforce(int n, int threads) {
    check_census_size(n, kDistinctLimit, "pairwise-distinct");
    return exhaust_parallel(n, factorial_count(n), threads, nth_permutation);
}

Census enumerate_all_bruteforce(int n, int threads) {
    check_census_size(n, kAllLimit, "unrestricted");
    return exhaust_parallel(n, power_count(n), threads, nth_word);
}

Census enumerate_distinct_reference(int n) {
    check_census_size(n, kDistinctLimit, "pairwise-distinct");
    DataSequence d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = i + 1;
    std::set<Graph> seen;
    do {
        seen.insert(build_fast(d));
    } while (std::next_permutation(d.begin(), d.end()));
    Census census;
    census.n = n;
    census.graphs.assign(seen.begin(), seen.end());
    census.provenance = CensusProvenance::brute_force;
    return census;
}

Census enumerate_all_reference(int n) {
    check_census_size(n, kAllLimit, "unrestricted");
    long long total = power_count(n);
    DataSequence d(static_cast<std::size_t>(n));
    std::set<Graph> seen;
    for (long long idx = 0; idx < total; ++idx) {
        nth_word(idx, n, d);
        seen.insert(build_fast(d));
    }
    Census census;
    census.n = n;
    census.graphs.assign(seen.begin(), seen.end());
    census.provenance = CensusProvenance::brute_force;
    return census;
}

Census enumerate_distinct_bijective(int n) {
    if (n < 1) {
        throw SizeError("census needs at least one vertex, got " + std::to_string(n));
    }
    std::set<Graph> seen;
    for (const ParenString& word : all_balanced_parens(n - 1)) {
        seen.insert(psi_inv(word));
    }
    Census census;
    census.n = n;
    census.graphs.assign(seen.begin(), seen.end());
    census.provenance = CensusProvenance::bijective;
    return census;
}

Census enumerate_all_bijective(int n) {
    if (n < 2) {
        throw SizeError("the encoding-driven full census needs at least two vertices, got " +
                        std::to_string(n));
    }
    std::set<Graph> seen;
    if (n == 2) {
        seen.insert(Graph::path(2));
    } else {
        for (const Bracketing& b : all_bracketings(n - 1)) {
            Graph g = xi(b);
            seen.insert(toggle_top_edge(g));
            seen.insert(std::move(g));
        }
    }
    Census census;
    census.n = n;
    census.graphs.assign(seen.begin(), seen.end());
    census.provenance = CensusProvenance::bijective;
    return census;
}

std::vector<ParenString> all_balanced_parens(int pairs) {
    if (pairs < 0) {
        throw DomainError("pair count must be non-negative, got " + std::to_string(pairs));
    }
    // dp[m] holds every balanced word with m pairs, built as "[a]b"
    std::vector<std::vector<std::string>> dp(static_cast<std::size_t>(pairs) + 1);
    dp[0] = {""};
    for (int m = 1; m <= pairs; ++m) {
        auto& words = dp[static_cast<std::size_t>(m)];
        for (int inner = 0; inner < m; ++inner) {
            for (const std::string& a : dp[static_cast<std::size_t>(inner)]) {
                for (const std::string& b : dp[static_cast<std::size_t>(m - 1 - inner)]) {
                    words.push_back("[" + a + "]" + b);
                }
            }
        }
    }
    std::vector<ParenString> out;
    out.reserve(dp[static_cast<std::size_t>(pairs)].size());
    for (std::string& word : dp[static_cast<std::size_t>(pairs)]) {
        out.push_back(ParenString::trusted(std::move(word)));
    }
    return out;
}

std::vector<Bracketing> all_bracketings(int len) {
    if (len < 1) {
        throw DomainError("bracketings need at least one letter, got " + std::to_string(len));
    }
    // dp[L] = all normal-form bracketings of L letters; groups of a
    // longer bracketing draw on the shorter entries already filled in
    std::vector<std::vector<Bracketing>> dp(static_cast<std::size_t>(len) + 1);
    for (int length = 1; length <= len; ++length) {
        std::vector<Bracketing::Block> cur;
        auto extend = [&](auto&& self, int remaining, bool prev_run) -> void {
            if (remaining == 0) {
                if (cur.size() == 1 && cur[0].run == 0) return; // outer brackets omitted
                dp[static_cast<std::size_t>(length)].push_back(Bracketing(cur));
                return;
            }
            if (!prev_run) {
                for (int r = 1; r <= remaining; ++r) {
                    Bracketing::Block block;
                    block.run = r;
                    cur.push_back(std::move(block));
                    self(self, remaining - r, true);
                    cur.pop_back();
                }
            }
            for (int glen = 2; glen <= remaining; ++glen) {
                for (const Bracketing& sub : dp[static_cast<std::size_t>(glen)]) {
                    Bracketing::Block block;
                    block.sub.push_back(sub);
                    cur.push_back(std::move(block));
                    self(self, remaining - glen, false);
                    cur.pop_back();
                }
            }
        };
        extend(extend, length, false);
    }
    return dp[static_cast<std::size_t>(len)];
}

BigInt catalan(int m) {
    if (m < 0) throw DomainError("catalan index must be non-negative, got " + std::to_string(m));
    std::vector<BigInt> c(static_cast<std::size_t>(m) + 1);
    c[0] = 1;
    for (int k = 0; k < m; ++k) {
        BigInt next = 0;
        for (int i = 0; i <= k; ++i) {
            next += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k - i)];
        }
        c[static_cast<std::size_t>(k) + 1] = next;
    }
    return c[static_cast<std::size_t>(m)];
}

BigInt schroder_large(int m) {
    if (m < 0) throw DomainError("schroder index must be non-negative, got " + std::to_string(m));
    std::vector<BigInt> r(static_cast<std::size_t>(m) + 1);
    r[0] = 1;
    for (int k = 0; k < m; ++k) {
        BigInt next = r[static_cast<std::size_t>(k)];
        for (int i = 0; i <= k; ++i) {
            next += r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(k - i)];
        }
        r[static_cast<std::size_t>(k) + 1] = next;
    }
    return r[static_cast<std::size_t>(m)];
}

BigInt schroder_little(int m) {
    if (m < 0) throw DomainError("schroder index must be non-negative, got " + std::to_string(m));
    if (m == 0) return 1;
    BigInt big = schroder_large(m);
    if (big % 2 != 0) {
        throw Error("arithmetic integrity failure: schroder number at index " +
                    std::to_string(m) + " is odd");
    }
    return big / 2;
}

bool catalan_identity_check(int m) {
    if (m < 0) throw DomainError("catalan index must be non-negative, got " + std::to_string(m));
    BigInt total = 1;
    for (int k = 3; k <= m + 1; ++k) {
        BigInt numerator = 3 * binomial(2 * k - 3, k);
        if (numerator % (2 * k - 3) != 0) {
            throw Error("arithmetic integrity failure: summand at k=" + std::to_string(k) +
                        " does not divide exactly");
        }
        total += numerator / (2 * k - 3);
    }
    return total == catalan(m);
}

std::pair<std::size_t, std::size_t> degree_census(const Census& census) {
    std::set<DegreeSequence> degrees;
    for (const Graph& g : census.graphs) degrees.insert(g.degree_sequence());
    return {census.graphs.size(), degrees.size()};
}

std::pair<std::size_t, std::size_t> degree_census(int n, int threads) {
    return degree_census(enumerate_all_bruteforce(n, threads));
}

std::size_t vg_census_random(int n, long long trials, std::uint64_t seed,
                             long long value_max, int threads) {
    if (n < 1) {
        throw SizeError("census needs at least one vertex, got " + std::to_string(n));
    }
    if (n > kAllLimit) {
        throw SizeError("the sampled visibility-graph census is capped at " +
                        std::to_string(kAllLimit) + " vertices, got " + std::to_string(n));
    }
    if (trials < 0) {
        throw DomainError("trial count must be non-negative, got " + std::to_string(trials));
    }
    if (value_max < 0) {
        throw DomainError("value bound must be non-negative, got " + std::to_string(value_max));
    }
    constexpr long long kBlock = 4096; // fixed block size keeps streams stable
    long long blocks = (trials + kBlock - 1) / kBlock;
    int t = resolve_threads(threads);
    std::vector<std::set<Graph>> locals(static_cast<std::size_t>(t));
    std::uint64_t range = static_cast<std::uint64_t>(value_max) + 1;
#pragma omp parallel num_threads(t)
    {
        std::set<Graph>& mine = locals[static_cast<std::size_t>(omp_get_thread_num())];
        TimedSequence points(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) points[static_cast<std::size_t>(i)].t = i + 1;
#pragma omp for schedule(static)
        for (long long block = 0; block < blocks; ++block) {
            std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(block)));
            long long first = block * kBlock;
            long long last = std::min(trials, first + kBlock);
            for (long long trial = first; trial < last; ++trial) {
                for (int i = 0; i < n; ++i) {
                    points[static_cast<std::size_t>(i)].value =
                        static_cast<double>(rng() % range);
                }
                mine.insert(build_vg(points));
            }
        }
    }
    std::set<Graph> merged;
    for (const auto& local : locals) merged.insert(local.begin(), local.end());
    return merged.size();
}

} // namespace hvg
