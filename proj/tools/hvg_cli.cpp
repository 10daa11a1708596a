#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hvg/bijections.hpp"
#include "hvg/construct.hpp"
#include "hvg/degrees.hpp"
#include "hvg/enumerate.hpp"
#include "hvg/error.hpp"
#include "hvg/graph.hpp"
#include "hvg/io.hpp"
#include "hvg/realize.hpp"

namespace {

std::string read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path.empty() || path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open input file '" + path + "'");
        buffer << file.rdbuf();
    }
    return buffer.str();
}

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

void print_graph(const hvg::Graph& g, const std::string& format) {
    if (format == "json") {
        std::cout << hvg::to_json(g) << "\n";
    } else if (format == "dot") {
        std::cout << hvg::to_dot(g);
    } else {
        std::cout << hvg::to_edge_list(g);
    }
}

hvg::DegreeSequence degrees_from_text(const std::string& text) {
    hvg::DegreeSequence degrees;
    for (const hvg::DataSequence& seq : hvg::parse_series_file(text)) {
        for (double v : seq) {
            if (v != static_cast<long long>(v)) {
                throw hvg::ParseError("degrees must be integers, got " +
                                      hvg::format_sequence({v}));
            }
            degrees.push_back(static_cast<int>(v));
        }
    }
    return degrees;
}

struct BuildOptions {
    std::string input = "-";
    std::string algo = "fast";
    std::string format = "edges";
};

void run_build(const BuildOptions& opt) {
    std::vector<hvg::DataSequence> sequences = hvg::parse_series_file(read_input(opt.input));
    if (sequences.empty()) throw hvg::ParseError("no sequences in input");
    bool first = true;
    for (const hvg::DataSequence& seq : sequences) {
        hvg::Graph g = opt.algo == "naive" ? hvg::build_naive(seq) : hvg::build_fast(seq);
        if (!first && opt.format == "edges") std::cout << "\n";
        first = false;
        print_graph(g, opt.format);
    }
}

struct RealizeOptions {
    std::string input = "-";
    std::string mode = "standard";
};

void run_realize(const RealizeOptions& opt) {
    hvg::Graph g = hvg::parse_graph(read_input(opt.input));
    if (opt.mode == "nesting") {
        std::cout << hvg::format_sequence(hvg::nesting_realization(g)) << "\n";
        return;
    }
    if (!hvg::is_distinct_realizable(g)) {
        throw hvg::DomainError("graph has no pairwise-distinct realization; try --mode nesting");
    }
    std::cout << hvg::format_sequence(hvg::standard_sequence(g)) << "\n";
}

struct FromDegreesOptions {
    std::vector<int> degrees;
    std::string input;
    std::string format = "edges";
};

void run_from_degrees(const FromDegreesOptions& opt) {
    hvg::DegreeSequence degrees = opt.degrees;
    if (degrees.empty()) degrees = degrees_from_text(read_input(opt.input));
    print_graph(hvg::from_degree_sequence(degrees), opt.format);
}

struct CodecOptions {
    std::string input = "-";
    std::string text;
    bool text_given = false;
    std::string codec = "parens";
    std::string format = "edges";
    bool lenient = false;
};

void run_encode(const CodecOptions& opt) {
    hvg::Graph g = hvg::parse_graph(read_input(opt.input));
    if (opt.codec == "brackets") {
        std::cout << hvg::xi_inv(g).render() << "\n";
    } else {
        std::cout << hvg::psi(g).text() << "\n";
    }
}

void run_decode(const CodecOptions& opt) {
    std::string word = trim(opt.text_given ? opt.text : read_input(opt.input));
    hvg::Graph g = opt.codec == "brackets"
                       ? hvg::xi(hvg::Bracketing::parse(word, opt.lenient))
                       : hvg::psi_inv(hvg::ParenString::parse(word));
    print_graph(g, opt.format);
}

struct CensusOptions {
    int n = 0;
    std::string universe = "distinct";
    std::string strategy = "brute";
    std::string emit = "count";
    bool degree_census = false;
    int workers = 0;
};

void run_census(const CensusOptions& opt) {
    if (opt.degree_census) {
        auto [graphs, degrees] = hvg::degree_census(opt.n, opt.workers);
        std::cout << graphs << " graphs, " << degrees << " degree sequences\n";
        return;
    }
    hvg::Census census;
    if (opt.universe == "all") {
        census = opt.strategy == "bijective" ? hvg::enumerate_all_bijective(opt.n)
                                             : hvg::enumerate_all_bruteforce(opt.n, opt.workers);
    } else {
        census = opt.strategy == "bijective"
                     ? hvg::enumerate_distinct_bijective(opt.n)
                     : hvg::enumerate_distinct_bruteforce(opt.n, opt.workers);
    }
    if (opt.emit == "list") {
        for (const hvg::Graph& g : census.graphs) std::cout << hvg::to_json(g) << "\n";
    } else {
        std::cout << census.graphs.size() << "\n";
    }
}

struct VgCensusOptions {
    int n = 0;
    long long trials = 0;
    std::uint64_t seed = 0;
    long long value_max = 1000000000LL;
    int workers = 0;
};

void run_vg_census(const VgCensusOptions& opt) {
    std::size_t found =
        hvg::vg_census_random(opt.n, opt.trials, opt.seed, opt.value_max, opt.workers);
    std::cout << "n=" << opt.n << " trials=" << opt.trials << " seed=" << opt.seed
              << " distinct visibility graphs: " << found
              << " (sampled; no guarantee the whole set was exhausted)\n";
}

struct BenchOptions {
    int max_n = 200000;
    int reps = 3;
    std::uint64_t seed = 1;
};

hvg::DataSequence random_walk(int n, std::mt19937_64& rng) {
    hvg::DataSequence d(static_cast<std::size_t>(n));
    std::uniform_int_distribution<int> step(0, 1);
    double level = 0;
    for (int i = 0; i < n; ++i) {
        level += step(rng) ? 1 : -1;
        d[static_cast<std::size_t>(i)] = level;
    }
    return d;
}

// staircase down with a final spike: every prefix stays visible until
// the spike, so the quadratic construction really scans
hvg::DataSequence adversarial_sequence(int n) {
    hvg::DataSequence d(static_cast<std::size_t>(n));
    for (int i = 0; i + 1 < n; ++i) d[static_cast<std::size_t>(i)] = n - i;
    d[static_cast<std::size_t>(n) - 1] = n + 1;
    return d;
}

template <typename Fn>
double time_best_ms(int reps, Fn&& fn) {
    double best = -1;
    for (int r = 0; r < reps; ++r) {
        auto start = std::chrono::steady_clock::now();
        fn();
        auto stop = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(stop - start).count();
        if (best < 0 || ms < best) best = ms;
    }
    return best;
}

void run_bench(const BenchOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    std::cout << "random-walk inputs (times in ms, best of " << opt.reps << ")\n";
    std::cout << "        n      naive       fast\n";
    for (int n = 12500; n <= opt.max_n; n *= 2) {
        hvg::DataSequence d = random_walk(n, rng);
        hvg::Graph from_naive = hvg::build_naive(d);
        hvg::Graph from_fast = hvg::build_fast(d);
        if (!(from_naive == from_fast)) {
            throw hvg::Error("construction mismatch at n=" + std::to_string(n));
        }
        double naive_ms = time_best_ms(opt.reps, [&] { hvg::build_naive(d); });
        double fast_ms = time_best_ms(opt.reps, [&] { hvg::build_fast(d); });
        std::printf("%9d %10.3f %10.3f\n", n, naive_ms, fast_ms);
    }
    std::cout << "\nadversarial inputs (descending staircase plus spike)\n";
    std::cout << "        n      naive       fast\n";
    for (int n = 2000; n <= 8000; n *= 2) {
        hvg::DataSequence d = adversarial_sequence(n);
        if (!(hvg::build_naive(d) == hvg::build_fast(d))) {
            throw hvg::Error("construction mismatch at n=" + std::to_string(n));
        }
        double naive_ms = time_best_ms(opt.reps, [&] { hvg::build_naive(d); });
        double fast_ms = time_best_ms(opt.reps, [&] { hvg::build_fast(d); });
        std::printf("%9d %10.3f %10.3f\n", n, naive_ms, fast_ms);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"horizontal visibility graph toolkit"};
    app.require_subcommand(1);

    BuildOptions build_opt;
    auto* build = app.add_subcommand("build", "build graphs from data sequences");
    build->add_option("-i,--input", build_opt.input, "series file, '-' for stdin");
    build->add_option("--algo", build_opt.algo, "construction to run")
        ->check(CLI::IsMember({"naive", "fast"}));
    build->add_option("--format", build_opt.format, "output format")
        ->check(CLI::IsMember({"edges", "json", "dot"}));
    build->callback([&] { run_build(build_opt); });

    RealizeOptions realize_opt;
    auto* realize = app.add_subcommand("realize", "recover a data sequence from a graph");
    realize->add_option("-i,--input", realize_opt.input, "graph document, '-' for stdin");
    realize->add_option("--mode", realize_opt.mode, "realization to print")
        ->check(CLI::IsMember({"standard", "nesting"}));
    realize->callback([&] { run_realize(realize_opt); });

    FromDegreesOptions degrees_opt;
    auto* from_degrees =
        app.add_subcommand("from-degrees", "rebuild a graph from its ordered degree sequence");
    from_degrees->add_option("degrees", degrees_opt.degrees, "degree values");
    from_degrees->add_option("-i,--input", degrees_opt.input, "degree file, '-' for stdin");
    from_degrees->add_option("--format", degrees_opt.format, "output format")
        ->check(CLI::IsMember({"edges", "json", "dot"}));
    from_degrees->callback([&] { run_from_degrees(degrees_opt); });

    CodecOptions encode_opt;
    auto* encode = app.add_subcommand("encode", "encode a graph as a word");
    encode->add_option("-i,--input", encode_opt.input, "graph document, '-' for stdin");
    encode->add_option("--codec", encode_opt.codec, "word family")
        ->check(CLI::IsMember({"parens", "brackets"}));
    encode->callback([&] { run_encode(encode_opt); });

    CodecOptions decode_opt;
    auto* decode = app.add_subcommand("decode", "decode a word back into a graph");
    decode->add_option("-i,--input", decode_opt.input, "word file, '-' for stdin");
    auto* text_opt = decode->add_option("--text", decode_opt.text, "word given inline");
    decode->add_option("--codec", decode_opt.codec, "word family")
        ->check(CLI::IsMember({"parens", "brackets"}));
    decode->add_option("--format", decode_opt.format, "output format")
        ->check(CLI::IsMember({"edges", "json", "dot"}));
    decode->add_flag("--lenient", decode_opt.lenient,
                     "normalize redundant brackets instead of rejecting them");
    decode->callback([&] {
        decode_opt.text_given = text_opt->count() > 0;
        run_decode(decode_opt);
    });

    CensusOptions census_opt;
    auto* census = app.add_subcommand("census", "enumerate all graphs of a given size");
    census->add_option("n", census_opt.n, "number of vertices")->required();
    census->add_option("--universe", census_opt.universe, "sequence universe")
        ->check(CLI::IsMember({"distinct", "all"}));
    census->add_option("--strategy", census_opt.strategy, "enumeration strategy")
        ->check(CLI::IsMember({"brute", "bijective"}));
    census->add_option("--emit", census_opt.emit, "what to print")
        ->check(CLI::IsMember({"count", "list"}));
    census->add_flag("--degree-census", census_opt.degree_census,
                     "count graphs and distinct ordered degree sequences");
    census->add_option("--workers", census_opt.workers, "worker threads, 0 = auto");
    census->callback([&] { run_census(census_opt); });

    VgCensusOptions vg_opt;
    auto* vg_census =
        app.add_subcommand("vg-census", "sample random sequences and count distinct VGs");
    vg_census->add_option("n", vg_opt.n, "number of vertices")->required();
    vg_census->add_option("--trials", vg_opt.trials, "number of random sequences")->required();
    vg_census->add_option("--seed", vg_opt.seed, "random seed")->required();
    vg_census->add_option("--value-max", vg_opt.value_max, "values drawn from [0, value-max]");
    vg_census->add_option("--workers", vg_opt.workers, "worker threads, 0 = auto");
    vg_census->callback([&] { run_vg_census(vg_opt); });

    BenchOptions bench_opt;
    auto* bench = app.add_subcommand("bench", "time the two constructions against each other");
    bench->add_option("--max-n", bench_opt.max_n, "largest random-walk size");
    bench->add_option("--reps", bench_opt.reps, "repetitions per measurement");
    bench->add_option("--seed", bench_opt.seed, "random seed");
    bench->callback([&] { run_bench(bench_opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const hvg::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hvg::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const hvg::SizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
