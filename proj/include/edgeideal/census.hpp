#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "assoc.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "oracle.hpp"

// Exhaustive and sampled comparison of the graph criteria for Ass(I^t)
// against the brute-force ideal oracle over labeled graphs.

namespace edgeideal::census {

inline constexpr int kMaxFullCensusVertices = 6;

inline int pair_count(int n) { return n * (n - 1) / 2; }

/// Labeled graph on n vertices whose edge set is read off the bits of code:
/// bit k stands for the k-th pair {i < j} in lexicographic order.
inline SimpleGraph labeled_graph(int n, std::uint64_t code) {
    SimpleGraph g(n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++k) {
            if ((code >> k) & 1U) g.add_edge(i, j);
        }
    }
    return g;
}

inline std::uint64_t graph_count(int n) { return std::uint64_t{1} << pair_count(n); }

/// k distinct codes drawn uniformly with a seeded generator, ascending.
inline std::vector<std::uint64_t> sample_codes(int n, std::size_t k, std::uint64_t seed) {
    const std::uint64_t total = graph_count(n);
    if (k > total) throw InvalidInput("sample larger than the number of labeled graphs");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
    std::set<std::uint64_t> chosen;
    while (chosen.size() < k) chosen.insert(pick(rng));
    return {chosen.begin(), chosen.end()};
}

/// Ass(I^t) by the divisor sweep. The edgeless graph has I = 0, whose only
/// associated prime is P_∅.
inline std::vector<VertexSet> oracle_primes(const SimpleGraph& g, int t) {
    if (g.edge_count() == 0) return {VertexSet{}};
    auto ideal = oracle::power(oracle::edge_ideal(g), t);
    if (!oracle::power_lcm_as_expected(g, ideal, t)) {
        throw std::logic_error("lcm of I^t generators differs from t on non-isolated vertices");
    }
    return oracle::ass_primes_oracle(ideal);
}

struct Mismatch {
    std::uint64_t code = 0;
    SimpleGraph graph;
    std::string engine; ///< "formula", "classified"
    std::vector<VertexSet> expected; ///< oracle
    std::vector<VertexSet> got;
};

struct CensusReport {
    int n = 0;
    int t = 0;
    std::size_t graphs_checked = 0;
    std::vector<Mismatch> mismatches;
    std::chrono::milliseconds elapsed{0};

    bool passed() const { return mismatches.empty(); }
};

struct CensusOptions {
    std::optional<std::size_t> sample;
    std::uint64_t seed = 1;
    int threads = 1;
};

/// Compare ass_primes (and the closed forms for t = 2, 3) with the oracle on
/// one graph; appends any disagreement.
inline void check_graph(int t, std::uint64_t code, const SimpleGraph& g, std::vector<Mismatch>& out) {
    auto expected = oracle_primes(g, t);
    auto report = [&](const char* engine, std::vector<VertexSet> got) {
        if (got != expected) out.push_back(Mismatch{code, g, engine, expected, std::move(got)});
    };
    report("formula", prime_sets(ass_primes(g, t)));
    if (t == 2) report("classified", prime_sets(ass_primes_2(g)));
    if (t == 3) report("classified", prime_sets(ass_primes_3(g)));
}

inline CensusReport run_census(int n, int t, const CensusOptions& opts = {}) {
    if (n < 1 || n > oracle::kMaxVariables) throw InvalidInput("census vertex count must be in 1..8");
    if (t < 1) throw InvalidInput("power t must be >= 1");
    if (!opts.sample && n > kMaxFullCensusVertices) {
        throw InvalidInput("full census refused above n = 6; pass a sample size");
    }
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::uint64_t> codes;
    if (opts.sample) {
        codes = sample_codes(n, *opts.sample, opts.seed);
    } else {
        codes.resize(graph_count(n));
        for (std::uint64_t c = 0; c < codes.size(); ++c) codes[c] = c;
    }

    CensusReport report;
    report.n = n;
    report.t = t;
    report.graphs_checked = codes.size();

    std::atomic<std::size_t> next{0};
    std::mutex merge;
    auto worker = [&] {
        std::vector<Mismatch> local;
        for (std::size_t i = next++; i < codes.size(); i = next++) {
            check_graph(t, codes[i], labeled_graph(n, codes[i]), local);
        }
        std::lock_guard lock(merge);
        for (auto& m : local) report.mismatches.push_back(std::move(m));
    };
    const int threads = std::max(1, opts.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    }
    std::sort(report.mismatches.begin(), report.mismatches.end(), [](const Mismatch& a, const Mismatch& b) {
        return a.code != b.code ? a.code < b.code : a.engine < b.engine;
    });
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

} // namespace edgeideal::census
