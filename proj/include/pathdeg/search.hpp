#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pathdeg/graph.hpp"

namespace pathdeg {

struct SearchStats {
    std::uint64_t examined = 0;  // graphs handed to the avoidance checker
    double elapsed_seconds = 0.0;
};

// Result of an exact p_ell(n) computation. Witnesses are the extremal
// avoiders as canonical graph6 strings, sorted, with the stored list capped
// but the class count exact. Everything except `stats` is deterministic
// across runs, thread counts, and work partitions.
struct SearchRecord {
    int ell = 0;
    int n = 0;
    int p = 0;
    std::string method;
    std::vector<std::string> witnesses;
    std::uint64_t witness_total = 0;
    SearchStats stats;
};

struct SearchOptions {
    int threads = 0;        // 0 = hardware concurrency
    int witness_cap = 100;  // stored witness list cap
};

inline constexpr int labeled_max_n = 8;
inline constexpr int canonical_max_n = 11;

// Exact by exhaustion over all 2^C(n,2) labeled graphs; the independent
// oracle for every other search path. Refuses n > 8.
SearchRecord p_labeled(int n, int ell, const SearchOptions& options = {});

// Exact via isomorph-free vertex augmentation (one representative per class,
// children deduplicated by canonical code), pruned by a monotone best-so-far
// edge bound seeded from the verified certificate. Agrees with p_labeled
// wherever both run. Refuses n > 11.
SearchRecord p_canonical(int n, int ell, const SearchOptions& options = {});

// One representative per isomorphism class on n vertices, yielded in
// ascending canonical-code order. Refuses n > 11.
void enumerate_nonisomorphic(int n, const std::function<void(const Graph&)>& yield);
std::uint64_t count_nonisomorphic(int n);

}  // namespace pathdeg
