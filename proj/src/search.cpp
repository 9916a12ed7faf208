#include "pathdeg/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <iterator>
#include <mutex>
#include <set>
#include <thread>

#include "pathdeg/avoidance.hpp"
#include "pathdeg/canonical.hpp"
#include "pathdeg/constructions.hpp"
#include "pathdeg/graph6.hpp"

namespace pathdeg {

namespace {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

long long max_addable_edges(int k, int n) {
    return static_cast<long long>(n) * (n - 1) / 2 - static_cast<long long>(k) * (k - 1) / 2;
}

// Verified certificates are genuine avoiders, so their edge count is a sound
// initial lower bound for the branch-and-bound sweep.
int certificate_seed(int ell, int n) {
    const Certificate cert = certificate(ell, n);
    return cert.verified ? cert.edges : 0;
}

// Sorted-unique accumulation of canonical codes with bounded memory.
class CodeSet {
public:
    void add(std::uint64_t code) {
        pending_.push_back(code);
        if (pending_.size() >= kFlushAt) flush();
    }

    std::vector<std::uint64_t> take() {
        flush();
        return std::move(sorted_);
    }

private:
    static constexpr std::size_t kFlushAt = std::size_t{16} << 20;

    void flush() {
        if (pending_.empty()) return;
        std::sort(pending_.begin(), pending_.end());
        pending_.erase(std::unique(pending_.begin(), pending_.end()), pending_.end());
        if (sorted_.empty()) {
            sorted_ = std::move(pending_);
            pending_ = {};
            return;
        }
        std::vector<std::uint64_t> merged;
        merged.reserve(sorted_.size() + pending_.size());
        std::set_union(sorted_.begin(), sorted_.end(), pending_.begin(), pending_.end(),
                       std::back_inserter(merged));
        sorted_ = std::move(merged);
        pending_.clear();
    }

    std::vector<std::uint64_t> sorted_;
    std::vector<std::uint64_t> pending_;
};

// Codes of all k-vertex classes reachable from the (k-1)-vertex parents,
// keeping only children with at least `min_edges` edges. Deleting a
// minimum-degree vertex never drops a graph below the bound that admitted its
// parent, so the pruned levels still contain every ancestor of every final
// graph at or above the seed.
std::vector<std::uint64_t> next_level(const std::vector<std::uint64_t>& parents, int k,
                                      long long min_edges) {
    CodeSet out;
    const std::uint32_t subsets = std::uint32_t{1} << (k - 1);
    for (const std::uint64_t code : parents) {
        const Graph parent = unpack_code(k - 1, code);
        const int parent_edges = parent.edge_count();
        for (std::uint32_t mask = 0; mask < subsets; ++mask) {
            if (parent_edges + std::popcount(mask) < min_edges) continue;
            out.add(canonical_code(parent.with_vertex(mask)));
        }
    }
    return out.take();
}

std::vector<std::uint64_t> build_levels(int n, long long seed_edges) {
    std::vector<std::uint64_t> level = {0};  // K_1
    for (int k = 2; k <= n; ++k) {
        const long long min_edges = seed_edges - max_addable_edges(k, n);
        level = next_level(level, k, min_edges);
    }
    return level;
}

// Per-worker extremal state; merged deterministically at the end.
struct WorkerResult {
    int best = -1;
    std::set<std::uint64_t> codes;  // canonical codes at `best`
    std::uint64_t examined = 0;

    void offer_avoider(int edges, std::uint64_t code) {
        if (edges > best) {
            best = edges;
            codes.clear();
        }
        if (edges == best) codes.insert(code);
    }
};

void raise_shared_best(std::atomic<int>& shared_best, int edges) {
    int cur = shared_best.load(std::memory_order_relaxed);
    while (cur < edges &&
           !shared_best.compare_exchange_weak(cur, edges, std::memory_order_relaxed)) {
    }
}

SearchRecord merge_results(int n, int ell, const std::string& method,
                           std::vector<WorkerResult> workers, const SearchOptions& options,
                           double elapsed) {
    int p = 0;
    for (const auto& w : workers) p = std::max(p, w.best);

    std::set<std::uint64_t> codes;
    std::uint64_t examined = 0;
    for (auto& w : workers) {
        examined += w.examined;
        if (w.best == p) codes.merge(w.codes);
    }

    SearchRecord rec;
    rec.ell = ell;
    rec.n = n;
    rec.p = p;
    rec.method = method;
    rec.witness_total = codes.size();
    std::vector<std::string> names;
    names.reserve(codes.size());
    for (const std::uint64_t code : codes) names.push_back(to_graph6(unpack_code(n, code)));
    std::sort(names.begin(), names.end());
    const std::size_t cap = options.witness_cap < 0 ? 0 : static_cast<std::size_t>(options.witness_cap);
    if (names.size() > cap) names.resize(cap);
    rec.witnesses = std::move(names);
    rec.stats.examined = examined;
    rec.stats.elapsed_seconds = elapsed;
    return rec;
}

void check_ell(int n, int ell) {
    if (ell < 1 || ell >= n)
        throw ArgumentError("search requires 1 <= ell < n, got ell=" + std::to_string(ell) +
                            ", n=" + std::to_string(n));
}

}  // namespace

SearchRecord p_labeled(int n, int ell, const SearchOptions& options) {
    if (n < 2 || n > labeled_max_n)
        throw CostGuardError("p_labeled handles 2 <= n <= 8, got n=" + std::to_string(n));
    check_ell(n, ell);

    const auto start = std::chrono::steady_clock::now();
    const int seed = certificate_seed(ell, n);
    const int edge_slots = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << edge_slots;

    const int threads = std::min<int>(resolve_threads(options.threads), 16);
    std::atomic<int> shared_best{seed};
    std::vector<WorkerResult> results(static_cast<std::size_t>(threads));

    auto scan = [&](int worker) {
        WorkerResult& local = results[static_cast<std::size_t>(worker)];
        const std::uint64_t lo = total / static_cast<std::uint64_t>(threads) * static_cast<std::uint64_t>(worker);
        const std::uint64_t hi = worker + 1 == threads
                                     ? total
                                     : total / static_cast<std::uint64_t>(threads) * static_cast<std::uint64_t>(worker + 1);
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            const int edges = std::popcount(mask);
            if (edges < std::max(local.best, shared_best.load(std::memory_order_relaxed))) continue;
            const Graph g = unpack_code(n, mask);
            ++local.examined;
            if (find_violation(g, ell)) continue;
            local.offer_avoider(edges, canonical_code(g));
            raise_shared_best(shared_best, edges);
        }
    };

    if (threads == 1) {
        scan(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(scan, t);
        for (auto& th : pool) th.join();
    }

    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return merge_results(n, ell, "labeled", std::move(results), options, elapsed);
}

SearchRecord p_canonical(int n, int ell, const SearchOptions& options) {
    if (n < 2 || n > canonical_max_n)
        throw CostGuardError("p_canonical handles 2 <= n <= 11, got n=" + std::to_string(n));
    check_ell(n, ell);

    const auto start = std::chrono::steady_clock::now();
    const int seed = certificate_seed(ell, n);

    // Levels below n are pruned against the immutable seed only; the shared
    // bound can rise only while scanning the final level.
    std::vector<std::uint64_t> parents = {0};
    for (int k = 2; k < n; ++k)
        parents = next_level(parents, k, seed - max_addable_edges(k, n));

    const int threads = std::min<int>(resolve_threads(options.threads), 16);
    std::atomic<int> shared_best{seed};
    std::atomic<std::size_t> next_parent{0};
    std::vector<WorkerResult> results(static_cast<std::size_t>(threads));
    const std::uint32_t subsets = std::uint32_t{1} << (n - 1);

    auto scan = [&](int worker) {
        WorkerResult& local = results[static_cast<std::size_t>(worker)];
        for (;;) {
            const std::size_t idx = next_parent.fetch_add(1, std::memory_order_relaxed);
            if (idx >= parents.size()) break;
            const Graph parent = unpack_code(n - 1, parents[idx]);
            const int parent_edges = parent.edge_count();
            for (std::uint32_t mask = 0; mask < subsets; ++mask) {
                const int edges = parent_edges + std::popcount(mask);
                if (edges < std::max(local.best, shared_best.load(std::memory_order_relaxed)))
                    continue;
                const Graph child = parent.with_vertex(mask);
                ++local.examined;
                if (find_violation(child, ell)) continue;
                local.offer_avoider(edges, canonical_code(child));
                raise_shared_best(shared_best, edges);
            }
        }
    };

    if (threads == 1) {
        scan(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(scan, t);
        for (auto& th : pool) th.join();
    }

    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return merge_results(n, ell, "canonical", std::move(results), options, elapsed);
}

void enumerate_nonisomorphic(int n, const std::function<void(const Graph&)>& yield) {
    if (n < 1 || n > canonical_max_n)
        throw CostGuardError("enumerate_nonisomorphic handles 1 <= n <= 11, got n=" +
                             std::to_string(n));
    const auto level = build_levels(n, 0);
    for (const std::uint64_t code : level) yield(unpack_code(n, code));
}

std::uint64_t count_nonisomorphic(int n) {
    std::uint64_t count = 0;
    enumerate_nonisomorphic(n, [&count](const Graph&) { ++count; });
    return count;
}

}  // namespace pathdeg
