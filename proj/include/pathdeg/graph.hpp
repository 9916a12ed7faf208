#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "pathdeg/errors.hpp"

namespace pathdeg {

// Dense undirected graph on at most 64 vertices. Each vertex keeps its
// neighbor set in a single 64-bit word, so degree queries and neighborhood
// intersections are one popcount / AND away. Symmetric, loop-free.
//
// Instances are plain values; algorithms take them by const reference and
// never mutate, so sharing across threads is safe.
class Graph {
public:
    static constexpr int max_vertices = 64;

    explicit Graph(int n) : n_(n) {
        if (n < 1 || n > max_vertices)
            throw ArgumentError("vertex count must be in [1, 64], got " + std::to_string(n));
    }

    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int vertex_count() const { return n_; }

    std::uint64_t neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    bool has_edge(int u, int v) const {
        return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
    }

    int degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }

    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n_; ++v) total += degree(v);
        return total / 2;
    }

    // Low n bits set; handles n == 64.
    std::uint64_t vertex_mask() const {
        return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    void add_edge(int u, int v) {
        check_pair(u, v);
        adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }

    void remove_edge(int u, int v) {
        check_pair(u, v);
        adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
        adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
    }

    // New graph with one extra vertex whose neighborhood is `neighbor_mask`
    // (a subset of the existing vertices).
    Graph with_vertex(std::uint64_t neighbor_mask) const {
        if (n_ >= max_vertices) throw ArgumentError("with_vertex: graph already has 64 vertices");
        if (neighbor_mask & ~vertex_mask())
            throw ArgumentError("with_vertex: neighbor mask references missing vertices");
        Graph g(n_ + 1);
        g.adj_ = adj_;
        g.adj_[static_cast<std::size_t>(n_)] = neighbor_mask;
        while (neighbor_mask) {
            int v = std::countr_zero(neighbor_mask);
            neighbor_mask &= neighbor_mask - 1;
            g.adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << n_;
        }
        return g;
    }

    // Relabeled copy: vertex v of this graph becomes perm[v].
    Graph relabeled(const std::vector<int>& perm) const {
        Graph g(n_);
        for (int v = 0; v < n_; ++v) {
            std::uint64_t nb = adj_[static_cast<std::size_t>(v)];
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                if (w > v) g.add_edge(perm[static_cast<std::size_t>(v)], perm[static_cast<std::size_t>(w)]);
            }
        }
        return g;
    }

    bool operator==(const Graph& other) const = default;

private:
    void check_pair(int u, int v) const {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw ArgumentError("vertex index out of range");
        if (u == v) throw ArgumentError("loops are not allowed");
    }

    int n_;
    std::array<std::uint64_t, max_vertices> adj_{};
};

// (vertex, degree) pairs sorted by non-increasing degree, ties broken by
// ascending vertex index.
std::vector<std::pair<int, int>> degree_sequence(const Graph& g);

}  // namespace pathdeg
