#pragma once

#include <optional>
#include <vector>

#include "pathdeg/graph.hpp"

namespace pathdeg {

// A simple path certified by its full vertex sequence; the length is the
// number of edges, i.e. one less than the number of vertices.
struct PathWitness {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }

    friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

// Two vertices of equal degree joined by a path of the checked length:
// exactly the configuration an avoider must not contain.
struct Violation {
    int u;
    int v;
    PathWitness witness;
};

enum class WitnessCheck {
    ok,
    bad_length,
    missing_edge,
    repeated_vertex,
    degree_mismatch,
    endpoint_mismatch,
};

const char* to_string(WitnessCheck check);

// Lexicographically least simple u-v path with exactly `ell` edges, if one
// exists. Depth-bounded DFS, lowest-index-first, pruned by BFS distance from
// the target and (on bipartite graphs) by path parity.
std::optional<PathWitness> path_of_length(const Graph& g, int u, int v, int ell);

// First violation in ascending lexicographic pair order, or nullopt when the
// graph is an avoider for this length.
std::optional<Violation> find_violation(const Graph& g, int ell);

// Independent validation of a reported violation; does not share the search
// path above.
WitnessCheck check_witness(const Graph& g, const Violation& viol, int ell);
bool verify_witness(const Graph& g, const Violation& viol, int ell);

}  // namespace pathdeg
