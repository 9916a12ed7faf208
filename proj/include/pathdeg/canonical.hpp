#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pathdeg/graph.hpp"

namespace pathdeg {

// Isomorphism-invariant representative: two graphs have equal canonical
// graph6 strings exactly when they are isomorphic. The relabeling maps each
// original vertex to its position in the canonical ordering.
struct CanonicalForm {
    std::string graph6;
    std::vector<int> relabeling;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.graph6 == b.graph6;
    }
};

// Exact canonical labeling by individualization-refinement over the coarsest
// equitable partition, branching within the first non-singleton cell and
// skipping candidates that are twins of an already-expanded one. Exponential
// in the worst case; meant for the small graphs this library works with.
CanonicalForm canonical_form(const Graph& g);

// The graph relabeled into canonical order.
Graph canonical_graph(const Graph& g);

// Upper-triangle adjacency bits of a labeled graph packed into one word in
// graph6 bit order, bit (i,j) at index j(j-1)/2 + i. Requires n <= 11.
std::uint64_t pack_code(const Graph& g);
Graph unpack_code(int n, std::uint64_t code);

// pack_code of the canonical labeling (n <= 11); the search's dedup key.
std::uint64_t canonical_code(const Graph& g);

}  // namespace pathdeg
