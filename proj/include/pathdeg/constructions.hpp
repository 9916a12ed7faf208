#pragma once

#include <string>

#include "pathdeg/graph.hpp"

namespace pathdeg {

// A constructed lower-bound witness for p_ell(n). `verified` records that
// find_violation confirmed the graph is an avoider, in which case its edge
// count is a certified lower bound.
struct Certificate {
    int ell;
    int n;
    int edges;
    Graph graph;
    bool verified;
    std::string construction;
};

// K_{a,b}: vertices 0..a-1 on one side, a..a+b-1 on the other, all cross
// edges.
Graph complete_bipartite(int a, int b);

// Half graph on 2m vertices: u_1..u_m then v_1..v_m, with u_i ~ v_j exactly
// when i <= j. Has m(m+1)/2 edges and no two equal-degree vertices joined by
// an even-length path.
Graph half_graph(int m);

// The densest construction this library knows for (ell, n):
//   odd ell, n = 2m+1  ->  K_{m,m+1}
//   odd ell, n = 2m    ->  K_{m-1,m+1}
//   even ell, n = 2m   ->  half_graph(m)
//   even ell, n odd    ->  half_graph((n-1)/2) plus one isolated vertex
// The result is always re-checked by find_violation rather than trusted.
Certificate certificate(int ell, int n);

}  // namespace pathdeg
