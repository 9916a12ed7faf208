#include "pathdeg/constructions.hpp"

#include "pathdeg/avoidance.hpp"

namespace pathdeg {

namespace {

// Degenerate side sizes appear in certificates for tiny n (K_{0,2}, empty
// half graph); the public constructors stay strict about positivity.
Graph bipartite_graph(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph half_graph_on(int m, int total) {
    Graph g(total);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) g.add_edge(i, m + j);
    return g;
}

}  // namespace

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw ArgumentError("complete_bipartite: side sizes must be positive");
    if (a + b > Graph::max_vertices)
        throw ArgumentError("complete_bipartite: total vertex count exceeds 64");
    return bipartite_graph(a, b);
}

Graph half_graph(int m) {
    if (m < 1) throw ArgumentError("half_graph: m must be positive");
    if (2 * m > Graph::max_vertices) throw ArgumentError("half_graph: 2m exceeds 64 vertices");
    return half_graph_on(m, 2 * m);
}

Certificate certificate(int ell, int n) {
    if (ell < 1) throw ArgumentError("certificate: ell must be positive");
    if (n < 1 || n > Graph::max_vertices)
        throw ArgumentError("certificate: n must be in [1, 64]");

    Graph g(1);
    std::string name;
    if (ell % 2 == 1) {
        const int m = n / 2;
        if (n % 2 == 1) {
            g = bipartite_graph(m, m + 1);
            name = "K_{" + std::to_string(m) + "," + std::to_string(m + 1) + "}";
        } else {
            g = bipartite_graph(m - 1, m + 1);
            name = "K_{" + std::to_string(m - 1) + "," + std::to_string(m + 1) + "}";
        }
    } else {
        const int m = n / 2;
        if (n % 2 == 0) {
            g = half_graph_on(m, n);
            name = "half_graph(" + std::to_string(m) + ")";
        } else {
            // No published construction for even ell and odd n; an isolated
            // vertex has a unique degree and lies on no path, so appending it
            // preserves avoidance.
            g = half_graph_on(m, n);
            name = "half_graph(" + std::to_string(m) + ")+K_1";
        }
    }

    Certificate cert{ell, n, g.edge_count(), g, false, name};
    // A simple path on n vertices has at most n-1 edges, so ell >= n is
    // trivially avoided.
    cert.verified = ell >= n || !find_violation(g, ell).has_value();
    return cert;
}

}  // namespace pathdeg
