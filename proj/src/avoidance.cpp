#include "pathdeg/avoidance.hpp"

#include <array>
#include <bit>
#include <cstdint>

namespace pathdeg {

namespace {

constexpr std::uint8_t kUnreachable = 255;

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

void bfs_distances(const Graph& g, int source, std::array<std::uint8_t, 64>& dist) {
    dist.fill(kUnreachable);
    dist[static_cast<std::size_t>(source)] = 0;
    std::uint64_t seen = bit(source);
    std::uint64_t frontier = seen;
    std::uint8_t d = 0;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            const int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.neighbors(v);
        }
        next &= ~seen & g.vertex_mask();
        ++d;
        std::uint64_t m = next;
        while (m) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            dist[static_cast<std::size_t>(v)] = d;
        }
        seen |= next;
        frontier = next;
    }
}

// 2-colors every component by BFS parity and reports whether the coloring is
// proper. When it is, every u-v walk has length congruent to
// color[u] ^ color[v] mod 2, which prunes entire searches.
bool two_color(const Graph& g, std::array<std::uint8_t, 64>& color) {
    const int n = g.vertex_count();
    color.fill(0);
    std::uint64_t seen = 0;
    std::uint64_t side[2] = {0, 0};
    for (int s = 0; s < n; ++s) {
        if (seen & bit(s)) continue;
        std::uint64_t frontier = bit(s);
        seen |= frontier;
        int parity = 0;
        while (frontier) {
            side[parity] |= frontier;
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                const int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.neighbors(v);
            }
            next &= ~seen;
            seen |= next;
            std::uint64_t m = next;
            while (m) {
                const int v = std::countr_zero(m);
                m &= m - 1;
                color[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(1 - parity);
            }
            frontier = next;
            parity = 1 - parity;
        }
    }
    for (int v = 0; v < n; ++v)
        if (g.neighbors(v) & side[color[static_cast<std::size_t>(v)]] & ~bit(v)) return false;
    return true;
}

struct PathSearch {
    const Graph& g;
    int target;
    const std::array<std::uint8_t, 64>& dist;  // BFS distances to target
    bool bipartite;
    const std::array<std::uint8_t, 64>& color;

    bool dfs(int w, std::uint64_t visited, int remaining, std::array<int, 64>& path, int pos) const {
        const std::uint64_t nbrs = g.neighbors(w);
        if (remaining == 1) {
            if ((nbrs >> target) & 1u) {
                path[static_cast<std::size_t>(pos)] = target;
                return true;
            }
            return false;
        }
        std::uint64_t cands = nbrs & ~visited & ~bit(target);
        while (cands) {
            const int z = std::countr_zero(cands);
            cands &= cands - 1;
            if (dist[static_cast<std::size_t>(z)] > remaining - 1) continue;
            if (bipartite &&
                ((remaining - 1) & 1) !=
                    ((color[static_cast<std::size_t>(z)] ^ color[static_cast<std::size_t>(target)]) & 1))
                continue;
            path[static_cast<std::size_t>(pos)] = z;
            if (dfs(z, visited | bit(z), remaining - 1, path, pos + 1)) return true;
        }
        return false;
    }

    std::optional<PathWitness> from(int u, int ell) const {
        if (dist[static_cast<std::size_t>(u)] > ell) return std::nullopt;
        if (bipartite &&
            (ell & 1) != ((color[static_cast<std::size_t>(u)] ^ color[static_cast<std::size_t>(target)]) & 1))
            return std::nullopt;
        std::array<int, 64> buf;
        buf[0] = u;
        if (!dfs(u, bit(u), ell, buf, 1)) return std::nullopt;
        PathWitness w;
        w.vertices.assign(buf.begin(), buf.begin() + ell + 1);
        return w;
    }
};

void check_args(const Graph& g, int ell) {
    if (ell < 1 || ell >= g.vertex_count())
        throw ArgumentError("path length must satisfy 1 <= ell < n, got ell=" + std::to_string(ell) +
                            " with n=" + std::to_string(g.vertex_count()));
}

}  // namespace

const char* to_string(WitnessCheck check) {
    switch (check) {
        case WitnessCheck::ok: return "ok";
        case WitnessCheck::bad_length: return "bad-length";
        case WitnessCheck::missing_edge: return "missing-edge";
        case WitnessCheck::repeated_vertex: return "repeated-vertex";
        case WitnessCheck::degree_mismatch: return "degree-mismatch";
        case WitnessCheck::endpoint_mismatch: return "endpoint-mismatch";
    }
    return "unknown";
}

std::optional<PathWitness> path_of_length(const Graph& g, int u, int v, int ell) {
    check_args(g, ell);
    const int n = g.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n) throw ArgumentError("path endpoint out of range");
    if (u == v) throw ArgumentError("path endpoints must be distinct");

    std::array<std::uint8_t, 64> dist;
    bfs_distances(g, v, dist);
    std::array<std::uint8_t, 64> color;
    const bool bip = two_color(g, color);
    return PathSearch{g, v, dist, bip, color}.from(u, ell);
}

std::optional<Violation> find_violation(const Graph& g, int ell) {
    check_args(g, ell);
    const int n = g.vertex_count();

    std::array<std::uint8_t, 64> deg{};
    std::array<std::uint8_t, 65> hist{};
    bool any_pair = false;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(g.degree(v));
        if (++hist[deg[static_cast<std::size_t>(v)]] > 1) any_pair = true;
    }
    if (!any_pair) return std::nullopt;

    std::array<std::uint8_t, 64> color;
    const bool bip = two_color(g, color);

    // BFS distances keyed by the pair's second vertex, computed on first use.
    std::array<std::array<std::uint8_t, 64>, 64> dist;
    std::uint64_t have_dist = 0;

    for (int u = 0; u < n - 1; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (deg[static_cast<std::size_t>(u)] != deg[static_cast<std::size_t>(v)]) continue;
            if (!(have_dist & bit(v))) {
                bfs_distances(g, v, dist[static_cast<std::size_t>(v)]);
                have_dist |= bit(v);
            }
            auto witness =
                PathSearch{g, v, dist[static_cast<std::size_t>(v)], bip, color}.from(u, ell);
            if (witness) return Violation{u, v, std::move(*witness)};
        }
    }
    return std::nullopt;
}

WitnessCheck check_witness(const Graph& g, const Violation& viol, int ell) {
    const auto& vs = viol.witness.vertices;
    if (vs.empty() || static_cast<int>(vs.size()) != ell + 1) return WitnessCheck::bad_length;
    if (vs.front() != viol.u || vs.back() != viol.v) return WitnessCheck::endpoint_mismatch;

    std::uint64_t seen = 0;
    for (int v : vs) {
        if (v < 0 || v >= g.vertex_count()) return WitnessCheck::missing_edge;
        if (seen & (std::uint64_t{1} << v)) return WitnessCheck::repeated_vertex;
        seen |= std::uint64_t{1} << v;
    }
    for (std::size_t i = 0; i + 1 < vs.size(); ++i)
        if (!g.has_edge(vs[i], vs[i + 1])) return WitnessCheck::missing_edge;

    if (g.degree(viol.u) != g.degree(viol.v)) return WitnessCheck::degree_mismatch;
    return WitnessCheck::ok;
}

bool verify_witness(const Graph& g, const Violation& viol, int ell) {
    return check_witness(g, viol, ell) == WitnessCheck::ok;
}

}  // namespace pathdeg
