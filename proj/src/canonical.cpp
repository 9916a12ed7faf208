#include "pathdeg/canonical.hpp"

#include <algorithm>
#include <bit>

#include "pathdeg/graph6.hpp"

namespace pathdeg {

namespace {

constexpr int kMaxN = Graph::max_vertices;
constexpr int kCodeWords = (kMaxN * (kMaxN - 1) / 2 + 63) / 64;

struct Cell {
    int start;
    int len;
};

// Ordered partition: `order` lists vertices, `cells` slices it. Cell order is
// structural (split pieces are ordered by neighbor count), so it is preserved
// by isomorphism; vertex order inside a cell carries no meaning.
struct Partition {
    std::array<int, kMaxN> order;
    std::array<Cell, kMaxN> cells;
    int cell_count = 0;
};

class Canonicalizer {
public:
    explicit Canonicalizer(const Graph& g) : g_(g), n_(g.vertex_count()) {
        code_words_ = (n_ * (n_ - 1) / 2 + 63) / 64;
    }

    void run() {
        Partition root;
        for (int v = 0; v < n_; ++v) root.order[static_cast<std::size_t>(v)] = v;
        root.cells[0] = {0, n_};
        root.cell_count = 1;
        refine(root);
        search(root);
    }

    std::vector<int> best_perm() const {
        return {best_perm_.begin(), best_perm_.begin() + n_};
    }

    // pack_code of the canonical labeling, computed without materializing the
    // relabeled graph. Requires n <= 11.
    std::uint64_t packed_code64() const {
        std::array<int, 12> ord{};
        for (int v = 0; v < n_; ++v) ord[static_cast<std::size_t>(best_perm_[static_cast<std::size_t>(v)])] = v;
        std::uint64_t code = 0;
        int bit = 0;
        for (int j = 1; j < n_; ++j) {
            const std::uint64_t row = g_.neighbors(ord[static_cast<std::size_t>(j)]);
            for (int i = 0; i < j; ++i, ++bit)
                if ((row >> ord[static_cast<std::size_t>(i)]) & 1u) code |= std::uint64_t{1} << bit;
        }
        return code;
    }

private:
    void refine(Partition& p) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int si = 0; si < p.cell_count && !changed; ++si) {
                std::uint64_t splitter = 0;
                for (int t = p.cells[static_cast<std::size_t>(si)].start;
                     t < p.cells[static_cast<std::size_t>(si)].start + p.cells[static_cast<std::size_t>(si)].len; ++t)
                    splitter |= std::uint64_t{1} << p.order[static_cast<std::size_t>(t)];
                for (int ci = 0; ci < p.cell_count; ++ci) {
                    if (split_cell(p, ci, splitter)) {
                        changed = true;
                        break;
                    }
                }
            }
        }
    }

    // Split cell ci by neighbor count toward `splitter`; pieces ordered by
    // ascending count. Returns true if the cell actually split.
    bool split_cell(Partition& p, int ci, std::uint64_t splitter) const {
        const Cell cell = p.cells[static_cast<std::size_t>(ci)];
        if (cell.len <= 1) return false;

        std::array<std::pair<int, int>, kMaxN> keyed;  // (count, vertex)
        bool uniform = true;
        for (int t = 0; t < cell.len; ++t) {
            const int v = p.order[static_cast<std::size_t>(cell.start + t)];
            const int c = std::popcount(g_.neighbors(v) & splitter);
            keyed[static_cast<std::size_t>(t)] = {c, v};
            if (c != keyed[0].first) uniform = false;
        }
        if (uniform) return false;

        std::stable_sort(keyed.begin(), keyed.begin() + cell.len);
        for (int t = 0; t < cell.len; ++t)
            p.order[static_cast<std::size_t>(cell.start + t)] = keyed[static_cast<std::size_t>(t)].second;

        // Count the pieces, then shift the cell table to make room.
        int pieces = 1;
        for (int t = 1; t < cell.len; ++t)
            if (keyed[static_cast<std::size_t>(t)].first != keyed[static_cast<std::size_t>(t - 1)].first) ++pieces;
        for (int m = p.cell_count - 1; m > ci; --m)
            p.cells[static_cast<std::size_t>(m + pieces - 1)] = p.cells[static_cast<std::size_t>(m)];
        p.cell_count += pieces - 1;

        int w = ci;
        int piece_start = cell.start;
        for (int t = 1; t <= cell.len; ++t) {
            if (t == cell.len ||
                keyed[static_cast<std::size_t>(t)].first != keyed[static_cast<std::size_t>(t - 1)].first) {
                p.cells[static_cast<std::size_t>(w++)] = {piece_start, cell.start + t - piece_start};
                piece_start = cell.start + t;
            }
        }
        return true;
    }

    bool twins(int u, int v) const {
        if (g_.neighbors(u) == g_.neighbors(v)) return true;
        const std::uint64_t cu = g_.neighbors(u) | (std::uint64_t{1} << u);
        const std::uint64_t cv = g_.neighbors(v) | (std::uint64_t{1} << v);
        return cu == cv;
    }

    void search(const Partition& p) {
        int branch_cell = -1;
        for (int ci = 0; ci < p.cell_count; ++ci) {
            if (p.cells[static_cast<std::size_t>(ci)].len > 1) {
                branch_cell = ci;
                break;
            }
        }
        if (branch_cell < 0) {
            consider_leaf(p);
            return;
        }

        const Cell cell = p.cells[static_cast<std::size_t>(branch_cell)];
        std::array<int, kMaxN> cand;
        for (int t = 0; t < cell.len; ++t)
            cand[static_cast<std::size_t>(t)] = p.order[static_cast<std::size_t>(cell.start + t)];
        std::sort(cand.begin(), cand.begin() + cell.len);

        std::array<int, kMaxN> tried;
        int tried_count = 0;
        for (int t = 0; t < cell.len; ++t) {
            const int v = cand[static_cast<std::size_t>(t)];
            // A twin of an expanded candidate reaches the same leaf codes via
            // the transposition automorphism; skip it.
            bool dup = false;
            for (int q = 0; q < tried_count && !dup; ++q)
                dup = twins(tried[static_cast<std::size_t>(q)], v);
            if (dup) continue;
            tried[static_cast<std::size_t>(tried_count++)] = v;

            Partition child = p;
            individualize(child, branch_cell, v);
            refine(child);
            search(child);
        }
    }

    static void individualize(Partition& p, int ci, int v) {
        const Cell cell = p.cells[static_cast<std::size_t>(ci)];
        int at = cell.start;
        while (p.order[static_cast<std::size_t>(at)] != v) ++at;
        for (int t = at; t > cell.start; --t)
            p.order[static_cast<std::size_t>(t)] = p.order[static_cast<std::size_t>(t - 1)];
        p.order[static_cast<std::size_t>(cell.start)] = v;
        for (int m = p.cell_count - 1; m > ci; --m)
            p.cells[static_cast<std::size_t>(m + 1)] = p.cells[static_cast<std::size_t>(m)];
        ++p.cell_count;
        p.cells[static_cast<std::size_t>(ci)] = {cell.start, 1};
        p.cells[static_cast<std::size_t>(ci + 1)] = {cell.start + 1, cell.len - 1};
    }

    void consider_leaf(const Partition& p) {
        std::array<std::uint64_t, kCodeWords> code{};
        int bit = 0;
        for (int j = 1; j < n_; ++j) {
            const std::uint64_t row = g_.neighbors(p.order[static_cast<std::size_t>(j)]);
            for (int i = 0; i < j; ++i, ++bit) {
                if ((row >> p.order[static_cast<std::size_t>(i)]) & 1u)
                    code[static_cast<std::size_t>(bit >> 6)] |= std::uint64_t{1} << (63 - (bit & 63));
            }
        }

        if (best_valid_) {
            int cmp = 0;
            for (int w = 0; w < code_words_ && cmp == 0; ++w) {
                if (code[static_cast<std::size_t>(w)] != best_code_[static_cast<std::size_t>(w)])
                    cmp = code[static_cast<std::size_t>(w)] > best_code_[static_cast<std::size_t>(w)] ? 1 : -1;
            }
            if (cmp <= 0) return;
        }
        best_valid_ = true;
        best_code_ = code;
        for (int idx = 0; idx < n_; ++idx)
            best_perm_[static_cast<std::size_t>(p.order[static_cast<std::size_t>(idx)])] = idx;
    }

    const Graph& g_;
    int n_;
    int code_words_;
    bool best_valid_ = false;
    std::array<std::uint64_t, kCodeWords> best_code_{};
    std::array<int, kMaxN> best_perm_{};
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    Canonicalizer c(g);
    c.run();
    CanonicalForm form;
    form.relabeling = c.best_perm();
    form.graph6 = to_graph6(g.relabeled(form.relabeling));
    return form;
}

Graph canonical_graph(const Graph& g) {
    Canonicalizer c(g);
    c.run();
    return g.relabeled(c.best_perm());
}

std::uint64_t pack_code(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 11) throw ArgumentError("pack_code requires at most 11 vertices");
    std::uint64_t code = 0;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.has_edge(i, j)) code |= std::uint64_t{1} << bit;
    return code;
}

Graph unpack_code(int n, std::uint64_t code) {
    if (n < 1 || n > 11) throw ArgumentError("unpack_code requires 1..11 vertices");
    Graph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((code >> bit) & 1u) g.add_edge(i, j);
    return g;
}

std::uint64_t canonical_code(const Graph& g) {
    if (g.vertex_count() > 11) throw ArgumentError("canonical_code requires at most 11 vertices");
    Canonicalizer c(g);
    c.run();
    return c.packed_code64();
}

}  // namespace pathdeg
