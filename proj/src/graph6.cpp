#include "pathdeg/graph6.hpp"

namespace pathdeg {

namespace {

constexpr int kBias = 63;

int body_bits(int n) { return n * (n - 1) / 2; }

int body_bytes(int n) { return (body_bits(n) + 5) / 6; }

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    }
    int group = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kBias));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
    return out;
}

Graph from_graph6(std::string_view s) {
    if (s.empty()) throw Graph6ParseError("graph6: empty input", 0);

    std::size_t pos = 0;
    long n;
    if (static_cast<unsigned char>(s[0]) == 126) {
        // Extended header: '~' plus 18 bits of n. (The 36-bit '~~' form starts
        // at n > 258047, far beyond this library's 64-vertex cap.)
        if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126)
            throw Graph6ParseError("graph6: vertex count exceeds 64", 1);
        if (s.size() < 4) throw Graph6ParseError("graph6: truncated extended header", s.size());
        n = 0;
        for (pos = 1; pos <= 3; ++pos) {
            const int c = static_cast<unsigned char>(s[pos]);
            if (c < kBias || c > 126)
                throw Graph6ParseError("graph6: invalid header byte", pos);
            n = (n << 6) | (c - kBias);
        }
    } else {
        const int c = static_cast<unsigned char>(s[0]);
        if (c < kBias || c > 126) throw Graph6ParseError("graph6: invalid header byte", 0);
        n = c - kBias;
        pos = 1;
    }
    if (n < 1) throw Graph6ParseError("graph6: vertex count must be at least 1", 0);
    if (n > Graph::max_vertices) throw Graph6ParseError("graph6: vertex count exceeds 64", 0);

    const int nv = static_cast<int>(n);
    const std::size_t expected = static_cast<std::size_t>(body_bytes(nv));
    if (s.size() - pos < expected)
        throw Graph6ParseError("graph6: truncated bit body", s.size());
    if (s.size() - pos > expected)
        throw Graph6ParseError("graph6: trailing bytes after bit body", pos + expected);

    Graph g(nv);
    int i = 0, j = 1;
    const int bits = body_bits(nv);
    for (int bit = 0; bit < static_cast<int>(expected) * 6; ++bit) {
        const std::size_t byte_pos = pos + static_cast<std::size_t>(bit / 6);
        const int c = static_cast<unsigned char>(s[byte_pos]);
        if (c < kBias || c > 126) throw Graph6ParseError("graph6: invalid body byte", byte_pos);
        const int value = (c - kBias) >> (5 - bit % 6) & 1;
        if (bit >= bits) {
            if (value != 0)
                throw Graph6ParseError("graph6: nonzero padding bit", byte_pos);
            continue;
        }
        if (value) g.add_edge(i, j);
        if (++i == j) {
            i = 0;
            ++j;
        }
    }
    return g;
}

}  // namespace pathdeg
