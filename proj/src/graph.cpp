#include "pathdeg/graph.hpp"

#include <algorithm>

namespace pathdeg {

std::vector<std::pair<int, int>> degree_sequence(const Graph& g) {
    std::vector<std::pair<int, int>> seq;
    seq.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) seq.emplace_back(v, g.degree(v));
    std::stable_sort(seq.begin(), seq.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    return seq;
}

}  // namespace pathdeg
