#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathdeg/avoidance.hpp"
#include "pathdeg/graph.hpp"

namespace pathdeg {

enum class LemmaCase { a, b, c };

const char* to_string(LemmaCase c);
std::optional<LemmaCase> lemma_case_from(const std::string& s);

// Case c's chosen cross edge: a2 in N(b[i]), a2p in N(b[j]), i != j.
struct CrossEdge {
    int i;
    int j;
    int a2;
    int a2p;
};

// Inputs to the path construction: a set B of t vertices of degree >= d
// (2 <= t <= k, d >= n/2 + k + 1), and endpoints x, y outside B of degree at
// least n - d + t + 4. Case b additionally carries an edge inside B, case c a
// cross edge between two B-neighborhoods that avoids B and {x, y}.
struct LemmaInstance {
    Graph g;
    std::vector<int> b;  // b_1..b_t, order meaningful
    int x = 0;
    int y = 0;
    int d = 0;
    int k = 0;
    LemmaCase lemma_case = LemmaCase::a;
    std::optional<std::pair<int, int>> b_edge;  // case b
    std::optional<CrossEdge> cross;             // case c
};

struct InstanceCheck {
    bool valid;
    std::string reason;  // "ok" or the first failed hypothesis
};

struct LemmaPath {
    PathWitness witness;
    std::vector<int> b_order;  // B after the case b/c reordering
};

// 2t+2 (case a), 2t+1 (case b), or 2t+3 (case c).
int promised_length(const LemmaInstance& inst);

InstanceCheck validate_instance(const LemmaInstance& inst);

// Greedy construction following the constructive proof: connectors at the
// two ends first, then interior connectors left to right, each the
// lowest-index common neighbor outside everything chosen so far. On a valid
// instance every candidate set is provably nonempty; an empty one raises
// ConstructionFailure and means a bug, not a runtime condition.
LemmaPath build_path(const LemmaInstance& inst);

}  // namespace pathdeg
