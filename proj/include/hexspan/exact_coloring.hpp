#pragma once

#include <vector>

namespace hexspan {

enum class SolveStatus { colorable, not_colorable, node_limit };

struct SolveResult {
    SolveStatus status = SolveStatus::node_limit;
    std::vector<int> colors;  // 0-based, only when colorable
    long long nodes = 0;
};

// Exact k-colourability by DSATUR branch and bound. The branching vertex is
// the uncoloured vertex with the most distinct neighbour colours, ties
// broken by uncoloured degree and then by lowest index. A new colour is only
// ever the next unused one, which removes colour-permutation symmetry.
// Deterministic for a given graph.
SolveResult color_exact(const std::vector<std::vector<int>>& adjacency, int budget, long long node_limit);

} // namespace hexspan
