#pragma once

#include <vector>

namespace bergelab {

struct BipartiteMatching {
    std::vector<int> match_a; // match_a[a] = matched b, or -1
    std::vector<int> match_b; // match_b[b] = matched a, or -1
    int size = 0;
};

/// Maximum bipartite matching on an adjacency list adj[a] = sorted b-indices.
/// Deterministic: augments from the lowest-index free a-vertex, scanning
/// candidates in list order.
BipartiteMatching max_bipartite_matching(int a_count, int b_count,
                                         const std::vector<std::vector<int>>& adj);

} // namespace bergelab
