#include "bergelab/matching.hpp"

#include <algorithm>

namespace bergelab {

namespace {

bool augment(int a, const std::vector<std::vector<int>>& adj, std::vector<int>& match_a,
             std::vector<int>& match_b, std::vector<char>& visited) {
    for (int b : adj[a]) {
        if (visited[b]) continue;
        visited[b] = 1;
        if (match_b[b] < 0 || augment(match_b[b], adj, match_a, match_b, visited)) {
            match_a[a] = b;
            match_b[b] = a;
            return true;
        }
    }
    return false;
}

} // namespace

BipartiteMatching max_bipartite_matching(int a_count, int b_count,
                                         const std::vector<std::vector<int>>& adj) {
    BipartiteMatching m;
    m.match_a.assign(a_count, -1);
    m.match_b.assign(b_count, -1);
    std::vector<char> visited(b_count, 0);
    for (int a = 0; a < a_count; ++a) {
        std::fill(visited.begin(), visited.end(), 0);
        if (augment(a, adj, m.match_a, m.match_b, visited)) ++m.size;
    }
    return m;
}

} // namespace bergelab
