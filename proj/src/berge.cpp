#include "bergelab/berge.hpp"

#include "bergelab/matching.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace bergelab {

namespace {

// Pattern-vertex order: descending degree, ties by id.
std::vector<int> pattern_order(const Hypergraph& f) {
    std::vector<int> deg(f.vertex_count(), 0);
    for (const Edge& e : f.edges())
        for (Vertex v : e) ++deg[v];
    std::vector<int> order(f.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return deg[a] != deg[b] ? deg[a] > deg[b] : a < b; });
    return order;
}

struct BergeSearch {
    const Hypergraph& host;
    const Hypergraph& core;
    std::vector<std::vector<std::vector<int>>> pair_edges; // pair_edges[u][v] = host edges with {u,v}
    std::vector<std::vector<std::pair<int, int>>> core_adj; // core_adj[u] = (neighbor, core edge idx)
    std::vector<int> order;                                  // placement order of core vertices
    std::vector<int> rank;                                   // rank[u] = position in order
    std::vector<Vertex> core_map;
    std::vector<char> host_used;
    std::vector<int> match_core;  // core edge -> host edge or -1
    std::vector<int> match_host;  // host edge -> core edge or -1
    int forced_core_edge = -1;    // optional root constraint
    int forced_host_edge = -1;

    BergeSearch(const Hypergraph& h, const Hypergraph& f) : host(h), core(f) {
        const int n = h.vertex_count();
        pair_edges.assign(n, std::vector<std::vector<int>>(n));
        for (int b = 0; b < h.edge_count(); ++b) {
            const Edge& e = h.edges()[b];
            for (std::size_t i = 0; i < e.size(); ++i)
                for (std::size_t j = i + 1; j < e.size(); ++j) {
                    pair_edges[e[i]][e[j]].push_back(b);
                    pair_edges[e[j]][e[i]].push_back(b);
                }
        }
        core_adj.assign(f.vertex_count(), {});
        for (int i = 0; i < f.edge_count(); ++i) {
            const Edge& e = f.edges()[i];
            core_adj[e[0]].emplace_back(e[1], i);
            core_adj[e[1]].emplace_back(e[0], i);
        }
        order = pattern_order(f);
        rank.assign(f.vertex_count(), 0);
        for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
        core_map.assign(f.vertex_count(), -1);
        host_used.assign(n, 0);
        match_core.assign(f.edge_count(), -1);
        match_host.assign(h.edge_count(), -1);
    }

    void reset() {
        std::fill(core_map.begin(), core_map.end(), -1);
        std::fill(host_used.begin(), host_used.end(), 0);
        std::fill(match_core.begin(), match_core.end(), -1);
        std::fill(match_host.begin(), match_host.end(), -1);
        forced_core_edge = forced_host_edge = -1;
    }

    const std::vector<int>& candidates(int core_edge) const {
        static const std::vector<int> empty;
        if (core_edge == forced_core_edge) {
            // The forced host edge is injected via a one-element list.
            return forced_candidates;
        }
        const Edge& e = core.edges()[core_edge];
        Vertex u = core_map[e[0]], v = core_map[e[1]];
        if (u < 0 || v < 0) return empty;
        return pair_edges[u][v];
    }

    std::vector<int> forced_candidates;
    std::vector<char> visited;

    bool augment(int core_edge) {
        for (int b : candidates(core_edge)) {
            if (visited[b]) continue;
            visited[b] = 1;
            if (match_host[b] < 0 || augment(match_host[b])) {
                match_core[core_edge] = b;
                match_host[b] = core_edge;
                return true;
            }
        }
        return false;
    }

    bool try_match(int core_edge) {
        visited.assign(host.edge_count(), 0);
        return augment(core_edge);
    }

    // Places core vertices order[pos..]; returns true once every vertex is
    // placed with a full matching in hand.
    bool extend(std::size_t pos) {
        if (pos == order.size()) return true;
        int w = order[pos];
        if (core_map[w] >= 0) return extend(pos + 1); // pre-placed root vertex
        for (Vertex x = 0; x < host.vertex_count(); ++x) {
            if (host_used[x]) continue;
            bool viable = true;
            std::vector<int> completed;
            for (auto [p, ei] : core_adj[w]) {
                if (core_map[p] < 0) continue;
                if (pair_edges[core_map[p]][x].empty()) {
                    viable = false;
                    break;
                }
                completed.push_back(ei);
            }
            if (!viable) continue;
            core_map[w] = x;
            host_used[x] = 1;
            std::vector<int> saved_core = match_core;
            std::vector<int> saved_host = match_host;
            bool ok = true;
            for (int ei : completed) {
                if (ei == forced_core_edge) continue; // pre-matched
                if (!try_match(ei)) {
                    ok = false;
                    break;
                }
            }
            if (ok && extend(pos + 1)) return true;
            match_core = saved_core;
            match_host = saved_host;
            core_map[w] = -1;
            host_used[x] = 0;
        }
        return false;
    }
};

long long count_graph_cliques(const Hypergraph& g, int s) {
    // Small local clique counter so the decomposition can re-check its own
    // bound without depending on the census module.
    const int n = g.vertex_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const Edge& e : g.edges()) adj[e[0]][e[1]] = adj[e[1]][e[0]] = true;
    long long count = 0;
    std::vector<int> chosen;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(chosen.size()) == s) {
            ++count;
            return;
        }
        for (int v = start; v < n; ++v) {
            bool ok = true;
            for (int u : chosen)
                if (!adj[u][v]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(v);
            rec(v + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    return count;
}

} // namespace

std::optional<BergeCertificate> contains_berge(const Hypergraph& h, const Hypergraph& f) {
    if (f.uniformity() != 2) throw ParameterError("the forbidden core must be a graph");
    if (f.edge_count() == 0) throw ParameterError("the forbidden core needs at least one edge");
    if (f.edge_count() > h.edge_count()) return std::nullopt;
    if (f.vertex_count() > h.vertex_count()) return std::nullopt;
    BergeSearch search(h, f);
    if (!search.extend(0)) return std::nullopt;
    return BergeCertificate{search.core_map, search.match_core};
}

bool is_berge_free(const Hypergraph& h, const Hypergraph& f) {
    return !contains_berge(h, f).has_value();
}

bool certificate_valid(const Hypergraph& h, const Hypergraph& f, const BergeCertificate& cert) {
    if (static_cast<int>(cert.core_map.size()) != f.vertex_count()) return false;
    if (static_cast<int>(cert.assignment.size()) != f.edge_count()) return false;
    std::vector<char> vertex_used(h.vertex_count(), 0);
    for (Vertex x : cert.core_map) {
        if (x < 0 || x >= h.vertex_count() || vertex_used[x]) return false;
        vertex_used[x] = 1;
    }
    std::vector<char> edge_used(h.edge_count(), 0);
    for (int i = 0; i < f.edge_count(); ++i) {
        int b = cert.assignment[i];
        if (b < 0 || b >= h.edge_count() || edge_used[b]) return false;
        edge_used[b] = 1;
        const Edge& image = h.edges()[b];
        for (Vertex u : f.edges()[i]) {
            if (!std::binary_search(image.begin(), image.end(), cert.core_map[u])) return false;
        }
    }
    return true;
}

bool contains_berge_using_edge(const Hypergraph& h, const Hypergraph& f, int edge_index) {
    if (f.uniformity() != 2) throw ParameterError("the forbidden core must be a graph");
    if (f.edge_count() == 0) throw ParameterError("the forbidden core needs at least one edge");
    if (edge_index < 0 || edge_index >= h.edge_count()) throw ParameterError("edge index out of range");
    if (f.edge_count() > h.edge_count()) return false;
    if (f.vertex_count() > h.vertex_count()) return false;
    const Edge& root = h.edges()[edge_index];
    BergeSearch search(h, f);
    search.forced_candidates = {edge_index};
    for (int ei = 0; ei < f.edge_count(); ++ei) {
        const Edge& ce = f.edges()[ei];
        for (Vertex x : root) {
            for (Vertex y : root) {
                if (x == y) continue;
                search.reset();
                search.forced_core_edge = ei;
                search.forced_host_edge = edge_index;
                search.core_map[ce[0]] = x;
                search.core_map[ce[1]] = y;
                search.host_used[x] = 1;
                search.host_used[y] = 1;
                search.match_core[ei] = edge_index;
                search.match_host[edge_index] = ei;
                if (search.extend(0)) return true;
            }
        }
    }
    return false;
}

long long RedBlueGraph::blue_count() const {
    long long c = 0;
    for (EdgeColor ec : color)
        if (ec == EdgeColor::blue) ++c;
    return c;
}

Hypergraph RedBlueGraph::subgraph(EdgeColor c) const {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < color.size(); ++i)
        if (color[i] == c) edges.push_back(graph.edges()[i]);
    return Hypergraph(graph.vertex_count(), 2, std::move(edges));
}

RedBlueGraph red_blue_decompose(const Hypergraph& h, const Hypergraph& f) {
    if (auto cert = contains_berge(h, f)) {
        throw BergeCopyPresentError("input contains a Berge copy of the forbidden graph",
                                    *cert);
    }
    const Hypergraph sh = h.edge_count() > 0 ? shadow(h, 2) : Hypergraph(h.vertex_count(), 2);
    const auto& pairs = sh.edges();
    const int a_count = static_cast<int>(pairs.size());
    const int b_count = h.edge_count();

    std::vector<std::vector<int>> adj(a_count);
    std::vector<std::vector<int>> radj(b_count);
    for (int a = 0; a < a_count; ++a) {
        for (int b = 0; b < b_count; ++b) {
            const Edge& he = h.edges()[b];
            if (std::binary_search(he.begin(), he.end(), pairs[a][0]) &&
                std::binary_search(he.begin(), he.end(), pairs[a][1])) {
                adj[a].push_back(b);
                radj[b].push_back(a);
            }
        }
    }
    BipartiteMatching m = max_bipartite_matching(a_count, b_count, adj);

    // Alternating reachability from hyperedges uncovered by the matching:
    // hyperedge -> (non-matching) shadow pair -> (matching) hyperedge -> ...
    std::vector<char> a_reached(a_count, 0), b_seen(b_count, 0);
    std::queue<int> queue;
    for (int b = 0; b < b_count; ++b) {
        if (m.match_b[b] < 0) {
            b_seen[b] = 1;
            queue.push(b);
        }
    }
    while (!queue.empty()) {
        int b = queue.front();
        queue.pop();
        for (int a : radj[b]) {
            if (m.match_a[a] == b || a_reached[a]) continue;
            a_reached[a] = 1;
            if (m.match_a[a] < 0)
                throw std::logic_error("alternating path reached an unmatched pair");
            int next = m.match_a[a];
            if (!b_seen[next]) {
                b_seen[next] = 1;
                queue.push(next);
            }
        }
    }

    std::vector<Edge> colored_edges;
    std::vector<EdgeColor> colors;
    for (int a = 0; a < a_count; ++a) {
        if (m.match_a[a] < 0) continue;
        colored_edges.push_back(pairs[a]);
        colors.push_back(a_reached[a] ? EdgeColor::red : EdgeColor::blue);
    }
    RedBlueGraph result{Hypergraph(h.vertex_count(), 2, colored_edges), std::move(colors)};

    if (contains_subhypergraph(result.graph, f))
        throw std::logic_error("decomposition produced a graph containing the forbidden core");
    long long bound = result.blue_count() +
                      count_graph_cliques(result.subgraph(EdgeColor::red), h.uniformity());
    if (h.edge_count() > bound)
        throw std::logic_error("decomposition bound violated");
    return result;
}

bool is_nice(const Hypergraph& h, const Hypergraph& f) {
    if (f.uniformity() != 2) throw ParameterError("niceness is relative to a graph");
    const long long threshold =
        std::min<long long>(f.edge_count(), binomial(h.uniformity(), 2));
    if (h.edge_count() == 0) return true;
    for (const Edge& pair : shadow(h, 2).edges()) {
        long long cover = 0;
        for (const Edge& he : h.edges()) {
            if (std::binary_search(he.begin(), he.end(), pair[0]) &&
                std::binary_search(he.begin(), he.end(), pair[1]))
                ++cover;
        }
        if (cover < threshold) return false;
    }
    return true;
}

namespace {

bool embed_sub(const Hypergraph& g, const Hypergraph& x, const std::vector<int>& order,
               std::vector<Vertex>& map, std::vector<char>& used, std::size_t pos) {
    if (pos == order.size()) return true;
    int w = order[pos];
    for (Vertex cand = 0; cand < g.vertex_count(); ++cand) {
        if (used[cand]) continue;
        map[w] = cand;
        bool ok = true;
        for (const Edge& e : x.edges()) {
            bool complete = true;
            bool touches = false;
            for (Vertex u : e) {
                if (u == w) touches = true;
                if (map[u] < 0) {
                    complete = false;
                    break;
                }
            }
            if (!complete || !touches) continue;
            Edge image;
            for (Vertex u : e) image.push_back(map[u]);
            std::sort(image.begin(), image.end());
            if (!g.has_edge(image)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            used[cand] = 1;
            if (embed_sub(g, x, order, map, used, pos + 1)) return true;
            used[cand] = 0;
        }
        map[w] = -1;
    }
    return false;
}

} // namespace

bool contains_subhypergraph(const Hypergraph& g, const Hypergraph& x) {
    if (g.uniformity() != x.uniformity())
        throw ParameterError("subhypergraph containment needs matching uniformity");
    if (x.vertex_count() > g.vertex_count()) return false;
    if (x.edge_count() > g.edge_count()) return false;
    std::vector<int> order = pattern_order(x);
    std::vector<Vertex> map(x.vertex_count(), -1);
    std::vector<char> used(g.vertex_count(), 0);
    return embed_sub(g, x, order, map, used, 0);
}

namespace detail {

BergeProbe::BergeProbe(int host_n, Hypergraph core) : n_(host_n), core_(std::move(core)) {
    if (core_.uniformity() != 2) throw ParameterError("the forbidden core must be a graph");
    if (core_.edge_count() == 0) throw ParameterError("the forbidden core needs at least one edge");
    order_ = pattern_order(core_);
    core_adj_.assign(core_.vertex_count(), {});
    for (int i = 0; i < core_.edge_count(); ++i) {
        const Edge& e = core_.edges()[i];
        core_adj_[e[0]].emplace_back(e[1], i);
        core_adj_[e[1]].emplace_back(e[0], i);
    }
    incident_.assign(n_, 0);
    core_map_.assign(core_.vertex_count(), -1);
    host_used_.assign(n_, 0);
    match_core_.assign(core_.edge_count(), -1);
    match_host_.assign(64, -1);
}

void BergeProbe::reset() {
    std::fill(core_map_.begin(), core_map_.end(), -1);
    std::fill(host_used_.begin(), host_used_.end(), 0);
    std::fill(match_core_.begin(), match_core_.end(), -1);
    std::fill(match_host_.begin(), match_host_.end(), -1);
    forced_core_edge_ = -1;
    forced_bit_ = 0;
}

std::uint64_t BergeProbe::candidate_mask(int core_edge) const {
    if (core_edge == forced_core_edge_) return forced_bit_;
    const Edge& e = core_.edges()[core_edge];
    return incident_[core_map_[e[0]]] & incident_[core_map_[e[1]]];
}

bool BergeProbe::augment(int core_edge) {
    std::uint64_t cands = candidate_mask(core_edge);
    while (cands) {
        int b = std::countr_zero(cands);
        std::uint64_t bit = cands & (~cands + 1);
        cands ^= bit;
        if (visited_ & bit) continue;
        visited_ |= bit;
        if (match_host_[b] < 0 || augment(match_host_[b])) {
            match_core_[core_edge] = b;
            match_host_[b] = core_edge;
            return true;
        }
    }
    return false;
}

bool BergeProbe::extend(std::size_t pos) {
    if (pos == order_.size()) return true;
    int w = order_[pos];
    if (core_map_[w] >= 0) return extend(pos + 1);
    for (Vertex x = 0; x < n_; ++x) {
        if (host_used_[x]) continue;
        bool viable = true;
        int completed[32];
        int completed_count = 0;
        for (auto [p, ei] : core_adj_[w]) {
            if (core_map_[p] < 0) continue;
            if ((incident_[core_map_[p]] & incident_[x]) == 0) {
                viable = false;
                break;
            }
            completed[completed_count++] = ei;
        }
        if (!viable) continue;
        core_map_[w] = x;
        host_used_[x] = 1;
        auto saved_core = match_core_;
        auto saved_host = match_host_;
        bool ok = true;
        for (int c = 0; c < completed_count; ++c) {
            if (completed[c] == forced_core_edge_) continue;
            visited_ = 0;
            if (!augment(completed[c])) {
                ok = false;
                break;
            }
        }
        if (ok && extend(pos + 1)) return true;
        match_core_ = saved_core;
        match_host_ = saved_host;
        core_map_[w] = -1;
        host_used_[x] = 0;
    }
    return false;
}

bool BergeProbe::contains(const std::vector<Edge>& host_edges, bool require_last) {
    const int m = static_cast<int>(host_edges.size());
    if (m > 64) throw ParameterError("probe hosts are limited to 64 hyperedges");
    if (m < core_.edge_count()) return false;
    if (core_.vertex_count() > n_) return false;
    std::fill(incident_.begin(), incident_.end(), 0);
    for (int i = 0; i < m; ++i)
        for (Vertex v : host_edges[i]) incident_[v] |= 1ULL << i;

    if (!require_last) {
        reset();
        return extend(0);
    }
    const Edge& root = host_edges[m - 1];
    for (int ce = 0; ce < core_.edge_count(); ++ce) {
        const Edge& e = core_.edges()[ce];
        for (Vertex x : root) {
            for (Vertex y : root) {
                if (x == y) continue;
                reset();
                forced_core_edge_ = ce;
                forced_bit_ = 1ULL << (m - 1);
                core_map_[e[0]] = x;
                core_map_[e[1]] = y;
                host_used_[x] = 1;
                host_used_[y] = 1;
                match_core_[ce] = m - 1;
                match_host_[m - 1] = ce;
                if (extend(0)) return true;
            }
        }
    }
    return false;
}

SubgraphProbe::SubgraphProbe(int host_n, Hypergraph pattern)
    : n_(host_n), pattern_(std::move(pattern)) {
    order_ = pattern_order(pattern_);
    map_.assign(pattern_.vertex_count(), -1);
    used_.assign(n_, 0);
}

bool SubgraphProbe::extend(const std::vector<Edge>& host, std::size_t pos) {
    if (pos == order_.size()) return true;
    int w = order_[pos];
    if (map_[w] >= 0) return extend(host, pos + 1);
    for (Vertex x = 0; x < n_; ++x) {
        if (used_[x]) continue;
        map_[w] = x;
        bool ok = true;
        for (const Edge& e : pattern_.edges()) {
            bool touches = false, complete = true;
            for (Vertex u : e) {
                if (u == w) touches = true;
                if (map_[u] < 0) complete = false;
            }
            if (!touches || !complete) continue;
            Edge image;
            image.reserve(e.size());
            for (Vertex u : e) image.push_back(map_[u]);
            std::sort(image.begin(), image.end());
            if (!std::binary_search(host.begin(), host.end(), image, colex_less)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            used_[x] = 1;
            if (extend(host, pos + 1)) return true;
            used_[x] = 0;
        }
        map_[w] = -1;
    }
    return false;
}

bool SubgraphProbe::contains(const std::vector<Edge>& host_edges, bool require_last) {
    if (static_cast<int>(host_edges.size()) < pattern_.edge_count()) return false;
    if (pattern_.vertex_count() > n_) return false;
    if (!require_last) {
        std::fill(map_.begin(), map_.end(), -1);
        std::fill(used_.begin(), used_.end(), 0);
        return extend(host_edges, 0);
    }
    const Edge& root = host_edges.back();
    for (int pe = 0; pe < pattern_.edge_count(); ++pe) {
        Edge assign = root;
        std::sort(assign.begin(), assign.end());
        do {
            std::fill(map_.begin(), map_.end(), -1);
            std::fill(used_.begin(), used_.end(), 0);
            const Edge& e = pattern_.edges()[pe];
            for (std::size_t i = 0; i < e.size(); ++i) {
                map_[e[i]] = assign[i];
                used_[assign[i]] = 1;
            }
            if (extend(host_edges, 0)) return true;
        } while (std::next_permutation(assign.begin(), assign.end()));
    }
    return false;
}

} // namespace detail

} // namespace bergelab
