#include "bergelab/pathstruct.hpp"

#include "bergelab/matching.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace bergelab {

std::vector<HangingBlock> hanging_blocks(const Hypergraph& h, int size) {
    if (size < 1) throw ParameterError("block size must be positive");
    const int n = h.vertex_count();
    std::vector<HangingBlock> found;
    if (size > n) return found;

    std::vector<int> comp_of(n, -1);
    std::vector<int> comp_size;
    {
        auto comps = components(h);
        for (std::size_t c = 0; c < comps.size(); ++c) {
            for (Vertex v : comps[c]) comp_of[v] = static_cast<int>(c);
            comp_size.push_back(static_cast<int>(comps[c].size()));
        }
    }

    for_each_combination(n, size, [&](const Edge& candidate) {
        int comp = comp_of[candidate[0]];
        for (Vertex v : candidate)
            if (comp_of[v] != comp) return;
        if (comp_size[comp] == size) return; // whole component carries no content
        std::vector<char> inside(n, 0);
        for (Vertex v : candidate) inside[v] = 1;
        for (Vertex attachment : candidate) {
            if (size == 1) continue; // block == {attachment}
            bool ok = true;
            for (const Edge& e : h.edges()) {
                bool meets = false, contained = true;
                for (Vertex u : e) {
                    if (inside[u] && u != attachment) meets = true;
                    if (!inside[u]) contained = false;
                }
                if (meets && !contained) {
                    ok = false;
                    break;
                }
            }
            if (ok) found.push_back({candidate, attachment});
        }
    });
    return found;
}

namespace {

std::vector<Edge> alive_edges(const Hypergraph& h, const std::vector<char>& alive) {
    std::vector<Edge> kept;
    for (const Edge& e : h.edges()) {
        bool ok = true;
        for (Vertex v : e)
            if (!alive[v]) {
                ok = false;
                break;
            }
        if (ok) kept.push_back(e);
    }
    return kept;
}

} // namespace

PeelingReport classify_component(const Hypergraph& h, int k) {
    if (k < 2) throw ParameterError("path length parameter must be at least 2");
    if (!is_connected(h)) throw ParameterError("classification takes a connected component");
    const int s = h.uniformity();
    const int half = k / 2;
    const long long nice_threshold = binomial(half - 1, s - 1);
    const long long peel_threshold = binomial(half, s - 1);

    bool nice = hanging_blocks(h, half).empty();
    for (Vertex v = 0; nice && v < h.vertex_count(); ++v) {
        if (h.degree(v) < nice_threshold) nice = false;
    }
    if (nice) return {{}, ComponentVerdict::nice, h};

    std::vector<char> alive(h.vertex_count(), 1);
    std::vector<PeelStep> steps;
    while (true) {
        Hypergraph current(h.vertex_count(), s, alive_edges(h, alive));
        // Low-degree deletions first, lowest id first; one vertex per step.
        Vertex victim = -1;
        for (Vertex v = 0; v < h.vertex_count(); ++v) {
            if (alive[v] && current.degree(v) < peel_threshold) {
                victim = v;
                break;
            }
        }
        if (victim >= 0) {
            alive[victim] = 0;
            steps.push_back({PeelKind::low_degree, {victim}});
            continue;
        }
        auto blocks = hanging_blocks(current, half);
        // Blocks listing includes dead isolated vertices as singleton
        // components only; size >= 2 blocks never touch them.
        const HangingBlock* pick = nullptr;
        for (const auto& b : blocks) {
            bool all_alive = true;
            for (Vertex v : b.block)
                if (!alive[v]) all_alive = false;
            if (all_alive) {
                pick = &b;
                break;
            }
        }
        if (!pick) break;
        VertexSet removed;
        for (Vertex v : pick->block)
            if (v != pick->attachment) {
                alive[v] = 0;
                removed.push_back(v);
            }
        steps.push_back({PeelKind::hanging_block, std::move(removed)});
    }
    Hypergraph survivor(h.vertex_count(), s, alive_edges(h, alive));
    ComponentVerdict verdict =
        survivor.edge_count() > 0 ? ComponentVerdict::strong : ComponentVerdict::bad;
    return {std::move(steps), verdict, std::move(survivor)};
}

std::set<ComponentVerdict> peeling_verdicts_all_orders(const Hypergraph& h, int k) {
    if (h.vertex_count() > 8) throw ParameterError("order probe is limited to n <= 8");
    if (k < 2) throw ParameterError("path length parameter must be at least 2");
    if (!is_connected(h)) throw ParameterError("classification takes a connected component");
    const int s = h.uniformity();
    const int half = k / 2;
    const long long nice_threshold = binomial(half - 1, s - 1);
    const long long peel_threshold = binomial(half, s - 1);

    bool nice = hanging_blocks(h, half).empty();
    for (Vertex v = 0; nice && v < h.vertex_count(); ++v)
        if (h.degree(v) < nice_threshold) nice = false;
    if (nice) return {ComponentVerdict::nice};

    std::map<std::uint64_t, std::set<ComponentVerdict>> memo;
    std::function<std::set<ComponentVerdict>(std::uint64_t)> explore =
        [&](std::uint64_t mask) -> std::set<ComponentVerdict> {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::vector<char> alive(h.vertex_count(), 0);
        for (int v = 0; v < h.vertex_count(); ++v)
            if (mask & (1ULL << v)) alive[v] = 1;
        Hypergraph current(h.vertex_count(), s, alive_edges(h, alive));

        std::vector<std::uint64_t> moves;
        for (Vertex v = 0; v < h.vertex_count(); ++v)
            if (alive[v] && current.degree(v) < peel_threshold)
                moves.push_back(mask & ~(1ULL << v));
        for (const auto& b : hanging_blocks(current, half)) {
            bool all_alive = true;
            std::uint64_t next = mask;
            for (Vertex v : b.block) {
                if (!alive[v]) all_alive = false;
                if (v != b.attachment) next &= ~(1ULL << v);
            }
            if (all_alive) moves.push_back(next);
        }
        std::set<ComponentVerdict> result;
        if (moves.empty()) {
            result.insert(current.edge_count() > 0 ? ComponentVerdict::strong
                                                   : ComponentVerdict::bad);
        } else {
            for (std::uint64_t next : moves) {
                auto sub = explore(next);
                result.insert(sub.begin(), sub.end());
            }
        }
        memo[mask] = result;
        return result;
    };
    std::uint64_t full = (h.vertex_count() == 64) ? ~0ULL : ((1ULL << h.vertex_count()) - 1);
    return explore(full);
}

std::optional<BergeStar> find_berge_star(const Hypergraph& h, Vertex center, int leaf_count) {
    if (center < 0 || center >= h.vertex_count()) throw ParameterError("center out of range");
    if (leaf_count <= h.uniformity())
        throw ParameterError("star order must exceed the uniformity");

    std::vector<int> edges_at_center;
    for (int i = 0; i < h.edge_count(); ++i) {
        const Edge& e = h.edges()[i];
        if (std::binary_search(e.begin(), e.end(), center)) edges_at_center.push_back(i);
    }
    std::vector<Vertex> leaves;
    std::vector<int> leaf_slot(h.vertex_count(), -1);
    for (int idx : edges_at_center) {
        for (Vertex v : h.edges()[idx]) {
            if (v != center && leaf_slot[v] < 0) {
                leaf_slot[v] = static_cast<int>(leaves.size());
                leaves.push_back(v);
            }
        }
    }
    std::sort(leaves.begin(), leaves.end());
    for (std::size_t i = 0; i < leaves.size(); ++i) leaf_slot[leaves[i]] = static_cast<int>(i);

    std::vector<std::vector<int>> adj(edges_at_center.size());
    for (std::size_t a = 0; a < edges_at_center.size(); ++a) {
        for (Vertex v : h.edges()[edges_at_center[a]])
            if (v != center) adj[a].push_back(leaf_slot[v]);
        std::sort(adj[a].begin(), adj[a].end());
    }
    BipartiteMatching m = max_bipartite_matching(static_cast<int>(edges_at_center.size()),
                                                 static_cast<int>(leaves.size()), adj);
    if (m.size < leaf_count) return std::nullopt;
    BergeStar star;
    star.center = center;
    for (std::size_t a = 0; a < edges_at_center.size() &&
                            static_cast<int>(star.hyperedges.size()) < leaf_count;
         ++a) {
        if (m.match_a[a] < 0) continue;
        star.hyperedges.push_back(edges_at_center[a]);
        star.leaves.push_back(leaves[m.match_a[a]]);
    }
    return star;
}

namespace {

struct PathSearch {
    const Hypergraph& h;
    std::vector<std::vector<int>> incident;
    int budget;
    std::vector<char> v_used, e_used;
    std::vector<Vertex> vertices;
    std::vector<int> edges;
    BergePathCertificate best;

    PathSearch(const Hypergraph& hg, int budget_)
        : h(hg), budget(budget_), v_used(hg.vertex_count(), 0), e_used(hg.edge_count(), 0) {
        incident.assign(h.vertex_count(), {});
        for (int i = 0; i < h.edge_count(); ++i)
            for (Vertex v : h.edges()[i]) incident[v].push_back(i);
    }

    void offer() {
        const int len = static_cast<int>(edges.size());
        if (!best.vertices.empty() && len < best.length()) return;
        if (best.vertices.empty() || len > best.length() ||
            std::make_pair(vertices, edges) < std::make_pair(best.vertices, best.hyperedges)) {
            best.vertices = vertices;
            best.hyperedges = edges;
        }
    }

    void extend(Vertex v) {
        offer();
        if (budget >= 0 && static_cast<int>(edges.size()) >= budget) return;
        for (int ei : incident[v]) {
            if (e_used[ei]) continue;
            e_used[ei] = 1;
            edges.push_back(ei);
            for (Vertex u : h.edges()[ei]) {
                if (u == v || v_used[u]) continue;
                v_used[u] = 1;
                vertices.push_back(u);
                extend(u);
                vertices.pop_back();
                v_used[u] = 0;
            }
            edges.pop_back();
            e_used[ei] = 0;
        }
    }

    void run_from(Vertex start) {
        v_used[start] = 1;
        vertices.push_back(start);
        extend(start);
        vertices.pop_back();
        v_used[start] = 0;
    }
};

bool better(const BergePathCertificate& a, const BergePathCertificate& b) {
    if (a.length() != b.length()) return a.length() > b.length();
    return std::make_pair(a.vertices, a.hyperedges) < std::make_pair(b.vertices, b.hyperedges);
}

} // namespace

BergePathCertificate longest_berge_path(const Hypergraph& h, const PathSearchOptions& options) {
    if (options.start_vertex >= h.vertex_count())
        throw ParameterError("start vertex out of range");
    BergePathCertificate best;
    if (h.vertex_count() == 0) return best;

    std::vector<Vertex> starts;
    if (options.start_vertex >= 0) {
        starts.push_back(options.start_vertex);
    } else {
        for (Vertex v = 0; v < h.vertex_count(); ++v) starts.push_back(v);
    }

    const int threads = std::max(1, options.threads);
    if (threads == 1 || starts.size() == 1) {
        PathSearch search(h, options.budget);
        for (Vertex s : starts) search.run_from(s);
        best = search.best;
        if (best.vertices.empty()) best.vertices = {starts.front()};
        return best;
    }

    std::vector<BergePathCertificate> partial(starts.size());
    std::vector<std::thread> pool;
    auto worker = [&](int tid) {
        for (std::size_t i = tid; i < starts.size(); i += threads) {
            PathSearch search(h, options.budget);
            search.run_from(starts[i]);
            partial[i] = search.best;
        }
    };
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
    for (const auto& cert : partial) {
        if (!cert.vertices.empty() && (best.vertices.empty() || better(cert, best))) best = cert;
    }
    if (best.vertices.empty()) best.vertices = {starts.front()};
    return best;
}

} // namespace bergelab
