#include "bergelab/census.hpp"

#include "bergelab/canonical.hpp"

#include <algorithm>
#include <thread>

namespace bergelab {

namespace {

// Orders pattern vertices so that, inside each component, every vertex after
// the first co-occurs in an edge with an earlier one. Components are entered
// at their highest-degree vertex.
std::vector<int> embedding_order(const Hypergraph& pattern) {
    const int n = pattern.vertex_count();
    std::vector<int> deg(n, 0);
    std::vector<std::vector<int>> adjacent(n);
    for (const Edge& e : pattern.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            ++deg[e[i]];
            for (std::size_t j = 0; j < e.size(); ++j)
                if (i != j) adjacent[e[i]].push_back(e[j]);
        }
    }
    std::vector<int> order;
    std::vector<char> placed(n, 0);
    auto best_unplaced = [&](bool require_neighbor) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            if (require_neighbor) {
                bool linked = false;
                for (int u : adjacent[v])
                    if (placed[u]) {
                        linked = true;
                        break;
                    }
                if (!linked) continue;
            }
            if (pick < 0 || deg[v] > deg[pick]) pick = v;
        }
        return pick;
    };
    while (static_cast<int>(order.size()) < n) {
        int v = best_unplaced(true);
        if (v < 0) v = best_unplaced(false); // start a new component
        placed[v] = 1;
        order.push_back(v);
    }
    return order;
}

struct EmbedCounter {
    const Hypergraph& pattern;
    const Hypergraph& host;
    std::vector<int> order;
    std::vector<int> pattern_degree;
    std::vector<int> host_degree;

    EmbedCounter(const Hypergraph& p, const Hypergraph& h) : pattern(p), host(h) {
        order = embedding_order(p);
        pattern_degree.assign(p.vertex_count(), 0);
        for (const Edge& e : p.edges())
            for (Vertex v : e) ++pattern_degree[v];
        host_degree.assign(h.vertex_count(), 0);
        for (const Edge& e : h.edges())
            for (Vertex v : e) ++host_degree[v];
    }

    bool placement_ok(const std::vector<Vertex>& map, int w) const {
        for (const Edge& e : pattern.edges()) {
            bool touches = false, complete = true;
            for (Vertex u : e) {
                if (u == w) touches = true;
                if (map[u] < 0) complete = false;
            }
            if (!touches || !complete) continue;
            Edge image;
            image.reserve(e.size());
            for (Vertex u : e) image.push_back(map[u]);
            std::sort(image.begin(), image.end());
            if (!host.has_edge(image)) return false;
        }
        return true;
    }

    long long count_from(std::vector<Vertex>& map, std::vector<char>& used, std::size_t pos) {
        if (pos == order.size()) return 1;
        int w = order[pos];
        long long total = 0;
        for (Vertex x = 0; x < host.vertex_count(); ++x) {
            if (used[x] || host_degree[x] < pattern_degree[w]) continue;
            map[w] = x;
            if (placement_ok(map, w)) {
                used[x] = 1;
                total += count_from(map, used, pos + 1);
                used[x] = 0;
            }
            map[w] = -1;
        }
        return total;
    }

    long long count(int threads) {
        if (order.empty()) return 1;
        std::vector<Vertex> firsts;
        for (Vertex x = 0; x < host.vertex_count(); ++x) firsts.push_back(x);
        if (threads <= 1) {
            std::vector<Vertex> map(pattern.vertex_count(), -1);
            std::vector<char> used(host.vertex_count(), 0);
            return count_from(map, used, 0);
        }
        std::vector<long long> partial(firsts.size(), 0);
        std::vector<std::thread> pool;
        auto worker = [&](std::size_t tid) {
            for (std::size_t i = tid; i < firsts.size(); i += threads) {
                std::vector<Vertex> map(pattern.vertex_count(), -1);
                std::vector<char> used(host.vertex_count(), 0);
                int w = order[0];
                Vertex x = firsts[i];
                if (host_degree[x] < pattern_degree[w]) continue;
                map[w] = x;
                if (!placement_ok(map, w)) continue;
                used[x] = 1;
                partial[i] = count_from(map, used, 1);
            }
        };
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
        long long total = 0;
        for (long long p : partial) total += p;
        return total;
    }
};

} // namespace

EmbeddingCount count_copies(const Hypergraph& pattern, const Hypergraph& host,
                            const CensusOptions& options) {
    if (pattern.uniformity() != host.uniformity())
        throw ParameterError("pattern and host must have the same uniformity");
    if (pattern.vertex_count() > options.max_pattern_vertices)
        throw ParameterError("pattern exceeds the configured vertex bound of " +
                             std::to_string(options.max_pattern_vertices));
    EmbeddingCount result;
    result.automorphisms = count_minimal_labelings(pattern);
    EmbedCounter counter(pattern, host);
    result.injective_maps = counter.count(options.threads);
    if (result.injective_maps % result.automorphisms != 0)
        throw std::logic_error("injective map count is not divisible by |Aut|");
    result.copies = result.injective_maps / result.automorphisms;
    return result;
}

long long count_s_cliques(const Hypergraph& h, int s) {
    const int r = h.uniformity();
    if (s < r) throw ParameterError("clique order must be at least the uniformity");
    const int n = h.vertex_count();
    long long count = 0;
    std::vector<Vertex> clique;
    // A new vertex is admissible when every r-subset using it is a hyperedge.
    std::function<bool(Vertex)> admissible = [&](Vertex v) {
        if (static_cast<int>(clique.size()) < r - 1) return true;
        bool ok = true;
        Edge probe(r);
        probe[r - 1] = v;
        for_each_combination(static_cast<int>(clique.size()), r - 1, [&](const Edge& pick) {
            if (!ok) return;
            for (int i = 0; i + 1 < r; ++i) probe[i] = clique[pick[i]];
            Edge sorted_probe = probe;
            std::sort(sorted_probe.begin(), sorted_probe.end());
            if (!h.has_edge(sorted_probe)) ok = false;
        });
        return ok;
    };
    std::function<void(Vertex)> extend = [&](Vertex start) {
        if (static_cast<int>(clique.size()) == s) {
            ++count;
            return;
        }
        for (Vertex v = start; v < n; ++v) {
            if (!admissible(v)) continue;
            clique.push_back(v);
            extend(v + 1);
            clique.pop_back();
        }
    };
    extend(0);
    return count;
}

Hypergraph clique_hypergraph(const Hypergraph& h, int s) {
    const int r = h.uniformity();
    if (s <= r) throw ParameterError("clique hypergraph needs s > uniformity");
    const int n = h.vertex_count();
    std::vector<Edge> cliques;
    for_each_combination(n, s, [&](const Edge& c) {
        bool ok = true;
        for_each_combination(s, r, [&](const Edge& pick) {
            if (!ok) return;
            Edge sub(r);
            for (int i = 0; i < r; ++i) sub[i] = c[pick[i]];
            if (!h.has_edge(sub)) ok = false;
        });
        if (ok) cliques.push_back(c);
    });
    return Hypergraph(n, s, std::move(cliques));
}

long long gamma(const Hypergraph& h, const CensusOptions& options) {
    if (h.vertex_count() > options.max_pattern_vertices)
        throw ParameterError("pattern exceeds the configured vertex bound of " +
                             std::to_string(options.max_pattern_vertices));
    const int r = h.uniformity();
    const Hypergraph shadow_graph = h.edge_count() > 0 ? shadow(h, 2) : Hypergraph(h.vertex_count(), 2);
    const Hypergraph clique_pool = clique_expansion(shadow_graph, r);
    const auto& cliques = clique_pool.edges();
    const int need = h.edge_count();
    const int pool = static_cast<int>(cliques.size());

    // cover[i] = shadow edges inside clique i
    const auto& pairs = shadow_graph.edges();
    std::vector<std::vector<int>> cover(pool);
    for (int i = 0; i < pool; ++i) {
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            if (std::binary_search(cliques[i].begin(), cliques[i].end(), pairs[p][0]) &&
                std::binary_search(cliques[i].begin(), cliques[i].end(), pairs[p][1]))
                cover[i].push_back(static_cast<int>(p));
        }
    }
    const long long pair_capacity = binomial(r, 2);
    const Hypergraph reference = canonical_form(h);

    long long count = 0;
    std::vector<int> chosen;
    std::vector<int> covered(pairs.size(), 0);
    int uncovered = static_cast<int>(pairs.size());
    std::function<void(int)> choose = [&](int start) {
        const int remaining = need - static_cast<int>(chosen.size());
        if (remaining == 0) {
            if (uncovered != 0) return;
            std::vector<Edge> edges;
            for (int i : chosen) edges.push_back(cliques[i]);
            Hypergraph candidate(h.vertex_count(), r, std::move(edges));
            if (canonical_form(candidate) == reference) ++count;
            return;
        }
        if (pool - start < remaining) return;
        if (static_cast<long long>(remaining) * pair_capacity < uncovered) return;
        for (int i = start; i < pool; ++i) {
            if (pool - i < remaining) break;
            chosen.push_back(i);
            for (int p : cover[i])
                if (covered[p]++ == 0) --uncovered;
            choose(i + 1);
            for (int p : cover[i])
                if (--covered[p] == 0) ++uncovered;
            chosen.pop_back();
        }
    };
    choose(0);
    return count;
}

long long automorphism_count(const Hypergraph& h, const CensusOptions& options) {
    if (h.vertex_count() > options.max_pattern_vertices)
        throw ParameterError("pattern exceeds the configured vertex bound of " +
                             std::to_string(options.max_pattern_vertices));
    return count_minimal_labelings(h);
}

} // namespace bergelab
