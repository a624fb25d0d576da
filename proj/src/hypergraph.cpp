#include "bergelab/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace bergelab {

bool colex_less(const Edge& a, const Edge& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

void for_each_combination(int n, int k, const std::function<void(const Edge&)>& fn) {
    if (k < 0 || k > n) return;
    Edge combo(k);
    std::iota(combo.begin(), combo.end(), 0);
    std::vector<Edge> all;
    while (true) {
        all.push_back(combo);
        int i = k - 1;
        while (i >= 0 && combo[i] == n - k + i) --i;
        if (i < 0) break;
        ++combo[i];
        for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
    std::sort(all.begin(), all.end(), colex_less);
    for (const Edge& e : all) fn(e);
}

Hypergraph::Hypergraph(int n, int r) : Hypergraph(n, r, {}) {}

Hypergraph::Hypergraph(int n, int r, std::vector<Edge> edges) : n_(n), r_(r), edges_(std::move(edges)) {
    if (n_ < 0) throw ParameterError("vertex count must be nonnegative");
    if (r_ < 2) throw ParameterError("uniformity must be at least 2");
    for (Edge& e : edges_) {
        if (static_cast<int>(e.size()) != r_)
            throw ParameterError("edge has " + std::to_string(e.size()) + " vertices, expected " +
                                 std::to_string(r_));
        std::sort(e.begin(), e.end());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= n_)
                throw ParameterError("vertex " + std::to_string(e[i]) + " out of range [0, " +
                                     std::to_string(n_) + ")");
            if (i > 0 && e[i] == e[i - 1])
                throw ParameterError("edge contains vertex " + std::to_string(e[i]) + " twice");
        }
    }
    std::sort(edges_.begin(), edges_.end(), colex_less);
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i] == edges_[i - 1]) throw ParameterError("duplicate edge");
    }
}

bool Hypergraph::has_edge(const Edge& sorted_edge) const {
    return std::binary_search(edges_.begin(), edges_.end(), sorted_edge, colex_less);
}

int Hypergraph::degree(Vertex v) const {
    if (v < 0 || v >= n_) throw ParameterError("vertex " + std::to_string(v) + " out of range");
    int d = 0;
    for (const Edge& e : edges_) {
        if (std::binary_search(e.begin(), e.end(), v)) ++d;
    }
    return d;
}

Hypergraph shadow(const Hypergraph& g, int r) {
    if (r < 2 || r > g.uniformity())
        throw ParameterError("shadow uniformity must satisfy 2 <= r <= " +
                             std::to_string(g.uniformity()));
    std::set<Edge> subsets;
    for (const Edge& e : g.edges()) {
        for_each_combination(static_cast<int>(e.size()), r, [&](const Edge& pick) {
            Edge sub(r);
            for (int i = 0; i < r; ++i) sub[i] = e[pick[i]];
            std::sort(sub.begin(), sub.end());
            subsets.insert(sub);
        });
    }
    return Hypergraph(g.vertex_count(), r, {subsets.begin(), subsets.end()});
}

Hypergraph expansion(const Hypergraph& f, int r) {
    if (f.uniformity() != 2) throw ParameterError("expansion takes a graph");
    if (r < 3) throw ParameterError("expansion uniformity must be at least 3");
    const int base = f.vertex_count();
    const int fresh_per_edge = r - 2;
    std::vector<Edge> edges;
    int next_fresh = base;
    for (const Edge& e : f.edges()) {
        Edge blown = e;
        for (int j = 0; j < fresh_per_edge; ++j) blown.push_back(next_fresh++);
        edges.push_back(std::move(blown));
    }
    return Hypergraph(base + fresh_per_edge * f.edge_count(), r, std::move(edges));
}

Hypergraph turan_graph(int n, int k) {
    if (k < 2) throw ParameterError("turan graph needs k >= 2");
    if (n < 1) throw ParameterError("turan graph needs n >= 1");
    const int parts = k - 1;
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (u % parts != v % parts) edges.push_back({u, v});
        }
    }
    return Hypergraph(n, 2, std::move(edges));
}

Hypergraph clique_expansion(const Hypergraph& g, int r) {
    if (g.uniformity() != 2) throw ParameterError("clique expansion takes a graph");
    if (r < 2) throw ParameterError("clique expansion needs r >= 2");
    const int n = g.vertex_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const Edge& e : g.edges()) adj[e[0]][e[1]] = adj[e[1]][e[0]] = true;
    std::vector<Edge> cliques;
    for_each_combination(n, r, [&](const Edge& c) {
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                if (!adj[c[i]][c[j]]) return;
        cliques.push_back(c);
    });
    return Hypergraph(n, r, std::move(cliques));
}

Hypergraph star_path_construction(int n, int r, int k) {
    if (r < 2) throw ParameterError("uniformity must be at least 2");
    if (k < 2 * r + 2) throw ParameterError("needs k >= 2r+2");
    if (n < k) throw ParameterError("needs n >= k");
    const int core_size = k / 2 - 1; // |S|
    const Vertex u1 = core_size, u2 = core_size + 1;
    const bool odd = (k % 2 == 1);
    std::vector<Edge> edges;
    for_each_combination(n, r, [&](const Edge& e) {
        int in_core = 0;
        bool has_u1 = false, has_u2 = false;
        for (Vertex v : e) {
            if (v < core_size) ++in_core;
            if (v == u1) has_u1 = true;
            if (v == u2) has_u2 = true;
        }
        if (in_core >= r - 1) {
            edges.push_back(e);
        } else if (odd && has_u1 && has_u2 && in_core == r - 2) {
            edges.push_back(e);
        }
    });
    return Hypergraph(n, r, std::move(edges));
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

std::vector<VertexSet> components(const Hypergraph& h) {
    const int n = h.vertex_count();
    Dsu dsu(n);
    for (const Edge& e : h.edges()) {
        for (std::size_t i = 1; i < e.size(); ++i) dsu.unite(e[0], e[i]);
    }
    std::vector<VertexSet> result;
    std::vector<int> slot(n, -1);
    for (int v = 0; v < n; ++v) {
        int root = dsu.find(v);
        if (slot[root] < 0) {
            slot[root] = static_cast<int>(result.size());
            result.emplace_back();
        }
        result[slot[root]].push_back(v);
    }
    return result;
}

bool is_connected(const Hypergraph& h) {
    return components(h).size() == 1;
}

} // namespace bergelab
