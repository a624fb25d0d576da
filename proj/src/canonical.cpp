#include "bergelab/canonical.hpp"

#include <algorithm>
#include <map>

namespace bergelab {

long long colex_rank(const Edge& e) {
    long long rank = 0;
    for (std::size_t i = 0; i < e.size(); ++i) rank += binomial(e[i], static_cast<int>(i) + 1);
    return rank;
}

Edge colex_unrank(long long rank, int r) {
    Edge e(r);
    for (int i = r; i >= 1; --i) {
        int v = i - 1;
        while (binomial(v + 1, i) <= rank) ++v;
        rank -= binomial(v, i);
        e[i - 1] = v;
    }
    return e;
}

std::vector<long long> colex_encoding(const Hypergraph& h) {
    std::vector<long long> enc;
    enc.reserve(h.edge_count());
    for (const Edge& e : h.edges()) enc.push_back(colex_rank(e));
    std::sort(enc.begin(), enc.end());
    return enc;
}

namespace {

// Candidate ordering for the labeling search: partition refinement on
// (degree, pair-codegree) signatures, iterated to a fixpoint. Cells are
// ordered by signature, so the ordering is isomorphism-invariant. This only
// steers the search; the minimum is taken over all labelings.
std::vector<int> refinement_order(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> codeg(n, std::vector<int>(n, 0));
    std::vector<int> deg(n, 0);
    for (const Edge& e : edges) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            ++deg[e[i]];
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                ++codeg[e[i]][e[j]];
                ++codeg[e[j]][e[i]];
            }
        }
    }
    std::vector<int> cell(n, 0);
    int cell_count = 1;
    while (true) {
        using Sig = std::pair<std::vector<int>, std::vector<std::pair<int, int>>>;
        std::map<Sig, std::vector<int>> groups;
        for (int v = 0; v < n; ++v) {
            Sig sig;
            sig.first = {cell[v], deg[v]};
            for (int u = 0; u < n; ++u) {
                if (u != v) sig.second.emplace_back(cell[u], codeg[v][u]);
            }
            std::sort(sig.second.begin(), sig.second.end());
            groups[sig].push_back(v);
        }
        int next = 0;
        std::vector<int> new_cell(n);
        for (const auto& [sig, members] : groups) {
            for (int v : members) new_cell[v] = next;
            ++next;
        }
        if (next == cell_count) break;
        cell_count = next;
        cell = std::move(new_cell);
    }
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return cell[a] != cell[b] ? cell[a] < cell[b] : a < b; });
    return order;
}

enum class Mode { find_min, test_min, count_aut };

struct LabelingSearch {
    int n;
    const std::vector<Edge>& edges;
    std::vector<std::vector<int>> incident; // incident[v] = indices of edges containing v
    std::vector<int> candidates;            // fixed candidate order
    Mode mode;

    std::vector<long long> best; // complete reference encoding
    std::vector<long long> enc;  // encoding along the current path
    std::vector<int> label_of;   // host vertex -> label or -1
    std::vector<char> edge_done; // edge fully labeled
    long long generation = 0;
    long long aut_count = 0;
    bool found_smaller = false;

    LabelingSearch(int n_, const std::vector<Edge>& edges_, Mode mode_)
        : n(n_), edges(edges_), mode(mode_) {
        incident.assign(n, {});
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (Vertex v : edges[i]) incident[v].push_back(static_cast<int>(i));
        candidates = refinement_order(n, edges);
        label_of.assign(n, -1);
        edge_done.assign(edges.size(), 0);
        enc.reserve(edges.size());
    }

    // Encodes the edges completed by labeling vertex v; the encoding grows
    // append-only because colex ranks are graded by the maximum label.
    bool chunk_for(Vertex v, std::vector<long long>& chunk, std::vector<int>& closed) {
        for (int ei : incident[v]) {
            if (edge_done[ei]) continue;
            bool complete = true;
            for (Vertex u : edges[ei]) {
                if (label_of[u] < 0) {
                    complete = false;
                    break;
                }
            }
            if (!complete) continue;
            Edge labels;
            for (Vertex u : edges[ei]) labels.push_back(label_of[u]);
            std::sort(labels.begin(), labels.end());
            chunk.push_back(colex_rank(labels));
            closed.push_back(ei);
        }
        std::sort(chunk.begin(), chunk.end());
        return true;
    }

    // equal_prefix: current encoding still matches best position by position.
    bool run(int pos, bool equal_prefix) {
        if (pos == n) {
            if (mode == Mode::count_aut && equal_prefix) ++aut_count;
            if (mode == Mode::find_min && !equal_prefix) {
                best = enc;
                ++generation;
            }
            return true;
        }
        bool tried_isolated = false;
        for (int v : candidates) {
            if (label_of[v] >= 0) continue;
            if (incident[v].empty() && mode != Mode::count_aut) {
                // Isolated vertices are interchangeable; one representative
                // per position reaches the same minimum.
                if (tried_isolated) continue;
                tried_isolated = true;
            }
            label_of[v] = pos;
            std::vector<long long> chunk;
            std::vector<int> closed;
            chunk_for(v, chunk, closed);

            bool prune = false;
            bool next_equal = equal_prefix;
            if (equal_prefix) {
                for (std::size_t k = 0; k < chunk.size(); ++k) {
                    long long ref = best[enc.size() + k];
                    if (chunk[k] > ref) {
                        prune = true;
                        break;
                    }
                    if (chunk[k] < ref) {
                        next_equal = false;
                        break;
                    }
                }
            }
            if (!prune && !next_equal && mode == Mode::test_min) {
                found_smaller = true;
            } else if (!prune) {
                long long gen_before = generation;
                for (int ei : closed) edge_done[ei] = 1;
                enc.insert(enc.end(), chunk.begin(), chunk.end());
                run(pos + 1, next_equal);
                enc.resize(enc.size() - chunk.size());
                for (int ei : closed) edge_done[ei] = 0;
                // A best-update below makes every live ancestor an ancestor
                // of the new minimum, so the prefix matches it again.
                if (generation != gen_before) equal_prefix = true;
            }
            label_of[v] = -1;
            if (found_smaller) return false;
        }
        return true;
    }
};

std::vector<long long> minimal_encoding(const Hypergraph& h) {
    LabelingSearch search(h.vertex_count(), h.edges(), Mode::find_min);
    search.best = colex_encoding(h);
    search.run(0, true);
    return search.best;
}

} // namespace

Hypergraph canonical_form(const Hypergraph& h) {
    std::vector<long long> enc = minimal_encoding(h);
    std::vector<Edge> edges;
    edges.reserve(enc.size());
    for (long long rank : enc) edges.push_back(colex_unrank(rank, h.uniformity()));
    return Hypergraph(h.vertex_count(), h.uniformity(), std::move(edges));
}

bool is_canonical(const Hypergraph& h) {
    LabelingSearch search(h.vertex_count(), h.edges(), Mode::test_min);
    search.best = colex_encoding(h);
    search.run(0, true);
    return !search.found_smaller;
}

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.uniformity() != b.uniformity() ||
        a.edge_count() != b.edge_count())
        return false;
    auto degrees = [](const Hypergraph& h) {
        std::vector<int> d;
        for (int v = 0; v < h.vertex_count(); ++v) d.push_back(h.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degrees(a) != degrees(b)) return false;
    return minimal_encoding(a) == minimal_encoding(b);
}

long long count_minimal_labelings(const Hypergraph& h) {
    LabelingSearch search(h.vertex_count(), h.edges(), Mode::count_aut);
    search.best = minimal_encoding(h);
    search.run(0, true);
    return search.aut_count;
}

namespace detail {

bool edges_canonical(int n, const std::vector<Edge>& sorted_edges) {
    LabelingSearch search(n, sorted_edges, Mode::test_min);
    search.best.reserve(sorted_edges.size());
    for (const Edge& e : sorted_edges) search.best.push_back(colex_rank(e));
    std::sort(search.best.begin(), search.best.end());
    search.run(0, true);
    return !search.found_smaller;
}

} // namespace detail

} // namespace bergelab
