#pragma once

#include "bergelab/errors.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace bergelab {

using Vertex = int;
using Edge = std::vector<Vertex>;      // sorted, duplicate-free
using VertexSet = std::vector<Vertex>; // sorted, duplicate-free

// Colex order on sorted tuples: compare from the largest element down.
// Grades edges by their maximum vertex, which keeps encodings append-only
// when vertices are labeled in increasing order.
bool colex_less(const Edge& a, const Edge& b);

long long binomial(int n, int k);

// Calls fn on every k-subset of {0..n-1} in colex order.
void for_each_combination(int n, int k, const std::function<void(const Edge&)>& fn);

/// An r-uniform hypergraph on vertices 0..n-1. A graph is the r = 2 case.
/// Immutable after construction; edges are kept colex-sorted so equality,
/// hashing and file output are deterministic.
class Hypergraph {
public:
    Hypergraph(int n, int r);
    Hypergraph(int n, int r, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int uniformity() const { return r_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(const Edge& sorted_edge) const;

    // Number of hyperedges containing v.
    int degree(Vertex v) const;

    bool operator==(const Hypergraph& other) const = default;

private:
    int n_;
    int r_;
    std::vector<Edge> edges_; // colex-sorted, unique
};

/// All r-subsets contained in some hyperedge of g (the r-shadow).
/// Requires 2 <= r <= g.uniformity(). Vertex count is preserved.
Hypergraph shadow(const Hypergraph& g, int r);

/// Blows each edge of the graph f up to an r-set by adding r-2 fresh
/// vertices, distinct across edges. Edge i (in storage order) receives
/// vertices v(f)+(r-2)*i .. v(f)+(r-2)*(i+1)-1.
Hypergraph expansion(const Hypergraph& f, int r);

/// Balanced complete (k-1)-partite graph on n vertices; part of v is
/// v mod (k-1), so parts are assigned round-robin by id.
Hypergraph turan_graph(int n, int k);

/// The r-graph whose hyperedges are the vertex sets of the r-cliques of g.
Hypergraph clique_expansion(const Hypergraph& g, int r);

/// Complete r-partite-style extremal host for long Berge paths:
/// S = {0..floor(k/2)-2}; edges are all r-sets with at least r-1 vertices
/// in S; for odd k additionally all r-sets {u1,u2} + (r-2 of S) where
/// u1, u2 are the two vertices just past S. Requires k >= 2r+2 and n >= k.
Hypergraph star_path_construction(int n, int r, int k);

/// Incidence-walk connected components. Isolated vertices are singleton
/// components. Ordered by smallest member.
std::vector<VertexSet> components(const Hypergraph& h);

/// True iff there is exactly one component covering all n vertices.
/// A single-vertex hypergraph is connected; isolated vertices otherwise
/// break connectivity.
bool is_connected(const Hypergraph& h);

} // namespace bergelab
