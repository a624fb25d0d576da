#pragma once

#include "bergelab/hypergraph.hpp"

#include <optional>
#include <vector>

namespace bergelab {

/// Witness that a hypergraph contains a Berge copy of a graph F: an injective
/// embedding of V(F) plus an injective assignment of each F-edge to a
/// hyperedge containing its image pair.
struct BergeCertificate {
    std::vector<Vertex> core_map; // core_map[u] = host vertex for F-vertex u
    std::vector<int> assignment;  // assignment[i] = host edge index for F-edge i
};

/// Raised when an operation requires a Berge-F-free input but a copy exists.
class BergeCopyPresentError : public std::runtime_error {
public:
    BergeCopyPresentError(std::string message, BergeCertificate cert)
        : std::runtime_error(std::move(message)), certificate(std::move(cert)) {}
    BergeCertificate certificate;
};

/// Decides whether h contains a Berge copy of the graph f and returns a
/// certificate if so. Core vertices are embedded in a static order
/// (descending f-degree, ties by id) with host candidates scanned in
/// ascending id; after each completed core edge a maximum matching between
/// placed core edges and hyperedges is maintained incrementally, and the
/// branch is pruned as soon as no augmenting path exists. Requires
/// f.edge_count() >= 1.
std::optional<BergeCertificate> contains_berge(const Hypergraph& h, const Hypergraph& f);

bool is_berge_free(const Hypergraph& h, const Hypergraph& f);

/// Independent validator: containment of every image pair plus injectivity
/// of both maps.
bool certificate_valid(const Hypergraph& h, const Hypergraph& f, const BergeCertificate& cert);

/// Decides whether h contains a Berge copy of f whose assignment uses the
/// hyperedge with the given index. Used for incremental feasibility checks:
/// a new Berge copy created by adding one hyperedge must use it.
bool contains_berge_using_edge(const Hypergraph& h, const Hypergraph& f, int edge_index);

enum class EdgeColor { red, blue };

/// A 2-colored graph produced by the alternating-path decomposition.
struct RedBlueGraph {
    Hypergraph graph;             // uniformity 2
    std::vector<EdgeColor> color; // parallel to graph.edges()

    long long blue_count() const;
    Hypergraph subgraph(EdgeColor c) const;
};

/// Alternating-path decomposition of a Berge-F-free hypergraph: builds the
/// bipartite containment graph between shadow pairs and hyperedges, takes a
/// maximum matching M, colors matched pairs reachable from M-uncovered
/// hyperedges by alternating paths red and the remaining matched pairs blue.
/// The result is F-free and satisfies
///     e(h) <= e(blue) + (number of r-cliques of red),
/// both re-checked before returning. Throws BergeCopyPresentError with a
/// certificate when h is not Berge-F-free.
RedBlueGraph red_blue_decompose(const Hypergraph& h, const Hypergraph& f);

/// True iff every edge of the 2-shadow of h lies in at least
/// min(e(f), C(r,2)) hyperedges of h.
bool is_nice(const Hypergraph& h, const Hypergraph& f);

/// Not-necessarily-induced subhypergraph containment: an injective vertex
/// map sending every edge of x onto an edge of g.
bool contains_subhypergraph(const Hypergraph& g, const Hypergraph& x);

namespace detail {

/// Boolean Berge detector for search engines: hosts are raw colex-sorted
/// edge lists with at most 64 hyperedges, buffers are reused across calls.
/// With require_last the copy must use the final hyperedge of the list.
class BergeProbe {
public:
    BergeProbe(int host_n, Hypergraph core);
    bool contains(const std::vector<Edge>& host_edges, bool require_last);

private:
    std::uint64_t candidate_mask(int core_edge) const;
    bool augment(int core_edge);
    bool extend(std::size_t pos);
    void reset();

    int n_;
    Hypergraph core_;
    std::vector<int> order_;
    std::vector<std::vector<std::pair<int, int>>> core_adj_;
    std::vector<std::uint64_t> incident_;
    std::vector<Vertex> core_map_;
    std::vector<char> host_used_;
    std::vector<int> match_core_;
    std::vector<int> match_host_;
    std::uint64_t visited_ = 0;
    int forced_core_edge_ = -1;
    std::uint64_t forced_bit_ = 0;
};

/// Boolean subhypergraph detector over raw colex-sorted edge lists.
class SubgraphProbe {
public:
    SubgraphProbe(int host_n, Hypergraph pattern);
    bool contains(const std::vector<Edge>& host_edges, bool require_last);

private:
    bool extend(const std::vector<Edge>& host, std::size_t pos);

    int n_;
    Hypergraph pattern_;
    std::vector<int> order_;
    std::vector<Vertex> map_;
    std::vector<char> used_;
};

} // namespace detail

} // namespace bergelab
