#pragma once

#include "bergelab/hypergraph.hpp"

#include <optional>
#include <set>
#include <vector>

namespace bergelab {

/// A vertex set B with an attachment v in B such that every hyperedge meeting
/// B - {v} lies inside B. Blocks equal to {v} or to an entire component are
/// excluded.
struct HangingBlock {
    VertexSet block;
    Vertex attachment;

    bool operator==(const HangingBlock&) const = default;
};

/// All hanging blocks of the given size, each contained in a single
/// component. Ordered by (block, attachment).
std::vector<HangingBlock> hanging_blocks(const Hypergraph& h, int size);

enum class PeelKind { low_degree, hanging_block };

struct PeelStep {
    PeelKind kind;
    VertexSet removed;
};

enum class ComponentVerdict { nice, strong, bad };

/// Trace of the degree/block peeling of one connected component.
struct PeelingReport {
    std::vector<PeelStep> steps;
    ComponentVerdict verdict;
    Hypergraph survivor;
};

/// Classifies a connected s-uniform component against the path length k:
/// nice when every vertex has degree at least C(floor(k/2)-1, s-1) and no
/// hanging block of size floor(k/2) exists; otherwise peels vertices with
/// degree below C(floor(k/2), s-1) and non-attachment vertices of size
/// floor(k/2) hanging blocks to a fixpoint (low-degree deletions first each
/// round, lowest ids first). strong if edges survive, bad otherwise.
PeelingReport classify_component(const Hypergraph& h, int k);

/// Exhaustive-order probe: the set of verdicts reachable by performing the
/// peeling deletions in every possible order. Limited to n <= 8.
std::set<ComponentVerdict> peeling_verdicts_all_orders(const Hypergraph& h, int k);

/// A star certificate: distinct hyperedges f_i and distinct leaves u_i with
/// {center, u_i} inside f_i.
struct BergeStar {
    Vertex center;
    std::vector<Vertex> leaves;
    std::vector<int> hyperedges; // indices into h.edges(), ascending
};

/// Finds a Berge star with the given center and leaf count via maximum
/// matching between the hyperedges containing the center and the candidate
/// leaves. Guaranteed to succeed when degree(center) > C(leaves-1, r-1).
/// Requires leaf_count > uniformity.
std::optional<BergeStar> find_berge_star(const Hypergraph& h, Vertex center, int leaf_count);

/// Alternating vertex/hyperedge certificate of a Berge path: distinct
/// vertices v_1..v_t and distinct hyperedges e_1..e_{t-1} with
/// {v_i, v_{i+1}} inside e_i. Length is the hyperedge count.
struct BergePathCertificate {
    std::vector<Vertex> vertices;
    std::vector<int> hyperedges;

    int length() const { return static_cast<int>(hyperedges.size()); }
};

struct PathSearchOptions {
    int budget = -1;       // cap on the hyperedge count, -1 = unlimited
    int start_vertex = -1; // restrict to paths starting here, -1 = all
    int threads = 1;
};

/// Exhaustive backtracking over (vertex, hyperedge) alternations; returns a
/// maximum-length certificate within the budget, lexicographically smallest
/// among the maximum ones.
BergePathCertificate longest_berge_path(const Hypergraph& h, const PathSearchOptions& options = {});

} // namespace bergelab
