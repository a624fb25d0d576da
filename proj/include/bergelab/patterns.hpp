#pragma once

#include "bergelab/hypergraph.hpp"

#include <string>

namespace bergelab {

/// Path on k vertices (k-1 edges), vertices 0..k-1 in order.
Hypergraph path_graph(int k);

/// Complete graph on k vertices.
Hypergraph complete_graph(int k);

/// Star with `leaves` edges: center 0, leaves 1..leaves.
Hypergraph star_graph(int leaves);

/// Cycle on k >= 3 vertices.
Hypergraph cycle_graph(int k);

/// Matching with k disjoint edges.
Hypergraph matching_graph(int k);

/// Complete r-uniform hypergraph on s vertices.
Hypergraph complete_hypergraph(int s, int r);

/// Complete r-uniform hypergraph on s vertices minus its colex-last edge.
Hypergraph complete_hypergraph_minus(int s, int r);

/// Parses a pattern name: K4, P3, S3, C5, M2, K5^3, K4^3-, or @path to load
/// a hypergraph file.
Hypergraph parse_pattern(const std::string& spec);

} // namespace bergelab
