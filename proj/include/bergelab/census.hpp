#pragma once

#include "bergelab/hypergraph.hpp"

namespace bergelab {

/// Result of an exact copy count. copies = injective_maps / automorphisms,
/// the number of distinct sub-edge-structures isomorphic to the pattern
/// (together with a vertex placement for isolated pattern vertices).
struct EmbeddingCount {
    long long injective_maps = 0;
    long long automorphisms = 1;
    long long copies = 0;
};

struct CensusOptions {
    int max_pattern_vertices = 8; // backtracking and |Aut| are exponential
    int threads = 1;
};

/// Number of copies of `pattern` in `host` (same uniformity): injective
/// edge-preserving vertex maps counted by backtracking over the pattern's
/// vertices in a connectivity-respecting order, divided by |Aut(pattern)|.
EmbeddingCount count_copies(const Hypergraph& pattern, const Hypergraph& host,
                            const CensusOptions& options = {});

/// Number of s-subsets of the vertices all of whose r-subsets are hyperedges,
/// by ordered extension. Equals count_copies(K_s^r, h).copies.
long long count_s_cliques(const Hypergraph& h, int s);

/// The s-graph on the same vertex set whose hyperedges are the s-cliques
/// of h. Requires s > h.uniformity().
Hypergraph clique_hypergraph(const Hypergraph& h, int s);

/// Number of distinct r-graphs whose hyperedges are r-cliques of the fixed
/// 2-shadow of h, which are isomorphic to h, and whose 2-shadow equals that
/// shadow exactly.
long long gamma(const Hypergraph& h, const CensusOptions& options = {});

/// Order of the automorphism group.
long long automorphism_count(const Hypergraph& h, const CensusOptions& options = {});

} // namespace bergelab
