#pragma once

#include "bergelab/hypergraph.hpp"

#include <vector>

namespace bergelab {

/// Colex rank of a sorted r-tuple among all r-subsets of the naturals.
long long colex_rank(const Edge& e);

/// Inverse of colex_rank for tuples of the given arity.
Edge colex_unrank(long long rank, int r);

/// The edge set of h encoded as ascending colex ranks.
std::vector<long long> colex_encoding(const Hypergraph& h);

/// Isomorphism-invariant relabeling: the vertex labeling whose colex edge
/// encoding is lexicographically smallest, found by backtracking over
/// labelings ordered by a degree/pair-codegree partition refinement, with
/// append-only prefix pruning. canonical_form(a) == canonical_form(b) iff
/// a and b are isomorphic.
Hypergraph canonical_form(const Hypergraph& h);

/// True iff h already equals its canonical form. Cheaper than computing the
/// form: the search aborts on the first strictly smaller labeling.
bool is_canonical(const Hypergraph& h);

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b);

/// Number of labelings attaining the minimal encoding; this equals the order
/// of the automorphism group.
long long count_minimal_labelings(const Hypergraph& h);

namespace detail {

/// Engine hook: works on a raw colex-sorted edge list without constructing
/// a Hypergraph.
bool edges_canonical(int n, const std::vector<Edge>& sorted_edges);

} // namespace detail

} // namespace bergelab
