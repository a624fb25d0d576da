#pragma once

#include "bergelab/hypergraph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace bergelab {

/// What the search forbids. Violation is monotone under edge addition for
/// every kind, which is what makes superset pruning sound.
struct ForbiddenSpec {
    enum class Kind { none, berge, subhypergraph };

    Kind kind = Kind::none;
    std::optional<Hypergraph> pattern;
    std::string description = "none";

    static ForbiddenSpec none();
    static ForbiddenSpec berge(Hypergraph core, std::string name = "");
    static ForbiddenSpec subhypergraph(Hypergraph pattern, std::string name = "");
};

/// What the search maximizes.
struct Objective {
    enum class Kind { edges, copies };

    Kind kind = Kind::edges;
    std::optional<Hypergraph> pattern;
    std::string description = "edges";

    static Objective edges();
    static Objective copies(Hypergraph pattern, std::string name = "");
};

enum class SearchEngine { naive, canonical };

struct SearchOptions {
    SearchEngine engine = SearchEngine::canonical;
    int threads = 1;
    std::uint64_t node_budget = 0;  // feasible states visited; 0 = unlimited
    double time_budget_seconds = 0; // 0 = unlimited
    bool override_size_guard = false;
    bool full_recheck = false; // debug mode: recheck whole states, not just the new edge
};

struct ExtremalResult {
    int n = 0;
    int r = 2;
    std::string forbidden;
    std::string objective;
    bool connected = false;
    long long value = 0;
    Hypergraph witness{0, 2}; // canonical form
    SearchEngine engine = SearchEngine::naive;
    std::uint64_t explored = 0;
    double seconds = 0;
};

/// Exact maximum of the objective over all n-vertex r-graphs satisfying the
/// forbidden spec (spanning-connected ones when connected is set). Engines:
/// naive iterates labeled edge sets in colex order with monotone superset
/// pruning; canonical restricts the same tree to canonically labeled states,
/// one per isomorphism class. Ties between maximizers resolve to the
/// lexicographically smallest canonical witness.
ExtremalResult extremal(int n, int r, const ForbiddenSpec& forbidden, const Objective& objective,
                        bool connected = false, const SearchOptions& options = {});

std::vector<ExtremalResult> extremal_table(int n_from, int n_to, int r,
                                           const ForbiddenSpec& forbidden,
                                           const Objective& objective, bool connected = false,
                                           const SearchOptions& options = {});

struct EnumOptions {
    int max_edges = -1; // -1 = unlimited
};

struct StateView {
    int n;
    int r;
    const std::vector<Edge>& edges; // colex-sorted
};

/// Visits every labeled hypergraph satisfying the forbidden spec exactly
/// once (including the empty one), via the naive engine's pruned DFS.
void for_each_feasible(int n, int r, const ForbiddenSpec& forbidden,
                       const std::function<void(const StateView&)>& visit,
                       const EnumOptions& options = {});

} // namespace bergelab
