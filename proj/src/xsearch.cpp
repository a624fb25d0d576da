#include "bergelab/xsearch.hpp"

#include "bergelab/berge.hpp"
#include "bergelab/canonical.hpp"
#include "bergelab/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>

namespace bergelab {

namespace {

std::string compact_name(const Hypergraph& h) {
    return std::to_string(h.vertex_count()) + "v" + std::to_string(h.edge_count()) + "e^" +
           std::to_string(h.uniformity());
}

} // namespace

ForbiddenSpec ForbiddenSpec::none() {
    return {};
}

ForbiddenSpec ForbiddenSpec::berge(Hypergraph core, std::string name) {
    if (core.uniformity() != 2) throw ParameterError("a Berge core must be a graph");
    if (core.edge_count() == 0) throw ParameterError("a Berge core needs at least one edge");
    ForbiddenSpec spec;
    spec.kind = Kind::berge;
    spec.description = "berge:" + (name.empty() ? compact_name(core) : name);
    spec.pattern = std::move(core);
    return spec;
}

ForbiddenSpec ForbiddenSpec::subhypergraph(Hypergraph pattern, std::string name) {
    if (pattern.edge_count() == 0)
        throw ParameterError("a forbidden subhypergraph needs at least one edge");
    ForbiddenSpec spec;
    spec.kind = Kind::subhypergraph;
    spec.description = "sub:" + (name.empty() ? compact_name(pattern) : name);
    spec.pattern = std::move(pattern);
    return spec;
}

Objective Objective::edges() {
    return {};
}

Objective Objective::copies(Hypergraph pattern, std::string name) {
    Objective obj;
    obj.kind = Kind::copies;
    obj.description = "copies:" + (name.empty() ? compact_name(pattern) : name);
    obj.pattern = std::move(pattern);
    return obj;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Universe {
    int n = 0;
    int r = 2;
    std::vector<Edge> edges; // all r-subsets of [n], colex order
};

Universe build_universe(int n, int r) {
    Universe u{n, r, {}};
    for_each_combination(n, r, [&](const Edge& e) { u.edges.push_back(e); });
    return u;
}

// Monotone feasibility test. States arrive with the newest edge last, so the
// incremental mode only looks for copies through that edge.
struct FeasibilityChecker {
    ForbiddenSpec::Kind kind = ForbiddenSpec::Kind::none;
    bool vacuous = true;
    int min_edges = 0;
    bool full_recheck = false;
    std::optional<detail::BergeProbe> berge_probe;
    std::optional<detail::SubgraphProbe> sub_probe;

    FeasibilityChecker(int n, const ForbiddenSpec& spec, bool recheck) : full_recheck(recheck) {
        kind = spec.kind;
        if (kind == ForbiddenSpec::Kind::none) return;
        const Hypergraph& p = *spec.pattern;
        if (p.vertex_count() > n) return; // cannot embed, nothing is forbidden
        vacuous = false;
        min_edges = p.edge_count();
        if (kind == ForbiddenSpec::Kind::berge) {
            berge_probe.emplace(n, p);
        } else {
            sub_probe.emplace(n, p);
        }
    }

    bool feasible(const std::vector<Edge>& state) {
        if (vacuous) return true;
        if (static_cast<int>(state.size()) < min_edges) return true;
        const bool require_last = !full_recheck;
        if (kind == ForbiddenSpec::Kind::berge) return !berge_probe->contains(state, require_last);
        return !sub_probe->contains(state, require_last);
    }
};

struct ObjectiveEvaluator {
    Objective::Kind kind = Objective::Kind::edges;
    int n = 0, r = 2;
    bool complete_fast = false;
    std::vector<std::uint64_t> clique_masks;
    const Hypergraph* pattern = nullptr;

    ObjectiveEvaluator(int n_, int r_, const Objective& objective) : n(n_), r(r_) {
        kind = objective.kind;
        if (kind == Objective::Kind::edges) return;
        pattern = &*objective.pattern;
        if (pattern->uniformity() != r)
            throw ParameterError("objective pattern must match the search uniformity");
        const int s = pattern->vertex_count();
        if (s >= r && pattern->edge_count() == binomial(s, r)) {
            // Complete pattern: counting copies is counting s-cliques, and a
            // clique test on a bitmask state is one AND per candidate set.
            complete_fast = true;
            for_each_combination(n, s, [&](const Edge& c) {
                std::uint64_t mask = 0;
                for_each_combination(s, r, [&](const Edge& pick) {
                    Edge sub(r);
                    for (int i = 0; i < r; ++i) sub[i] = c[pick[i]];
                    mask |= 1ULL << colex_rank(sub);
                });
                clique_masks.push_back(mask);
            });
        }
    }

    long long eval(const std::vector<Edge>& state, std::uint64_t state_mask) const {
        if (kind == Objective::Kind::edges) return static_cast<long long>(state.size());
        if (complete_fast) {
            long long count = 0;
            for (std::uint64_t need : clique_masks)
                if ((need & state_mask) == need) ++count;
            return count;
        }
        Hypergraph host(n, r, state);
        return count_copies(*pattern, host).copies;
    }
};

bool state_connected(int n, const std::vector<Edge>& state) {
    if (n == 0) return false;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int parts = n;
    for (const Edge& e : state) {
        for (std::size_t i = 1; i < e.size(); ++i) {
            int a = find(e[0]), b = find(e[i]);
            if (a != b) {
                parent[a] = b;
                --parts;
            }
        }
    }
    return parts == 1;
}

struct BudgetGuard {
    std::uint64_t node_budget;
    double time_budget;
    Clock::time_point start;
    std::atomic<std::uint64_t>* shared_nodes;
    std::atomic<bool>* abort_flag;
    std::uint64_t local = 0;

    void tick() {
        ++local;
        std::uint64_t total = local;
        if (shared_nodes) total = shared_nodes->fetch_add(1, std::memory_order_relaxed) + 1;
        if (abort_flag && abort_flag->load(std::memory_order_relaxed))
            throw ResourceLimitError("search aborted");
        if (node_budget && total > node_budget) {
            if (abort_flag) abort_flag->store(true, std::memory_order_relaxed);
            throw ResourceLimitError("node budget of " + std::to_string(node_budget) +
                                     " exhausted");
        }
        if (time_budget > 0 && (local & 1023) == 0) {
            double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
            if (elapsed > time_budget) {
                if (abort_flag) abort_flag->store(true, std::memory_order_relaxed);
                throw ResourceLimitError("time budget exhausted");
            }
        }
    }
};

struct Best {
    bool set = false;
    long long value = -1;
    std::vector<long long> encoding; // canonical witness encoding
    int n = 0, r = 2;

    Hypergraph witness() const {
        std::vector<Edge> edges;
        edges.reserve(encoding.size());
        for (long long rank : encoding) edges.push_back(colex_unrank(rank, r));
        return Hypergraph(n, r, std::move(edges));
    }
};

struct SearchWorker {
    const Universe& u;
    FeasibilityChecker feas;
    const ObjectiveEvaluator& eval;
    bool connected;
    bool canonical_mode;
    bool states_are_canonical; // canonical engine: the state is its own form
    BudgetGuard guard;

    std::vector<Edge> state;
    std::uint64_t state_mask = 0;
    Best best;

    SearchWorker(const Universe& universe, const ForbiddenSpec& forbidden,
                 const ObjectiveEvaluator& evaluator, bool conn, bool canonical,
                 const SearchOptions& options, std::atomic<std::uint64_t>* shared,
                 std::atomic<bool>* abort)
        : u(universe), feas(universe.n, forbidden, options.full_recheck), eval(evaluator),
          connected(conn), canonical_mode(canonical), states_are_canonical(canonical),
          guard{options.node_budget, options.time_budget_seconds, Clock::now(), shared, abort} {
        best.n = u.n;
        best.r = u.r;
    }

    void offer() {
        if (connected && !state_connected(u.n, state)) return;
        long long v = eval.eval(state, state_mask);
        if (!best.set || v > best.value) {
            best.set = true;
            best.value = v;
            best.encoding = witness_encoding();
            return;
        }
        if (v < best.value) return;
        if (best.encoding.empty()) return; // nothing beats the empty witness
        std::vector<long long> enc = witness_encoding();
        if (enc < best.encoding) best.encoding = std::move(enc);
    }

    std::vector<long long> witness_encoding() {
        if (states_are_canonical) {
            std::vector<long long> enc;
            enc.reserve(state.size());
            for (const Edge& e : state) enc.push_back(colex_rank(e));
            return enc;
        }
        return colex_encoding(canonical_form(Hypergraph(u.n, u.r, state)));
    }

    void dfs(int last) {
        guard.tick();
        offer();
        for (int j = last + 1; j < static_cast<int>(u.edges.size()); ++j) {
            state.push_back(u.edges[j]);
            state_mask |= 1ULL << j;
            if (feas.feasible(state) &&
                (!canonical_mode || detail::edges_canonical(u.n, state))) {
                dfs(j);
            }
            state_mask &= ~(1ULL << j);
            state.pop_back();
        }
    }

    // Entry for a parallel worker: runs the subtrees rooted at the given
    // first-edge choices.
    void run_roots(const std::vector<int>& roots) {
        for (int j : roots) {
            state.clear();
            state_mask = 0;
            state.push_back(u.edges[j]);
            state_mask |= 1ULL << j;
            if (feas.feasible(state) &&
                (!canonical_mode || detail::edges_canonical(u.n, state))) {
                dfs(j);
            }
        }
    }
};

void merge_best(Best& into, const Best& from) {
    if (!from.set) return;
    if (!into.set || from.value > into.value) {
        into = from;
        return;
    }
    if (from.value == into.value && from.encoding < into.encoding) into.encoding = from.encoding;
}

void check_size_guard(int n, int r, const SearchOptions& options) {
    if (n < r) throw ParameterError("search needs n >= r");
    if (r < 2) throw ParameterError("uniformity must be at least 2");
    long long universe = binomial(n, r);
    if (universe > 64)
        throw ResourceLimitError("edge universe C(" + std::to_string(n) + "," +
                                 std::to_string(r) + ") = " + std::to_string(universe) +
                                 " exceeds the 64-edge engine representation");
    if (n > 20 && !options.override_size_guard)
        throw ResourceLimitError("size guard: n > 20 (pass the override flag to proceed)");
}

} // namespace

ExtremalResult extremal(int n, int r, const ForbiddenSpec& forbidden, const Objective& objective,
                        bool connected, const SearchOptions& options) {
    check_size_guard(n, r, options);
    if (forbidden.kind == ForbiddenSpec::Kind::subhypergraph &&
        forbidden.pattern->uniformity() != r)
        throw ParameterError("forbidden subhypergraph must match the search uniformity");

    const auto start = Clock::now();
    Universe u = build_universe(n, r);
    ObjectiveEvaluator evaluator(n, r, objective);
    const bool canonical = options.engine == SearchEngine::canonical;

    Best best;
    best.n = n;
    best.r = r;
    std::uint64_t explored = 0;

    const int threads = canonical ? 1 : std::max(1, options.threads);
    if (threads == 1) {
        SearchWorker worker(u, forbidden, evaluator, connected, canonical, options, nullptr,
                            nullptr);
        worker.dfs(-1);
        best = worker.best;
        explored = worker.guard.local;
    } else {
        // The DFS forest is partitioned by the first-edge choice; the empty
        // root state is handled here.
        std::atomic<std::uint64_t> shared_nodes{0};
        std::atomic<bool> abort_flag{false};
        SearchWorker root(u, forbidden, evaluator, connected, canonical, options, &shared_nodes,
                          &abort_flag);
        root.guard.tick();
        root.offer();
        Best seed = root.best;

        std::vector<std::vector<int>> roots(threads);
        for (int j = 0; j < static_cast<int>(u.edges.size()); ++j) roots[j % threads].push_back(j);
        std::vector<std::unique_ptr<SearchWorker>> workers;
        std::vector<std::exception_ptr> errors(threads);
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            workers.push_back(std::make_unique<SearchWorker>(u, forbidden, evaluator, connected,
                                                             canonical, options, &shared_nodes,
                                                             &abort_flag));
            workers.back()->best = seed; // keeps the empty-witness tie shortcut active
        }
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    workers[t]->run_roots(roots[t]);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& err : errors)
            if (err) std::rethrow_exception(err);
        best = seed;
        for (auto& w : workers) merge_best(best, w->best);
        explored = shared_nodes.load();
    }

    if (!best.set)
        throw ParameterError("no " + std::string(connected ? "connected " : "") +
                             "hypergraph on " + std::to_string(n) +
                             " vertices satisfies the constraints");

    ExtremalResult result;
    result.n = n;
    result.r = r;
    result.forbidden = forbidden.description;
    result.objective = objective.description;
    result.connected = connected;
    result.value = best.value;
    result.witness = best.witness();
    result.engine = options.engine;
    result.explored = explored;
    result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
}

std::vector<ExtremalResult> extremal_table(int n_from, int n_to, int r,
                                           const ForbiddenSpec& forbidden,
                                           const Objective& objective, bool connected,
                                           const SearchOptions& options) {
    if (n_from > n_to) throw ParameterError("empty range");
    std::vector<ExtremalResult> rows;
    for (int n = n_from; n <= n_to; ++n)
        rows.push_back(extremal(n, r, forbidden, objective, connected, options));
    return rows;
}

void for_each_feasible(int n, int r, const ForbiddenSpec& forbidden,
                       const std::function<void(const StateView&)>& visit,
                       const EnumOptions& options) {
    SearchOptions defaults;
    check_size_guard(n, r, defaults);
    if (forbidden.kind == ForbiddenSpec::Kind::subhypergraph &&
        forbidden.pattern->uniformity() != r)
        throw ParameterError("forbidden subhypergraph must match the search uniformity");
    Universe u = build_universe(n, r);
    FeasibilityChecker feas(n, forbidden, false);
    std::vector<Edge> state;
    std::function<void(int)> dfs = [&](int last) {
        visit(StateView{n, r, state});
        if (options.max_edges >= 0 && static_cast<int>(state.size()) >= options.max_edges) return;
        for (int j = last + 1; j < static_cast<int>(u.edges.size()); ++j) {
            state.push_back(u.edges[j]);
            if (feas.feasible(state)) dfs(j);
            state.pop_back();
        }
    };
    dfs(-1);
}

} // namespace bergelab
