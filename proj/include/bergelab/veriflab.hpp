#pragma once

#include "bergelab/hypergraph.hpp"
#include "bergelab/xsearch.hpp"

#include <map>
#include <string>
#include <vector>

namespace bergelab {

struct CheckOptions {
    SearchOptions search;
    // Brute-force connected searches are attempted only when the edge
    // universe C(n,r) is at most this large (they are the one open-ended
    // computation in the suite); force overrides the gate.
    long long conn_xsearch_max_universe = 32;
    bool force_conn_xsearch = false;
};

/// One verified relation: lhs <relation> rhs, with provenance. Witnesses are
/// embedded by content in artifacts.
struct TheoremCheck {
    std::string id;
    std::string theorem;
    std::string params;
    long long lhs = 0;
    std::string relation = "<=";
    long long rhs = 0;
    std::string verdict = "holds"; // holds | fails | skipped
    std::string reason;            // skip reason or annotation
    bool resource_limited = false;
    std::map<std::string, std::string> artifacts;
    double seconds = 0;
};

/// ex_r(n, K_s^r, Berge-F) <= ex_s(n, Berge-F), s >= r+1.
std::vector<TheoremCheck> check_clique_transfer(int r, int s, const std::string& f, int n,
                                                const CheckOptions& options = {});

/// ex(n, K_r, F) <= ex_r(n, Berge-F) <= ex(n, K_r, F) + ex(n, F); two rows.
std::vector<TheoremCheck> check_berge_sandwich(int r, const std::string& f, int n,
                                               const CheckOptions& options = {});

/// When h is nice with respect to f:
/// ex_r(n, h, Berge-f) = ex(n, shadow(h), f) * gamma(h); skipped otherwise.
std::vector<TheoremCheck> check_nice_equality(const std::string& h, const std::string& f, int n,
                                              const CheckOptions& options = {});

/// If the r-shadow of an edge-extremal Berge-f-free s-graph witness is
/// Berge-f-free, then ex_r(n, K_s^r, Berge-f) equals that extremal value;
/// skipped when the witness fails the hypothesis.
std::vector<TheoremCheck> check_reverse_transfer(int r, int s, const std::string& f, int n,
                                                 const CheckOptions& options = {});

/// Connected-host extremal for long Berge paths. Rows: construction value
/// equals the closed formula; the construction contains no Berge path of the
/// forbidden length; it is connected; optionally a gated brute-force lower
/// bound (reported, with exceedances annotated, never failed). s = 0 checks
/// the edge count; s > r checks the K_s^r count.
std::vector<TheoremCheck> check_connected_path(int r, int k, int n, int s = 0,
                                               const CheckOptions& options = {});

/// ex_r(n, K_s^r, expansion(F, r)) <= ex_s(n, expansion(F, s)), s >= r >= 3.
std::vector<TheoremCheck> check_expansion_transfer(int r, int s, const std::string& f, int n,
                                                   const CheckOptions& options = {});

long long connected_path_edge_bound(int n, int r, int k);
long long connected_path_clique_bound(int n, int s, int k);

struct SuiteReport {
    std::vector<TheoremCheck> checks;
    int holds = 0;
    int fails = 0;
    int skipped = 0;
    bool resource_abort = false;
    double seconds = 0;

    // 0 all holds/skips, 1 any fails, 3 resource abort.
    int exit_code() const;
};

/// Executes a declarative check list: one `check <id> key=value...` per
/// line, '#' comments and blank lines ignored.
SuiteReport run_suite(const std::string& config_text, const CheckOptions& options = {});

/// Parses and runs a single check line (the CLI `check` command).
std::vector<TheoremCheck> run_check_line(const std::string& line,
                                         const CheckOptions& options = {});

} // namespace bergelab
