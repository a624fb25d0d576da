#pragma once

#include "bergelab/berge.hpp"
#include "bergelab/census.hpp"
#include "bergelab/pathstruct.hpp"
#include "bergelab/veriflab.hpp"
#include "bergelab/xsearch.hpp"

#include <string>

namespace bergelab {

/// {core: [[u,v],...], map: {u: x,...}, assign: [[f-edge-index, hyperedge],...]}
std::string certificate_json(const Hypergraph& h, const Hypergraph& f,
                             const BergeCertificate& cert);

std::string red_blue_json(const Hypergraph& h, const RedBlueGraph& rb);

std::string embedding_count_json(const Hypergraph& pattern, const Hypergraph& host,
                                 const EmbeddingCount& count);

std::string peeling_report_json(const PeelingReport& report);

std::string berge_star_json(const Hypergraph& h, const BergeStar& star);

std::string path_certificate_json(const Hypergraph& h, const BergePathCertificate& cert);

std::string hanging_blocks_json(const std::vector<HangingBlock>& blocks);

std::string extremal_results_json(const std::vector<ExtremalResult>& rows, bool include_timing);
std::string extremal_results_csv(const std::vector<ExtremalResult>& rows);

std::string theorem_checks_json(const std::vector<TheoremCheck>& rows, bool include_timing);

std::string suite_report_json(const SuiteReport& report, bool include_timing);
std::string suite_report_csv(const SuiteReport& report);

} // namespace bergelab
