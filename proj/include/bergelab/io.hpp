#pragma once

#include "bergelab/hypergraph.hpp"

#include <string>
#include <string_view>

namespace bergelab {

/// Parses the interchange text format:
///   line 1:        n r m
///   lines 2..m+1:  r vertex ids in strictly increasing order
/// Blank lines are skipped and everything after '#' on a line is ignored.
/// Throws ParseError (with the offending 1-based line) on malformed input.
Hypergraph read_hypergraph(std::string_view text);

/// Inverse of read_hypergraph: header line followed by the edges in colex
/// order. read_hypergraph(write_hypergraph(h)) == h.
std::string write_hypergraph(const Hypergraph& h);

Hypergraph load_hypergraph(const std::string& path);
void save_hypergraph(const Hypergraph& h, const std::string& path);

} // namespace bergelab
