#include "bergelab/patterns.hpp"

#include "bergelab/io.hpp"

#include <cctype>

namespace bergelab {

Hypergraph path_graph(int k) {
    if (k < 2) throw ParameterError("path needs at least 2 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
    return Hypergraph(k, 2, std::move(edges));
}

Hypergraph complete_graph(int k) {
    return complete_hypergraph(k, 2);
}

Hypergraph star_graph(int leaves) {
    if (leaves < 1) throw ParameterError("star needs at least 1 leaf");
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return Hypergraph(leaves + 1, 2, std::move(edges));
}

Hypergraph cycle_graph(int k) {
    if (k < 3) throw ParameterError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) edges.push_back({std::min(i, (i + 1) % k), std::max(i, (i + 1) % k)});
    return Hypergraph(k, 2, std::move(edges));
}

Hypergraph matching_graph(int k) {
    if (k < 1) throw ParameterError("matching needs at least 1 edge");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) edges.push_back({2 * i, 2 * i + 1});
    return Hypergraph(2 * k, 2, std::move(edges));
}

Hypergraph complete_hypergraph(int s, int r) {
    if (r < 2) throw ParameterError("uniformity must be at least 2");
    if (s < r) throw ParameterError("complete r-graph needs at least r vertices");
    std::vector<Edge> edges;
    for_each_combination(s, r, [&](const Edge& e) { edges.push_back(e); });
    return Hypergraph(s, r, std::move(edges));
}

Hypergraph complete_hypergraph_minus(int s, int r) {
    Hypergraph full = complete_hypergraph(s, r);
    std::vector<Edge> edges = full.edges();
    edges.pop_back();
    return Hypergraph(s, r, std::move(edges));
}

Hypergraph parse_pattern(const std::string& spec) {
    if (spec.empty()) throw ParameterError("empty pattern");
    if (spec[0] == '@') return load_hypergraph(spec.substr(1));

    const char family = spec[0];
    std::size_t pos = 1;
    auto read_int = [&]() {
        std::size_t start = pos;
        while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
        if (start == pos) throw ParameterError("malformed pattern '" + spec + "'");
        return std::stoi(spec.substr(start, pos - start));
    };

    int first = read_int();
    if (pos == spec.size()) {
        switch (family) {
            case 'K': return complete_graph(first);
            case 'P': return path_graph(first);
            case 'S': return star_graph(first);
            case 'C': return cycle_graph(first);
            case 'M': return matching_graph(first);
            default: break;
        }
        throw ParameterError("unknown pattern family '" + spec + "'");
    }
    if (family == 'K' && spec[pos] == '^') {
        ++pos;
        int r = read_int();
        if (pos == spec.size()) return complete_hypergraph(first, r);
        if (pos + 1 == spec.size() && spec[pos] == '-') return complete_hypergraph_minus(first, r);
    }
    throw ParameterError("malformed pattern '" + spec + "'");
}

} // namespace bergelab
