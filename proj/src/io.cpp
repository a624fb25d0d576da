#include "bergelab/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace bergelab {

namespace {

// Splits text into (line number, payload) pairs with comments stripped and
// blank lines removed.
std::vector<std::pair<int, std::string>> payload_lines(std::string_view text) {
    std::vector<std::pair<int, std::string>> lines;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        ++line_no;
        std::size_t hash = raw.find('#');
        if (hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::string trimmed(raw);
        std::istringstream probe(trimmed);
        std::string token;
        if (probe >> token) lines.emplace_back(line_no, trimmed);
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return lines;
}

std::vector<long long> parse_ints(const std::pair<int, std::string>& line) {
    std::istringstream in(line.second);
    std::vector<long long> values;
    std::string token;
    while (in >> token) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            values.push_back(v);
        } catch (const std::exception&) {
            throw ParseError(line.first, "expected an integer, got '" + token + "'");
        }
    }
    return values;
}

} // namespace

Hypergraph read_hypergraph(std::string_view text) {
    auto lines = payload_lines(text);
    if (lines.empty()) throw ParseError(1, "missing header 'n r m'");

    auto header = parse_ints(lines[0]);
    if (header.size() != 3)
        throw ParseError(lines[0].first, "header must be 'n r m'");
    const long long n = header[0], r = header[1], m = header[2];
    if (n < 0) throw ParseError(lines[0].first, "vertex count must be nonnegative");
    if (r < 2) throw ParseError(lines[0].first, "uniformity must be at least 2");
    if (m < 0) throw ParseError(lines[0].first, "edge count must be nonnegative");
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw ParseError(lines.back().first,
                         "expected " + std::to_string(m) + " edge lines, found " +
                             std::to_string(lines.size() - 1));

    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto values = parse_ints(lines[i]);
        if (static_cast<long long>(values.size()) != r)
            throw ParseError(lines[i].first, "expected " + std::to_string(r) + " vertex ids");
        Edge e;
        for (long long v : values) {
            if (v < 0 || v >= n)
                throw ParseError(lines[i].first,
                                 "vertex " + std::to_string(v) + " out of range [0, " +
                                     std::to_string(n) + ")");
            if (!e.empty() && v <= e.back())
                throw ParseError(lines[i].first, "vertex ids must be strictly increasing");
            e.push_back(static_cast<Vertex>(v));
        }
        if (!seen.insert(e).second) throw ParseError(lines[i].first, "duplicate edge");
        edges.push_back(std::move(e));
    }
    return Hypergraph(static_cast<int>(n), static_cast<int>(r), std::move(edges));
}

std::string write_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    out << h.vertex_count() << ' ' << h.uniformity() << ' ' << h.edge_count() << '\n';
    for (const Edge& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out << ' ';
            out << e[i];
        }
        out << '\n';
    }
    return out.str();
}

Hypergraph load_hypergraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return read_hypergraph(buffer.str());
}

void save_hypergraph(const Hypergraph& h, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot open '" + path + "' for writing");
    out << write_hypergraph(h);
}

} // namespace bergelab
