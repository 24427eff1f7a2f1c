#include "beilab/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "beilab/errors.hpp"

namespace beilab {

namespace {

// Reads the next line carrying data, stripping comments. Returns false at EOF.
bool next_data_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) return true;
    }
    return false;
}

std::pair<long, long> parse_two_ints(const std::string& line, int lineno) {
    std::istringstream ss(line);
    long a, b;
    std::string extra;
    if (!(ss >> a >> b)) throw input_error("expected two integers", lineno);
    if (ss >> extra) throw input_error("trailing token '" + extra + "'", lineno);
    return {a, b};
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!next_data_line(in, line, lineno)) throw input_error("empty graph file", lineno);
    auto [n, m] = parse_two_ints(line, lineno);
    if (n < 1) throw input_error("vertex count must be positive", lineno);
    if (n > 64)
        throw unsupported_size_error("graphs with more than 64 vertices are not supported (n=" +
                                     std::to_string(n) + ")");
    if (m < 0) throw input_error("negative edge count", lineno);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long k = 0; k < m; ++k) {
        if (!next_data_line(in, line, lineno))
            throw input_error("expected " + std::to_string(m) + " edges, got " + std::to_string(k),
                              lineno);
        auto [u, v] = parse_two_ints(line, lineno);
        if (u < 1 || u > n || v < 1 || v > n)
            throw input_error("edge endpoint out of range", lineno);
        if (u == v) throw input_error("loop at vertex " + std::to_string(u), lineno);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_data_line(in, line, lineno)) throw input_error("unexpected extra data", lineno);
    return Graph::build(static_cast<int>(n), edges);
}

Graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    return parse_graph(in);
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.edges.size() << '\n';
    for (auto [u, v] : g.edges) out << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

}  // namespace beilab
