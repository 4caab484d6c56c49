#include "treedeg/graph_io.hpp"

#include <cctype>
#include <sstream>

namespace treedeg {

namespace {

void append_size(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else if (n <= 258047) {
        out.push_back(char(126));
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    } else {
        throw DeskScaleError("graph6 writer handles at most 258047 vertices");
    }
}

int parse_size(std::string_view s, size_t& pos) {
    if (pos >= s.size()) throw ParseError("graph6: empty input");
    unsigned char c = (unsigned char)s[pos];
    if (c == 126) {
        if (pos + 3 >= s.size()) throw ParseError("graph6: truncated size block");
        int n = 0;
        for (int i = 1; i <= 3; ++i) {
            int d = (unsigned char)s[pos + size_t(i)] - 63;
            if (d < 0 || d > 63) throw ParseError("graph6: bad size byte");
            n = (n << 6) | d;
        }
        pos += 4;
        return n;
    }
    if (c < 63 || c > 126) throw ParseError("graph6: bad size byte");
    pos += 1;
    return c - 63;
}

} // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    append_size(out, n);
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(char(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(char((acc << (6 - nbits)) + 63));
    return out;
}

Graph from_graph6(std::string_view s) {
    // Tolerate the optional header and surrounding whitespace/newline.
    constexpr std::string_view header = ">>graph6<<";
    size_t pos = 0;
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    if (s.substr(pos, header.size()) == header) pos += header.size();
    size_t end = s.size();
    while (end > pos && std::isspace((unsigned char)s[end - 1])) --end;
    s = s.substr(0, end);

    const int n = parse_size(s, pos);
    Graph g(n);
    const long long need = (long long)n * (n - 1) / 2;
    long long bit = 0;
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (nbits == 0) {
                if (pos >= s.size()) throw ParseError("graph6: truncated bit data");
                acc = (unsigned char)s[pos++] - 63;
                if (acc < 0 || acc > 63) throw ParseError("graph6: bad data byte");
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) g.add_edge(i, j);
            --nbits;
        }
    }
    (void)need;
    if (pos != s.size()) throw ParseError("graph6: trailing bytes");
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph from_edge_list(std::string_view text, int n_hint) {
    std::istringstream in{std::string(text)};
    std::vector<std::pair<int, int>> edges;
    int max_v = -1;
    std::string line;
    while (std::getline(in, line)) {
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) throw ParseError("edge list: expected two integers per line");
        std::string rest;
        if (ls >> rest) throw ParseError("edge list: extra tokens on line");
        if (u < 0 || v < 0) throw ParseError("edge list: negative vertex index");
        edges.emplace_back(u, v);
        max_v = std::max({max_v, u, v});
    }
    const int n = std::max(n_hint, max_v + 1);
    return Graph::from_edges(n, edges);
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace treedeg
