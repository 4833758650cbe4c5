#include "detold/graph6.hpp"

#include <fstream>

namespace detold {

std::string to_graph6(const Graph& g) {
    if (g.n > 258047) throw capability_error("graph6 writer supports n <= 258047");
    std::string out;
    if (g.n <= 62) {
        out.push_back(char(g.n + 63));
    } else {
        out.push_back(char(126));
        out.push_back(char(((g.n >> 12) & 63) + 63));
        out.push_back(char(((g.n >> 6) & 63) + 63));
        out.push_back(char((g.n & 63) + 63));
    }
    int acc = 0, bits = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(char(acc + 63));
                acc = 0;
                bits = 0;
            }
        }
    if (bits > 0) out.push_back(char((acc << (6 - bits)) + 63));
    return out;
}

Graph parse_graph6(std::string_view line) {
    if (line.substr(0, 10) == ">>graph6<<") line.remove_prefix(10);
    if (line.empty()) throw input_error("empty graph6 line");
    size_t pos = 0;
    auto sextet = [&](const char* what) -> int {
        if (pos >= line.size()) throw input_error(std::string("graph6 truncated in ") + what +
                                                  " at byte " + std::to_string(pos));
        char c = line[pos++];
        if (c < 63 || c > 126)
            throw input_error("graph6 byte " + std::to_string(pos - 1) + " out of range");
        return c - 63;
    };

    long n = sextet("size");
    if (n == 63) {
        n = sextet("size");
        if (n == 63) throw input_error("graph6 eight-byte sizes (n > 258047) unsupported");
        n = (n << 6) | sextet("size");
        n = (n << 6) | sextet("size");
    }

    long pair_bits = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> edges;
    int acc = 0, avail = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (avail == 0) {
                acc = sextet("adjacency");
                avail = 6;
            }
            if ((acc >> (avail - 1)) & 1) edges.emplace_back(i, j);
            --avail;
        }
    if (avail > 0 && (acc & ((1 << avail) - 1)) != 0)
        throw input_error("graph6 padding bits nonzero");
    if (pos != line.size())
        throw input_error("trailing bytes after graph6 payload at byte " + std::to_string(pos));
    (void)pair_bits;
    return Graph::from_edges(int(n), edges);
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    std::vector<Graph> out;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const input_error& e) {
            throw input_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open " + path + " for writing");
    for (const Graph& g : graphs) out << to_graph6(g) << "\n";
}

} // namespace detold
