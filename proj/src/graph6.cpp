#include "zeroforce/graph6.hpp"

#include <cstdint>
#include <sstream>

namespace zf {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int data_bits(char c, std::size_t offset) {
    unsigned char b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) throw ParseError("graph6 byte out of range 63..126", offset);
    return b - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.substr(0, kHeader.size()) == kHeader) {
        text.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty graph6 record", base);

    std::size_t pos = 0;
    std::int64_t n;
    if (text[0] != '~') {
        n = data_bits(text[0], base);
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~')
            throw ParseError("graph6 orders above 258047 are not supported", base);
        if (text.size() < 4) throw ParseError("truncated graph6 length prefix", base + text.size());
        n = 0;
        for (std::size_t i = 1; i <= 3; ++i)
            n = (n << 6) | data_bits(text[i], base + i);
        if (n < 63) throw ParseError("non-canonical graph6 length prefix", base);
        pos = 4;
    }

    std::int64_t nbits = n * (n - 1) / 2;
    std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() - pos < nbytes)
        throw ParseError("truncated graph6 edge data", base + text.size());
    if (text.size() - pos > nbytes)
        throw ParseError("unexpected bytes after graph6 edge data", base + pos + nbytes);

    Graph g(static_cast<int>(n));
    std::int64_t bit = 0;
    int col = 1, row = 0;
    for (std::size_t i = 0; i < nbytes; ++i) {
        int bits = data_bits(text[pos + i], base + pos + i);
        for (int k = 5; k >= 0; --k, ++bit) {
            bool on = (bits >> k) & 1;
            if (bit < nbits) {
                if (on) g.add_edge(row, col);
                if (++row == col) {
                    row = 0;
                    ++col;
                }
            } else if (on) {
                throw ParseError("nonzero graph6 padding bits", base + pos + i);
            }
        }
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    const std::int64_t n = g.order();
    if (n > kGraph6MaxOrder)
        throw UnsupportedSizeError("graph6 encoding supports at most 258047 vertices");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nacc = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nacc == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = nacc = 0;
            }
        }
    }
    if (nacc > 0) out.push_back(static_cast<char>((acc << (6 - nacc)) + 63));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    int max_vertex = -1;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        long long u, v;
        if (!(fields >> u)) continue;  // blank or comment-only line
        std::string rest;
        if (!(fields >> v) || (fields >> rest))
            throw ParseError("edge list line " + std::to_string(lineno) +
                             ": expected exactly two vertex ids");
        if (u < 0 || v < 0 || u > kGraph6MaxOrder || v > kGraph6MaxOrder)
            throw ParseError("edge list line " + std::to_string(lineno) + ": vertex id out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_vertex = std::max({max_vertex, static_cast<int>(u), static_cast<int>(v)});
    }
    Graph g(max_vertex + 1);
    for (auto [u, v] : edges) {
        if (u == v) throw ParseError("edge list contains a loop");
        g.add_edge(u, v);
    }
    return g;
}

std::string encode_edge_list(const Graph& g) {
    std::string out;
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

}  // namespace zf
