#include "zeroforce/generators.hpp"

#include <cctype>
#include <string>

#include "zeroforce/graph6.hpp"

namespace zf {

Graph path(int n) {
    if (n < 1) throw ConstructionError("path requires n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw ConstructionError("cycle requires n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete(int n) {
    if (n < 1) throw ConstructionError("complete requires n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw ConstructionError("complete_bipartite requires a,b >= 1");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

Graph lcf(const std::vector<int>& shifts, int repeats) {
    if (shifts.empty() || repeats < 1) throw ConstructionError("lcf requires shifts and repeats >= 1");
    const long long n64 = static_cast<long long>(shifts.size()) * repeats;
    if (n64 < 3 || n64 % 2 != 0) throw ConstructionError("lcf cycle length must be even and >= 3");
    if (n64 > kGraph6MaxOrder) throw ConstructionError("lcf cycle length too large");
    const int n = static_cast<int>(n64);
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    for (int i = 0; i < n; ++i) {
        int s = shifts[static_cast<std::size_t>(i) % shifts.size()] % n;
        if (s < 0) s += n;
        if (s == 0) throw ConstructionError("lcf shift is a multiple of the cycle length");
        g.add_edge(i, (i + s) % n);
    }
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer pentagon
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

Graph heawood() { return lcf({5, -5}, 7); }
Graph mcgee() { return lcf({12, 7, -7}, 8); }
Graph tutte_coxeter() { return lcf({-13, -9, 7, -7, 9, 13}, 5); }

Graph g7() {
    Graph g = cycle(6);
    Graph out(7);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    out.add_edge(6, 1);
    out.add_edge(6, 4);
    return out;
}

Graph g8() {
    Graph g = g7();
    Graph out(8);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    out.add_edge(7, 2);
    out.add_edge(7, 5);
    return out;
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos == s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "' in generator spec", pos);
        ++pos;
    }
    int parse_int() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) throw ParseError("expected integer in generator spec", start);
        long long v = 0;
        try {
            v = std::stoll(std::string(s.substr(start, pos - start)));
        } catch (const std::out_of_range&) {
            throw ParseError("integer out of range in generator spec", start);
        }
        if (v < -kGraph6MaxOrder || v > kGraph6MaxOrder)
            throw ParseError("integer out of range in generator spec", start);
        return static_cast<int>(v);
    }
    std::string parse_name() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) throw ParseError("expected generator name", start);
        return std::string(s.substr(start, pos - start));
    }
};

}  // namespace

Graph generate(std::string_view spec) {
    Cursor c{spec};
    std::string name = c.parse_name();

    if (name == "petersen" || name == "heawood" || name == "mcgee" ||
        name == "tutte_coxeter" || name == "g7" || name == "g8") {
        if (!c.at_end()) throw ParseError("generator '" + name + "' takes no arguments", c.pos);
        if (name == "petersen") return petersen();
        if (name == "heawood") return heawood();
        if (name == "mcgee") return mcgee();
        if (name == "tutte_coxeter") return tutte_coxeter();
        if (name == "g7") return g7();
        return g8();
    }

    c.expect('(');
    Graph result(0);
    if (name == "path" || name == "cycle" || name == "complete") {
        int n = c.parse_int();
        result = name == "path" ? path(n) : name == "cycle" ? cycle(n) : complete(n);
    } else if (name == "complete_bipartite") {
        int a = c.parse_int();
        c.expect(',');
        int b = c.parse_int();
        result = complete_bipartite(a, b);
    } else if (name == "lcf") {
        c.expect('[');
        std::vector<int> shifts;
        if (c.peek() != ']') {
            shifts.push_back(c.parse_int());
            while (c.peek() == ',') {
                ++c.pos;
                shifts.push_back(c.parse_int());
            }
        }
        c.expect(']');
        c.expect(',');
        int repeats = c.parse_int();
        result = lcf(shifts, repeats);
    } else {
        throw ParseError("unknown generator '" + name + "'");
    }
    c.expect(')');
    if (!c.at_end()) throw ParseError("trailing characters after generator spec", c.pos);
    return result;
}

}  // namespace zf
