#include "hyperk/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace hyperk {

namespace {

std::vector<std::string> tokens(const std::string &line)
{
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string tok; ss >> tok;)
        out.push_back(tok);
    return out;
}

long long to_integer(const std::string &tok, int line, const char *what)
{
    long long value = 0;
    const auto *first = tok.data();
    const auto *last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(line, std::string("expected integer ") + what + ", got '" + tok + "'");
    return value;
}

} // namespace

Hypergraph parse_hg(std::istream &in)
{
    bool have_header = false;
    long long n = 0, m = 0, s = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line == "c" || line.rfind("c ", 0) == 0)
            continue;

        const auto tok = tokens(line);
        if (tok.empty())
            continue;

        if (tok[0] == "p") {
            if (have_header)
                throw ParseError(lineno, "second problem line");
            if (tok.size() != 5 || tok[1] != "hyp")
                throw ParseError(lineno, "malformed header, expected 'p hyp <n> <m> <s>'");
            n = to_integer(tok[2], lineno, "n");
            m = to_integer(tok[3], lineno, "m");
            s = to_integer(tok[4], lineno, "s");
            if (n < 1 || s < 2 || m < 0)
                throw ParseError(lineno, "malformed header, need n >= 1, m >= 0, s >= 2");
            if (n > (1LL << 30) || s > n)
                throw ParseError(lineno, "malformed header, need s <= n");
            have_header = true;
            continue;
        }

        if (tok[0] != "e")
            throw ParseError(lineno, "unknown line type '" + tok[0] + "'");
        if (!have_header)
            throw ParseError(lineno, "edge before problem line");
        if (static_cast<long long>(edges.size()) == m)
            throw ParseError(lineno, "more than m = " + std::to_string(m) + " edges");
        if (static_cast<long long>(tok.size()) - 1 != s)
            throw ParseError(lineno, "edge arity " + std::to_string(tok.size() - 1) + " != s = " + std::to_string(s));

        Edge edge;
        edge.reserve(static_cast<std::size_t>(s));
        for (std::size_t i = 1; i < tok.size(); ++i) {
            const auto v = to_integer(tok[i], lineno, "vertex id");
            if (v < 1 || v > n)
                throw ParseError(lineno, "vertex id " + tok[i] + " outside [1, " + std::to_string(n) + "]");
            edge.push_back(static_cast<Vertex>(v - 1));
        }
        std::sort(edge.begin(), edge.end());
        if (std::adjacent_find(edge.begin(), edge.end()) != edge.end())
            throw ParseError(lineno, "duplicate vertex within edge");
        if (!seen.insert(edge).second)
            throw ParseError(lineno, "duplicate edge");
        edges.push_back(std::move(edge));
    }

    if (!have_header)
        throw ParseError(lineno, "missing problem line");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(lineno, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));

    return Hypergraph(static_cast<int>(n), static_cast<int>(s), std::move(edges));
}

Hypergraph parse_hg(const std::string &text)
{
    std::istringstream in(text);
    return parse_hg(in);
}

Hypergraph read_hg_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return parse_hg(in);
}

void write_hg(std::ostream &out, const Hypergraph &h)
{
    out << "p hyp " << h.n() << ' ' << h.e() << ' ' << h.s() << '\n';
    for (const auto &edge : h.edges()) {
        out << 'e';
        for (Vertex v : edge)
            out << ' ' << v + 1;
        out << '\n';
    }
}

std::string write_hg(const Hypergraph &h)
{
    std::ostringstream out;
    write_hg(out, h);
    return out.str();
}

void write_hg_file(const std::string &path, const Hypergraph &h)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    write_hg(out, h);
}

} // namespace hyperk
