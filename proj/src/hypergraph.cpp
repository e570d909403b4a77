#include "hyperk/hypergraph.hpp"

#include <algorithm>
#include <set>

namespace hyperk {

VertexSet::VertexSet(std::vector<Vertex> members)
    : members_(std::move(members))
{
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::range(int n)
{
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        all[static_cast<std::size_t>(v)] = v;
    return VertexSet(std::move(all));
}

bool VertexSet::contains(Vertex v) const
{
    return std::binary_search(members_.begin(), members_.end(), v);
}

Hypergraph::Hypergraph(int n, int s, std::vector<Edge> edges)
    : n_(n)
    , s_(s)
    , edges_(std::move(edges))
{
    if (n < 1)
        throw std::invalid_argument("hypergraph needs n >= 1");
    if (s < 2)
        throw std::invalid_argument("hypergraph needs s >= 2");

    for (auto &edge : edges_) {
        if (static_cast<int>(edge.size()) != s)
            throw std::invalid_argument("edge arity " + std::to_string(edge.size()) + " != s");
        std::sort(edge.begin(), edge.end());
        if (edge.front() < 0 || edge.back() >= n)
            throw std::invalid_argument("edge vertex out of range");
        if (std::adjacent_find(edge.begin(), edge.end()) != edge.end())
            throw std::invalid_argument("repeated vertex inside an edge");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");

    incidence_.assign(static_cast<std::size_t>(n), {});
    for (int i = 0; i < e(); ++i)
        for (Vertex v : edges_[static_cast<std::size_t>(i)])
            incidence_[static_cast<std::size_t>(v)].push_back(i);
}

DegreeProfile degree_profile(const Hypergraph &h)
{
    DegreeProfile p;
    p.degrees.resize(static_cast<std::size_t>(h.n()));
    for (Vertex v = 0; v < h.n(); ++v) {
        p.degrees[static_cast<std::size_t>(v)] = h.degree(v);
        p.max_degree = std::max(p.max_degree, h.degree(v));
    }
    p.avg_degree = Rational(static_cast<std::int64_t>(h.s()) * h.e(), h.n());
    return p;
}

namespace {

void check_members(const Hypergraph &h, const VertexSet &s)
{
    if (!s.empty() && (s.members().front() < 0 || s.members().back() >= h.n()))
        throw std::invalid_argument("vertex set contains an id outside [0, n)");
}

// Position of each host vertex inside s, or -1.
std::vector<int> positions(const Hypergraph &h, const VertexSet &s)
{
    std::vector<int> pos(static_cast<std::size_t>(h.n()), -1);
    int i = 0;
    for (Vertex v : s)
        pos[static_cast<std::size_t>(v)] = i++;
    return pos;
}

bool inside(const Edge &edge, const std::vector<int> &pos)
{
    return std::all_of(edge.begin(), edge.end(),
                       [&](Vertex v) { return pos[static_cast<std::size_t>(v)] >= 0; });
}

} // namespace

Hypergraph induced(const Hypergraph &h, const VertexSet &s)
{
    check_members(h, s);
    if (s.empty())
        throw std::invalid_argument("induced subhypergraph of the empty set has no vertices");
    const auto pos = positions(h, s);
    std::vector<Edge> kept;
    for (const auto &edge : h.edges()) {
        if (!inside(edge, pos))
            continue;
        Edge relabelled;
        relabelled.reserve(edge.size());
        for (Vertex v : edge)
            relabelled.push_back(pos[static_cast<std::size_t>(v)]);
        kept.push_back(std::move(relabelled));
    }
    return Hypergraph(static_cast<int>(s.size()), h.s(), std::move(kept));
}

Hypergraph remove_vertex(const Hypergraph &h, Vertex v)
{
    if (v < 0 || v >= h.n())
        throw std::invalid_argument("remove_vertex: id out of range");
    if (h.n() == 1)
        throw std::invalid_argument("remove_vertex: cannot remove the only vertex");
    std::vector<Edge> kept;
    for (const auto &edge : h.edges()) {
        if (std::binary_search(edge.begin(), edge.end(), v))
            continue;
        Edge shifted = edge;
        for (auto &u : shifted)
            if (u > v)
                --u;
        kept.push_back(std::move(shifted));
    }
    return Hypergraph(h.n() - 1, h.s(), std::move(kept));
}

std::vector<int> induced_degrees(const Hypergraph &h, const VertexSet &s)
{
    check_members(h, s);
    const auto pos = positions(h, s);
    std::vector<int> deg(s.size(), 0);
    for (const auto &edge : h.edges())
        if (inside(edge, pos))
            for (Vertex v : edge)
                ++deg[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])];
    return deg;
}

IndependenceCheck is_k_independent(const Hypergraph &h, const VertexSet &s, int k)
{
    const auto deg = induced_degrees(h, s);
    IndependenceCheck out;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < deg.size(); ++i) {
        if (deg[i] > out.max_degree) {
            out.max_degree = deg[i];
            worst = i;
        }
    }
    if (out.max_degree <= k)
        return out;

    out.independent = false;
    out.violator = s.members()[worst];
    const auto pos = positions(h, s);
    for (int idx : h.incident(out.violator)) {
        if (inside(h.edge(idx), pos))
            out.witness_edges.push_back(idx);
        if (static_cast<int>(out.witness_edges.size()) == k + 1)
            break;
    }
    return out;
}

Hypergraph replicate(const Hypergraph &h, int c)
{
    if (c < 1)
        throw std::invalid_argument("replicate needs c >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(h.e()) * static_cast<std::size_t>(c));
    for (int copy = 0; copy < c; ++copy) {
        const int offset = copy * h.n();
        for (const auto &edge : h.edges()) {
            Edge shifted = edge;
            for (auto &v : shifted)
                v += offset;
            edges.push_back(std::move(shifted));
        }
    }
    return Hypergraph(h.n() * c, h.s(), std::move(edges));
}

} // namespace hyperk
