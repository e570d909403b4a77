#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperk/rational.hpp"

namespace hyperk {

using Vertex = int;
using Edge = std::vector<Vertex>;

/// Sorted, duplicate-free list of vertex ids.
class VertexSet
{
public:
    VertexSet() = default;
    /// Sorts and deduplicates.
    explicit VertexSet(std::vector<Vertex> members);

    static VertexSet range(int n);

    const std::vector<Vertex> &members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Vertex v) const;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    friend bool operator==(const VertexSet &, const VertexSet &) = default;

private:
    std::vector<Vertex> members_;
};

/// Immutable s-uniform hypergraph with its edge list in canonical (lexicographic) order.
class Hypergraph
{
public:
    /// Validates and canonicalizes. Throws std::invalid_argument on any violated invariant.
    Hypergraph(int n, int s, std::vector<Edge> edges);

    int n() const { return n_; }
    int s() const { return s_; }
    int e() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge> &edges() const { return edges_; }
    const Edge &edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }

    /// Indices of the edges containing v, ascending.
    std::span<const int> incident(Vertex v) const { return incidence_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(incidence_[static_cast<std::size_t>(v)].size()); }

    friend bool operator==(const Hypergraph &a, const Hypergraph &b)
    {
        return a.n_ == b.n_ && a.s_ == b.s_ && a.edges_ == b.edges_;
    }

private:
    int n_;
    int s_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incidence_;
};

struct DegreeProfile
{
    std::vector<int> degrees;
    int max_degree = 0;
    Rational avg_degree;
};

DegreeProfile degree_profile(const Hypergraph &h);

/// Subhypergraph on `s` (relabelled 0..|s|-1 in order) keeping edges fully inside `s`.
Hypergraph induced(const Hypergraph &h, const VertexSet &s);

/// H - v: drops v and every edge through it; ids above v shift down by one.
Hypergraph remove_vertex(const Hypergraph &h, Vertex v);

/// Degree of every vertex of `s` in H[s], indexed like s.members().
std::vector<int> induced_degrees(const Hypergraph &h, const VertexSet &s);

struct IndependenceCheck
{
    bool independent = true;
    int max_degree = 0;              ///< Δ(H[S])
    Vertex violator = -1;            ///< set when !independent
    std::vector<int> witness_edges;  ///< k+1 edge indices through `violator`, inside S
};

IndependenceCheck is_k_independent(const Hypergraph &h, const VertexSet &s, int k);

/// Disjoint union of c copies; copy i occupies ids [i*n, (i+1)*n).
Hypergraph replicate(const Hypergraph &h, int c);

// .hg text format

class ParseError : public std::runtime_error
{
public:
    ParseError(int line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what)
        , line_(line)
    {}

    int line() const { return line_; }

private:
    int line_;
};

Hypergraph parse_hg(std::istream &in);
Hypergraph parse_hg(const std::string &text);
Hypergraph read_hg_file(const std::string &path);

void write_hg(std::ostream &out, const Hypergraph &h);
std::string write_hg(const Hypergraph &h);
void write_hg_file(const std::string &path, const Hypergraph &h);

// Generators

/// m distinct s-subsets of [0, n) drawn uniformly without replacement.
///
/// The stream is std::mt19937_64 seeded with `seed`; bounded draws use
/// rejection sampling on the raw 64-bit output, edges are chosen by Floyd's
/// algorithm over colexicographic combination ranks. The result is therefore
/// identical on every conforming platform.
Hypergraph gen_random_uniform(int n, std::int64_t m, int s, std::uint64_t seed);

Hypergraph gen_complete(int n, int s);

} // namespace hyperk
