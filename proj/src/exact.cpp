#include "hyperk/exact.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace hyperk {

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

struct MaskHypergraph
{
    int n;
    std::vector<Mask> edges;
    std::vector<std::vector<int>> incident;

    explicit MaskHypergraph(const Hypergraph &h)
        : n(h.n())
        , incident(static_cast<std::size_t>(h.n()))
    {
        if (h.n() > 64)
            throw std::invalid_argument("exact oracle supports n <= 64");
        for (int i = 0; i < h.e(); ++i) {
            Mask m = 0;
            for (Vertex v : h.edge(i))
                m |= bit(v);
            edges.push_back(m);
        }
        for (Vertex v = 0; v < h.n(); ++v)
            incident[static_cast<std::size_t>(v)].assign(h.incident(v).begin(), h.incident(v).end());
    }

    Mask all() const { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

    int degree_in(Vertex v, Mask s) const
    {
        int d = 0;
        for (int idx : incident[static_cast<std::size_t>(v)])
            if ((edges[static_cast<std::size_t>(idx)] & ~s) == 0)
                ++d;
        return d;
    }

    bool independent(Mask s, int k) const
    {
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        for (Mask e : edges) {
            if ((e & ~s) != 0)
                continue;
            for (Mask rest = e; rest; rest &= rest - 1)
                if (++deg[static_cast<std::size_t>(std::countr_zero(rest))] > k)
                    return false;
        }
        return true;
    }
};

VertexSet to_set(Mask m)
{
    std::vector<Vertex> out;
    for (; m; m &= m - 1)
        out.push_back(std::countr_zero(m));
    return VertexSet(std::move(out));
}

class AlphaSearch
{
public:
    AlphaSearch(const MaskHypergraph &g, int k, std::uint64_t budget)
        : g_(g), k_(k), budget_(budget)
    {}

    bool run(Mask start)
    {
        stack_.push_back(start);
        seen_.insert(start);
        while (!stack_.empty()) {
            const Mask s = stack_.back();
            stack_.pop_back();
            if (std::popcount(s) <= best_size_)
                continue;
            if (++nodes_ > budget_)
                return false;
            expand(s);
        }
        return true;
    }

    int best_size() const { return best_size_; }
    Mask best() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    void expand(Mask s)
    {
        // Branch vertex: largest violation deg_S(v) - k, lowest id on ties.
        Vertex pivot = -1;
        int pivot_degree = k_;
        for (Mask rest = s; rest; rest &= rest - 1) {
            const Vertex v = std::countr_zero(rest);
            const int d = g_.degree_in(v, s);
            if (d > pivot_degree) {
                pivot = v;
                pivot_degree = d;
            }
        }
        if (pivot < 0) {
            best_size_ = std::popcount(s);
            best_ = s;
            return;
        }

        // Any k-independent subset of S drops the pivot or a vertex of one of k+1 witness edges.
        Mask branch = bit(pivot);
        int taken = 0;
        for (int idx : g_.incident[static_cast<std::size_t>(pivot)]) {
            const Mask e = g_.edges[static_cast<std::size_t>(idx)];
            if ((e & ~s) != 0)
                continue;
            branch |= e;
            if (++taken == k_ + 1)
                break;
        }
        if (std::popcount(s) - 1 <= best_size_)
            return;
        // Pushed in descending id order so the lowest id is explored first.
        std::vector<Mask> children;
        for (Mask rest = branch; rest; rest &= rest - 1)
            children.push_back(s & ~(Mask{1} << std::countr_zero(rest)));
        for (auto it = children.rbegin(); it != children.rend(); ++it)
            if (seen_.insert(*it).second)
                stack_.push_back(*it);
    }

    const MaskHypergraph &g_;
    int k_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    int best_size_ = -1;
    Mask best_ = 0;
    std::vector<Mask> stack_;
    std::unordered_set<Mask> seen_;
};

class ChiSearch
{
public:
    ChiSearch(const MaskHypergraph &g, int k, std::uint64_t budget)
        : g_(g), k_(k), budget_(budget), cls_(static_cast<std::size_t>(g.n), -1)
    {}

    /// 1 = found, 0 = impossible with `classes`, -1 = budget exhausted.
    int try_classes(int classes)
    {
        classes_ = classes;
        members_.assign(static_cast<std::size_t>(classes), 0);
        std::fill(cls_.begin(), cls_.end(), -1);
        return assign(0, 0);
    }

    std::vector<VertexSet> witness() const
    {
        std::vector<VertexSet> out;
        for (Mask m : members_)
            out.push_back(to_set(m));
        return out;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    int assign(Vertex v, int used)
    {
        if (++nodes_ > budget_)
            return -1;
        if (v == g_.n)
            return 1;
        // Symmetry: v may open at most one new class.
        const int limit = std::min(classes_, used + 1);
        for (int c = 0; c < limit; ++c) {
            const Mask with = members_[static_cast<std::size_t>(c)] | bit(v);
            if (!class_ok(with, v))
                continue;
            members_[static_cast<std::size_t>(c)] = with;
            cls_[static_cast<std::size_t>(v)] = c;
            const int r = assign(v + 1, std::max(used, c + 1));
            if (r != 0)
                return r;
            members_[static_cast<std::size_t>(c)] &= ~bit(v);
            cls_[static_cast<std::size_t>(v)] = -1;
        }
        return 0;
    }

    // Adding v to a class can only raise degrees of vertices sharing an edge with v.
    bool class_ok(Mask cls, Vertex v) const
    {
        Mask touched = bit(v);
        for (int idx : g_.incident[static_cast<std::size_t>(v)]) {
            const Mask e = g_.edges[static_cast<std::size_t>(idx)];
            if ((e & ~cls) == 0)
                touched |= e;
        }
        for (Mask rest = touched; rest; rest &= rest - 1)
            if (g_.degree_in(std::countr_zero(rest), cls) > k_)
                return false;
        return true;
    }

    const MaskHypergraph &g_;
    int k_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    int classes_ = 0;
    std::vector<int> cls_;
    std::vector<Mask> members_;
};

template <typename F>
OracleResult timed(F &&body)
{
    const auto start = std::chrono::steady_clock::now();
    OracleResult r = body();
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

} // namespace

OracleResult alpha_k_exact(const Hypergraph &h, int k, std::uint64_t budget)
{
    if (k < 0)
        throw std::invalid_argument("k must be >= 0");
    return timed([&] {
        const MaskHypergraph g(h);
        AlphaSearch search(g, k, budget);
        OracleResult r;
        r.quantity = "alpha_k";
        r.k = k;
        const bool done = search.run(g.all());
        r.nodes = search.nodes();
        if (!done) {
            r.status = OracleStatus::budget_exceeded;
            return r;
        }
        r.value = search.best_size();
        r.witness_set = to_set(search.best());
        return r;
    });
}

OracleResult alpha_k_sweep(const Hypergraph &h, int k)
{
    if (h.n() > 24)
        throw std::invalid_argument("subset sweep supports n <= 24");
    if (k < 0)
        throw std::invalid_argument("k must be >= 0");
    return timed([&] {
        const MaskHypergraph g(h);
        OracleResult r;
        r.quantity = "alpha_k";
        r.k = k;
        int best = -1;
        Mask arg = 0;
        for (Mask s = 0; s <= g.all(); ++s) {
            ++r.nodes;
            const int size = std::popcount(s);
            if (size > best && g.independent(s, k)) {
                best = size;
                arg = s;
            }
        }
        r.value = best;
        r.witness_set = to_set(arg);
        return r;
    });
}

OracleResult chi_k_exact(const Hypergraph &h, int k, std::uint64_t budget)
{
    if (k < 1)
        throw std::invalid_argument("chi_k_exact needs k >= 1");
    return timed([&] {
        const MaskHypergraph g(h);
        ChiSearch search(g, k, budget);
        OracleResult r;
        r.quantity = "chi_k";
        r.k = k;
        for (int c = 1; c <= h.n(); ++c) {
            const int found = search.try_classes(c);
            if (found < 0) {
                r.status = OracleStatus::budget_exceeded;
                break;
            }
            if (found > 0) {
                r.value = c;
                r.witness_partition = search.witness();
                break;
            }
        }
        r.nodes = search.nodes();
        return r;
    });
}

} // namespace hyperk
