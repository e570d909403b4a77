#include "hyperk/hypergraph.hpp"
#include "hyperk/random.hpp"

#include <limits>
#include <random>
#include <unordered_set>

namespace hyperk {

namespace {

std::uint64_t checked_binomial(int n, int s)
{
    const BigInt c = binomial(static_cast<unsigned>(n), static_cast<unsigned>(s));
    const auto v = to_int64(c);
    if (!v)
        throw std::invalid_argument("C(n, s) exceeds 64-bit range");
    return static_cast<std::uint64_t>(*v);
}

// s-subset of [0, n) with the given colex rank.
Edge unrank_colex(std::uint64_t rank, int n, int s)
{
    Edge edge(static_cast<std::size_t>(s));
    int hi = n - 1;
    for (int i = s; i >= 1; --i) {
        // largest c with C(c, i) <= rank
        int c = hi;
        while (c >= i && checked_binomial(c, i) > rank)
            --c;
        const std::uint64_t sub = c >= i ? checked_binomial(c, i) : 0;
        rank -= sub;
        edge[static_cast<std::size_t>(i - 1)] = c;
        hi = c - 1;
    }
    return edge;
}

} // namespace

std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound)
{
    if (bound == 0)
        throw std::invalid_argument("uniform_below needs bound >= 1");
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % bound + 1) % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x > limit);
    return x % bound;
}

Hypergraph gen_random_uniform(int n, std::int64_t m, int s, std::uint64_t seed)
{
    if (s < 2 || s > n)
        throw std::invalid_argument("gen_random_uniform needs 2 <= s <= n");
    if (m < 0)
        throw std::invalid_argument("gen_random_uniform needs m >= 0");
    const std::uint64_t total = checked_binomial(n, s);
    if (static_cast<std::uint64_t>(m) > total)
        throw std::invalid_argument("m = " + std::to_string(m) + " exceeds C(n, s) = " + std::to_string(total));

    std::mt19937_64 rng(seed);
    // Floyd: for j in [total - m, total), draw t in [0, j]; take t unless seen, else j.
    std::unordered_set<std::uint64_t> chosen;
    std::vector<std::uint64_t> order;
    order.reserve(static_cast<std::size_t>(m));
    for (std::uint64_t j = total - static_cast<std::uint64_t>(m); j < total; ++j) {
        const std::uint64_t t = uniform_below(rng, j + 1);
        const std::uint64_t pick = chosen.count(t) ? j : t;
        chosen.insert(pick);
        order.push_back(pick);
    }

    std::vector<Edge> edges;
    edges.reserve(order.size());
    for (auto rank : order)
        edges.push_back(unrank_colex(rank, n, s));
    return Hypergraph(n, s, std::move(edges));
}

Hypergraph gen_complete(int n, int s)
{
    if (s < 2 || s > n)
        throw std::invalid_argument("gen_complete needs 2 <= s <= n");
    const std::uint64_t total = checked_binomial(n, s);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(total));
    for (std::uint64_t r = 0; r < total; ++r)
        edges.push_back(unrank_colex(r, n, s));
    return Hypergraph(n, s, std::move(edges));
}

} // namespace hyperk
