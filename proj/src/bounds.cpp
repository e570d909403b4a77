#include "hyperk/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hyperk {

Rational eval_f(const Rational &x)
{
    if (x.is_negative())
        throw std::domain_error("f is defined for x >= 0");
    const BigInt fl = x.floor();
    const Rational fr = x.frac();
    const Rational correction = fr * (Rational(1) - fr) / Rational((fl + 1) * (fl + 2), 1);
    return (Rational(1) + correction) / (Rational(1) + x);
}

Rational eval_g(const Rational &x)
{
    if (x.is_negative())
        throw std::domain_error("g is defined for x >= 0");
    if (x.is_zero())
        return Rational(1);
    const Rational c(x.ceil(), 1);
    return (Rational(2) * c - x) / (c * (Rational(1) + c));
}

namespace {

Rational product_weight(int s, int terms)
{
    Rational w(1);
    for (int j = 1; j <= terms; ++j)
        w *= Rational(1) - Rational(1, static_cast<std::int64_t>(j) * (s - 1) + 1);
    return w;
}

BoundValue exact_bound(const char *name, Rational value)
{
    BoundValue b;
    b.name = name;
    b.applicable = true;
    b.exact = std::move(value);
    return b;
}

BoundValue not_applicable(const char *name, std::string reason)
{
    BoundValue b;
    b.name = name;
    b.reason = std::move(reason);
    return b;
}

} // namespace

Rational caro_tuza_weight(int kc, int s, int degree)
{
    if (kc < 1)
        throw std::domain_error("Caro-Tuza index must be >= 1");
    if (degree < kc)
        return Rational(1) - Rational(degree, static_cast<std::int64_t>(kc) * s);
    const Rational w = product_weight(s, degree - kc + 1);
    if (degree == kc && w != Rational(1) - Rational(1, s))
        throw std::logic_error("Caro-Tuza branches disagree at i = kc");
    return w;
}

double BoundValue::to_double() const
{
    if (exact)
        return exact->to_double();
    if (approx)
        return *approx;
    return std::nan("");
}

long long BoundValue::ceiling() const
{
    if (!applicable)
        throw std::logic_error("ceiling of a non-applicable bound");
    if (exact) {
        const auto c = to_int64(exact->ceil());
        if (!c)
            throw std::overflow_error("bound exceeds 64-bit range");
        return *c;
    }
    // Float-only bounds: absorb rounding noise just above an integer.
    return static_cast<long long>(std::ceil(*approx - 1e-9));
}

BoundValue bound_max_degree(const Hypergraph &h, int k)
{
    if (k <= 0)
        return not_applicable(bound_names::max_degree, "requires k >= 1 (classes of a k-partition)");
    const int delta = degree_profile(h).max_degree;
    const int classes = std::max(1, (delta + k - 1) / k);
    return exact_bound(bound_names::max_degree, Rational(h.n(), classes));
}

BoundValue bound_edge_count(const Hypergraph &h, int k)
{
    if (k < 0)
        throw std::invalid_argument("k must be >= 0");
    return exact_bound(bound_names::edge_count, Rational(h.n()) - Rational(h.e(), k + 1));
}

BoundValue bound_avg_degree(const Hypergraph &h, int k)
{
    if (k < 0)
        throw std::invalid_argument("k must be >= 0");
    const Rational x(2 * static_cast<std::int64_t>(h.e()), static_cast<std::int64_t>(h.n()) * (k + 1));
    return exact_bound(bound_names::avg_degree, eval_f(x) * Rational(h.n()));
}

BoundValue bound_avg_degree_simple(const Hypergraph &h, int k)
{
    if (k < 0)
        throw std::invalid_argument("k must be >= 0");
    const std::int64_t n = h.n();
    return exact_bound(bound_names::avg_degree_simple,
                       Rational(n * n * (k + 1), n * (k + 1) + 2 * static_cast<std::int64_t>(h.e())));
}

BoundValue bound_caro_tuza_alpha(const Hypergraph &h)
{
    Rational sum(0);
    std::vector<std::optional<Rational>> cache(static_cast<std::size_t>(h.e()) + 1);
    for (Vertex v = 0; v < h.n(); ++v) {
        auto &w = cache[static_cast<std::size_t>(h.degree(v))];
        if (!w)
            w = product_weight(h.s(), h.degree(v));
        sum += *w;
    }
    return exact_bound(bound_names::caro_tuza_alpha, std::move(sum));
}

BoundValue bound_cps(const Hypergraph &h)
{
    if (h.s() < 3)
        return not_applicable(bound_names::cps, "requires s >= 3");
    const double exponent = 1.0 / (h.s() - 1);
    double sum = 0.0;
    for (Vertex v = 0; v < h.n(); ++v)
        sum += 1.0 / std::pow(static_cast<double>(h.degree(v)) + 1.0, exponent);
    BoundValue b;
    b.name = bound_names::cps;
    b.applicable = true;
    b.approx = std::exp(-euler_gamma * exponent) * sum;
    return b;
}

BoundValue bound_caro_tuza_k(const Hypergraph &h, int kc)
{
    if (kc < 1)
        return not_applicable(bound_names::caro_tuza_k, "requires Caro-Tuza index >= 1");
    Rational sum(0);
    std::vector<std::optional<Rational>> cache(static_cast<std::size_t>(h.e()) + 1);
    for (Vertex v = 0; v < h.n(); ++v) {
        auto &w = cache[static_cast<std::size_t>(h.degree(v))];
        if (!w)
            w = caro_tuza_weight(kc, h.s(), h.degree(v));
        sum += *w;
    }
    return exact_bound(bound_names::caro_tuza_k, std::move(sum));
}

const BoundValue *BoundReport::find(const std::string &name) const
{
    for (const auto &b : bounds)
        if (b.name == name)
            return &b;
    return nullptr;
}

BoundReport bound_report(const Hypergraph &h, int k)
{
    if (k < 0)
        throw std::invalid_argument("k must be >= 0");
    const auto profile = degree_profile(h);

    BoundReport r;
    r.n = h.n();
    r.e = h.e();
    r.s = h.s();
    r.k = k;
    r.delta = profile.max_degree;
    r.d = profile.avg_degree;

    r.bounds.push_back(bound_max_degree(h, k));
    r.bounds.push_back(bound_edge_count(h, k));
    r.bounds.push_back(bound_avg_degree(h, k));
    r.bounds.push_back(bound_avg_degree_simple(h, k));
    if (k == 0) {
        r.bounds.push_back(bound_caro_tuza_alpha(h));
        r.bounds.push_back(bound_cps(h));
    } else {
        r.bounds.push_back(not_applicable(bound_names::caro_tuza_alpha, "independence-number bound, k = 0 only"));
        r.bounds.push_back(not_applicable(bound_names::cps, "independence-number bound, k = 0 only"));
    }

    auto primary = bound_caro_tuza_k(h, k + 1);
    primary.supplementary = true;
    if (primary.applicable)
        primary.reason = "index kc = k+1; excluded from best";
    r.bounds.push_back(std::move(primary));

    auto diag = bound_caro_tuza_k(h, k);
    diag.name = bound_names::caro_tuza_k_diag;
    diag.supplementary = true;
    if (diag.applicable)
        diag.reason = "diagnostic index kc = k; excluded from best";
    r.bounds.push_back(std::move(diag));

    r.best = 0;
    for (const auto &b : r.bounds)
        if (b.applicable && !b.supplementary)
            r.best = std::max(r.best, b.ceiling());
    return r;
}

} // namespace hyperk
