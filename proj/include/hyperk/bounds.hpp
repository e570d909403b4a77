#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperk/hypergraph.hpp"
#include "hyperk/rational.hpp"

namespace hyperk {

/// Euler-Mascheroni constant to 17 significant digits.
inline constexpr double euler_gamma = 0.57721566490153286;

/// f(x) = (1/(1+x)) * (1 + {x}(1-{x}) / ((floor(x)+1)(floor(x)+2))).
Rational eval_f(const Rational &x);

/// g(0) = 1; g(x) = (2c - x) / (c(1+c)) with c = ceil(x) for x > 0.
Rational eval_g(const Rational &x);

/// Per-vertex weight of the Caro-Tuza k-independence bound, in Caro-Tuza's own
/// index convention (kc = 1 means ordinary independence). Requires kc >= 1.
Rational caro_tuza_weight(int kc, int s, int degree);

struct BoundValue
{
    std::string name;
    bool applicable = false;
    std::optional<Rational> exact;  ///< set for applicable rational-valued bounds
    std::optional<double> approx;   ///< set for applicable float-only bounds
    std::string reason;             ///< why not applicable, or a note
    /// Reported but not folded into BoundReport::best.
    bool supplementary = false;

    double to_double() const;
    /// Smallest integer the bound certifies (α_k is an integer).
    long long ceiling() const;
};

namespace bound_names {
inline constexpr const char *max_degree = "max_degree";
inline constexpr const char *edge_count = "edge_count";
inline constexpr const char *avg_degree = "avg_degree";
inline constexpr const char *avg_degree_simple = "avg_degree_simple";
inline constexpr const char *caro_tuza_alpha = "caro_tuza_alpha";
inline constexpr const char *cps = "cps";
inline constexpr const char *caro_tuza_k = "caro_tuza_k";
inline constexpr const char *caro_tuza_k_diag = "caro_tuza_k_diag";
} // namespace bound_names

/// n / ceil(Δ/k); Δ = 0 gives n. Not applicable for k = 0.
BoundValue bound_max_degree(const Hypergraph &h, int k);
/// n - e/(k+1), unclamped.
BoundValue bound_edge_count(const Hypergraph &h, int k);
/// f(2e / (n(k+1))) * n.
BoundValue bound_avg_degree(const Hypergraph &h, int k);
/// n^2 (k+1) / (n(k+1) + 2e).
BoundValue bound_avg_degree_simple(const Hypergraph &h, int k);
/// Sum over vertices of prod_{i=1}^{deg} (1 - 1/(i(s-1)+1)). Independence number only.
BoundValue bound_caro_tuza_alpha(const Hypergraph &h);
/// e^{-γ/(s-1)} * sum 1/(d_i+1)^{1/(s-1)}; only for s >= 3. Double precision.
BoundValue bound_cps(const Hypergraph &h);
/// Sum over vertices of the Caro-Tuza weight at index kc.
BoundValue bound_caro_tuza_k(const Hypergraph &h, int kc);

struct BoundReport
{
    int n = 0;
    int e = 0;
    int s = 0;
    int k = 0;
    int delta = 0;
    Rational d;
    std::vector<BoundValue> bounds;
    long long best = 0;

    const BoundValue *find(const std::string &name) const;
};

/// Every bound for (H, k). At k = 0 the independence-number bounds are
/// included; the Caro-Tuza k-bound is reported at kc = k+1 and (diagnostic)
/// kc = k. Only the non-supplementary applicable bounds feed `best`.
BoundReport bound_report(const Hypergraph &h, int k);

} // namespace hyperk
