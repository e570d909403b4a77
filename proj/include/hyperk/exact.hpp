#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperk/hypergraph.hpp"

namespace hyperk {

enum class OracleStatus { exact, budget_exceeded };

struct OracleResult
{
    std::string quantity;  ///< "alpha_k" or "chi_k"
    int k = 0;
    OracleStatus status = OracleStatus::exact;
    std::optional<int> value;           ///< empty iff budget exceeded
    VertexSet witness_set;              ///< alpha_k witness
    std::vector<VertexSet> witness_partition;  ///< chi_k witness
    std::uint64_t nodes = 0;
    std::chrono::nanoseconds elapsed{0};

    bool complete() const { return status == OracleStatus::exact; }
};

inline constexpr std::uint64_t default_node_budget = 50'000'000;

/// Maximum k-independent set by branch and bound over candidate sets. n <= 64.
OracleResult alpha_k_exact(const Hypergraph &h, int k, std::uint64_t budget = default_node_budget);

/// Reference sweep over all 2^n subsets. n <= 24.
OracleResult alpha_k_sweep(const Hypergraph &h, int k);

/// Minimum number of classes with induced max degree <= k. k >= 1, n <= 64.
OracleResult chi_k_exact(const Hypergraph &h, int k, std::uint64_t budget = default_node_budget);

} // namespace hyperk
