#pragma once

#include <string>
#include <vector>

#include "hyperk/hypergraph.hpp"

namespace hyperk {

struct TraceStep
{
    enum class Op { remove, move };
    Op op = Op::remove;
    Vertex vertex = -1;  ///< original id
    int degree = 0;      ///< degree that triggered the step
};

/// One threshold-removal phase of the average-degree extraction.
struct PeelPhase
{
    int n = 0;
    int e = 0;
    int band = 0;        ///< r: minimal r >= 0 with d <= (s/2)(r+1)(k+1)
    Rational t;          ///< (2e - n r (k+1)) / ((r+2)(k+1))
    int cap = 0;         ///< ceil(t)
    int removed = 0;
    /// Edge density after a phase that used its full cap, checked against (s/2) r (k+1).
    bool full_phase = false;
    bool remainder_in_lower_band = true;
    /// Vertices surviving the phase (original ids); the harness tests them against (n - t)/(r + 1).
    std::vector<Vertex> survivors;
};

struct ExtractionResult
{
    std::string algorithm;
    int k = 0;
    VertexSet set;                 ///< original ids
    std::vector<TraceStep> trace;
    int certified_max_degree = 0;  ///< Δ(H[set]), always <= k
    std::vector<PeelPhase> phases; ///< filled by thm37_extract only

    std::size_t size() const { return set.size(); }
};

struct Partition
{
    int k = 0;
    std::vector<VertexSet> classes;
    std::vector<int> class_max_degree;
    int moves = 0;
    int fallback_events = 0;  ///< classes opened because no improving move existed
    std::vector<TraceStep> trace;

    bool degraded() const { return fallback_events > 0; }
};

/// Thrown when an extraction result fails its own k-independence re-check.
class VerificationFailure : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

/// Repeatedly removes a vertex of current degree >= threshold (highest degree
/// first, ties by lowest id). threshold = 0 means k + 1. Requires 1 <= threshold <= k + 1.
ExtractionResult greedy_peel(const Hypergraph &h, int k, int threshold = 0);

/// Constructive form of the average-degree bound: band-wise threshold peeling
/// with recursion on the remainder, falling back to the best of greedy peeling
/// and partition extraction at every level.
ExtractionResult thm37_extract(const Hypergraph &h, int k);

/// Local search into max(1, ceil(Δ/k)) classes of induced max degree <= k. Requires k >= 1.
Partition k_partition(const Hypergraph &h, int k);

/// Largest class of k_partition. Requires k >= 1.
ExtractionResult partition_extract(const Hypergraph &h, int k);

/// Largest of all extractors, then augmented to a maximal k-independent set.
ExtractionResult best_extract(const Hypergraph &h, int k);

/// max(1, ceil(Δ/k)).
int partition_class_count(int max_degree, int k);

} // namespace hyperk
