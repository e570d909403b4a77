#include "hyperk/extract.hpp"

#include <algorithm>
#include <numeric>

namespace hyperk {

namespace {

// Mutable view of H under vertex deletion; deleting v drops every edge through v.
class Peeler
{
public:
    explicit Peeler(const Hypergraph &h)
        : h_(h)
        , vertex_alive_(static_cast<std::size_t>(h.n()), 1)
        , edge_alive_(static_cast<std::size_t>(h.e()), 1)
        , degree_(static_cast<std::size_t>(h.n()))
        , edges_left_(h.e())
    {
        for (Vertex v = 0; v < h.n(); ++v)
            degree_[static_cast<std::size_t>(v)] = h.degree(v);
    }

    /// Live vertex of highest degree, lowest id on ties; -1 if none is left.
    Vertex max_degree_vertex() const
    {
        Vertex best = -1;
        for (Vertex v = 0; v < h_.n(); ++v)
            if (vertex_alive_[static_cast<std::size_t>(v)] && (best < 0 || degree(v) > degree(best)))
                best = v;
        return best;
    }

    int degree(Vertex v) const { return degree_[static_cast<std::size_t>(v)]; }
    int edges_left() const { return edges_left_; }

    void remove(Vertex v)
    {
        vertex_alive_[static_cast<std::size_t>(v)] = 0;
        for (int idx : h_.incident(v)) {
            if (!edge_alive_[static_cast<std::size_t>(idx)])
                continue;
            edge_alive_[static_cast<std::size_t>(idx)] = 0;
            --edges_left_;
            for (Vertex u : h_.edge(idx))
                --degree_[static_cast<std::size_t>(u)];
        }
    }

    std::vector<Vertex> survivors() const
    {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < h_.n(); ++v)
            if (vertex_alive_[static_cast<std::size_t>(v)])
                out.push_back(v);
        return out;
    }

private:
    const Hypergraph &h_;
    std::vector<char> vertex_alive_;
    std::vector<char> edge_alive_;
    std::vector<int> degree_;
    int edges_left_;
};

// Re-checks k-independence on the input hypergraph and fills certified_max_degree.
ExtractionResult certify(const Hypergraph &h, ExtractionResult r)
{
    const auto check = is_k_independent(h, r.set, r.k);
    if (!check.independent)
        throw VerificationFailure(r.algorithm + ": result is not " + std::to_string(r.k)
                                  + "-independent (vertex " + std::to_string(check.violator + 1)
                                  + " has induced degree " + std::to_string(check.max_degree) + ")");
    r.certified_max_degree = check.max_degree;
    return r;
}

ExtractionResult peel_raw(const Hypergraph &h, int k, int threshold)
{
    ExtractionResult r;
    r.algorithm = "greedy";
    r.k = k;
    Peeler p(h);
    for (;;) {
        const Vertex v = p.max_degree_vertex();
        if (v < 0 || p.degree(v) < threshold)
            break;
        r.trace.push_back({TraceStep::Op::remove, v, p.degree(v)});
        p.remove(v);
    }
    r.set = VertexSet(p.survivors());
    return r;
}

// Local search over c0 classes, minimising monochromatic edges.
Partition partition_raw(const Hypergraph &h, int k, int c0)
{
    std::vector<int> cls(static_cast<std::size_t>(h.n()));
    for (Vertex v = 0; v < h.n(); ++v)
        cls[static_cast<std::size_t>(v)] = v % c0;
    int classes = c0;

    auto class_of = [&](Vertex v) { return cls[static_cast<std::size_t>(v)]; };

    // Number of edges through v whose other vertices all sit in class `c`.
    auto prospective = [&](Vertex v, int c) {
        int count = 0;
        for (int idx : h.incident(v)) {
            const auto &edge = h.edge(idx);
            if (std::all_of(edge.begin(), edge.end(), [&](Vertex u) { return u == v || class_of(u) == c; }))
                ++count;
        }
        return count;
    };

    Partition part;
    part.k = k;
    for (;;) {
        Vertex violator = -1;
        int current = 0;
        for (Vertex v = 0; v < h.n() && violator < 0; ++v) {
            const int d = prospective(v, class_of(v));
            if (d > k) {
                violator = v;
                current = d;
            }
        }
        if (violator < 0)
            break;

        int target = 0;
        int target_degree = prospective(violator, 0);
        for (int c = 1; c < classes; ++c) {
            const int d = prospective(violator, c);
            if (d < target_degree) {
                target = c;
                target_degree = d;
            }
        }
        if (target_degree >= current) {
            // Unreachable when classes >= ceil(Δ/k); kept so the result is always valid.
            target = classes++;
            ++part.fallback_events;
        }
        cls[static_cast<std::size_t>(violator)] = target;
        part.trace.push_back({TraceStep::Op::move, violator, current});
        ++part.moves;
    }

    std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(classes));
    for (Vertex v = 0; v < h.n(); ++v)
        members[static_cast<std::size_t>(class_of(v))].push_back(v);
    for (auto &m : members) {
        VertexSet set(std::move(m));
        part.class_max_degree.push_back(is_k_independent(h, set, k).max_degree);
        part.classes.push_back(std::move(set));
    }
    return part;
}

Partition partition_raw(const Hypergraph &h, int k)
{
    return partition_raw(h, k, partition_class_count(degree_profile(h).max_degree, k));
}

ExtractionResult largest_class(Partition part, int k)
{
    std::size_t largest = 0;
    for (std::size_t i = 1; i < part.classes.size(); ++i)
        if (part.classes[i].size() > part.classes[largest].size())
            largest = i;
    ExtractionResult r;
    r.algorithm = "partition";
    r.k = k;
    r.set = part.classes[largest];
    r.trace = std::move(part.trace);
    return r;
}

ExtractionResult partition_extract_raw(const Hypergraph &h, int k)
{
    return largest_class(partition_raw(h, k), k);
}

// ceil((Δ+1)/(k+1)) classes always suffice: a vertex with more than k edges inside its
// own class leaves at most Δ-(k+1) for the others, so some other class takes it strictly better.
ExtractionResult lovasz_extract_raw(const Hypergraph &h, int k)
{
    const int delta = degree_profile(h).max_degree;
    auto r = largest_class(partition_raw(h, k, std::max(1, (delta + k + 1) / (k + 1))), k);
    r.algorithm = "partition";
    return r;
}

// Translates vertex ids of a result on a subhypergraph back through `orig`.
void relabel(ExtractionResult &r, const std::vector<Vertex> &orig)
{
    std::vector<Vertex> ids;
    ids.reserve(r.set.size());
    for (Vertex v : r.set)
        ids.push_back(orig[static_cast<std::size_t>(v)]);
    r.set = VertexSet(std::move(ids));
    for (auto &step : r.trace)
        step.vertex = orig[static_cast<std::size_t>(step.vertex)];
}

ExtractionResult thm37_level(const Hypergraph &h, const std::vector<Vertex> &orig, int k,
                             std::vector<PeelPhase> &phases)
{
    const std::int64_t n = h.n();
    const std::int64_t e = h.e();
    const std::int64_t kk = k + 1;

    // r = max(0, ceil(2e / (n(k+1))) - 1)
    const std::int64_t band = std::max<std::int64_t>(0, (2 * e + n * kk - 1) / (n * kk) - 1);

    ExtractionResult greedy = peel_raw(h, k, k + 1);
    relabel(greedy, orig);
    if (band == 0)
        return greedy;

    PeelPhase phase;
    phase.n = h.n();
    phase.e = h.e();
    phase.band = static_cast<int>(band);
    phase.t = Rational(2 * e - n * band * kk, (band + 2) * kk);
    phase.cap = static_cast<int>(*to_int64(phase.t.ceil()));

    // Removal threshold s(r+1)(k+1)/2, compared as 2*deg >= s(r+1)(k+1).
    const std::int64_t twice_threshold = static_cast<std::int64_t>(h.s()) * (band + 1) * kk;
    Peeler p(h);
    std::vector<TraceStep> removals;
    while (phase.removed < phase.cap) {
        const Vertex v = p.max_degree_vertex();
        if (v < 0 || 2 * static_cast<std::int64_t>(p.degree(v)) < twice_threshold)
            break;
        removals.push_back({TraceStep::Op::remove, orig[static_cast<std::size_t>(v)], p.degree(v)});
        p.remove(v);
        ++phase.removed;
    }
    const auto survivors = p.survivors();
    phase.full_phase = phase.removed == phase.cap;
    if (phase.full_phase && !survivors.empty())
        phase.remainder_in_lower_band
            = 2 * static_cast<std::int64_t>(p.edges_left()) <= static_cast<std::int64_t>(survivors.size()) * band * kk;
    for (Vertex v : survivors)
        phase.survivors.push_back(orig[static_cast<std::size_t>(v)]);
    phases.push_back(phase);

    std::vector<ExtractionResult> candidates;
    if (phase.removed > 0) {
        ExtractionResult rec;
        rec.k = k;
        if (!survivors.empty()) {
            std::vector<Vertex> sub_orig;
            sub_orig.reserve(survivors.size());
            for (Vertex v : survivors)
                sub_orig.push_back(orig[static_cast<std::size_t>(v)]);
            rec = thm37_level(induced(h, VertexSet(survivors)), sub_orig, k, phases);
        }
        rec.trace.insert(rec.trace.begin(), removals.begin(), removals.end());
        candidates.push_back(std::move(rec));
    }
    if (!phase.full_phase && !survivors.empty()) {
        // Short phase: the remainder has max degree below the threshold.
        std::vector<Vertex> sub_orig;
        for (Vertex v : survivors)
            sub_orig.push_back(orig[static_cast<std::size_t>(v)]);
        auto low = lovasz_extract_raw(induced(h, VertexSet(survivors)), k);
        relabel(low, sub_orig);
        low.trace.insert(low.trace.begin(), removals.begin(), removals.end());
        candidates.push_back(std::move(low));
    }
    candidates.push_back(std::move(greedy));
    if (k >= 1) {
        auto part = partition_extract_raw(h, k);
        relabel(part, orig);
        candidates.push_back(std::move(part));
    }

    auto best = std::max_element(candidates.begin(), candidates.end(),
                                 [](const auto &a, const auto &b) { return a.size() < b.size(); });
    return std::move(*best);
}

} // namespace

int partition_class_count(int max_degree, int k)
{
    if (k < 1)
        throw std::invalid_argument("k-partition needs k >= 1");
    return std::max(1, (max_degree + k - 1) / k);
}

ExtractionResult greedy_peel(const Hypergraph &h, int k, int threshold)
{
    if (k < 0)
        throw std::invalid_argument("k must be >= 0");
    if (threshold == 0)
        threshold = k + 1;
    if (threshold < 1 || threshold > k + 1)
        throw std::invalid_argument("greedy_peel threshold must lie in [1, k+1]");
    return certify(h, peel_raw(h, k, threshold));
}

ExtractionResult thm37_extract(const Hypergraph &h, int k)
{
    if (k < 0)
        throw std::invalid_argument("k must be >= 0");
    std::vector<Vertex> orig(static_cast<std::size_t>(h.n()));
    std::iota(orig.begin(), orig.end(), 0);
    std::vector<PeelPhase> phases;
    auto r = thm37_level(h, orig, k, phases);
    r.algorithm = "thm37";
    r.k = k;
    r.phases = std::move(phases);
    return certify(h, std::move(r));
}

Partition k_partition(const Hypergraph &h, int k)
{
    if (k < 1)
        throw std::invalid_argument("k_partition needs k >= 1");
    auto part = partition_raw(h, k);
    for (std::size_t i = 0; i < part.classes.size(); ++i)
        if (part.class_max_degree[i] > k)
            throw VerificationFailure("k_partition produced a class with induced degree above k");
    return part;
}

ExtractionResult partition_extract(const Hypergraph &h, int k)
{
    if (k < 1)
        throw std::invalid_argument("partition_extract needs k >= 1");
    return certify(h, partition_extract_raw(h, k));
}

ExtractionResult best_extract(const Hypergraph &h, int k)
{
    if (k < 0)
        throw std::invalid_argument("k must be >= 0");
    std::vector<ExtractionResult> candidates;
    candidates.push_back(peel_raw(h, k, k + 1));
    candidates.push_back(thm37_extract(h, k));
    if (k >= 1)
        candidates.push_back(partition_extract_raw(h, k));

    auto best = std::move(*std::max_element(candidates.begin(), candidates.end(),
                                            [](const auto &a, const auto &b) { return a.size() < b.size(); }));
    best.phases.clear();

    // Augment in ascending id order; each accepted vertex keeps the set k-independent.
    std::vector<Vertex> members = best.set.members();
    for (Vertex v = 0; v < h.n(); ++v) {
        if (best.set.contains(v))
            continue;
        std::vector<Vertex> trial = members;
        trial.push_back(v);
        VertexSet candidate(std::move(trial));
        if (is_k_independent(h, candidate, k).independent)
            members = candidate.members();
    }
    best.set = VertexSet(std::move(members));
    best.algorithm = "best";
    best.k = k;
    return certify(h, std::move(best));
}

} // namespace hyperk
