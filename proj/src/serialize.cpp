#include "hyperk/serialize.hpp"

namespace hyperk {

Json big_int_json(const BigInt &v)
{
    if (auto small = to_int64(v))
        return *small;
    return v.get_str();
}

Json ids_json(const VertexSet &s)
{
    Json out = Json::array();
    for (Vertex v : s)
        out.push_back(v + 1);
    return out;
}

Json to_json(const BoundReport &r)
{
    Json j;
    j["n"] = r.n;
    j["e"] = r.e;
    j["s"] = r.s;
    j["k"] = r.k;
    j["delta"] = r.delta;
    j["d"] = Json{{"num", big_int_json(r.d.num())}, {"den", big_int_json(r.d.den())}};
    Json bounds = Json::array();
    for (const auto &b : r.bounds) {
        Json jb;
        jb["name"] = b.name;
        if (b.exact) {
            jb["num"] = big_int_json(b.exact->num());
            jb["den"] = big_int_json(b.exact->den());
        } else {
            jb["num"] = nullptr;
            jb["den"] = nullptr;
        }
        if (b.applicable)
            jb["float"] = b.to_double();
        else
            jb["float"] = nullptr;
        jb["applicable"] = b.applicable;
        jb["reason"] = b.reason;
        bounds.push_back(std::move(jb));
    }
    j["bounds"] = std::move(bounds);
    j["best"] = r.best;
    return j;
}

namespace {

Json trace_json(const std::vector<TraceStep> &trace)
{
    Json out = Json::array();
    for (const auto &step : trace)
        out.push_back(Json{{"op", step.op == TraceStep::Op::remove ? "remove" : "move"},
                           {"vertex", step.vertex + 1},
                           {"degree", step.degree}});
    return out;
}

} // namespace

Json to_json(const ExtractionResult &r)
{
    Json j;
    j["algorithm"] = r.algorithm;
    j["k"] = r.k;
    j["size"] = r.size();
    j["set"] = ids_json(r.set);
    j["certified_max_degree"] = r.certified_max_degree;
    j["trace"] = trace_json(r.trace);
    return j;
}

Json to_json(const OracleResult &r)
{
    Json j;
    j["quantity"] = r.quantity;
    j["k"] = r.k;
    if (r.value)
        j["value"] = *r.value;
    else
        j["value"] = nullptr;
    j["status"] = r.complete() ? "exact" : "budget_exceeded";
    if (!r.complete()) {
        j["witness"] = nullptr;
    } else if (r.quantity == "chi_k") {
        Json classes = Json::array();
        for (const auto &c : r.witness_partition)
            classes.push_back(ids_json(c));
        j["witness"] = std::move(classes);
    } else {
        j["witness"] = ids_json(r.witness_set);
    }
    j["nodes"] = r.nodes;
    return j;
}

Json to_json(const Partition &p)
{
    Json j;
    j["k"] = p.k;
    j["classes"] = Json::array();
    for (std::size_t i = 0; i < p.classes.size(); ++i)
        j["classes"].push_back(Json{{"members", ids_json(p.classes[i])}, {"max_degree", p.class_max_degree[i]}});
    j["moves"] = p.moves;
    j["fallback_events"] = p.fallback_events;
    j["trace"] = trace_json(p.trace);
    return j;
}

} // namespace hyperk
