#pragma once

#include <json.hpp>

#include "hyperk/bounds.hpp"
#include "hyperk/exact.hpp"
#include "hyperk/extract.hpp"

namespace hyperk {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are JSON numbers; larger ones are decimal strings.
Json big_int_json(const BigInt &v);

Json to_json(const BoundReport &r);
Json to_json(const ExtractionResult &r);
Json to_json(const OracleResult &r);
Json to_json(const Partition &p);

/// Vertex ids rendered 1-based, as in .hg files.
Json ids_json(const VertexSet &s);

} // namespace hyperk
