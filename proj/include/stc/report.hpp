#pragma once

#include <json.hpp>
#include <string>

#include "stc/bounds.hpp"
#include "stc/decomposer.hpp"
#include "stc/rational.hpp"
#include "stc/spantree.hpp"

namespace stc::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

// Rationals are written as {"num": p, "den": q}; edges as [u, v] in host ids.
Json to_json(const Rational& r);
Json to_json(const Edge& e);
Json to_json(const VertexSet& s);
Json to_json(const std::vector<Edge>& edges);
Json to_json(const CongestionReport& c);
Json to_json(const DecompositionTree& d);
Json to_json(const std::vector<RecurrenceCheck>& checks);
Json to_json(const GlobalBoundCheck& check);
Json to_json(const BoundCertificate& cert);
Json to_json(const ApproximationRecord& rec);

/// Decomposition tree as a DOT digraph; each node shows |V_t|, |F|, h and c.
std::string to_dot(const DecompositionTree& d);

}  // namespace stc::report
