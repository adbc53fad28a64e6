#pragma once

#include <string>
#include <vector>

#include "cc/cluster.hpp"
#include "cc/dospgraph.hpp"
#include "cc/explorer.hpp"

namespace cc {

// {"k","punctures","vertices":[{"name","frozen","weights":[[...] per puncture]}],"arrows":[[from,to,mult]]}.
// Weights are written as normalized coordinates; arrows list positive b entries only.
std::string pseed_to_json(const PSeed& p, const std::vector<std::string>& names = {}, int indent = 2);
// Inverse of pseed_to_json. Throws Parse on malformed input and BalancingViolated when unbalanced.
PSeed pseed_from_json(const std::string& text);
// Vertex names stored in the JSON, or x0, x1, ... when absent.
std::vector<std::string> names_from_json(const std::string& text);

std::string quiver_to_dot(const Quiver& q, const std::vector<std::string>& names = {});

std::string graph_to_json(const ExchangeGraph& g, int indent = 2);
std::string graph_to_dot(const ExchangeGraph& g);

// "pcluster,dosp" header plus one quoted row per table entry.
std::string table_to_csv(const std::vector<PClusterRow>& rows);

}  // namespace cc
