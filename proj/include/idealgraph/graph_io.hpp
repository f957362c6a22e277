#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "idealgraph/graph.hpp"
#include "idealgraph/ring.hpp"

namespace idealgraph {

std::vector<std::string> vertex_labels(const std::vector<IdealVector>& vertices);

// DOT text with vertices in index order and edges sorted; byte-stable for
// fixed input.
std::string to_dot(const Graph& g, const std::vector<std::string>& labels,
                   std::string_view graph_id);

// {spec, what, vertices[], edges[]} with edge index pairs sorted.
nlohmann::ordered_json graph_to_json(const Graph& g, const RingSpec& spec,
                                     const std::vector<IdealVector>& vertices,
                                     std::string_view what);

}  // namespace idealgraph
