#include "idealgraph/graph_io.hpp"

namespace idealgraph {

std::vector<std::string> vertex_labels(const std::vector<IdealVector>& vertices) {
  std::vector<std::string> out;
  out.reserve(vertices.size());
  for (const auto& v : vertices) out.push_back(to_text(v));
  return out;
}

std::string to_dot(const Graph& g, const std::vector<std::string>& labels,
                   std::string_view graph_id) {
  std::string s = "graph ";
  s += graph_id;
  s += " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    s += "  v" + std::to_string(v);
    if (v < static_cast<int>(labels.size())) {
      s += " [label=\"" + labels[static_cast<std::size_t>(v)] + "\"]";
    }
    s += ";\n";
  }
  for (auto [u, v] : g.edge_list()) {
    s += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
  }
  s += "}\n";
  return s;
}

nlohmann::ordered_json graph_to_json(const Graph& g, const RingSpec& spec,
                                     const std::vector<IdealVector>& vertices,
                                     std::string_view what) {
  nlohmann::ordered_json j;
  j["spec"] = spec.to_text();
  j["what"] = std::string(what);
  j["vertex_count"] = g.vertex_count();
  nlohmann::ordered_json verts = nlohmann::ordered_json::array();
  for (const auto& v : vertices) verts.push_back(v.levels);
  j["vertices"] = std::move(verts);
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edge_list()) {
    edges.push_back(nlohmann::ordered_json::array({u, v}));
  }
  j["edges"] = std::move(edges);
  return j;
}

}  // namespace idealgraph
