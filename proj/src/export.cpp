#include "c4c8/export.hpp"

#include <json.hpp>

namespace c4c8 {

namespace {

std::string export_dot(const TorusGraph& g) {
  std::string out = "graph c4c8_m" + std::to_string(g.params.m) + "_n" +
                    std::to_string(g.params.n) + " {\n";
  for (std::uint32_t x = 0; x < g.order(); ++x)
    out += "  " + vertex_label(decode_vertex(g.params, x)) + ";\n";
  for (const auto& [a, b] : g.edges())
    out += "  " + vertex_label(decode_vertex(g.params, a)) + " -- " +
           vertex_label(decode_vertex(g.params, b)) + ";\n";
  out += "}\n";
  return out;
}

std::string export_json(const TorusGraph& g) {
  nlohmann::ordered_json j;
  j["params"] = {{"m", g.params.m}, {"n", g.params.n}};
  auto& vertices = j["vertices"] = nlohmann::ordered_json::array();
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    const VertexId v = decode_vertex(g.params, x);
    vertices.push_back({{"index", x}, {"j", v.j}, {"i", v.i}, {"t", v.t}});
  }
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  return j.dump(2) + "\n";
}

std::string export_edgelist(const TorusGraph& g) {
  std::string out;
  for (const auto& [a, b] : g.edges())
    out += std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

}  // namespace

std::optional<ExportFormat> parse_export_format(std::string_view name) {
  if (name == "dot") return ExportFormat::kDot;
  if (name == "json") return ExportFormat::kJson;
  if (name == "edgelist") return ExportFormat::kEdgeList;
  return std::nullopt;
}

std::string export_graph(const TorusGraph& g, ExportFormat format) {
  switch (format) {
    case ExportFormat::kDot:
      return export_dot(g);
    case ExportFormat::kJson:
      return export_json(g);
    case ExportFormat::kEdgeList:
      return export_edgelist(g);
  }
  throw std::invalid_argument("unknown export format");
}

}  // namespace c4c8
