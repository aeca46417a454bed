#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "c4c8/torus.hpp"

namespace c4c8 {

enum class ExportFormat { kDot, kJson, kEdgeList };

// Accepts "dot", "json", "edgelist"; nullopt otherwise.
std::optional<ExportFormat> parse_export_format(std::string_view name);

// Serializes the graph. Node ids are t{t}_r{i}_c{j} (DOT), vertex records
// carry {index, j, i, t} (JSON), edge pairs are emitted once with a < b in
// ascending order everywhere. Byte-identical across runs for equal inputs.
std::string export_graph(const TorusGraph& g, ExportFormat format);

}  // namespace c4c8
