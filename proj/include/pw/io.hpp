#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pw/planar_map.hpp"

namespace pw {

/// Parsed graph text: one line per vertex "v: n1 n2 ...". The neighbor
/// order of each line is kept (a user-supplied rotation system); an
/// optional "outer: v1 ... vk" line names the outer face boundary.
struct GraphInput {
    Graph graph;
    std::vector<std::vector<Vertex>> listed_order;
    std::optional<std::vector<Vertex>> outer;
};

GraphInput parse_graph_text(const std::string& text);

/// "v: ..." lines in spin order plus the outer face line; parses back.
std::string serialize_map(const PlanarMap& m);

/// "v: ..." lines with neighbors sorted by label.
std::string serialize_graph(const Graph& g);

Vertex vertex_by_label(const Graph& g, const std::string& name);

/// Closed walk from a label sequence (without the closing repeat).
ClosedWalk walk_from_labels(const Graph& g, const std::vector<std::string>& names);

/// Graphviz export; highlighted walks get colored edges.
std::string to_dot(const Graph& g, const std::vector<ClosedWalk>& highlights = {});

}  // namespace pw
