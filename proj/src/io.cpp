#include "pw/io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace pw {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

// strips comments and blank lines, keeps everything else in order
std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (!tokens(line).empty()) out.push_back(line);
    }
    return out;
}

}  // namespace

GraphInput parse_graph_text(const std::string& text) {
    std::vector<std::string> lines = content_lines(text);
    if (!lines.empty() && tokens(lines[0])[0] == "pw-map") lines.erase(lines.begin());
    if (lines.empty()) throw Error("empty graph description");

    struct Row {
        std::string name;
        std::vector<std::string> nbrs;
    };
    std::vector<Row> rows;
    std::optional<std::vector<std::string>> outer_names;
    for (const std::string& line : lines) {
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw Error("malformed line (expected 'name: neighbors'): " + line);
        std::vector<std::string> head = tokens(line.substr(0, colon));
        if (head.size() != 1) throw Error("malformed line head: " + line);
        std::vector<std::string> rest = tokens(line.substr(colon + 1));
        if (head[0] == "outer") {
            if (outer_names) throw Error("duplicate outer line");
            outer_names = rest;
            continue;
        }
        rows.push_back({head[0], rest});
    }

    std::map<std::string, Vertex> id;
    for (const Row& r : rows) {
        if (id.count(r.name)) throw Error("duplicate vertex line: " + r.name);
        id[r.name] = static_cast<Vertex>(id.size());
    }

    GraphInput gi;
    gi.graph = Graph(static_cast<int>(rows.size()));
    gi.graph.labels.resize(rows.size());
    gi.listed_order.resize(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        gi.graph.labels[i] = rows[i].name;
        for (const std::string& n : rows[i].nbrs) {
            auto it = id.find(n);
            if (it == id.end()) throw Error("unknown neighbor '" + n + "' of " + rows[i].name);
            gi.listed_order[i].push_back(it->second);
        }
        std::set<Vertex> dedup(gi.listed_order[i].begin(), gi.listed_order[i].end());
        if (dedup.size() != gi.listed_order[i].size())
            throw Error("repeated neighbor in line of " + rows[i].name);
    }
    for (Vertex v = 0; v < gi.graph.num_vertices(); ++v)
        for (Vertex w : gi.listed_order[v]) {
            const auto& back = gi.listed_order[w];
            if (std::find(back.begin(), back.end(), v) == back.end())
                throw Error("asymmetric adjacency: " + gi.graph.label_of(v) + " lists " +
                            gi.graph.label_of(w) + " but not vice versa");
            if (w > v) gi.graph.add_edge(v, w);
        }

    if (outer_names) {
        std::vector<Vertex> ov;
        for (const std::string& n : *outer_names) {
            auto it = id.find(n);
            if (it == id.end()) throw Error("unknown vertex '" + n + "' on outer line");
            ov.push_back(it->second);
        }
        gi.outer = std::move(ov);
    }
    return gi;
}

std::string serialize_map(const PlanarMap& m) {
    const Graph& g = m.graph();
    std::ostringstream out;
    out << "pw-map v1\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        out << g.label_of(v) << ":";
        for (Vertex w : m.spin()[v]) out << " " << g.label_of(w);
        out << "\n";
    }
    out << "outer:";
    for (Vertex v : m.faces()[m.outer_face()].boundary_vertices()) out << " " << g.label_of(v);
    out << "\n";
    return out.str();
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "pw-map v1\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        std::vector<Vertex> ns = g.neighbors(v);
        std::sort(ns.begin(), ns.end());
        out << g.label_of(v) << ":";
        for (Vertex w : ns) out << " " << g.label_of(w);
        out << "\n";
    }
    return out.str();
}

Vertex vertex_by_label(const Graph& g, const std::string& name) {
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (g.label_of(v) == name) return v;
    throw Error("no vertex named '" + name + "'");
}

ClosedWalk walk_from_labels(const Graph& g, const std::vector<std::string>& names) {
    if (names.empty()) throw Error("empty walk");
    std::vector<Vertex> seq;
    for (const std::string& n : names) seq.push_back(vertex_by_label(g, n));
    seq.push_back(seq.front());
    for (size_t i = 0; i + 1 < seq.size(); ++i)
        if (!g.has_edge(seq[i], seq[i + 1]))
            throw Error("walk uses a non-edge " + g.label_of(seq[i]) + "-" +
                        g.label_of(seq[i + 1]));
    return ClosedWalk::from_closed_sequence(seq);
}

std::string to_dot(const Graph& g, const std::vector<ClosedWalk>& highlights) {
    static const char* palette[] = {"red", "blue", "forestgreen", "orange", "purple", "brown"};
    std::map<std::pair<Vertex, Vertex>, int> color;
    for (size_t i = 0; i < highlights.size(); ++i)
        for (const auto& e : highlights[i].edge_set())
            color.emplace(e, static_cast<int>(i % 6));
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        out << "  v" << v << " [label=\"" << g.label_of(v) << "\"];\n";
    for (auto [u, v] : g.edges()) {
        out << "  v" << u << " -- v" << v;
        auto it = color.find({u, v});
        if (it != color.end()) out << " [color=" << palette[it->second] << ", penwidth=2]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace pw
