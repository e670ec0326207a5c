#include "pw/planar_map.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace pw {

PlanarMap::PlanarMap(Graph g, std::vector<std::vector<Vertex>> spin, std::optional<int> outer_face)
    : g_(std::move(g)), spin_(std::move(spin)) {
    if (static_cast<int>(spin_.size()) != g_.num_vertices())
        throw Error("spin table size mismatch");
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
        std::vector<Vertex> a = g_.neighbors(v);
        std::vector<Vertex> b = spin_[v];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) throw Error("spin at vertex " + g_.label_of(v) + " is not a cyclic order of its incident edges");
    }
    trace_all_faces();

    // Euler check, per component: 2 for components with an edge, 1 for
    // isolated vertices.
    int expected = 0;
    std::vector<bool> seen(g_.num_vertices(), false);
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
        if (seen[v]) continue;
        std::vector<Vertex> comp;
        std::queue<Vertex> q;
        q.push(v);
        seen[v] = true;
        bool has_edge = false;
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            if (g_.degree(x) > 0) has_edge = true;
            for (Vertex w : g_.neighbors(x))
                if (!seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
        }
        expected += has_edge ? 2 : 1;
    }
    if (g_.num_vertices() - g_.num_edges() + num_faces() != expected)
        throw Error("rotation system fails the Euler check (not a sphere embedding): V=" +
                    std::to_string(g_.num_vertices()) + " E=" + std::to_string(g_.num_edges()) +
                    " F=" + std::to_string(num_faces()) + " expected V-E+F=" +
                    std::to_string(expected));

    if (outer_face) {
        if (*outer_face < 0 || *outer_face >= num_faces()) throw Error("outer face out of range");
        outer_face_ = *outer_face;
    } else {
        outer_face_ = default_outer_face();
    }
}

int PlanarMap::spin_index(Vertex v, Vertex w) const {
    const auto& s = spin_[v];
    for (int i = 0; i < static_cast<int>(s.size()); ++i)
        if (s[i] == w) return i;
    throw Error("edge not incident to vertex");
}

Vertex PlanarMap::spin_next(Vertex v, Vertex w) const {
    const auto& s = spin_[v];
    return s[(spin_index(v, w) + 1) % s.size()];
}

bool PlanarMap::spin_contains(Vertex v, Vertex a, Vertex b, Vertex c) const {
    if (a == b || b == c || a == c) throw Error("spin_contains requires three distinct edges");
    int pa = spin_index(v, a), pb = spin_index(v, b), pc = spin_index(v, c);
    int n = static_cast<int>(spin_[v].size());
    int db = (pb - pa + n) % n;
    int dc = (pc - pa + n) % n;
    return db < dc;
}

void PlanarMap::trace_all_faces() {
    faces_.clear();
    dart_face_.assign(g_.num_vertices(), {});
    for (Vertex v = 0; v < g_.num_vertices(); ++v) dart_face_[v].assign(spin_[v].size(), -1);

    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
        for (int i = 0; i < static_cast<int>(spin_[v].size()); ++i) {
            if (dart_face_[v][i] >= 0) continue;
            Face f;
            int id = static_cast<int>(faces_.size());
            Dart d(v, spin_[v][i]);
            while (true) {
                int idx = spin_index(d.tail, d.head);
                if (dart_face_[d.tail][idx] >= 0) break;
                dart_face_[d.tail][idx] = id;
                f.boundary.push_back(d);
                d = Dart(d.head, spin_next(d.head, d.tail));
            }
            faces_.push_back(std::move(f));
        }
    }
}

int PlanarMap::face_of(const Dart& d) const { return dart_face_[d.tail][spin_index(d.tail, d.head)]; }

int PlanarMap::default_outer_face() const {
    int best = -1;
    std::vector<Vertex> best_key;
    for (int i = 0; i < num_faces(); ++i) {
        std::vector<Vertex> key = faces_[i].boundary_walk().canonical_key();
        if (best < 0 || faces_[i].size() > faces_[best].size() ||
            (faces_[i].size() == faces_[best].size() && key < best_key)) {
            best = i;
            best_key = key;
        }
    }
    return best;
}

PlanarMap PlanarMap::reflected() const {
    std::vector<std::vector<Vertex>> rev = spin_;
    for (auto& s : rev) std::reverse(s.begin(), s.end());
    PlanarMap m(g_, rev);
    // keep the same outer face (as an edge set)
    std::set<std::pair<Vertex, Vertex>> outer_edges = faces_[outer_face_].boundary_walk().edge_set();
    for (int i = 0; i < m.num_faces(); ++i)
        if (m.faces()[i].boundary_walk().edge_set() == outer_edges &&
            m.faces()[i].size() == faces_[outer_face_].size())
            return m.with_outer_face(i);
    throw Error("reflection lost the outer face");
}

PlanarMap PlanarMap::with_outer_face(int face) const { return PlanarMap(g_, spin_, face); }

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;

}  // namespace

EmbedResult embed(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 0) return PlanarMap(Graph(), {});

    BoostGraph bg(n);
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
    auto eindex = boost::get(boost::edge_index, bg);
    int ei = 0;
    for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(eindex, *it, ei++);

    using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> embedding(n);
    std::vector<EdgeDesc> kuratowski;

    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = embedding.data(),
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

    if (!planar) {
        NonPlanarWitness w;
        for (const EdgeDesc& e : kuratowski) {
            int u = static_cast<int>(boost::source(e, bg));
            int v = static_cast<int>(boost::target(e, bg));
            w.edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(w.edges.begin(), w.edges.end());
        w.edges.erase(std::unique(w.edges.begin(), w.edges.end()), w.edges.end());
        return w;
    }

    std::vector<std::vector<Vertex>> spin(n);
    for (Vertex v = 0; v < n; ++v)
        for (const EdgeDesc& e : embedding[v]) {
            int a = static_cast<int>(boost::source(e, bg));
            int b = static_cast<int>(boost::target(e, bg));
            spin[v].push_back(a == v ? b : a);
        }
    PlanarMap m(g, spin);
    return m;
}

PlanarMap embed_or_throw(const Graph& g) {
    EmbedResult r = embed(g);
    if (auto* m = std::get_if<PlanarMap>(&r)) return *m;
    throw Error("graph is not planar");
}

RegionPartition cycle_regions(const PlanarMap& m, const ClosedWalk& c) {
    if (!c.is_cycle() || !c.valid_in(m.graph())) throw Error("cycle_regions requires a cycle of the map's graph");

    RegionPartition rp;
    rp.cycle = c;
    std::set<std::pair<Vertex, Vertex>> cyc_edges = c.edge_set();
    for (Vertex v : c.vertices()) rp.on_cycle_vertices.insert(v);
    rp.on_cycle_edges = cyc_edges;

    // Two-color the dual after deleting dual edges crossing the cycle.
    const Graph& g = m.graph();
    std::vector<int> color(m.num_faces(), -1);
    int ncolors = 0;
    for (int f = 0; f < m.num_faces(); ++f) {
        if (color[f] >= 0) continue;
        if (ncolors >= 2) throw Error("cycle does not separate the sphere into two regions");
        std::queue<int> q;
        color[f] = ncolors;
        q.push(f);
        while (!q.empty()) {
            int cur = q.front();
            q.pop();
            for (const Dart& d : m.faces()[cur].boundary) {
                auto e = std::make_pair(std::min(d.tail, d.head), std::max(d.tail, d.head));
                if (cyc_edges.count(e)) continue;
                int other = m.face_of(d.reversed());
                if (color[other] < 0) {
                    color[other] = ncolors;
                    q.push(other);
                }
            }
        }
        ++ncolors;
    }
    if (ncolors != 2) throw Error("cycle does not separate the sphere into two regions");

    // side 1 contains the outer face
    int outer_color = color[m.outer_face()];
    auto side_of = [&](int f) { return color[f] == outer_color ? 1 : 0; };

    for (int f = 0; f < m.num_faces(); ++f) rp.side_faces[side_of(f)].insert(f);

    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (rp.on_cycle_vertices.count(v)) continue;
        int side = -1;
        for (Vertex w : m.spin()[v]) {
            int s = side_of(m.face_of(Dart(v, w)));
            if (side < 0) side = s;
            if (side != s) throw Error("inconsistent vertex side classification");
        }
        if (side < 0) {
            // isolated vertex: classify by nothing to go on; reject
            throw Error("isolated vertex cannot be classified");
        }
        rp.side_vertices[side].insert(v);
    }

    for (auto [u, v] : g.edges()) {
        auto e = std::make_pair(u, v);
        if (cyc_edges.count(e)) continue;
        int s1 = side_of(m.face_of(Dart(u, v)));
        int s2 = side_of(m.face_of(Dart(v, u)));
        if (s1 != s2) throw Error("inconsistent edge side classification");
        rp.side_edges[s1].insert(e);
    }
    return rp;
}

}  // namespace pw
