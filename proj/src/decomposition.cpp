#include "pw/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

namespace pw {

namespace {

std::pair<Vertex, Vertex> norm_pair(Vertex u, Vertex v) {
    return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

// Adjacency restricted to a vertex subset, possibly with extra (virtual)
// edges; all piece-level work during the decomposition runs on these.
using LocalAdj = std::map<Vertex, std::set<Vertex>>;

LocalAdj local_graph(const Graph& g, const std::vector<Vertex>& verts,
                     const std::vector<std::pair<Vertex, Vertex>>& extra) {
    LocalAdj adj;
    for (Vertex v : verts) adj[v];
    for (Vertex v : verts)
        for (Vertex w : g.neighbors(v))
            if (adj.count(w)) adj[v].insert(w);
    for (auto [u, v] : extra) {
        adj.at(u).insert(v);
        adj.at(v).insert(u);
    }
    return adj;
}

// Connected components after deleting `removed`, as sorted vertex lists in
// order of their smallest vertex.
std::vector<std::vector<Vertex>> local_components(const LocalAdj& adj,
                                                  const std::set<Vertex>& removed) {
    std::vector<std::vector<Vertex>> comps;
    std::set<Vertex> seen(removed);
    for (const auto& [v, _] : adj) {
        if (seen.count(v)) continue;
        std::vector<Vertex> comp, queue = {v};
        seen.insert(v);
        while (!queue.empty()) {
            Vertex x = queue.back();
            queue.pop_back();
            comp.push_back(x);
            for (Vertex y : adj.at(x))
                if (!seen.count(y)) {
                    seen.insert(y);
                    queue.push_back(y);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(comp);
    }
    return comps;
}

bool local_is_cycle(const LocalAdj& adj) {
    if (adj.size() < 3) return false;
    for (const auto& [_, nb] : adj)
        if (nb.size() != 2) return false;
    return local_components(adj, {}).size() == 1;
}

bool local_is_3connected(const LocalAdj& adj) {
    int n = static_cast<int>(adj.size());
    if (n < 4) return false;
    if (local_components(adj, {}).size() != 1) return false;
    for (auto i = adj.begin(); i != adj.end(); ++i)
        for (auto j = std::next(i); j != adj.end(); ++j)
            if (local_components(adj, {i->first, j->first}).size() != 1) return false;
    return true;
}

// Lexicographically smallest {x,y} whose removal disconnects the piece.
std::optional<std::pair<Vertex, Vertex>> separation_pair(const LocalAdj& adj) {
    for (auto i = adj.begin(); i != adj.end(); ++i)
        for (auto j = std::next(i); j != adj.end(); ++j)
            if (local_components(adj, {i->first, j->first}).size() > 1)
                return std::make_pair(i->first, j->first);
    return std::nullopt;
}

TorsoKind classify(const LocalAdj& adj) {
    if (adj.size() == 2) return TorsoKind::K2;
    if (local_is_cycle(adj)) return TorsoKind::Cycle;
    if (local_is_3connected(adj)) return TorsoKind::ThreeConnected;
    throw Error("internal: torso is neither 3-connected nor a cycle nor K2");
}

}  // namespace

bool BlockTree::is_cutvertex(Vertex v) const {
    return std::binary_search(cutvertices.begin(), cutvertices.end(), v);
}

BlockTree blocks(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> num(n, 0), low(n, 0);
    std::vector<std::pair<Vertex, Vertex>> stack;
    std::set<Vertex> cuts;
    std::vector<std::set<Vertex>> comps;
    int counter = 0;

    std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
        num[v] = low[v] = ++counter;
        int children = 0;
        for (Vertex w : g.neighbors(v)) {
            if (num[w] == 0) {
                ++children;
                stack.emplace_back(v, w);
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= num[v]) {
                    if (parent != -1 || children > 1) cuts.insert(v);
                    std::set<Vertex> comp;
                    while (true) {
                        auto [a, b] = stack.back();
                        stack.pop_back();
                        comp.insert(a);
                        comp.insert(b);
                        if (a == v && b == w) break;
                    }
                    comps.push_back(comp);
                }
            } else if (w != parent && num[w] < num[v]) {
                stack.emplace_back(v, w);
                low[v] = std::min(low[v], num[w]);
            }
        }
    };
    for (Vertex v = 0; v < n; ++v)
        if (num[v] == 0 && g.degree(v) > 0) dfs(v, -1);

    BlockTree bt;
    for (const auto& comp : comps) bt.blocks.emplace_back(comp.begin(), comp.end());
    std::sort(bt.blocks.begin(), bt.blocks.end());
    bt.cutvertices.assign(cuts.begin(), cuts.end());
    for (int b = 0; b < static_cast<int>(bt.blocks.size()); ++b)
        for (int c = 0; c < static_cast<int>(bt.cutvertices.size()); ++c)
            if (std::binary_search(bt.blocks[b].begin(), bt.blocks[b].end(), bt.cutvertices[c]))
                bt.incidence.emplace_back(b, c);
    return bt;
}

bool is_two_connected(const Graph& g) {
    if (g.num_vertices() < 3 || !g.connected()) return false;
    BlockTree bt = blocks(g);
    return bt.cutvertices.empty() && bt.blocks.size() == 1;
}

std::string to_string(TorsoKind k) {
    switch (k) {
        case TorsoKind::ThreeConnected: return "3-connected";
        case TorsoKind::Cycle: return "cycle";
        case TorsoKind::K2: return "K2";
    }
    throw Error("bad torso kind");
}

std::vector<int> TutteTree::links_at(int t) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(links.size()); ++i)
        if (links[i].a == t || links[i].b == t) out.push_back(i);
    return out;
}

std::vector<std::pair<Vertex, Vertex>> TutteTree::adhesion_pairs(int t) const {
    std::set<std::pair<Vertex, Vertex>> out;
    for (int i : links_at(t)) out.insert(links[i].adhesion);
    return {out.begin(), out.end()};
}

namespace {

struct Piece {
    std::vector<Vertex> verts;
    // virtual edge (u,v) owed to the hub part that created it
    std::vector<std::tuple<Vertex, Vertex, int>> virtuals;
};

void normalize(const Graph& g, TutteTree& tt) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<char> alive(tt.parts.size(), 1);

        // splice out K2 hubs of tree-degree 2
        for (int t = 0; t < static_cast<int>(tt.parts.size()) && !changed; ++t) {
            if (!alive[t] || tt.parts[t].kind != TorsoKind::K2) continue;
            std::vector<int> ls = tt.links_at(t);
            if (ls.size() != 2) continue;
            int p = tt.links[ls[0]].a == t ? tt.links[ls[0]].b : tt.links[ls[0]].a;
            int q = tt.links[ls[1]].a == t ? tt.links[ls[1]].b : tt.links[ls[1]].a;
            TutteLink nl{std::min(p, q), std::max(p, q), tt.links[ls[0]].adhesion};
            tt.links.erase(tt.links.begin() + std::max(ls[0], ls[1]));
            tt.links.erase(tt.links.begin() + std::min(ls[0], ls[1]));
            tt.links.push_back(nl);
            alive[t] = 0;
            changed = true;
        }

        // merge adjacent cycle torsos sharing a non-edge adhesion pair
        for (int i = 0; i < static_cast<int>(tt.links.size()) && !changed; ++i) {
            TutteLink l = tt.links[i];
            TuttePart &pa = tt.parts[l.a], &pb = tt.parts[l.b];
            if (pa.kind != TorsoKind::Cycle || pb.kind != TorsoKind::Cycle) continue;
            if (g.has_edge(l.adhesion.first, l.adhesion.second)) continue;
            std::set<Vertex> vs(pa.vertices.begin(), pa.vertices.end());
            vs.insert(pb.vertices.begin(), pb.vertices.end());
            pa.vertices.assign(vs.begin(), vs.end());
            std::set<std::pair<Vertex, Vertex>> ve(pa.virtual_edges.begin(),
                                                   pa.virtual_edges.end());
            ve.insert(pb.virtual_edges.begin(), pb.virtual_edges.end());
            ve.erase(l.adhesion);
            pa.virtual_edges.assign(ve.begin(), ve.end());
            int dead = l.b, kept = l.a;
            tt.links.erase(tt.links.begin() + i);
            for (TutteLink& o : tt.links) {
                if (o.a == dead) o.a = kept;
                if (o.b == dead) o.b = kept;
            }
            alive[dead] = 0;
            changed = true;
        }

        if (changed) {
            std::vector<int> remap(tt.parts.size(), -1);
            std::vector<TuttePart> parts;
            for (int t = 0; t < static_cast<int>(tt.parts.size()); ++t)
                if (alive[t]) {
                    remap[t] = static_cast<int>(parts.size());
                    parts.push_back(std::move(tt.parts[t]));
                }
            tt.parts = std::move(parts);
            for (TutteLink& l : tt.links) {
                l.a = remap[l.a];
                l.b = remap[l.b];
            }
        }
    }
}

}  // namespace

TutteTree tutte_decompose(const Graph& g) {
    if (!is_two_connected(g))
        throw Error("tutte decomposition requires a 2-connected graph on >= 3 vertices");

    TutteTree tt;
    std::deque<Piece> work;
    std::vector<Vertex> all(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) all[v] = v;
    work.push_back({all, {}});

    while (!work.empty()) {
        Piece p = std::move(work.front());
        work.pop_front();
        std::vector<std::pair<Vertex, Vertex>> extra;
        for (auto [u, v, h] : p.virtuals) extra.push_back(norm_pair(u, v));
        LocalAdj adj = local_graph(g, p.verts, extra);

        if (adj.size() > 3 && !local_is_cycle(adj) && !local_is_3connected(adj)) {
            auto sep = separation_pair(adj);
            if (!sep) throw Error("internal: unsplittable non-trichotomy piece");
            auto [x, y] = *sep;
            int hub = static_cast<int>(tt.parts.size());
            TuttePart hp;
            hp.vertices = {x, y};
            hp.kind = TorsoKind::K2;
            if (!g.has_edge(x, y)) hp.virtual_edges.push_back({x, y});
            tt.parts.push_back(hp);

            std::vector<std::vector<Vertex>> comps = local_components(adj, {x, y});
            std::vector<Piece> pieces(comps.size());
            for (size_t i = 0; i < comps.size(); ++i) {
                pieces[i].verts = comps[i];
                pieces[i].verts.push_back(x);
                pieces[i].verts.push_back(y);
                std::sort(pieces[i].verts.begin(), pieces[i].verts.end());
                pieces[i].virtuals.push_back({x, y, hub});
            }
            for (auto [u, v, h] : p.virtuals) {
                if (norm_pair(u, v) == norm_pair(x, y)) {
                    tt.links.push_back({hub, h, norm_pair(x, y)});
                    continue;
                }
                Vertex probe = (u == x || u == y) ? v : u;
                bool placed = false;
                for (size_t i = 0; i < comps.size() && !placed; ++i)
                    if (std::binary_search(comps[i].begin(), comps[i].end(), probe)) {
                        pieces[i].virtuals.push_back({u, v, h});
                        placed = true;
                    }
                if (!placed) throw Error("internal: lost a virtual edge while splitting");
            }
            for (Piece& np : pieces) work.push_back(std::move(np));
            continue;
        }

        int me = static_cast<int>(tt.parts.size());
        TuttePart part;
        part.vertices = p.verts;
        part.kind = classify(adj);
        std::set<std::pair<Vertex, Vertex>> ve;
        for (auto [u, v, h] : p.virtuals) {
            tt.links.push_back({me, h, norm_pair(u, v)});
            if (!g.has_edge(u, v)) ve.insert(norm_pair(u, v));
        }
        part.virtual_edges.assign(ve.begin(), ve.end());
        tt.parts.push_back(part);
    }

    normalize(g, tt);
    return tt;
}

std::pair<Graph, std::vector<Vertex>> torso(const Graph& g, const TutteTree& tt, int t) {
    if (t < 0 || t >= static_cast<int>(tt.parts.size())) throw Error("no such part");
    const std::vector<Vertex>& vs = tt.parts[t].vertices;
    auto [h, map] = g.induced(vs);
    std::map<Vertex, int> inv;
    for (int i = 0; i < static_cast<int>(map.size()); ++i) inv[map[i]] = i;
    for (auto [x, y] : tt.adhesion_pairs(t))
        if (!h.has_edge(inv.at(x), inv.at(y))) h.add_edge(inv.at(x), inv.at(y));
    for (auto [x, y] : tt.parts[t].virtual_edges)
        if (!h.has_edge(inv.at(x), inv.at(y))) h.add_edge(inv.at(x), inv.at(y));
    return {h, map};
}

TutteCheck check_tutte(const Graph& g, const TutteTree& tt) {
    TutteCheck r;
    std::ostringstream detail;
    int np = static_cast<int>(tt.parts.size());

    std::set<Vertex> covered;
    for (const TuttePart& p : tt.parts) covered.insert(p.vertices.begin(), p.vertices.end());
    r.cover_ok = static_cast<int>(covered.size()) == g.num_vertices();
    if (!r.cover_ok) detail << "parts do not cover the vertex set; ";

    r.edges_ok = true;
    for (auto [u, v] : g.edges()) {
        bool found = false;
        for (const TuttePart& p : tt.parts)
            if (std::binary_search(p.vertices.begin(), p.vertices.end(), u) &&
                std::binary_search(p.vertices.begin(), p.vertices.end(), v))
                found = true;
        if (!found) {
            r.edges_ok = false;
            detail << "edge " << u << "-" << v << " lies in no part; ";
            break;
        }
    }

    // tree: connected with np-1 links
    {
        std::vector<std::set<int>> nb(np);
        for (const TutteLink& l : tt.links) {
            nb[l.a].insert(l.b);
            nb[l.b].insert(l.a);
        }
        std::vector<char> seen(np, 0);
        std::vector<int> queue = {0};
        if (np > 0) seen[0] = 1;
        int cnt = np > 0 ? 1 : 0;
        while (!queue.empty()) {
            int x = queue.back();
            queue.pop_back();
            for (int y : nb[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    ++cnt;
                    queue.push_back(y);
                }
        }
        r.tree_ok = cnt == np && static_cast<int>(tt.links.size()) == np - 1;
        if (!r.tree_ok) detail << "links do not form a tree; ";

        r.coherence_ok = true;
        for (Vertex v = 0; v < g.num_vertices() && r.coherence_ok; ++v) {
            std::set<int> holders;
            for (int t = 0; t < np; ++t)
                if (std::binary_search(tt.parts[t].vertices.begin(), tt.parts[t].vertices.end(),
                                       v))
                    holders.insert(t);
            if (holders.empty()) continue;
            std::set<int> reach = {*holders.begin()};
            std::vector<int> q2 = {*holders.begin()};
            while (!q2.empty()) {
                int x = q2.back();
                q2.pop_back();
                for (int y : nb[x])
                    if (holders.count(y) && !reach.count(y)) {
                        reach.insert(y);
                        q2.push_back(y);
                    }
            }
            if (reach != holders) {
                r.coherence_ok = false;
                detail << "parts containing " << v << " are not a subtree; ";
            }
        }
    }

    r.adhesion_ok = true;
    std::map<Vertex, std::set<std::pair<Vertex, Vertex>>> adh_of;
    for (const TutteLink& l : tt.links) {
        std::vector<Vertex> inter;
        std::set_intersection(tt.parts[l.a].vertices.begin(), tt.parts[l.a].vertices.end(),
                              tt.parts[l.b].vertices.begin(), tt.parts[l.b].vertices.end(),
                              std::back_inserter(inter));
        std::vector<Vertex> want = {l.adhesion.first, l.adhesion.second};
        std::sort(want.begin(), want.end());
        if (inter != want || inter.size() > 2) {
            r.adhesion_ok = false;
            detail << "adhesion mismatch on link " << l.a << "-" << l.b << "; ";
        }
        adh_of[l.adhesion.first].insert(l.adhesion);
        adh_of[l.adhesion.second].insert(l.adhesion);
    }
    for (const auto& [v, s] : adh_of)
        r.max_adhesions_per_vertex =
            std::max(r.max_adhesions_per_vertex, static_cast<int>(s.size()));

    r.torso_ok = true;
    for (int t = 0; t < np; ++t) {
        std::vector<std::pair<Vertex, Vertex>> extra = tt.adhesion_pairs(t);
        for (auto p : tt.parts[t].virtual_edges) extra.push_back(p);
        LocalAdj adj = local_graph(g, tt.parts[t].vertices, extra);
        try {
            if (classify(adj) != tt.parts[t].kind) throw Error("kind mismatch");
        } catch (const Error&) {
            r.torso_ok = false;
            detail << "torso of part " << t << " fails the trichotomy; ";
        }
    }

    r.normalized = true;
    for (int t = 0; t < np; ++t)
        if (tt.parts[t].kind == TorsoKind::K2 && tt.links_at(t).size() == 2) {
            r.normalized = false;
            detail << "degree-2 part " << t << " has a K2 torso; ";
        }
    for (const TutteLink& l : tt.links)
        if (tt.parts[l.a].kind == TorsoKind::Cycle && tt.parts[l.b].kind == TorsoKind::Cycle &&
            !g.has_edge(l.adhesion.first, l.adhesion.second)) {
            r.normalized = false;
            detail << "adjacent cycle torsos share the non-edge adhesion " << l.adhesion.first
                   << "-" << l.adhesion.second << "; ";
        }

    r.detail = detail.str();
    return r;
}

PathChoice default_adhesion_paths(const Graph& g, const TutteTree& tt) {
    PathChoice pc;
    std::set<std::pair<Vertex, Vertex>> pairs;
    for (const TutteLink& l : tt.links) pairs.insert(l.adhesion);
    for (const TuttePart& p : tt.parts)
        for (auto e : p.virtual_edges) pairs.insert(e);
    for (auto [x, y] : pairs) {
        std::vector<Vertex> path;
        if (g.has_edge(x, y))
            path = {x, y};
        else
            path = g.shortest_path(x, y);
        if (path.empty()) throw Error("adhesion pair is disconnected in the host graph");
        pc[{x, y}] = path;
        pc[{y, x}] = std::vector<Vertex>(path.rbegin(), path.rend());
    }
    return pc;
}

std::vector<ClosedWalk> lift_generators(const Graph& g, const TutteTree& tt,
                                        const std::vector<std::vector<ClosedWalk>>& per_part,
                                        const PathChoice& paths) {
    if (per_part.size() != tt.parts.size())
        throw Error("per-part generator list does not match the part count");
    std::vector<ClosedWalk> out;
    for (size_t t = 0; t < per_part.size(); ++t) {
        for (const ClosedWalk& w : per_part[t]) {
            if (w.is_trivial()) continue;
            std::vector<Vertex> seq;
            for (int i = 0; i < w.length(); ++i) {
                Dart d = w.dart(i);
                if (g.has_edge(d.tail, d.head)) {
                    seq.push_back(d.tail);
                    continue;
                }
                auto it = paths.find({d.tail, d.head});
                if (it == paths.end())
                    throw Error("no path chosen for the virtual edge " +
                                std::to_string(d.tail) + "-" + std::to_string(d.head));
                seq.insert(seq.end(), it->second.begin(), it->second.end() - 1);
            }
            seq.push_back(seq.front());
            out.push_back(ClosedWalk::from_closed_sequence(seq));
        }
    }
    return out;
}

std::vector<ClosedWalk> lift_generators(const Graph& g, const TutteTree& tt,
                                        const std::vector<std::vector<ClosedWalk>>& per_part) {
    return lift_generators(g, tt, per_part, default_adhesion_paths(g, tt));
}

std::vector<std::vector<ClosedWalk>> project_generators(const Graph& g, const TutteTree& tt,
                                                        const std::vector<ClosedWalk>& global_set) {
    std::vector<std::vector<ClosedWalk>> out(tt.parts.size());
    for (size_t t = 0; t < tt.parts.size(); ++t) {
        const std::vector<Vertex>& vs = tt.parts[t].vertices;
        std::set<Vertex> inside(vs.begin(), vs.end());
        std::set<std::pair<Vertex, Vertex>> adh;
        for (auto p : tt.adhesion_pairs(t)) adh.insert(p);
        for (const ClosedWalk& w : global_set) {
            int start = -1;
            for (int i = 0; i < w.length(); ++i)
                if (inside.count(w.vertex(i))) {
                    start = i;
                    break;
                }
            if (start < 0) continue;
            std::vector<Vertex> seq;
            for (int i = start; i < start + w.length(); ++i) {
                Vertex v = w.vertex(i);
                if (!inside.count(v)) continue;
                if (!seq.empty()) {
                    Vertex a = seq.back();
                    if (a == v && w.vertex(i - 1) != v) continue;  // collapsed excursion
                    if (a != v && !g.has_edge(a, v) && !adh.count(norm_pair(a, v)))
                        throw Error("projection left the torso through a non-adhesion pair");
                }
                if (seq.empty() || seq.back() != v) seq.push_back(v);
            }
            // close up: the wrap-around may also be an excursion
            if (seq.size() >= 2 && seq.front() == seq.back()) seq.pop_back();
            if (seq.size() < 2) continue;
            {
                Vertex a = seq.back(), b = seq.front();
                if (!g.has_edge(a, b) && !adh.count(norm_pair(a, b)))
                    throw Error("projection left the torso through a non-adhesion pair");
            }
            seq.push_back(seq.front());
            ClosedWalk proj = cyclic_reduce(ClosedWalk::from_closed_sequence(seq));
            if (!proj.is_trivial()) out[t].push_back(proj);
        }
    }
    return out;
}

namespace {

void check_permutation(const Graph& g, const std::vector<Vertex>& p) {
    int n = g.num_vertices();
    if (static_cast<int>(p.size()) != n) throw Error("permutation has the wrong size");
    std::vector<char> hit(n, 0);
    for (Vertex v : p) {
        if (v < 0 || v >= n || hit[v]) throw Error("not a permutation");
        hit[v] = 1;
    }
    for (auto [u, v] : g.edges())
        if (!g.has_edge(p[u], p[v])) throw Error("permutation does not preserve adjacency");
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

DegreeSequence degree_sequence(const Graph& g, const std::vector<std::vector<Vertex>>& group) {
    for (const auto& p : group) check_permutation(g, p);
    UnionFind uf(g.num_vertices());
    for (const auto& p : group)
        for (Vertex v = 0; v < g.num_vertices(); ++v) uf.unite(v, p[v]);
    std::map<int, Vertex> rep;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (!rep.count(uf.find(v))) rep[uf.find(v)] = v;
    DegreeSequence ds;
    for (const auto& [_, v] : rep) ds.push_back(g.degree(v));
    std::sort(ds.rbegin(), ds.rend());
    return ds;
}

Ordering compare(const DegreeSequence& a, const DegreeSequence& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] < b[i]) return Ordering::Less;
        if (a[i] > b[i]) return Ordering::Greater;
    }
    if (a.size() < b.size()) return Ordering::Less;
    if (a.size() > b.size()) return Ordering::Greater;
    return Ordering::Equal;
}

namespace {

std::vector<std::vector<Vertex>> enumerate_group(const Graph& g,
                                                 const std::vector<std::vector<Vertex>>& gens,
                                                 size_t cap = 200000) {
    int n = g.num_vertices();
    std::vector<Vertex> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    std::set<std::vector<Vertex>> seen = {id};
    std::deque<std::vector<Vertex>> queue = {id};
    while (!queue.empty()) {
        std::vector<Vertex> a = std::move(queue.front());
        queue.pop_front();
        for (const auto& p : gens) {
            std::vector<Vertex> c(n);
            for (int i = 0; i < n; ++i) c[i] = p[a[i]];
            if (seen.insert(c).second) {
                if (seen.size() > cap) throw Error("group enumeration exceeded the cap");
                queue.push_back(c);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

std::set<Vertex> apply_set(const std::vector<Vertex>& perm, const std::set<Vertex>& s) {
    std::set<Vertex> out;
    for (Vertex v : s) out.insert(perm[v]);
    return out;
}

// component ids of g minus `removed`; removed and isolated get -1
std::vector<int> comp_ids(const Graph& g, const std::set<Vertex>& removed) {
    std::vector<int> id(g.num_vertices(), -1);
    int next = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (removed.count(v) || id[v] != -1) continue;
        std::vector<Vertex> queue = {v};
        id[v] = next;
        while (!queue.empty()) {
            Vertex x = queue.back();
            queue.pop_back();
            for (Vertex y : g.neighbors(x))
                if (!removed.count(y) && id[y] == -1) {
                    id[y] = next;
                    queue.push_back(y);
                }
        }
        ++next;
    }
    return id;
}

bool set_connected(const Graph& g, const std::set<Vertex>& verts) {
    if (verts.empty()) return false;
    std::set<Vertex> seen;
    std::vector<Vertex> queue = {*verts.begin()};
    seen.insert(*verts.begin());
    while (!queue.empty()) {
        Vertex x = queue.back();
        queue.pop_back();
        for (Vertex y : g.neighbors(x))
            if (verts.count(y) && !seen.count(y)) {
                seen.insert(y);
                queue.push_back(y);
            }
    }
    return seen == verts;
}

// H is dissected if removing some image of S leaves >= 2 components of H
bool dissected(const Graph& g, const std::set<Vertex>& h,
               const std::vector<std::set<Vertex>>& images) {
    for (const auto& img : images) {
        std::set<Vertex> rest;
        for (Vertex v : h)
            if (!img.count(v)) rest.insert(v);
        if (rest.empty() || rest.size() == h.size()) continue;
        if (!set_connected(g, rest)) return true;
    }
    return false;
}

}  // namespace

std::vector<SplitPiece> split_along(const Graph& g, const std::vector<std::vector<Vertex>>& group,
                                    const std::vector<Vertex>& s) {
    for (const auto& p : group) check_permutation(g, p);
    std::set<Vertex> sset(s.begin(), s.end());
    if (sset.empty()) throw Error("split set is empty");
    for (Vertex v : sset)
        if (v < 0 || v >= g.num_vertices()) throw Error("split set vertex out of range");

    std::vector<int> cid = comp_ids(g, sset);
    int ncomp = *std::max_element(cid.begin(), cid.end()) + 1;
    if (ncomp < 2) throw Error("split condition (i) fails: G - S is connected");

    // orbit of S under the group (closure under the generators)
    std::vector<std::set<Vertex>> images;
    {
        std::set<std::set<Vertex>> seen = {sset};
        std::deque<std::set<Vertex>> queue = {sset};
        while (!queue.empty()) {
            std::set<Vertex> cur = std::move(queue.front());
            queue.pop_front();
            for (const auto& p : group) {
                std::set<Vertex> img = apply_set(p, cur);
                if (seen.insert(img).second) queue.push_back(img);
            }
        }
        images.assign(seen.begin(), seen.end());
    }

    for (const auto& img : images) {
        std::set<int> met;
        for (Vertex v : img)
            if (!sset.count(v) && cid[v] >= 0) met.insert(cid[v]);
        if (met.size() > 1)
            throw Error("split condition (ii) fails: an image of S meets several components");
    }
    for (Vertex v : sset) {
        bool outside = false;
        for (Vertex w : g.neighbors(v))
            if (!sset.count(w)) outside = true;
        if (!outside)
            throw Error("split condition (iii) fails: a vertex of S has all neighbours in S");
    }

    // split down to undissected connected pieces, then grow each to maximality
    std::vector<std::set<Vertex>> pieces;
    {
        std::set<Vertex> all;
        for (Vertex v = 0; v < g.num_vertices(); ++v) all.insert(v);
        std::deque<std::set<Vertex>> queue = {all};
        while (!queue.empty()) {
            std::set<Vertex> h = std::move(queue.front());
            queue.pop_front();
            const std::set<Vertex>* cutter = nullptr;
            for (const auto& img : images) {
                std::set<Vertex> rest;
                for (Vertex v : h)
                    if (!img.count(v)) rest.insert(v);
                if (!rest.empty() && rest.size() != h.size() && !set_connected(g, rest)) {
                    cutter = &img;
                    break;
                }
            }
            if (!cutter) {
                if (set_connected(g, h)) pieces.push_back(h);
                continue;
            }
            std::set<Vertex> cut;
            for (Vertex v : h)
                if (cutter->count(v)) cut.insert(v);
            std::set<Vertex> rest;
            for (Vertex v : h)
                if (!cut.count(v)) rest.insert(v);
            std::map<Vertex, int> sub;
            {
                int next = 0;
                std::set<Vertex> seen;
                for (Vertex v : rest) {
                    if (seen.count(v)) continue;
                    std::vector<Vertex> q2 = {v};
                    seen.insert(v);
                    while (!q2.empty()) {
                        Vertex x = q2.back();
                        q2.pop_back();
                        sub[x] = next;
                        for (Vertex y : g.neighbors(x))
                            if (rest.count(y) && !seen.count(y)) {
                                seen.insert(y);
                                q2.push_back(y);
                            }
                    }
                    ++next;
                }
                for (int c = 0; c < next; ++c) {
                    std::set<Vertex> np;
                    for (const auto& [v, i] : sub)
                        if (i == c) np.insert(v);
                    for (Vertex v : cut) {
                        bool touches = false;
                        for (Vertex w : g.neighbors(v))
                            if (np.count(w)) touches = true;
                        if (touches) np.insert(v);
                    }
                    queue.push_back(np);
                }
            }
        }
        // grow to maximality, deterministically
        for (auto& h : pieces) {
            bool grew = true;
            while (grew) {
                grew = false;
                std::set<Vertex> frontier;
                for (Vertex v : h)
                    for (Vertex w : g.neighbors(v))
                        if (!h.count(w)) frontier.insert(w);
                for (Vertex w : frontier) {
                    std::set<Vertex> trial = h;
                    trial.insert(w);
                    if (!dissected(g, trial, images)) {
                        h = trial;
                        grew = true;
                        break;
                    }
                }
            }
        }
        std::set<std::set<Vertex>> dedup(pieces.begin(), pieces.end());
        pieces.assign(dedup.begin(), dedup.end());
    }

    DegreeSequence whole = degree_sequence(g, group);
    std::vector<std::vector<Vertex>> elements = enumerate_group(g, group);

    std::vector<SplitPiece> out;
    for (const auto& h : pieces) {
        SplitPiece sp;
        sp.vertices.assign(h.begin(), h.end());
        auto [hg, map] = g.induced(sp.vertices);
        sp.graph = hg;
        std::map<Vertex, int> inv;
        for (int i = 0; i < static_cast<int>(map.size()); ++i) inv[map[i]] = i;
        for (const auto& perm : elements) {
            if (apply_set(perm, h) != h) continue;
            std::vector<Vertex> restricted(map.size());
            bool identity = true;
            for (size_t i = 0; i < map.size(); ++i) {
                restricted[i] = inv.at(perm[map[i]]);
                if (restricted[i] != static_cast<int>(i)) identity = false;
            }
            if (!identity) sp.stabilizer.push_back(restricted);
        }
        sp.sequence = degree_sequence(sp.graph, sp.stabilizer);
        if (compare(sp.sequence, whole) != Ordering::Less)
            throw Error("split piece does not have a strictly smaller degree sequence");
        out.push_back(std::move(sp));
    }
    return out;
}

std::string serialize_tutte(const Graph& g, const TutteTree& tt) {
    std::ostringstream os;
    os << "pw-tutte v1\n";
    std::vector<char> seen(tt.parts.size(), 0);
    std::function<void(int, int, int)> emit = [&](int t, int via, int depth) {
        seen[t] = 1;
        for (int i = 0; i < depth; ++i) os << "  ";
        os << "part " << t << " [" << to_string(tt.parts[t].kind) << "]";
        if (via >= 0) {
            const TutteLink& l = tt.links[via];
            os << " adhesion {" << g.label_of(l.adhesion.first) << " "
               << g.label_of(l.adhesion.second) << "}";
        }
        os << " vertices:";
        for (Vertex v : tt.parts[t].vertices) os << " " << g.label_of(v);
        if (!tt.parts[t].virtual_edges.empty()) {
            os << " virtual:";
            for (auto [x, y] : tt.parts[t].virtual_edges)
                os << " " << g.label_of(x) << "-" << g.label_of(y);
        }
        os << "\n";
        for (int i : tt.links_at(t)) {
            int other = tt.links[i].a == t ? tt.links[i].b : tt.links[i].a;
            if (!seen[other]) emit(other, i, depth + 1);
        }
    };
    for (int t = 0; t < static_cast<int>(tt.parts.size()); ++t)
        if (!seen[t]) emit(t, -1, 0);
    return os.str();
}

}  // namespace pw
