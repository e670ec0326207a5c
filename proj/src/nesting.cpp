#include "pw/nesting.hpp"

#include <algorithm>

namespace pw {

namespace {

/// Search for a crossing witness with W traversed as given.
std::optional<CrossingWitness> crossing_oriented(const PlanarMap& m, const ClosedWalk& r,
                                                 const ClosedWalk& w, bool w_reversed) {
    int lr = r.length(), lw = w.length();
    if (lr == 0 || lw == 0) return std::nullopt;
    int shared_cap = 2 * std::min(lr, lw);  // powers <= 2

    for (int p = 0; p < lr; ++p) {
        for (int q = 0; q < lw; ++q) {
            if (r.vertex(p) != w.vertex(q)) continue;
            for (int len = 1; len <= shared_cap; ++len) {
                // shared subwalk x1..x_{l-1} = r[p..p+len-1]; l = len + 1
                if (len > 1 && r.vertex(p + len - 1) != w.vertex(q + len - 1)) break;

                Vertex x1 = r.vertex(p);
                Vertex x2 = len > 1 ? r.vertex(p + 1) : r.vertex(p + 1);
                Vertex xlm1 = r.vertex(p + len - 1);
                Vertex xlm2 = len > 1 ? r.vertex(p + len - 2) : r.vertex(p - 1);
                Vertex x0 = r.vertex(p - 1);
                Vertex xl = r.vertex(p + len);
                Vertex y0 = w.vertex(q - 1);
                Vertex yl = w.vertex(q + len);

                // attachment edges must be distinct from the shared-subwalk
                // edges at both joints
                if (len == 1) {
                    xlm2 = x0;  // the joint vertex is x1 itself
                    x2 = xl;
                }
                bool distinct1 = x0 != x2 && x0 != y0 && x2 != y0;
                bool distinct2 = xlm2 != xl && xlm2 != yl && xl != yl;
                if (distinct1 && distinct2) {
                    bool c1i = m.spin_contains(x1, x0, x2, y0);
                    bool c2i = m.spin_contains(xlm1, xlm2, yl, xl);
                    bool c1ii = m.spin_contains(x1, y0, x2, x0);
                    bool c2ii = m.spin_contains(xlm1, xlm2, xl, yl);
                    bool hit_i = c1i && c2i;
                    bool hit_ii = c1ii && c2ii;
                    if (hit_i || hit_ii) {
                        CrossingWitness cw;
                        for (int k = 0; k < len; ++k) cw.shared.push_back(r.vertex(p + k));
                        cw.case_i = hit_i;
                        cw.r_in = {x0, x1};
                        cw.r_out = {xlm1, xl};
                        cw.w_in = {y0, x1};
                        cw.w_out = {xlm1, yl};
                        cw.w_reversed = w_reversed;
                        return cw;
                    }
                }
                // stop extending once W departs from R
                if (r.vertex(p + len) != w.vertex(q + len)) break;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<CrossingWitness> crossing(const PlanarMap& m, const ClosedWalk& r,
                                        const ClosedWalk& w) {
    if (!r.valid_in(m.graph()) || !w.valid_in(m.graph()))
        throw Error("crossing: walk not in the map's graph");
    if (auto cw = crossing_oriented(m, r, w, false)) return cw;
    return crossing_oriented(m, r, w.inverse(), true);
}

std::vector<DPath> d_paths(const ClosedWalk& c, const ClosedWalk& d) {
    std::vector<DPath> out;
    int l = c.length();
    if (l == 0 || d.length() == 0) return out;
    std::set<Vertex> dv = d.vertex_set();
    std::set<std::pair<Vertex, Vertex>> de = d.edge_set();

    std::vector<int> hits;
    for (int i = 0; i < l; ++i)
        if (dv.count(c.vertex(i))) hits.push_back(i);
    if (hits.empty()) return out;

    int h = static_cast<int>(hits.size());
    for (int k = 0; k < h; ++k) {
        int a = hits[k];
        int b = k + 1 < h ? hits[k + 1] : hits[0] + l;
        if (b - a == 1) {
            Vertex u = c.vertex(a), v = c.vertex(b);
            auto e = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
            if (de.count(e)) continue;  // running along D, not a D-path
        }
        DPath p;
        for (int i = a; i <= b; ++i) p.path.push_back(c.vertex(i));
        p.start_pos = a;
        p.end_pos = b;
        out.push_back(std::move(p));
    }
    return out;
}

int n_paths(const ClosedWalk& c, const ClosedWalk& d) {
    return static_cast<int>(d_paths(c, d).size());
}

namespace {

/// True iff c touches at most one side of the partition rd.
bool one_sided(const RegionPartition& rd, const ClosedWalk& c) {
    bool side[2] = {false, false};
    for (Vertex v : c.vertex_set()) {
        if (rd.on_cycle_vertices.count(v)) continue;
        side[rd.side_vertices[1].count(v) ? 1 : 0] = true;
    }
    for (const auto& e : c.edge_set()) {
        if (rd.on_cycle_edges.count(e)) continue;
        side[rd.side_edges[1].count(e) ? 1 : 0] = true;
    }
    return !(side[0] && side[1]);
}

}  // namespace

bool nested_cycles(const PlanarMap& m, const ClosedWalk& c, const ClosedWalk& d) {
    if (!c.is_cycle() || !d.is_cycle()) throw Error("nested_cycles: inputs must be cycles");
    RegionPartition rc = cycle_regions(m, c);
    RegionPartition rd = cycle_regions(m, d);
    return one_sided(rd, c) && one_sided(rc, d);
}

long mu_serial(const PlanarMap& m, const std::vector<WalkClass>& e, const ClosedWalk& c) {
    RegionPartition rc = cycle_regions(m, c);
    long count = 0;
    for (const WalkClass& x : e) {
        ClosedWalk xc = x.representative();
        if (!one_sided(rc, xc)) {
            ++count;
            continue;
        }
        RegionPartition rx = cycle_regions(m, xc);
        if (!one_sided(rx, c)) ++count;
    }
    return count;
}

long mu(const PlanarMap& m, const std::vector<WalkClass>& e, const ClosedWalk& c) {
    RegionPartition rc = cycle_regions(m, c);
    long count = 0;
    int n = static_cast<int>(e.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : count)
    for (int i = 0; i < n; ++i) {
        ClosedWalk xc = e[i].representative();
        bool crossing_pair = false;
        if (!one_sided(rc, xc)) {
            crossing_pair = true;
        } else {
            RegionPartition rx = cycle_regions(m, xc);
            crossing_pair = !one_sided(rx, c);
        }
        if (crossing_pair) ++count;
    }
    return count;
}

long mu_set(const PlanarMap& m, const std::vector<WalkClass>& e,
            const std::vector<WalkClass>& f) {
    long best = -1;
    for (const WalkClass& c : f) {
        long v = mu(m, e, c.representative());
        if (best < 0 || v < best) best = v;
    }
    return best;
}

const RegionPartition& NestedOracle::regions(const WalkClass& c) {
    auto it = cache_.find(c.key());
    if (it != cache_.end()) return it->second;
    RegionPartition rp = cycle_regions(*m_, c.representative());
    return cache_.emplace(c.key(), std::move(rp)).first->second;
}

bool NestedOracle::nested(const WalkClass& c, const WalkClass& d) {
    return one_sided(regions(d), c.representative()) &&
           one_sided(regions(c), d.representative());
}

long NestedOracle::mu(const std::vector<WalkClass>& e, const WalkClass& c) {
    long count = 0;
    for (const WalkClass& x : e)
        if (!nested(x, c)) ++count;
    return count;
}

}  // namespace pw
