#include "pw/uncrossing.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pw/walk_algebra.hpp"

namespace pw {

namespace {

int position_of(const ClosedWalk& w, Vertex v) {
    for (int i = 0; i < w.length(); ++i)
        if (w.vertex(i) == v) return i;
    return -1;
}

std::vector<Vertex> arc(const ClosedWalk& w, int from, int to) {
    if (to < from) to += w.length();
    std::vector<Vertex> out;
    for (int i = from; i <= to; ++i) out.push_back(w.vertex(i));
    return out;
}

}  // namespace

BridgeAnalysis bridge_analysis(const PlanarMap& m, const ClosedWalk& w1, const ClosedWalk& w2) {
    if (!w1.is_cycle() || !w2.is_cycle())
        throw Error("bridge_analysis: inputs must be cycles");
    std::set<Vertex> shared;
    for (Vertex v : w1.vertex_set())
        if (w2.vertex_set().count(v)) shared.insert(v);
    if (shared.size() < 2) throw Error("bridge_analysis: walks share fewer than 2 vertices");

    std::vector<DPath> dps = d_paths(w1, w2);
    if (dps.empty()) throw Error("bridge_analysis: no qualifying subwalk (identical cycles?)");

    const DPath* best = nullptr;
    for (const DPath& p : dps)
        if (!best || p.length() < best->length() ||
            (p.length() == best->length() && p.path < best->path))
            best = &p;

    BridgeAnalysis ba;
    ba.p1 = best->path;
    Vertex v = ba.p1.front(), w = ba.p1.back();
    if (v == w) throw Error("bridge_analysis: walks share fewer than 2 vertices");

    int pv = position_of(w2, v), pw = position_of(w2, w);
    std::vector<Vertex> arc1 = arc(w2, pv, pw);
    std::vector<Vertex> arc2 = arc(w2, pw, pv);
    std::reverse(arc2.begin(), arc2.end());  // both run v -> w now
    if (arc2.size() < arc1.size() || (arc2.size() == arc1.size() && arc2 < arc1))
        ba.p2 = arc2;
    else
        ba.p2 = arc1;

    int l1 = static_cast<int>(ba.p1.size()) - 1;
    int l2 = static_cast<int>(ba.p2.size()) - 1;

    if (l1 == l2) {
        bool interior_off = true;
        for (size_t i = 1; i + 1 < ba.p2.size(); ++i)
            if (w1.vertex_set().count(ba.p2[i])) interior_off = false;
        if (interior_off) {
            ba.outcome = 1;
            return ba;
        }
    }
    if (l1 >= l2) {
        // (ii): P1 P2^-1 is a rotation of W1
        std::vector<Vertex> seq = ba.p1;
        for (int i = static_cast<int>(ba.p2.size()) - 2; i >= 0; --i) seq.push_back(ba.p2[i]);
        ClosedWalk closed1 = ClosedWalk::from_closed_sequence(seq);
        WalkClass k1(cyclic_reduce(closed1));
        if (k1 == WalkClass(w1) || k1 == WalkClass(w1.inverse())) {
            ba.outcome = 2;
            return ba;
        }
        // (iii): (W1 - P1) P2 is a rotation of W2 or W2^-1
        std::vector<Vertex> comp = arc(w1, position_of(w1, w), position_of(w1, v));
        for (size_t i = 1; i < ba.p2.size(); ++i) comp.push_back(ba.p2[i]);
        ClosedWalk closed2 = ClosedWalk::from_closed_sequence(comp);
        WalkClass k2(cyclic_reduce(closed2));
        if (k2 == WalkClass(w2) || k2 == WalkClass(w2.inverse())) {
            ba.outcome = 3;
            return ba;
        }
    }
    throw Error("bridge_analysis: trichotomy failed (inputs not shortcut-free?)");
}

std::vector<ClosedWalk> region_boundaries(const PlanarMap& m, const std::set<int>& faces) {
    // boundary darts: face on the inside, reverse face outside
    std::set<std::pair<Vertex, Vertex>> boundary;
    for (int f : faces)
        for (const Dart& d : m.faces()[f].boundary)
            if (!faces.count(m.face_of(d.reversed()))) boundary.insert({d.tail, d.head});

    std::vector<ClosedWalk> out;
    std::set<std::pair<Vertex, Vertex>> used;
    for (const auto& start : boundary) {
        if (used.count(start)) continue;
        std::vector<Vertex> seq;
        std::pair<Vertex, Vertex> cur = start;
        do {
            used.insert(cur);
            seq.push_back(cur.first);
            Vertex v = cur.second;
            Vertex w = m.spin_next(v, cur.first);
            // rotate past darts interior to the region
            while (!boundary.count({v, w})) w = m.spin_next(v, w);
            cur = {v, w};
        } while (cur != start);
        seq.push_back(seq[0]);
        out.push_back(ClosedWalk::from_closed_sequence(seq));
    }
    std::sort(out.begin(), out.end(),
              [](const ClosedWalk& a, const ClosedWalk& b) {
                  return a.canonical_key() < b.canonical_key();
              });
    return out;
}

namespace {

/// True iff one side of the cycle p+q (P forward, Q backward) is empty of
/// all C/D material.
bool empty_side(const PlanarMap& m, const std::vector<Vertex>& p, const std::vector<Vertex>& q,
                const ClosedWalk& c, const ClosedWalk& d) {
    std::vector<Vertex> seq = p;
    for (int i = static_cast<int>(q.size()) - 2; i >= 0; --i) seq.push_back(q[i]);
    ClosedWalk cyc = cyclic_reduce(ClosedWalk::from_closed_sequence(seq));
    if (!cyc.is_cycle()) return false;
    RegionPartition rp = cycle_regions(m, cyc);
    std::set<Vertex> mat_v;
    for (Vertex v : c.vertex_set()) mat_v.insert(v);
    for (Vertex v : d.vertex_set()) mat_v.insert(v);
    std::set<std::pair<Vertex, Vertex>> mat_e = c.edge_set();
    for (const auto& e : d.edge_set()) mat_e.insert(e);
    for (int side = 0; side < 2; ++side) {
        bool clean = true;
        for (Vertex v : rp.side_vertices[side])
            if (mat_v.count(v)) clean = false;
        for (const auto& e : rp.side_edges[side])
            if (mat_e.count(e)) clean = false;
        if (clean) return true;
    }
    return false;
}

/// Match the D-segments (edges off `base`) of a tilde boundary against the
/// replaced base-paths; base = C when scanning C~, etc.
void collect_pairs(const PlanarMap& m, const ClosedWalk& tilde, const ClosedWalk& c,
                   const ClosedWalk& d, bool tilde_of_c,
                   std::vector<std::pair<DPath, DPath>>& pairs) {
    const ClosedWalk& base = tilde_of_c ? c : d;       // walk the tilde replaces paths of
    const ClosedWalk& other = tilde_of_c ? d : c;      // walk the segments come from
    std::set<std::pair<Vertex, Vertex>> base_edges = base.edge_set();
    std::set<Vertex> tilde_verts = tilde.vertex_set();
    std::set<std::pair<Vertex, Vertex>> tilde_edges = tilde.edge_set();

    int l = tilde.length();
    std::vector<bool> off(l);
    bool any_on = false;
    for (int i = 0; i < l; ++i) {
        Dart dd = tilde.dart(i);
        auto e = dd.tail < dd.head ? std::make_pair(dd.tail, dd.head)
                                   : std::make_pair(dd.head, dd.tail);
        off[i] = !base_edges.count(e);
        any_on = any_on || !off[i];
    }
    if (!any_on) return;  // tilde entirely on the other walk; no segments

    std::vector<DPath> base_paths = d_paths(base, other);
    std::vector<DPath> other_paths = d_paths(other, base);

    for (int i = 0; i < l; ++i) {
        if (!off[i] || off[(i - 1 + l) % l]) continue;  // segment start only
        int j = i;
        while (off[(j + 1) % l]) j = j + 1;
        std::vector<Vertex> seg;
        for (int k = i; k <= j + 1; ++k) seg.push_back(tilde.vertex(k));
        Vertex sv = seg.front(), sw = seg.back();

        // the segment is a path of `other`; find it in other's D-path list
        const DPath* q = nullptr;
        std::vector<Vertex> rseg(seg.rbegin(), seg.rend());
        for (const DPath& cand : other_paths)
            if (cand.path == seg || cand.path == rseg) q = &cand;
        if (!q) continue;  // segment spans several paths; pairs come from base_paths side

        // the replaced path of `base`: same end vertices, absent from tilde
        const DPath* p = nullptr;
        for (const DPath& cand : base_paths) {
            if (!((cand.path.front() == sv && cand.path.back() == sw) ||
                  (cand.path.front() == sw && cand.path.back() == sv)))
                continue;
            bool absent;
            if (cand.path.size() > 2) {
                absent = true;
                for (size_t k = 1; k + 1 < cand.path.size(); ++k)
                    if (tilde_verts.count(cand.path[k])) absent = false;
            } else {
                auto e = cand.path[0] < cand.path[1]
                             ? std::make_pair(cand.path[0], cand.path[1])
                             : std::make_pair(cand.path[1], cand.path[0]);
                absent = !tilde_edges.count(e);
            }
            if (!absent) continue;
            if (p && !empty_side(m, cand.path, q->path, c, d)) continue;
            p = &cand;
        }
        if (!p) continue;

        DPath pp = tilde_of_c ? *p : *q;
        DPath qq = tilde_of_c ? *q : *p;
        bool dup = false;
        for (const auto& pr : pairs)
            if (pr.first.path == pp.path && pr.second.path == qq.path) dup = true;
        if (!dup) pairs.emplace_back(pp, qq);
    }
}

struct Candidate {
    ClosedWalk t1, t2;
    int choice;
    bool valid = false;
    // whether both boundaries are shortcut-free; guaranteed when the inputs
    // are indecomposable, and preferred otherwise
    bool clean = false;
};

Candidate try_pairing(const PlanarMap& m, const RegionPartition& rc, const RegionPartition& rd,
                      const ClosedWalk& c, const ClosedWalk& d, int choice) {
    Candidate cand;
    cand.choice = choice;
    std::set<int> cls1, cls2;
    for (int f = 0; f < m.num_faces(); ++f) {
        int a = rc.side_faces[1].count(f) ? 1 : 0;
        int b = rd.side_faces[1].count(f) ? 1 : 0;
        int bb = choice == 0 ? b : 1 - b;
        if (a == 0 && bb == 0) cls1.insert(f);
        if (a == 1 && bb == 1) cls2.insert(f);
    }
    if (cls1.empty() || cls2.empty()) return cand;
    std::vector<ClosedWalk> b1 = region_boundaries(m, cls1);
    std::vector<ClosedWalk> b2 = region_boundaries(m, cls2);
    if (b1.size() != 1 || b2.size() != 1) return cand;
    ClosedWalk t1 = b1[0], t2 = b2[0];
    if (!t1.is_cycle() || !t2.is_cycle()) return cand;

    std::multiset<int> want{c.length(), d.length()}, got{t1.length(), t2.length()};
    if (want != got) return cand;
    if (!nested_cycles(m, t1, t2)) return cand;
    cand.clean = !find_shortcut(m.graph(), t1) && !find_shortcut(m.graph(), t2);

    // assign the |C|-length boundary to C~; equal lengths: lex-least first
    if (t1.length() != c.length() ||
        (c.length() == d.length() && t2.canonical_key() < t1.canonical_key()))
        std::swap(t1, t2);
    cand.t1 = WalkClass(t1).representative();
    cand.t2 = WalkClass(t2).representative();
    cand.valid = true;
    return cand;
}

}  // namespace

UncrossResult uncross(const PlanarMap& m, const ClosedWalk& c, const ClosedWalk& d) {
    if (!c.is_cycle() || !d.is_cycle()) throw Error("uncross: inputs must be cycles");
    if (nested_cycles(m, c, d)) throw Error("uncross: inputs already nested");

    RegionPartition rc = cycle_regions(m, c);
    RegionPartition rd = cycle_regions(m, d);

    Candidate a = try_pairing(m, rc, rd, c, d, 0);
    Candidate b = try_pairing(m, rc, rd, c, d, 1);
    const Candidate* pick = nullptr;
    if (a.valid && b.valid && a.clean != b.clean) {
        pick = a.clean ? &a : &b;
    } else if (a.valid && b.valid) {
        auto ka = std::make_pair(a.t1.canonical_key(), a.t2.canonical_key());
        auto kb = std::make_pair(b.t1.canonical_key(), b.t2.canonical_key());
        pick = ka <= kb ? &a : &b;
    } else if (a.valid) {
        pick = &a;
    } else if (b.valid) {
        pick = &b;
    } else {
        throw Error("uncross: no valid region pairing found");
    }

    UncrossResult r;
    r.c_tilde = pick->t1;
    r.d_tilde = pick->t2;
    r.face_choice = pick->choice;
    collect_pairs(m, r.c_tilde, c, d, true, r.pairing);
    collect_pairs(m, r.d_tilde, c, d, false, r.pairing);
    std::sort(r.pairing.begin(), r.pairing.end(),
              [](const auto& x, const auto& y) { return x.first.path < y.first.path; });
    return r;
}

namespace {

/// Find `seg` (inclusive endpoints) as a contiguous cyclic subpath of w;
/// returns start position or -1.
int find_segment(const ClosedWalk& w, const std::vector<Vertex>& seg) {
    int l = w.length();
    int s = static_cast<int>(seg.size()) - 1;
    if (s < 1 || s > l - 1) return -1;
    for (int pos = 0; pos < l; ++pos) {
        bool ok = true;
        for (int k = 0; k <= s && ok; ++k)
            if (w.vertex(pos + k) != seg[k]) ok = false;
        if (ok) return pos;
    }
    return -1;
}

using Replacement = std::pair<std::vector<Vertex>, std::vector<Vertex>>;  // (segment, insert)

bool build_transfer(const std::vector<Replacement>& repls, const ClosedWalk& start,
                    const ClosedWalk& target, Derivation& d) {
    d = Derivation{};
    d.sources.push_back(start);
    d.target = target;
    d.steps.push_back(DerivationStep::sum_with(0, 0));
    ClosedWalk state = start;
    state = cyclic_reduce_recording(state, d.steps);

    std::vector<bool> used(repls.size(), false);
    WalkClass goal(target);
    size_t guard = repls.size() + 2;
    while (WalkClass(state) != goal && guard-- > 0) {
        bool progressed = false;
        for (size_t i = 0; i < repls.size() && !progressed; ++i) {
            if (used[i]) continue;
            const std::vector<Vertex>& p = repls[i].second;
            const std::vector<Vertex>& q = repls[i].first;
            std::vector<Vertex> qr(q.rbegin(), q.rend());
            for (int dir = 0; dir < 2 && !progressed; ++dir) {
                const std::vector<Vertex>& seg = dir == 0 ? q : qr;
                int pos = find_segment(state, seg);
                if (pos < 0) continue;
                if (pos != 0) {
                    d.steps.push_back(DerivationStep::rotate(pos));
                    state = apply_step(state, d.steps.back(), d.sources);
                }
                // source T replaces the leading segment by the paired path:
                // T = P' Q'^-1 based at the segment start, where P' runs in
                // the same direction as the replaced arc should
                std::vector<Vertex> pa = p;
                if (pa.front() != seg.front()) std::reverse(pa.begin(), pa.end());
                std::vector<Vertex> t = pa;
                for (int k = static_cast<int>(seg.size()) - 2; k >= 0; --k) t.push_back(seg[k]);
                ClosedWalk src = ClosedWalk::from_closed_sequence(t);
                int idx = static_cast<int>(d.sources.size());
                d.sources.push_back(src);
                d.steps.push_back(DerivationStep::sum_with(idx, 0));
                state = apply_step(state, d.steps.back(), d.sources);
                state = cyclic_reduce_recording(state, d.steps);
                used[i] = true;
                progressed = true;
            }
        }
        if (!progressed) return false;
    }
    if (WalkClass(state) != goal) return false;
    int t = -1;
    for (int k = 0; k < state.length(); ++k)
        if (state.rotated(k) == target) {
            t = k;
            break;
        }
    if (t < 0) return false;
    if (t != 0) {
        d.steps.push_back(DerivationStep::rotate(t));
        state = apply_step(state, d.steps.back(), d.sources);
    }
    return state == target;
}

}  // namespace

Derivation transfer_derivation(const PlanarMap&, const UncrossResult& r, const ClosedWalk& c,
                               const ClosedWalk& d, bool want_c) {
    const ClosedWalk& target = want_c ? c : d;
    const ClosedWalk& tilde = want_c ? r.c_tilde : r.d_tilde;
    // rebuilding C from C~ replaces the D-segments (the Q_i) by the P_i;
    // rebuilding D from D~ is the mirror image
    std::vector<Replacement> repls;
    for (const auto& pr : r.pairing) {
        if (want_c)
            repls.emplace_back(pr.second.path, pr.first.path);
        else
            repls.emplace_back(pr.first.path, pr.second.path);
    }
    Derivation out;
    if (build_transfer(repls, tilde, target, out)) return out;
    if (build_transfer(repls, tilde.inverse(), target, out)) return out;
    throw Error("transfer_derivation: could not assemble the replacement chain");
}

MuReport check_mu_decrease(const PlanarMap& m, const std::vector<WalkClass>& e,
                           const ClosedWalk& c, const ClosedWalk& d, const UncrossResult& r) {
    MuReport rep;
    rep.mu_c = mu(m, e, c);
    rep.mu_d = mu(m, e, d);
    rep.mu_c_tilde = mu(m, e, r.c_tilde);
    rep.mu_d_tilde = mu(m, e, r.d_tilde);
    WalkClass dc(d), dci = dc.inverse();
    for (const WalkClass& x : e)
        if (x == dc || x == dci) rep.strict_required = true;
    long lhs = rep.mu_c + rep.mu_d, rhs = rep.mu_c_tilde + rep.mu_d_tilde;
    rep.holds = lhs >= rhs;
    rep.strict = lhs > rhs;
    if (!rep.holds || (rep.strict_required && !rep.strict)) {
        std::ostringstream os;
        os << "mu inequality violated: mu(C)=" << rep.mu_c << " mu(D)=" << rep.mu_d
           << " mu(C~)=" << rep.mu_c_tilde << " mu(D~)=" << rep.mu_d_tilde << "; C=";
        for (Vertex v : c.closed_sequence()) os << ' ' << v;
        os << "; D=";
        for (Vertex v : d.closed_sequence()) os << ' ' << v;
        throw Error(os.str());
    }
    return rep;
}

}  // namespace pw
