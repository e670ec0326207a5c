#include "pw/group_actions.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace pw {

namespace {

std::vector<int> refine_colors(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    while (true) {
        std::map<std::pair<int, std::vector<int>>, int> next_id;
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            for (Vertex w : g.neighbors(v)) nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            sig[v] = {color[v], nb};
        }
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v) {
            auto it = next_id.find(sig[v]);
            if (it == next_id.end()) it = next_id.emplace(sig[v], next_id.size()).first;
            next[v] = it->second;
        }
        if (next == color) return color;
        color = next;
    }
}

void enumerate_automorphisms(const Graph& g, std::vector<std::vector<Vertex>>& out) {
    int n = g.num_vertices();
    std::vector<int> color = refine_colors(g);
    std::vector<Vertex> perm(n, -1);
    std::vector<char> used(n, 0);
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            out.push_back(perm);
            return;
        }
        for (Vertex u = 0; u < n; ++u) {
            if (used[u] || color[u] != color[v]) continue;
            bool ok = true;
            for (Vertex w = 0; w < v && ok; ++w)
                if (g.has_edge(v, w) != g.has_edge(u, perm[w])) ok = false;
            if (!ok) continue;
            perm[v] = u;
            used[u] = 1;
            rec(v + 1);
            used[u] = 0;
            perm[v] = -1;
        }
    };
    rec(0);
}

std::vector<Vertex> compose(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

std::set<std::vector<Vertex>> closure(const std::vector<std::vector<Vertex>>& gens, int n) {
    std::vector<Vertex> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    std::set<std::vector<Vertex>> seen = {id};
    std::deque<std::vector<Vertex>> queue = {id};
    while (!queue.empty()) {
        std::vector<Vertex> a = std::move(queue.front());
        queue.pop_front();
        for (const auto& p : gens) {
            std::vector<Vertex> c = compose(p, a);
            if (seen.insert(c).second) queue.push_back(c);
        }
    }
    return seen;
}

}  // namespace

AutomorphismGroup automorphisms(const Graph& g) {
    int n = g.num_vertices();
    std::vector<std::vector<Vertex>> all;
    enumerate_automorphisms(g, all);

    AutomorphismGroup ag;
    ag.order = all.size();
    std::set<std::vector<Vertex>> have;
    {
        std::vector<Vertex> id(n);
        for (int i = 0; i < n; ++i) id[i] = i;
        have.insert(id);
    }
    for (const auto& p : all) {
        if (have.count(p)) continue;
        ag.generators.push_back(p);
        have = closure(ag.generators, n);
    }

    std::vector<int> rep(n);
    for (int v = 0; v < n; ++v) rep[v] = v;
    std::function<int(int)> find = [&](int x) { return rep[x] == x ? x : rep[x] = find(rep[x]); };
    for (const auto& p : ag.generators)
        for (int v = 0; v < n; ++v) rep[find(v)] = find(p[v]);
    std::map<int, std::vector<Vertex>> orb;
    for (int v = 0; v < n; ++v) orb[find(v)].push_back(v);
    for (auto& [_, o] : orb) ag.orbits.push_back(o);
    return ag;
}

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    std::istringstream is(text);
    std::string line;
    bool saw_gens = false;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head.empty() || head[0] == '#') continue;
        if (head == "gens:") {
            std::string tok;
            while (ls >> tok) {
                if (tok.size() != 1 || !std::islower(static_cast<unsigned char>(tok[0])))
                    throw Error("generator symbols must be single lowercase letters");
                if (std::find(p.gens.begin(), p.gens.end(), tok[0]) != p.gens.end())
                    throw Error("duplicate generator symbol");
                p.gens.push_back(tok[0]);
            }
            saw_gens = true;
        } else if (head == "rels:") {
            std::string tok;
            while (ls >> tok) {
                GroupWord w;
                for (char c : tok) {
                    char low = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
                    auto it = std::find(p.gens.begin(), p.gens.end(), low);
                    if (it == p.gens.end())
                        throw Error(std::string("unknown generator letter: ") + c);
                    int gidx = static_cast<int>(it - p.gens.begin()) + 1;
                    w.push_back(std::isupper(static_cast<unsigned char>(c)) ? -gidx : gidx);
                }
                w = free_reduce(w);
                if (w.empty()) throw Error("relator reduces to the empty word");
                p.relators.push_back(w);
            }
        } else {
            throw Error("presentation lines must start with 'gens:' or 'rels:'");
        }
    }
    if (!saw_gens || p.gens.empty()) throw Error("presentation has no generators");
    return p;
}

namespace {

int letter_index(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }

struct BallBuilder {
    int ncols;
    std::vector<std::vector<Vertex>> slots;
    std::vector<int> parent;

    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }

    int fresh() {
        parent.push_back(static_cast<int>(parent.size()));
        slots.emplace_back(ncols, -1);
        return static_cast<int>(parent.size()) - 1;
    }

    void merge(int a, int b) {
        std::deque<std::pair<int, int>> queue = {{a, b}};
        while (!queue.empty()) {
            auto [x, y] = queue.front();
            queue.pop_front();
            x = find(x);
            y = find(y);
            if (x == y) continue;
            int keep = std::min(x, y), drop = std::max(x, y);
            parent[drop] = keep;
            for (int c = 0; c < ncols; ++c) {
                int t = slots[drop][c];
                if (t < 0) continue;
                t = find(t);
                int k = slots[keep][c] < 0 ? -1 : find(slots[keep][c]);
                if (k < 0) {
                    slots[keep][c] = t;
                    int back = slots[t][c ^ 1] < 0 ? -1 : find(slots[t][c ^ 1]);
                    if (back < 0)
                        slots[t][c ^ 1] = keep;
                    else if (back != keep)
                        queue.emplace_back(back, keep);
                } else if (k != t) {
                    queue.emplace_back(k, t);
                }
            }
        }
    }
};

}  // namespace

Vertex CayleyBall::step(Vertex v, int letter) const {
    if (v < 0 || v >= graph.num_vertices()) throw Error("vertex outside the ball");
    int idx = letter_index(letter);
    if (letter == 0 || idx >= 2 * ngens) throw Error("bad generator letter");
    return slots[v][idx];
}

Vertex CayleyBall::trace_word(Vertex from, const GroupWord& w) const {
    Vertex cur = from;
    for (int letter : w) {
        cur = step(cur, letter);
        if (cur < 0) throw Error("word leaves the ball");
    }
    return cur;
}

int CayleyBall::dart_letter(Vertex a, Vertex b) const {
    for (int g = 1; g <= ngens; ++g) {
        if (slots[a][letter_index(g)] == b) return g;
        if (slots[a][letter_index(-g)] == b) return -g;
    }
    throw Error("no generator carries the dart");
}

CayleyBall cayley_ball(const Presentation& p, int radius, int vertex_cap) {
    if (radius < 0) throw Error("radius must be nonnegative");
    int ngens = static_cast<int>(p.gens.size());
    int maxrel = 0;
    for (const GroupWord& r : p.relators)
        maxrel = std::max(maxrel, static_cast<int>(r.size()));
    int depth_cap = radius + maxrel + 2;

    BallBuilder bb;
    bb.ncols = 2 * ngens;
    bb.fresh();
    std::vector<int> depth = {0};
    std::deque<int> queue = {0};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (depth[v] >= depth_cap) continue;
        for (int c = 0; c < bb.ncols; ++c) {
            if (bb.slots[v][c] >= 0) continue;
            int w = bb.fresh();
            if (static_cast<int>(bb.parent.size()) > vertex_cap)
                throw Error("cayley ball exceeded the vertex cap; use a smaller radius");
            depth.push_back(depth[v] + 1);
            bb.slots[v][c] = w;
            bb.slots[w][c ^ 1] = v;
            queue.push_back(w);
        }
    }

    // fold: every relator must trace back to its start
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < static_cast<int>(bb.parent.size()); ++v) {
            if (bb.find(v) != v) continue;
            for (const GroupWord& rel : p.relators) {
                int cur = v;
                bool ok = true;
                for (int letter : rel) {
                    int t = bb.slots[bb.find(cur)][letter_index(letter)];
                    if (t < 0) {
                        ok = false;
                        break;
                    }
                    cur = bb.find(t);
                }
                if (ok && bb.find(cur) != bb.find(v)) {
                    bb.merge(cur, v);
                    changed = true;
                }
            }
        }
    }

    // distances in the folded graph
    std::vector<int> rep;
    std::map<int, int> dense;
    for (int v = 0; v < static_cast<int>(bb.parent.size()); ++v)
        if (bb.find(v) == v) {
            dense[v] = static_cast<int>(rep.size());
            rep.push_back(v);
        }
    int m = static_cast<int>(rep.size());
    std::vector<int> dist(m, -1);
    dist[dense.at(bb.find(0))] = 0;
    std::deque<int> bfs = {dense.at(bb.find(0))};
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop_front();
        for (int c = 0; c < bb.ncols; ++c) {
            int t = bb.slots[rep[v]][c];
            if (t < 0) continue;
            int d = dense.at(bb.find(t));
            if (dist[d] < 0) {
                dist[d] = dist[v] + 1;
                bfs.push_back(d);
            }
        }
    }

    std::vector<int> keep_id(m, -1);
    std::vector<int> kept;
    for (int v = 0; v < m; ++v)
        if (dist[v] >= 0 && dist[v] <= radius) {
            keep_id[v] = static_cast<int>(kept.size());
            kept.push_back(v);
        }

    CayleyBall ball;
    ball.radius = radius;
    ball.ngens = ngens;
    ball.gen_names = p.gens;
    ball.graph = Graph(static_cast<int>(kept.size()));
    ball.base = keep_id[dense.at(bb.find(0))];
    ball.slots.assign(kept.size(), std::vector<Vertex>(bb.ncols, -1));
    ball.distance.resize(kept.size());
    ball.interior.assign(kept.size(), 1);
    for (size_t i = 0; i < kept.size(); ++i) {
        ball.distance[i] = dist[kept[i]];
        for (int c = 0; c < bb.ncols; ++c) {
            int t = bb.slots[rep[kept[i]]][c];
            int d = t < 0 ? -1 : keep_id[dense.at(bb.find(t))];
            if (d < 0) {
                ball.interior[i] = 0;
                continue;
            }
            ball.slots[i][c] = d;
            if (d != static_cast<int>(i) && !ball.graph.has_edge(static_cast<int>(i), d))
                ball.graph.add_edge(static_cast<int>(i), d);
        }
    }
    return ball;
}

ClosedWalk fs_act(const CayleyBall& ball, const GroupWord& w, const ClosedWalk& walk) {
    if (walk.is_trivial()) return walk;
    if (walk.basepoint() != ball.base) throw Error("walk is not based at the ball's base vertex");
    GroupWord rw = free_reduce(w);
    if (rw.empty()) return walk;

    std::vector<Vertex> path = {ball.base};
    for (int letter : rw) {
        Vertex next = ball.step(path.back(), letter);
        if (next < 0) throw Error("the conjugating path leaves the ball");
        path.push_back(next);
    }

    std::vector<int> letters;
    for (int i = 0; i < walk.length(); ++i)
        letters.push_back(ball.dart_letter(walk.dart(i).tail, walk.dart(i).head));

    std::vector<Vertex> translated = {path.back()};
    for (int letter : letters) {
        Vertex next = ball.step(translated.back(), letter);
        if (next < 0) throw Error("the translate leaves the ball");
        translated.push_back(next);
    }
    if (translated.back() != path.back())
        throw Error("the translate does not close inside the ball");

    std::vector<Vertex> seq(path.begin(), path.end() - 1);
    seq.insert(seq.end(), translated.begin(), translated.end());
    for (auto it = path.rbegin() + 1; it != path.rend(); ++it) seq.push_back(*it);
    return ClosedWalk::from_closed_sequence(seq);
}

Pi1Set genpi(const Graph& g, const std::vector<ClosedWalk>& V, Vertex base,
             bool all_attachments) {
    std::set<WalkClass> classes;
    for (const ClosedWalk& w : V) classes.insert(WalkClass(w));
    for (const WalkClass& c : classes)
        if (!classes.count(c.inverse()))
            throw Error("generating set is not closed under taking inverses");

    ChordCoder coder(g, base);
    Pi1Set out;
    out.base = base;
    std::set<GroupWord> seen;
    for (const ClosedWalk& w : V) {
        if (w.is_trivial()) continue;
        std::set<Vertex> attached;
        for (int pos = 0; pos < w.length(); ++pos) {
            Vertex x = w.vertex(pos);
            if (attached.count(x)) continue;
            if (!all_attachments && x != *w.vertex_set().begin()) continue;
            attached.insert(x);
            std::vector<Vertex> tree = coder.tree_path(base, x);
            std::vector<Vertex> seq(tree.begin(), tree.end() - 1);
            ClosedWalk rot = w.rotated(pos);
            std::vector<Vertex> cs = rot.closed_sequence();
            seq.insert(seq.end(), cs.begin(), cs.end() - 1);
            for (auto it = tree.rbegin(); it != tree.rend() - 1; ++it) seq.push_back(*it);
            seq.push_back(base);
            GroupWord word = coder.word_of(ClosedWalk::from_closed_sequence(seq));
            if (word.empty()) continue;
            if (seen.insert(word).second) out.elements.push_back(word);
        }
    }
    return out;
}

WalkClass cyclic_reduce_pi(const Graph& g, Vertex base, const Pi1Element& e) {
    ChordCoder coder(g, base);
    return WalkClass(cyclic_reduce(coder.walk_of(e)));
}

int abelianization_rank(const std::vector<Pi1Element>& elements, int num_chords) {
    std::vector<std::vector<long long>> rows;
    for (const Pi1Element& e : elements) {
        std::vector<long long> row(num_chords, 0);
        for (int letter : e) {
            int idx = std::abs(letter) - 1;
            if (idx >= num_chords) throw Error("letter outside the chord alphabet");
            row[idx] += letter > 0 ? 1 : -1;
        }
        rows.push_back(row);
    }
    // fraction-free elimination over Z (rank only)
    int rank = 0;
    for (int col = 0; col < num_chords && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
            while (rows[r][col] != 0) {
                long long q = rows[r][col] / rows[rank][col];
                for (int c = col; c < num_chords; ++c) rows[r][c] -= q * rows[rank][c];
                if (rows[r][col] != 0) std::swap(rows[rank], rows[r]);
            }
        }
        ++rank;
    }
    return rank;
}

PiOrbits orbit_partition_pi(const CayleyBall& ball, const std::vector<Pi1Element>& elements,
                            long budget) {
    PiOrbits out;
    if (elements.empty()) return out;
    ChordCoder coder(ball.graph, ball.base);

    std::map<GroupWord, int> id_of;
    std::vector<int> parent;
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    auto intern = [&](const GroupWord& w) {
        auto it = id_of.find(w);
        if (it != id_of.end()) return std::make_pair(it->second, false);
        int id = static_cast<int>(parent.size());
        parent.push_back(id);
        id_of.emplace(w, id);
        return std::make_pair(id, true);
    };

    std::deque<GroupWord> queue;
    std::vector<int> input_ids;
    for (const Pi1Element& e : elements) {
        GroupWord w = free_reduce(e);
        auto [id, fresh] = intern(w);
        input_ids.push_back(id);
        if (fresh) queue.push_back(w);
    }

    long explored = 0;
    while (!queue.empty()) {
        if (++explored > budget) {
            out.budget_hit = true;
            break;
        }
        GroupWord w = std::move(queue.front());
        queue.pop_front();
        ClosedWalk realized = coder.walk_of(w);
        for (int g = 1; g <= ball.ngens; ++g)
            for (int letter : {g, -g}) {
                GroupWord img_word;
                try {
                    ClosedWalk img = fs_act(ball, {letter}, realized);
                    img_word = coder.word_of(img);
                } catch (const Error&) {
                    continue;  // boundary effect: the move leaves the ball
                }
                auto [id, fresh] = intern(img_word);
                parent[find(id)] = find(id_of.at(w));
                if (fresh) queue.push_back(img_word);
            }
    }

    std::map<int, int> label_of;
    for (int id : input_ids) {
        int root = find(id);
        if (!label_of.count(root)) label_of[root] = static_cast<int>(label_of.size());
        out.labels.push_back(label_of.at(root));
    }
    out.orbit_count = static_cast<int>(label_of.size());
    return out;
}

}  // namespace pw
