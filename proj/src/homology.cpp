#include "pw/homology.hpp"

#include <algorithm>
#include <cstdlib>

namespace pw {

ChainVector walk_to_chain(const Graph& g, const ClosedWalk& w) {
    ChainVector c(g.num_edges(), 0);
    for (int i = 0; i < w.length(); ++i) {
        Dart d = w.dart(i);
        int id = g.edge_id(d.tail, d.head);
        c[id] += (d.tail < d.head) ? 1 : -1;
    }
    return c;
}

bool is_zero(const ChainVector& c) {
    return std::all_of(c.begin(), c.end(), [](long long x) { return x == 0; });
}

std::vector<unsigned char> chain_mod2(const ChainVector& c) {
    std::vector<unsigned char> r(c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = static_cast<unsigned char>(((c[i] % 2) + 2) % 2);
    return r;
}

namespace {

Mat identity(int n) {
    Mat m(n, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

}  // namespace

Mat mat_mul(const Mat& a, const Mat& b) {
    int m = static_cast<int>(a.size());
    int k = m ? static_cast<int>(a[0].size()) : 0;
    int n = b.empty() ? 0 : static_cast<int>(b[0].size());
    Mat c(m, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < m; ++i)
        for (int l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (int j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

mpz_class mat_det(Mat a) {
    int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

SnfResult snf(const Mat& a) {
    int m = static_cast<int>(a.size());
    int n = m ? static_cast<int>(a[0].size()) : 0;
    SnfResult r;
    r.d = a;
    r.u = identity(m);
    r.v = identity(n);
    if (m == 0 || n == 0) return r;
    Mat& d = r.d;

    auto row_sub = [&](int i, int t, const mpz_class& q) {
        for (int j = 0; j < n; ++j) d[i][j] -= q * d[t][j];
        for (int j = 0; j < m; ++j) r.u[i][j] -= q * r.u[t][j];
    };
    auto col_sub = [&](int j, int t, const mpz_class& q) {
        for (int i = 0; i < m; ++i) d[i][j] -= q * d[i][t];
        for (int i = 0; i < n; ++i) r.v[i][j] -= q * r.v[i][t];
    };
    auto row_swap = [&](int i, int t) {
        std::swap(d[i], d[t]);
        std::swap(r.u[i], r.u[t]);
    };
    auto col_swap = [&](int j, int t) {
        for (int i = 0; i < m; ++i) std::swap(d[i][j], d[i][t]);
        for (int i = 0; i < n; ++i) std::swap(r.v[i][j], r.v[i][t]);
    };
    auto row_neg = [&](int i) {
        for (int j = 0; j < n; ++j) d[i][j] = -d[i][j];
        for (int j = 0; j < m; ++j) r.u[i][j] = -r.u[i][j];
    };

    int t = 0;
    while (t < m && t < n) {
        // smallest-magnitude nonzero pivot in the remaining block
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (d[i][j] != 0 &&
                    (pi < 0 || cmp(abs(d[i][j]), abs(d[pi][pj])) < 0)) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        row_swap(pi, t);
        col_swap(pj, t);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (d[i][t] == 0) continue;
                mpz_class q = d[i][t] / d[t][t];
                row_sub(i, t, q);
                if (d[i][t] != 0) {
                    row_swap(i, t);
                    clean = false;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (d[t][j] == 0) continue;
                mpz_class q = d[t][j] / d[t][t];
                col_sub(j, t, q);
                if (d[t][j] != 0) {
                    col_swap(j, t);
                    clean = false;
                }
            }
        }

        // enforce divisibility: pivot must divide every remaining entry
        bool redo = false;
        for (int i = t + 1; i < m && !redo; ++i)
            for (int j = t + 1; j < n && !redo; ++j)
                if (d[i][j] % d[t][t] != 0) {
                    // fold row i into row t and restart the pivot cleanup
                    row_sub(t, i, mpz_class(-1));
                    redo = true;
                }
        if (redo) continue;

        if (d[t][t] < 0) row_neg(t);
        ++t;
    }
    r.rank = 0;
    for (int i = 0; i < std::min(m, n); ++i)
        if (d[i][i] != 0) ++r.rank;
    return r;
}

namespace {

Mat chains_to_matrix(const std::vector<ChainVector>& chains, int rows) {
    Mat a(rows, std::vector<mpz_class>(chains.size(), 0));
    for (size_t j = 0; j < chains.size(); ++j)
        for (int i = 0; i < rows; ++i) a[i][j] = static_cast<long>(chains[j][i]);
    return a;
}

}  // namespace

ZMembership is_generated_Z(const ChainVector& target, const std::vector<ChainVector>& basis) {
    ZMembership res;
    int m = static_cast<int>(target.size());
    int k = static_cast<int>(basis.size());

    if (k == 0) {
        if (is_zero(target)) {
            res.generated = true;
            return res;
        }
        res.obstruction.assign(m, 0);
        for (int i = 0; i < m; ++i)
            if (target[i] != 0) {
                res.obstruction[i] = 1;
                break;
            }
        return res;
    }

    Mat a = chains_to_matrix(basis, m);
    SnfResult s = snf(a);

    std::vector<mpz_class> y(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) y[i] += s.u[i][j] * static_cast<long>(target[j]);

    for (int i = 0; i < m; ++i) {
        mpz_class di = (i < std::min(m, k)) ? s.d[i][i] : mpz_class(0);
        bool ok = (di != 0) ? (y[i] % di == 0) : (y[i] == 0);
        if (!ok) {
            res.obstruction = s.u[i];
            res.obstruction_modulus = di;
            return res;
        }
    }
    std::vector<mpz_class> z(k, 0);
    for (int i = 0; i < std::min(m, k); ++i)
        if (s.d[i][i] != 0) z[i] = y[i] / s.d[i][i];
    res.coefficients.assign(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) res.coefficients[i] += s.v[i][j] * z[j];
    res.generated = true;
    return res;
}

F2Membership is_generated_F2(const ChainVector& target, const std::vector<ChainVector>& basis) {
    F2Membership res;
    int m = static_cast<int>(target.size());
    int k = static_cast<int>(basis.size());

    // rows: [A | t], track E with E*[A|t] row-reduced
    std::vector<std::vector<unsigned char>> rows(m);
    std::vector<std::vector<unsigned char>> e(m, std::vector<unsigned char>(m, 0));
    std::vector<unsigned char> t2 = chain_mod2(target);
    for (int i = 0; i < m; ++i) {
        rows[i].resize(k + 1);
        for (int j = 0; j < k; ++j) rows[i][j] = static_cast<unsigned char>(((basis[j][i] % 2) + 2) % 2);
        rows[i][k] = t2[i];
        e[i][i] = 1;
    }

    int r = 0;
    std::vector<int> pivot_col_of_row;
    for (int c = 0; c < k && r < m; ++c) {
        int p = -1;
        for (int i = r; i < m; ++i)
            if (rows[i][c]) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(rows[p], rows[r]);
        std::swap(e[p], e[r]);
        for (int i = 0; i < m; ++i)
            if (i != r && rows[i][c]) {
                for (int j = 0; j <= k; ++j) rows[i][j] ^= rows[r][j];
                for (int j = 0; j < m; ++j) e[i][j] ^= e[r][j];
            }
        pivot_col_of_row.push_back(c);
        ++r;
    }
    for (int i = r; i < m; ++i)
        if (rows[i][k]) {
            res.obstruction = e[i];
            return res;
        }
    res.generated = true;
    res.coefficients.assign(k, 0);
    for (int i = 0; i < r; ++i)
        if (rows[i][k]) res.coefficients[pivot_col_of_row[i]] = 1;
    return res;
}

int lattice_rank(const std::vector<ChainVector>& chains) {
    if (chains.empty()) return 0;
    return snf(chains_to_matrix(chains, static_cast<int>(chains[0].size()))).rank;
}

int rank_F2(const std::vector<ChainVector>& chains) {
    if (chains.empty()) return 0;
    int m = static_cast<int>(chains[0].size());
    int k = static_cast<int>(chains.size());
    std::vector<std::vector<unsigned char>> cols(k, std::vector<unsigned char>(m));
    for (int j = 0; j < k; ++j) cols[j] = chain_mod2(chains[j]);
    int rank = 0;
    std::vector<int> pivot_row;
    std::vector<std::vector<unsigned char>> basis;
    for (int j = 0; j < k; ++j) {
        auto v = cols[j];
        for (size_t b = 0; b < basis.size(); ++b)
            if (v[pivot_row[b]])
                for (int i = 0; i < m; ++i) v[i] ^= basis[b][i];
        int p = -1;
        for (int i = 0; i < m; ++i)
            if (v[i]) {
                p = i;
                break;
            }
        if (p >= 0) {
            basis.push_back(v);
            pivot_row.push_back(p);
            ++rank;
        }
    }
    return rank;
}

namespace {

int components(const Graph& g) {
    int n = g.num_vertices(), comps = 0;
    std::vector<bool> seen(n, false);
    for (Vertex v = 0; v < n; ++v) {
        if (seen[v]) continue;
        ++comps;
        std::vector<Vertex> stack{v};
        seen[v] = true;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(x))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
    }
    return comps;
}

}  // namespace

bool spans_cycle_lattice(const Graph& g, const std::vector<ChainVector>& chains) {
    int want = h1_rank(g);
    if (want == 0) return true;
    if (chains.empty()) return false;
    SnfResult s = snf(chains_to_matrix(chains, g.num_edges()));
    if (s.rank != want) return false;
    for (int i = 0; i < s.rank; ++i)
        if (s.d[i][i] != 1) return false;
    return true;
}

int h1_rank(const Graph& g) { return g.num_edges() - g.num_vertices() + components(g); }

int cycle_space_rank_F2(const Graph& g) { return h1_rank(g); }

std::vector<ClosedWalk> fundamental_cycles(const Graph& g) {
    int n = g.num_vertices();
    std::vector<Vertex> parent(n, -1);
    std::vector<int> depth(n, -1);
    std::vector<Vertex> order;
    for (Vertex root = 0; root < n; ++root) {
        if (depth[root] >= 0) continue;
        depth[root] = 0;
        order.push_back(root);
        for (size_t qi = order.size() - 1; qi < order.size(); ++qi) {
            Vertex v = order[qi];
            for (Vertex w : g.neighbors(v))
                if (depth[w] < 0) {
                    depth[w] = depth[v] + 1;
                    parent[w] = v;
                    order.push_back(w);
                }
        }
    }
    std::vector<ClosedWalk> out;
    for (auto [u, v] : g.edges()) {
        if (parent[u] == v || parent[v] == u) continue;
        std::vector<Vertex> up, down;
        Vertex a = u, b = v;
        while (depth[a] > depth[b]) {
            up.push_back(a);
            a = parent[a];
        }
        while (depth[b] > depth[a]) {
            down.push_back(b);
            b = parent[b];
        }
        while (a != b) {
            up.push_back(a);
            down.push_back(b);
            a = parent[a];
            b = parent[b];
        }
        up.push_back(a);
        std::vector<Vertex> seq(up);
        for (auto it = down.rbegin(); it != down.rend(); ++it) seq.push_back(*it);
        seq.push_back(seq.front());
        out.push_back(ClosedWalk::from_closed_sequence(seq));
    }
    return out;
}

}  // namespace pw
