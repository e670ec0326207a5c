#include "pw/coset_enum.hpp"

#include <deque>

#include "pw/graph.hpp"

namespace pw {

GroupWord free_reduce(const GroupWord& w) {
    GroupWord out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

GroupWord invert_word(const GroupWord& w) {
    GroupWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

int CosetTable::act(int coset, int letter) const {
    int col = letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
    return table[coset][col];
}

int CosetTable::trace(const GroupWord& w, int from) const {
    int c = from;
    for (int letter : w) c = act(c, letter);
    return c;
}

namespace {

struct Enumerator {
    int ncols;
    long cap;
    std::vector<std::vector<int>> tab;
    std::vector<int> uf;
    std::deque<std::pair<int, int>> coinc;
    long merges = 0;

    Enumerator(int ngens, long cap_) : ncols(2 * ngens), cap(cap_) { new_coset(); }

    static int col_of(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }
    static int inv_col(int col) { return col ^ 1; }

    int new_coset() {
        tab.emplace_back(ncols, -1);
        uf.push_back(static_cast<int>(uf.size()));
        return static_cast<int>(tab.size()) - 1;
    }

    int find(int c) {
        while (uf[c] != c) c = uf[c] = uf[uf[c]];
        return c;
    }

    void set(int c, int col, int d) {
        c = find(c);
        d = find(d);
        int& cd = tab[c][col];
        if (cd >= 0 && find(cd) != d) {
            coinc.emplace_back(find(cd), d);
        } else {
            cd = d;
        }
        int& dc = tab[d][inv_col(col)];
        if (dc >= 0 && find(dc) != c) {
            coinc.emplace_back(find(dc), c);
        } else {
            dc = c;
        }
    }

    void process_coincidences() {
        while (!coinc.empty()) {
            auto [a, b] = coinc.front();
            coinc.pop_front();
            a = find(a);
            b = find(b);
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            uf[b] = a;
            ++merges;
            for (int col = 0; col < ncols; ++col) {
                int d = tab[b][col];
                if (d < 0) continue;
                d = find(d);
                // transfer b's edge to a
                set(a, col, d);
            }
        }
    }

    /// Scan relator w at coset c, filling gaps with new cosets (HLT).
    /// Returns false if the cap was exceeded.
    bool scan_and_fill(int c, const GroupWord& w) {
        c = find(c);
        int n = static_cast<int>(w.size());
        if (n == 0) return true;

        int f = c, i = 0;
        while (i < n) {
            int d = tab[f][col_of(w[i])];
            if (d < 0) break;
            f = find(d);
            ++i;
        }
        if (i == n) {
            if (f != c) {
                coinc.emplace_back(f, c);
                process_coincidences();
            }
            return true;
        }

        std::vector<int> back_at(n + 1, -1);
        back_at[n] = c;
        int j = n;
        while (j > i) {
            int prev = tab[find(back_at[j])][inv_col(col_of(w[j - 1]))];
            if (prev < 0) break;
            back_at[j - 1] = find(prev);
            --j;
        }

        if (j <= i) {
            // traces overlap: identify and bail out
            coinc.emplace_back(f, back_at[i]);
            process_coincidences();
            return true;
        }
        // fill the gap i .. j-1 with new cosets, close with a deduction
        while (j - i > 1) {
            if (static_cast<long>(tab.size()) >= cap) return false;
            int nc = new_coset();
            set(f, col_of(w[i]), nc);
            process_coincidences();
            f = find(f);
            int d = tab[f][col_of(w[i])];
            if (d < 0) return true;  // coincidence restructured things; retry later
            f = find(d);
            ++i;
        }
        set(f, col_of(w[i]), find(back_at[j]));
        process_coincidences();
        return true;
    }
};

}  // namespace

std::optional<CosetTable> todd_coxeter(int ngens, const std::vector<GroupWord>& relators,
                                       int max_cosets) {
    std::vector<GroupWord> rels;
    for (const GroupWord& r : relators) {
        GroupWord w = free_reduce(r);
        if (!w.empty()) rels.push_back(w);
    }

    Enumerator e(ngens, max_cosets);
    bool stable = false;
    while (!stable) {
        size_t size_before = e.tab.size();
        long merges_before = e.merges;
        for (int c = 0; c < static_cast<int>(e.tab.size()); ++c) {
            if (e.find(c) != c) continue;
            for (const GroupWord& r : rels)
                if (!e.scan_and_fill(c, r)) return std::nullopt;
            if (e.find(c) != c) continue;
            for (int col = 0; col < e.ncols; ++col) {
                if (e.tab[e.find(c)][col] >= 0) continue;
                if (static_cast<long>(e.tab.size()) >= static_cast<long>(max_cosets))
                    return std::nullopt;
                int nc = e.new_coset();
                e.set(e.find(c), col, nc);
                e.process_coincidences();
            }
        }
        stable = (e.tab.size() == size_before && e.merges == merges_before);
    }

    // compress
    std::vector<int> live;
    std::vector<int> newid(e.tab.size(), -1);
    for (int c = 0; c < static_cast<int>(e.tab.size()); ++c)
        if (e.find(c) == c) {
            newid[c] = static_cast<int>(live.size());
            live.push_back(c);
        }
    CosetTable t;
    t.ngens = ngens;
    t.table.assign(live.size(), std::vector<int>(e.ncols, -1));
    for (size_t i = 0; i < live.size(); ++i)
        for (int col = 0; col < e.ncols; ++col) {
            int d = e.tab[live[i]][col];
            if (d < 0) throw Error("coset table incomplete after closure");
            t.table[i][col] = newid[e.find(d)];
        }
    return t;
}

}  // namespace pw
