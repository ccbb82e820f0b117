#pragma once

#include <cassert>
#include <cstdint>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "rational.hpp"

namespace arc {

// Sparse integer matrix, row-major.  Entries are exact big integers so that
// elimination never overflows regardless of intermediate growth.
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::map<int, Int>> row;

    SparseIntMatrix() = default;
    SparseIntMatrix(int r, int c) : rows(r), cols(c), row(r) {}

    void set(int r, int c, const Int& v) {
        assert(r >= 0 && r < rows && c >= 0 && c < cols);
        if (v == 0)
            row[r].erase(c);
        else
            row[r][c] = v;
    }

    void add(int r, int c, const Int& v) {
        auto it = row[r].find(c);
        if (it == row[r].end()) {
            if (v != 0) row[r][c] = v;
        } else {
            it->second += v;
            if (it->second == 0) row[r].erase(it);
        }
    }

    Int get(int r, int c) const {
        auto it = row[r].find(c);
        return it == row[r].end() ? Int(0) : it->second;
    }

    bool is_zero() const {
        for (const auto& m : row)
            if (!m.empty()) return false;
        return true;
    }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& m : row) n += m.size();
        return n;
    }
};

inline SparseIntMatrix sparse_mul(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    assert(a.cols == b.rows);
    SparseIntMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (const auto& [k, av] : a.row[i])
            for (const auto& [j, bv] : b.row[k]) out.add(i, j, av * bv);
    return out;
}

struct SmithResult {
    // invariant factors d1 | d2 | ... | dk, all positive; rank == diagonal.size()
    std::vector<Int> diagonal;
    bool has_transforms = false;
    // when requested: unimodular U (rows x rows) and V (cols x cols) with
    // U * M * V equal to diag(diagonal) padded with zeros
    std::vector<std::vector<Int>> U, V;
};

namespace detail {

struct SnfState {
    SparseIntMatrix m;
    std::vector<std::set<int>> col_rows;  // column -> rows holding a nonzero
    std::set<int> live_rows, live_cols;
    bool track;
    std::vector<std::vector<Int>> U, V;

    SnfState(const SparseIntMatrix& in, bool want_transforms)
        : m(in), col_rows(in.cols), track(want_transforms) {
        for (int r = 0; r < m.rows; ++r)
            for (const auto& [c, v] : m.row[r]) {
                (void)v;
                col_rows[c].insert(r);
            }
        for (int r = 0; r < m.rows; ++r) live_rows.insert(r);
        for (int c = 0; c < m.cols; ++c) live_cols.insert(c);
        if (track) {
            U.assign(m.rows, std::vector<Int>(m.rows, 0));
            V.assign(m.cols, std::vector<Int>(m.cols, 0));
            for (int i = 0; i < m.rows; ++i) U[i][i] = 1;
            for (int i = 0; i < m.cols; ++i) V[i][i] = 1;
        }
    }

    // row[dst] += q * row[src]
    void row_axpy(int dst, int src, const Int& q) {
        if (q == 0) return;
        for (const auto& [c, v] : m.row[src]) {
            auto it = m.row[dst].find(c);
            if (it == m.row[dst].end()) {
                m.row[dst][c] = q * v;
                col_rows[c].insert(dst);
            } else {
                it->second += q * v;
                if (it->second == 0) {
                    m.row[dst].erase(it);
                    col_rows[c].erase(dst);
                }
            }
        }
        if (track)
            for (int i = 0; i < m.rows; ++i) U[dst][i] += q * U[src][i];
    }

    // col[dst] += q * col[src]
    void col_axpy(int dst, int src, const Int& q) {
        if (q == 0) return;
        std::vector<int> rows_of_src(col_rows[src].begin(), col_rows[src].end());
        for (int r : rows_of_src) {
            const Int v = m.row[r].at(src);
            auto it = m.row[r].find(dst);
            if (it == m.row[r].end()) {
                m.row[r][dst] = q * v;
                col_rows[dst].insert(r);
            } else {
                it->second += q * v;
                if (it->second == 0) {
                    m.row[r].erase(it);
                    col_rows[dst].erase(r);
                }
            }
        }
        if (track)
            for (int i = 0; i < m.cols; ++i) V[i][dst] += q * V[i][src];
    }

    void negate_row(int r) {
        for (auto& [c, v] : m.row[r]) {
            (void)c;
            v = -v;
        }
        if (track)
            for (auto& v : U[r]) v = -v;
    }

    // pivot with minimal |value|, ties broken by least fill then least (row, col);
    // a lone unit entry short-circuits the scan
    bool find_pivot(int& pr, int& pc) const {
        bool found = false;
        Int best_abs;
        std::size_t best_fill = 0;
        for (int r : live_rows) {
            for (const auto& [c, v] : m.row[r]) {
                Int a = abs(v);
                std::size_t fill = (m.row[r].size() - 1) * (col_rows[c].size() - 1);
                bool better = !found || a < best_abs ||
                              (a == best_abs && fill < best_fill);
                if (better) {
                    pr = r;
                    pc = c;
                    best_abs = a;
                    best_fill = fill;
                    found = true;
                    if (best_abs == 1 && best_fill == 0) return true;
                }
            }
        }
        return found;
    }
};

}  // namespace detail

// Smith normal form by minimal-pivot elimination.  Deterministic: the pivot
// choice is a pure function of the matrix, no randomisation, no threading.
inline SmithResult smith_normal_form(const SparseIntMatrix& input,
                                     bool want_transforms = false) {
    detail::SnfState st(input, want_transforms);
    std::vector<Int> diag;
    std::vector<std::pair<int, int>> pivot_at;  // where factor i retired

    while (true) {
        int pr = 0, pc = 0;
        if (!st.find_pivot(pr, pc)) break;

        while (true) {
            if (st.m.get(pr, pc) < 0) st.negate_row(pr);

            // clear the pivot column; a nonzero remainder is strictly smaller
            // than the pivot and takes over as pivot
            bool moved = false;
            bool dirty = true;
            while (dirty) {
                dirty = false;
                const Int p = st.m.get(pr, pc);
                std::vector<int> others(st.col_rows[pc].begin(), st.col_rows[pc].end());
                for (int r : others) {
                    if (r == pr) continue;
                    st.row_axpy(r, pr, -floor_div(st.m.row[r].at(pc), p));
                    auto it = st.m.row[r].find(pc);
                    if (it != st.m.row[r].end() && abs(it->second) < p) {
                        pr = r;
                        if (it->second < 0) st.negate_row(pr);
                        dirty = true;
                        break;
                    }
                }
            }

            // clear the pivot row with column operations; the column stays
            // clear because it holds the pivot alone
            dirty = true;
            while (dirty && !moved) {
                dirty = false;
                const Int p = st.m.get(pr, pc);
                std::map<int, Int> snapshot(st.m.row[pr]);
                for (const auto& [c, v] : snapshot) {
                    if (c == pc) continue;
                    st.col_axpy(c, pc, -floor_div(v, p));
                    const Int rem = st.m.get(pr, c);
                    if (rem != 0 && abs(rem) < p) {
                        pc = c;  // smaller pivot, but its column may be dirty
                        moved = true;
                        break;
                    }
                }
            }
            if (moved) continue;
            if (st.m.row[pr].size() != 1 || st.col_rows[pc].size() != 1) continue;

            // force divisibility: drag a bad row into the pivot row and keep
            // reducing; the pivot strictly shrinks until it divides everything
            const Int p = st.m.get(pr, pc);
            int bad_row = -1;
            for (int r : st.live_rows) {
                if (r == pr) continue;
                for (const auto& [c, v] : st.m.row[r]) {
                    (void)c;
                    if (v % p != 0) {
                        bad_row = r;
                        break;
                    }
                }
                if (bad_row >= 0) break;
            }
            if (bad_row < 0) break;
            st.row_axpy(pr, bad_row, Int(1));
        }

        Int p = st.m.get(pr, pc);
        assert(p > 0);
        diag.push_back(p);
        pivot_at.emplace_back(pr, pc);
        st.m.row[pr].clear();
        st.col_rows[pc].clear();
        st.live_rows.erase(pr);
        st.live_cols.erase(pc);
    }

    SmithResult out;
    out.diagonal = diag;
    if (want_transforms) {
        // permute the accumulated transforms so factor i sits at (i, i)
        out.has_transforms = true;
        const int k = static_cast<int>(diag.size());
        std::set<int> used_rows, used_cols;
        for (auto& [r, c] : pivot_at) {
            used_rows.insert(r);
            used_cols.insert(c);
        }
        std::vector<int> row_order, col_order;
        for (int i = 0; i < k; ++i) {
            row_order.push_back(pivot_at[i].first);
            col_order.push_back(pivot_at[i].second);
        }
        for (int r = 0; r < input.rows; ++r)
            if (!used_rows.count(r)) row_order.push_back(r);
        for (int c = 0; c < input.cols; ++c)
            if (!used_cols.count(c)) col_order.push_back(c);
        out.U.assign(input.rows, {});
        for (int i = 0; i < input.rows; ++i) out.U[i] = st.U[row_order[i]];
        out.V.assign(input.cols, std::vector<Int>(input.cols, 0));
        for (int j = 0; j < input.cols; ++j)
            for (int i = 0; i < input.cols; ++i) out.V[i][j] = st.V[i][col_order[j]];
    }
    return out;
}

inline long matrix_rank(const SparseIntMatrix& m) {
    return static_cast<long>(smith_normal_form(m).diagonal.size());
}

}  // namespace arc
