#pragma once

// Moving covers between an arbitrary diagram with z steps and the staircase
// Y_z, in both directions, without increasing any row or column usage.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "diagram.hpp"

namespace ycover {

/// Rows s_1 < ... < s_z and columns t_1 < ... < t_z used by the steps of a
/// diagram. Index 0 holds the sentinel 0, so both vectors have z + 1 entries.
struct StepIndexing {
    std::vector<int> step_rows;
    std::vector<int> step_cols;

    int z() const { return static_cast<int>(step_rows.size()) - 1; }
};

inline StepIndexing step_indexing(const YoungDiagram& y) {
    StepIndexing idx;
    idx.step_rows.push_back(0);
    idx.step_cols.push_back(0);
    const auto zs = steps(y);
    for (const auto& st : zs) idx.step_rows.push_back(st.row);
    // steps come with decreasing columns
    for (auto it = zs.rbegin(); it != zs.rend(); ++it) idx.step_cols.push_back(it->col);
    return idx;
}

namespace detail {

inline GenRect span_union(const GenRect& a, const GenRect& b) {
    std::vector<int> rows = a.rows();
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    std::vector<int> cols = a.cols();
    cols.insert(cols.end(), b.cols().begin(), b.cols().end());
    return GenRect(std::move(rows), std::move(cols));
}

inline void require_cover(const YoungDiagram& y, const Cover& c) {
    if (!is_cover(y, c)) throw Error(ErrorCode::NotACover, "rectangles do not cover the diagram");
}

} // namespace detail

/// Merges rectangles until at most z remain. Two rectangles lying below a
/// common step (s,t), i.e. inside [s] x [t], are replaced by the rectangle
/// spanned by their rows and columns, which stays inside [s] x [t] and uses
/// no new row or column. The lexicographically smallest eligible step is
/// merged first, combining its two lowest-indexed rectangles into the
/// position of the first.
inline Cover merge_reduce(const YoungDiagram& y, Cover c) {
    detail::require_cover(y, c);
    const auto zs = steps(y);
    while (c.size() > zs.size()) {
        bool merged = false;
        for (const auto& st : zs) {
            std::optional<std::size_t> first;
            for (std::size_t a = 0; a < c.size(); ++a) {
                if (c[a].max_row() > st.row || c[a].max_col() > st.col) continue;
                if (!first) {
                    first = a;
                    continue;
                }
                c[*first] = detail::span_union(c[*first], c[a]);
                c.erase(c.begin() + static_cast<std::ptrdiff_t>(a));
                merged = true;
                break;
            }
            if (merged) break;
        }
        if (!merged)
            throw Error(ErrorCode::Internal, "more rectangles than steps but no step holds two of them");
    }
    return c;
}

struct Compressed {
    YoungDiagram diagram;
    Cover cover;
};

namespace detail {

inline void drop_index(std::vector<int>& v, int idx) {
    std::vector<int> out;
    out.reserve(v.size());
    for (int x : v) {
        if (x < idx) out.push_back(x);
        else if (x > idx) out.push_back(x - 1);
    }
    v = std::move(out);
}

inline GenRect delete_row(const GenRect& r, int s) {
    auto rows = r.rows();
    drop_index(rows, s);
    if (rows.empty()) throw Error(ErrorCode::Internal, "row deletion emptied a rectangle");
    return GenRect(std::move(rows), r.cols());
}

inline GenRect delete_col(const GenRect& r, int t) {
    auto cols = r.cols();
    drop_index(cols, t);
    if (cols.empty()) throw Error(ErrorCode::Internal, "column deletion emptied a rectangle");
    return GenRect(r.rows(), std::move(cols));
}

} // namespace detail

/// Turns a cover of Y into a cover of Y_z with exactly z rectangles by
/// merging, then cutting out rows and columns that carry no step
/// (smallest row first, re-scanning after each cut, columns after rows).
inline Compressed compress(const YoungDiagram& y, const Cover& c) {
    Cover cur = merge_reduce(y, c);
    std::vector<int> profile(y.row_lengths().begin(), y.row_lengths().end());

    for (;;) {
        const YoungDiagram d(profile);
        const auto idx = step_indexing(d);
        int row = 0;
        for (int s = 1; s <= d.rows() && row == 0; ++s)
            if (!std::binary_search(idx.step_rows.begin() + 1, idx.step_rows.end(), s)) row = s;
        if (row == 0) break;
        profile.erase(profile.begin() + (row - 1));
        for (auto& r : cur) r = detail::delete_row(r, row);
    }
    for (;;) {
        const YoungDiagram d(profile);
        const auto idx = step_indexing(d);
        int col = 0;
        for (int t = 1; t <= d.cols() && col == 0; ++t)
            if (!std::binary_search(idx.step_cols.begin() + 1, idx.step_cols.end(), t)) col = t;
        if (col == 0) break;
        for (auto& len : profile)
            if (len >= col) --len;
        for (auto& r : cur) r = detail::delete_col(r, col);
    }

    YoungDiagram out(std::move(profile));
    if (!out.is_staircase()) throw Error(ErrorCode::Internal, "compression did not reach a staircase");
    return {std::move(out), std::move(cur)};
}

/// Lifts a cover of Y_z to Y (z steps): row x of Y_z becomes the block of
/// rows (s_{x-1}, s_x], column y the block of columns (t_{y-1}, t_y].
inline Cover expand(const YoungDiagram& y, const Cover& c) {
    const int z = y.num_steps();
    const YoungDiagram canon = staircase(z);
    for (const auto& r : c)
        if (r.max_row() > z || r.max_col() > z)
            throw Error(ErrorCode::StepCountMismatch,
                        "cover does not fit the staircase with " + std::to_string(z) + " steps");
    detail::require_cover(canon, c);

    const auto idx = step_indexing(y);
    Cover out;
    out.reserve(c.size());
    for (const auto& r : c) {
        std::vector<int> rows, cols;
        for (int x : r.rows())
            for (int s = idx.step_rows[static_cast<std::size_t>(x - 1)] + 1; s <= idx.step_rows[static_cast<std::size_t>(x)]; ++s)
                rows.push_back(s);
        for (int v : r.cols())
            for (int t = idx.step_cols[static_cast<std::size_t>(v - 1)] + 1; t <= idx.step_cols[static_cast<std::size_t>(v)]; ++t)
                cols.push_back(t);
        out.emplace_back(std::move(rows), std::move(cols));
    }
    return out;
}

/// Compress then expand; true iff the result covers Y again without
/// exceeding the original row/column maxima.
inline bool roundtrip_check(const YoungDiagram& y, const Cover& c) {
    const auto before = locality(y, c);
    const auto packed = compress(y, c);
    const Cover back = expand(y, packed.cover);
    if (!is_cover(y, back)) return false;
    const auto after = locality(y, back);
    return after.max_row <= before.max_row && after.max_col <= before.max_col;
}

} // namespace ycover
