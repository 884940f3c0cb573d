#pragma once

// Young diagrams stored as row-length profiles, generalized rectangles,
// covers and their row/column usage. All indices are 1-based.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"

namespace ycover {

struct Step {
    int row = 0;
    int col = 0;

    auto operator<=>(const Step&) const = default;
};

class YoungDiagram {
public:
    /// Validates a weakly decreasing profile of positive row lengths.
    explicit YoungDiagram(std::vector<int> row_lengths) : rows_(std::move(row_lengths)) {
        if (rows_.empty())
            throw Error(ErrorCode::EmptyProfile, "a diagram needs at least one row");
        for (std::size_t s = 0; s < rows_.size(); ++s) {
            if (rows_[s] < 1)
                throw Error(ErrorCode::NonPositiveLength,
                            "row " + std::to_string(s + 1) + " has length " + std::to_string(rows_[s]));
            if (s > 0 && rows_[s] > rows_[s - 1])
                throw Error(ErrorCode::NotWeaklyDecreasing,
                            "row " + std::to_string(s + 1) + " is longer than row " + std::to_string(s));
        }
        steps_ = 1;
        for (std::size_t s = 1; s < rows_.size(); ++s)
            if (rows_[s] != rows_[s - 1]) ++steps_;
    }

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return rows_.front(); }
    int num_steps() const { return steps_; }

    int row_length(int s) const { return rows_[static_cast<std::size_t>(s - 1)]; }

    /// Number of rows of length at least t.
    int col_length(int t) const {
        auto it = std::partition_point(rows_.begin(), rows_.end(), [t](int len) { return len >= t; });
        return static_cast<int>(it - rows_.begin());
    }

    bool contains(int s, int t) const {
        return s >= 1 && s <= rows() && t >= 1 && t <= row_length(s);
    }

    std::int64_t cell_count() const {
        std::int64_t n = 0;
        for (int len : rows_) n += len;
        return n;
    }

    std::span<const int> row_lengths() const { return rows_; }

    bool is_staircase() const { return steps_ == rows() && steps_ == cols(); }

    bool operator==(const YoungDiagram& other) const { return rows_ == other.rows_; }

private:
    std::vector<int> rows_;
    int steps_ = 0;
};

inline YoungDiagram make_diagram(std::vector<int> row_lengths) {
    return YoungDiagram(std::move(row_lengths));
}

/// The diagram with z rows, z columns and z steps: row lengths z, z-1, ..., 1.
inline YoungDiagram staircase(int z) {
    if (z < 1) throw Error(ErrorCode::EmptyProfile, "staircase needs z >= 1");
    std::vector<int> rows(static_cast<std::size_t>(z));
    for (int s = 0; s < z; ++s) rows[static_cast<std::size_t>(s)] = z - s;
    return YoungDiagram(std::move(rows));
}

/// Steps sorted by increasing row (hence strictly decreasing column).
inline std::vector<Step> steps(const YoungDiagram& y) {
    std::vector<Step> out;
    out.reserve(static_cast<std::size_t>(y.num_steps()));
    for (int s = 1; s <= y.rows(); ++s)
        if (s == y.rows() || y.row_length(s + 1) < y.row_length(s))
            out.push_back({s, y.row_length(s)});
    return out;
}

/// A product S x T of row and column index sets, kept sorted and deduplicated.
class GenRect {
public:
    GenRect(std::vector<int> rows, std::vector<int> cols) : rows_(std::move(rows)), cols_(std::move(cols)) {
        normalize(rows_);
        normalize(cols_);
        if (rows_.empty() || cols_.empty())
            throw Error(ErrorCode::EmptyRect, "rectangles need nonempty row and column sets");
    }

    /// The actual rectangle [r1, r2] x [c1, c2].
    static GenRect block(int r1, int r2, int c1, int c2) {
        std::vector<int> rows, cols;
        for (int s = r1; s <= r2; ++s) rows.push_back(s);
        for (int t = c1; t <= c2; ++t) cols.push_back(t);
        return GenRect(std::move(rows), std::move(cols));
    }

    const std::vector<int>& rows() const { return rows_; }
    const std::vector<int>& cols() const { return cols_; }

    int min_row() const { return rows_.front(); }
    int max_row() const { return rows_.back(); }
    int min_col() const { return cols_.front(); }
    int max_col() const { return cols_.back(); }

    bool uses_row(int s) const { return std::binary_search(rows_.begin(), rows_.end(), s); }
    bool uses_col(int t) const { return std::binary_search(cols_.begin(), cols_.end(), t); }
    bool contains(int s, int t) const { return uses_row(s) && uses_col(t); }

    bool is_actual() const {
        return max_row() - min_row() + 1 == static_cast<int>(rows_.size()) &&
               max_col() - min_col() + 1 == static_cast<int>(cols_.size());
    }

    std::int64_t size() const {
        return static_cast<std::int64_t>(rows_.size()) * static_cast<std::int64_t>(cols_.size());
    }

    bool operator==(const GenRect&) const = default;

private:
    static void normalize(std::vector<int>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }

    std::vector<int> rows_;
    std::vector<int> cols_;
};

using Cover = std::vector<GenRect>;

inline void require_budget(int i, int j) {
    if (i < 1 || j < 1)
        throw Error(ErrorCode::InvalidBudget, "budgets must be at least 1, got (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

struct LocalityProfile {
    std::vector<int> row_usage; // row_usage[s - 1]
    std::vector<int> col_usage; // col_usage[t - 1]
    int max_row = 0;
    int max_col = 0;

    bool is_local(int i, int j) const { return max_row <= i && max_col <= j; }
};

namespace detail {

inline bool in_range(const YoungDiagram& y, const GenRect& r) {
    return r.min_row() >= 1 && r.max_row() <= y.rows() && r.min_col() >= 1 && r.max_col() <= y.cols();
}

// Downward closure makes the far corner sufficient.
inline bool inside(const YoungDiagram& y, const GenRect& r) {
    return in_range(y, r) && y.contains(r.max_row(), r.max_col());
}

inline void require_inside(const YoungDiagram& y, const Cover& c) {
    for (std::size_t a = 0; a < c.size(); ++a)
        if (!inside(y, c[a]))
            throw Error(ErrorCode::RectOutsideDiagram, "rectangle " + std::to_string(a + 1) + " is not contained in the diagram");
}

} // namespace detail

inline bool rect_in_diagram(const YoungDiagram& y, const GenRect& r) {
    if (!detail::in_range(y, r))
        throw Error(ErrorCode::IndexOutOfRange, "rectangle indices fall outside [r] x [c]");
    return y.contains(r.max_row(), r.max_col());
}

inline LocalityProfile locality(const YoungDiagram& y, const Cover& c) {
    detail::require_inside(y, c);
    LocalityProfile p;
    p.row_usage.assign(static_cast<std::size_t>(y.rows()), 0);
    p.col_usage.assign(static_cast<std::size_t>(y.cols()), 0);
    for (const auto& r : c) {
        for (int s : r.rows()) ++p.row_usage[static_cast<std::size_t>(s - 1)];
        for (int t : r.cols()) ++p.col_usage[static_cast<std::size_t>(t - 1)];
    }
    p.max_row = *std::max_element(p.row_usage.begin(), p.row_usage.end());
    p.max_col = *std::max_element(p.col_usage.begin(), p.col_usage.end());
    return p;
}

namespace detail {

// Multiplicity of each cell, rows laid out back to back.
class CellCounts {
public:
    explicit CellCounts(const YoungDiagram& y) {
        offset_.reserve(static_cast<std::size_t>(y.rows()) + 1);
        std::int64_t off = 0;
        for (int s = 1; s <= y.rows(); ++s) {
            offset_.push_back(off);
            off += y.row_length(s);
        }
        count_.assign(static_cast<std::size_t>(off), 0);
    }

    void add(const GenRect& r) {
        for (int s : r.rows())
            for (int t : r.cols()) ++at(s, t);
    }

    std::uint32_t& at(int s, int t) {
        return count_[static_cast<std::size_t>(offset_[static_cast<std::size_t>(s - 1)] + t - 1)];
    }

    bool all_at_least_one() const {
        return std::all_of(count_.begin(), count_.end(), [](std::uint32_t n) { return n >= 1; });
    }
    bool none_above_one() const {
        return std::all_of(count_.begin(), count_.end(), [](std::uint32_t n) { return n <= 1; });
    }

private:
    std::vector<std::int64_t> offset_;
    std::vector<std::uint32_t> count_;
};

} // namespace detail

inline bool is_cover(const YoungDiagram& y, const Cover& c) {
    detail::require_inside(y, c);
    detail::CellCounts counts(y);
    for (const auto& r : c) counts.add(r);
    return counts.all_at_least_one();
}

inline bool is_partition(const YoungDiagram& y, const Cover& c) {
    detail::require_inside(y, c);
    detail::CellCounts counts(y);
    for (const auto& r : c) counts.add(r);
    return counts.all_at_least_one() && counts.none_above_one();
}

inline bool all_actual(const Cover& c) {
    return std::all_of(c.begin(), c.end(), [](const GenRect& r) { return r.is_actual(); });
}

/// Grid rendering. Without a cover every cell is '#'; with one, each cell
/// shows the 1-based index of the lowest-indexed rectangle containing it
/// ('.' if none does). Cells are separated by one space.
inline std::string render_ascii(const YoungDiagram& y, const Cover* c = nullptr) {
    std::size_t width = 1;
    if (c) width = std::to_string(c->size()).size();
    std::ostringstream out;
    for (int s = 1; s <= y.rows(); ++s) {
        for (int t = 1; t <= y.row_length(s); ++t) {
            std::string cell = "#";
            if (c) {
                cell = ".";
                for (std::size_t a = 0; a < c->size(); ++a)
                    if ((*c)[a].contains(s, t)) {
                        cell = std::to_string(a + 1);
                        break;
                    }
            }
            if (t > 1) out << ' ';
            out << std::string(width - std::min(width, cell.size()), ' ') << cell;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace ycover
