#pragma once

// Optimal (i,j)-local partitions of Young diagrams into actual rectangles,
// and the exact feasibility threshold z < C(i+j, i).

#include <cstdint>
#include <limits>
#include <vector>

#include "diagram.hpp"
#include "reduction.hpp"

namespace ycover {

struct Budget {
    int i = 1; // rectangles per row
    int j = 1; // rectangles per column
};

/// Exact C(n, k); throws Overflow instead of wrapping.
inline std::int64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (int m = 1; m <= k; ++m) {
        acc = acc * static_cast<unsigned>(n - k + m) / static_cast<unsigned>(m);
        if (acc > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
            throw Error(ErrorCode::Overflow, "C(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds 64 bits");
    }
    return static_cast<std::int64_t>(acc);
}

/// Largest step count admitting an (i,j)-local cover: C(i+j, i) - 1.
inline std::int64_t capacity(int i, int j) {
    require_budget(i, j);
    if (i > std::numeric_limits<int>::max() - j)
        throw Error(ErrorCode::Overflow, "i + j exceeds int range");
    return binomial(i + j, i) - 1;
}

/// Capacities filled through f(i,j) = f(i-1,j) + f(i,j-1) + 1 with
/// f(1,j) = j and f(i,1) = i, for all i + j <= max_sum. Immutable once built.
class CapacityTable {
public:
    explicit CapacityTable(int max_sum) : max_sum_(max_sum) {
        table_.assign(static_cast<std::size_t>(max_sum + 1) * static_cast<std::size_t>(max_sum + 1), -1);
        for (int sum = 2; sum <= max_sum; ++sum)
            for (int i = 1; i < sum; ++i) {
                const int j = sum - i;
                std::int64_t v;
                if (i == 1) v = j;
                else if (j == 1) v = i;
                else {
                    const std::int64_t a = get(i - 1, j), b = get(i, j - 1);
                    if (a > std::numeric_limits<std::int64_t>::max() - b - 1)
                        throw Error(ErrorCode::Overflow, "capacity table entry exceeds 64 bits");
                    v = a + b + 1;
                }
                get(i, j) = v;
            }
    }

    int max_sum() const { return max_sum_; }

    std::int64_t at(int i, int j) const {
        require_budget(i, j);
        if (i + j > max_sum_) throw Error(ErrorCode::IndexOutOfRange, "budget outside the table");
        return table_[index(i, j)];
    }

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(max_sum_ + 1) + static_cast<std::size_t>(j);
    }
    std::int64_t& get(int i, int j) { return table_[index(i, j)]; }

    int max_sum_;
    std::vector<std::int64_t> table_;
};

/// True iff a diagram with z steps has an (i,j)-local cover.
inline bool feasible(int i, int j, std::int64_t z) {
    require_budget(i, j);
    try {
        return z <= capacity(i, j);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Overflow) return true; // capacity beyond any int64 step count
        throw;
    }
}

namespace detail {

// Partition of the copy of Y_{f(i,j)} whose top-left cell sits at
// (row_off + 1, col_off + 1). Emits the splitting block first, then the
// part to its right, then the part below.
inline void build_shifted(int i, int j, int row_off, int col_off, Cover& out) {
    if (i == 1) {
        for (int s = 1; s <= j; ++s)
            out.push_back(GenRect::block(row_off + s, row_off + s, col_off + 1, col_off + j + 1 - s));
        return;
    }
    if (j == 1) {
        for (int t = 1; t <= i; ++t)
            out.push_back(GenRect::block(row_off + 1, row_off + i + 1 - t, col_off + t, col_off + t));
        return;
    }
    const int z = static_cast<int>(capacity(i, j));
    const int a = static_cast<int>(capacity(i - 1, j)) + 1;
    out.push_back(GenRect::block(row_off + 1, row_off + a, col_off + 1, col_off + z + 1 - a));
    build_shifted(i - 1, j, row_off, col_off + z + 1 - a, out);
    build_shifted(i, j - 1, row_off + a, col_off, out);
}

} // namespace detail

/// An (i,j)-local partition of Y_{f(i,j)} into f(i,j) actual rectangles.
inline Cover build_staircase_partition(int i, int j) {
    const std::int64_t z = capacity(i, j);
    if (z > std::numeric_limits<int>::max())
        throw Error(ErrorCode::Overflow, "staircase with " + std::to_string(z) + " steps is not representable");
    Cover out;
    out.reserve(static_cast<std::size_t>(z));
    detail::build_shifted(i, j, 0, 0, out);
    return out;
}

/// Restricts a cover of Y_z to its last z_new rows, shifted up to form a
/// cover of Y_{z_new}. Rectangles left without rows are dropped.
inline Cover restrict_to_suffix(const Cover& c, int z, int z_new) {
    if (z_new < 1 || z_new > z)
        throw Error(ErrorCode::IndexOutOfRange, "suffix length must lie in [1, z]");
    const int shift = z - z_new;
    Cover out;
    for (const auto& r : c) {
        std::vector<int> rows;
        for (int s : r.rows())
            if (s > shift) rows.push_back(s - shift);
        if (rows.empty()) continue;
        out.emplace_back(std::move(rows), r.cols());
    }
    return out;
}

/// Largest staircase built before restriction; larger budgets are first
/// shrunk while they still fit the diagram. The result stays (i,j)-local.
inline constexpr std::int64_t kMaxBuiltStaircase = 4096;

inline Cover build_partition_for(const YoungDiagram& y, int i, int j) {
    require_budget(i, j);
    const int z = y.num_steps();
    if (!feasible(i, j, z))
        throw Error(ErrorCode::Infeasible, std::to_string(z) + " steps exceed the capacity of budget (" +
                                               std::to_string(i) + "," + std::to_string(j) + ")");
    auto too_big = [&](int a, int b) {
        try {
            return capacity(a, b) > kMaxBuiltStaircase;
        } catch (const Error&) {
            return true;
        }
    };
    while (too_big(i, j)) {
        if (i >= j && i > 1 && feasible(i - 1, j, z)) --i;
        else if (j > 1 && feasible(i, j - 1, z)) --j;
        else if (i > 1 && feasible(i - 1, j, z)) --i;
        else break;
    }
    const int full = static_cast<int>(capacity(i, j));
    return expand(y, restrict_to_suffix(build_staircase_partition(i, j), full, z));
}

/// Smallest k with z < C(2k, k).
inline int min_balanced_budget(std::int64_t z) {
    int k = 1;
    while (binomial(2 * k, k) <= z) ++k;
    return k;
}

inline int min_balanced_budget(const YoungDiagram& y) { return min_balanced_budget(y.num_steps()); }

} // namespace ycover
