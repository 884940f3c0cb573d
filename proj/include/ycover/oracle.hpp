#pragma once

// Exhaustive decision procedure for (i,j)-local coverability, independent
// of the explicit construction.
//
// Search space. Any cover of Y can be merged down to z rectangles without
// raising usage, and a cover of Y transfers to Y_z and back. In Y_z no
// rectangle holds two steps: steps (s,t), (s',t') with s < s' would force
// (s',t) with s' + t > z + 1. So it suffices to pick, for every step
// k = 1..z, one rectangle S_k x T_k with k in S_k subset [k] and
// z+1-k in T_k subset [z+1-k].
//
// Steps are assigned in order k = 1..z. After step k no later rectangle can
// reach column z+1-k, so every row whose cell in that column is still
// uncovered is forced into S_k. Optional extra rows and columns are only
// taken when each of them covers some cell no earlier step covered; any
// solution can be shrunk to that form step by step without losing cells.
// Column b keeps one slot in reserve for its own step z+1-b.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "diagram.hpp"
#include "reduction.hpp"

namespace ycover {

struct SearchCaps {
    std::int64_t max_nodes = 100'000'000;
    int max_z = 8;
};

enum class Verdict { Feasible, Infeasible, Unknown };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Feasible: return "feasible";
    case Verdict::Infeasible: return "infeasible";
    case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

struct FeasibilityReport {
    Verdict verdict = Verdict::Unknown;
    std::optional<Cover> witness;
    std::int64_t nodes_explored = 0;
};

/// Largest staircase the bitmask search can represent.
inline constexpr int kOracleHardMaxZ = 30;

namespace detail {

class StaircaseSearch {
public:
    StaircaseSearch(int z, int i, int j, std::int64_t max_nodes)
        : z_(z), i_(i), j_(j), max_nodes_(max_nodes),
          rows_(static_cast<std::size_t>(z + 2), 0), cols_(static_cast<std::size_t>(z + 2), 0),
          row_use_(static_cast<std::size_t>(z + 2), 0), col_use_(static_cast<std::size_t>(z + 2), 0),
          covered_(static_cast<std::size_t>(z + 2), 0) {}

    Verdict run() {
        if (dfs(1)) return Verdict::Feasible;
        return capped_ ? Verdict::Unknown : Verdict::Infeasible;
    }

    std::int64_t nodes() const { return nodes_; }

    Cover witness() const {
        Cover c;
        for (int k = 1; k <= z_; ++k) c.emplace_back(members(rows_[idx(k)]), members(cols_[idx(k)]));
        return c;
    }

private:
    static std::size_t idx(int k) { return static_cast<std::size_t>(k); }
    static std::uint32_t bit(int x) { return std::uint32_t{1} << (x - 1); }
    static std::uint32_t below(int x) { return bit(x) - 1; } // bits for 1..x-1

    static std::vector<int> members(std::uint32_t mask) {
        std::vector<int> out;
        for (int x = 1; mask; ++x, mask >>= 1)
            if (mask & 1u) out.push_back(x);
        return out;
    }

    struct Choice {
        int size;
        std::uint32_t rows;
        std::uint32_t cols;
    };

    void apply(int k, std::uint32_t rows, std::uint32_t cols, int delta) {
        rows_[idx(k)] = delta > 0 ? rows : 0;
        cols_[idx(k)] = delta > 0 ? cols : 0;
        for (std::uint32_t m = rows; m; m &= m - 1) row_use_[idx(std::countr_zero(m) + 1)] += delta;
        for (std::uint32_t m = cols; m; m &= m - 1) col_use_[idx(std::countr_zero(m) + 1)] += delta;
    }

    // Every cell still uncovered in a row whose own step is done needs a free slot there.
    bool viable_after(int k) const {
        const int b0 = z_ + 1 - k;
        for (int a = 1; a <= k; ++a)
            if ((~covered_[idx(a)] & below(b0)) != 0 && row_use_[idx(a)] >= i_) return false;
        return true;
    }

    std::vector<Choice> choices(int k, std::uint32_t forced) const {
        const int b0 = z_ + 1 - k;
        std::uint32_t extra_rows = 0, extra_cols = 0;
        for (int a = 1; a < k; ++a)
            if (!(forced & bit(a)) && row_use_[idx(a)] < i_) extra_rows |= bit(a);
        for (int b = 1; b < b0; ++b)
            if (col_use_[idx(b)] < j_ - 1) extra_cols |= bit(b);

        std::vector<Choice> out;
        // iterate all submasks of extra_rows and of extra_cols
        std::uint32_t xs = extra_rows;
        for (;;) {
            const std::uint32_t rows = forced | xs;
            std::uint32_t ws = extra_cols;
            for (;;) {
                const std::uint32_t cols = ws | bit(b0);
                if (useful(rows, cols, xs, ws))
                    out.push_back({std::popcount(rows) + std::popcount(cols), rows, cols});
                if (ws == 0) break;
                ws = (ws - 1) & extra_cols;
            }
            if (xs == 0) break;
            xs = (xs - 1) & extra_rows;
        }
        std::sort(out.begin(), out.end(), [](const Choice& x, const Choice& y) {
            if (x.size != y.size) return x.size < y.size;
            if (x.rows != y.rows) return x.rows < y.rows;
            return x.cols < y.cols;
        });
        return out;
    }

    bool useful(std::uint32_t rows, std::uint32_t cols, std::uint32_t xs, std::uint32_t ws) const {
        for (std::uint32_t m = xs; m; m &= m - 1)
            if ((cols & ~covered_[idx(std::countr_zero(m) + 1)]) == 0) return false;
        for (std::uint32_t m = ws; m; m &= m - 1) {
            const std::uint32_t b = m & (~m + 1);
            bool hit = false;
            for (std::uint32_t r = rows; r && !hit; r &= r - 1)
                hit = (covered_[idx(std::countr_zero(r) + 1)] & b) == 0;
            if (!hit) return false;
        }
        return true;
    }

    bool dfs(int k) {
        if (k > z_) return true;
        const int b0 = z_ + 1 - k;
        std::uint32_t forced = 0;
        for (int a = 1; a <= k; ++a)
            if (!(covered_[idx(a)] & bit(b0))) forced |= bit(a);
        for (std::uint32_t m = forced; m; m &= m - 1)
            if (row_use_[idx(std::countr_zero(m) + 1)] >= i_) return false;
        if (col_use_[idx(b0)] >= j_) return false;

        const auto options = choices(k, forced);
        std::vector<std::uint32_t> saved(covered_.begin(), covered_.begin() + k + 1);
        for (const auto& ch : options) {
            if (nodes_ >= max_nodes_) {
                capped_ = true;
                return false;
            }
            ++nodes_;
            apply(k, ch.rows, ch.cols, +1);
            for (std::uint32_t m = ch.rows; m; m &= m - 1) covered_[idx(std::countr_zero(m) + 1)] |= ch.cols;
            if (viable_after(k) && dfs(k + 1)) return true;
            if (capped_) return false;
            apply(k, ch.rows, ch.cols, -1);
            std::copy(saved.begin(), saved.end(), covered_.begin());
        }
        return false;
    }

    int z_, i_, j_;
    std::int64_t max_nodes_;
    std::int64_t nodes_ = 0;
    bool capped_ = false;
    std::vector<std::uint32_t> rows_, cols_;
    std::vector<int> row_use_, col_use_;
    std::vector<std::uint32_t> covered_; // covered_[a]: covered columns of row a
};

} // namespace detail

/// True iff C covers Y and uses each row at most i times and each column at most j times.
inline bool check_witness(const YoungDiagram& y, const Cover& c, int i, int j) {
    if (c.empty()) return false;
    for (const auto& r : c)
        if (!detail::inside(y, r)) return false;
    return is_cover(y, c) && locality(y, c).is_local(i, j);
}

inline FeasibilityReport exists_local_cover(const YoungDiagram& y, int i, int j, const SearchCaps& caps = {}) {
    require_budget(i, j);
    FeasibilityReport report;
    const int z = y.num_steps();
    if (z > caps.max_z || z > kOracleHardMaxZ) return report;

    detail::StaircaseSearch search(z, i, j, caps.max_nodes);
    report.verdict = search.run();
    report.nodes_explored = search.nodes();
    if (report.verdict == Verdict::Feasible) {
        Cover w = expand(y, search.witness());
        if (!check_witness(y, w, i, j))
            throw Error(ErrorCode::Internal, "search produced an invalid witness");
        report.witness = std::move(w);
    }
    return report;
}

/// Smallest k whose (k,k) search succeeds, or nullopt once any search is capped.
inline std::optional<int> min_balanced_budget_oracle(const YoungDiagram& y, const SearchCaps& caps = {}) {
    for (int k = 1;; ++k) {
        const auto rep = exists_local_cover(y, k, k, caps);
        if (rep.verdict == Verdict::Feasible) return k;
        if (rep.verdict == Verdict::Unknown) return std::nullopt;
    }
}

} // namespace ycover
