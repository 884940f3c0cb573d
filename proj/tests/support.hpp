#pragma once

// Test-only brute-force oracles and random generators. Nothing here calls
// the search or construction code it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "ycover/diagram.hpp"
#include "ycover/diffgraph.hpp"

namespace ycover::ref {

using Cell = std::pair<int, int>;

inline std::set<Cell> cells_of(const YoungDiagram& y) {
    std::set<Cell> out;
    for (int s = 1; s <= y.rows(); ++s)
        for (int t = 1; t <= y.row_length(s); ++t) out.emplace(s, t);
    return out;
}

inline bool brute_rect_inside(const YoungDiagram& y, const GenRect& r) {
    for (int s : r.rows())
        for (int t : r.cols())
            if (!y.contains(s, t)) return false;
    return true;
}

inline bool brute_is_cover(const YoungDiagram& y, const Cover& c) {
    std::set<Cell> got;
    for (const auto& r : c)
        for (int s : r.rows())
            for (int t : r.cols()) got.emplace(s, t);
    return got == cells_of(y);
}

inline bool brute_is_partition(const YoungDiagram& y, const Cover& c) {
    std::size_t total = 0;
    for (const auto& r : c) total += r.rows().size() * r.cols().size();
    return brute_is_cover(y, c) && total == cells_of(y).size();
}

inline std::pair<int, int> brute_maxima(const Cover& c) {
    std::map<int, int> rows, cols;
    for (const auto& r : c) {
        for (int s : r.rows()) ++rows[s];
        for (int t : r.cols()) ++cols[t];
    }
    int mr = 0, mc = 0;
    for (auto [_, n] : rows) mr = std::max(mr, n);
    for (auto [_, n] : cols) mc = std::max(mc, n);
    return {mr, mc};
}

/// Pascal's triangle, row by row.
inline std::vector<std::vector<std::int64_t>> pascal(int n) {
    std::vector<std::vector<std::int64_t>> t(static_cast<std::size_t>(n + 1));
    for (int a = 0; a <= n; ++a) {
        t[static_cast<std::size_t>(a)].assign(static_cast<std::size_t>(a + 1), 1);
        for (int b = 1; b < a; ++b)
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                t[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] + t[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)];
    }
    return t;
}

/// Every generalized rectangle of Y, as S x T with nonempty S, T.
inline std::vector<GenRect> all_rects(const YoungDiagram& y) {
    std::vector<GenRect> out;
    for (std::uint32_t sm = 1; sm < (1u << y.rows()); ++sm)
        for (std::uint32_t tm = 1; tm < (1u << y.cols()); ++tm) {
            std::vector<int> s, t;
            for (int x = 0; x < y.rows(); ++x)
                if (sm >> x & 1u) s.push_back(x + 1);
            for (int x = 0; x < y.cols(); ++x)
                if (tm >> x & 1u) t.push_back(x + 1);
            GenRect r(s, t);
            if (brute_rect_inside(y, r)) out.push_back(std::move(r));
        }
    return out;
}

/// Exhaustive over all sets of distinct generalized rectangles of Y; only
/// usable for tiny diagrams (Y_3 has 17 rectangles).
inline bool brute_local_cover_exists(const YoungDiagram& y, int i, int j) {
    const auto rects = all_rects(y);
    const std::size_t m = rects.size();
    const auto cells = cells_of(y);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        Cover c;
        for (std::size_t x = 0; x < m; ++x)
            if (mask >> x & 1u) c.push_back(rects[x]);
        const auto [mr, mc] = brute_maxima(c);
        if (mr <= i && mc <= j && brute_is_cover(y, c)) return true;
    }
    return false;
}

/// Random diagram with exactly z steps: z distinct lengths, each used by 1..3 rows.
inline YoungDiagram random_diagram(std::mt19937& rng, int z, int max_len = 9) {
    std::vector<int> pool(static_cast<std::size_t>(std::max(max_len, z)));
    for (std::size_t x = 0; x < pool.size(); ++x) pool[x] = static_cast<int>(x) + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> lengths(pool.begin(), pool.begin() + z);
    std::sort(lengths.rbegin(), lengths.rend());
    std::vector<int> rows;
    std::uniform_int_distribution<int> reps(1, 3);
    for (int len : lengths)
        for (int r = reps(rng); r > 0; --r) rows.push_back(len);
    return YoungDiagram(rows);
}

/// Random rectangle with far corner (s,t): S subset of [s] with s, T subset of [t] with t.
inline GenRect random_rect_at(std::mt19937& rng, int s, int t) {
    std::bernoulli_distribution coin(0.4);
    std::vector<int> rows{s}, cols{t};
    for (int x = 1; x < s; ++x)
        if (coin(rng)) rows.push_back(x);
    for (int x = 1; x < t; ++x)
        if (coin(rng)) cols.push_back(x);
    return GenRect(rows, cols);
}

/// Random cover: a few random rectangles, then one more per uncovered cell.
inline Cover random_cover(std::mt19937& rng, const YoungDiagram& y) {
    Cover c;
    const auto cells = cells_of(y);
    std::vector<Cell> pool(cells.begin(), cells.end());
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> extra(0, 4);
    for (int n = extra(rng); n > 0; --n) {
        const auto [s, t] = pool[pick(rng)];
        c.push_back(random_rect_at(rng, s, t));
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    for (const auto& [s, t] : pool) {
        bool hit = false;
        for (const auto& r : c) hit = hit || r.contains(s, t);
        if (!hit) c.push_back(random_rect_at(rng, s, t));
    }
    std::shuffle(c.begin(), c.end(), rng);
    return c;
}

/// Random difference graph on sides of size ra, rb: nested neighborhoods
/// built from a random threshold per A-vertex, then both sides shuffled.
inline BipartiteGraph random_difference_graph(std::mt19937& rng, int ra, int rb) {
    std::uniform_int_distribution<int> deg(0, rb);
    std::vector<int> a_perm(static_cast<std::size_t>(ra)), b_perm(static_cast<std::size_t>(rb));
    for (int x = 0; x < ra; ++x) a_perm[static_cast<std::size_t>(x)] = x;
    for (int x = 0; x < rb; ++x) b_perm[static_cast<std::size_t>(x)] = x;
    std::shuffle(a_perm.begin(), a_perm.end(), rng);
    std::shuffle(b_perm.begin(), b_perm.end(), rng);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < ra; ++a) {
        const int d = deg(rng);
        for (int b = 0; b < d; ++b) edges.emplace_back(a_perm[static_cast<std::size_t>(a)], b_perm[static_cast<std::size_t>(b)]);
    }
    return BipartiteGraph::with_default_labels(ra, rb, std::move(edges));
}

} // namespace ycover::ref
