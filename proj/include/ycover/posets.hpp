#pragma once

// Finite posets, splits, incomparability graphs of height-two posets,
// local realizers, exact local dimension for small posets, and the bounds on
// local dimension obtained from local cover numbers.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diffgraph.hpp"
#include "oracle.hpp"

namespace ycover {

/// Elements are 0-based; labels are for I/O only.
class Poset {
public:
    Poset(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& strict_pairs)
        : labels_(std::move(labels)), n_(static_cast<int>(labels_.size())),
          less_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0) {
        for (const auto& [x, y] : strict_pairs) {
            if (x < 0 || x >= n_ || y < 0 || y >= n_)
                throw Error(ErrorCode::IndexOutOfRange, "relation mentions an element outside the poset");
            at(x, y) = 1;
        }
        for (int m = 0; m < n_; ++m)
            for (int x = 0; x < n_; ++x)
                if (at(x, m))
                    for (int y = 0; y < n_; ++y)
                        if (at(m, y)) at(x, y) = 1;
        for (int x = 0; x < n_; ++x)
            if (at(x, x)) throw Error(ErrorCode::CycleDetected, "relations force " + labels_[static_cast<std::size_t>(x)] + " below itself");
    }

    int size() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool less(int x, int y) const { return at(x, y) != 0; }
    bool leq(int x, int y) const { return x == y || less(x, y); }
    bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }
    bool incomparable(int x, int y) const { return !comparable(x, y); }

    std::vector<std::pair<int, int>> strict_relations() const {
        std::vector<std::pair<int, int>> out;
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y)
                if (less(x, y)) out.emplace_back(x, y);
        return out;
    }

    /// Transitive reduction.
    std::vector<std::pair<int, int>> cover_relations() const {
        std::vector<std::pair<int, int>> out;
        for (auto [x, y] : strict_relations()) {
            bool direct = true;
            for (int m = 0; m < n_ && direct; ++m)
                if (less(x, m) && less(m, y)) direct = false;
            if (direct) out.emplace_back(x, y);
        }
        return out;
    }

    /// Number of elements in a longest chain.
    int height() const {
        if (n_ == 0) return 0;
        // elements sorted by number of predecessors form a linear extension
        std::vector<int> order(static_cast<std::size_t>(n_));
        for (int x = 0; x < n_; ++x) order[static_cast<std::size_t>(x)] = x;
        auto preds = [&](int x) {
            int c = 0;
            for (int m = 0; m < n_; ++m) c += less(m, x);
            return c;
        };
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return preds(x) < preds(y); });
        std::vector<int> longest(static_cast<std::size_t>(n_), 1);
        for (int y : order)
            for (int x = 0; x < n_; ++x)
                if (less(x, y))
                    longest[static_cast<std::size_t>(y)] = std::max(longest[static_cast<std::size_t>(y)], longest[static_cast<std::size_t>(x)] + 1);
        return *std::max_element(longest.begin(), longest.end());
    }

    bool is_minimal(int x) const {
        for (int m = 0; m < n_; ++m)
            if (less(m, x)) return false;
        return true;
    }

private:
    char& at(int x, int y) { return less_[static_cast<std::size_t>(x * n_ + y)]; }
    char at(int x, int y) const { return less_[static_cast<std::size_t>(x * n_ + y)]; }

    std::vector<std::string> labels_;
    int n_;
    std::vector<char> less_;
};

/// Poset on labels "1".."n" from 1-based strict pairs (u,v) meaning u < v.
inline Poset make_poset(int n, const std::vector<std::pair<int, int>>& strict_pairs) {
    if (n < 0) throw Error(ErrorCode::IndexOutOfRange, "negative element count");
    std::vector<std::string> labels;
    for (int x = 1; x <= n; ++x) labels.push_back(std::to_string(x));
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [u, v] : strict_pairs) pairs.emplace_back(u - 1, v - 1);
    return Poset(std::move(labels), pairs);
}

/// Height-two poset on copies x' (index x) and x'' (index n + x) with
/// x' < y'' exactly when x <= y.
inline Poset split(const Poset& p) {
    const int n = p.size();
    std::vector<std::string> labels;
    for (int x = 0; x < n; ++x) labels.push_back(p.labels()[static_cast<std::size_t>(x)] + "'");
    for (int x = 0; x < n; ++x) labels.push_back(p.labels()[static_cast<std::size_t>(x)] + "''");
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (p.leq(x, y)) pairs.emplace_back(x, n + y);
    return Poset(std::move(labels), pairs);
}

/// Bipartite graph between the minimal elements (side A) and all other
/// elements (side B), joining incomparable pairs.
inline BipartiteGraph critical_graph(const Poset& p) {
    if (p.height() > 2) throw Error(ErrorCode::NotHeightTwo, "poset has height " + std::to_string(p.height()));
    std::vector<int> mins, rest;
    for (int x = 0; x < p.size(); ++x) (p.is_minimal(x) ? mins : rest).push_back(x);
    std::vector<std::string> a_labels, b_labels;
    for (int x : mins) a_labels.push_back(p.labels()[static_cast<std::size_t>(x)]);
    for (int y : rest) b_labels.push_back(p.labels()[static_cast<std::size_t>(y)]);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t a = 0; a < mins.size(); ++a)
        for (std::size_t b = 0; b < rest.size(); ++b)
            if (p.incomparable(mins[a], rest[b])) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return BipartiteGraph(std::move(a_labels), std::move(b_labels), std::move(edges));
}

using PartialLinearExtension = std::vector<int>;
using LocalRealizer = std::vector<PartialLinearExtension>;

inline bool is_partial_linear_extension(const Poset& p, const PartialLinearExtension& l) {
    for (int x : l)
        if (x < 0 || x >= p.size()) throw Error(ErrorCode::ForeignElement, "element " + std::to_string(x + 1) + " is not in the poset");
    for (std::size_t u = 0; u < l.size(); ++u)
        for (std::size_t v = u + 1; v < l.size(); ++v)
            if (l[u] == l[v] || p.less(l[v], l[u])) return false;
    return true;
}

/// Every comparability x < y appears in some extension, every incomparable
/// pair appears in both orders, and each element lies in at most k extensions.
inline bool check_local_realizer(const Poset& p, const LocalRealizer& realizer, int k) {
    if (realizer.empty()) return false;
    const int n = p.size();
    std::vector<char> before(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    std::vector<int> mult(static_cast<std::size_t>(n), 0);
    for (const auto& l : realizer) {
        if (!is_partial_linear_extension(p, l)) return false;
        for (std::size_t u = 0; u < l.size(); ++u) {
            ++mult[static_cast<std::size_t>(l[u])];
            for (std::size_t v = u + 1; v < l.size(); ++v) before[static_cast<std::size_t>(l[u] * n + l[v])] = 1;
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            const bool need = p.less(x, y) || p.incomparable(x, y);
            if (need && !before[static_cast<std::size_t>(x * n + y)]) return false;
        }
    return std::all_of(mult.begin(), mult.end(), [k](int m) { return m <= k; });
}

struct LdimResult {
    std::optional<int> value;
    LocalRealizer witness;
    std::int64_t nodes_explored = 0;
};

inline constexpr int kLdimMaxElements = 6;

namespace detail {

// Ordered pairs (x,y) that some extension must show with x before y are
// "demands". Branches on the unmet demand with the fewest usable
// extensions; an extension whose subtree failed is banned for later siblings.
class RealizerSearch {
public:
    RealizerSearch(const Poset& p, std::int64_t max_nodes) : p_(p), n_(p.size()), max_nodes_(max_nodes) {
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y)
                if (x != y && (p.less(x, y) || p.incomparable(x, y))) required_ |= pair_bit(x, y);
        for (std::uint32_t subset = 1; subset < (1u << n_); ++subset) {
            if (std::popcount(subset) < 2) continue;
            PartialLinearExtension seq;
            extend(subset, seq);
        }
        std::sort(ples_.begin(), ples_.end(), [](const Ple& a, const Ple& b) {
            const int pa = std::popcount(a.demands), pb = std::popcount(b.demands);
            if (pa != pb) return pa > pb;
            return a.seq < b.seq;
        });
        by_demand_.assign(static_cast<std::size_t>(n_ * n_), {});
        for (std::size_t c = 0; c < ples_.size(); ++c)
            for (std::uint64_t d = ples_[c].demands; d; d &= d - 1)
                by_demand_[static_cast<std::size_t>(std::countr_zero(d))].push_back(c);
    }

    bool has_demands() const { return required_ != 0; }

    Verdict run(int k) {
        k_ = k;
        use_.assign(static_cast<std::size_t>(n_), 0);
        banned_.assign(ples_.size(), 0);
        chosen_.clear();
        capped_ = false;
        if (dfs(0)) return Verdict::Feasible;
        return capped_ ? Verdict::Unknown : Verdict::Infeasible;
    }

    std::int64_t nodes() const { return nodes_; }

    LocalRealizer witness() const {
        LocalRealizer out;
        for (std::size_t c : chosen_) out.push_back(ples_[c].seq);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    struct Ple {
        PartialLinearExtension seq;
        std::uint32_t elems;
        std::uint64_t demands;
    };

    std::uint64_t pair_bit(int x, int y) const { return std::uint64_t{1} << (x * n_ + y); }

    void extend(std::uint32_t remaining, PartialLinearExtension& seq) {
        if (remaining == 0) {
            Ple ple{seq, 0, 0};
            for (std::size_t u = 0; u < seq.size(); ++u) {
                ple.elems |= 1u << seq[u];
                for (std::size_t v = u + 1; v < seq.size(); ++v) ple.demands |= pair_bit(seq[u], seq[v]);
            }
            ple.demands &= required_;
            if (ple.demands) ples_.push_back(std::move(ple));
            return;
        }
        for (std::uint32_t m = remaining; m; m &= m - 1) {
            const int x = std::countr_zero(m);
            bool ready = true;
            for (std::uint32_t r = remaining; r && ready; r &= r - 1)
                if (p_.less(std::countr_zero(r), x)) ready = false;
            if (!ready) continue;
            seq.push_back(x);
            extend(remaining & ~(1u << x), seq);
            seq.pop_back();
        }
    }

    bool usable(std::size_t c) const {
        if (banned_[c]) return false;
        for (std::uint32_t e = ples_[c].elems; e; e &= e - 1)
            if (use_[static_cast<std::size_t>(std::countr_zero(e))] >= k_) return false;
        return true;
    }

    void apply(std::size_t c, int delta) {
        for (std::uint32_t e = ples_[c].elems; e; e &= e - 1) use_[static_cast<std::size_t>(std::countr_zero(e))] += delta;
    }

    bool dfs(std::uint64_t met) {
        if ((met & required_) == required_) return true;
        int best = -1;
        std::size_t best_count = 0;
        for (std::uint64_t d = required_ & ~met; d; d &= d - 1) {
            const int idx = std::countr_zero(d);
            std::size_t count = 0;
            for (std::size_t c : by_demand_[static_cast<std::size_t>(idx)])
                if (usable(c)) ++count;
            if (count == 0) return false;
            if (best < 0 || count < best_count) {
                best = idx;
                best_count = count;
            }
        }
        std::vector<std::size_t> tried;
        bool found = false;
        for (std::size_t c : by_demand_[static_cast<std::size_t>(best)]) {
            if (!usable(c)) continue;
            if (nodes_ >= max_nodes_) {
                capped_ = true;
                break;
            }
            ++nodes_;
            apply(c, +1);
            chosen_.push_back(c);
            if (dfs(met | ples_[c].demands)) {
                found = true;
                break;
            }
            chosen_.pop_back();
            apply(c, -1);
            if (capped_) break;
            banned_[c] = 1;
            tried.push_back(c);
        }
        for (std::size_t c : tried) banned_[c] = 0;
        return found;
    }

    const Poset& p_;
    int n_;
    std::int64_t max_nodes_;
    std::uint64_t required_ = 0;
    std::vector<Ple> ples_;
    std::vector<std::vector<std::size_t>> by_demand_;
    int k_ = 0;
    std::int64_t nodes_ = 0;
    bool capped_ = false;
    std::vector<int> use_;
    std::vector<char> banned_;
    std::vector<std::size_t> chosen_;
};

} // namespace detail

/// Exact local dimension by iterative deepening on k. Posets larger than
/// kLdimMaxElements are refused with an unknown value.
inline LdimResult ldim_brute(const Poset& p, const SearchCaps& caps = {}) {
    LdimResult res;
    if (p.size() == 0 || p.size() > kLdimMaxElements) return res;
    detail::RealizerSearch search(p, caps.max_nodes);
    if (!search.has_demands()) {
        res.value = 1;
        res.witness = {{0}};
        return res;
    }
    for (int k = 1; k <= 2 * p.size(); ++k) {
        const Verdict v = search.run(k);
        res.nodes_explored = search.nodes();
        if (v == Verdict::Unknown) return res;
        if (v == Verdict::Feasible) {
            res.value = k;
            res.witness = search.witness();
            return res;
        }
    }
    throw Error(ErrorCode::Internal, "no local realizer found");
}

struct LdimBounds {
    int lower = 1;
    std::optional<int> upper;
    std::vector<std::string> trace;
};

namespace detail {

inline std::string describe(const CoverNumberReport& r, const std::string& graph) {
    std::string s = std::string("cn_") + (r.kind == CoverKind::CB ? "CB" : "D") + "(" + graph + ") = ";
    s += r.value ? std::to_string(*r.value) : std::string("unknown");
    return s + " [" + to_string(r.method) + "]";
}

} // namespace detail

/// Height <= 2: max(1, cn_D(G_P) - 2) <= ldim(P) <= cn_CB(G_P) + 2.
/// Otherwise, through the split Q: max(1, cn_D(G_Q) - 4) <= ldim(P) <= 2 (cn_CB(G_Q) + 2) - 1.
inline LdimBounds ldim_bounds(const Poset& p, const SearchCaps& caps = {}) {
    LdimBounds out;
    const bool direct = p.height() <= 2;
    const std::string name = direct ? "G_P" : "G_Q";
    BipartiteGraph g = [&] {
        if (direct) return critical_graph(p);
        out.trace.push_back("height " + std::to_string(p.height()) + " > 2: using the split Q with " +
                            std::to_string(2 * p.size()) + " elements");
        return critical_graph(split(p));
    }();
    out.trace.push_back(name + ": |A| = " + std::to_string(g.size_a()) + ", |B| = " + std::to_string(g.size_b()) +
                        ", |E| = " + std::to_string(g.num_edges()) +
                        (is_difference(g).is_difference() ? ", difference graph" : ""));

    const auto cn_d = local_cover_number(g, CoverKind::D, caps);
    const auto cn_cb = local_cover_number(g, CoverKind::CB, caps);
    out.trace.push_back(detail::describe(cn_d, name));
    out.trace.push_back(detail::describe(cn_cb, name));

    const int slack = direct ? 2 : 4;
    if (cn_d.value) {
        out.lower = std::max(1, *cn_d.value - slack);
        out.trace.push_back("lower = max(1, cn_D(" + name + ") - " + std::to_string(slack) + ") = " + std::to_string(out.lower));
    } else {
        out.trace.push_back("lower = 1 (cn_D unknown)");
    }
    if (cn_cb.value) {
        if (direct) {
            out.upper = *cn_cb.value + 2;
            out.trace.push_back("upper = cn_CB(G_P) + 2 = " + std::to_string(*out.upper));
        } else {
            out.upper = 2 * (*cn_cb.value + 2) - 1;
            out.trace.push_back("ldim(Q) <= cn_CB(G_Q) + 2 = " + std::to_string(*cn_cb.value + 2));
            out.trace.push_back("upper = 2 ldim(Q) - 1 <= " + std::to_string(*out.upper));
        }
    } else {
        out.trace.push_back("upper = unknown (cn_CB unknown)");
    }
    return out;
}

} // namespace ycover
