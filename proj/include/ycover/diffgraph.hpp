#pragma once

// Bipartite graphs, difference-graph recognition, the correspondence with
// Young diagrams, and local covering numbers by complete bipartite graphs
// (CB) and by difference graphs (D).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "constructor.hpp"
#include "diagram.hpp"
#include "oracle.hpp"

namespace ycover {

/// Vertices are 0-based within each side; labels are for I/O only.
class BipartiteGraph {
public:
    BipartiteGraph(std::vector<std::string> a_labels, std::vector<std::string> b_labels,
                   std::vector<std::pair<int, int>> edges)
        : a_labels_(std::move(a_labels)), b_labels_(std::move(b_labels)), edges_(std::move(edges)) {
        for (const auto& [a, b] : edges_)
            if (a < 0 || a >= size_a() || b < 0 || b >= size_b())
                throw Error(ErrorCode::IndexOutOfRange, "edge endpoint outside the vertex sets");
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        nbr_a_.assign(a_labels_.size(), {});
        nbr_b_.assign(b_labels_.size(), {});
        for (const auto& [a, b] : edges_) {
            nbr_a_[static_cast<std::size_t>(a)].push_back(b);
            nbr_b_[static_cast<std::size_t>(b)].push_back(a);
        }
        for (auto& n : nbr_b_) std::sort(n.begin(), n.end());
    }

    /// Labels a1..ar and b1..bc.
    static BipartiteGraph with_default_labels(int r, int c, std::vector<std::pair<int, int>> edges) {
        std::vector<std::string> a, b;
        for (int x = 1; x <= r; ++x) a.push_back("a" + std::to_string(x));
        for (int x = 1; x <= c; ++x) b.push_back("b" + std::to_string(x));
        return BipartiteGraph(std::move(a), std::move(b), std::move(edges));
    }

    int size_a() const { return static_cast<int>(a_labels_.size()); }
    int size_b() const { return static_cast<int>(b_labels_.size()); }
    int num_vertices() const { return size_a() + size_b(); }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::string>& a_labels() const { return a_labels_; }
    const std::vector<std::string>& b_labels() const { return b_labels_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const std::vector<int>& neighbors_a(int a) const { return nbr_a_[static_cast<std::size_t>(a)]; }
    const std::vector<int>& neighbors_b(int b) const { return nbr_b_[static_cast<std::size_t>(b)]; }
    int degree_a(int a) const { return static_cast<int>(neighbors_a(a).size()); }
    int degree_b(int b) const { return static_cast<int>(neighbors_b(b).size()); }

    bool adjacent(int a, int b) const {
        const auto& n = neighbors_a(a);
        return std::binary_search(n.begin(), n.end(), b);
    }

    bool operator==(const BipartiteGraph&) const = default;

private:
    std::vector<std::string> a_labels_, b_labels_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> nbr_a_, nbr_b_;
};

struct DifferenceCertificate {
    /// side-A vertices with weakly nesting neighborhoods, when one exists
    std::optional<std::vector<int>> ordering;
    /// two side-A vertices with incomparable neighborhoods otherwise
    std::optional<std::pair<int, int>> violation;

    bool is_difference() const { return ordering.has_value(); }
};

namespace detail {

// Degree descending, ties by vertex index (declaration order of labels).
template <class Degree>
std::vector<int> by_degree(int n, Degree degree) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return degree(x) > degree(y); });
    return order;
}

} // namespace detail

inline DifferenceCertificate is_difference(const BipartiteGraph& h) {
    const auto order = detail::by_degree(h.size_a(), [&](int a) { return h.degree_a(a); });
    for (std::size_t x = 1; x < order.size(); ++x) {
        const auto& prev = h.neighbors_a(order[x - 1]);
        const auto& cur = h.neighbors_a(order[x]);
        if (!std::includes(prev.begin(), prev.end(), cur.begin(), cur.end()))
            return {std::nullopt, std::make_pair(order[x - 1], order[x])};
    }
    return {order, std::nullopt};
}

/// A difference graph laid out as a Young diagram: row s is side-A vertex
/// row_vertex[s-1], column t is side-B vertex col_vertex[t-1]. Vertices of
/// degree zero have no row or column and are listed as dropped.
struct DiagramEmbedding {
    YoungDiagram diagram;
    std::vector<int> row_vertex;
    std::vector<int> col_vertex;
    std::vector<int> dropped_a;
    std::vector<int> dropped_b;
};

inline DiagramEmbedding to_young(const BipartiteGraph& h) {
    const auto cert = is_difference(h);
    if (!cert.is_difference()) {
        const auto [x, y] = *cert.violation;
        throw Error(ErrorCode::NotADifferenceGraph, "neighborhoods of " + h.a_labels()[static_cast<std::size_t>(x)] +
                                                        " and " + h.a_labels()[static_cast<std::size_t>(y)] + " are incomparable");
    }
    if (h.num_edges() == 0) throw Error(ErrorCode::EmptyProfile, "a graph without edges has no diagram");

    std::vector<int> rows, cols, dropped_a, dropped_b, lengths;
    for (int a : *cert.ordering) {
        if (h.degree_a(a) == 0) dropped_a.push_back(a);
        else {
            rows.push_back(a);
            lengths.push_back(h.degree_a(a));
        }
    }
    for (int b : detail::by_degree(h.size_b(), [&](int b) { return h.degree_b(b); })) {
        if (h.degree_b(b) == 0) dropped_b.push_back(b);
        else cols.push_back(b);
    }
    std::sort(dropped_a.begin(), dropped_a.end());
    std::sort(dropped_b.begin(), dropped_b.end());

    YoungDiagram y(lengths);
    for (int s = 1; s <= y.rows(); ++s)
        for (int t = 1; t <= y.cols(); ++t)
            if (h.adjacent(rows[static_cast<std::size_t>(s - 1)], cols[static_cast<std::size_t>(t - 1)]) != y.contains(s, t))
                throw Error(ErrorCode::Internal, "degree-sorted adjacency support is not a Young diagram");
    return {std::move(y), std::move(rows), std::move(cols), std::move(dropped_a), std::move(dropped_b)};
}

/// Rows become a1..ar, columns b1..bc, cells become edges.
inline BipartiteGraph from_young(const YoungDiagram& y) {
    std::vector<std::pair<int, int>> edges;
    for (int s = 1; s <= y.rows(); ++s)
        for (int t = 1; t <= y.row_length(s); ++t) edges.emplace_back(s - 1, t - 1);
    return BipartiteGraph::with_default_labels(y.rows(), y.cols(), std::move(edges));
}

/// Number of distinct nonzero degrees on side A.
inline int steps_of(const BipartiteGraph& h) {
    if (!is_difference(h).is_difference())
        throw Error(ErrorCode::NotADifferenceGraph, "steps are only defined for difference graphs");
    std::set<int> degrees;
    for (int a = 0; a < h.size_a(); ++a)
        if (h.degree_a(a) > 0) degrees.insert(h.degree_a(a));
    return static_cast<int>(degrees.size());
}

enum class CoverKind { CB, D };
enum class CoverMethod { Formula, BruteForce };

inline const char* to_string(CoverKind k) { return k == CoverKind::CB ? "cb" : "d"; }
inline const char* to_string(CoverMethod m) { return m == CoverMethod::Formula ? "formula" : "brute-force"; }

/// A subgraph of H given by its edges; a and b list the touched vertices.
struct Subgraph {
    std::vector<int> a;
    std::vector<int> b;
    std::vector<std::pair<int, int>> edges;

    static Subgraph from_edges(std::vector<std::pair<int, int>> edges) {
        Subgraph g;
        std::sort(edges.begin(), edges.end());
        for (const auto& [x, y] : edges) {
            g.a.push_back(x);
            g.b.push_back(y);
        }
        for (auto* v : {&g.a, &g.b}) {
            std::sort(v->begin(), v->end());
            v->erase(std::unique(v->begin(), v->end()), v->end());
        }
        g.edges = std::move(edges);
        return g;
    }

    static Subgraph biclique(std::vector<int> a, std::vector<int> b) {
        std::vector<std::pair<int, int>> edges;
        for (int x : a)
            for (int y : b) edges.emplace_back(x, y);
        return from_edges(std::move(edges));
    }

    bool operator==(const Subgraph&) const = default;
};

struct CoverNumberReport {
    CoverKind kind = CoverKind::CB;
    std::optional<int> value;
    CoverMethod method = CoverMethod::Formula;
    std::vector<Subgraph> witness;
    std::int64_t nodes_explored = 0;
};

inline bool is_biclique(const BipartiteGraph& h, const Subgraph& g) {
    for (int x : g.a)
        for (int y : g.b)
            if (!h.adjacent(x, y)) return false;
    return g.edges.size() == g.a.size() * g.b.size();
}

/// Class membership of an edge subgraph: nested side-A neighborhoods.
inline bool is_difference_subgraph(const Subgraph& g) {
    std::vector<std::vector<int>> nbrs;
    for (int x : g.a) {
        std::vector<int> n;
        for (const auto& [p, q] : g.edges)
            if (p == x) n.push_back(q);
        nbrs.push_back(std::move(n));
    }
    std::sort(nbrs.begin(), nbrs.end(), [](const auto& p, const auto& q) { return p.size() > q.size(); });
    for (std::size_t x = 1; x < nbrs.size(); ++x)
        if (!std::includes(nbrs[x - 1].begin(), nbrs[x - 1].end(), nbrs[x].begin(), nbrs[x].end())) return false;
    return true;
}

/// The subgraphs cover every edge of H, touch each vertex at most k times,
/// use only edges of H, and each belongs to the class.
inline bool check_local_cover(const BipartiteGraph& h, const std::vector<Subgraph>& witness, int k, CoverKind kind) {
    std::set<std::pair<int, int>> seen;
    std::vector<int> use_a(static_cast<std::size_t>(h.size_a()), 0), use_b(static_cast<std::size_t>(h.size_b()), 0);
    for (const auto& g : witness) {
        if (g.edges.empty()) return false;
        for (const auto& [x, y] : g.edges) {
            if (x < 0 || x >= h.size_a() || y < 0 || y >= h.size_b() || !h.adjacent(x, y)) return false;
            seen.emplace(x, y);
        }
        if (kind == CoverKind::CB ? !is_biclique(h, g) : !is_difference_subgraph(g)) return false;
        for (int x : g.a) ++use_a[static_cast<std::size_t>(x)];
        for (int y : g.b) ++use_b[static_cast<std::size_t>(y)];
    }
    if (seen.size() != h.edges().size()) return false;
    const auto over = [k](int u) { return u > k; };
    return std::none_of(use_a.begin(), use_a.end(), over) && std::none_of(use_b.begin(), use_b.end(), over);
}

/// Rectangles of the embedded diagram, read back as bicliques of H.
inline std::vector<Subgraph> bicliques_from_rects(const DiagramEmbedding& emb, const Cover& c) {
    std::vector<Subgraph> out;
    out.reserve(c.size());
    for (const auto& r : c) {
        std::vector<int> a, b;
        for (int s : r.rows()) a.push_back(emb.row_vertex[static_cast<std::size_t>(s - 1)]);
        for (int t : r.cols()) b.push_back(emb.col_vertex[static_cast<std::size_t>(t - 1)]);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        out.push_back(Subgraph::biclique(std::move(a), std::move(b)));
    }
    return out;
}

/// Exact local biclique cover number of a difference graph: the smallest k
/// with z < C(2k, k), z its number of steps, with a witness translated from
/// the optimal rectangle partition.
inline CoverNumberReport cn_cb_difference(const BipartiteGraph& h) {
    CoverNumberReport rep;
    rep.kind = CoverKind::CB;
    rep.method = CoverMethod::Formula;
    if (!is_difference(h).is_difference())
        throw Error(ErrorCode::NotADifferenceGraph, "the closed form needs a difference graph");
    if (h.num_edges() == 0) {
        rep.value = 0;
        return rep;
    }
    const auto emb = to_young(h);
    const int k = min_balanced_budget(emb.diagram);
    rep.value = k;
    rep.witness = bicliques_from_rects(emb, build_partition_for(emb.diagram, k, k));
    return rep;
}

/// Largest inputs accepted by the brute-force cover search.
inline constexpr int kBruteMaxVerticesCB = 12;
inline constexpr int kBruteMaxEdgesD = 16;

namespace detail {

class LocalCoverSearch {
public:
    struct Candidate {
        std::uint64_t edges;
        std::uint64_t verts;
    };

    LocalCoverSearch(const BipartiteGraph& h, CoverKind kind, std::int64_t max_nodes)
        : h_(h), max_nodes_(max_nodes), m_(h.num_edges()) {
        build_candidates(kind);
        std::sort(cands_.begin(), cands_.end(), [](const Candidate& x, const Candidate& y) {
            const int px = std::popcount(x.edges), py = std::popcount(y.edges);
            if (px != py) return px > py;
            return x.edges < y.edges;
        });
        by_edge_.assign(static_cast<std::size_t>(m_), {});
        for (std::size_t c = 0; c < cands_.size(); ++c)
            for (std::uint64_t e = cands_[c].edges; e; e &= e - 1)
                by_edge_[static_cast<std::size_t>(std::countr_zero(e))].push_back(c);
    }

    /// Feasible / Infeasible / Unknown for vertex budget k.
    Verdict run(int k) {
        k_ = k;
        use_.assign(static_cast<std::size_t>(h_.num_vertices()), 0);
        banned_.assign(cands_.size(), 0);
        chosen_.clear();
        capped_ = false;
        const std::uint64_t all = m_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m_) - 1;
        if (dfs(0, all)) return Verdict::Feasible;
        return capped_ ? Verdict::Unknown : Verdict::Infeasible;
    }

    std::int64_t nodes() const { return nodes_; }

    std::vector<Subgraph> witness() const {
        std::vector<Subgraph> out;
        for (std::size_t c : chosen_) {
            std::vector<std::pair<int, int>> edges;
            for (std::uint64_t e = cands_[c].edges; e; e &= e - 1)
                edges.push_back(h_.edges()[static_cast<std::size_t>(std::countr_zero(e))]);
            out.push_back(Subgraph::from_edges(std::move(edges)));
        }
        return out;
    }

private:
    std::uint64_t vertex_mask(std::uint64_t edges) const {
        std::uint64_t v = 0;
        for (; edges; edges &= edges - 1) {
            const auto& [a, b] = h_.edges()[static_cast<std::size_t>(std::countr_zero(edges))];
            v |= std::uint64_t{1} << a;
            v |= std::uint64_t{1} << (h_.size_a() + b);
        }
        return v;
    }

    int edge_index(int a, int b) const {
        const auto& es = h_.edges();
        return static_cast<int>(std::lower_bound(es.begin(), es.end(), std::make_pair(a, b)) - es.begin());
    }

    void build_candidates(CoverKind kind) {
        const int ra = h_.size_a(), rb = h_.size_b();
        if (kind == CoverKind::CB) {
            for (std::uint32_t sa = 1; sa < (1u << ra); ++sa)
                for (std::uint32_t sb = 1; sb < (1u << rb); ++sb) {
                    std::uint64_t edges = 0;
                    bool full = true;
                    for (std::uint32_t x = sa; x && full; x &= x - 1)
                        for (std::uint32_t y = sb; y && full; y &= y - 1) {
                            const int a = std::countr_zero(x), b = std::countr_zero(y);
                            if (!h_.adjacent(a, b)) full = false;
                            else edges |= std::uint64_t{1} << edge_index(a, b);
                        }
                    if (full) cands_.push_back({edges, vertex_mask(edges)});
                }
            return;
        }
        for (std::uint64_t edges = 1; edges < (std::uint64_t{1} << m_); ++edges) {
            // side-A neighborhoods as masks over side B must form a chain
            std::vector<std::uint32_t> nbr(static_cast<std::size_t>(ra), 0);
            for (std::uint64_t e = edges; e; e &= e - 1) {
                const auto& [a, b] = h_.edges()[static_cast<std::size_t>(std::countr_zero(e))];
                nbr[static_cast<std::size_t>(a)] |= 1u << b;
            }
            std::sort(nbr.begin(), nbr.end(), [](std::uint32_t p, std::uint32_t q) { return std::popcount(p) > std::popcount(q); });
            bool chain = true;
            for (std::size_t x = 1; x < nbr.size() && chain; ++x) chain = (nbr[x] & ~nbr[x - 1]) == 0;
            if (chain) cands_.push_back({edges, vertex_mask(edges)});
        }
        (void)rb;
    }

    bool usable(std::size_t c) const {
        if (banned_[c]) return false;
        for (std::uint64_t v = cands_[c].verts; v; v &= v - 1)
            if (use_[static_cast<std::size_t>(std::countr_zero(v))] >= k_) return false;
        return true;
    }

    void apply(std::size_t c, int delta) {
        for (std::uint64_t v = cands_[c].verts; v; v &= v - 1) use_[static_cast<std::size_t>(std::countr_zero(v))] += delta;
    }

    // Branch on the uncovered edge with the fewest usable candidates; a
    // candidate whose subtree failed is banned for its later siblings.
    bool dfs(std::uint64_t covered, std::uint64_t all) {
        if (covered == all) return true;
        int best = -1;
        std::size_t best_count = 0;
        for (std::uint64_t e = all & ~covered; e; e &= e - 1) {
            const int idx = std::countr_zero(e);
            std::size_t count = 0;
            for (std::size_t c : by_edge_[static_cast<std::size_t>(idx)])
                if (usable(c)) ++count;
            if (count == 0) return false;
            if (best < 0 || count < best_count) {
                best = idx;
                best_count = count;
            }
        }
        std::vector<std::size_t> tried;
        bool found = false;
        for (std::size_t c : by_edge_[static_cast<std::size_t>(best)]) {
            if (!usable(c)) continue;
            if (nodes_ >= max_nodes_) {
                capped_ = true;
                break;
            }
            ++nodes_;
            apply(c, +1);
            chosen_.push_back(c);
            if (dfs(covered | cands_[c].edges, all)) {
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

    const BipartiteGraph& h_;
    std::int64_t max_nodes_;
    int m_;
    int k_ = 0;
    std::int64_t nodes_ = 0;
    bool capped_ = false;
    std::vector<Candidate> cands_;
    std::vector<std::vector<std::size_t>> by_edge_;
    std::vector<int> use_;
    std::vector<char> banned_;
    std::vector<std::size_t> chosen_;
};

} // namespace detail

/// Exact local cover number by iterative deepening over k = 1, 2, ...
/// Inputs beyond the size limits are refused with an Unknown report.
inline CoverNumberReport cn_local_bruteforce(const BipartiteGraph& h, CoverKind kind, const SearchCaps& caps = {}) {
    CoverNumberReport rep;
    rep.kind = kind;
    rep.method = CoverMethod::BruteForce;
    if (h.num_edges() == 0) {
        rep.value = 0;
        return rep;
    }
    const bool too_big = kind == CoverKind::CB ? h.num_vertices() > kBruteMaxVerticesCB || h.num_edges() > 64
                                               : h.num_edges() > kBruteMaxEdgesD || h.size_b() > 32;
    if (too_big) return rep;

    detail::LocalCoverSearch search(h, kind, caps.max_nodes);
    // stars around side-A vertices always give a max(|B|, 1)-local cover
    for (int k = 1; k <= std::max(h.size_a(), h.size_b()); ++k) {
        const Verdict v = search.run(k);
        rep.nodes_explored = search.nodes();
        if (v == Verdict::Unknown) return rep;
        if (v == Verdict::Feasible) {
            rep.value = k;
            rep.witness = search.witness();
            return rep;
        }
    }
    throw Error(ErrorCode::Internal, "no local cover found up to the star bound");
}

/// Closed form when it applies (CB on difference graphs; D on difference
/// graphs is the graph itself), brute force otherwise.
inline CoverNumberReport local_cover_number(const BipartiteGraph& h, CoverKind kind, const SearchCaps& caps = {}) {
    if (!is_difference(h).is_difference()) return cn_local_bruteforce(h, kind, caps);
    if (kind == CoverKind::CB) return cn_cb_difference(h);
    CoverNumberReport rep;
    rep.kind = CoverKind::D;
    rep.method = CoverMethod::Formula;
    rep.value = h.num_edges() == 0 ? 0 : 1;
    if (h.num_edges() > 0) rep.witness.push_back(Subgraph::from_edges(h.edges()));
    return rep;
}

/// Directed graph on vertices 0..n-1; loops allowed.
struct Digraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;
};

/// True iff the out-neighborhoods form a chain under inclusion.
inline bool is_ferrers_digraph(const Digraph& d) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(d.n));
    for (const auto& [u, v] : d.arcs) {
        if (u < 0 || u >= d.n || v < 0 || v >= d.n) throw Error(ErrorCode::IndexOutOfRange, "arc endpoint outside the digraph");
        out[static_cast<std::size_t>(u)].push_back(v);
    }
    for (auto& n : out) {
        std::sort(n.begin(), n.end());
        n.erase(std::unique(n.begin(), n.end()), n.end());
    }
    std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) { return p.size() > q.size(); });
    for (std::size_t x = 1; x < out.size(); ++x)
        if (!std::includes(out[x - 1].begin(), out[x - 1].end(), out[x].begin(), out[x].end())) return false;
    return true;
}

/// All edges oriented from side A to side B; vertex b maps to size_a() + b.
inline Digraph orient_a_to_b(const BipartiteGraph& h) {
    Digraph d;
    d.n = h.num_vertices();
    for (const auto& [a, b] : h.edges()) d.arcs.emplace_back(a, h.size_a() + b);
    return d;
}

} // namespace ycover
