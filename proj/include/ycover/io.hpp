#pragma once

// Text and JSON formats. Lines starting with '#' are ignored by every text
// parser. All indices in files are 1-based.
//
//   diagram   one line of row lengths: "5 4 3 2 1"
//   cover     JSON list [{"rows":[...],"cols":[...]}, ...], or an object
//             holding such a list under "cover"
//   graph     "r c" then r lines of c characters '0'/'1', or adjacency
//             lines "a1: b1 b2"
//   poset     "n" then lines "u < v"
//   digraph   adjacency lines "v: w x" over one vertex set
//   realizer  one partial linear extension per line: "3 1 2"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "diagram.hpp"
#include "diffgraph.hpp"
#include "posets.hpp"

namespace ycover::io {

using json = nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace detail {

inline std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        out.push_back(line);
    }
    return out;
}

inline int parse_int(const std::string& tok) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw Error(ErrorCode::Parse, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw Error(ErrorCode::Parse, "expected an integer, got '" + tok + "'");
    return v;
}

inline std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

} // namespace detail

inline YoungDiagram parse_diagram(const std::string& text) {
    const auto lines = detail::content_lines(text);
    if (lines.size() != 1) throw Error(ErrorCode::Parse, "a diagram is one line of row lengths");
    std::vector<int> rows;
    for (const auto& t : detail::tokens(lines.front())) rows.push_back(detail::parse_int(t));
    return YoungDiagram(std::move(rows));
}

inline std::string format_diagram(const YoungDiagram& y) {
    std::string out;
    for (int s = 1; s <= y.rows(); ++s) {
        if (s > 1) out += ' ';
        out += std::to_string(y.row_length(s));
    }
    return out + '\n';
}

inline json cover_to_json(const Cover& c) {
    json arr = json::array();
    for (const auto& r : c) arr.push_back({{"rows", r.rows()}, {"cols", r.cols()}});
    return arr;
}

inline Cover cover_from_json(const json& j) {
    const json& arr = j.is_object() && j.contains("cover") ? j.at("cover") : j;
    if (!arr.is_array()) throw Error(ErrorCode::Parse, "a cover is a JSON list of rectangles");
    Cover c;
    try {
        for (const auto& r : arr) c.emplace_back(r.at("rows").get<std::vector<int>>(), r.at("cols").get<std::vector<int>>());
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("malformed rectangle: ") + e.what());
    }
    return c;
}

inline Cover parse_cover(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("cover is not valid JSON: ") + e.what());
    }
    return cover_from_json(j);
}

/// Cover with its metadata block: step count, locality maxima and, when
/// given, the budget it was built for.
inline json cover_report(const YoungDiagram& y, const Cover& c, const Budget* budget = nullptr) {
    const auto prof = locality(y, c);
    json out;
    out["diagram"] = std::vector<int>(y.row_lengths().begin(), y.row_lengths().end());
    out["z"] = y.num_steps();
    if (budget) out["budget"] = {{"i", budget->i}, {"j", budget->j}};
    out["locality"] = {{"max_row", prof.max_row}, {"max_col", prof.max_col}};
    out["partition"] = is_partition(y, c);
    out["actual"] = all_actual(c);
    out["rectangles"] = c.size();
    out["cover"] = cover_to_json(c);
    return out;
}

inline BipartiteGraph parse_graph(const std::string& text) {
    const auto lines = detail::content_lines(text);
    if (lines.empty()) throw Error(ErrorCode::Parse, "empty graph file");
    bool adjacency = false;
    for (const auto& l : lines) adjacency = adjacency || l.find(':') != std::string::npos;

    if (adjacency) {
        std::vector<std::string> a_labels, b_labels;
        std::map<std::string, int> a_index, b_index;
        std::vector<std::pair<int, int>> edges;
        for (const auto& l : lines) {
            const auto colon = l.find(':');
            if (colon == std::string::npos) throw Error(ErrorCode::Parse, "adjacency line without ':': " + l);
            const auto head = detail::tokens(l.substr(0, colon));
            if (head.size() != 1) throw Error(ErrorCode::Parse, "adjacency line needs one vertex before ':'");
            if (a_index.count(head[0])) throw Error(ErrorCode::Parse, "vertex " + head[0] + " listed twice");
            const int a = static_cast<int>(a_labels.size());
            a_index[head[0]] = a;
            a_labels.push_back(head[0]);
            for (const auto& t : detail::tokens(l.substr(colon + 1))) {
                auto it = b_index.find(t);
                if (it == b_index.end()) {
                    it = b_index.emplace(t, static_cast<int>(b_labels.size())).first;
                    b_labels.push_back(t);
                }
                edges.emplace_back(a, it->second);
            }
        }
        for (const auto& b : b_labels)
            if (a_index.count(b)) throw Error(ErrorCode::Parse, "vertex " + b + " appears on both sides");
        return BipartiteGraph(std::move(a_labels), std::move(b_labels), std::move(edges));
    }

    const auto header = detail::tokens(lines.front());
    if (header.size() != 2) throw Error(ErrorCode::Parse, "matrix header must be 'r c'");
    const int r = detail::parse_int(header[0]), c = detail::parse_int(header[1]);
    if (r < 0 || c < 0 || static_cast<int>(lines.size()) != r + 1)
        throw Error(ErrorCode::Parse, "matrix needs exactly r rows after the header");
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < r; ++a) {
        std::string row;
        for (char ch : lines[static_cast<std::size_t>(a + 1)])
            if (!std::isspace(static_cast<unsigned char>(ch))) row += ch;
        if (static_cast<int>(row.size()) != c) throw Error(ErrorCode::Parse, "matrix row " + std::to_string(a + 1) + " has wrong length");
        for (int b = 0; b < c; ++b) {
            if (row[static_cast<std::size_t>(b)] == '1') edges.emplace_back(a, b);
            else if (row[static_cast<std::size_t>(b)] != '0') throw Error(ErrorCode::Parse, "matrix entries must be 0 or 1");
        }
    }
    return BipartiteGraph::with_default_labels(r, c, std::move(edges));
}

inline std::string format_graph_matrix(const BipartiteGraph& h) {
    std::string out = std::to_string(h.size_a()) + " " + std::to_string(h.size_b()) + "\n";
    for (int a = 0; a < h.size_a(); ++a) {
        for (int b = 0; b < h.size_b(); ++b) out += h.adjacent(a, b) ? '1' : '0';
        out += '\n';
    }
    return out;
}

inline std::string format_graph_adjacency(const BipartiteGraph& h) {
    std::string out;
    for (int a = 0; a < h.size_a(); ++a) {
        out += h.a_labels()[static_cast<std::size_t>(a)] + ":";
        for (int b : h.neighbors_a(a)) out += " " + h.b_labels()[static_cast<std::size_t>(b)];
        out += '\n';
    }
    return out;
}

/// Adjacency lines "v: w x" over one shared vertex set; loops allowed.
/// Returns the digraph and its vertex labels in first-appearance order.
inline std::pair<Digraph, std::vector<std::string>> parse_digraph(const std::string& text) {
    std::vector<std::string> labels;
    std::map<std::string, int> index;
    auto id = [&](const std::string& l) {
        auto it = index.find(l);
        if (it == index.end()) {
            it = index.emplace(l, static_cast<int>(labels.size())).first;
            labels.push_back(l);
        }
        return it->second;
    };
    Digraph d;
    for (const auto& l : detail::content_lines(text)) {
        const auto colon = l.find(':');
        if (colon == std::string::npos) throw Error(ErrorCode::Parse, "digraph lines look like 'v: w x': " + l);
        const auto head = detail::tokens(l.substr(0, colon));
        if (head.size() != 1) throw Error(ErrorCode::Parse, "digraph line needs one vertex before ':'");
        const int u = id(head[0]);
        for (const auto& t : detail::tokens(l.substr(colon + 1))) d.arcs.emplace_back(u, id(t));
    }
    d.n = static_cast<int>(labels.size());
    return {std::move(d), std::move(labels)};
}

inline Poset parse_poset(const std::string& text) {
    const auto lines = detail::content_lines(text);
    if (lines.empty()) throw Error(ErrorCode::Parse, "empty poset file");
    const auto head = detail::tokens(lines.front());
    if (head.size() != 1) throw Error(ErrorCode::Parse, "poset file starts with the element count");
    const int n = detail::parse_int(head[0]);
    if (n < 1) throw Error(ErrorCode::Parse, "a poset needs at least one element");
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t l = 1; l < lines.size(); ++l) {
        const auto t = detail::tokens(lines[l]);
        if (t.size() != 3 || t[1] != "<") throw Error(ErrorCode::Parse, "relation lines look like 'u < v': " + lines[l]);
        const int u = detail::parse_int(t[0]), v = detail::parse_int(t[2]);
        if (u < 1 || u > n || v < 1 || v > n) throw Error(ErrorCode::Parse, "element out of range in: " + lines[l]);
        pairs.emplace_back(u, v);
    }
    return make_poset(n, pairs);
}

/// Element count and cover relations, 1-based by element index.
inline std::string format_poset(const Poset& p) {
    std::string out = std::to_string(p.size()) + "\n";
    for (const auto& [x, y] : p.cover_relations()) out += std::to_string(x + 1) + " < " + std::to_string(y + 1) + "\n";
    return out;
}

inline LocalRealizer parse_realizer(const std::string& text) {
    LocalRealizer r;
    for (const auto& l : detail::content_lines(text)) {
        PartialLinearExtension ple;
        for (const auto& t : detail::tokens(l)) ple.push_back(detail::parse_int(t) - 1);
        r.push_back(std::move(ple));
    }
    return r;
}

inline std::string format_realizer(const LocalRealizer& r) {
    std::string out;
    for (const auto& l : r) {
        for (std::size_t u = 0; u < l.size(); ++u) out += (u ? " " : "") + std::to_string(l[u] + 1);
        out += '\n';
    }
    return out;
}

inline json subgraphs_to_json(const BipartiteGraph& h, const std::vector<Subgraph>& gs) {
    json arr = json::array();
    for (const auto& g : gs) {
        json a = json::array(), b = json::array(), e = json::array();
        for (int x : g.a) a.push_back(h.a_labels()[static_cast<std::size_t>(x)]);
        for (int y : g.b) b.push_back(h.b_labels()[static_cast<std::size_t>(y)]);
        for (const auto& [x, y] : g.edges)
            e.push_back({h.a_labels()[static_cast<std::size_t>(x)], h.b_labels()[static_cast<std::size_t>(y)]});
        arr.push_back({{"a", a}, {"b", b}, {"edges", e}});
    }
    return arr;
}

} // namespace ycover::io
