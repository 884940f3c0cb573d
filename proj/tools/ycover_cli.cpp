// Command-line front end.
//
// Exit codes: 0 success / feasible, 1 well-formed negative answer,
// 2 input or parse error, 3 search cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "ycover/io.hpp"
#include "ycover/ycover.hpp"

using namespace ycover;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kCapExceeded = 3;

struct Context {
    std::string output;
    std::ostringstream out;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    return io::read_file(path);
}

void emit(Context& ctx, const json& j) { ctx.out << j.dump(2) << '\n'; }

json steps_json(const YoungDiagram& y) {
    json arr = json::array();
    for (const auto& st : steps(y)) arr.push_back({st.row, st.col});
    return arr;
}

json realizer_json(const Poset& p, const LocalRealizer& r) {
    json arr = json::array();
    for (const auto& l : r) {
        json seq = json::array();
        for (int x : l) seq.push_back(p.labels()[static_cast<std::size_t>(x)]);
        arr.push_back(seq);
    }
    return arr;
}

SearchCaps caps_from(std::int64_t max_nodes, int max_z) {
    SearchCaps caps;
    caps.max_nodes = max_nodes;
    caps.max_z = max_z;
    return caps;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local covers of Young diagrams, difference graphs and posets"};
    app.require_subcommand(1);
    Context ctx;
    app.add_option("-o,--output", ctx.output, "Write output to FILE instead of standard output");

    const SearchCaps defaults;
    int i = 0, j = 0, k = 0;
    std::int64_t z_steps = 0;
    std::int64_t max_nodes = defaults.max_nodes;
    int max_z = defaults.max_z;
    std::string diagram_path, cover_path, graph_path, poset_path, realizer_path;
    std::string method = "formula", kind = "cb", format = "matrix";
    bool brute = false;

    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--i", i, "Rectangles allowed per row")->required()->check(CLI::PositiveNumber);
        sub->add_option("--j", j, "Rectangles allowed per column")->required()->check(CLI::PositiveNumber);
    };
    auto add_caps = [&](CLI::App* sub) {
        sub->add_option("--max-nodes", max_nodes, "Search node limit")->capture_default_str()->check(CLI::PositiveNumber);
        sub->add_option("--max-z", max_z, "Largest step count searched")->capture_default_str()->check(CLI::PositiveNumber);
    };

    auto* construct = app.add_subcommand("construct", "Optimal (i,j)-local partition into actual rectangles");
    add_budget(construct);
    construct->add_option("--diagram", diagram_path, "Diagram file (default: the largest feasible staircase)");

    auto* feasible_cmd = app.add_subcommand("feasible", "Decide coverability from the step count");
    add_budget(feasible_cmd);
    feasible_cmd->add_option("--steps", z_steps, "Number of steps z")->required()->check(CLI::PositiveNumber);

    auto* oracle = app.add_subcommand("oracle", "Exhaustive search for an (i,j)-local cover");
    add_budget(oracle);
    oracle->add_option("--diagram", diagram_path)->required();
    add_caps(oracle);

    auto* mink = app.add_subcommand("min-k", "Smallest k admitting a (k,k)-local cover");
    mink->add_option("--diagram", diagram_path)->required();
    mink->add_option("--method", method)->check(CLI::IsMember({"formula", "oracle"}))->capture_default_str();
    add_caps(mink);

    auto* steps_cmd = app.add_subcommand("steps", "List the steps of a diagram");
    steps_cmd->add_option("--diagram", diagram_path)->required();

    auto* compress_cmd = app.add_subcommand("compress", "Move a cover of a diagram onto the staircase Y_z");
    compress_cmd->add_option("--diagram", diagram_path)->required();
    compress_cmd->add_option("--cover", cover_path)->required();

    auto* expand_cmd = app.add_subcommand("expand", "Lift a cover of Y_z onto a diagram with z steps");
    expand_cmd->add_option("--diagram", diagram_path)->required();
    expand_cmd->add_option("--cover", cover_path)->required();

    auto* check_cover = app.add_subcommand("check-cover", "Validate an (i,j)-local cover");
    add_budget(check_cover);
    check_cover->add_option("--diagram", diagram_path)->required();
    check_cover->add_option("--cover", cover_path)->required();

    auto* render = app.add_subcommand("render", "ASCII rendering of a diagram and optional cover");
    render->add_option("--diagram", diagram_path)->required();
    render->add_option("--cover", cover_path);

    auto* g2d = app.add_subcommand("graph2diagram", "Young diagram of a difference graph");
    g2d->add_option("--graph", graph_path)->required();

    auto* d2g = app.add_subcommand("diagram2graph", "Difference graph of a diagram");
    d2g->add_option("--diagram", diagram_path)->required();
    d2g->add_option("--format", format)->check(CLI::IsMember({"matrix", "adjacency"}))->capture_default_str();

    auto* gcn = app.add_subcommand("graph-cn", "Local cover number by bicliques (cb) or difference graphs (d)");
    gcn->add_option("--graph", graph_path)->required();
    gcn->add_option("--kind", kind)->check(CLI::IsMember({"cb", "d"}))->capture_default_str();
    gcn->add_flag("--brute", brute, "Force the exhaustive search");
    add_caps(gcn);

    auto* ferrers = app.add_subcommand("ferrers", "Test whether out-neighborhoods form a chain");
    ferrers->add_option("--digraph", graph_path)->required();

    auto* psplit = app.add_subcommand("poset-split", "Height-two split of a poset");
    psplit->add_option("--poset", poset_path)->required();

    auto* pgraph = app.add_subcommand("poset-graph", "Incomparability graph between minimal and other elements");
    pgraph->add_option("--poset", poset_path)->required();

    auto* ldim = app.add_subcommand("ldim", "Local dimension (bounds, or exact with --brute)");
    ldim->add_option("--poset", poset_path)->required();
    ldim->add_flag("--brute", brute, "Exact value by exhaustive search");
    add_caps(ldim);

    auto* lbounds = app.add_subcommand("ldim-bounds", "Bounds on local dimension with their derivation");
    lbounds->add_option("--poset", poset_path)->required();
    add_caps(lbounds);

    auto* check_real = app.add_subcommand("check-realizer", "Validate a local realizer");
    check_real->add_option("--poset", poset_path)->required();
    check_real->add_option("--realizer", realizer_path)->required();
    check_real->add_option("--k", k)->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }

    int code = kOk;
    try {
        const auto caps = caps_from(max_nodes, max_z);

        if (construct->parsed()) {
            const Budget budget{i, j};
            if (diagram_path.empty()) {
                const auto z = capacity(i, j);
                if (z > kMaxBuiltStaircase)
                    throw Error(ErrorCode::Overflow, "staircase with " + std::to_string(z) + " steps is too large; pass --diagram");
                const auto y = staircase(static_cast<int>(z));
                emit(ctx, io::cover_report(y, build_staircase_partition(i, j), &budget));
            } else {
                const auto y = io::parse_diagram(slurp(diagram_path));
                if (!feasible(i, j, y.num_steps())) {
                    ctx.out << "infeasible\n";
                    code = kNegative;
                } else {
                    emit(ctx, io::cover_report(y, build_partition_for(y, i, j), &budget));
                }
            }
        } else if (feasible_cmd->parsed()) {
            const bool ok = feasible(i, j, z_steps);
            ctx.out << (ok ? "feasible" : "infeasible") << '\n';
            code = ok ? kOk : kNegative;
        } else if (oracle->parsed()) {
            const auto y = io::parse_diagram(slurp(diagram_path));
            const auto rep = exists_local_cover(y, i, j, caps);
            json out;
            out["verdict"] = to_string(rep.verdict);
            out["z"] = y.num_steps();
            out["budget"] = {{"i", i}, {"j", j}};
            out["nodes_explored"] = rep.nodes_explored;
            if (rep.witness) out["witness"] = io::cover_report(y, *rep.witness);
            emit(ctx, out);
            code = rep.verdict == Verdict::Feasible ? kOk : rep.verdict == Verdict::Infeasible ? kNegative : kCapExceeded;
        } else if (mink->parsed()) {
            const auto y = io::parse_diagram(slurp(diagram_path));
            if (method == "formula") {
                ctx.out << min_balanced_budget(y) << '\n';
            } else {
                const auto v = min_balanced_budget_oracle(y, caps);
                if (v) ctx.out << *v << '\n';
                else {
                    ctx.out << "unknown\n";
                    code = kCapExceeded;
                }
            }
        } else if (steps_cmd->parsed()) {
            const auto y = io::parse_diagram(slurp(diagram_path));
            emit(ctx, json{{"z", y.num_steps()}, {"steps", steps_json(y)}});
        } else if (compress_cmd->parsed()) {
            const auto y = io::parse_diagram(slurp(diagram_path));
            const auto packed = compress(y, io::parse_cover(slurp(cover_path)));
            emit(ctx, io::cover_report(packed.diagram, packed.cover));
        } else if (expand_cmd->parsed()) {
            const auto y = io::parse_diagram(slurp(diagram_path));
            emit(ctx, io::cover_report(y, expand(y, io::parse_cover(slurp(cover_path)))));
        } else if (check_cover->parsed()) {
            const auto y = io::parse_diagram(slurp(diagram_path));
            const bool ok = check_witness(y, io::parse_cover(slurp(cover_path)), i, j);
            ctx.out << (ok ? "valid" : "invalid") << '\n';
            code = ok ? kOk : kNegative;
        } else if (render->parsed()) {
            const auto y = io::parse_diagram(slurp(diagram_path));
            if (cover_path.empty()) ctx.out << render_ascii(y);
            else {
                const auto c = io::parse_cover(slurp(cover_path));
                ctx.out << render_ascii(y, &c);
            }
        } else if (g2d->parsed()) {
            const auto h = io::parse_graph(slurp(graph_path));
            const auto cert = is_difference(h);
            if (!cert.is_difference()) {
                const auto [x, y] = *cert.violation;
                ctx.out << "not a difference graph: " << h.a_labels()[static_cast<std::size_t>(x)] << " and "
                        << h.a_labels()[static_cast<std::size_t>(y)] << " have incomparable neighborhoods\n";
                code = kNegative;
            } else {
                const auto emb = to_young(h);
                json rows = json::array(), cols = json::array(), da = json::array(), db = json::array();
                for (int v : emb.row_vertex) rows.push_back(h.a_labels()[static_cast<std::size_t>(v)]);
                for (int v : emb.col_vertex) cols.push_back(h.b_labels()[static_cast<std::size_t>(v)]);
                for (int v : emb.dropped_a) da.push_back(h.a_labels()[static_cast<std::size_t>(v)]);
                for (int v : emb.dropped_b) db.push_back(h.b_labels()[static_cast<std::size_t>(v)]);
                const auto& rl = emb.diagram.row_lengths();
                emit(ctx, json{{"diagram", std::vector<int>(rl.begin(), rl.end())},
                               {"z", emb.diagram.num_steps()},
                               {"rows", rows},
                               {"cols", cols},
                               {"dropped_a", da},
                               {"dropped_b", db}});
            }
        } else if (d2g->parsed()) {
            const auto h = from_young(io::parse_diagram(slurp(diagram_path)));
            ctx.out << (format == "matrix" ? io::format_graph_matrix(h) : io::format_graph_adjacency(h));
        } else if (gcn->parsed()) {
            const auto h = io::parse_graph(slurp(graph_path));
            const auto ck = kind == "cb" ? CoverKind::CB : CoverKind::D;
            const auto rep = brute ? cn_local_bruteforce(h, ck, caps) : local_cover_number(h, ck, caps);
            json out;
            out["kind"] = to_string(rep.kind);
            out["value"] = rep.value ? json(*rep.value) : json("unknown");
            out["method"] = to_string(rep.method);
            out["nodes_explored"] = rep.nodes_explored;
            out["witness"] = io::subgraphs_to_json(h, rep.witness);
            emit(ctx, out);
            if (!rep.value) code = kCapExceeded;
        } else if (ferrers->parsed()) {
            const auto [d, labels] = io::parse_digraph(slurp(graph_path));
            const bool ok = is_ferrers_digraph(d);
            ctx.out << (ok ? "ferrers" : "not ferrers") << '\n';
            code = ok ? kOk : kNegative;
        } else if (psplit->parsed()) {
            ctx.out << io::format_poset(split(io::parse_poset(slurp(poset_path))));
        } else if (pgraph->parsed()) {
            ctx.out << io::format_graph_adjacency(critical_graph(io::parse_poset(slurp(poset_path))));
        } else if (ldim->parsed()) {
            const auto p = io::parse_poset(slurp(poset_path));
            json out;
            if (brute) {
                const auto res = ldim_brute(p, caps);
                out["value"] = res.value ? json(*res.value) : json("unknown");
                out["nodes_explored"] = res.nodes_explored;
                out["realizer"] = realizer_json(p, res.witness);
                if (!res.value) code = kCapExceeded;
            } else {
                const auto b = ldim_bounds(p, caps);
                out["lower"] = b.lower;
                out["upper"] = b.upper ? json(*b.upper) : json("unknown");
            }
            emit(ctx, out);
        } else if (lbounds->parsed()) {
            const auto b = ldim_bounds(io::parse_poset(slurp(poset_path)), caps);
            emit(ctx, json{{"lower", b.lower}, {"upper", b.upper ? json(*b.upper) : json("unknown")}, {"trace", b.trace}});
        } else if (check_real->parsed()) {
            const auto p = io::parse_poset(slurp(poset_path));
            const bool ok = check_local_realizer(p, io::parse_realizer(slurp(realizer_path)), k);
            ctx.out << (ok ? "valid" : "rejected") << '\n';
            code = ok ? kOk : kNegative;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.code()) {
        case ErrorCode::Infeasible:
        case ErrorCode::NotADifferenceGraph:
        case ErrorCode::NotHeightTwo:
            return kNegative;
        case ErrorCode::CapExceeded:
            return kCapExceeded;
        default:
            return kInputError;
        }
    }

    if (ctx.output.empty()) {
        std::cout << ctx.out.str();
    } else {
        std::ofstream f(ctx.output, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << ctx.output << '\n';
            return kInputError;
        }
        f << ctx.out.str();
    }
    return code;
}
