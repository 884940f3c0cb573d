#include <gtest/gtest.h>

#include "ycover/constructor.hpp"
#include "ycover/io.hpp"

using namespace ycover;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an error";
    return ErrorCode::Internal;
}

} // namespace

TEST(Io, DiagramRoundTrip) {
    const auto y = io::parse_diagram("# comment\n  5 4 3 2 1 \n\n");
    EXPECT_EQ(y, staircase(5));
    EXPECT_EQ(io::format_diagram(y), "5 4 3 2 1\n");
    EXPECT_EQ(code_of([] { io::parse_diagram("3 x"); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { io::parse_diagram("3\n2"); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { io::parse_diagram("2 3"); }), ErrorCode::NotWeaklyDecreasing);
}

TEST(Io, CoverRoundTrip) {
    const Cover c{GenRect({1, 3}, {2}), GenRect({2}, {1, 2})};
    const auto text = io::cover_to_json(c).dump();
    EXPECT_EQ(text, R"([{"rows":[1,3],"cols":[2]},{"rows":[2],"cols":[1,2]}])");
    EXPECT_EQ(io::parse_cover(text), c);
    EXPECT_EQ(io::parse_cover(R"({"cover":[{"rows":[1],"cols":[1]}]})"), (Cover{GenRect({1}, {1})}));
    EXPECT_EQ(code_of([] { io::parse_cover("[{"); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { io::parse_cover(R"([{"rows":[1]}])"); }), ErrorCode::Parse);
}

TEST(Io, CoverReportKeys) {
    const Budget b{1, 2};
    const auto y = staircase(2);
    const auto rep = io::cover_report(y, build_staircase_partition(1, 2), &b);
    std::vector<std::string> keys;
    for (const auto& [k, _] : rep.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"diagram", "z", "budget", "locality", "partition", "actual", "rectangles", "cover"}));
    EXPECT_EQ(rep["locality"]["max_row"], 1);
    EXPECT_EQ(rep["locality"]["max_col"], 2);
    EXPECT_TRUE(rep["partition"].get<bool>());
}

TEST(Io, GraphFormats) {
    const auto m = io::parse_graph("2 3\n110\n1 0 0\n");
    EXPECT_EQ(m.edges(), (std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}}));
    EXPECT_EQ(io::format_graph_matrix(m), "2 3\n110\n100\n");
    EXPECT_EQ(io::format_graph_adjacency(m), "a1: b1 b2\na2: b1\n");

    const auto a = io::parse_graph("x: p q\ny: q\n");
    EXPECT_EQ(a.a_labels(), (std::vector<std::string>{"x", "y"}));
    EXPECT_EQ(a.b_labels(), (std::vector<std::string>{"p", "q"}));
    EXPECT_EQ(io::format_graph_adjacency(a), "x: p q\ny: q\n");

    EXPECT_EQ(code_of([] { io::parse_graph("2 2\n11\n"); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { io::parse_graph("1 2\n12\n"); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { io::parse_graph("x: y\ny: x\n"); }), ErrorCode::Parse);
}

TEST(Io, Digraph) {
    const auto [d, labels] = io::parse_digraph("u: v w\nw: w\n");
    EXPECT_EQ(d.n, 3);
    EXPECT_EQ(labels, (std::vector<std::string>{"u", "v", "w"}));
    EXPECT_EQ(d.arcs, (std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {2, 2}}));
}

TEST(Io, PosetAndRealizer) {
    const auto p = io::parse_poset("3\n1 < 2\n# closure adds 1 < 3\n2 < 3\n1 < 3\n");
    EXPECT_EQ(io::format_poset(p), "3\n1 < 2\n2 < 3\n");
    EXPECT_EQ(code_of([] { io::parse_poset("2\n1 < 3\n"); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { io::parse_poset("2\n1 > 2\n"); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { io::parse_poset("2\n1 < 2\n2 < 1\n"); }), ErrorCode::CycleDetected);

    const auto r = io::parse_realizer("1 2\n2 1\n");
    EXPECT_EQ(r, (LocalRealizer{{0, 1}, {1, 0}}));
    EXPECT_EQ(io::format_realizer(r), "1 2\n2 1\n");
}
