#include <gtest/gtest.h>

#include "cli_runner.hpp"
#include "json.hpp"

using ycover::ref::data_path;
using ycover::ref::run_cli;
using json = nlohmann::json;

TEST(Cli, ConstructStaircase) {
    const auto r = run_cli("construct --i 3 --j 2");
    ASSERT_EQ(r.exit_code, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["z"], 9);
    EXPECT_EQ(j["rectangles"], 9);
    EXPECT_TRUE(j["partition"].get<bool>());
    EXPECT_TRUE(j["actual"].get<bool>());
    EXPECT_LE(j["locality"]["max_row"].get<int>(), 3);
    EXPECT_LE(j["locality"]["max_col"].get<int>(), 2);
}

TEST(Cli, ConstructForDiagram) {
    const auto r = run_cli("construct --i 2 --j 2 --diagram " + data_path("fig.txt"));
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(json::parse(r.out)["z"], 5);
    const auto bad = run_cli("construct --i 1 --j 1 --diagram " + data_path("fig.txt"));
    EXPECT_EQ(bad.exit_code, 1);
    EXPECT_EQ(bad.out, "infeasible\n");
}

TEST(Cli, Feasible) {
    EXPECT_EQ(run_cli("feasible --i 2 --j 2 --steps 5"), (ycover::ref::CliResult{0, "feasible\n"}));
    EXPECT_EQ(run_cli("feasible --i 2 --j 2 --steps 6"), (ycover::ref::CliResult{1, "infeasible\n"}));
}

TEST(Cli, Oracle) {
    const auto ok = run_cli("oracle --i 2 --j 2 --diagram " + data_path("staircase5.txt"));
    ASSERT_EQ(ok.exit_code, 0);
    const auto j = json::parse(ok.out);
    EXPECT_EQ(j["verdict"], "feasible");
    EXPECT_TRUE(j.contains("witness"));

    const auto no = run_cli("oracle --i 1 --j 1 --diagram " + data_path("staircase5.txt"));
    EXPECT_EQ(no.exit_code, 1);
    EXPECT_EQ(json::parse(no.out)["verdict"], "infeasible");

    const auto capped = run_cli("oracle --i 2 --j 2 --max-z 3 --diagram " + data_path("staircase5.txt"));
    EXPECT_EQ(capped.exit_code, 3);
    EXPECT_EQ(json::parse(capped.out)["verdict"], "unknown");
}

TEST(Cli, MinK) {
    EXPECT_EQ(run_cli("min-k --diagram " + data_path("fig.txt")).out, "2\n");
    EXPECT_EQ(run_cli("min-k --method oracle --diagram " + data_path("fig.txt")).out, "2\n");
}

TEST(Cli, Steps) {
    const auto j = json::parse(run_cli("steps --diagram " + data_path("fig.txt")).out);
    EXPECT_EQ(j["z"], 5);
    EXPECT_EQ(j["steps"].size(), 5u);
}

TEST(Cli, CompressAndExpand) {
    const auto c = run_cli("compress --diagram " + data_path("fig.txt") + " --cover " + data_path("fig_rows.json"));
    ASSERT_EQ(c.exit_code, 0);
    EXPECT_EQ(json::parse(c.out)["diagram"], json::parse("[5,4,3,2,1]"));

    const auto e = run_cli("expand --diagram " + data_path("y331.txt") + " --cover " + data_path("staircase2_cover.json"));
    ASSERT_EQ(e.exit_code, 0);
    EXPECT_EQ(json::parse(e.out)["cover"], json::parse(R"([{"rows":[1,2],"cols":[1,2,3]},{"rows":[3],"cols":[1]}])"));
}

TEST(Cli, CheckCover) {
    const auto args = " --diagram " + data_path("fig.txt") + " --cover " + data_path("fig_rows.json");
    EXPECT_EQ(run_cli("check-cover --i 1 --j 5" + args), (ycover::ref::CliResult{0, "valid\n"}));
    EXPECT_EQ(run_cli("check-cover --i 1 --j 4" + args), (ycover::ref::CliResult{1, "invalid\n"}));
}

TEST(Cli, Render) {
    EXPECT_EQ(run_cli("render --diagram " + data_path("y331.txt")).out, "# # #\n# # #\n#\n");
}

TEST(Cli, Graphs) {
    const auto g = run_cli("graph2diagram --graph " + data_path("staircase5_shuffled.txt"));
    ASSERT_EQ(g.exit_code, 0);
    EXPECT_EQ(json::parse(g.out)["diagram"], json::parse("[5,4,3,2,1]"));

    const auto crown = run_cli("graph2diagram --graph " + data_path("crown3.txt"));
    EXPECT_EQ(crown.exit_code, 1);

    EXPECT_EQ(run_cli("diagram2graph --diagram " + data_path("y331.txt")).out, "3 3\n111\n111\n100\n");
    EXPECT_EQ(run_cli("diagram2graph --format adjacency --diagram " + data_path("y331.txt")).out,
              "a1: b1 b2 b3\na2: b1 b2 b3\na3: b1\n");
}

TEST(Cli, GraphCoverNumbers) {
    const auto cb = json::parse(run_cli("graph-cn --kind cb --graph " + data_path("staircase5_shuffled.txt")).out);
    EXPECT_EQ(cb["value"], 2);
    EXPECT_EQ(cb["method"], "formula");
    const auto brute = json::parse(run_cli("graph-cn --kind cb --brute --graph " + data_path("staircase3_adj.txt")).out);
    EXPECT_EQ(brute["value"], 2);
    EXPECT_EQ(brute["method"], "brute-force");
    const auto d = json::parse(run_cli("graph-cn --kind d --graph " + data_path("staircase3_adj.txt")).out);
    EXPECT_EQ(d["value"], 1);
}

TEST(Cli, Ferrers) {
    EXPECT_EQ(run_cli("ferrers --digraph " + data_path("chain_digraph.txt")), (ycover::ref::CliResult{0, "ferrers\n"}));
    EXPECT_EQ(run_cli("ferrers --digraph " + data_path("swap_digraph.txt")), (ycover::ref::CliResult{1, "not ferrers\n"}));
}

TEST(Cli, Posets) {
    EXPECT_EQ(run_cli("poset-split --poset " + data_path("chain3.txt")).out.substr(0, 2), "6\n");
    EXPECT_EQ(run_cli("poset-graph --poset " + data_path("chain3.txt")).exit_code, 1);
    EXPECT_EQ(run_cli("poset-graph --poset " + data_path("antichain2.txt")).out, "1:\n2:\n");
    EXPECT_EQ(run_cli("poset-graph --poset " + data_path("standard3.txt")).out, "1: 4\n2: 5\n3: 6\n");
    const auto exact = json::parse(run_cli("ldim --brute --poset " + data_path("antichain2.txt")).out);
    EXPECT_EQ(exact["value"], 2);
    const auto bounds = json::parse(run_cli("ldim-bounds --poset " + data_path("standard3.txt")).out);
    EXPECT_LE(bounds["lower"].get<int>(), 3);
    EXPECT_GE(bounds["upper"].get<int>(), 3);
}

TEST(Cli, CheckRealizer) {
    const auto args = " --poset " + data_path("antichain2.txt") + " --realizer " + data_path("antichain2_realizer.txt");
    EXPECT_EQ(run_cli("check-realizer --k 2" + args), (ycover::ref::CliResult{0, "valid\n"}));
    EXPECT_EQ(run_cli("check-realizer --k 1" + args), (ycover::ref::CliResult{1, "rejected\n"}));
}

TEST(Cli, InputErrors) {
    EXPECT_EQ(run_cli("steps --diagram /nonexistent").exit_code, 2);
    EXPECT_EQ(run_cli("feasible --i 0 --j 1 --steps 1").exit_code, 2);
    EXPECT_EQ(run_cli("nosuchcommand").exit_code, 2);
}

TEST(Cli, OutputFile) {
    const std::string path = ::testing::TempDir() + "ycover_out.txt";
    ASSERT_EQ(run_cli("-o " + path + " feasible --i 1 --j 1 --steps 1").exit_code, 0);
    std::FILE* f = std::fopen(path.c_str(), "r");
    ASSERT_NE(f, nullptr);
    char buf[32] = {};
    const auto n = std::fread(buf, 1, sizeof buf - 1, f);
    std::fclose(f);
    EXPECT_EQ(std::string(buf, n), "feasible\n");
}

TEST(Cli, ConstructNineStepStaircase) {
    const auto j = json::parse(run_cli("construct --i 2 --j 3 --diagram " + data_path("staircase9.txt")).out);
    EXPECT_EQ(j["rectangles"], 9);
    EXPECT_TRUE(j["actual"].get<bool>());
    EXPECT_TRUE(j["partition"].get<bool>());
}

TEST(Cli, MinKOracleOnStaircase) {
    EXPECT_EQ(run_cli("min-k --method oracle --diagram " + data_path("staircase5.txt")).out, "2\n");
}

TEST(Cli, ReadsStandardInput) {
    const auto r = ycover::ref::run_shell("echo '3 3 1' | \"" YCOVER_CLI "\" steps --diagram -");
    EXPECT_EQ(json::parse(r.out)["z"], 2);
}
