#include "commands.hpp"

#include "gdesign/bounds.hpp"
#include "gdesign/cube.hpp"
#include "gdesign/schemes.hpp"
#include "gdesign/serialize.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace gdesign;
using namespace gdesign::cli;
using nlohmann::json;

namespace {

GraphOptions cube(int n, int d = 1)
{
    GraphOptions g;
    g.cube = n;
    g.dist = d;
    return g;
}

GraphOptions fixture_graph(const std::string& name)
{
    GraphOptions g;
    g.fixture = name;
    return g;
}

DesignOptions code(const std::string& spec)
{
    DesignOptions d;
    d.code = spec;
    return d;
}

DesignOptions vertices(const std::string& spec)
{
    DesignOptions d;
    d.design = spec;
    return d;
}

std::map<std::string, int> walk_spectrum(const json& doc)
{
    std::map<std::string, int> m;
    for (const auto& e : doc["results"]["spectrum"]["eigenspaces"])
        m[e["walk_eigenvalue"].get<std::string>()] += e["dimension"].get<int>();
    return m;
}

int error_exit(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return exit_code_for(e.code());
    }
    return kExitOk;
}

std::string temp_file(const std::string& name, const std::string& content)
{
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST(CliSpectrum, CubeColumns)
{
    EXPECT_EQ(walk_spectrum(cmd_spectrum(cube(3)).document),
              (std::map<std::string, int>{{"1", 1}, {"1/3", 3}, {"-1/3", 3}, {"-1", 1}}));
    const auto d2 = cmd_spectrum(cube(3, 2)).document;
    EXPECT_EQ(walk_spectrum(d2), (std::map<std::string, int>{{"1", 1}, {"0", 4}, {"-1/3", 3}}));
    EXPECT_EQ(d2["arithmetic"], "exact");
}

TEST(CliSpectrum, CompleteGraphIsFloating)
{
    const auto doc = cmd_spectrum(fixture_graph("complete:5")).document;
    EXPECT_EQ(doc["arithmetic"], "floating");
    const auto& spaces = doc["results"]["spectrum"]["eigenspaces"];
    ASSERT_EQ(spaces.size(), 2u);
    EXPECT_EQ(spaces[0]["eigenvalue"], "0");
    EXPECT_EQ(spaces[1]["eigenvalue"], "-1.25");
    EXPECT_EQ(spaces[1]["dimension"], 4);
}

TEST(CliSpectrum, LargeCubeWithoutExplicitGraph)
{
    const auto doc = cmd_spectrum(cube(16)).document;
    int total = 0;
    for (const auto& e : doc["results"]["spectrum"]["eigenspaces"])
        total += e["dimension"].get<int>();
    EXPECT_EQ(total, 1 << 16);
}

TEST(CliSpectrum, GraphFile)
{
    const auto path = temp_file("gdesign_cli_c4.json", R"({"n": 4, "edges": [[0,1],[1,2],[2,3],[3,0]]})");
    const auto doc = cmd_spectrum(GraphOptions{.graph_file = path}).document;
    EXPECT_EQ(walk_spectrum(doc), (std::map<std::string, int>{{"1", 1}, {"0", 2}, {"-1", 1}}));
    std::filesystem::remove(path);
}

TEST(CliVerify, HammingOnQ7)
{
    const auto doc = cmd_verify(cube(7), code("hamming:3")).document;
    const auto& r = doc["results"];
    EXPECT_EQ(r["report"]["k"], 7);
    EXPECT_EQ(r["report"]["efficacy"], "16/93");
    EXPECT_TRUE(r["extremal"].get<bool>());
    EXPECT_TRUE(r["stable"].get<bool>());
}

TEST(CliVerify, LiftedHammingOnQ4)
{
    const auto doc = cmd_verify(cube(4), code("lift:hamming:2")).document;
    EXPECT_EQ(doc["results"]["report"]["efficacy"], "2/5");
    EXPECT_TRUE(doc["results"]["extremal"].get<bool>());
    EXPECT_FALSE(doc["results"]["stable"].get<bool>());
}

TEST(CliVerify, SingletonOnCompleteGraph)
{
    const auto doc = cmd_verify(fixture_graph("complete:5"), vertices("0")).document;
    EXPECT_EQ(doc["results"]["report"]["k"], 1);
}

TEST(CliVerify, LargeCubeUsesCharacters)
{
    const auto doc = cmd_verify(cube(15), code("hamming:4")).document;
    EXPECT_EQ(doc["results"]["report"]["k"], 15);
    EXPECT_EQ(doc["results"]["report"]["efficacy"], "2048/26333");
    EXPECT_TRUE(doc["results"]["stable"].get<bool>());
}

TEST(CliVerify, WordsAndIntegersAgree)
{
    const auto a = cmd_verify(cube(3), vertices("000,111")).document;
    const auto b = cmd_verify(cube(3), vertices("0 7")).document;
    EXPECT_EQ(a["results"]["report"], b["results"]["report"]);
    EXPECT_EQ(a["results"]["design"], (std::vector<int>{0, 7}));
}

TEST(CliVerify, DesignFileAndCodeFile)
{
    const auto design = temp_file("gdesign_cli_design.json", R"(["000", 7])");
    const auto d = cmd_verify(cube(3), vertices(design)).document;
    EXPECT_EQ(d["results"]["report"]["efficacy"], "2/5");
    const auto c = temp_file("gdesign_cli_code.json", R"({"check_matrix": ["101", "011"]})");
    const auto e = cmd_verify(cube(3), code("file:" + c)).document;
    EXPECT_EQ(e["results"]["design"], (std::vector<int>{0, 7}));
    std::filesystem::remove(design);
    std::filesystem::remove(c);
}

TEST(CliVerify, KneserStar)
{
    const auto doc = cmd_verify(fixture_graph("johnson:5,2,2"), vertices("0,1,2,3")).document;
    EXPECT_TRUE(doc["results"]["stable"].get<bool>());
    EXPECT_EQ(doc["results"]["labels"][0], "{1,2}");
    bool attained = false;
    for (const auto& c : doc["results"]["certificates"])
        attained = attained || (c["kind"] == "hoffman" && c["attained"].get<bool>() && c["bound"] == "2/5");
    EXPECT_TRUE(attained);
}

TEST(CliSearch, Q4FindsSixteen)
{
    const auto doc = cmd_search(cube(4), 4).document;
    const auto& s = doc["results"]["search"];
    EXPECT_EQ(s["best_efficacy"], "2/5");
    EXPECT_EQ(s["witnesses"].size(), 16u);
    EXPECT_EQ(s["subsets_examined"], 2516);
}

TEST(CliSearch, Q3AndSingletons)
{
    EXPECT_EQ(cmd_search(cube(3), 8).document["results"]["search"]["best_efficacy"], "2/5");
    const auto k5 = cmd_search(fixture_graph("complete:5"), 1).document["results"]["search"];
    EXPECT_EQ(k5["best_efficacy"], "1");
    EXPECT_EQ(k5["witnesses"].size(), 5u);
}

TEST(CliReproduce, TablesMatch)
{
    for (const char* t : {"table1", "table2", "table3"}) {
        const auto out = cmd_reproduce(t);
        EXPECT_EQ(out.exit_code, kExitOk) << t << "\n" << out.table;
        EXPECT_EQ(out.document["results"]["mismatches"], 0) << t;
    }
}

TEST(CliReproduce, OpenOptimalityCellsAreReported)
{
    const auto doc = cmd_reproduce("table1").document;
    int reported = 0;
    for (const auto& c : doc["results"]["cells"])
        if (c["status"] == "reported") {
            ++reported;
            EXPECT_EQ(c["column"], "optimal");
            EXPECT_EQ(c["actual"], "unknown");
        }
    EXPECT_EQ(reported, 2);
}

TEST(CliReproduce, EfficaciesFlagTheKneserValue)
{
    // the stated 4/5 for Y on G_1 disagrees with the prefix definition (2/3)
    const auto out = cmd_reproduce("efficacies");
    EXPECT_EQ(out.exit_code, kExitMismatch);
    std::vector<std::string> mismatched;
    for (const auto& c : out.document["results"]["cells"])
        if (c["status"] == "mismatch")
            mismatched.push_back(c["row"]);
    EXPECT_EQ(mismatched, std::vector<std::string>{"KG(5,2)^C, Y"});
}

TEST(CliErrors, ExitCodes)
{
    EXPECT_EQ(error_exit([] { cmd_spectrum(GraphOptions{}); }), kExitUsage);
    EXPECT_EQ(error_exit([] { cmd_spectrum(fixture_graph("dodecahedron")); }), kExitUsage);
    EXPECT_EQ(error_exit([] { cmd_verify(cube(3), code("hamming:3")); }), kExitUsage);
    EXPECT_EQ(error_exit([] { cmd_verify(cube(3), vertices("8")); }), kExitUsage);
    EXPECT_EQ(error_exit([] { cmd_verify(cube(3), vertices("0,0")); }), kExitUsage);
    EXPECT_EQ(error_exit([] { cmd_verify(cube(3), vertices("x1")); }), kExitUsage);
    EXPECT_EQ(error_exit([] { cmd_search(cube(14), 2); }), kExitResource);
    EXPECT_EQ(error_exit([] { cmd_search(fixture_graph("petersen"), 0); }), kExitUsage);
    EXPECT_EQ(error_exit([] { cmd_reproduce("table9"); }), kExitUsage);
}

TEST(CliDeterminism, RepeatedRunsAreByteIdentical)
{
    for (auto format : {Format::Table, Format::Structured}) {
        EXPECT_EQ(render(cmd_search(cube(4), 4), format), render(cmd_search(cube(4), 4), format));
        EXPECT_EQ(render(cmd_spectrum(fixture_graph("truncated_tetrahedron")), format),
                  render(cmd_spectrum(fixture_graph("truncated_tetrahedron")), format));
        EXPECT_EQ(render(cmd_reproduce("table1"), format), render(cmd_reproduce("table1"), format));
    }
}

TEST(Serialize, ReportRoundTrip)
{
    const auto d = cube_decomposition(CubeGraph(3));
    const auto r = design_report(d, Design(8, {0, 7}));
    const json j = r;
    EXPECT_EQ(j["efficacy"], "2/5");
    EXPECT_EQ(j.get<DesignReport>(), r);
    EXPECT_EQ(json(j.get<DesignReport>()).dump(), j.dump());
}

TEST(Serialize, SpectrumRoundTripBothPaths)
{
    for (const auto& s : {summarize(cube_decomposition(CubeGraph(3, 2))),
                          summarize(spectral_decomposition(truncated_tetrahedron()))}) {
        const json j = s;
        const auto back = j.get<SpectrumSummary>();
        EXPECT_EQ(json(back).dump(), j.dump());
        ASSERT_EQ(back.entries.size(), s.entries.size());
        for (std::size_t i = 0; i < s.entries.size(); ++i)
            EXPECT_NEAR(back.entries[i].eigenvalue.value, s.entries[i].eigenvalue.value, 1e-11);
    }
    const json exact = summarize(cube_decomposition(CubeGraph(3)));
    EXPECT_EQ(exact["eigenspaces"][2]["eigenvalue"], "-2/3");
}

TEST(Serialize, SearchCertificateStableSetCode)
{
    const auto d = cube_decomposition(CubeGraph(3, 2));
    const auto s = exhaustive_design_search(cube_decomposition(CubeGraph(3)), 2);
    const json js = s;
    const auto s2 = js.get<SearchResult>();
    EXPECT_EQ(s2.best_efficacy, s.best_efficacy);
    EXPECT_EQ(s2.witnesses, s.witnesses);
    EXPECT_EQ(json(s2).dump(), js.dump());

    const auto c = hoffman_certificate(d, Design(8, {0, 7}));
    const json jc = c;
    EXPECT_EQ(jc["kind"], "hoffman");
    EXPECT_EQ(json(jc.get<BoundCertificate>()).dump(), jc.dump());

    const auto a = max_stable_set(d.graph());
    const json ja = a;
    EXPECT_EQ(ja.get<StableSetResult>().witnesses, a.witnesses);

    const auto h = hamming(3);
    const json jh = h;
    EXPECT_EQ(jh["check_matrix"][0], "1010101");
    EXPECT_EQ(code_from_json(jh), h);
    EXPECT_THROW(code_from_json(json::parse(R"({"rows": 3})")), Error);
}
