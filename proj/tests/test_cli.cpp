#include "g2cells/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace g2cells;

namespace {

struct Invocation {
    int code;
    std::string out, err;
};

Invocation run(std::vector<std::string> args) {
    args.insert(args.begin(), "g2cells_cli");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

} // namespace

TEST(Cli, Distinguished) {
    const Invocation r = run({"distinguished", "--word", "121212"});
    EXPECT_EQ(r.code, 0);
    const auto l = lines(r.out);
    ASSERT_EQ(l.size(), 9u);
    EXPECT_EQ(l[1].substr(0, 6), "xxxxxx");
    const Invocation j = run({"distinguished", "--format", "json"});
    const auto arr = nlohmann::json::parse(j.out);
    ASSERT_EQ(arr.size(), 8u);
    EXPECT_EQ(arr[7]["name"], "12x21x");
}

TEST(Cli, Cells) {
    const Invocation r = run({"cells", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    const auto l = lines(r.out);
    ASSERT_EQ(l.size(), 9u);
    EXPECT_EQ(l[0], "family,sigma,dim,codim,cells");
    EXPECT_EQ(l[1], "xxxxxx,\"(1,1,1,1,1,1,1)\",6,0,64");
}

TEST(Cli, Epsilon) {
    const Invocation r = run({"epsilon", "--params", "1,2,3,5,7,11"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1/11,1/5,55/134,67/105,735/1474,2/385\n");
    EXPECT_EQ(run({"epsilon", "--params", "0,0,0,0,0,0"}).out, "not-factorizable\n");
}

TEST(Cli, Alpha) {
    EXPECT_EQ(run({"alpha", "--family", "x21x12", "--params", "1,2,3,5"}).out, "-1/5,5/8,512/85,17/88,-1331/68,2/11\n");
    const Invocation j = run({"alpha", "--family", "x21x12", "--params", "1,2,3,5", "--format", "json"});
    EXPECT_EQ(nlohmann::json::parse(j.out)[0]["value"], "-1/5");
    EXPECT_EQ(run({"alpha", "--params", "1,1,1,1,1,1"}).code, 0);
}

TEST(Cli, SymbolicMinors) {
    const Invocation r = run({"minors", "--symbolic", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    const auto arr = nlohmann::json::parse(r.out);
    ASSERT_EQ(arr.size(), 12u);
    const std::vector<std::string> names{"a", "b", "c", "d", "e", "f"};
    for (std::size_t k = 0; k < 12; ++k) {
        const auto& [label, text] = fixtures::symbolic_minors()[k];
        EXPECT_EQ(arr[k]["weight"], label);
        EXPECT_EQ(Polynomial::parse(arr[k]["minor"].get<std::string>(), names), Polynomial::parse(text, names));
    }
    const Invocation n = run({"minors", "--params", "1,2,3,5,7,11"});
    EXPECT_EQ(lines(n.out)[1].substr(0, 2), "e1");
}

TEST(Cli, ParseErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"epsilon", "--params", "1,x"}).code, 2);
    EXPECT_EQ(run({"epsilon", "--params", "1,2"}).code, 2);
    EXPECT_EQ(run({"epsilon", "--params", "1/0,1,1,1,1,1"}).code, 2);
    EXPECT_EQ(run({"cells", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"distinguished", "--word", "1213"}).code, 2);
    EXPECT_EQ(run({"alpha", "--family", "nope", "--params", "1"}).code, 2);
    EXPECT_EQ(run({"cell-point", "--family", "x21x12", "--params", "1,0,3,5"}).code, 2);
    EXPECT_EQ(run({"graph", "--samples", "0"}).code, 2);
    const Invocation h = run({"--help"});
    EXPECT_EQ(h.code, 0);
    EXPECT_NE(h.out.find("verify"), std::string::npos);
}

TEST(Cli, CellPoint) {
    const Invocation r = run({"cell-point", "--family", "x21x12", "--params", "1,2,3,5", "--format", "json", "--signs", "++"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::map<std::string, nlohmann::json> f;
    for (const auto& o : nlohmann::json::parse(r.out)) f[o["field"]] = o["value"];
    EXPECT_EQ(f["cell"], "+00+**");
    EXPECT_EQ(f["chain_ok"], true);
    EXPECT_EQ(f["unipotent_lower"], true);
    EXPECT_EQ(f["plus_position"], "s1s2s1s2s1s2");
    EXPECT_EQ(f["signs"], "-+++-+");
    EXPECT_EQ(f["letter"], "F");
    EXPECT_EQ(f["component"], 6);
}

TEST(Cli, GraphOutput) {
    const Invocation a = run({"graph", "--format", "csv"});
    EXPECT_EQ(a.code, 0);
    const auto l = lines(a.out);
    ASSERT_EQ(l.size(), 129u);
    EXPECT_EQ(l[1], "1,121212,++++++");
    EXPECT_EQ(l[2], "1,212121,++++++");
    EXPECT_EQ(run({"graph", "--format", "csv"}).out, a.out);
}

TEST(Cli, ClassifyJsonRoundTrip) {
    const auto path = std::filesystem::temp_directory_path() / "g2cells_classify.json";
    const Invocation r = run({"classify", "--all", "--format", "json", "--out", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::filesystem::remove(path);
    const auto parsed = parse_classification_json(ss.str());
    EXPECT_EQ(parsed.size(), 140u);

    EXPECT_EQ(parsed, records(cli::report(8, 42), true));

    const Invocation t = run({"classify"});
    EXPECT_NE(t.out.find("0+*0+*  ---+++  K <-> 11"), std::string::npos);
    EXPECT_EQ(lines(t.out).size(), 83u);
}

TEST(Cli, EulerCsv) {
    const Invocation r = run({"euler", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    const auto l = lines(r.out);
    ASSERT_EQ(l.size(), 12u);
    EXPECT_EQ(l[0], "component,n0,n1,n2,chi");
    for (std::size_t k = 0; k < 11; ++k) {
        const auto& e = fixtures::euler_table()[k];
        EXPECT_EQ(l[k + 1], std::to_string(e.component) + "," + std::to_string(e.n0) + "," + std::to_string(e.n1) + "," +
                                std::to_string(e.n2) + "," + std::to_string(e.chi));
    }
}

TEST(Cli, Bijection) {
    const Invocation r = run({"bijection", "--format", "json"});
    std::map<char, int> m;
    for (const auto& o : nlohmann::json::parse(r.out)) m[o["letter"].get<std::string>()[0]] = o["component"];
    EXPECT_EQ(m, fixtures::letter_bijection());
}
