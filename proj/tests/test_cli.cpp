#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Cli : ::testing::Test {
    fs::path dir;

    void SetUp() override {
        dir = fs::temp_directory_path() / ("berge_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    std::string p(const std::string& name) const { return (dir / name).string(); }

    int run(const std::string& args) const {
        const std::string cmd = std::string(BERGE_CLI) + " " + args + " >" + p("stdout") + " 2>" + p("stderr");
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    std::string slurp(const std::string& name) const {
        std::ifstream in(p(name), std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }
};

} // namespace

TEST_F(Cli, GenFindVerify) {
    ASSERT_EQ(run("gen --family steiner --n 127 -o " + p("s.hg")), 0);
    ASSERT_EQ(run("find -i " + p("s.hg") + " --k 2 --csv " + p("r.csv") + " --emit-witnesses " + p("w.jsonl")), 0);
    EXPECT_EQ(slurp("r.csv").rfind("index,length,shortest_bound,route\n", 0), 0u);
    ASSERT_EQ(run("verify -i " + p("s.hg") + " -w " + p("w.jsonl") + " --k 2"), 0);
    EXPECT_EQ(slurp("stdout"), "OK 2 cycles\n");
}

TEST_F(Cli, TamperedWitnessNamesInvariant) {
    ASSERT_EQ(run("gen --family steiner --n 7 -o " + p("f.hg")), 0);
    std::ofstream(p("bad.jsonl")) << R"({"type":"berge-cycle","length":3,"spine":[0,1,3],"edges":[0,0,1]})" << '\n';
    EXPECT_EQ(run("verify -i " + p("f.hg") + " -w " + p("bad.jsonl")), 1);
    EXPECT_NE(slurp("stdout").find("EdgesNotDistinct"), std::string::npos);
}

TEST_F(Cli, ExitCodes) {
    ASSERT_EQ(run("gen --family steiner --n 7 -o " + p("f.hg")), 0);
    EXPECT_EQ(run("find -i " + p("f.hg") + " --k 0"), 2);
    EXPECT_EQ(run("gen --family steiner --n 8"), 2);
    EXPECT_EQ(run("turan --n 7 --ell 3 --budget 10"), 3);
    EXPECT_EQ(run("turan --n 7 --ell 2"), 0);
    EXPECT_NE(slurp("stdout").find("\"value\":7"), std::string::npos);
}

TEST_F(Cli, SkeletonAndSpectrum) {
    ASSERT_EQ(run("gen --family complete --n 6 -o " + p("k6.hg")), 0);
    ASSERT_EQ(run("spectrum -i " + p("k6.hg")), 0);
    EXPECT_EQ(slurp("stdout"), "length,present\n3,1\n4,1\n5,1\n6,1\n");
    ASSERT_EQ(run("gen --family steiner --n 9 -o " + p("s9.hg")), 0);
    ASSERT_EQ(run("skeleton -i " + p("s9.hg")), 0);
    EXPECT_EQ(slurp("stdout").rfind("i,|L_i|,|A_i|,|B_i|,|C_i|\n0,1,0,0,0\n", 0), 0u);
}

TEST_F(Cli, RepeatRunsAreByteIdentical) {
    ASSERT_EQ(run("gen --family random-linear --n 150 --m 3000 --seed 5 -o " + p("a.hg")), 0);
    ASSERT_EQ(run("gen --family random-linear --n 150 --m 3000 --seed 5 -o " + p("b.hg")), 0);
    EXPECT_EQ(slurp("a.hg"), slurp("b.hg"));
    ASSERT_EQ(run("find -i " + p("a.hg") + " --k 2 --csv " + p("1.csv") + " --emit-witnesses " + p("1.jsonl")), 0);
    ASSERT_EQ(run("find -i " + p("a.hg") + " --k 2 --csv " + p("2.csv") + " --emit-witnesses " + p("2.jsonl")), 0);
    EXPECT_EQ(slurp("1.csv"), slurp("2.csv"));
    EXPECT_EQ(slurp("1.jsonl"), slurp("2.jsonl"));
}
