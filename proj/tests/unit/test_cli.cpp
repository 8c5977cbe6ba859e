#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vest/cli.hpp"
#include "vest/json_io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = vest::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kSample = std::string(VEST_TEST_DATA_DIR) + "/sample_z2.json";

struct TempDir {
    fs::path path;
    TempDir() {
        static std::atomic<int> counter{0};
        path = fs::temp_directory_path() / ("vest_cli_test_" + std::to_string(++counter));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("solve prints M_k") {
    CHECK(run_cli({"solve", "--in", kSample, "--k", "2", "--method", "dp"}).out == "M_k = 3\n");
    CHECK(run_cli({"solve", "--in", kSample, "--k", "2", "--method", "brute"}).out == "M_k = 3\n");
    CHECK(run_cli({"solve", "--in", kSample, "--k", "2", "--method", "dp-rows"}).out ==
          "M_k = 3\n");
    // Without --k the instance's embedded k applies.
    CHECK(run_cli({"solve", "--in", kSample, "--method", "brute"}).out == "M_k = 3\n");
}

TEST_CASE("solve methods agree on a generated instance") {
    TempDir tmp;
    std::ofstream(tmp.file("p3.txt")) << "3 2\n0 1\n1 2\n";
    const auto gen = run_cli({"gen", "dominating-set", "--in", tmp.file("p3.txt"), "--k", "2",
                              "--out", tmp.file("p3.json")});
    REQUIRE(gen.code == 0);
    const auto brute = run_cli({"solve", "--in", tmp.file("p3.json"), "--method", "brute"});
    const auto dp = run_cli({"solve", "--in", tmp.file("p3.json"), "--method", "dp"});
    CHECK(brute.out == dp.out);
    // P_3: dominating pairs {a,b},{b,c},{a,c} and M_2 = 2! * 3.
    CHECK(brute.out == "M_k = 6\n");
}

TEST_CASE("gen writes instance and certificate") {
    TempDir tmp;
    std::ofstream(tmp.file("k3.txt")) << "3 3\n0 1\n1 2\n0 2\n";
    const auto result = run_cli({"gen", "dominating-set", "--in", tmp.file("k3.txt"), "--k", "1",
                                 "--out", tmp.file("k3.json")});
    CHECK(result.code == 0);
    CHECK(fs::exists(tmp.file("k3.json")));
    CHECK(fs::exists(tmp.file("k3.cert.json")));
    const auto solved = run_cli({"solve", "--in", tmp.file("k3.json"), "--method", "brute"});
    CHECK(solved.out == "M_k = 3\n");

    // Identical invocations produce byte-identical artifacts.
    const auto again = run_cli({"gen", "dominating-set", "--in", tmp.file("k3.txt"), "--k", "1",
                                "--out", tmp.file("k3b.json")});
    CHECK(again.code == 0);
    CHECK(vest::read_file(tmp.file("k3.json")) == vest::read_file(tmp.file("k3b.json")));
}

TEST_CASE("gen covers the number-set and instance-to-instance constructions") {
    TempDir tmp;
    std::ofstream(tmp.file("sys.json")) << R"({"universe": 2, "sets": [[1], [2], [1, 2]]})";
    CHECK(run_cli({"gen", "k-product", "--in", tmp.file("sys.json"), "--k", "2", "--out",
                   tmp.file("prod.json")})
              .code == 0);
    CHECK(run_cli({"gen", "at-most-k-sum", "--in", tmp.file("sys.json"), "--k", "1", "--out",
                   tmp.file("sum.json")})
              .code == 0);

    std::ofstream(tmp.file("ints.json")) << "[1]";
    CHECK(run_cli({"gen", "sum-to-zero-product", "--in", tmp.file("ints.json"), "--k", "1",
                   "--out", tmp.file("mats.json")})
              .code == 0);
    CHECK(run_cli({"gen", "sum-to-vest", "--in", tmp.file("ints.json"), "--k", "1", "--out",
                   tmp.file("vest.json")})
              .code == 0);
    // The matrix-zero instance solves at its embedded k; the only vanishing
    // length-3 word over {shear(1), collapse} is collapse shear collapse.
    CHECK(run_cli({"solve", "--in", tmp.file("mats.json"), "--method", "brute"}).out ==
          "M_k = 1\n");

    std::ofstream(tmp.file("pairs.json")) << R"([["01", "01"]])";
    CHECK(run_cli({"gen", "pcp", "--in", tmp.file("pairs.json"), "--out", tmp.file("pcp.json")})
              .code == 0);
    CHECK(run_cli({"solve", "--in", tmp.file("pcp.json"), "--k", "1", "--method", "brute"}).out ==
          "M_k = 1\n");

    CHECK(run_cli({"gen", "eliminate-s", "--in", kSample, "--out", tmp.file("elim.json")}).code ==
          4); // sample is a finite-field instance; the construction is rational-only

    std::ofstream(tmp.file("rational.json")) << R"({
        "field": {"kind": "rational"}, "dim": 1, "target": "vector_zero",
        "s": [["1"]], "v": ["1"], "matrices": [[["0"]]], "k": 1})";
    CHECK(run_cli({"gen", "vest-to-zero-product", "--in", tmp.file("rational.json"), "--out",
                   tmp.file("vzp.json")})
              .code == 0);
    CHECK(run_cli({"solve", "--in", tmp.file("vzp.json"), "--method", "brute"}).out ==
          "M_k = 1\n");
    // The folded instance needs its S stand-in explicit, which sum-to-vest
    // outputs (identity S) do not carry.
    CHECK(run_cli({"gen", "vest-to-zero-product", "--in", tmp.file("vest.json"), "--k", "1",
                   "--out", tmp.file("bad.json")})
              .code == 4);
    CHECK(run_cli({"gen", "zero-product-to-vest", "--in", tmp.file("mats.json"), "--out",
                   tmp.file("zpv.json")})
              .code == 0);
}

TEST_CASE("min-k subcommand") {
    CHECK(run_cli({"min-k", "--in", kSample}).out == "min_k = 1\n");
}

TEST_CASE("bench emits CSV") {
    const auto result = run_cli({"bench", "--in", kSample, "--kmax", "3"});
    CHECK(result.code == 0);
    CHECK(result.out.rfind("k,method,millis,count\n", 0) == 0);
    CHECK(result.out.find("1,brute,") != std::string::npos);
    CHECK(result.out.find("3,dp,") != std::string::npos);
}

TEST_CASE("verify-reduction subcommand") {
    const auto result = run_cli({"verify-reduction", "pcp", "--trials", "2", "--max-size", "3",
                                 "--seed", "11"});
    CHECK(result.code == 0);
    CHECK(result.out.find("exhaustive: PASS") != std::string::npos);
    CHECK(result.out.find("trial 2: PASS") != std::string::npos);
    CHECK(result.out.find("summary: 3/3 passed") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"solve"}).code == 2);                                  // missing --in
    CHECK(run_cli({"solve", "--in", kSample, "--method", "magic"}).code == 2);
    CHECK(run_cli({"gen", "no-such-reduction", "--in", "x", "--out", "y"}).code == 2);
    TempDir tmp;
    std::ofstream(tmp.file("pairs.json")) << R"([["01", "01"]])";
    const auto gen = run_cli({"gen", "pcp", "--in", tmp.file("pairs.json"), "--out",
                              tmp.file("p.json")});
    REQUIRE(gen.code == 0);
    // The generated file carries no k, so solve demands one.
    CHECK(run_cli({"solve", "--in", tmp.file("p.json"), "--method", "brute"}).code == 2);
}

TEST_CASE("malformed inputs exit 4") {
    CHECK(run_cli({"solve", "--in", "/nonexistent.json", "--k", "1"}).code == 4);
    TempDir tmp;
    std::ofstream(tmp.file("bad.json")) << "{";
    CHECK(run_cli({"solve", "--in", tmp.file("bad.json"), "--k", "1"}).code == 4);
}

TEST_CASE("budget exhaustion exits 3") {
    CHECK(run_cli({"solve", "--in", kSample, "--k", "50", "--method", "brute", "--budget", "10"})
              .code == 3);
}

TEST_CASE("trace output") {
    const auto result =
        run_cli({"solve", "--in", kSample, "--k", "2", "--method", "dp", "--trace"});
    CHECK(result.out == "level 1: states=2, total=2\nlevel 2: states=2, total=4\nM_k = 3\n");
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"solve", "--help"}).code == 0);
}
