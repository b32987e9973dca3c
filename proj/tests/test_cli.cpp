#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "fracdecomp/rational.hpp"

namespace fs = std::filesystem;
using fracdecomp::Rational;
using fracdecomp::format_rational;

namespace {

struct Run
{
    int status;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int status = fracdecomp::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

struct Scratch
{
    fs::path dir;
    Scratch()
    {
        dir = fs::temp_directory_path() / ("fracdecomp_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }
    std::string operator()(const std::string& name) const { return (dir / name).string(); }
};

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("threshold")
{
    auto r = run({"threshold", "--e1", "3", "--e2", "1", "--e3", "1"});
    CHECK(r.status == 0);
    CHECK(r.out == "2/3\n");
    CHECK(run({"threshold", "--e1", "1", "--e2", "1", "--e3", "1"}).out == "1/1\n");
}

TEST_CASE("threshold-table for cycles")
{
    auto r = run({"threshold-table", "--family", "cycle", "--max", "11"});
    REQUIRE(r.status == 0);
    std::ostringstream expected;
    expected << "l lower upper\n";
    for (int l = 5; l <= 11; l += 2)
        expected << l << ' ' << format_rational(Rational(1, 2) + Rational(1, 2 * l - 2)) << ' '
                 << format_rational(Rational(1, 2) + Rational(1, 2 * l - 4)) << '\n';
    CHECK(r.out == expected.str());
}

TEST_CASE("threshold-table for K_{a,1,1} marks irrational bounds")
{
    auto r = run({"threshold-table", "--family", "K_a11", "--max", "2"});
    REQUIRE(r.status == 0);
    // a = 2: rho = 2/5 gives (21 - sqrt 7)/28 = 0.655508881748...
    CHECK(r.out == "a lower upper\n1 3/4 1/1\n2 ≈0.655508881748 4/5\n");
    CHECK(run({"threshold-table", "--family", "K_aa1", "--max", "3"}).out ==
          "a lower upper\n1 3/4 1/1\n2 2/3 3/4\n3 5/8 3/4\n");
    CHECK(run({"threshold-table", "--family", "wheel", "--max", "3"}).status == 1);
}

TEST_CASE("oracle answers")
{
    auto r = run({"oracle", "--template", "C5", "--host", "K33"});
    CHECK(r.status == 0);
    CHECK(r.out == "infeasible\n");
    CHECK(run({"oracle", "--template", "K3", "--host", "K4"}).out == "feasible\n");
}

TEST_CASE("malformed input exits 1 with a one-line diagnostic")
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"threshold", "--e1", "x", "--e2", "1", "--e3", "1"},
             {"threshold", "--e1", "1", "--e2", "3", "--e3", "1"},
             {"decompose", "--graph", "nosuchgraph", "--template", "3,1,1"},
             {"decompose", "--graph", "K5", "--template", "3,1"},
             {"frobnicate"},
             {}})
    {
        auto r = run(args);
        CHECK(r.status == 1);
        CHECK(count_lines(r.err) == 1);
    }
    CHECK(run({"--help"}).status == 0);
}

TEST_CASE("mathematical failure exits 2 with a witness")
{
    auto r = run({"decompose", "--graph", "C5", "--template", "3,1,1"});
    CHECK(r.status == 2);
    CHECK(r.err.find("{0,1}") != std::string::npos);
}

TEST_CASE("certificates re-verify and are byte-identical across runs")
{
    Scratch tmp;
    spit(tmp("p5.txt"), "0 2\n1 3\n4\n");

    const std::vector<std::vector<std::string>> commands{
        {"random-graph", "--n", "24", "--min-degree", "3/4", "--seed", "5", "--output", tmp("g.txt")},
        {"--jobs", "3", "decompose", "--graph", tmp("g.txt"), "--template", "3,1,1", "--output", tmp("d.txt")},
        {"condense", "--graph", "C5", "--partition", tmp("p5.txt"), "--output", tmp("c.txt")},
        {"blowup", "--graph", "C5", "--partition", tmp("p5.txt"), "--q", "3", "--output", tmp("b.txt"),
         "--host-output", tmp("bh.txt")},
        {"extremal", "--lemma", "7", "--template-graph", "C5", "--n", "80", "--output", tmp("e7.txt"),
         "--host-output", tmp("h7.txt")},
        {"extremal", "--lemma", "8", "--template-graph", "K211", "--output", tmp("e8.txt"), "--host-output",
         tmp("h8.txt")},
        {"oracle", "--template", "C5", "--host", "K7", "--witness", tmp("o1.txt")},
        {"oracle", "--template", "T3,2,1", "--host", "T3,1,1", "--witness", tmp("o2.txt")},
    };
    const std::vector<std::string> files{"g.txt", "d.txt", "c.txt", "b.txt", "bh.txt", "e7.txt",
                                         "h7.txt", "e8.txt", "h8.txt", "o1.txt", "o2.txt"};

    std::vector<std::string> first_out;
    for (const auto& c : commands)
    {
        auto r = run(c);
        CAPTURE(c[0]);
        CAPTURE(r.err);
        REQUIRE(r.status == 0);
        first_out.push_back(r.out);
    }
    std::map<std::string, std::string> first;
    for (const auto& f : files)
        first[f] = slurp(tmp(f));

    for (std::size_t i = 0; i < commands.size(); ++i)
        CHECK(run(commands[i]).out == first_out[i]);
    for (const auto& f : files)
    {
        CAPTURE(f);
        CHECK_FALSE(first[f].empty());
        CHECK(slurp(tmp(f)) == first[f]);
    }

    CHECK(run({"verify", "--host", tmp("g.txt"), "--certificate", tmp("d.txt")}).status == 0);
    CHECK(run({"verify", "--host", tmp("bh.txt"), "--certificate", tmp("b.txt")}).status == 0);
    CHECK(run({"verify", "--host", tmp("h7.txt"), "--certificate", tmp("e7.txt")}).status == 0);
    CHECK(run({"verify", "--host", tmp("h8.txt"), "--certificate", tmp("e8.txt")}).status == 0);
    CHECK(run({"verify", "--host", "K7", "--certificate", tmp("o1.txt")}).status == 0);
    auto o2 = run({"verify", "--host", "T3,1,1", "--certificate", tmp("o2.txt")});
    CHECK(o2.status == 0);
    CHECK(o2.out.rfind("valid", 0) == 0);
    CHECK(slurp(tmp("c.txt")) == "3 3\n0 1 3/1\n0 2 1/1\n1 2 1/1\n");

    SUBCASE("tampering is caught")
    {
        std::string d = first["d.txt"];
        auto pos = d.rfind(' ');
        spit(tmp("bad.txt"), d.substr(0, pos) + " 1/1\n");
        auto r = run({"verify", "--host", tmp("g.txt"), "--certificate", tmp("bad.txt")});
        CHECK(r.status == 2);
        CHECK(r.out.find("status=") != std::string::npos);

        std::string e = first["e7.txt"];
        e.replace(e.find("rho 1/5"), 7, "rho 1/3");
        spit(tmp("bad7.txt"), e);
        auto r7 = run({"verify", "--host", tmp("h7.txt"), "--certificate", tmp("bad7.txt")});
        CHECK(r7.status == 2);
        CHECK(r7.out.rfind("invalid", 0) == 0);

        CHECK(run({"verify", "--host", "K4", "--certificate", tmp("o1.txt")}).status != 0);
        CHECK(run({"verify", "--host", "K7", "--certificate", tmp("p5.txt")}).status == 1);
    }
}

TEST_CASE("blowup beyond the copy cap is checked by counting")
{
    Scratch tmp;
    spit(tmp("p7.txt"), "0 2 4\n1 3 5\n6\n");
    auto r = run({"blowup", "--graph", "C7", "--partition", tmp("p7.txt"), "--q", "4", "--max-copies", "10"});
    CHECK(r.status == 0);
    CHECK(r.out == "copies=2304 alpha=1/144 status=exact-by-count\n");
}
