#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "crossprod/cli.hpp"
#include "crossprod/parse.hpp"

using namespace crossprod;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("nf prints the canonical normal form") {
    auto r = run({"nf", "--pres", "weyl", "d*x"});
    CHECK(r.code == 0);
    CHECK(r.out == "x*g1 + 1\n");
}

TEST_CASE("mul and type") {
    auto r = run({"mul", "--pres", "heisenberg", "g2", "g1"});
    CHECK(r.code == 0);
    CHECK(r.out == "g1*g2 - g3\n");
    auto t = run({"type", "--pres", "weyl", "x^2*g1 + x*g1^2"});
    CHECK(t.code == 0);
    CHECK(t.out == "(2)\n");
}

TEST_CASE("order flag switches the comparator") {
    auto deglex = run({"nf", "--pres", "weyl-ext-abelian", "g1^3 + g2"});
    CHECK(deglex.out == "g1^3 + g2\n");
    auto paper = run({"nf", "--pres", "weyl-ext-abelian", "--order", "paper", "g1^3 + g2"});
    CHECK(paper.out == "g2 + g1^3\n");
}

TEST_CASE("malformed expressions exit 2 with a position") {
    auto r = run({"nf", "--pres", "weyl", "d*x +"});
    CHECK(r.code == 2);
    CHECK(r.err.find("position") != std::string::npos);
    auto unknown = run({"nf", "--pres", "weyl", "q*x"});
    CHECK(unknown.code == 2);
}

TEST_CASE("unimodular command prints cofactors and VERIFIED") {
    auto r = run({"unimodular", "--pres", "weyl", "x^2", "1 + x*g1", "--cofactor-bound", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("VERIFIED") != std::string::npos);
    auto no = run({"unimodular", "--pres", "poly:1", "x1", "x1^2", "--cofactor-bound", "4"});
    CHECK(no.code == 3);
}

TEST_CASE("ordered-like command exits 1 on the max-semigroup") {
    auto r = run({"check-ordered-like", "nat-max:5", "--strict", "--subset-bound", "2"});
    CHECK(r.code == 1);
    CHECK(r.out.find("witness.s1") != std::string::npos);
    auto ok = run({"check-ordered-like", "nat-plus:10", "--strict", "--subset-bound", "2"});
    CHECK(ok.code == 0);
}

TEST_CASE("round-trip: printed elements reparse to equal elements") {
    auto pres = AlgebraPresentation::preset("heisenberg-ext");
    for (const char* expr : {"g3*g2*g1", "(x + g1)^2", "x*g2 - 1/3*g3^2", "d*x^2*d"}) {
        auto first = run({"nf", "--pres", "heisenberg-ext", expr});
        REQUIRE(first.code == 0);
        std::string printed = first.out.substr(0, first.out.size() - 1);
        CHECK(parse_element(printed, pres) == parse_element(expr, pres));
    }
}

TEST_CASE("machine invocations are bit-identical and verify round-trips") {
    auto a = run({"certify-noncyclic", "--pres", "weyl", "x^2", "g1 + 1", "--degree-cap", "7",
                  "--machine"});
    auto b = run({"certify-noncyclic", "--pres", "weyl", "x^2", "g1 + 1", "--degree-cap", "7",
                  "--machine"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);

    std::string path = "cli_cert_tmp.txt";
    {
        std::ofstream f(path, std::ios::binary);
        f << a.out;
    }
    auto ver = run({"verify", path});
    CHECK(ver.code == 0);
    CHECK(ver.out.find("VALID") == 0);

    // perturb each digit of the d0 field in turn; every variant must fail
    size_t pos = a.out.find("d0 = ");
    REQUIRE(pos != std::string::npos);
    std::string tampered = a.out;
    tampered[pos + 5] = tampered[pos + 5] == '9' ? '8' : tampered[pos + 5] + 1;
    {
        std::ofstream f(path, std::ios::binary);
        f << tampered;
    }
    auto bad = run({"verify", path});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("INVALID") == 0);
    std::remove(path.c_str());
}

TEST_CASE("stafford command distinguishes the two model cases") {
    auto unstable = run({"stafford", "--pres", "weyl", "x"});
    CHECK(unstable.code == 1);
    CHECK(unstable.out.find("unstable") != std::string::npos);

    std::string path = "euler_tmp.alg";
    {
        std::ofstream f(path);
        f << "[base]\nvars = x\n[lie]\ngenerators = e\n[action]\ndelta.e.x = \"x\"\n";
    }
    auto stable = run({"stafford", "--pres", path, "x"});
    CHECK(stable.code == 0);
    CHECK(stable.out.find("verdict = stable") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("presentation files load and hash into certificates") {
    std::string path = "weyl_copy_tmp.alg";
    {
        std::ofstream f(path);
        f << AlgebraPresentation::preset("weyl").canonical_text();
    }
    auto r = run({"nf", "--pres", path, "d*x"});
    CHECK(r.code == 0);
    CHECK(r.out == "x*g1 + 1\n");
    std::remove(path.c_str());
    auto missing = run({"nf", "--pres", "no_such_file.alg", "x"});
    CHECK(missing.code == 2);
}

TEST_CASE("ideal subcommand emits generators") {
    auto r = run({"ideal", "--pres", "poly:1", "x1", "x1 + 1", "--syzygy-bound", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("generator.1") != std::string::npos);
}

TEST_CASE("help exits zero") {
    auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("crossprod") != std::string::npos);
}
