#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "lialg/workbench.hpp"

using namespace lialg;

namespace {

std::string write_temp(const std::string& text) {
    static int counter = 0;
    auto path = std::filesystem::temp_directory_path() /
                ("lialg_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) +
                 ".lie");
    std::ofstream out(path);
    out << text;
    return path.string();
}

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli_run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("catalog algebras match their defining brackets") {
    LieAlgebra e2 = catalog("ecomp", {{"p", "2"}});
    auto f = e2.field();
    CHECK(e2.dim() == 4);
    CHECK(e2.labels() == std::vector<std::string>{"e0", "e1", "x", "y"});
    auto bk = [&](const char* a, const char* b) {
        return e2.bracket_basis(e2.label_index(a), e2.label_index(b));
    };
    Vec e1v = zero_vec(f, 4);
    e1v[1] = Scalar::one(f);
    Vec e0v = zero_vec(f, 4);
    e0v[0] = Scalar::one(f);
    Vec xv = zero_vec(f, 4);
    xv[2] = Scalar::one(f);
    CHECK(bk("e0", "x") == e1v);
    CHECK(bk("e1", "x") == e0v);
    CHECK(vec_is_zero(bk("e0", "y")));
    CHECK(bk("e1", "y") == e1v);
    CHECK(bk("x", "y") == xv);
    CHECK(vec_is_zero(bk("e0", "e1")));

    LieAlgebra e3 = catalog("ecomp", {{"p", "3"}});
    CHECK(e3.dim() == 5);
    CHECK(e3.field().p() == 3);

    // a3 over gf3: [y,b] = y - x = y + 2x
    LieAlgebra a3 = catalog("a3", {{"field", "gf3"}});
    Vec yb = a3.bracket_basis(a3.label_index("y"), a3.label_index("b"));
    CHECK(yb[0] == Scalar::from_int(2, a3.field()));
    CHECK(yb[1] == Scalar::one(a3.field()));

    LieAlgebra ab = catalog("abelian", {{"n", "3"}, {"field", "gf2"}});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(vec_is_zero(ab.bracket_basis(i, j)));
}

TEST_CASE("catalog rejects bad parameters") {
    CHECK_THROWS_AS(catalog("nope"), UnknownCatalogName);
    CHECK_THROWS_AS(catalog("ecomp", {{"p", "4"}}), BadParameters);
    CHECK_THROWS_AS(catalog("ecomp", {{"q", "2"}}), BadParameters);
    CHECK_THROWS_AS(catalog("a3", {{"field", "gf4"}}), BadParameters);
    CHECK_THROWS_AS(catalog("abelian", {{"n", "x"}}), BadParameters);
    CHECK_THROWS_AS(catalog("typeI", {{"weights", "a,b"}}), BadParameters);
}

TEST_CASE("random solvable generator") {
    for (std::int64_t p : {2, 3}) {
        for (std::uint64_t seed : {1ull, 2ull, 42ull}) {
            LieAlgebra l = random_solvable(seed, 5, p);
            CHECK(l.dim() == 5);
            CHECK(structure_flags(l).solvable);
            // reproducible bit-exactly
            CHECK(serialize(l) == serialize(random_solvable(seed, 5, p)));
        }
    }
    // different seeds give different algebras at least somewhere
    bool differs = false;
    for (std::uint64_t seed = 1; seed <= 8 && !differs; ++seed)
        differs = serialize(random_solvable(seed, 4, 3)) != serialize(random_solvable(seed + 100, 4, 3));
    CHECK(differs);
}

TEST_CASE("lie files round-trip") {
    for (const char* name :
         {"ecomp", "a3", "abelian", "heisenberg", "r2", "typeI", "triangular"}) {
        LieAlgebra l = catalog(name);
        std::string text = serialize(l);
        LieAlgebra back = parse_lie_file(text);
        CHECK(back == l);
        CHECK(serialize(back) == text); // canonical text is a fixpoint
    }
    // rationals with fraction coefficients
    std::string rat_text = "field rat\ndim 2\nbasis x b\nbracket x b = 1/2*x\n";
    LieAlgebra l = parse_lie_file(rat_text);
    CHECK(serialize(l) == rat_text);
}

TEST_CASE("lie file parse errors") {
    CHECK_THROWS_AS(parse_lie_file(""), ParseError);
    CHECK_THROWS_AS(parse_lie_file("field gf 4\ndim 1\n"), ParseError);
    CHECK_THROWS_AS(parse_lie_file("field gf 2\n"), ParseError);
    CHECK_THROWS_AS(parse_lie_file("dim 2\nfield gf 2\n"), ParseError);
    CHECK_THROWS_AS(parse_lie_file("field gf 2\ndim 2\nbasis a\n"), ParseError);
    CHECK_THROWS_AS(parse_lie_file("field gf 2\ndim 2\nwibble\n"), ParseError);
    CHECK_THROWS_AS(parse_lie_file("field gf 2\ndim 2\nbasis a b\nbracket a b =\n"), ParseError);
    CHECK_THROWS_AS(
        parse_lie_file("field gf 2\ndim 2\nbasis a b\nbracket a b = a + \n"), ParseError);
    CHECK_THROWS_AS(parse_lie_file("field gf 2\ndim 2\nbasis x y\nbracket x x = y\n"),
                    SelfBracketNonzero);
    CHECK_THROWS_AS(parse_lie_file("field gf 2\ndim 2\nbasis x y\n"
                                   "bracket x y = x\nbracket y x = x\n"),
                    DuplicateBracket);
    CHECK_THROWS_AS(parse_lie_file("field gf 3\ndim 2\nbasis x y\nbracket x y = 1/2*x\n"),
                    RationalLiteralInPrimeField);
    CHECK_THROWS_AS(parse_lie_file("field gf 2\ndim 2\nbasis a b\nbracket a c = b\n"),
                    UnknownLabel);
    // comments and blank lines are fine
    CHECK_NOTHROW(parse_lie_file("# header\nfield gf 2\n\ndim 1 # inline\n"));
}

TEST_CASE("cli: query commands and exit codes") {
    std::string e2 = write_temp(serialize(catalog("ecomp", {{"p", "2"}})));

    auto info = run_cli({"info", e2});
    CHECK(info.code == 0);
    CHECK(info.out.find("dim: 4") != std::string::npos);

    auto comp = run_cli({"complemented", e2});
    CHECK(comp.code == 0);
    CHECK(comp.out == "true\n");

    auto verify = run_cli({"verify", e2});
    CHECK(verify.code == 0);
    CHECK(verify.out.find("fail") == std::string::npos);

    auto missing = run_cli({"info", "/nonexistent/file.lie"});
    CHECK(missing.code == 2);

    auto usage = run_cli({"frobnicate"});
    CHECK(usage.code == 2);

    auto bad_route = run_cli({"complemented", e2, "--route", "bogus"});
    CHECK(bad_route.code == 2);

    std::string rat = write_temp("field rat\ndim 2\nbasis x b\nbracket x b = x\n");
    auto unsupported = run_cli({"frattini", rat});
    CHECK(unsupported.code == 3);

    std::remove(e2.c_str());
    std::remove(rat.c_str());
}

TEST_CASE("cli: the derived subalgebra of the example is reported uncomplemented") {
    LieAlgebra l = catalog("ecomp", {{"p", "2"}});
    LieAlgebra bb = induced_algebra(l, derived_series(l).terms[1], InducedMode::subalgebra).algebra;
    std::string path = write_temp(serialize(bb));
    auto r = run_cli({"complemented", path});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("false\n", 0) == 0);
    CHECK(r.out.find("span(e0+e1)") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("cli: catalog emit matches the library serialization") {
    auto r = run_cli({"catalog", "emit", "ecomp", "--param", "p=3"});
    CHECK(r.code == 0);
    CHECK(r.out == serialize(catalog("ecomp", {{"p", "3"}})));
    CHECK(r.out.find("dim 5") != std::string::npos);

    auto list = run_cli({"catalog", "list"});
    CHECK(list.code == 0);
    CHECK(list.out.find("ecomp") != std::string::npos);

    auto unknown = run_cli({"catalog", "emit", "nope"});
    CHECK(unknown.code == 2);
}

TEST_CASE("cli: json and text verdicts agree") {
    std::string path = write_temp(serialize(catalog("a3", {{"field", "gf3"}})));

    auto text = run_cli({"verify", path});
    auto json = run_cli({"--json", "verify", path});
    CHECK(text.code == json.code);
    auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["algebra"]["dim"] == 3);
    CHECK(doc["flags"]["solvable"] == true);
    // each json record appears in the text output with the same status
    for (const auto& rec : doc["records"]) {
        std::string line = rec["id"].get<std::string>() + ": " + rec["status"].get<std::string>();
        CHECK(text.out.find(line) != std::string::npos);
    }
    CHECK(doc["records"].size() > 0);

    auto jf = run_cli({"--json", "frattini", path});
    auto fdoc = nlohmann::json::parse(jf.out);
    REQUIRE(fdoc["subspaces"]["frattini"].size() == 1);
    // phi = span(x) has the single coordinate row 1 0 0
    auto row = fdoc["subspaces"]["frattini"][0][0];
    CHECK(row[0] == "1");
    CHECK(row[1] == "0");
    CHECK(row[2] == "0");

    std::remove(path.c_str());
}

TEST_CASE("cli: theorem selection and budget flag") {
    std::string path = write_temp(serialize(catalog("r2", {{"field", "gf2"}})));
    auto r = run_cli({"verify", path, "--theorems", "t1.iv,prop.iii"});
    CHECK(r.code == 0);
    CHECK(r.out.find("t1.iv: pass") != std::string::npos);
    CHECK(r.out.find("prop.iii: pass") != std::string::npos);
    CHECK(r.out.find("t2.equiv") == std::string::npos);

    // a budget too small to enumerate anything maps to exit 3
    auto tiny = run_cli({"verify", path, "--budget", "1"});
    CHECK(tiny.code == 3);
    std::remove(path.c_str());
}
