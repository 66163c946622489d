#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "skeinlab/cli_app.hpp"

using namespace skeinlab;

namespace {

struct CliRun {
    int exit_code;
    std::string stdout_text;
    std::string stderr_text;
    Json document;
};

CliRun invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    CliRun run{code, out.str(), err.str(), Json()};
    if (!run.stdout_text.empty() && run.stdout_text.front() == '{') {
        run.document = Json::parse(run.stdout_text);
    }
    return run;
}

}  // namespace

TEST_CASE("transparency command passes at the canonical modulus") {
    CliRun run = invoke({"transparency", "--order", "5"});
    CHECK(run.exit_code == 0);
    CHECK(run.document["command"] == "transparency");
    CHECK(run.document["status"] == "pass");
    CHECK(run.document["payload"]["modulus"] == 20);
}

TEST_CASE("transparency negative control fails with exit code 1") {
    CliRun run = invoke({"transparency", "--order", "3", "--modulus", "13"});
    CHECK(run.exit_code == 1);
    CHECK(run.document["status"] == "fail");
}

TEST_CASE("disk rewrite n=3 emits the printed element") {
    CliRun run = invoke({"disk", "--op", "rewrite", "--n", "3"});
    CHECK(run.exit_code == 0);
    Json expected = Json::parse(R"({"terms":[
        {"symbol":"C","k":-1,"coeff":{"v_exponents":[[-6,"1"]]}},
        {"symbol":"C","k":2,"coeff":{"v_exponents":[[6,"1"]]}},
        {"symbol":"B","m":0,"eps":1,"coeff":{"v_exponents":[[-2,"1"],[2,"1"]]}}]})");
    CHECK(run.document["payload"]["element"] == expected);
}

TEST_CASE("identities with a degenerate range pass") {
    CliRun run = invoke({"identities", "--max", "0"});
    CHECK(run.exit_code == 0);
    CHECK(run.document["status"] == "pass");
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(invoke({"nonsense"}).exit_code == 2);
    CHECK(invoke({"cheb", "--kind", "T"}).exit_code == 2);          // missing --n
    CHECK(invoke({"cheb", "--kind", "X", "--n", "1"}).exit_code == 2);
    CHECK(invoke({"annulus", "--op", "Tn", "--n", "0"}).exit_code == 2);
    CHECK(invoke({"basis", "--from", "Tbar", "--to", "nope", "--max", "3"}).exit_code == 2);
    CHECK(invoke({}).exit_code == 2);
}

TEST_CASE("cheb command prints polynomials, including S_{-1}") {
    CliRun run = invoke({"cheb", "--kind", "S", "--n", "-1"});
    CHECK(run.exit_code == 0);
    CHECK(run.document["payload"]["poly"] == Json::parse(R"({"x_coeffs":[]})"));

    CliRun t2 = invoke({"cheb", "--kind", "T", "--n", "2"});
    CHECK(t2.document["payload"]["poly"] ==
          Json::parse(R"({"x_coeffs":[[0,{"v_exponents":[[0,"-2"]]}],[2,{"v_exponents":[[0,"1"]]}]]})"));
}

TEST_CASE("dominates reports failures with a counterexample and exit 1") {
    CliRun run = invoke({"dominates", "--a", "Tbar", "--b", "xn", "--max", "2"});
    CHECK(run.exit_code == 1);
    CHECK(run.document["status"] == "fail");
    CHECK(run.document["payload"]["counterexample"]["n"] == 2);

    CliRun pass = invoke({"dominates", "--a", "S", "--b", "Tbar", "--max", "8"});
    CHECK(pass.exit_code == 0);
    CHECK(pass.document["payload"]["dominates"] == true);
}

TEST_CASE("basis command emits the triangular matrix") {
    CliRun run = invoke({"basis", "--from", "xn", "--to", "S", "--max", "2"});
    CHECK(run.exit_code == 0);
    const Json& row2 = run.document["payload"]["matrix"][2];
    CHECK(row2[0] == Json::parse(R"({"v_exponents":[[0,"1"]]})"));
    CHECK(row2[1] == Json::parse(R"({"v_exponents":[]})"));
    CHECK(row2[2] == Json::parse(R"({"v_exponents":[[0,"1"]]})"));
}

TEST_CASE("audit command round-trips JSON payloads") {
    CliRun run = invoke({"audit", "--a", R"({"v_exponents":[[0,"1"]]})", "--c",
                         R"([{"v_exponents":[[0,"1"]]}])"});
    CHECK(run.exit_code == 0);
    CHECK(run.document["payload"]["d"] == Json::parse(R"({"v_exponents":[[0,"-1"]]})"));
    CHECK(run.document["payload"]["terms"][0]["symbol"] == "RN");

    CHECK(invoke({"audit", "--a", "nonsense", "--c", "[]"}).exit_code == 2);
}

TEST_CASE("products command writes well-formed CSV") {
    std::string path = "skeinlab_products_test.csv";
    CliRun run = invoke({"products", "--max", "4", "--csv", path});
    CHECK(run.exit_code == 0);
    std::ifstream csv(path);
    REQUIRE(csv.good());
    std::string header;
    std::getline(csv, header);
    CHECK(header == "m,n,k,coefficient_json");
    std::string first;
    std::getline(csv, first);
    CHECK(first == R"(0,0,0,"{""v_exponents"":[[0,""1""]]}")");
    std::remove(path.c_str());
}

TEST_CASE("verify-all output is deterministic") {
    CliRun first = invoke({"verify-all", "--max", "4"});
    CliRun second = invoke({"verify-all", "--max", "4"});
    CHECK(first.exit_code == 0);
    CHECK(first.document["status"] == "pass");
    CHECK(first.stdout_text == second.stdout_text);
}

TEST_CASE("SKEINLAB_MAX_DEGREE caps degree arguments") {
    setenv("SKEINLAB_MAX_DEGREE", "3", 1);
    CliRun run = invoke({"cheb", "--kind", "T", "--n", "9"});
    unsetenv("SKEINLAB_MAX_DEGREE");
    CHECK(run.exit_code == 0);
    CHECK(run.document["payload"]["n"] == 3);
}

TEST_CASE("pretty flag only changes whitespace") {
    CliRun compact = invoke({"cheb", "--kind", "Tbar", "--n", "4"});
    CliRun pretty = invoke({"--pretty", "cheb", "--kind", "Tbar", "--n", "4"});
    CHECK(compact.exit_code == 0);
    CHECK(pretty.exit_code == 0);
    CHECK(compact.document == pretty.document);
    CHECK(pretty.stdout_text.substr(0, 2) == "{\n");
}
