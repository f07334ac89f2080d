#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <memory>

#include "fincat/io.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using fincat::json;
using testsupport::fixture;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(FINCAT_BIN) + " " + args + " 2>&1";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

json run_json(const std::string& args, int expected) {
    auto r = run(args + " --format json");
    CAPTURE(r.out);
    CHECK(r.status == expected);
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("validate") {
    CHECK(run("validate " + fixture("I.json")).status == 0);
    CHECK(run("validate " + fixture("D_B2.json")).status == 0);
    CHECK(run("validate --kind dbl " + fixture("D_B2.json")).status == 0);
    CHECK(run("validate --kind cat " + fixture("D_B2.json")).status == 2);
    CHECK(run("validate missing.json").status == 2);
    auto j = run_json("validate " + fixture("broken/dangling_src.json"), 2);
    CHECK(j["error"]["kind"] == "dangling-identifier");
    CHECK(j["error"]["location"] == "morphisms[0].src");
    CHECK(run_json("validate " + fixture("broken/unknown_kind.json"), 2)["error"]["kind"] == "unknown-kind");
    CHECK(run_json("validate " + fixture("broken/partial_compose.json"), 2)["error"]["kind"] == "partial-table");
    auto nf = run_json("validate " + fixture("broken/not_a_functor.json"), 1);
    CHECK(nf["result"] == "fail");
}

TEST_CASE("span writes three files with certified legs") {
    const fs::path out = fs::temp_directory_path() / "fincat_cli_span";
    fs::remove_all(out);
    auto j = run_json("span --kind cat " + fixture("F_I_to_1.json") + " -o " + out.string(), 0);
    CHECK(j["result"] == "certified");
    for (const auto* f : {"apex.json", "left.json", "right.json"}) CHECK(fs::exists(out / f));
    CHECK(run("check --kind cat --prop surjective-equivalence " + (out / "left.json").string()).status == 0);
    CHECK(run("validate " + (out / "apex.json").string()).status == 0);
    fs::remove_all(out);

    CHECK(run("span --kind mon " + fixture("quotient_Z4_Z2.json")).status == 0);
    CHECK(run("span --kind 2cat " + fixture("id_B2.json")).status == 0);
    CHECK(run("span --kind dbl " + fixture("quotient_double.json")).status == 0);
    auto refused = run_json("span --kind 2cat " + fixture("B2_to_terminal.json"), 1);
    CHECK(refused["result"] == "refused");
}

TEST_CASE("check reports the first failing condition") {
    auto bad = run_json("check --kind dbl --prop surjective-equivalence " + fixture("P_D_Bz_corrupted.json"), 1);
    CHECK(bad["result"] == "fail");
    CHECK(bad["first_failure"] == "full on squares");
    auto good = run_json("check --kind dbl --prop surjective-equivalence " + fixture("P_D_Bz.json"), 0);
    CHECK(good["result"] == "pass");
    CHECK(run("check --kind dbl --prop gregarious-equivalence " + fixture("quotient_double.json")).status == 0);
    CHECK(run("check --kind 2cat --prop biequivalence " + fixture("B2_to_terminal.json")).status == 1);
    CHECK(run("check --kind cat --prop equivalence " + fixture("F_I_to_1.json")).status == 0);
    CHECK(run("check --kind mon --prop strict " + fixture("quotient_Z4_Z2.json")).status == 0);
}

TEST_CASE("invert") {
    auto j = run_json("invert " + fixture("quotient_double.json"), 0);
    CHECK(j["composite_is_identity"] == true);
    CHECK(j["strict"] == false);
    CHECK(run("invert " + fixture("P_D_Bz_corrupted.json")).status == 1);
}

TEST_CASE("oracle") {
    auto fwd = run_json("oracle --kind mon --pred surjective-equivalence " + fixture("Z4.json") + " " +
                            fixture("M1.json"),
                        0);
    CHECK(fwd["status"] == "found");
    auto rev = run_json("oracle --kind mon --pred equivalence " + fixture("M1.json") + " " + fixture("Z4.json"), 1);
    CHECK(rev["status"] == "exhausted");
    auto dbl = run_json("oracle --kind dbl --pred gregarious-equivalence " + fixture("D_M1.json") + " " +
                            fixture("D_Z4.json"),
                        1);
    CHECK(dbl["status"] == "exhausted");
    auto budget = run_json("oracle --kind cat --budget 1 " + fixture("catalog/K3.json") + " " +
                               fixture("catalog/K3.json") + " --pred surjective-equivalence",
                           2);
    CHECK(budget["status"] == "budget");
}

TEST_CASE("closure partitions the catalog") {
    std::string files;
    for (const auto* n : {"1", "I", "K3", "2", "A", "Z2", "Z2I", "AI", "1_plus_I"})
        files += " " + fixture(std::string("catalog/") + n + ".json");
    auto j = run_json("closure" + files, 0);
    CHECK(j["blocks"].size() == 4);
    CHECK(j["edges"] == 34);
}

TEST_CASE("verb and kind combinations outside the matrix are rejected at parse time") {
    CHECK(run("invert --kind cat " + fixture("F_I_to_1.json")).status == 2);
    CHECK(run("closure --kind dbl " + fixture("D_B2.json")).status == 2);
    CHECK(run("check --kind cat --prop biequivalence " + fixture("F_I_to_1.json")).status == 2);
    CHECK(run("span --kind operad " + fixture("F_I_to_1.json")).status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("").status == 2);
    CHECK(run("--help").status == 0);
}

TEST_CASE("reports are byte-identical across runs") {
    const std::string args = "span --kind dbl --format json " + fixture("id_D_B2.json");
    auto a = run(args);
    auto b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    const std::string o = "oracle --kind dbl --parallel 4 --format json " + fixture("D_Z4.json") + " " +
                          fixture("D_M1.json");
    auto c = run(o);
    CHECK(c.out == run(o).out);
    CHECK(c.out == run("oracle --kind dbl --format json " + fixture("D_Z4.json") + " " + fixture("D_M1.json")).out);
}
