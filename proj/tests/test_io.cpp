#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "fincat/double_span.hpp"
#include "fincat/fixtures.hpp"
#include "fincat/io.hpp"
#include "support.hpp"

using namespace fincat;
namespace fx = fincat::fixtures;
namespace fs = std::filesystem;
using testsupport::fixture;

namespace {

ParseError::Kind parse_error_kind(const std::string& rel) {
    try {
        parse_structure_file(fixture(rel));
    } catch (const ParseError& e) {
        return e.kind();
    }
    FAIL("no parse error for " << rel);
    return ParseError::Kind::io;
}

json round_trip(const json& j) { return to_json(parse_structure(j, ".")); }

}  // namespace

TEST_CASE("bundled fixtures parse and validate") {
    std::size_t n = 0;
    for (const auto& e : fs::recursive_directory_iterator(FIXTURE_DIR)) {
        if (!e.is_regular_file() || e.path().parent_path().filename() == "broken") continue;
        CAPTURE(e.path().string());
        CHECK_NOTHROW(parse_structure_file(e.path()));
        ++n;
    }
    CHECK(n >= 20);
    CHECK(kind_name(parse_structure_file(fixture("I.json"))) == "category");
    auto d = parse_structure_file(fixture("D_B2.json"));
    REQUIRE(std::holds_alternative<DblPtr>(d));
    CHECK(validate_double_category(*std::get<DblPtr>(d)).ok());
}

TEST_CASE("functor files may name their ends by relative path") {
    auto F = std::get<FinFunctor>(parse_structure_file(fixture("F_I_to_1.json")));
    CHECK(F.source->object_count() == 2);
    CHECK(F.target->object_count() == 1);
    CHECK(check_functor_properties(F).surjective_equivalence());
}

TEST_CASE("errors are located and distinguished") {
    try {
        parse_structure_file(fixture("broken/dangling_src.json"));
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseError::Kind::dangling);
        CHECK(e.location() == "morphisms[0].src");
    }
    CHECK(parse_error_kind("broken/unknown_kind.json") == ParseError::Kind::unknown_kind);
    CHECK(parse_error_kind("broken/partial_compose.json") == ParseError::Kind::partial);
    CHECK(parse_error_kind("broken/not_a_functor.json") == ParseError::Kind::invalid);
    CHECK(parse_error_kind("missing.json") == ParseError::Kind::io);
    CHECK(to_string(ParseError::Kind::dangling) == "dangling-identifier");
    CHECK(to_string(ParseError::Kind::partial) == "partial-table");

    json bad = json::parse(R"({"kind": "category", "objects": ["a"], "morphisms": 3})");
    CHECK_THROWS_AS(parse_structure(bad, "."), ParseError);
    CHECK_THROWS_AS(parse_structure(json::parse("[1, 2]"), "."), ParseError);
}

TEST_CASE("nested errors carry the path into the nested document") {
    json f = to_json(identity_functor(fx::iso_category()));
    f["source"]["morphisms"][0]["tgt"] = "nowhere";
    try {
        parse_structure(f, ".");
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(e.location().rfind("source>", 0) == 0);
    }
}

TEST_CASE("writing and reading back is the identity on every kind") {
    auto M1 = fx::m1();
    std::vector<AnyStructure> all{fx::z2_pair(),
                                  identity_functor(fx::arrow_category()),
                                  fx::z4_parity(),
                                  fx::quotient_z4_z2(),
                                  fx::b2(),
                                  fx::pseudo_unit(),
                                  fx::d_of(fx::bz()),
                                  fx::pseudo_unit_double(),
                                  fx::quotient_double()};
    for (const auto& s : all) {
        CAPTURE(kind_name(s));
        json j = to_json(s);
        CHECK(round_trip(j) == j);
    }
}

TEST_CASE("emitted span apex and legs re-parse and re-check the same") {
    const fs::path dir = fs::temp_directory_path() / "fincat_io_test";
    fs::remove_all(dir);
    auto s = build_span_double(fx::quotient_double());
    write_json_file(dir / "apex.json", to_json(*s.apex));
    write_json_file(dir / "left.json", to_json(s.left));
    auto apex = std::get<DblPtr>(parse_structure_file(dir / "apex.json"));
    CHECK(validate_double_category(*apex).ok());
    CHECK(apex->square_count() == s.apex->square_count());
    auto P = std::get<DoublePseudofunctor>(parse_structure_file(dir / "left.json"));
    auto r = check_double_functor_properties(P, {false, {1'000'000, 1}});
    CHECK(r.surjective_equivalence() == s.left_report.surjective_equivalence());
    CHECK(r.summary() == s.left_report.summary());

    auto c = build_span_cat(std::get<FinFunctor>(parse_structure_file(fixture("F_I_to_1.json"))));
    auto re = std::get<FinFunctor>(parse_structure(to_json(c.right), "."));
    CHECK(check_functor_properties(re).summary() == c.right_report.summary());
    fs::remove_all(dir);
}

TEST_CASE("apex identifiers are canonical tuples") {
    auto s = build_span_cat(std::get<FinFunctor>(parse_structure_file(fixture("F_I_to_1.json"))));
    for (const auto& name : s.apex->objects.names()) {
        CHECK(name.front() == '(');
        CHECK(name.back() == ')');
    }
}
