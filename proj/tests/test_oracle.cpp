#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fincat/double_span.hpp"
#include "fincat/fixtures.hpp"
#include "fincat/io.hpp"
#include "fincat/oracle.hpp"

using namespace fincat;
namespace fx = fincat::fixtures;

TEST_CASE("functors 1 -> 1: the identity, after one candidate") {
    auto one = fx::terminal_category();
    auto r = enumerate_maps("cat", one, one, [](const StructureMap&) { return true; });
    CHECK(r.status == SearchStatus::found);
    CHECK(r.candidates_examined == 1);
    const auto& F = std::get<FinFunctor>(*r.witness);
    CHECK(F.obj_map == std::vector<Id>{0});
}

TEST_CASE("functors 1 -> discrete 2: no equivalence after two candidates") {
    auto r = enumerate_maps(MapKind::cat, fx::terminal_category(), fx::discrete(2), [](const StructureMap& m) {
        return check_functor_properties(std::get<FinFunctor>(m)).equivalence();
    });
    CHECK(r.status == SearchStatus::exhausted);
    CHECK(r.candidates_examined == 2);
    CHECK_FALSE(r.witness);
}

TEST_CASE("kind errors") {
    CHECK_THROWS_AS(parse_map_kind("operad"), StructuralError);
    CHECK(parse_map_kind("2cat") == MapKind::twocat);
    CHECK(to_string(MapKind::dbl) == "dbl");
    auto any = [](const StructureMap&) { return true; };
    CHECK_THROWS_AS(enumerate_maps("mon", fx::terminal_category(), fx::terminal_category(), any), StructuralError);
    CHECK_THROWS_AS(enumerate_maps("bicat", fx::terminal_category(), fx::terminal_category(), any), StructuralError);
}

TEST_CASE("budget overflow is its own outcome") {
    auto a = fx::codiscrete(4);
    auto r = find_functor(a, a, [](const FinFunctor&) { return false; }, {3, 1});
    CHECK(r.status == SearchStatus::budget);
    CHECK_FALSE(r.witness);
    CHECK_THROWS_AS(all_functors(a, a, {3, 1}), StructuralError);
}

TEST_CASE("exhaustion examines the whole space") {
    // Functors codiscrete(3) -> codiscrete(2) are exactly the object maps.
    auto r = find_functor(fx::codiscrete(3), fx::codiscrete(2), [](const FinFunctor&) { return false; });
    CHECK(r.status == SearchStatus::exhausted);
    CHECK(r.candidates_examined == 8);
    CHECK(all_functors(fx::codiscrete(3), fx::codiscrete(2)).size() == 8);
}

TEST_CASE("searches are deterministic and independent of the worker count") {
    auto a = fx::z2_pair();
    auto b = fx::codiscrete(3);
    auto pred = [](const StructureMap& m) {
        const auto& F = std::get<FinFunctor>(m);
        return F.obj(0) == 2 && F.obj(1) == 1;
    };
    auto r1 = enumerate_maps(MapKind::cat, fx::codiscrete(2), b, pred);
    auto r2 = enumerate_maps(MapKind::cat, fx::codiscrete(2), b, pred);
    auto r4 = enumerate_maps(MapKind::cat, fx::codiscrete(2), b, pred, {10'000'000, 4});
    REQUIRE(r1.found());
    CHECK(r1.candidates_examined == r2.candidates_examined);
    CHECK(to_json(std::get<FinFunctor>(*r1.witness)) == to_json(std::get<FinFunctor>(*r2.witness)));
    CHECK(to_json(std::get<FinFunctor>(*r1.witness)) == to_json(std::get<FinFunctor>(*r4.witness)));

    auto all1 = all_functors(a, b);
    auto all4 = all_functors(a, b, {10'000'000, 4});
    REQUIRE(all1.size() == all4.size());
    for (std::size_t i = 0; i < all1.size(); ++i) CHECK(to_json(all1[i]) == to_json(all4[i]));
}

TEST_CASE("found witnesses re-validate") {
    for (const auto& a : fx::catalog())
        for (const auto& b : fx::catalog())
            for (const auto& F : all_functors(a.cat, b.cat)) CHECK(validate_functor(F).ok());
    auto m = find_strict_monoidal_functor(fx::z4_parity(), fx::m1(), [](const MonoidalFunctorData&) { return true; });
    REQUIRE(m.found());
    CHECK(validate_monoidal_functor(*m.witness).validation.ok());
    auto k = find_strict_2functor(fx::vu1(), fx::b2(), [](const Pseudofunctor2&) { return true; });
    REQUIRE(k.found());
    CHECK(validate_pseudofunctor(*k.witness).report.ok());
    auto d = find_strict_double_functor(fx::d_of(fx::vu1()), fx::d_of(fx::bz()),
                                        [](const DoublePseudofunctor&) { return true; });
    REQUIRE(d.found());
    CHECK(validate_double_pseudofunctor(*d.witness).report.ok());
}

TEST_CASE("strict double functors back along the quotient: none is an equivalence") {
    auto q = fx::quotient_double();
    std::size_t seen = 0;
    auto r = enumerate_maps(MapKind::dbl, q.target, q.source, [&](const StructureMap& m) {
        ++seen;
        return check_double_functor_properties(std::get<DoublePseudofunctor>(m)).gregarious_equivalence();
    });
    CHECK(r.status == SearchStatus::exhausted);
    CHECK(r.candidates_examined == seen);
    CHECK(seen > 0);
}

TEST_CASE("oracle equivalence agrees with the constructive side") {
    auto cats = fx::catalog();
    for (const auto& a : cats)
        for (const auto& b : cats) {
            auto r = oracle_equivalence_cat(a.cat, b.cat);
            REQUIRE(r.status != SearchStatus::budget);
            if (!r.found()) continue;
            auto s = build_span_cat(*r.witness);
            CHECK(s.certified());
            // The apex maps to both ends by surjective equivalences the
            // oracle can also find.
            CHECK(find_functor(s.apex, a.cat, [](const FinFunctor& F) {
                      return check_functor_properties(F).surjective_equivalence();
                  }).found());
        }
    auto q = fx::quotient_double();
    auto s = build_span_double(q);
    CHECK(find_strict_double_functor(s.apex, q.target, [](const DoublePseudofunctor& G) {
              return check_double_functor_properties(G, {false, {1'000'000, 1}}).surjective_equivalence();
          }).found());
}

TEST_CASE("hole solving counts every solution") {
    auto k = fx::bz();
    const Id u = k->one.morphisms.at("u", "1-cell");
    auto sol = solve_2cell(*k, Paste2::hole(), Paste2::hole(), u, u);
    CHECK(sol.count() == k->hom2(u, u).size());
    CHECK(sol.count() == 2);

    auto d = fx::d_of(fx::bz());
    const auto& fr = d->frame(d->hid(d->horizontal.morphisms.at("u", "")));
    auto sq = solve_square(*d, PasteSq::hole(), PasteSq::hole(), fr);
    CHECK(sq.count() == d->squares_in(fr).size());
}
