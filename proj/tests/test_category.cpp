#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fincat/cat_span.hpp"
#include "fincat/fixtures.hpp"
#include "fincat/oracle.hpp"
#include "support.hpp"

using namespace fincat;
namespace fx = fincat::fixtures;

namespace {

std::vector<CatPtr> catalog_cats() {
    std::vector<CatPtr> out;
    for (const auto& c : fx::catalog()) out.push_back(c.cat);
    return out;
}

FinFunctor to_terminal(const CatPtr& c) {
    auto one = fx::terminal_category();
    FinFunctor F{c, one, std::vector<Id>(c->object_count(), 0), std::vector<Id>(c->morphism_count(), 0)};
    return F;
}

}  // namespace

TEST_CASE("catalog categories validate and respect the size bound") {
    for (const auto& [name, c] : fx::catalog()) {
        CAPTURE(name);
        CHECK(validate_category(*c).ok());
        CHECK(c->object_count() <= 4);
        CHECK(c->morphism_count() <= 12);
    }
}

TEST_CASE("a broken unit law is reported as an axiom failure") {
    FinCategory c = *fx::z2_group();
    const Id z = c.morphisms.at("z", "morphism");
    const Id one = c.identity(0);
    c.composition.set(z, one, one);
    auto r = validate_category(c);
    CHECK(r.verdict == Verdict::axiom_failure);
}

TEST_CASE("a broken associativity is reported") {
    CategoryBuilder b;
    b.object("*").morphism("a", "*", "*").morphism("b", "*", "*");
    b.compose("a", "a", "b").compose("a", "b", "a").compose("b", "a", "a").compose("b", "b", "a");
    auto r = validate_category(b.build());
    CHECK(r.verdict == Verdict::axiom_failure);
    CHECK(r.axiom.find("assoc") != std::string::npos);
}

TEST_CASE("a composite with the wrong boundary is rejected") {
    CategoryBuilder b;
    b.object("0").object("1").object("2");
    b.morphism("f", "0", "1").morphism("g", "1", "2").morphism("h", "0", "2");
    b.compose("g", "f", "h");
    FinCategory c = b.build();
    CHECK(validate_category(c).ok());
    c.composition.set(c.morphisms.at("g", ""), c.morphisms.at("f", ""), c.morphisms.at("f", ""));
    CHECK_FALSE(validate_category(c).ok());
}

TEST_CASE("builder rejects undeclared objects") {
    CategoryBuilder b;
    b.object("0").morphism("f", "0", "nowhere");
    CHECK_THROWS_AS(b.build(), StructuralError);
}

TEST_CASE("functor properties on small examples") {
    auto I = fx::iso_category();
    auto F = to_terminal(I);
    CHECK(validate_functor(F).ok());
    auto r = check_functor_properties(F);
    CHECK(r.surjective_equivalence());
    CHECK(r.equivalence());

    auto id = check_functor_properties(identity_functor(fx::arrow_category()));
    CHECK(id.surjective_equivalence());

    // The arrow category is not equivalent to the terminal one: nothing
    // maps onto the identity of * from 1 to 0.
    auto a = check_functor_properties(to_terminal(fx::arrow_category()));
    CHECK(a.surjective_on_objects);
    CHECK_FALSE(a.full);
    CHECK(a.faithful);
    CHECK(a.counterexample.count("full") == 1);

    // Z2 -> 1 is full but not faithful.
    auto z = check_functor_properties(to_terminal(fx::z2_group()));
    CHECK(z.full);
    CHECK_FALSE(z.faithful);

    // The inclusion of one object into I is an equivalence but not surjective.
    auto inc = find_functor(fx::terminal_category(), I, [](const FinFunctor&) { return true; });
    REQUIRE(inc.found());
    auto ri = check_functor_properties(*inc.witness);
    CHECK(ri.equivalence());
    CHECK_FALSE(ri.surjective_on_objects);
    CHECK(ri.counterexample.count("surjective_on_objects") == 1);
}

TEST_CASE("composition of functors is the composite on every cell") {
    auto I = fx::iso_category();
    auto F = to_terminal(I);
    auto G = compose_functors(F, identity_functor(I));
    CHECK(G.obj_map == F.obj_map);
    CHECK(G.mor_map == F.mor_map);
}

TEST_CASE("span of I -> 1 has a two-object apex and certified legs") {
    auto s = build_span_cat(to_terminal(fx::iso_category()));
    CHECK(s.certified());
    CHECK(s.apex->object_count() == 2);
    CHECK(validate_category(*s.apex).ok());
}

TEST_CASE("span construction refuses a non-equivalence") {
    auto F = to_terminal(fx::discrete(2));
    CHECK_THROWS_AS(build_span_cat(F), PreconditionError);
    // The apex itself is still built and valid.
    auto s = build_apex_cat(F);
    CHECK(validate_category(*s.apex).ok());
    CHECK_FALSE(s.right_report.surjective_equivalence());
}

TEST_CASE("span apex: every object is an isomorphism F(a) -> b, legs project") {
    auto cats = catalog_cats();
    int checked = 0;
    for (const auto& a : cats)
        for (const auto& b : cats)
            for (const auto& F : all_functors(a, b)) {
                if (!check_functor_properties(F).equivalence()) continue;
                auto s = build_span_cat(F);
                REQUIRE(s.certified());
                REQUIRE(validate_category(*s.apex).ok());
                for (Id c = 0; c < to_id(s.apex->object_count()); ++c) {
                    const Id l = s.iso[c];
                    CHECK(b->src[l] == F.obj(s.left.obj(c)));
                    CHECK(b->tgt[l] == s.right.obj(c));
                    CHECK(b->is_iso(l));
                }
                // Naturality: g.l = l'.F(f) on every apex morphism.
                for (Id m = 0; m < to_id(s.apex->morphism_count()); ++m) {
                    const Id c = s.apex->src[m], c2 = s.apex->tgt[m];
                    CHECK(b->compose_at(s.right.mor(m), s.iso[c]) == b->compose_at(s.iso[c2], F.mor(s.left.mor(m))));
                }
                ++checked;
            }
    CHECK(checked == 91);
}

TEST_CASE("surjective equivalences compose and contain identities") {
    auto cats = catalog_cats();
    std::vector<FinFunctor> se;
    for (const auto& a : cats)
        for (const auto& b : cats)
            for (const auto& F : all_functors(a, b))
                if (check_functor_properties(F).surjective_equivalence()) se.push_back(F);
    CHECK(se.size() == 34);
    for (const auto& c : cats) CHECK(check_functor_properties(identity_functor(c)).surjective_equivalence());
    for (const auto& F : se)
        for (const auto& G : se)
            if (F.target == G.source) CHECK(check_functor_properties(compose_functors(G, F)).surjective_equivalence());
}

TEST_CASE("pullback of a surjective equivalence is one") {
    auto cats = catalog_cats();
    std::size_t total = 0;
    for (const auto& a : cats)
        for (const auto& b : cats)
            for (const auto& P : all_functors(a, b)) {
                if (!check_functor_properties(P).surjective_equivalence()) continue;
                for (const auto& c : cats)
                    for (const auto& F : all_functors(c, b)) {
                        auto pb = pullback_span(P, F);
                        CHECK(validate_category(*pb.apex).ok());
                        CHECK(check_functor_properties(pb.to_f_source).surjective_equivalence());
                        // The square commutes.
                        for (Id m = 0; m < to_id(pb.apex->morphism_count()); ++m)
                            CHECK(P.mor(pb.to_p_source.mor(m)) == F.mor(pb.to_f_source.mor(m)));
                        ++total;
                    }
            }
    CHECK(total == 2071);
}

TEST_CASE("zigzag closure equals the oracle partition") {
    auto cats = catalog_cats();
    std::vector<FinFunctor> edges;
    for (const auto& a : cats)
        for (const auto& b : cats)
            for (const auto& F : all_functors(a, b))
                if (check_functor_properties(F).surjective_equivalence()) edges.push_back(F);
    auto z = zigzag_closure(cats, edges);
    CHECK(z == oracle_partition(cats));
    CHECK(z.size() == 4);
    // Without edges every category is alone.
    CHECK(zigzag_closure(cats, {}).size() == cats.size());
}
