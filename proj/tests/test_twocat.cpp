#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fincat/fixtures.hpp"
#include "fincat/oracle.hpp"
#include "fincat/twocat.hpp"

using namespace fincat;
namespace fx = fincat::fixtures;

namespace {

Id cell1(const Fin2Category& k, const std::string& name) { return k.one.morphisms.at(name, "1-cell"); }
Id cell0(const Fin2Category& k, const std::string& name) { return k.one.objects.at(name, "0-cell"); }

}  // namespace

TEST_CASE("2-category fixtures validate") {
    for (const auto& k : {fx::terminal_2category(), fx::b2(), fx::vu1(), fx::bz(), fx::bbz2()})
        CHECK(validate_2category(*k).ok());
}

TEST_CASE("interchange failure is detected") {
    // Eckmann-Hilton: on bbz2 set z.z = z vertically while z o z = 1
    // horizontally; both compositions stay unital and associative.
    Fin2Category k = *fx::bbz2();
    const Id z = k.cells2.at("z", "2-cell");
    k.vcomp.set(z, z, z);
    auto r = validate_2category(k);
    CHECK(r.verdict == Verdict::axiom_failure);
    CHECK(r.axiom == "interchange");
}

TEST_CASE("adjoint equivalences") {
    auto b2 = fx::b2();
    CHECK(check_adjoint_equivalence(identity_adjoint_equivalence(*b2, 0), *b2).ok());

    auto vu = fx::vu1();
    const Id u = cell1(*vu, "u"), v = cell1(*vu, "v");
    AdjointEquivalence e{u, v, vu->id2[vu->id1(cell0(*vu, "x"))], vu->id2[vu->id1(cell0(*vu, "y"))]};
    CHECK(check_adjoint_equivalence(e, *vu).ok());

    auto done = complete_adjoint_equivalence(u, *vu);
    REQUIRE(done.found());
    CHECK(done.witness->r == v);
    CHECK(check_adjoint_equivalence(*done.witness, *vu).ok());

    auto none = complete_adjoint_equivalence(cell1(*b2, "u"), *b2);
    CHECK(none.status == SearchStatus::exhausted);
    CHECK(enumerate_adjoint_equivalences(*b2, 0, 1).empty());
}

TEST_CASE("biequivalence flags") {
    auto r = check_pseudofunctor_properties(identity_pseudofunctor(fx::b2()));
    CHECK(r.biequivalence());
    CHECK(r.surjective_equivalence());

    // B2 -> 1 identifies x and y, but hom(y, x) is empty while hom(*, *) is
    // not, so the local functor there is not essentially surjective.
    auto t = check_pseudofunctor_properties(fx::collapse_to_terminal(fx::b2()));
    CHECK(t.essentially_surjective);
    CHECK_FALSE(t.locally_equivalence);
    CHECK_FALSE(t.biequivalence());

    auto v = check_pseudofunctor_properties(fx::collapse_to_terminal(fx::vu1()));
    CHECK(v.biequivalence());
    CHECK(v.surjective_equivalence());
}

TEST_CASE("pseudofunctor with nonidentity coherence cells") {
    auto F = fx::pseudo_unit();
    auto v = validate_pseudofunctor(F);
    CHECK(v.report.ok());
    CHECK_FALSE(v.strict);
    auto s = build_apex_2cat(F);
    CHECK(validate_2category(*s.apex).ok());
    CHECK(s.apex->count0() == 2);
    CHECK(s.apex->count1() == 8);
    CHECK(s.apex->count2() == 16);
}

TEST_CASE("a corrupted coherence cell is rejected") {
    auto F = fx::pseudo_unit();
    F.unit_cells[0] = F.target->id2[F.target->id1(0)];
    CHECK_FALSE(validate_pseudofunctor(F).report.ok());
}

TEST_CASE("spans of 2-categories: mates, coherence and unique beta") {
    const std::vector<Pseudofunctor2> cases{identity_pseudofunctor(fx::terminal_2category()),
                                            identity_pseudofunctor(fx::b2()),
                                            identity_pseudofunctor(fx::vu1()),
                                            identity_pseudofunctor(fx::bz()),
                                            fx::collapse_to_terminal(fx::vu1())};
    for (const auto& F : cases) {
        auto s = build_span_2cat(F);
        REQUIRE(s.certified());
        CHECK(validate_2category(*s.apex).ok());
        CHECK(validate_pseudofunctor(s.left).strict);
        CHECK(validate_pseudofunctor(s.right).strict);
        const Fin2Category& B = *F.target;
        const Fin2Category& A = *F.source;
        const auto n1 = to_id(s.apex->count1());
        for (Id m = 0; m < n1; ++m) {
            const auto& x = s.data.ones[m];
            const auto& adj = s.data.objs[s.apex->src0(m)].adj;
            const auto& adj2 = s.data.objs[s.apex->tgt0(m)].adj;
            const Id Ff = F.map1[x.f];
            CHECK(mate_of(B, x.lambda, Ff, x.g, adj, adj2) == x.rho);
            CHECK(reverse_mate_of(B, x.rho, Ff, x.g, adj, adj2) == x.lambda);
            auto [e1, e2] = lambda_rho_compatible(B, x.lambda, x.rho, Ff, x.g, adj, adj2);
            CHECK(e1);
            CHECK(e2);
        }
        for (Id m = 0; m < n1; ++m)
            for (Id m2 = 0; m2 < n1; ++m2) {
                if (s.apex->src0(m) != s.apex->src0(m2) || s.apex->tgt0(m) != s.apex->tgt0(m2)) continue;
                const auto& x = s.data.ones[m];
                const auto& x2 = s.data.ones[m2];
                for (Id al : A.hom2(x.f, x2.f)) {
                    auto [lhs, rhs] = unique_beta_equation(F, s, m, m2, al);
                    auto sol = solve_2cell(B, lhs, rhs, x.g, x2.g);
                    CHECK(sol.count() == 1);
                    // The solution is the apex 2-cell over alpha.
                    REQUIRE(sol.count() == 1);
                    CHECK(s.data.two_index.count({m, m2, al, sol.solutions[0]}) == 1);
                    // Either equation implies the other on every candidate.
                    for (Id be : B.hom2(x.g, x2.g)) {
                        auto [e1, e2] = two_cell_equations(F, s, m, m2, al, be);
                        CHECK(e1 == e2);
                    }
                }
            }
    }
}

TEST_CASE("identity of the terminal 2-category has a terminal apex") {
    auto s = build_span_2cat(identity_pseudofunctor(fx::terminal_2category()));
    CHECK(s.apex->count0() == 1);
    CHECK(s.apex->count1() == 1);
    CHECK(s.apex->count2() == 1);
}

TEST_CASE("B2 -> 1 is refused, its apex still validates") {
    auto F = fx::collapse_to_terminal(fx::b2());
    CHECK_THROWS_AS(build_span_2cat(F), PreconditionError);
    auto s = build_apex_2cat(F);
    CHECK(validate_2category(*s.apex).ok());
    CHECK(s.left_report.surjective_equivalence());
    CHECK_FALSE(s.right_report.surjective_equivalence());
}

TEST_CASE("lifts of 1-cells along both legs") {
    for (const auto& F : {identity_pseudofunctor(fx::b2()), fx::collapse_to_terminal(fx::vu1())}) {
        auto s = build_span_2cat(F);
        const auto n0 = to_id(s.apex->count0());
        for (Id c = 0; c < n0; ++c)
            for (Id c2 = 0; c2 < n0; ++c2) {
                const Id a = s.data.objs[c].a, a2 = s.data.objs[c2].a;
                for (Id f : F.source->one.hom(a, a2)) {
                    const Id m = lift_along_left(F, s, c, c2, f);
                    REQUIRE(m >= 0);
                    CHECK(s.left.map1[m] == f);
                }
                const Id b = s.data.objs[c].b, b2 = s.data.objs[c2].b;
                for (Id g : F.target->one.hom(b, b2)) {
                    const Id m = lift_along_right(F, s, c, c2, g);
                    REQUIRE(m >= 0);
                    CHECK(s.right.map1[m] == g);
                }
            }
    }
}

TEST_CASE("strict 2-functor enumeration agrees with the span") {
    // Whenever a span exists, the oracle finds a biequivalence between the
    // apex and each end.
    auto F = identity_pseudofunctor(fx::b2());
    auto s = build_span_2cat(F);
    auto r = find_strict_2functor(s.apex, F.source,
                                  [](const Pseudofunctor2& G) { return check_pseudofunctor_properties(G).biequivalence(); });
    CHECK(r.found());
}
