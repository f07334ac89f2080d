#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fincat/double_span.hpp"
#include "fincat/fixtures.hpp"
#include "fincat/oracle.hpp"
#include "support.hpp"

using namespace fincat;
namespace fx = fincat::fixtures;
using testsupport::sorted;

namespace {

Id hcell(const FinDoubleCategory& d, const std::string& n) { return d.horizontal.morphisms.at(n, "hcell"); }

// Companions of cells of C found by lifting companions of their images
// along P; P full and faithful on squares makes the lifts unique.
void check_companion_reflection(const DoublePseudofunctor& P) {
    const auto& C = *P.source;
    const auto& A = *P.target;
    for (Id h = 0; h < to_id(C.hcell_count()); ++h)
        for (Id v = 0; v < to_id(C.vcell_count()); ++v) {
            const Id a = C.horizontal.src[h], b = C.horizontal.tgt[h];
            if (C.vertical.src[v] != a || C.vertical.tgt[v] != b) continue;
            for (const auto& p : find_companions(P.h(h), A)) {
                if (p.f_prime != P.v(v)) continue;
                std::vector<Id> sig, ta;
                for (Id q : C.squares_in({C.h1(a), h, C.v1(a), v}))
                    if (P.sq(q) == p.sigma) sig.push_back(q);
                for (Id q : C.squares_in({h, C.h1(b), v, C.v1(b)}))
                    if (P.sq(q) == p.tau) ta.push_back(q);
                REQUIRE(sig.size() == 1);
                REQUIRE(ta.size() == 1);
                CHECK(check_companions({h, v, sig[0], ta[0]}, C).ok());
            }
            // Preservation in the other direction.
            for (const auto& p : find_companions(h, C)) {
                if (p.f_prime != v) continue;
                CHECK(check_companions({P.h(h), P.v(v), P.sq(p.sigma), P.sq(p.tau)}, A).ok());
            }
        }
}

// Reflexive, symmetric and transitive on the objects of d.
void check_gregarious_relation(const FinDoubleCategory& d) {
    const auto n = to_id(d.object_count());
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
    for (Id a = 0; a < n; ++a)
        for (Id b = 0; b < n; ++b) {
            auto r = check_gregarious_object_equivalence(a, b, d);
            REQUIRE(r.status != SearchStatus::budget);
            rel[a][b] = r.found();
            if (r.found()) {
                CHECK(check_hv_adjoint_equivalence(r.witness->hadj, d).ok());
                CHECK(check_hv_adjoint_equivalence(r.witness->vadj, d).ok());
                CHECK(check_companions(r.witness->binding, d).ok());
            }
        }
    for (Id a = 0; a < n; ++a) CHECK(rel[a][a]);
    for (Id a = 0; a < n; ++a)
        for (Id b = 0; b < n; ++b) {
            CHECK(rel[a][b] == rel[b][a]);
            for (Id c = 0; c < n; ++c)
                if (rel[a][b] && rel[b][c]) CHECK(rel[a][c]);
        }
}

}  // namespace

TEST_CASE("double category fixtures validate") {
    CHECK(validate_double_category(*fx::terminal_double()).ok());
    CHECK(fx::terminal_double()->object_count() == 1);
    for (const auto& k : {fx::terminal_2category(), fx::b2(), fx::vu1(), fx::bz(), fx::bbz2()})
        CHECK(validate_double_category(*fx::d_of(k)).ok());
    for (const auto& m : {fx::m1(), fx::z4_parity()}) CHECK(validate_double_category(*fx::degenerate(m)).ok());
    auto t = fx::d_of(fx::terminal_2category());
    CHECK(t->object_count() == 1);
    CHECK(t->square_count() == 1);
}

TEST_CASE("corrupted square compositions are rejected") {
    // D(B2) has at most one square per frame, so a corruption must change
    // a frame; every such change is caught.
    auto d = fx::d_of(fx::b2());
    std::size_t caught = 0, tried = 0;
    for (const auto& [k, v] : d->hcomp_table.sorted_entries())
        for (Id alt = 0; alt < to_id(d->square_count()); ++alt) {
            if (alt == v) continue;
            FinDoubleCategory c = *d;
            c.hcomp_table.set(k.first, k.second, alt);
            ++tried;
            if (!validate_double_category(c).ok()) ++caught;
        }
    CHECK(tried > 0);
    CHECK(caught == tried);

    // A single vertical entry changed on D(bbz2) leaves both compositions
    // categorical and breaks only interchange.
    FinDoubleCategory e = *fx::d_of(fx::bbz2());
    Id z = -1;
    for (Id q = 0; q < to_id(e.square_count()); ++q)
        if (e.hid(e.h1(0)) != q) z = q;
    REQUIRE(z >= 0);
    e.vcomp_table.set(z, z, z);
    auto r = validate_double_category(e);
    CHECK(r.verdict == Verdict::axiom_failure);
    CHECK(r.axiom == "interchange");
}

TEST_CASE("companions in D(B2) are exactly the cells isomorphic to u") {
    auto d = fx::d_of(fx::b2());
    const Id u = hcell(*d, "u");
    std::set<std::string> found;
    for (const auto& p : find_companions(u, *d)) {
        CHECK(check_companions(p, *d).ok());
        found.insert(d->vname(p.f_prime));
    }
    CHECK(found == std::set<std::string>{"u", "u'"});
    // Identity cells with identity binding cells.
    const Id x = d->horizontal.objects.at("x", "object");
    CHECK(check_companions({d->h1(x), d->v1(x), d->hid(d->h1(x)), d->hid(d->h1(x))}, *d).ok());
}

TEST_CASE("companion boundary mismatch is structural") {
    auto d = fx::d_of(fx::b2());
    const Id u = hcell(*d, "u");
    const Id x = d->horizontal.objects.at("x", "object");
    CHECK_THROWS_AS(check_companions({u, d->v1(x), d->hid(u), d->hid(u)}, *d), StructuralError);
}

TEST_CASE("D(vu1): u is a horizontal and vertical equivalence, x ~ y") {
    auto d = fx::d_of(fx::vu1());
    const Id u = hcell(*d, "u");
    auto h = complete_hv_adjoint_equivalence(Orientation::horizontal, u, *d);
    auto v = complete_hv_adjoint_equivalence(Orientation::vertical, d->vertical.morphisms.at("u", "vcell"), *d);
    CHECK(h.found());
    CHECK(v.found());
    auto g = check_gregarious_object_equivalence(0, 1, *d);
    REQUIRE(g.found());
    CHECK(g.witness->hadj.ell == u);
    auto b = fx::d_of(fx::b2());
    CHECK(check_gregarious_object_equivalence(0, 1, *b).status == SearchStatus::exhausted);
}

TEST_CASE("gregarious equivalence is an equivalence relation on objects") {
    for (const auto& k : {fx::b2(), fx::vu1(), fx::bz()}) check_gregarious_relation(*fx::d_of(k));
    auto s = build_span_double(identity_double_functor(fx::d_of(fx::vu1())));
    check_gregarious_relation(*s.apex);
}

TEST_CASE("double functor properties") {
    auto db2 = fx::d_of(fx::b2());
    auto id = check_double_functor_properties(identity_double_functor(db2));
    CHECK(id.gregarious_equivalence());
    CHECK(id.surjective_equivalence());
    auto q = check_double_functor_properties(fx::quotient_double());
    CHECK(q.surjective_equivalence());
    CHECK(q.gregarious_equivalence());
    auto c = check_double_functor_properties(fx::collapse_double(db2));
    CHECK_FALSE(c.gregarious_equivalence());
    CHECK(validate_double_pseudofunctor(fx::pseudo_unit_double()).report.ok());
    CHECK_FALSE(validate_double_pseudofunctor(fx::pseudo_unit_double()).strict);
}

TEST_CASE("no strict functor back from the quotient target is an equivalence") {
    auto q = fx::quotient_double();
    auto r = find_strict_double_functor(q.target, q.source, [](const DoublePseudofunctor& G) {
        return check_double_functor_properties(G).gregarious_equivalence();
    });
    CHECK(r.status == SearchStatus::exhausted);
}

TEST_CASE("spans of double functors") {
    const std::vector<DoublePseudofunctor> cases{identity_double_functor(fx::terminal_double()),
                                                 identity_double_functor(fx::d_of(fx::b2())),
                                                 identity_double_functor(fx::d_of(fx::bz())),
                                                 fx::quotient_double(),
                                                 fx::collapse_double(fx::d_of(fx::vu1()))};
    for (const auto& F : cases) {
        auto s = build_span_double(F);
        REQUIRE(s.certified());
        CHECK(validate_double_category(*s.apex).ok());
        CHECK(validate_double_pseudofunctor(s.left).strict);
        CHECK(validate_double_pseudofunctor(s.right).strict);

        auto eq = verify_apex_equations(s);
        CHECK(eq.all_hold());
        CHECK(eq.order_mismatches == 0);
        CHECK(eq.redundant_failures == 0);
        for (const auto* fam : {"1ha", "1hb", "1hc", "1va", "1vb", "1vc", "2"}) CHECK(eq.checked.count(fam) == 1);

        // Binding cells of the right adjoints.
        for (const auto& o : s.data.objs)
            CHECK(check_companions(o.mates.as_pair(o.hadj.r, o.vadj.r), *F.target).ok());

        // Underlying horizontal 2-category and the restricted leg.
        const auto& H = s.apex->H();
        CHECK(validate_2category(*H.k).ok());
        CHECK(check_pseudofunctor_properties(horizontal_restriction(s.left)).surjective_equivalence());

        // Every apex square: the four equations, unique cancellation.
        const auto& apex = *s.apex;
        for (Id q = 0; q < to_id(apex.square_count()); ++q) {
            const auto& fr = apex.frame(q);
            const auto& sq = s.data.squares[q];
            auto four = check_coherence_quadruple(s, fr.top, fr.bottom, fr.left, fr.right, sq.alpha, sq.beta);
            CHECK(four == std::array<bool, 4>{true, true, true, true});
            const auto& top = s.data.hcells[fr.top];
            const auto& bot = s.data.hcells[fr.bottom];
            auto lc = solve_left_cancellation(s, fr.left, cancellation_target(s, q), top.g, bot.g);
            CHECK(lc.solutions == 1);
            CHECK(lc.solves);
            CHECK(lc.xi == sq.beta);
        }

        // Lifts along both legs land on cells over the given ones.
        for (Id c = 0; c < to_id(apex.object_count()); ++c)
            for (Id c2 = 0; c2 < to_id(apex.object_count()); ++c2) {
                for (Id f : F.source->horizontal.hom(s.data.objs[c].a, s.data.objs[c2].a)) {
                    const Id h = lift_hcell_along_left(s, c, c2, f);
                    REQUIRE(h >= 0);
                    CHECK(s.left.h(h) == f);
                }
                for (Id g : F.target->horizontal.hom(s.data.objs[c].b, s.data.objs[c2].b)) {
                    const Id h = lift_hcell_along_right(s, c, c2, g);
                    REQUIRE(h >= 0);
                    CHECK(s.right.h(h) == g);
                }
            }

        check_companion_reflection(s.left);
        check_companion_reflection(s.right);
    }
}

TEST_CASE("span refuses a functor that is not a gregarious equivalence") {
    CHECK_THROWS_AS(build_span_double(fx::collapse_double(fx::d_of(fx::b2()))), PreconditionError);
}

TEST_CASE("mutated beta fails all four equations") {
    auto s = build_span_double(identity_double_functor(fx::d_of(fx::bz())));
    const auto& B = *s.F.target;
    std::size_t mutated = 0;
    for (Id q = 0; q < to_id(s.apex->square_count()); ++q) {
        const auto& fr = s.apex->frame(q);
        const auto& sq = s.data.squares[q];
        for (Id other : B.squares_in(B.frame(sq.beta))) {
            if (other == sq.beta) continue;
            auto four = check_coherence_quadruple(s, fr.top, fr.bottom, fr.left, fr.right, sq.alpha, other);
            CHECK(four == std::array<bool, 4>{false, false, false, false});
            ++mutated;
        }
    }
    CHECK(mutated >= 10);
}

TEST_CASE("identity square data satisfy all four equations") {
    auto s = build_span_double(identity_double_functor(fx::terminal_double()));
    const auto& fr = s.apex->frame(0);
    auto four = check_coherence_quadruple(s, fr.top, fr.bottom, fr.left, fr.right, s.data.squares[0].alpha,
                                          s.data.squares[0].beta);
    CHECK(four == std::array<bool, 4>{true, true, true, true});
}

TEST_CASE("left cancellation rejects a wrong boundary") {
    auto s = build_span_double(identity_double_functor(fx::d_of(fx::b2())));
    const auto& B = *s.F.target;
    // theta on a frame whose top is not l_H followed by X.
    Id bad = -1;
    for (Id q = 0; q < to_id(B.square_count()); ++q)
        if (!B.horizontal.is_identity(B.frame(q).top)) bad = q;
    REQUIRE(bad >= 0);
    const Id v0 = 0;
    CHECK_THROWS_AS(solve_left_cancellation(s, v0, bad, B.h1(0), B.h1(0)), StructuralError);
}

TEST_CASE("inverse of a strict surjective equivalence") {
    auto d = fx::d_of(fx::b2());
    auto J0 = invert_surjective_equivalence(identity_double_functor(d));
    CHECK(is_identity_functor(J0));

    for (const auto& F : {identity_double_functor(d), fx::quotient_double(),
                          identity_double_functor(fx::d_of(fx::bz()))}) {
        auto s = build_span_double(F);
        for (const auto* P : {&s.left, &s.right}) {
            auto J = invert_surjective_equivalence(*P);
            CHECK(validate_double_pseudofunctor(J).report.ok());
            CHECK(is_identity_functor(compose_double_functors(*P, J)));
            CHECK(check_double_functor_properties(J).gregarious_equivalence());
        }
    }
    // The quotient itself is a strict surjective equivalence with an inverse
    // that cannot be strict.
    auto q = fx::quotient_double();
    auto J = invert_surjective_equivalence(q);
    CHECK(is_identity_functor(compose_double_functors(q, J)));
    CHECK(check_double_functor_properties(J).gregarious_equivalence());
    CHECK_FALSE(validate_double_pseudofunctor(J).strict);
}

TEST_CASE("inverse refuses a functor that is not a surjective equivalence") {
    CHECK_THROWS_AS(invert_surjective_equivalence(fx::collapse_double(fx::d_of(fx::b2()))), PreconditionError);
}

TEST_CASE("symmetry: a gregarious equivalence in the reverse direction") {
    for (const auto& F : {identity_double_functor(fx::d_of(fx::b2())), fx::quotient_double()}) {
        auto s = build_span_double(F);
        auto G = compose_double_functors(s.left, invert_surjective_equivalence(s.right));
        CHECK(G.source == F.target);
        CHECK(G.target == F.source);
        CHECK(validate_double_pseudofunctor(G).report.ok());
        CHECK(check_double_functor_properties(G).gregarious_equivalence());
    }
}
