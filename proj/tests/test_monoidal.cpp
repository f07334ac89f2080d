#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fincat/fixtures.hpp"
#include "fincat/monoidal.hpp"
#include "fincat/oracle.hpp"

using namespace fincat;
namespace fx = fincat::fixtures;

namespace {

// P(c (x) c') = P(c) (x) P(c') on objects and morphisms, literally.
bool preserves_tensor_on_the_nose(const MonoidalFunctorData& F) {
    const auto& A = *F.source;
    const auto& B = *F.target;
    const auto n = to_id(A.base->object_count());
    const auto m = to_id(A.base->morphism_count());
    for (Id a = 0; a < n; ++a)
        for (Id b = 0; b < n; ++b)
            if (F.underlying.obj(A.tensor(a, b)) != B.tensor(F.underlying.obj(a), F.underlying.obj(b))) return false;
    for (Id f = 0; f < m; ++f)
        for (Id g = 0; g < m; ++g)
            if (F.underlying.mor(A.tensor_arrow(f, g)) !=
                B.tensor_arrow(F.underlying.mor(f), F.underlying.mor(g)))
                return false;
    return F.underlying.obj(A.unit) == B.unit;
}

}  // namespace

TEST_CASE("monoidal fixtures validate") {
    for (const auto& m : {fx::m1(), fx::z4_parity(), fx::terminal_monoidal()}) CHECK(validate_monoidal(*m).ok());
}

TEST_CASE("a corrupted tensor is rejected") {
    MonoidalStructure m = *fx::m1();
    // Now disagrees with 1_1 (x) 1_1 = 1_0.
    m.tensor_obj.set(1, 1, 1);
    CHECK_FALSE(validate_monoidal(m).ok());
}

TEST_CASE("quotient Z4 -> Z2 is a strict surjective equivalence") {
    auto r = validate_monoidal_functor(fx::quotient_z4_z2());
    CHECK(r.validation.ok());
    CHECK(r.strict);
    CHECK(r.surjective_equivalence);
    CHECK(r.monoidal_equivalence);
    CHECK(preserves_tensor_on_the_nose(fx::quotient_z4_z2()));
}

TEST_CASE("spans for the identity of M1 and the quotient") {
    auto M1 = fx::m1();
    const std::vector<std::pair<MonoidalFunctorData, std::size_t>> cases{
        {make_strict_monoidal_functor(M1, M1, identity_functor(M1->base)), 2}, {fx::quotient_z4_z2(), 4}};
    for (const auto& [F, objects] : cases) {
        auto s = build_span_monoidal(F);
        CHECK(s.certified());
        CHECK(validate_monoidal(*s.apex).ok());
        CHECK(s.apex->base->object_count() == objects);
        CHECK(s.left_report.strict);
        CHECK(s.right_report.strict);
        CHECK(preserves_tensor_on_the_nose(s.left));
        CHECK(preserves_tensor_on_the_nose(s.right));
    }
}

TEST_CASE("span refuses a monoidal functor that is not an equivalence") {
    auto t = fx::terminal_monoidal();
    auto M1 = fx::m1();
    auto F = find_strict_monoidal_functor(M1, t, [](const MonoidalFunctorData&) { return true; });
    REQUIRE(F.found());
    CHECK_FALSE(validate_monoidal_functor(*F.witness).monoidal_equivalence);
    CHECK_THROWS_AS(build_span_monoidal(*F.witness), PreconditionError);
}

TEST_CASE("strict monoidal functors between the Z4 and Z2 fixtures") {
    auto fwd = find_strict_monoidal_functor(fx::z4_parity(), fx::m1(), [](const MonoidalFunctorData& d) {
        return validate_monoidal_functor(d).surjective_equivalence;
    });
    CHECK(fwd.status == SearchStatus::found);
    CHECK(fwd.candidates_examined == 2);
    REQUIRE(fwd.witness);
    CHECK(validate_monoidal_functor(*fwd.witness).validation.ok());

    auto rev = find_strict_monoidal_functor(fx::m1(), fx::z4_parity(), [](const MonoidalFunctorData& d) {
        return validate_monoidal_functor(d).monoidal_equivalence;
    });
    CHECK(rev.status == SearchStatus::exhausted);
    CHECK(rev.candidates_examined == 2);
    // Every strict map in the reverse direction is checked and rejected.
    std::size_t all = 0;
    find_strict_monoidal_functor(fx::m1(), fx::z4_parity(), [&](const MonoidalFunctorData& d) {
        ++all;
        CHECK(validate_monoidal_functor(d).strict);
        return false;
    });
    CHECK(all == 2);
}

TEST_CASE("non-invertible phi is reported") {
    auto F = fx::quotient_z4_z2();
    // Send the unit comparison to a morphism with the wrong boundary.
    F.phi_unit = F.target->base->identity(1);
    auto r = validate_monoidal_functor(F);
    CHECK_FALSE(r.validation.ok());
}
