#include "fincat/functor.hpp"

#include <sstream>

namespace fincat {

FinFunctor identity_functor(const CatPtr& c) {
    FinFunctor f{c, c, {}, {}};
    for (Id a = 0; a < to_id(c->object_count()); ++a) f.obj_map.push_back(a);
    for (Id m = 0; m < to_id(c->morphism_count()); ++m) f.mor_map.push_back(m);
    return f;
}

FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
    if (f.target != g.source) throw StructuralError("functors are not composable");
    FinFunctor h{f.source, g.target, {}, {}};
    for (Id a : f.obj_map) h.obj_map.push_back(g.obj(a));
    for (Id m : f.mor_map) h.mor_map.push_back(g.mor(m));
    return h;
}

ValidationReport validate_functor(const FinFunctor& F) {
    if (!F.source || !F.target) return ValidationReport::structural("functor", "missing source or target");
    const FinCategory& A = *F.source;
    const FinCategory& B = *F.target;
    if (F.obj_map.size() != A.object_count() || F.mor_map.size() != A.morphism_count())
        return ValidationReport::structural("functor", "object or morphism map is not total");
    for (Id b : F.obj_map)
        if (b < 0 || b >= to_id(B.object_count()))
            return ValidationReport::structural("dangling-identifier", "object image");
    for (Id g : F.mor_map)
        if (g < 0 || g >= to_id(B.morphism_count()))
            return ValidationReport::structural("dangling-identifier", "morphism image");
    for (Id f = 0; f < to_id(A.morphism_count()); ++f)
        if (B.src[F.mor(f)] != F.obj(A.src[f]) || B.tgt[F.mor(f)] != F.obj(A.tgt[f]))
            return ValidationReport::fail("functor-boundary", A.morphism_name(f));
    for (Id a = 0; a < to_id(A.object_count()); ++a)
        if (F.mor(A.identity(a)) != B.identity(F.obj(a)))
            return ValidationReport::fail("functor-identity", A.object_name(a));
    std::optional<ValidationReport> bad;
    A.composition.for_each([&](Id g, Id f, Id r) {
        if (bad) return;
        auto img = B.compose(F.mor(g), F.mor(f));
        if (!img || *img != F.mor(r))
            bad = ValidationReport::fail("functor-composition",
                                         "(" + A.morphism_name(g) + ", " + A.morphism_name(f) + ")");
    });
    if (bad) return *bad;
    return ValidationReport::pass();
}

FunctorPropertyReport check_functor_properties(const FinFunctor& F) {
    const FinCategory& A = *F.source;
    const FinCategory& B = *F.target;
    FunctorPropertyReport rep;
    const auto nA = to_id(A.object_count());
    const auto nB = to_id(B.object_count());

    rep.surjective_on_objects = true;
    for (Id b = 0; b < nB; ++b) {
        Id pre = -1;
        for (Id a = 0; a < nA && pre < 0; ++a)
            if (F.obj(a) == b) pre = a;
        if (pre < 0) {
            rep.surjective_on_objects = false;
            rep.counterexample.emplace("surjective_on_objects", "no preimage of " + B.object_name(b));
            rep.object_preimage.clear();
            break;
        }
        rep.object_preimage.push_back(pre);
    }

    rep.essentially_surjective = true;
    for (Id b = 0; b < nB; ++b) {
        std::optional<std::pair<Id, Id>> w;
        for (Id a = 0; a < nA && !w; ++a)
            for (Id l : B.hom(F.obj(a), b))
                if (B.is_iso(l)) {
                    w = {a, l};
                    break;
                }
        if (!w) {
            rep.essentially_surjective = false;
            rep.counterexample.emplace("essentially_surjective",
                                       "no object isomorphic to " + B.object_name(b));
            rep.essential_witness.clear();
            break;
        }
        rep.essential_witness.push_back(*w);
    }

    rep.full = true;
    rep.faithful = true;
    for (Id a = 0; a < nA; ++a)
        for (Id a2 = 0; a2 < nA; ++a2) {
            const auto& src_hom = A.hom(a, a2);
            const auto& tgt_hom = B.hom(F.obj(a), F.obj(a2));
            std::vector<Id> hit(B.morphism_count(), -1);
            for (Id f : src_hom) {
                Id g = F.mor(f);
                if (hit[g] >= 0 && rep.faithful) {
                    rep.faithful = false;
                    rep.counterexample.emplace("faithful", A.morphism_name(hit[g]) + " and " +
                                                               A.morphism_name(f) + " both map to " +
                                                               B.morphism_name(g));
                }
                if (hit[g] < 0) hit[g] = f;
            }
            for (Id g : tgt_hom)
                if (hit[g] < 0 && rep.full) {
                    rep.full = false;
                    rep.counterexample.emplace("full", B.morphism_name(g) + " : " +
                                                           B.object_name(F.obj(a)) + " -> " +
                                                           B.object_name(F.obj(a2)) + " has no preimage");
                }
        }
    return rep;
}

std::string FunctorPropertyReport::summary() const {
    std::ostringstream os;
    os << "surjective_on_objects=" << surjective_on_objects
       << " essentially_surjective=" << essentially_surjective << " full=" << full
       << " faithful=" << faithful;
    for (const auto& [k, v] : counterexample) os << "; " << k << ": " << v;
    return os.str();
}

}  // namespace fincat
