#include "fincat/monoidal.hpp"

#include <map>

namespace fincat {

Id MonoidalStructure::tensor(Id a, Id b) const {
    auto r = tensor_obj.get(a, b);
    if (!r) throw StructuralError("tensor of objects is partial");
    return *r;
}

Id MonoidalStructure::tensor_arrow(Id f, Id g) const {
    auto r = tensor_mor.get(f, g);
    if (!r) throw StructuralError("tensor of morphisms is partial");
    return *r;
}

MonoidalStructure make_strict_monoidal(const CatPtr& base, Id unit, const std::function<Id(Id, Id)>& tobj,
                                       const std::function<Id(Id, Id)>& tmor) {
    MonoidalStructure m;
    m.base = base;
    m.unit = unit;
    const auto n = to_id(base->object_count());
    const auto k = to_id(base->morphism_count());
    for (Id a = 0; a < n; ++a)
        for (Id b = 0; b < n; ++b) m.tensor_obj.set(a, b, tobj(a, b));
    for (Id f = 0; f < k; ++f)
        for (Id g = 0; g < k; ++g) m.tensor_mor.set(f, g, tmor(f, g));
    for (Id a = 0; a < n; ++a)
        for (Id b = 0; b < n; ++b)
            for (Id c = 0; c < n; ++c) m.associator.push_back(base->identity(tobj(tobj(a, b), c)));
    for (Id a = 0; a < n; ++a) {
        m.left_unitor.push_back(base->identity(tobj(unit, a)));
        m.right_unitor.push_back(base->identity(tobj(a, unit)));
    }
    return m;
}

ValidationReport validate_monoidal(const MonoidalStructure& m) {
    if (!m.base) return ValidationReport::structural("monoidal", "missing base category");
    const FinCategory& C = *m.base;
    if (auto r = validate_category(C); !r.ok()) return r;
    const auto n = to_id(C.object_count());
    const auto k = to_id(C.morphism_count());
    if (m.unit < 0 || m.unit >= n) return ValidationReport::structural("dangling-identifier", "unit");
    if (m.tensor_obj.size() != static_cast<std::size_t>(n * n) ||
        m.tensor_mor.size() != static_cast<std::size_t>(k * k))
        return ValidationReport::structural("partial-tensor", "tensor tables must be total");
    if (m.associator.size() != static_cast<std::size_t>(n * n * n) || m.left_unitor.size() != static_cast<std::size_t>(n) ||
        m.right_unitor.size() != static_cast<std::size_t>(n))
        return ValidationReport::structural("partial-tensor", "coherence tables must be total");
    auto on = [&](Id a) { return C.object_name(a); };
    auto mn = [&](Id f) { return C.morphism_name(f); };
    auto T = [&](Id a, Id b) { return m.tensor(a, b); };
    auto TM = [&](Id f, Id g) { return m.tensor_arrow(f, g); };
    auto comp = [&](Id g, Id f) { return C.compose_at(g, f); };

    for (Id f = 0; f < k; ++f)
        for (Id g = 0; g < k; ++g) {
            Id fg = TM(f, g);
            if (fg < 0 || fg >= k) return ValidationReport::structural("dangling-identifier", "tensor_mor");
            if (C.src[fg] != T(C.src[f], C.src[g]) || C.tgt[fg] != T(C.tgt[f], C.tgt[g]))
                return ValidationReport::fail("tensor-boundary", "(" + mn(f) + ", " + mn(g) + ")");
        }
    for (Id a = 0; a < n; ++a)
        for (Id b = 0; b < n; ++b)
            if (TM(C.identity(a), C.identity(b)) != C.identity(T(a, b)))
                return ValidationReport::fail("tensor-identity", "(" + on(a) + ", " + on(b) + ")");
    for (Id f = 0; f < k; ++f)
        for (Id f2 = 0; f2 < k; ++f2) {
            if (C.tgt[f] != C.src[f2]) continue;
            for (Id g = 0; g < k; ++g)
                for (Id g2 = 0; g2 < k; ++g2) {
                    if (C.tgt[g] != C.src[g2]) continue;
                    if (TM(comp(f2, f), comp(g2, g)) != comp(TM(f2, g2), TM(f, g)))
                        return ValidationReport::fail("tensor-functoriality", "(" + mn(f2) + "." + mn(f) + ", " +
                                                                                   mn(g2) + "." + mn(g) + ")");
                }
        }

    for (Id a = 0; a < n; ++a)
        for (Id b = 0; b < n; ++b)
            for (Id c = 0; c < n; ++c) {
                Id al = m.assoc(a, b, c);
                const std::string tup = "(" + on(a) + ", " + on(b) + ", " + on(c) + ")";
                if (al < 0 || al >= k) return ValidationReport::structural("dangling-identifier", "associator");
                if (C.src[al] != T(T(a, b), c) || C.tgt[al] != T(a, T(b, c)))
                    return ValidationReport::fail("associator-boundary", tup);
                if (!C.is_iso(al)) return ValidationReport::fail("associator-invertible", tup);
            }
    for (Id a = 0; a < n; ++a) {
        Id l = m.left_unitor[a], r = m.right_unitor[a];
        if (l < 0 || l >= k || r < 0 || r >= k)
            return ValidationReport::structural("dangling-identifier", "unitor");
        if (C.src[l] != T(m.unit, a) || C.tgt[l] != a) return ValidationReport::fail("unitor-boundary", "left " + on(a));
        if (C.src[r] != T(a, m.unit) || C.tgt[r] != a) return ValidationReport::fail("unitor-boundary", "right " + on(a));
        if (!C.is_iso(l) || !C.is_iso(r)) return ValidationReport::fail("unitor-invertible", on(a));
    }
    for (Id f = 0; f < k; ++f)
        for (Id g = 0; g < k; ++g)
            for (Id h = 0; h < k; ++h) {
                Id lhs = comp(m.assoc(C.tgt[f], C.tgt[g], C.tgt[h]), TM(TM(f, g), h));
                Id rhs = comp(TM(f, TM(g, h)), m.assoc(C.src[f], C.src[g], C.src[h]));
                if (lhs != rhs)
                    return ValidationReport::fail("associator-naturality",
                                                  "(" + mn(f) + ", " + mn(g) + ", " + mn(h) + ")");
            }
    const Id iu = C.identity(m.unit);
    for (Id f = 0; f < k; ++f) {
        if (comp(m.left_unitor[C.tgt[f]], TM(iu, f)) != comp(f, m.left_unitor[C.src[f]]))
            return ValidationReport::fail("unitor-naturality", "left " + mn(f));
        if (comp(m.right_unitor[C.tgt[f]], TM(f, iu)) != comp(f, m.right_unitor[C.src[f]]))
            return ValidationReport::fail("unitor-naturality", "right " + mn(f));
    }
    auto id = [&](Id a) { return C.identity(a); };
    for (Id a = 0; a < n; ++a)
        for (Id b = 0; b < n; ++b) {
            // (a I) b -> a (I b) -> a b  equals  (a I) b -> a b
            Id lhs = comp(TM(id(a), m.left_unitor[b]), m.assoc(a, m.unit, b));
            Id rhs = TM(m.right_unitor[a], id(b));
            if (lhs != rhs) return ValidationReport::fail("triangle", "(" + on(a) + ", " + on(b) + ")");
            for (Id c = 0; c < n; ++c)
                for (Id d = 0; d < n; ++d) {
                    Id p1 = comp(m.assoc(a, b, T(c, d)), m.assoc(T(a, b), c, d));
                    Id p2 = C.compose_path({TM(id(a), m.assoc(b, c, d)), m.assoc(a, T(b, c), d),
                                            TM(m.assoc(a, b, c), id(d))});
                    if (p1 != p2)
                        return ValidationReport::fail("pentagon", "(" + on(a) + ", " + on(b) + ", " + on(c) + ", " +
                                                                      on(d) + ")");
                }
        }
    return ValidationReport::pass();
}

MonoidalFunctorData make_strict_monoidal_functor(const MonPtr& source, const MonPtr& target,
                                                 const FinFunctor& underlying) {
    MonoidalFunctorData d;
    d.source = source;
    d.target = target;
    d.underlying = underlying;
    const auto n = to_id(source->base->object_count());
    for (Id a = 0; a < n; ++a)
        for (Id b = 0; b < n; ++b)
            d.phi.push_back(target->base->identity(underlying.obj(source->tensor(a, b))));
    d.phi_unit = target->base->identity(underlying.obj(source->unit));
    d.strict = true;
    return d;
}

MonoidalFunctorReport validate_monoidal_functor(const MonoidalFunctorData& d) {
    MonoidalFunctorReport rep;
    const MonoidalStructure& M = *d.source;
    const MonoidalStructure& N = *d.target;
    const FinCategory& A = *M.base;
    const FinCategory& B = *N.base;
    const FinFunctor& F = d.underlying;
    if (F.source != M.base || F.target != N.base) {
        rep.validation = ValidationReport::structural("monoidal-functor", "underlying functor endpoints");
        return rep;
    }
    if (auto r = validate_functor(F); !r.ok()) {
        rep.validation = r;
        return rep;
    }
    const auto n = to_id(A.object_count());
    if (d.phi.size() != static_cast<std::size_t>(n * n)) {
        rep.validation = ValidationReport::structural("monoidal-functor", "phi table is not total");
        return rep;
    }
    auto on = [&](Id a) { return A.object_name(a); };
    auto& out = rep.validation;
    bool strict = true;
    for (Id a = 0; a < n && out.ok(); ++a)
        for (Id b = 0; b < n; ++b) {
            Id p = d.phi_at(a, b);
            if (B.src[p] != N.tensor(F.obj(a), F.obj(b)) || B.tgt[p] != F.obj(M.tensor(a, b))) {
                out = ValidationReport::fail("phi-boundary", "(" + on(a) + ", " + on(b) + ")");
                break;
            }
            if (!B.is_iso(p)) rep.non_invertible.push_back("phi(" + on(a) + ", " + on(b) + ")");
            if (!B.is_identity(p)) strict = false;
        }
    if (out.ok()) {
        if (B.src[d.phi_unit] != N.unit || B.tgt[d.phi_unit] != F.obj(M.unit))
            out = ValidationReport::fail("phi-boundary", "unit");
        else {
            if (!B.is_iso(d.phi_unit)) rep.non_invertible.push_back("phi_unit");
            if (!B.is_identity(d.phi_unit)) strict = false;
        }
    }
    if (out.ok() && !rep.non_invertible.empty())
        out = ValidationReport::fail("phi-invertible", rep.non_invertible.front());
    auto comp = [&](std::vector<Id> p) { return B.compose_path(p); };
    const auto k = to_id(A.morphism_count());
    for (Id f = 0; f < k && out.ok(); ++f)
        for (Id g = 0; g < k; ++g) {
            Id lhs = comp({d.phi_at(A.tgt[f], A.tgt[g]), N.tensor_arrow(F.mor(f), F.mor(g))});
            Id rhs = comp({F.mor(M.tensor_arrow(f, g)), d.phi_at(A.src[f], A.src[g])});
            if (lhs != rhs) {
                out = ValidationReport::fail("phi-naturality", "(" + A.morphism_name(f) + ", " + A.morphism_name(g) + ")");
                break;
            }
        }
    auto Bid = [&](Id b) { return B.identity(b); };
    for (Id a = 0; a < n && out.ok(); ++a)
        for (Id b = 0; b < n && out.ok(); ++b)
            for (Id c = 0; c < n; ++c) {
                Id lhs = comp({F.mor(M.assoc(a, b, c)), d.phi_at(M.tensor(a, b), c),
                               N.tensor_arrow(d.phi_at(a, b), Bid(F.obj(c)))});
                Id rhs = comp({d.phi_at(a, M.tensor(b, c)), N.tensor_arrow(Bid(F.obj(a)), d.phi_at(b, c)),
                               N.assoc(F.obj(a), F.obj(b), F.obj(c))});
                if (lhs != rhs) {
                    out = ValidationReport::fail("monoidal-functor-associativity",
                                                 "(" + on(a) + ", " + on(b) + ", " + on(c) + ")");
                    break;
                }
            }
    for (Id a = 0; a < n && out.ok(); ++a) {
        Id l = comp({F.mor(M.left_unitor[a]), d.phi_at(M.unit, a), N.tensor_arrow(d.phi_unit, Bid(F.obj(a)))});
        Id r = comp({F.mor(M.right_unitor[a]), d.phi_at(a, M.unit), N.tensor_arrow(Bid(F.obj(a)), d.phi_unit)});
        if (l != N.left_unitor[F.obj(a)]) out = ValidationReport::fail("monoidal-functor-unit", "left " + on(a));
        else if (r != N.right_unitor[F.obj(a)]) out = ValidationReport::fail("monoidal-functor-unit", "right " + on(a));
    }
    rep.strict = strict;
    if (out.ok() && d.strict && !strict)
        out = ValidationReport::fail("strict-flag", "declared strict but a phi component is not an identity");
    rep.properties = check_functor_properties(F);
    rep.monoidal_equivalence = out.ok() && rep.properties.equivalence();
    rep.surjective_equivalence = out.ok() && rep.properties.surjective_equivalence();
    return rep;
}

MonoidalSpan build_span_monoidal(const MonoidalFunctorData& d) {
    auto pre = validate_monoidal_functor(d);
    if (!pre.monoidal_equivalence)
        throw PreconditionError("not a monoidal equivalence",
                                pre.validation.describe() + "; " + pre.properties.summary());
    const MonoidalStructure& M = *d.source;
    const MonoidalStructure& N = *d.target;
    const FinCategory& B = *N.base;
    CatSpan base = build_apex_cat(d.underlying);
    const FinCategory& C = *base.apex;
    const FinFunctor& P = base.left;
    const FinFunctor& Q = base.right;

    // Apex objects are identified by (a, b, l); morphisms by (src, tgt, f, g).
    const std::vector<Id>& ell = base.iso;
    std::map<std::tuple<Id, Id, Id>, Id> obj_of;
    for (Id c = 0; c < to_id(C.object_count()); ++c) obj_of[{P.obj(c), Q.obj(c), ell[c]}] = c;
    std::map<std::tuple<Id, Id, Id, Id>, Id> mor_of;
    for (Id m = 0; m < to_id(C.morphism_count()); ++m) mor_of[{C.src[m], C.tgt[m], P.mor(m), Q.mor(m)}] = m;

    auto inv = [&](Id f) {
        auto i = B.inverse(f);
        if (!i) throw StructuralError("coherence component is not invertible");
        return *i;
    };
    auto apex = std::make_shared<MonoidalStructure>();
    apex->base = base.apex;
    const auto nc = to_id(C.object_count());
    auto tens = [&](Id c, Id c2) {
        Id a = M.tensor(P.obj(c), P.obj(c2));
        Id b = N.tensor(Q.obj(c), Q.obj(c2));
        Id l = B.compose_at(N.tensor_arrow(ell[c], ell[c2]), inv(d.phi_at(P.obj(c), P.obj(c2))));
        return obj_of.at({a, b, l});
    };
    for (Id c = 0; c < nc; ++c)
        for (Id c2 = 0; c2 < nc; ++c2) apex->tensor_obj.set(c, c2, tens(c, c2));
    for (Id m = 0; m < to_id(C.morphism_count()); ++m)
        for (Id m2 = 0; m2 < to_id(C.morphism_count()); ++m2)
            apex->tensor_mor.set(m, m2, mor_of.at({tens(C.src[m], C.src[m2]), tens(C.tgt[m], C.tgt[m2]),
                                                   M.tensor_arrow(P.mor(m), P.mor(m2)),
                                                   N.tensor_arrow(Q.mor(m), Q.mor(m2))}));
    apex->unit = obj_of.at({M.unit, N.unit, inv(d.phi_unit)});
    for (Id x = 0; x < nc; ++x)
        for (Id y = 0; y < nc; ++y)
            for (Id z = 0; z < nc; ++z)
                apex->associator.push_back(mor_of.at({tens(tens(x, y), z), tens(x, tens(y, z)),
                                                      M.assoc(P.obj(x), P.obj(y), P.obj(z)),
                                                      N.assoc(Q.obj(x), Q.obj(y), Q.obj(z))}));
    for (Id x = 0; x < nc; ++x) {
        apex->left_unitor.push_back(mor_of.at(
            {tens(apex->unit, x), x, M.left_unitor[P.obj(x)], N.left_unitor[Q.obj(x)]}));
        apex->right_unitor.push_back(mor_of.at(
            {tens(x, apex->unit), x, M.right_unitor[P.obj(x)], N.right_unitor[Q.obj(x)]}));
    }
    MonoidalSpan s;
    s.apex = apex;
    s.left = make_strict_monoidal_functor(apex, d.source, P);
    s.right = make_strict_monoidal_functor(apex, d.target, Q);
    s.left_report = validate_monoidal_functor(s.left);
    s.right_report = validate_monoidal_functor(s.right);
    return s;
}

}  // namespace fincat
