#include "fincat/cat_span.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fincat {

CatSpan build_apex_cat(const FinFunctor& F) {
    const FinCategory& A = *F.source;
    const FinCategory& B = *F.target;
    auto C = std::make_shared<FinCategory>();

    struct Obj { Id a, b, l; };
    std::vector<Obj> objs;
    for (Id a = 0; a < to_id(A.object_count()); ++a)
        for (Id b = 0; b < to_id(B.object_count()); ++b)
            for (Id l : B.hom(F.obj(a), b))
                if (B.is_iso(l)) {
                    objs.push_back({a, b, l});
                    C->objects.add(tuple_name({A.object_name(a), B.object_name(b), B.morphism_name(l)}));
                }

    std::vector<std::pair<Id, Id>> parts;  // (f, g) per apex morphism
    std::map<std::tuple<Id, Id, Id, Id>, Id> lookup;  // (c, c', f, g)
    for (Id c = 0; c < to_id(objs.size()); ++c)
        for (Id c2 = 0; c2 < to_id(objs.size()); ++c2)
            for (Id f : A.hom(objs[c].a, objs[c2].a))
                for (Id g : B.hom(objs[c].b, objs[c2].b)) {
                    if (B.compose_at(g, objs[c].l) != B.compose_at(objs[c2].l, F.mor(f))) continue;
                    Id id = C->morphisms.add(tuple_name({C->object_name(c), C->object_name(c2),
                                                         A.morphism_name(f), B.morphism_name(g)}));
                    C->src.push_back(c);
                    C->tgt.push_back(c2);
                    parts.push_back({f, g});
                    lookup[{c, c2, f, g}] = id;
                }
    for (Id c = 0; c < to_id(objs.size()); ++c)
        C->identities.push_back(lookup.at({c, c, A.identity(objs[c].a), B.identity(objs[c].b)}));
    for (Id m = 0; m < to_id(parts.size()); ++m)
        for (Id n = 0; n < to_id(parts.size()); ++n) {
            if (C->tgt[m] != C->src[n]) continue;
            Id f = A.compose_at(parts[n].first, parts[m].first);
            Id g = B.compose_at(parts[n].second, parts[m].second);
            C->composition.set(n, m, lookup.at({C->src[m], C->tgt[n], f, g}));
        }
    C->finalize();

    CatSpan s;
    s.apex = C;
    s.left = FinFunctor{C, F.source, {}, {}};
    s.right = FinFunctor{C, F.target, {}, {}};
    for (const auto& o : objs) {
        s.left.obj_map.push_back(o.a);
        s.right.obj_map.push_back(o.b);
        s.iso.push_back(o.l);
    }
    for (const auto& [f, g] : parts) {
        s.left.mor_map.push_back(f);
        s.right.mor_map.push_back(g);
    }
    s.left_report = check_functor_properties(s.left);
    s.right_report = check_functor_properties(s.right);
    return s;
}

CatSpan build_span_cat(const FinFunctor& F) {
    auto rep = check_functor_properties(F);
    if (!rep.equivalence()) throw PreconditionError("functor is not an equivalence", rep.summary());
    return build_apex_cat(F);
}

Pullback pullback_span(const FinFunctor& P, const FinFunctor& F) {
    if (P.target != F.target && !(P.target && F.target && P.target.get() == F.target.get()))
        throw StructuralError("pullback legs do not share a target");
    const FinCategory& X = *P.source;
    const FinCategory& Y = *F.source;
    auto C = std::make_shared<FinCategory>();
    std::vector<std::pair<Id, Id>> objs, mors;
    std::map<std::pair<Id, Id>, Id> obj_of, mor_of;
    for (Id x = 0; x < to_id(X.object_count()); ++x)
        for (Id y = 0; y < to_id(Y.object_count()); ++y)
            if (P.obj(x) == F.obj(y)) {
                obj_of[{x, y}] = C->objects.add(tuple_name({X.object_name(x), Y.object_name(y)}));
                objs.push_back({x, y});
            }
    for (Id u = 0; u < to_id(X.morphism_count()); ++u)
        for (Id v = 0; v < to_id(Y.morphism_count()); ++v)
            if (P.mor(u) == F.mor(v)) {
                mor_of[{u, v}] = C->morphisms.add(tuple_name({X.morphism_name(u), Y.morphism_name(v)}));
                C->src.push_back(obj_of.at({X.src[u], Y.src[v]}));
                C->tgt.push_back(obj_of.at({X.tgt[u], Y.tgt[v]}));
                mors.push_back({u, v});
            }
    for (const auto& [x, y] : objs) C->identities.push_back(mor_of.at({X.identity(x), Y.identity(y)}));
    for (Id m = 0; m < to_id(mors.size()); ++m)
        for (Id n = 0; n < to_id(mors.size()); ++n)
            if (C->tgt[m] == C->src[n])
                C->composition.set(n, m, mor_of.at({X.compose_at(mors[n].first, mors[m].first),
                                                    Y.compose_at(mors[n].second, mors[m].second)}));
    C->finalize();
    Pullback pb;
    pb.apex = C;
    pb.to_p_source = FinFunctor{C, P.source, {}, {}};
    pb.to_f_source = FinFunctor{C, F.source, {}, {}};
    for (const auto& [x, y] : objs) {
        pb.to_p_source.obj_map.push_back(x);
        pb.to_f_source.obj_map.push_back(y);
    }
    for (const auto& [u, v] : mors) {
        pb.to_p_source.mor_map.push_back(u);
        pb.to_f_source.mor_map.push_back(v);
    }
    return pb;
}

std::vector<std::vector<std::size_t>> zigzag_closure(const std::vector<CatPtr>& catalog,
                                                     const std::vector<FinFunctor>& edges) {
    auto index_of = [&](const CatPtr& c) {
        for (std::size_t i = 0; i < catalog.size(); ++i)
            if (catalog[i].get() == c.get()) return i;
        throw StructuralError("edge refers to a category outside the catalog");
    };
    std::vector<std::size_t> parent(catalog.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (const auto& e : edges) {
        std::size_t s = index_of(e.source), t = index_of(e.target);
        auto rep = check_functor_properties(e);
        if (!rep.surjective_equivalence())
            throw PreconditionError("edge is not a certified surjective equivalence", rep.summary());
        std::size_t rs = find(s), rt = find(t);
        if (rs != rt) parent[std::max(rs, rt)] = std::min(rs, rt);
    }
    std::map<std::size_t, std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < catalog.size(); ++i) blocks[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, members] : blocks) out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace fincat
