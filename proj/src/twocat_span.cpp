#include "fincat/twocat.hpp"

namespace fincat {

namespace {

Id inverse_or_throw(const Fin2Category& k, Id t) {
    auto i = k.vinverse(t);
    if (!i) throw StructuralError("2-cell " + k.name2(t) + " is not invertible");
    return *i;
}

}  // namespace

std::pair<bool, bool> two_cell_equations(const Pseudofunctor2& F, const TwoSpan& s, Id one, Id one2, Id alpha,
                                         Id beta) {
    const Fin2Category& B = *F.target;
    const auto& m = s.data.ones[one];
    const auto& m2 = s.data.ones[one2];
    const auto& src = s.data.objs[s.apex->src0(one)].adj;
    const auto& tgt = s.data.objs[s.apex->tgt0(one)].adj;
    const Id Fa = F.map2[alpha];
    bool first = B.v(m2.lambda, B.post(tgt.ell, Fa)) == B.v(B.pre(beta, src.ell), m.lambda);
    bool second = B.v(m2.rho, B.pre(Fa, src.r)) == B.v(B.post(tgt.r, beta), m.rho);
    return {first, second};
}

std::pair<Paste2, Paste2> unique_beta_equation(const Pseudofunctor2& F, const TwoSpan& s, Id one, Id one2,
                                               Id alpha) {
    const Fin2Category& B = *F.target;
    const auto& m = s.data.ones[one];
    const auto& m2 = s.data.ones[one2];
    const auto& src = s.data.objs[s.apex->src0(one)].adj;
    const auto& tgt = s.data.objs[s.apex->tgt0(one)].adj;
    Paste2 lhs = Paste2::H({Paste2::leaf(B.id2[src.ell]), Paste2::hole()});
    Paste2 rhs = Paste2::V({Paste2::leaf(inverse_or_throw(B, m.lambda)),
                            Paste2::H({Paste2::leaf(F.map2[alpha]), Paste2::leaf(B.id2[tgt.ell])}),
                            Paste2::leaf(m2.lambda)});
    return {lhs, rhs};
}

TwoSpan build_apex_2cat(const Pseudofunctor2& F) {
    const Fin2Category& A = *F.source;
    const Fin2Category& B = *F.target;
    auto K = std::make_shared<Fin2Category>();
    TwoSpan s;
    auto& d = s.data;

    for (Id a = 0; a < to_id(A.count0()); ++a)
        for (Id b = 0; b < to_id(B.count0()); ++b)
            for (const auto& adj : enumerate_adjoint_equivalences(B, F.map0[a], b)) {
                d.objs.push_back({a, b, adj});
                K->one.objects.add(tuple_name({A.name0(a), B.name0(b), B.name1(adj.ell), B.name1(adj.r),
                                               B.name2(adj.eta), B.name2(adj.epsilon)}));
            }
    const auto n0 = to_id(d.objs.size());

    auto add_one = [&](Id c, Id c2, Id f, Id g, Id lam, Id rho) {
        Id id = K->one.morphisms.add(tuple_name({K->one.object_name(c), K->one.object_name(c2), A.name1(f),
                                                 B.name1(g), B.name2(lam), B.name2(rho)}));
        K->one.src.push_back(c);
        K->one.tgt.push_back(c2);
        d.ones.push_back({f, g, lam, rho});
        d.one_index[{c, c2, f, g, lam, rho}] = id;
    };
    for (Id c = 0; c < n0; ++c)
        for (Id c2 = 0; c2 < n0; ++c2) {
            const auto& o = d.objs[c];
            const auto& o2 = d.objs[c2];
            for (Id f : A.one.hom(o.a, o2.a)) {
                const Id Ff = F.map1[f];
                for (Id g : B.one.hom(o.b, o2.b))
                    for (Id lam : B.hom2(B.comp1(o2.adj.ell, Ff), B.comp1(g, o.adj.ell))) {
                        if (!B.is_invertible(lam)) continue;
                        for (Id rho : B.hom2(B.comp1(Ff, o.adj.r), B.comp1(o2.adj.r, g))) {
                            if (!B.is_invertible(rho)) continue;
                            auto [e1, e2] = lambda_rho_compatible(B, lam, rho, Ff, g, o.adj, o2.adj);
                            if (e1 && e2) add_one(c, c2, f, g, lam, rho);
                        }
                    }
            }
        }
    auto one_at = [&](const std::vector<Id>& key) {
        auto it = d.one_index.find(key);
        if (it == d.one_index.end()) throw StructuralError("apex 1-cell composite is not an apex 1-cell");
        return it->second;
    };
    for (Id c = 0; c < n0; ++c) {
        const auto& o = d.objs[c];
        const Id unit_inv = inverse_or_throw(B, F.unit_cells[o.a]);  // F(1_a) => 1
        K->one.identities.push_back(one_at({c, c, A.id1(o.a), B.id1(o.b), B.post(o.adj.ell, unit_inv),
                                            B.pre(unit_inv, o.adj.r)}));
    }
    const auto n1 = to_id(d.ones.size());
    for (Id m = 0; m < n1; ++m)
        for (Id n = 0; n < n1; ++n) {
            if (K->one.tgt[m] != K->one.src[n]) continue;
            const Id c = K->one.src[m], c3 = K->one.tgt[n];
            const auto& x = d.ones[m];
            const auto& y = d.ones[n];
            const auto& adj = d.objs[c].adj;
            const auto& adj3 = d.objs[c3].adj;
            const Id fy = F.map1[y.f], fx = F.map1[x.f];
            const Id phi_inv = inverse_or_throw(B, F.comp_cell(y.f, x.f));  // F(f'f) => Ff' Ff
            Id lam = B.vseq({B.post(adj3.ell, phi_inv), B.pre(y.lambda, fx), B.post(y.g, x.lambda)});
            Id rho = B.vseq({B.pre(phi_inv, adj.r), B.post(fy, x.rho), B.pre(y.rho, x.g)});
            K->one.composition.set(n, m, one_at({c, c3, A.comp1(y.f, x.f), B.comp1(y.g, x.g), lam, rho}));
        }
    K->one.finalize();
    s.apex = K;

    for (Id m = 0; m < n1; ++m)
        for (Id m2 = 0; m2 < n1; ++m2) {
            if (K->one.src[m] != K->one.src[m2] || K->one.tgt[m] != K->one.tgt[m2]) continue;
            const auto& x = d.ones[m];
            const auto& x2 = d.ones[m2];
            for (Id al : A.hom2(x.f, x2.f))
                for (Id be : B.hom2(x.g, x2.g)) {
                    auto [e1, e2] = two_cell_equations(F, s, m, m2, al, be);
                    if (!(e1 && e2)) continue;
                    Id id = K->cells2.add(tuple_name({K->name1(m), K->name1(m2), A.name2(al), B.name2(be)}));
                    K->src2.push_back(m);
                    K->tgt2.push_back(m2);
                    d.twos.push_back({al, be});
                    d.two_index[{m, m2, al, be}] = id;
                }
        }
    auto two_at = [&](const std::vector<Id>& key) {
        auto it = d.two_index.find(key);
        if (it == d.two_index.end()) throw StructuralError("apex 2-cell composite is not an apex 2-cell");
        return it->second;
    };
    for (Id m = 0; m < n1; ++m) K->id2.push_back(two_at({m, m, A.id2[d.ones[m].f], B.id2[d.ones[m].g]}));
    const auto n2 = to_id(d.twos.size());
    for (Id t = 0; t < n2; ++t)
        for (Id u = 0; u < n2; ++u) {
            const auto& p = d.twos[t];
            const auto& q = d.twos[u];
            if (K->tgt2[t] == K->src2[u])
                K->vcomp.set(u, t, two_at({K->src2[t], K->tgt2[u], A.v(q.alpha, p.alpha), B.v(q.beta, p.beta)}));
            if (K->one.tgt[K->src2[t]] == K->one.src[K->src2[u]])
                K->hcomp.set(u, t, two_at({K->one.compose_at(K->src2[u], K->src2[t]),
                                           K->one.compose_at(K->tgt2[u], K->tgt2[t]), A.h(q.alpha, p.alpha),
                                           B.h(q.beta, p.beta)}));
        }
    K->finalize();
    s.apex = K;

    std::vector<Id> p0, p1, p2, q0, q1, q2;
    for (const auto& o : d.objs) {
        p0.push_back(o.a);
        q0.push_back(o.b);
    }
    for (const auto& o : d.ones) {
        p1.push_back(o.f);
        q1.push_back(o.g);
    }
    for (const auto& o : d.twos) {
        p2.push_back(o.alpha);
        q2.push_back(o.beta);
    }
    s.left = make_strict_2functor(K, F.source, p0, p1, p2);
    s.right = make_strict_2functor(K, F.target, q0, q1, q2);
    s.left_report = check_pseudofunctor_properties(s.left);
    s.right_report = check_pseudofunctor_properties(s.right);
    return s;
}

TwoSpan build_span_2cat(const Pseudofunctor2& F) {
    auto v = validate_pseudofunctor(F);
    if (!v.report.ok()) throw PreconditionError("pseudofunctor does not validate", v.report.describe());
    auto rep = check_pseudofunctor_properties(F);
    if (!rep.biequivalence()) throw PreconditionError("pseudofunctor is not a biequivalence", rep.summary());
    return build_apex_2cat(F);
}

Id lift_along_left(const Pseudofunctor2& F, const TwoSpan& s, Id c, Id c2, Id f) {
    const Fin2Category& B = *F.target;
    const auto& o = s.data.objs[c];
    const auto& o2 = s.data.objs[c2];
    const Id Ff = F.map1[f];
    const Id g = B.one.compose_path({o2.adj.ell, Ff, o.adj.r});
    const Id lam = B.post(B.comp1(o2.adj.ell, Ff), o.adj.eta);
    const Id rho = B.h(o2.adj.eta, B.id2[B.comp1(Ff, o.adj.r)]);
    auto it = s.data.one_index.find({c, c2, f, g, lam, rho});
    return it == s.data.one_index.end() ? -1 : it->second;
}

Id lift_along_right(const Pseudofunctor2& F, const TwoSpan& s, Id c, Id c2, Id g) {
    const Fin2Category& A = *F.source;
    const Fin2Category& B = *F.target;
    const auto& o = s.data.objs[c];
    const auto& o2 = s.data.objs[c2];
    const Id target = B.one.compose_path({o2.adj.r, g, o.adj.ell});
    for (Id f : A.one.hom(o.a, o2.a))
        for (Id chi : B.hom2(F.map1[f], target)) {
            if (!B.is_invertible(chi)) continue;
            const Id lam = B.v(B.pre(o2.adj.epsilon, B.comp1(g, o.adj.ell)), B.post(o2.adj.ell, chi));
            const Id rho = B.v(B.post(B.comp1(o2.adj.r, g), o.adj.epsilon), B.pre(chi, o.adj.r));
            auto it = s.data.one_index.find({c, c2, f, g, lam, rho});
            return it == s.data.one_index.end() ? -1 : it->second;
        }
    return -1;
}

}  // namespace fincat
