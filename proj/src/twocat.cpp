#include "fincat/twocat.hpp"

#include <sstream>

namespace fincat {

Id Fin2Category::v(Id b, Id a) const {
    auto r = vcomp.get(b, a);
    if (!r) {
        if (tgt2[a] != src2[b])
            throw StructuralError("vertical composite of " + name2(b) + " after " + name2(a) + " is ill-boundaried");
        throw StructuralError("vertical composite of " + name2(b) + " after " + name2(a) + " is missing");
    }
    return *r;
}

Id Fin2Category::h(Id b, Id a) const {
    auto r = hcomp.get(b, a);
    if (!r) {
        if (to0(a) != from0(b))
            throw StructuralError("horizontal composite of " + name2(b) + " after " + name2(a) + " is ill-boundaried");
        throw StructuralError("horizontal composite of " + name2(b) + " after " + name2(a) + " is missing");
    }
    return *r;
}

Id Fin2Category::vseq(std::initializer_list<Id> cells) const {
    auto it = cells.begin();
    Id acc = *it++;
    for (; it != cells.end(); ++it) acc = v(*it, acc);
    return acc;
}

std::optional<Id> Fin2Category::vinverse(Id t) const {
    for (Id s : hom2(tgt2[t], src2[t])) {
        auto st = vcomp.get(s, t);
        auto ts = vcomp.get(t, s);
        if (st && ts && *st == id2[src2[t]] && *ts == id2[tgt2[t]]) return s;
    }
    return std::nullopt;
}

void Fin2Category::finalize() {
    one.finalize();
    const auto n1 = to_id(count1());
    const auto n2 = to_id(count2());
    if (src2.size() != count2() || tgt2.size() != count2() || id2.size() != count1())
        throw StructuralError("2-cell tables do not cover every cell");
    for (Id t = 0; t < n2; ++t)
        if (src2[t] < 0 || src2[t] >= n1 || tgt2[t] < 0 || tgt2[t] >= n1)
            throw StructuralError("2-cell '" + name2(t) + "' has a dangling boundary");
    for (Id f = 0; f < n1; ++f)
        if (id2[f] < 0 || id2[f] >= n2) throw StructuralError("identity 2-cell of '" + name1(f) + "' is dangling");
    auto check = [&](Id b, Id a, Id r) {
        if (a < 0 || a >= n2 || b < 0 || b >= n2 || r < 0 || r >= n2)
            throw StructuralError("2-cell composition table refers to an unknown cell");
    };
    vcomp.for_each(check);
    hcomp.for_each(check);
    homs2_.assign(count1() * count1(), {});
    for (Id t = 0; t < n2; ++t)
        homs2_[static_cast<std::size_t>(src2[t]) * count1() + static_cast<std::size_t>(tgt2[t])].push_back(t);
}

TwoCategoryBuilder& TwoCategoryBuilder::cell0(const std::string& n) {
    one_.object(n);
    return *this;
}
TwoCategoryBuilder& TwoCategoryBuilder::cell1(const std::string& n, const std::string& s, const std::string& t) {
    one_.morphism(n, s, t);
    return *this;
}
TwoCategoryBuilder& TwoCategoryBuilder::comp1(const std::string& g, const std::string& f, const std::string& r) {
    one_.compose(g, f, r);
    return *this;
}
TwoCategoryBuilder& TwoCategoryBuilder::cell2(const std::string& n, const std::string& s, const std::string& t) {
    cells2_.push_back({n, s, t});
    return *this;
}
TwoCategoryBuilder& TwoCategoryBuilder::vcomp(const std::string& b, const std::string& a, const std::string& r) {
    v_.push_back({b, a, r});
    return *this;
}
TwoCategoryBuilder& TwoCategoryBuilder::hcomp(const std::string& b, const std::string& a, const std::string& r) {
    h_.push_back({b, a, r});
    return *this;
}

Fin2Category TwoCategoryBuilder::build() const {
    Fin2Category k;
    k.one = one_.build();
    for (Id f = 0; f < to_id(k.count1()); ++f) {
        k.id2.push_back(k.cells2.add("id_" + k.name1(f)));
        k.src2.push_back(f);
        k.tgt2.push_back(f);
    }
    for (const auto& c : cells2_) {
        k.cells2.add(c.name);
        k.src2.push_back(k.one.morphisms.at(c.src, "1-cell"));
        k.tgt2.push_back(k.one.morphisms.at(c.tgt, "1-cell"));
    }
    k.finalize();
    const auto n2 = to_id(k.count2());
    for (Id t = 0; t < n2; ++t) {
        k.vcomp.set(t, k.id2[k.src2[t]], t);
        k.vcomp.set(k.id2[k.tgt2[t]], t, t);
        k.hcomp.set(t, k.id2[k.id1(k.from0(t))], t);
        k.hcomp.set(k.id2[k.id1(k.to0(t))], t, t);
    }
    for (Id f = 0; f < to_id(k.count1()); ++f)
        for (Id g = 0; g < to_id(k.count1()); ++g)
            if (k.tgt0(f) == k.src0(g))
                if (auto gf = k.one.compose(g, f)) k.hcomp.set(k.id2[g], k.id2[f], k.id2[*gf]);
    for (const auto& e : v_)
        k.vcomp.set(k.cells2.at(e.b, "2-cell"), k.cells2.at(e.a, "2-cell"), k.cells2.at(e.r, "2-cell"));
    for (const auto& e : h_)
        k.hcomp.set(k.cells2.at(e.b, "2-cell"), k.cells2.at(e.a, "2-cell"), k.cells2.at(e.r, "2-cell"));
    if (thin_) {
        for (Id a = 0; a < n2; ++a)
            for (Id b = 0; b < n2; ++b) {
                if (k.tgt2[a] == k.src2[b] && !k.vcomp.contains(b, a)) {
                    const auto& cands = k.hom2(k.src2[a], k.tgt2[b]);
                    if (cands.size() == 1) k.vcomp.set(b, a, cands[0]);
                }
                if (k.to0(a) == k.from0(b) && !k.hcomp.contains(b, a)) {
                    auto s = k.one.compose(k.src2[b], k.src2[a]);
                    auto t = k.one.compose(k.tgt2[b], k.tgt2[a]);
                    if (s && t && k.hom2(*s, *t).size() == 1) k.hcomp.set(b, a, k.hom2(*s, *t)[0]);
                }
            }
    }
    return k;
}

ValidationReport validate_2category(const Fin2Category& k) {
    if (auto r = validate_category(k.one); !r.ok()) {
        r.axiom = "1-cell " + r.axiom;
        return r;
    }
    const auto n1 = to_id(k.count1());
    const auto n2 = to_id(k.count2());
    if (k.src2.size() != k.count2() || k.tgt2.size() != k.count2() || k.id2.size() != k.count1())
        return ValidationReport::structural("table-size", "2-cell tables incomplete");
    for (Id t = 0; t < n2; ++t)
        if (k.src2[t] < 0 || k.src2[t] >= n1 || k.tgt2[t] < 0 || k.tgt2[t] >= n1)
            return ValidationReport::structural("dangling-identifier", k.name2(t));
    bool dangling = false;
    auto chk = [&](Id b, Id a, Id r) {
        if (a < 0 || a >= n2 || b < 0 || b >= n2 || r < 0 || r >= n2) dangling = true;
    };
    k.vcomp.for_each(chk);
    k.hcomp.for_each(chk);
    if (dangling) return ValidationReport::structural("dangling-identifier", "2-cell composition table");

    auto nm = [&](Id t) { return k.name2(t); };
    auto pr = [&](Id b, Id a) { return "(" + nm(b) + ", " + nm(a) + ")"; };
    for (Id t = 0; t < n2; ++t)
        if (k.src0(k.src2[t]) != k.src0(k.tgt2[t]) || k.tgt0(k.src2[t]) != k.tgt0(k.tgt2[t]))
            return ValidationReport::fail("2-cell-parallel", nm(t));
    for (Id f = 0; f < n1; ++f)
        if (k.src2[k.id2[f]] != f || k.tgt2[k.id2[f]] != f)
            return ValidationReport::fail("identity-2-cell-boundary", k.name1(f));

    std::optional<ValidationReport> bad;
    k.vcomp.for_each([&](Id b, Id a, Id r) {
        if (bad) return;
        if (k.tgt2[a] != k.src2[b]) bad = ValidationReport::fail("vcomp-domain", pr(b, a));
        else if (k.src2[r] != k.src2[a] || k.tgt2[r] != k.tgt2[b])
            bad = ValidationReport::fail("vcomp-boundary", pr(b, a));
    });
    if (bad) return *bad;
    k.hcomp.for_each([&](Id b, Id a, Id r) {
        if (bad) return;
        if (k.to0(a) != k.from0(b)) {
            bad = ValidationReport::fail("hcomp-domain", pr(b, a));
            return;
        }
        auto s = k.one.compose(k.src2[b], k.src2[a]);
        auto t = k.one.compose(k.tgt2[b], k.tgt2[a]);
        if (!s || !t || k.src2[r] != *s || k.tgt2[r] != *t) bad = ValidationReport::fail("hcomp-boundary", pr(b, a));
    });
    if (bad) return *bad;
    for (Id a = 0; a < n2; ++a)
        for (Id b = 0; b < n2; ++b) {
            if (k.tgt2[a] == k.src2[b] && !k.vcomp.contains(b, a))
                return ValidationReport::fail("vcomp-total", pr(b, a));
            if (k.to0(a) == k.from0(b) && !k.hcomp.contains(b, a))
                return ValidationReport::fail("hcomp-total", pr(b, a));
        }
    for (Id t = 0; t < n2; ++t) {
        if (k.v(t, k.id2[k.src2[t]]) != t || k.v(k.id2[k.tgt2[t]], t) != t)
            return ValidationReport::fail("vcomp-unit-law", nm(t));
        if (k.h(t, k.id2[k.id1(k.from0(t))]) != t || k.h(k.id2[k.id1(k.to0(t))], t) != t)
            return ValidationReport::fail("hcomp-unit-law", nm(t));
    }
    for (Id f = 0; f < n1; ++f)
        for (Id g = 0; g < n1; ++g)
            if (k.tgt0(f) == k.src0(g) && k.h(k.id2[g], k.id2[f]) != k.id2[k.comp1(g, f)])
                return ValidationReport::fail("hcomp-identities", "(" + k.name1(g) + ", " + k.name1(f) + ")");
    for (Id a = 0; a < n2; ++a)
        for (Id b = 0; b < n2; ++b) {
            if (k.tgt2[a] == k.src2[b]) {
                Id ba = k.v(b, a);
                for (Id c = 0; c < n2; ++c)
                    if (k.tgt2[b] == k.src2[c] && k.v(c, ba) != k.v(k.v(c, b), a))
                        return ValidationReport::fail("vcomp-associativity", "(" + nm(c) + ", " + nm(b) + ", " + nm(a) + ")");
            }
            if (k.to0(a) == k.from0(b)) {
                Id ba = k.h(b, a);
                for (Id c = 0; c < n2; ++c)
                    if (k.to0(b) == k.from0(c) && k.h(c, ba) != k.h(k.h(c, b), a))
                        return ValidationReport::fail("hcomp-associativity", "(" + nm(c) + ", " + nm(b) + ", " + nm(a) + ")");
            }
        }
    // (b2 . b) o (a2 . a) = (b2 o a2) . (b o a)
    for (Id a = 0; a < n2; ++a)
        for (Id a2 = 0; a2 < n2; ++a2) {
            if (k.tgt2[a] != k.src2[a2]) continue;
            Id va = k.v(a2, a);
            for (Id b = 0; b < n2; ++b) {
                if (k.from0(b) != k.to0(a)) continue;
                for (Id b2 = 0; b2 < n2; ++b2) {
                    if (k.tgt2[b] != k.src2[b2]) continue;
                    if (k.h(k.v(b2, b), va) != k.v(k.h(b2, a2), k.h(b, a)))
                        return ValidationReport::fail("interchange", "(" + nm(b2) + ", " + nm(b) + ", " + nm(a2) + ", " +
                                                                           nm(a) + ")");
                }
            }
        }
    return ValidationReport::pass();
}

HomCategory hom_category(const Fin2Category& k, Id a, Id b) {
    HomCategory hc;
    auto c = std::make_shared<FinCategory>();
    std::vector<Id> local1(k.count1(), -1), local2(k.count2(), -1);
    for (Id f : k.one.hom(a, b)) {
        local1[f] = c->objects.add(k.name1(f));
        hc.cells1.push_back(f);
    }
    for (Id f : k.one.hom(a, b))
        for (Id g : k.one.hom(a, b))
            for (Id t : k.hom2(f, g)) {
                local2[t] = c->morphisms.add(k.name2(t));
                c->src.push_back(local1[f]);
                c->tgt.push_back(local1[g]);
                hc.cells2.push_back(t);
            }
    for (Id f : k.one.hom(a, b)) c->identities.push_back(local2[k.id2[f]]);
    for (Id t : hc.cells2)
        for (Id s : hc.cells2)
            if (k.tgt2[t] == k.src2[s])
                if (auto r = k.vcomp.get(s, t)) c->composition.set(local2[s], local2[t], local2[*r]);
    c->finalize();
    hc.cat = c;
    return hc;
}

ValidationReport check_adjoint_equivalence(const AdjointEquivalence& e, const Fin2Category& k) {
    const auto n1 = to_id(k.count1());
    const auto n2 = to_id(k.count2());
    if (e.ell < 0 || e.ell >= n1) throw StructuralError("adjoint equivalence: l is not a 1-cell");
    if (e.r < 0 || e.r >= n1) throw StructuralError("adjoint equivalence: no reverse 1-cell r");
    const Id a = k.src0(e.ell), b = k.tgt0(e.ell);
    if (k.src0(e.r) != b || k.tgt0(e.r) != a) throw StructuralError("adjoint equivalence: r does not reverse l");
    const Id rl = k.comp1(e.r, e.ell), lr = k.comp1(e.ell, e.r);
    if (e.eta < 0 || e.eta >= n2 || k.src2[e.eta] != k.id1(a) || k.tgt2[e.eta] != rl)
        throw StructuralError("adjoint equivalence: eta is not 1 => r.l");
    if (e.epsilon < 0 || e.epsilon >= n2 || k.src2[e.epsilon] != lr || k.tgt2[e.epsilon] != k.id1(b))
        throw StructuralError("adjoint equivalence: epsilon is not l.r => 1");
    if (!k.is_invertible(e.eta)) return ValidationReport::fail("eta-invertible", k.name2(e.eta));
    if (!k.is_invertible(e.epsilon)) return ValidationReport::fail("epsilon-invertible", k.name2(e.epsilon));
    // (eps l).(l eta) = 1_l and (r eps).(eta r) = 1_r
    if (k.v(k.pre(e.epsilon, e.ell), k.post(e.ell, e.eta)) != k.id2[e.ell])
        return ValidationReport::fail("triangle", "l side");
    if (k.v(k.post(e.r, e.epsilon), k.pre(e.eta, e.r)) != k.id2[e.r])
        return ValidationReport::fail("triangle", "r side");
    return ValidationReport::pass();
}

AdjointEquivalence identity_adjoint_equivalence(const Fin2Category& k, Id a) {
    Id i = k.id1(a);
    return {i, i, k.id2[i], k.id2[i]};
}

namespace {

template <class Visit>
bool for_each_adjoint_candidate(const Fin2Category& k, Id ell, Visit&& visit) {
    const Id a = k.src0(ell), b = k.tgt0(ell);
    for (Id r : k.one.hom(b, a)) {
        const Id rl = k.comp1(r, ell), lr = k.comp1(ell, r);
        for (Id eta : k.hom2(k.id1(a), rl))
            for (Id eps : k.hom2(lr, k.id1(b)))
                if (visit(AdjointEquivalence{ell, r, eta, eps})) return true;
    }
    return false;
}

}  // namespace

SearchOutcome<AdjointEquivalence> complete_adjoint_equivalence(Id ell, const Fin2Category& k,
                                                               const SearchBudget& budget) {
    SearchOutcome<AdjointEquivalence> out;
    for_each_adjoint_candidate(k, ell, [&](const AdjointEquivalence& e) {
        if (out.candidates_examined == budget.max_candidates) {
            out.status = SearchStatus::budget;
            return true;
        }
        ++out.candidates_examined;
        if (check_adjoint_equivalence(e, k).ok()) {
            out.status = SearchStatus::found;
            out.witness = e;
            return true;
        }
        return false;
    });
    return out;
}

std::vector<AdjointEquivalence> enumerate_adjoint_equivalences(const Fin2Category& k, Id x, Id y) {
    std::vector<AdjointEquivalence> out;
    for (Id ell : k.one.hom(x, y))
        for_each_adjoint_candidate(k, ell, [&](const AdjointEquivalence& e) {
            if (check_adjoint_equivalence(e, k).ok()) out.push_back(e);
            return false;
        });
    return out;
}

Id mate_of(const Fin2Category& k, Id lambda, Id Ff, Id g, const AdjointEquivalence& adj,
           const AdjointEquivalence& adj2) {
    const Id r = adj.r, r2 = adj2.r;
    if (k.src2[lambda] != k.comp1(adj2.ell, Ff) || k.tgt2[lambda] != k.comp1(g, adj.ell))
        throw StructuralError("mate: lambda does not have the shape l'.Ff => g.l");
    Id s1 = k.h(adj2.eta, k.id2[k.comp1(Ff, r)]);  // Ff r => r' l' Ff r
    Id s2 = k.post(r2, k.pre(lambda, r));           // => r' g l r
    Id s3 = k.post(k.comp1(r2, g), adj.epsilon);    // => r' g
    return k.vseq({s1, s2, s3});
}

Id reverse_mate_of(const Fin2Category& k, Id rho, Id Ff, Id g, const AdjointEquivalence& adj,
                   const AdjointEquivalence& adj2) {
    const Id l = adj.ell, l2 = adj2.ell;
    if (k.src2[rho] != k.comp1(Ff, adj.r) || k.tgt2[rho] != k.comp1(adj2.r, g))
        throw StructuralError("mate: rho does not have the shape Ff.r => r'.g");
    Id s1 = k.post(k.comp1(l2, Ff), adj.eta);      // l' Ff => l' Ff r l
    Id s2 = k.post(l2, k.pre(rho, l));              // => l' r' g l
    Id s3 = k.h(adj2.epsilon, k.id2[k.comp1(g, l)]);  // => g l
    return k.vseq({s1, s2, s3});
}

std::pair<bool, bool> lambda_rho_compatible(const Fin2Category& k, Id lambda, Id rho, Id Ff, Id g,
                                            const AdjointEquivalence& adj, const AdjointEquivalence& adj2) {
    // (r' lambda).(eta' Ff) = (rho l).(Ff eta)
    Id lhs1 = k.v(k.post(adj2.r, lambda), k.pre(adj2.eta, Ff));
    Id rhs1 = k.v(k.pre(rho, adj.ell), k.post(Ff, adj.eta));
    // (g eps).(lambda r) = (eps' g).(l' rho)
    Id lhs2 = k.v(k.post(g, adj.epsilon), k.pre(lambda, adj.r));
    Id rhs2 = k.v(k.pre(adj2.epsilon, g), k.post(adj2.ell, rho));
    return {lhs1 == rhs1, lhs2 == rhs2};
}

Id Pseudofunctor2::comp_cell(Id g, Id f) const {
    auto r = comp_cells.get(g, f);
    if (!r) throw StructuralError("missing composition coherence cell");
    return *r;
}

Pseudofunctor2 make_strict_2functor(const TwoPtr& source, const TwoPtr& target, std::vector<Id> map0,
                                    std::vector<Id> map1, std::vector<Id> map2) {
    Pseudofunctor2 F;
    F.source = source;
    F.target = target;
    F.map0 = std::move(map0);
    F.map1 = std::move(map1);
    F.map2 = std::move(map2);
    const Fin2Category& A = *source;
    const Fin2Category& B = *target;
    for (Id f = 0; f < to_id(A.count1()); ++f)
        for (Id g = 0; g < to_id(A.count1()); ++g)
            if (A.tgt0(f) == A.src0(g)) {
                auto c = B.one.compose(F.map1[g], F.map1[f]);
                if (!c) throw StructuralError("strict 2-functor: image 1-cells are not composable");
                F.comp_cells.set(g, f, B.id2[*c]);
            }
    for (Id a = 0; a < to_id(A.count0()); ++a) F.unit_cells.push_back(B.id2[B.id1(F.map0[a])]);
    F.strict = true;
    return F;
}

Pseudofunctor2 identity_pseudofunctor(const TwoPtr& k) {
    std::vector<Id> m0, m1, m2;
    for (Id i = 0; i < to_id(k->count0()); ++i) m0.push_back(i);
    for (Id i = 0; i < to_id(k->count1()); ++i) m1.push_back(i);
    for (Id i = 0; i < to_id(k->count2()); ++i) m2.push_back(i);
    return make_strict_2functor(k, k, m0, m1, m2);
}

Pseudofunctor2 compose_pseudofunctors(const Pseudofunctor2& G, const Pseudofunctor2& F) {
    if (F.target != G.source) throw StructuralError("pseudofunctors are not composable");
    const Fin2Category& A = *F.source;
    const Fin2Category& C = *G.target;
    Pseudofunctor2 H;
    H.source = F.source;
    H.target = G.target;
    for (Id x : F.map0) H.map0.push_back(G.map0[x]);
    for (Id x : F.map1) H.map1.push_back(G.map1[x]);
    for (Id x : F.map2) H.map2.push_back(G.map2[x]);
    F.comp_cells.for_each([&](Id g, Id f, Id phi) {
        // GFg o GFf => G(Fg o Ff) => GF(g o f)
        H.comp_cells.set(g, f, C.v(G.map2[phi], G.comp_cell(F.map1[g], F.map1[f])));
    });
    for (Id a = 0; a < to_id(A.count0()); ++a)
        H.unit_cells.push_back(C.v(G.map2[F.unit_cells[a]], G.unit_cells[F.map0[a]]));
    H.strict = F.strict && G.strict;
    return H;
}

PseudofunctorValidation validate_pseudofunctor(const Pseudofunctor2& F) {
    PseudofunctorValidation out;
    auto& rep = out.report;
    if (!F.source || !F.target) {
        rep = ValidationReport::structural("pseudofunctor", "missing source or target");
        return out;
    }
    const Fin2Category& A = *F.source;
    const Fin2Category& B = *F.target;
    if (F.map0.size() != A.count0() || F.map1.size() != A.count1() || F.map2.size() != A.count2() ||
        F.unit_cells.size() != A.count0()) {
        rep = ValidationReport::structural("pseudofunctor", "maps are not total");
        return out;
    }
    for (Id f = 0; f < to_id(A.count1()); ++f)
        for (Id g = 0; g < to_id(A.count1()); ++g)
            if (A.tgt0(f) == A.src0(g) && !F.comp_cells.contains(g, f)) {
                rep = ValidationReport::structural("pseudofunctor", "composition coherence table is not total");
                return out;
            }
    auto ok_range = [](Id x, std::size_t n) { return x >= 0 && x < to_id(n); };
    for (Id x : F.map0) if (!ok_range(x, B.count0())) { rep = ValidationReport::structural("dangling-identifier", "0-cell image"); return out; }
    for (Id x : F.map1) if (!ok_range(x, B.count1())) { rep = ValidationReport::structural("dangling-identifier", "1-cell image"); return out; }
    for (Id x : F.map2) if (!ok_range(x, B.count2())) { rep = ValidationReport::structural("dangling-identifier", "2-cell image"); return out; }

    for (Id f = 0; f < to_id(A.count1()); ++f)
        if (B.src0(F.map1[f]) != F.map0[A.src0(f)] || B.tgt0(F.map1[f]) != F.map0[A.tgt0(f)]) {
            rep = ValidationReport::fail("1-cell-boundary", A.name1(f));
            return out;
        }
    for (Id t = 0; t < to_id(A.count2()); ++t)
        if (B.src2[F.map2[t]] != F.map1[A.src2[t]] || B.tgt2[F.map2[t]] != F.map1[A.tgt2[t]]) {
            rep = ValidationReport::fail("2-cell-boundary", A.name2(t));
            return out;
        }
    for (Id f = 0; f < to_id(A.count1()); ++f)
        if (F.map2[A.id2[f]] != B.id2[F.map1[f]]) {
            rep = ValidationReport::fail("2-cell-identity", A.name1(f));
            return out;
        }
    std::optional<ValidationReport> bad;
    A.vcomp.for_each([&](Id b, Id a, Id r) {
        if (!bad && B.v(F.map2[b], F.map2[a]) != F.map2[r])
            bad = ValidationReport::fail("vcomp-preservation", "(" + A.name2(b) + ", " + A.name2(a) + ")");
    });
    if (bad) {
        rep = *bad;
        return out;
    }
    bool strict = true;
    const auto n1 = to_id(A.count1());
    for (Id f = 0; f < n1; ++f)
        for (Id g = 0; g < n1; ++g) {
            if (A.tgt0(f) != A.src0(g)) continue;
            Id phi = F.comp_cell(g, f);
            auto fgf = B.one.compose(F.map1[g], F.map1[f]);
            const std::string tup = "(" + A.name1(g) + ", " + A.name1(f) + ")";
            if (!ok_range(phi, B.count2()) || !fgf || B.src2[phi] != *fgf || B.tgt2[phi] != F.map1[A.comp1(g, f)]) {
                rep = ValidationReport::fail("coherence-boundary", tup);
                return out;
            }
            if (!B.is_invertible(phi)) {
                rep = ValidationReport::fail("coherence-invertible", tup);
                return out;
            }
            if (phi != B.id2[B.src2[phi]] || B.src2[phi] != B.tgt2[phi]) strict = false;
        }
    for (Id a = 0; a < to_id(A.count0()); ++a) {
        Id u = F.unit_cells[a];
        if (!ok_range(u, B.count2()) || B.src2[u] != B.id1(F.map0[a]) || B.tgt2[u] != F.map1[A.id1(a)]) {
            rep = ValidationReport::fail("coherence-boundary", "unit at " + A.name0(a));
            return out;
        }
        if (!B.is_invertible(u)) {
            rep = ValidationReport::fail("coherence-invertible", "unit at " + A.name0(a));
            return out;
        }
        if (B.src2[u] != B.tgt2[u] || u != B.id2[B.src2[u]]) strict = false;
    }
    // phi_{g',f'} . (Fb o Fa) = F(b o a) . phi_{g,f}
    const auto n2 = to_id(A.count2());
    for (Id a = 0; a < n2; ++a)
        for (Id b = 0; b < n2; ++b) {
            if (A.to0(a) != A.from0(b)) continue;
            Id lhs = B.v(F.comp_cell(A.tgt2[b], A.tgt2[a]), B.h(F.map2[b], F.map2[a]));
            Id rhs = B.v(F.map2[A.h(b, a)], F.comp_cell(A.src2[b], A.src2[a]));
            if (lhs != rhs) {
                rep = ValidationReport::fail("coherence-naturality", "(" + A.name2(b) + ", " + A.name2(a) + ")");
                return out;
            }
        }
    for (Id f = 0; f < n1; ++f)
        for (Id g = 0; g < n1; ++g) {
            if (A.tgt0(f) != A.src0(g)) continue;
            for (Id h = 0; h < n1; ++h) {
                if (A.tgt0(g) != A.src0(h)) continue;
                Id lhs = B.v(F.comp_cell(h, A.comp1(g, f)), B.post(F.map1[h], F.comp_cell(g, f)));
                Id rhs = B.v(F.comp_cell(A.comp1(h, g), f), B.pre(F.comp_cell(h, g), F.map1[f]));
                if (lhs != rhs) {
                    rep = ValidationReport::fail("coherence-associativity",
                                                 "(" + A.name1(h) + ", " + A.name1(g) + ", " + A.name1(f) + ")");
                    return out;
                }
            }
        }
    for (Id f = 0; f < n1; ++f) {
        const Id a = A.src0(f), b = A.tgt0(f), Ff = F.map1[f];
        if (B.v(F.comp_cell(f, A.id1(a)), B.post(Ff, F.unit_cells[a])) != B.id2[Ff] ||
            B.v(F.comp_cell(A.id1(b), f), B.pre(F.unit_cells[b], Ff)) != B.id2[Ff]) {
            rep = ValidationReport::fail("coherence-unit", A.name1(f));
            return out;
        }
    }
    out.strict = strict;
    if (F.strict && !strict) rep = ValidationReport::fail("strict-flag", "a coherence cell is not an identity");
    return out;
}

std::string Pseudofunctor2Report::summary() const {
    std::ostringstream os;
    os << "surjective_on_objects=" << surjective_on_objects << " essentially_surjective=" << essentially_surjective
       << " locally_equivalence=" << locally_equivalence
       << " locally_surjective_equivalence=" << locally_surjective_equivalence;
    for (const auto& [k, v] : counterexample) os << "; " << k << ": " << v;
    return os.str();
}

Pseudofunctor2Report check_pseudofunctor_properties(const Pseudofunctor2& F) {
    const Fin2Category& A = *F.source;
    const Fin2Category& B = *F.target;
    Pseudofunctor2Report rep;
    rep.surjective_on_objects = true;
    for (Id b = 0; b < to_id(B.count0()); ++b) {
        bool hit = false;
        for (Id x : F.map0) hit = hit || x == b;
        if (!hit) {
            rep.surjective_on_objects = false;
            rep.counterexample.emplace("surjective_on_objects", "no preimage of " + B.name0(b));
            break;
        }
    }
    rep.essentially_surjective = true;
    for (Id b = 0; b < to_id(B.count0()); ++b) {
        std::optional<std::pair<Id, AdjointEquivalence>> w;
        for (Id a = 0; a < to_id(A.count0()) && !w; ++a)
            for (Id l : B.one.hom(F.map0[a], b)) {
                auto s = complete_adjoint_equivalence(l, B);
                if (s.found()) {
                    w = {a, *s.witness};
                    break;
                }
            }
        if (!w) {
            rep.essentially_surjective = false;
            rep.counterexample.emplace("essentially_surjective",
                                       "no 0-cell maps to an object equivalent to " + B.name0(b) + " (exhausted)");
            rep.essential_witness.clear();
            break;
        }
        rep.essential_witness.push_back(*w);
    }
    rep.locally_equivalence = true;
    rep.locally_surjective_equivalence = true;
    for (Id a = 0; a < to_id(A.count0()); ++a)
        for (Id a2 = 0; a2 < to_id(A.count0()); ++a2) {
            HomCategory src = hom_category(A, a, a2);
            HomCategory tgt = hom_category(B, F.map0[a], F.map0[a2]);
            std::vector<Id> back1(B.count1(), -1), back2(B.count2(), -1);
            for (Id i = 0; i < to_id(tgt.cells1.size()); ++i) back1[tgt.cells1[i]] = i;
            for (Id i = 0; i < to_id(tgt.cells2.size()); ++i) back2[tgt.cells2[i]] = i;
            FinFunctor local{src.cat, tgt.cat, {}, {}};
            for (Id f : src.cells1) local.obj_map.push_back(back1[F.map1[f]]);
            for (Id t : src.cells2) local.mor_map.push_back(back2[F.map2[t]]);
            auto r = check_functor_properties(local);
            const std::string where = "hom(" + A.name0(a) + ", " + A.name0(a2) + ")";
            if (!r.equivalence() && rep.locally_equivalence) {
                rep.locally_equivalence = false;
                rep.counterexample.emplace("locally_equivalence", where + ": " + r.summary());
            }
            if (!r.surjective_equivalence() && rep.locally_surjective_equivalence) {
                rep.locally_surjective_equivalence = false;
                rep.counterexample.emplace("locally_surjective_equivalence", where + ": " + r.summary());
            }
        }
    return rep;
}

Id evaluate(const Fin2Category& k, const Paste2& t, Id hole) {
    switch (t.kind) {
    case Paste2::Kind::leaf:
        return t.cell;
    case Paste2::Kind::hole:
        if (hole < 0) throw StructuralError("paste tree hole is unfilled");
        return hole;
    case Paste2::Kind::v:
    case Paste2::Kind::h: {
        if (t.parts.empty()) throw StructuralError("empty paste");
        Id acc = evaluate(k, t.parts[0], hole);
        for (std::size_t i = 1; i < t.parts.size(); ++i) {
            Id next = evaluate(k, t.parts[i], hole);
            if (t.kind == Paste2::Kind::v) {
                if (k.tgt2[acc] != k.src2[next]) throw StructuralError("ill-boundaried vertical paste");
                acc = k.v(next, acc);
            } else {
                if (k.to0(acc) != k.from0(next)) throw StructuralError("ill-boundaried horizontal paste");
                acc = k.h(next, acc);
            }
        }
        return acc;
    }
    }
    return -1;
}

SolveOutcome solve_2cell(const Fin2Category& k, const Paste2& lhs, const Paste2& rhs, Id hole_src, Id hole_tgt) {
    return solve_hole(k.hom2(hole_src, hole_tgt),
                      [&](Id c) { return evaluate(k, lhs, c) == evaluate(k, rhs, c); });
}

}  // namespace fincat
