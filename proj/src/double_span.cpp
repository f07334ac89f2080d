#include "fincat/double_span.hpp"

namespace fincat {

namespace {

PasteSq L(Id x) { return PasteSq::leaf(x); }
PasteSq H(std::vector<PasteSq> p) { return PasteSq::H(std::move(p)); }
PasteSq V(std::vector<PasteSq> p) { return PasteSq::V(std::move(p)); }

using Obj = DoubleCellData::Obj;
using HCell = DoubleCellData::HCell;
using VCell = DoubleCellData::VCell;

const FinDoubleCategory& target(const DoubleSpan& s) { return *s.F.target; }

std::vector<NamedEquation> eq_1ha(const DoubleSpan& s, const HCell& h) {
    const auto& B = target(s);
    const Obj& o = s.data.objs[static_cast<std::size_t>(h.src)];
    const Obj& o2 = s.data.objs[static_cast<std::size_t>(h.tgt)];
    Id Ff = s.F.h(h.f);
    return {
        {"1ha", V({H({L(B.hid(Ff)), L(o2.hadj.eta)}), H({L(h.lamH), L(B.hid(o2.hadj.r))})}),
         V({H({L(o.hadj.eta), L(B.hid(Ff))}), H({L(B.hid(o.hadj.ell)), L(h.rhoH)})})},
        {"1ha", V({H({L(B.hid(o.hadj.r)), L(h.lamH)}), H({L(o.hadj.epsilon), L(B.hid(h.g))})}),
         V({H({L(h.rhoH), L(B.hid(o2.hadj.ell))}), H({L(B.hid(h.g)), L(o2.hadj.epsilon)})})},
    };
}

std::vector<NamedEquation> eq_1hb(const DoubleSpan& s, const HCell& h) {
    const auto& B = target(s);
    const Obj& o = s.data.objs[static_cast<std::size_t>(h.src)];
    const Obj& o2 = s.data.objs[static_cast<std::size_t>(h.tgt)];
    Id Ff = s.F.h(h.f);
    return {
        {"1hb", H({V({L(h.lamV), L(h.rhoV)}), L(o2.vadj.eta)}), H({L(o.vadj.eta), L(B.hid(Ff))})},
        {"1hb", H({L(o.vadj.epsilon), V({L(h.rhoV), L(h.lamV)})}), H({L(B.hid(h.g)), L(o2.vadj.epsilon)})},
    };
}

std::vector<NamedEquation> eq_1hc(const DoubleSpan& s, const HCell& h) {
    const auto& B = target(s);
    const Obj& o = s.data.objs[static_cast<std::size_t>(h.src)];
    const Obj& o2 = s.data.objs[static_cast<std::size_t>(h.tgt)];
    Id Ff = s.F.h(h.f);
    return {
        {"1hc", V({H({L(B.hid(Ff)), L(o2.binding.sigma)}), L(h.lamH)}), H({L(o.binding.sigma), L(h.lamV)})},
        {"1hc", V({L(h.lamH), H({L(o.binding.tau), L(B.hid(h.g))})}), H({L(h.lamV), L(o2.binding.tau)})},
    };
}

std::vector<NamedEquation> eq_1va(const DoubleSpan& s, const VCell& v) {
    const auto& B = target(s);
    const Obj& o = s.data.objs[static_cast<std::size_t>(v.src)];
    const Obj& o2 = s.data.objs[static_cast<std::size_t>(v.tgt)];
    Id Fs = s.F.v(v.s);
    return {
        {"1va", H({V({L(v.gamV), L(B.vid(o2.vadj.r))}), V({L(B.vid(Fs)), L(o2.vadj.eta)})}),
         H({V({L(B.vid(o.vadj.ell)), L(v.delV)}), V({L(o.vadj.eta), L(B.vid(Fs))})})},
        {"1va", H({V({L(o.vadj.epsilon), L(B.vid(v.t))}), V({L(B.vid(o.vadj.r)), L(v.gamV)})}),
         H({V({L(B.vid(v.t)), L(o2.vadj.epsilon)}), V({L(v.delV), L(B.vid(o2.vadj.ell))})})},
    };
}

std::vector<NamedEquation> eq_1vb(const DoubleSpan& s, const VCell& v) {
    const auto& B = target(s);
    const Obj& o = s.data.objs[static_cast<std::size_t>(v.src)];
    const Obj& o2 = s.data.objs[static_cast<std::size_t>(v.tgt)];
    Id Fs = s.F.v(v.s);
    return {
        {"1vb", V({L(o.hadj.eta), H({L(v.gamH), L(v.delH)})}), V({L(B.vid(Fs)), L(o2.hadj.eta)})},
        {"1vb", V({H({L(v.delH), L(v.gamH)}), L(o2.hadj.epsilon)}), V({L(o.hadj.epsilon), L(B.vid(v.t))})},
    };
}

std::vector<NamedEquation> eq_1vc(const DoubleSpan& s, const VCell& v) {
    const auto& B = target(s);
    const Obj& o = s.data.objs[static_cast<std::size_t>(v.src)];
    const Obj& o2 = s.data.objs[static_cast<std::size_t>(v.tgt)];
    Id Fs = s.F.v(v.s);
    Id gi = B.hinverse_at(v.gamV);
    return {
        {"1vc", H({V({L(B.vid(Fs)), L(o2.binding.sigma)}), L(gi)}), V({L(o.binding.sigma), L(v.gamH)})},
        {"1vc", H({L(gi), V({L(o.binding.tau), L(B.vid(v.t))})}), V({L(v.gamH), L(o2.binding.tau)})},
    };
}

bool holds(const FinDoubleCategory& d, const std::vector<NamedEquation>& es) {
    for (const auto& e : es)
        if (evaluate(d, e.lhs) != evaluate(d, e.rhs)) return false;
    return true;
}

void append(std::vector<NamedEquation>& to, std::vector<NamedEquation> from) {
    for (auto& e : from) to.push_back(std::move(e));
}

std::vector<Id> key_of(const HCell& h) { return {h.src, h.tgt, h.f, h.g, h.lamH, h.rhoH, h.lamV, h.rhoV}; }
std::vector<Id> key_of(const VCell& v) { return {v.src, v.tgt, v.s, v.t, v.gamV, v.delV, v.gamH, v.delH}; }

}  // namespace

std::vector<NamedEquation> hcell_equations(const DoubleSpan& s, const HCell& h) {
    auto out = eq_1ha(s, h);
    append(out, eq_1hb(s, h));
    append(out, eq_1hc(s, h));
    return out;
}

std::vector<NamedEquation> vcell_equations(const DoubleSpan& s, const VCell& v) {
    auto out = eq_1va(s, v);
    append(out, eq_1vb(s, v));
    append(out, eq_1vc(s, v));
    return out;
}

std::vector<NamedEquation> hcell_redundant_equations(const DoubleSpan& s, const HCell& h) {
    const auto& B = target(s);
    const Obj& o = s.data.objs[static_cast<std::size_t>(h.src)];
    const Obj& o2 = s.data.objs[static_cast<std::size_t>(h.tgt)];
    Id Ff = s.F.h(h.f);
    Id ri = B.vinverse_at(h.rhoH);
    return {
        {"rho", V({H({L(B.hid(h.g)), L(o2.mates.tau_bar)}), L(ri)}), H({L(o.mates.tau_bar), L(h.rhoV)})},
        {"rho", V({L(ri), H({L(o.mates.sigma_bar), L(B.hid(Ff))})}), H({L(h.rhoV), L(o2.mates.sigma_bar)})},
    };
}

std::vector<NamedEquation> square_equations(const DoubleSpan& s, Id top, Id bottom, Id left, Id right, Id alpha,
                                            Id beta) {
    const auto& h = s.data.hcells[static_cast<std::size_t>(top)];
    const auto& hb = s.data.hcells[static_cast<std::size_t>(bottom)];
    const auto& v = s.data.vcells[static_cast<std::size_t>(left)];
    const auto& v2 = s.data.vcells[static_cast<std::size_t>(right)];
    Id Fa = s.F.sq(alpha);
    return {
        {"2a", V({H({L(Fa), L(v2.gamH)}), L(hb.lamH)}), V({L(h.lamH), H({L(v.gamH), L(beta)})})},
        {"2b", V({H({L(v.delH), L(Fa)}), L(hb.rhoH)}), V({L(h.rhoH), H({L(beta), L(v2.delH)})})},
        {"2c", H({V({L(h.lamV), L(beta)}), L(v2.gamV)}), H({L(v.gamV), V({L(Fa), L(hb.lamV)})})},
        {"2d", H({V({L(beta), L(hb.rhoV)}), L(v2.delV)}), H({L(v.delV), V({L(h.rhoV), L(Fa)})})},
    };
}

std::array<bool, 4> check_coherence_quadruple(const DoubleSpan& s, Id top, Id bottom, Id left, Id right, Id alpha,
                                              Id beta) {
    auto es = square_equations(s, top, bottom, left, right, alpha, beta);
    std::array<bool, 4> out{};
    for (std::size_t i = 0; i < 4; ++i) out[i] = evaluate(target(s), es[i].lhs) == evaluate(target(s), es[i].rhs);
    return out;
}

EquationCheck evaluate_equation(const FinDoubleCategory& d, const NamedEquation& e) {
    EquationCheck c;
    Id l = evaluate(d, e.lhs), r = evaluate(d, e.rhs);
    c.holds = l == r;
    if (evaluate(d, e.lhs, -1, FoldOrder::right) != l || evaluate(d, e.rhs, -1, FoldOrder::right) != r)
        c.alternate_orders_agree = false;
    if (auto t = interchange_variant(d, e.lhs); t && evaluate(d, *t) != l) c.alternate_orders_agree = false;
    if (auto t = interchange_variant(d, e.rhs); t && evaluate(d, *t) != r) c.alternate_orders_agree = false;
    return c;
}

bool ApexEquationReport::all_hold() const {
    for (const auto& [k, n] : failed)
        if (n) return false;
    return order_mismatches == 0 && redundant_failures == 0;
}

ApexEquationReport verify_apex_equations(const DoubleSpan& s) {
    ApexEquationReport r;
    const auto& B = target(s);
    for (const char* f : {"1ha", "1hb", "1hc", "1va", "1vb", "1vc", "2"}) {
        r.checked[f] = 0;
        r.failed[f] = 0;
    }
    auto run = [&](const std::vector<NamedEquation>& es) {
        for (const auto& e : es) {
            auto c = evaluate_equation(B, e);
            const std::string fam = e.family == "2a" ? "2" : e.family;
            ++r.checked[fam];
            if (!c.holds) ++r.failed[fam];
            if (!c.alternate_orders_agree) ++r.order_mismatches;
        }
    };
    for (const auto& h : s.data.hcells) {
        if (!B.vinverse(h.lamH) || !B.vinverse(h.rhoH)) ++r.failed["1ha"];
        run(hcell_equations(s, h));
        for (const auto& e : hcell_redundant_equations(s, h))
            if (evaluate(B, e.lhs) != evaluate(B, e.rhs)) ++r.redundant_failures;
    }
    for (const auto& v : s.data.vcells) {
        if (!B.hinverse(v.gamV) || !B.hinverse(v.delV)) ++r.failed["1va"];
        run(vcell_equations(s, v));
    }
    const auto& C = *s.apex;
    for (Id q = 0; q < to_id(s.data.squares.size()); ++q) {
        const auto& b = C.frame(q);
        const auto& sq = s.data.squares[static_cast<std::size_t>(q)];
        auto es = square_equations(s, b.top, b.bottom, b.left, b.right, sq.alpha, sq.beta);
        es.resize(1);
        run(es);
    }
    return r;
}

DoubleSpan build_apex_double(const DoublePseudofunctor& F, const PropertyOptions& opt) {
    DoubleSpan s;
    s.F = F;
    const auto& A = *F.source;
    const auto& B = *F.target;
    const auto& AH = A.horizontal;
    const auto& AV = A.vertical;
    auto& D = s.data;

    // objects
    std::map<std::pair<Id, Id>, std::vector<HVAdjointEquivalence>> hadjs, vadjs;
    auto adjs = [&](auto& cache, Orientation o, Id x, Id y) -> const std::vector<HVAdjointEquivalence>& {
        auto it = cache.find({x, y});
        if (it == cache.end()) it = cache.emplace(std::make_pair(x, y), enumerate_hv_adjoint_equivalences(o, B, x, y)).first;
        return it->second;
    };
    for (Id a = 0; a < to_id(A.object_count()); ++a)
        for (Id b = 0; b < to_id(B.object_count()); ++b) {
            Id x = F.obj(a);
            for (const auto& ha : adjs(hadjs, Orientation::horizontal, x, b))
                for (const auto& va : adjs(vadjs, Orientation::vertical, x, b))
                    for (Id sg : B.squares_in({B.h1(x), ha.ell, B.v1(x), va.ell}))
                        for (Id ta : B.squares_in({ha.ell, B.h1(b), va.ell, B.v1(b)})) {
                            CompanionPair p{ha.ell, va.ell, sg, ta};
                            if (!check_companions(p, B)) continue;
                            D.objs.push_back({a, b, ha, va, p, companion_mates(p, ha, va, B)});
                        }
        }
    const auto nobj = to_id(D.objs.size());
    std::vector<std::string> obj_names;
    for (const auto& o : D.objs)
        obj_names.push_back(tuple_name({A.object_name(o.a), B.object_name(o.b), B.hname(o.hadj.ell),
                                        B.hname(o.hadj.r), B.sname(o.hadj.eta), B.sname(o.hadj.epsilon),
                                        B.vname(o.vadj.ell), B.vname(o.vadj.r), B.sname(o.vadj.eta),
                                        B.sname(o.vadj.epsilon), B.sname(o.binding.sigma),
                                        B.sname(o.binding.tau)}));

    // horizontal cells
    for (Id c = 0; c < nobj; ++c)
        for (Id c2 = 0; c2 < nobj; ++c2) {
            const Obj& o = D.objs[c];
            const Obj& o2 = D.objs[c2];
            Id x = F.obj(o.a), x2 = F.obj(o2.a);
            for (Id f : AH.hom(o.a, o2.a)) {
                Id Ff = F.h(f);
                for (Id g : B.horizontal.hom(o.b, o2.b)) {
                    HCell h{c, c2, f, g, -1, -1, -1, -1};
                    for (Id lh : B.squares_in({B.hpath({Ff, o2.hadj.ell}), B.hpath({o.hadj.ell, g}), B.v1(x),
                                               B.v1(o2.b)})) {
                        if (!B.vinverse(lh)) continue;
                        h.lamH = lh;
                        for (Id rh : B.squares_in({B.hpath({o.hadj.r, Ff}), B.hpath({g, o2.hadj.r}), B.v1(o.b),
                                                   B.v1(x2)})) {
                            if (!B.vinverse(rh)) continue;
                            h.rhoH = rh;
                            if (!holds(B, eq_1ha(s, h))) continue;
                            for (Id lv : B.squares_in({Ff, g, o.vadj.ell, o2.vadj.ell})) {
                                h.lamV = lv;
                                if (!holds(B, eq_1hc(s, h))) continue;
                                for (Id rv : B.squares_in({g, Ff, o.vadj.r, o2.vadj.r})) {
                                    h.rhoV = rv;
                                    if (!holds(B, eq_1hb(s, h))) continue;
                                    D.hcell_index[key_of(h)] = to_id(D.hcells.size());
                                    D.hcells.push_back(h);
                                }
                            }
                        }
                    }
                }
            }
        }

    // vertical cells
    for (Id c = 0; c < nobj; ++c)
        for (Id c2 = 0; c2 < nobj; ++c2) {
            const Obj& o = D.objs[c];
            const Obj& o2 = D.objs[c2];
            Id x = F.obj(o.a), x2 = F.obj(o2.a);
            for (Id sv : AV.hom(o.a, o2.a)) {
                Id Fs = F.v(sv);
                for (Id t : B.vertical.hom(o.b, o2.b)) {
                    VCell v{c, c2, sv, t, -1, -1, -1, -1};
                    for (Id gv : B.squares_in({B.h1(x), B.h1(o2.b), B.vpath({o.vadj.ell, t}),
                                               B.vpath({Fs, o2.vadj.ell})})) {
                        if (!B.hinverse(gv)) continue;
                        v.gamV = gv;
                        for (Id dv : B.squares_in({B.h1(o.b), B.h1(x2), B.vpath({t, o2.vadj.r}),
                                                   B.vpath({o.vadj.r, Fs})})) {
                            if (!B.hinverse(dv)) continue;
                            v.delV = dv;
                            if (!holds(B, eq_1va(s, v))) continue;
                            for (Id gh : B.squares_in({o.hadj.ell, o2.hadj.ell, Fs, t})) {
                                v.gamH = gh;
                                if (!holds(B, eq_1vc(s, v))) continue;
                                for (Id dh : B.squares_in({o.hadj.r, o2.hadj.r, t, Fs})) {
                                    v.delH = dh;
                                    if (!holds(B, eq_1vb(s, v))) continue;
                                    D.vcell_index[key_of(v)] = to_id(D.vcells.size());
                                    D.vcells.push_back(v);
                                }
                            }
                        }
                    }
                }
            }
        }

    auto C = std::make_shared<FinDoubleCategory>();
    for (const auto& n : obj_names) {
        C->horizontal.objects.add(n);
        C->vertical.objects.add(n);
    }
    for (const auto& h : D.hcells) {
        C->horizontal.morphisms.add(tuple_name({obj_names[h.src], obj_names[h.tgt], A.hname(h.f), B.hname(h.g),
                                                B.sname(h.lamH), B.sname(h.rhoH), B.sname(h.lamV),
                                                B.sname(h.rhoV)}));
        C->horizontal.src.push_back(h.src);
        C->horizontal.tgt.push_back(h.tgt);
    }
    for (const auto& v : D.vcells) {
        C->vertical.morphisms.add(tuple_name({obj_names[v.src], obj_names[v.tgt], A.vname(v.s), B.vname(v.t),
                                              B.sname(v.gamV), B.sname(v.delV), B.sname(v.gamH),
                                              B.sname(v.delH)}));
        C->vertical.src.push_back(v.src);
        C->vertical.tgt.push_back(v.tgt);
    }
    auto find_h = [&](const HCell& h) {
        auto it = D.hcell_index.find(key_of(h));
        if (it == D.hcell_index.end())
            throw StructuralError("apex horizontal composite fails the coherence equations");
        return it->second;
    };
    auto find_v = [&](const VCell& v) {
        auto it = D.vcell_index.find(key_of(v));
        if (it == D.vcell_index.end())
            throw StructuralError("apex vertical composite fails the coherence equations");
        return it->second;
    };
    // identities, with the unit coherence squares of F inserted
    for (Id c = 0; c < nobj; ++c) {
        const Obj& o = D.objs[c];
        Id pu = F.hunit_cells[o.a], pui = B.vinverse_at(pu);
        HCell h{c, c, A.h1(o.a), B.h1(o.b), B.hcomp(pui, B.hid(o.hadj.ell)), B.hcomp(B.hid(o.hadj.r), pui),
                B.vcomp(pui, B.vid(o.vadj.ell)), B.vcomp(B.vid(o.vadj.r), pu)};
        C->horizontal.identities.push_back(find_h(h));
        Id qu = F.vunit_cells[o.a], qui = B.hinverse_at(qu);
        VCell v{c, c, A.v1(o.a), B.v1(o.b), B.vcomp(qui, B.vid(o.vadj.ell)), B.vcomp(B.vid(o.vadj.r), qui),
                B.hcomp(qu, B.hid(o.hadj.ell)), B.hcomp(B.hid(o.hadj.r), qui)};
        C->vertical.identities.push_back(find_v(v));
    }
    std::vector<std::vector<Id>> hout(nobj), vout(nobj);
    for (Id i = 0; i < to_id(D.hcells.size()); ++i) hout[D.hcells[i].src].push_back(i);
    for (Id i = 0; i < to_id(D.vcells.size()); ++i) vout[D.vcells[i].src].push_back(i);
    // composites, coherence squares inserted on the F side first
    for (Id i = 0; i < to_id(D.hcells.size()); ++i)
        for (Id j : hout[D.hcells[i].tgt]) {
            const HCell& h = D.hcells[i];
            const HCell& k = D.hcells[j];
            const Obj& o = D.objs[h.src];
            const Obj& o3 = D.objs[k.tgt];
            Id phi = F.phi(k.f, h.f), phii = B.vinverse_at(phi);
            Id Ff = F.h(h.f), Ff2 = F.h(k.f);
            HCell r{h.src, k.tgt, AH.compose_at(k.f, h.f), B.horizontal.compose_at(k.g, h.g),
                    B.vseq({B.hcomp(phii, B.hid(o3.hadj.ell)), B.hcomp(B.hid(Ff), k.lamH),
                            B.hcomp(h.lamH, B.hid(k.g))}),
                    B.vseq({B.hcomp(B.hid(o.hadj.r), phii), B.hcomp(h.rhoH, B.hid(Ff2)),
                            B.hcomp(B.hid(h.g), k.rhoH)}),
                    B.vcomp(phii, B.hcomp(h.lamV, k.lamV)), B.vcomp(B.hcomp(h.rhoV, k.rhoV), phi)};
            C->horizontal.composition.set(j, i, find_h(r));
        }
    for (Id i = 0; i < to_id(D.vcells.size()); ++i)
        for (Id j : vout[D.vcells[i].tgt]) {
            const VCell& v = D.vcells[i];
            const VCell& w = D.vcells[j];
            const Obj& o = D.objs[v.src];
            const Obj& o3 = D.objs[w.tgt];
            Id psi = F.psi(w.s, v.s), psii = B.hinverse_at(psi);
            Id Fs = F.v(v.s), Fs2 = F.v(w.s);
            VCell r{v.src, w.tgt, AV.compose_at(w.s, v.s), B.vertical.compose_at(w.t, v.t),
                    B.hseq({B.vcomp(v.gamV, B.vid(w.t)), B.vcomp(B.vid(Fs), w.gamV),
                            B.vcomp(psii, B.vid(o3.vadj.ell))}),
                    B.hseq({B.vcomp(B.vid(v.t), w.delV), B.vcomp(v.delV, B.vid(Fs2)),
                            B.vcomp(B.vid(o.vadj.r), psii)}),
                    B.hcomp(psi, B.vcomp(v.gamH, w.gamH)), B.hcomp(B.vcomp(v.delH, w.delH), psii)};
            C->vertical.composition.set(j, i, find_v(r));
        }
    C->horizontal.finalize();
    C->vertical.finalize();

    // squares
    for (Id top = 0; top < to_id(D.hcells.size()); ++top) {
        const HCell& h = D.hcells[top];
        for (Id left : vout[h.src])
            for (Id right : vout[h.tgt]) {
                const VCell& v = D.vcells[left];
                const VCell& v2 = D.vcells[right];
                for (Id bottom : C->horizontal.hom(v.tgt, v2.tgt)) {
                    const HCell& hb = D.hcells[bottom];
                    for (Id al : A.squares_in({h.f, hb.f, v.s, v2.s}))
                        for (Id be : B.squares_in({h.g, hb.g, v.t, v2.t})) {
                            auto es = square_equations(s, top, bottom, left, right, al, be);
                            if (evaluate(B, es[0].lhs) != evaluate(B, es[0].rhs)) continue;
                            Id q = C->squares.add(tuple_name({C->hname(top), C->hname(bottom), C->vname(left),
                                                              C->vname(right), A.sname(al), B.sname(be)}));
                            C->boundary.push_back({top, bottom, left, right});
                            D.square_index[{top, bottom, left, right, al, be}] = q;
                            D.squares.push_back({al, be});
                        }
                }
            }
    }
    auto find_q = [&](std::vector<Id> k) {
        auto it = D.square_index.find(k);
        if (it == D.square_index.end()) throw StructuralError("apex square composite fails the coherence equation");
        return it->second;
    };
    std::vector<std::vector<Id>> by_left(D.vcells.size()), by_top(D.hcells.size());
    for (Id q = 0; q < to_id(D.squares.size()); ++q) {
        by_left[C->boundary[q].left].push_back(q);
        by_top[C->boundary[q].top].push_back(q);
    }
    for (Id l = 0; l < to_id(D.squares.size()); ++l) {
        const auto bl = C->boundary[l];
        const auto sl = D.squares[l];
        for (Id r : by_left[bl.right]) {
            const auto& br = C->boundary[r];
            const auto& sr = D.squares[r];
            C->hcomp_table.set(l, r,
                               find_q({C->horizontal.compose_at(br.top, bl.top),
                                       C->horizontal.compose_at(br.bottom, bl.bottom), bl.left, br.right,
                                       A.hcomp(sl.alpha, sr.alpha), B.hcomp(sl.beta, sr.beta)}));
        }
        for (Id b : by_top[bl.bottom]) {
            const auto& bb = C->boundary[b];
            const auto& sb = D.squares[b];
            C->vcomp_table.set(l, b,
                               find_q({bl.top, bb.bottom, C->vertical.compose_at(bb.left, bl.left),
                                       C->vertical.compose_at(bb.right, bl.right), A.vcomp(sl.alpha, sb.alpha),
                                       B.vcomp(sl.beta, sb.beta)}));
        }
    }
    for (Id i = 0; i < to_id(D.hcells.size()); ++i) {
        const auto& h = D.hcells[i];
        C->hid_table.push_back(find_q({i, i, C->vertical.identity(h.src), C->vertical.identity(h.tgt), A.hid(h.f),
                                       B.hid(h.g)}));
    }
    for (Id i = 0; i < to_id(D.vcells.size()); ++i) {
        const auto& v = D.vcells[i];
        C->vid_table.push_back(find_q({C->horizontal.identity(v.src), C->horizontal.identity(v.tgt), i, i,
                                       A.vid(v.s), B.vid(v.t)}));
    }
    C->finalize();
    s.apex = C;

    std::vector<Id> p0, ph, pv, ps, q0, qh, qv, qs;
    for (const auto& o : D.objs) {
        p0.push_back(o.a);
        q0.push_back(o.b);
    }
    for (const auto& h : D.hcells) {
        ph.push_back(h.f);
        qh.push_back(h.g);
    }
    for (const auto& v : D.vcells) {
        pv.push_back(v.s);
        qv.push_back(v.t);
    }
    for (const auto& q : D.squares) {
        ps.push_back(q.alpha);
        qs.push_back(q.beta);
    }
    s.left = make_strict_double_functor(C, F.source, p0, ph, pv, ps);
    s.right = make_strict_double_functor(C, F.target, q0, qh, qv, qs);
    s.left_report = check_double_functor_properties(s.left, opt);
    s.right_report = check_double_functor_properties(s.right, opt);
    return s;
}

DoubleSpan build_span_double(const DoublePseudofunctor& F) {
    auto v = validate_double_pseudofunctor(F);
    if (!v.report.ok()) throw PreconditionError("not a valid double pseudofunctor", v.report.describe());
    auto props = check_double_functor_properties(F);
    if (!props.gregarious_equivalence())
        throw PreconditionError("not a gregarious double equivalence", props.summary());
    auto s = build_apex_double(F);
    if (auto r = validate_double_category(*s.apex); !r)
        throw StructuralError("apex fails validation: " + r.describe());
    return s;
}

LeftCancellation solve_left_cancellation(const DoubleSpan& s, Id vcell, Id theta, Id X, Id Z) {
    const auto& B = target(s);
    const auto& v = s.data.vcells.at(static_cast<std::size_t>(vcell));
    const Obj& o = s.data.objs[static_cast<std::size_t>(v.src)];
    const Obj& o2 = s.data.objs[static_cast<std::size_t>(v.tgt)];
    const auto& fr = B.frame(theta);
    auto top = B.horizontal.compose(X, o.hadj.ell);
    auto bottom = B.horizontal.compose(Z, o2.hadj.ell);
    if (!top || !bottom || fr.top != *top || fr.bottom != *bottom || fr.left != s.F.v(v.s))
        throw StructuralError("theta does not have the boundary of a cancellation problem");
    LeftCancellation out;
    Id ei = B.vinverse_at(o.hadj.epsilon);
    out.xi = B.vseq({B.hcomp(ei, B.hid(X)), B.hcomp(v.delH, theta), B.hcomp(o2.hadj.epsilon, B.hid(Z))});
    out.solves = B.hcomp(v.gamH, out.xi) == theta;
    auto sol = solve_hole(B.squares_in({X, Z, v.t, fr.right}), [&](Id x) { return B.hcomp(v.gamH, x) == theta; });
    out.solutions = sol.count();
    return out;
}

Id cancellation_target(const DoubleSpan& s, Id square) {
    const auto& B = target(s);
    const auto& b = s.apex->frame(square);
    const auto& h = s.data.hcells[static_cast<std::size_t>(b.top)];
    const auto& hb = s.data.hcells[static_cast<std::size_t>(b.bottom)];
    const auto& v2 = s.data.vcells[static_cast<std::size_t>(b.right)];
    Id Fa = s.F.sq(s.data.squares[static_cast<std::size_t>(square)].alpha);
    return B.vseq({B.vinverse_at(h.lamH), B.hcomp(Fa, v2.gamH), hb.lamH});
}

Id lift_hcell_along_left(const DoubleSpan& s, Id c, Id c2, Id f) {
    const auto& B = target(s);
    const Obj& o = s.data.objs[static_cast<std::size_t>(c)];
    const Obj& o2 = s.data.objs[static_cast<std::size_t>(c2)];
    Id Ff = s.F.h(f);
    Id g = B.hpath({o.hadj.r, Ff, o2.hadj.ell});
    HCell h{c, c2, f, g, -1, -1, -1, -1};
    h.lamH = B.hcomp(o.hadj.eta, B.hid(B.hpath({Ff, o2.hadj.ell})));
    h.rhoH = B.hcomp(B.hid(B.hpath({o.hadj.r, Ff})), o2.hadj.eta);
    h.lamV = B.vcomp(B.hseq({o.hadj.eta, B.hid(Ff), o2.binding.sigma}), B.hcomp(o.binding.tau, B.hid(g)));
    h.rhoV = B.vcomp(B.hseq({o.mates.sigma_bar, B.hid(B.hpath({Ff, o2.hadj.ell})), o2.mates.tau_bar}),
                     B.hcomp(B.hid(Ff), B.vinverse_at(o2.hadj.eta)));
    auto it = s.data.hcell_index.find(key_of(h));
    return it == s.data.hcell_index.end() ? -1 : it->second;
}

Id lift_hcell_along_right(const DoubleSpan& s, Id c, Id c2, Id g) {
    const auto& A = *s.F.source;
    const auto& B = target(s);
    const Obj& o = s.data.objs[static_cast<std::size_t>(c)];
    const Obj& o2 = s.data.objs[static_cast<std::size_t>(c2)];
    Id x = s.F.obj(o.a), x2 = s.F.obj(o2.a);
    Id target_cell = B.hpath({o.hadj.ell, g, o2.hadj.r});
    for (Id f : A.horizontal.hom(o.a, o2.a)) {
        Id Ff = s.F.h(f);
        for (Id chi : B.squares_in({Ff, target_cell, B.v1(x), B.v1(x2)})) {
            if (!B.vinverse(chi)) continue;
            HCell h{c, c2, f, g, -1, -1, -1, -1};
            h.lamH = B.vcomp(B.hcomp(chi, B.hid(o2.hadj.ell)),
                             B.hcomp(B.hid(B.hpath({o.hadj.ell, g})), o2.hadj.epsilon));
            h.rhoH = B.vcomp(B.hcomp(B.hid(o.hadj.r), chi),
                             B.hcomp(o.hadj.epsilon, B.hid(B.hpath({g, o2.hadj.r}))));
            for (Id lv : B.squares_in({Ff, g, o.vadj.ell, o2.vadj.ell})) {
                h.lamV = lv;
                if (!holds(B, eq_1hc(s, h))) continue;
                for (Id rv : B.squares_in({g, Ff, o.vadj.r, o2.vadj.r})) {
                    h.rhoV = rv;
                    if (!holds(B, eq_1hb(s, h))) continue;
                    auto it = s.data.hcell_index.find(key_of(h));
                    if (it != s.data.hcell_index.end()) return it->second;
                }
            }
            return -1;
        }
    }
    return -1;
}

}  // namespace fincat
