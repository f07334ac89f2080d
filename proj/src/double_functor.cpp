#include "fincat/double_functor.hpp"

#include <set>
#include <sstream>

namespace fincat {

namespace {

std::vector<std::vector<Id>> outgoing(const FinCategory& c) {
    std::vector<std::vector<Id>> out(c.object_count());
    for (Id f = 0; f < to_id(c.morphism_count()); ++f) out[static_cast<std::size_t>(c.src[f])].push_back(f);
    return out;
}

}  // namespace

Id DoublePseudofunctor::phi(Id g, Id f) const {
    auto x = hcomp_cells.get(g, f);
    if (!x) throw StructuralError("horizontal coherence square missing");
    return *x;
}

Id DoublePseudofunctor::psi(Id t, Id s) const {
    auto x = vcomp_cells.get(t, s);
    if (!x) throw StructuralError("vertical coherence square missing");
    return *x;
}

DoublePseudofunctor make_strict_double_functor(const DblPtr& source, const DblPtr& target, std::vector<Id> map0,
                                               std::vector<Id> maph, std::vector<Id> mapv, std::vector<Id> mapsq) {
    DoublePseudofunctor F;
    F.source = source;
    F.target = target;
    F.map0 = std::move(map0);
    F.maph = std::move(maph);
    F.mapv = std::move(mapv);
    F.mapsq = std::move(mapsq);
    const auto& A = *source;
    const auto& B = *target;
    auto hout = outgoing(A.horizontal);
    auto vout = outgoing(A.vertical);
    for (Id f = 0; f < to_id(A.hcell_count()); ++f)
        for (Id g : hout[static_cast<std::size_t>(A.horizontal.tgt[f])]) {
            auto c = B.horizontal.compose(F.h(g), F.h(f));
            if (!c) throw StructuralError("strict double functor: image cells are not composable");
            F.hcomp_cells.set(g, f, B.hid(*c));
        }
    for (Id s = 0; s < to_id(A.vcell_count()); ++s)
        for (Id t : vout[static_cast<std::size_t>(A.vertical.tgt[s])]) {
            auto c = B.vertical.compose(F.v(t), F.v(s));
            if (!c) throw StructuralError("strict double functor: image cells are not composable");
            F.vcomp_cells.set(t, s, B.vid(*c));
        }
    for (Id a = 0; a < to_id(A.object_count()); ++a) {
        F.hunit_cells.push_back(B.hid(B.h1(F.obj(a))));
        F.vunit_cells.push_back(B.vid(B.v1(F.obj(a))));
    }
    F.strict = true;
    return F;
}

DoublePseudofunctor identity_double_functor(const DblPtr& d) {
    std::vector<Id> m0, mh, mv, ms;
    for (Id i = 0; i < to_id(d->object_count()); ++i) m0.push_back(i);
    for (Id i = 0; i < to_id(d->hcell_count()); ++i) mh.push_back(i);
    for (Id i = 0; i < to_id(d->vcell_count()); ++i) mv.push_back(i);
    for (Id i = 0; i < to_id(d->square_count()); ++i) ms.push_back(i);
    return make_strict_double_functor(d, d, m0, mh, mv, ms);
}

DoublePseudofunctor compose_double_functors(const DoublePseudofunctor& G, const DoublePseudofunctor& F) {
    if (F.target != G.source) throw StructuralError("double functors are not composable");
    const auto& A = *F.source;
    const auto& C = *G.target;
    DoublePseudofunctor H;
    H.source = F.source;
    H.target = G.target;
    for (Id x : F.map0) H.map0.push_back(G.obj(x));
    for (Id x : F.maph) H.maph.push_back(G.h(x));
    for (Id x : F.mapv) H.mapv.push_back(G.v(x));
    for (Id x : F.mapsq) H.mapsq.push_back(G.sq(x));
    auto side_fix = [&](Id x, Id a, Id b) {  // G applied to a globular square of F's target
        Id pa = G.vunit_cells[static_cast<std::size_t>(a)];
        Id pb = G.vunit_cells[static_cast<std::size_t>(b)];
        return C.hseq({C.hinverse_at(pa), G.sq(x), pb});
    };
    auto top_fix = [&](Id x, Id a, Id b) {
        Id pa = G.hunit_cells[static_cast<std::size_t>(a)];
        Id pb = G.hunit_cells[static_cast<std::size_t>(b)];
        return C.vseq({pa, G.sq(x), C.vinverse_at(pb)});
    };
    F.hcomp_cells.for_each([&](Id g, Id f, Id phi) {
        Id a = F.obj(A.horizontal.src[f]), c = F.obj(A.horizontal.tgt[g]);
        H.hcomp_cells.set(g, f, C.vcomp(G.phi(F.h(g), F.h(f)), side_fix(phi, a, c)));
    });
    F.vcomp_cells.for_each([&](Id t, Id s, Id psi) {
        Id a = F.obj(A.vertical.src[s]), c = F.obj(A.vertical.tgt[t]);
        H.vcomp_cells.set(t, s, C.hcomp(top_fix(psi, a, c), G.psi(F.v(t), F.v(s))));
    });
    for (Id a = 0; a < to_id(A.object_count()); ++a) {
        Id fa = F.obj(a);
        H.hunit_cells.push_back(
            C.vcomp(G.hunit_cells[static_cast<std::size_t>(fa)], side_fix(F.hunit_cells[a], fa, fa)));
        H.vunit_cells.push_back(
            C.hcomp(top_fix(F.vunit_cells[a], fa, fa), G.vunit_cells[static_cast<std::size_t>(fa)]));
    }
    H.strict = F.strict && G.strict;
    return H;
}

DoubleFunctorValidation validate_double_pseudofunctor(const DoublePseudofunctor& F) {
    DoubleFunctorValidation out;
    auto& rep = out.report;
    if (!F.source || !F.target) {
        rep = ValidationReport::structural("double-functor", "missing source or target");
        return out;
    }
    const auto& A = *F.source;
    const auto& B = *F.target;
    if (F.map0.size() != A.object_count() || F.maph.size() != A.hcell_count() ||
        F.mapv.size() != A.vcell_count() || F.mapsq.size() != A.square_count() ||
        F.hunit_cells.size() != A.object_count() || F.vunit_cells.size() != A.object_count()) {
        rep = ValidationReport::structural("double-functor", "maps are not total");
        return out;
    }
    auto bad_range = [](const std::vector<Id>& m, std::size_t n) {
        for (Id x : m)
            if (x < 0 || static_cast<std::size_t>(x) >= n) return true;
        return false;
    };
    if (bad_range(F.map0, B.object_count()) || bad_range(F.maph, B.hcell_count()) ||
        bad_range(F.mapv, B.vcell_count()) || bad_range(F.mapsq, B.square_count()) ||
        bad_range(F.hunit_cells, B.square_count()) || bad_range(F.vunit_cells, B.square_count())) {
        rep = ValidationReport::structural("dangling-identifier", "image outside the target");
        return out;
    }
    const auto& AH = A.horizontal;
    const auto& AV = A.vertical;
    const auto& BH = B.horizontal;
    const auto& BV = B.vertical;
    auto hout = outgoing(AH);
    auto vout = outgoing(AV);
    try {
        for (Id f = 0; f < to_id(A.hcell_count()); ++f)
            if (BH.src[F.h(f)] != F.obj(AH.src[f]) || BH.tgt[F.h(f)] != F.obj(AH.tgt[f])) {
                rep = ValidationReport::fail("hcell-boundary", A.hname(f));
                return out;
            }
        for (Id s = 0; s < to_id(A.vcell_count()); ++s)
            if (BV.src[F.v(s)] != F.obj(AV.src[s]) || BV.tgt[F.v(s)] != F.obj(AV.tgt[s])) {
                rep = ValidationReport::fail("vcell-boundary", A.vname(s));
                return out;
            }
        for (Id q = 0; q < to_id(A.square_count()); ++q) {
            const auto& b = A.frame(q);
            if (!(B.frame(F.sq(q)) == SquareBoundary{F.h(b.top), F.h(b.bottom), F.v(b.left), F.v(b.right)})) {
                rep = ValidationReport::fail("square-boundary", A.sname(q));
                return out;
            }
        }
        for (Id f = 0; f < to_id(A.hcell_count()); ++f)
            for (Id g : hout[static_cast<std::size_t>(AH.tgt[f])])
                if (!F.hcomp_cells.contains(g, f)) {
                    rep = ValidationReport::structural("double-functor", "horizontal coherence table is not total");
                    return out;
                }
        for (Id s = 0; s < to_id(A.vcell_count()); ++s)
            for (Id t : vout[static_cast<std::size_t>(AV.tgt[s])])
                if (!F.vcomp_cells.contains(t, s)) {
                    rep = ValidationReport::structural("double-functor", "vertical coherence table is not total");
                    return out;
                }
        auto tup = [&](Id g, Id f, bool hz) {
            return hz ? tuple_name({A.hname(g), A.hname(f)}) : tuple_name({A.vname(g), A.vname(f)});
        };
        // boundaries and invertibility
        for (Id f = 0; f < to_id(A.hcell_count()); ++f)
            for (Id g : hout[static_cast<std::size_t>(AH.tgt[f])]) {
                Id x = F.phi(g, f);
                SquareBoundary want{BH.compose_at(F.h(g), F.h(f)), F.h(AH.compose_at(g, f)),
                                    B.v1(F.obj(AH.src[f])), B.v1(F.obj(AH.tgt[g]))};
                if (!(B.frame(x) == want)) {
                    rep = ValidationReport::fail("coherence-boundary", tup(g, f, true));
                    return out;
                }
                if (!B.vinverse(x)) {
                    rep = ValidationReport::fail("coherence-invertible", tup(g, f, true));
                    return out;
                }
            }
        for (Id s = 0; s < to_id(A.vcell_count()); ++s)
            for (Id t : vout[static_cast<std::size_t>(AV.tgt[s])]) {
                Id x = F.psi(t, s);
                SquareBoundary want{B.h1(F.obj(AV.src[s])), B.h1(F.obj(AV.tgt[t])), F.v(AV.compose_at(t, s)),
                                    BV.compose_at(F.v(t), F.v(s))};
                if (!(B.frame(x) == want)) {
                    rep = ValidationReport::fail("coherence-boundary", tup(t, s, false));
                    return out;
                }
                if (!B.hinverse(x)) {
                    rep = ValidationReport::fail("coherence-invertible", tup(t, s, false));
                    return out;
                }
            }
        for (Id a = 0; a < to_id(A.object_count()); ++a) {
            Id fa = F.obj(a);
            Id x = F.hunit_cells[a], y = F.vunit_cells[a];
            if (!(B.frame(x) == SquareBoundary{B.h1(fa), F.h(A.h1(a)), B.v1(fa), B.v1(fa)}) ||
                !(B.frame(y) == SquareBoundary{B.h1(fa), B.h1(fa), F.v(A.v1(a)), B.v1(fa)})) {
                rep = ValidationReport::fail("coherence-boundary", "unit at " + A.object_name(a));
                return out;
            }
            if (!B.vinverse(x) || !B.hinverse(y)) {
                rep = ValidationReport::fail("coherence-invertible", "unit at " + A.object_name(a));
                return out;
            }
        }
        // associativity and units of the coherence squares
        for (Id f = 0; f < to_id(A.hcell_count()); ++f)
            for (Id g : hout[static_cast<std::size_t>(AH.tgt[f])])
                for (Id h : hout[static_cast<std::size_t>(AH.tgt[g])]) {
                    Id gf = AH.compose_at(g, f), hg = AH.compose_at(h, g);
                    Id l = B.vcomp(B.hcomp(F.phi(g, f), B.hid(F.h(h))), F.phi(h, gf));
                    Id r = B.vcomp(B.hcomp(B.hid(F.h(f)), F.phi(h, g)), F.phi(hg, f));
                    if (l != r) {
                        rep = ValidationReport::fail("coherence-associativity",
                                                     tuple_name({A.hname(h), A.hname(g), A.hname(f)}));
                        return out;
                    }
                }
        for (Id s = 0; s < to_id(A.vcell_count()); ++s)
            for (Id t : vout[static_cast<std::size_t>(AV.tgt[s])])
                for (Id u : vout[static_cast<std::size_t>(AV.tgt[t])]) {
                    Id ts = AV.compose_at(t, s), ut = AV.compose_at(u, t);
                    Id l = B.hcomp(F.psi(u, ts), B.vcomp(F.psi(t, s), B.vid(F.v(u))));
                    Id r = B.hcomp(F.psi(ut, s), B.vcomp(B.vid(F.v(s)), F.psi(u, t)));
                    if (l != r) {
                        rep = ValidationReport::fail("coherence-associativity",
                                                     tuple_name({A.vname(u), A.vname(t), A.vname(s)}));
                        return out;
                    }
                }
        for (Id f = 0; f < to_id(A.hcell_count()); ++f) {
            Id a = AH.src[f], b = AH.tgt[f];
            Id ff = B.hid(F.h(f));
            if (B.vcomp(B.hcomp(F.hunit_cells[a], ff), F.phi(f, A.h1(a))) != ff ||
                B.vcomp(B.hcomp(ff, F.hunit_cells[b]), F.phi(A.h1(b), f)) != ff) {
                rep = ValidationReport::fail("coherence-unit", A.hname(f));
                return out;
            }
        }
        for (Id s = 0; s < to_id(A.vcell_count()); ++s) {
            Id a = AV.src[s], b = AV.tgt[s];
            Id fs = B.vid(F.v(s));
            if (B.hcomp(F.psi(s, A.v1(a)), B.vcomp(F.vunit_cells[a], fs)) != fs ||
                B.hcomp(F.psi(A.v1(b), s), B.vcomp(fs, F.vunit_cells[b])) != fs) {
                rep = ValidationReport::fail("coherence-unit", A.vname(s));
                return out;
            }
        }
        // naturality in squares
        for (Id x = 0; x < to_id(A.square_count()); ++x) {
            const auto& bx = A.frame(x);
            for (Id y : A.squares_with_left(bx.right)) {
                const auto& by = A.frame(y);
                Id l = B.vcomp(B.hcomp(F.sq(x), F.sq(y)), F.phi(by.bottom, bx.bottom));
                Id r = B.vcomp(F.phi(by.top, bx.top), F.sq(A.hcomp(x, y)));
                if (l != r) {
                    rep = ValidationReport::fail("coherence-naturality", A.sname(x) + " | " + A.sname(y));
                    return out;
                }
            }
            for (Id y : A.squares_with_top(bx.bottom)) {
                const auto& by = A.frame(y);
                Id l = B.hcomp(F.psi(by.left, bx.left), B.vcomp(F.sq(x), F.sq(y)));
                Id r = B.hcomp(F.sq(A.vcomp(x, y)), F.psi(by.right, bx.right));
                if (l != r) {
                    rep = ValidationReport::fail("coherence-naturality", A.sname(x) + " / " + A.sname(y));
                    return out;
                }
            }
        }
        for (Id s = 0; s < to_id(A.vcell_count()); ++s) {
            Id a = AV.src[s], b = AV.tgt[s];
            if (B.vcomp(F.hunit_cells[a], F.sq(A.vid(s))) != B.vcomp(B.vid(F.v(s)), F.hunit_cells[b])) {
                rep = ValidationReport::fail("unit-naturality", A.vname(s));
                return out;
            }
        }
        for (Id f = 0; f < to_id(A.hcell_count()); ++f) {
            Id a = AH.src[f], b = AH.tgt[f];
            if (B.hcomp(F.sq(A.hid(f)), F.vunit_cells[b]) != B.hcomp(F.vunit_cells[a], B.hid(F.h(f)))) {
                rep = ValidationReport::fail("unit-naturality", A.hname(f));
                return out;
            }
        }
        bool strict = true;
        F.hcomp_cells.for_each([&](Id g, Id f, Id x) {
            if (x != B.hid(F.h(AH.compose_at(g, f)))) strict = false;
        });
        F.vcomp_cells.for_each([&](Id t, Id s, Id x) {
            if (x != B.vid(F.v(AV.compose_at(t, s)))) strict = false;
        });
        for (Id a = 0; a < to_id(A.object_count()); ++a)
            if (F.hunit_cells[a] != B.hid(F.h(A.h1(a))) || F.vunit_cells[a] != B.vid(F.v(A.v1(a)))) strict = false;
        out.strict = strict;
        if (F.strict && !strict) {
            rep = ValidationReport::fail("strict-flag", "a coherence square is not an identity");
            return out;
        }
    } catch (const StructuralError& e) {
        rep = ValidationReport::structural("double-functor", e.what());
        return out;
    }
    rep = ValidationReport::pass();
    return out;
}

Pseudofunctor2 horizontal_restriction(const DoublePseudofunctor& F) {
    const auto& A = *F.source;
    const auto& B = *F.target;
    for (Id a = 0; a < to_id(A.object_count()); ++a)
        if (F.v(A.v1(a)) != B.v1(F.obj(a)))
            throw StructuralError("double functor does not preserve vertical identities");
    const auto& HA = A.H();
    const auto& HB = B.H();
    Pseudofunctor2 P;
    P.source = HA.k;
    P.target = HB.k;
    P.map0 = F.map0;
    P.map1 = F.maph;
    for (Id q : HA.to_square) P.map2.push_back(HB.cell(F.sq(q)));
    F.hcomp_cells.for_each([&](Id g, Id f, Id x) { P.comp_cells.set(g, f, HB.cell(x)); });
    for (Id x : F.hunit_cells) P.unit_cells.push_back(HB.cell(x));
    P.strict = F.strict;
    return P;
}

std::string DoubleFunctorReport::summary() const {
    std::ostringstream os;
    os << "surjective on objects: " << surjective_on_objects << ", horizontally full: " << horizontally_full
       << ", vertically full: " << vertically_full << ", full on squares: " << full_on_squares
       << ", faithful on squares: " << faithful_on_squares << ", gregarious on objects: " << gregarious_surjective
       << ", horizontally essentially full: " << horizontally_essentially_full
       << ", vertically essentially full: " << vertically_essentially_full;
    if (budget_exhausted) os << " (a search hit its budget)";
    for (const auto& [k, v] : counterexample) os << "; " << k << ": " << v;
    return os.str();
}

DoubleFunctorReport check_double_functor_properties(const DoublePseudofunctor& F, const PropertyOptions& opt) {
    const auto& A = *F.source;
    const auto& B = *F.target;
    const auto& AH = A.horizontal;
    const auto& AV = A.vertical;
    const auto& BH = B.horizontal;
    const auto& BV = B.vertical;
    const auto na = to_id(A.object_count()), nb = to_id(B.object_count());
    DoubleFunctorReport r;
    auto note = [&](const std::string& k, const std::string& v) {
        if (!r.counterexample.count(k)) r.counterexample[k] = v;
    };

    std::vector<bool> hit(B.object_count(), false);
    for (Id a = 0; a < na; ++a) hit[static_cast<std::size_t>(F.obj(a))] = true;
    r.surjective_on_objects = true;
    for (Id b = 0; b < nb; ++b)
        if (!hit[static_cast<std::size_t>(b)]) {
            r.surjective_on_objects = false;
            note("surjective on objects", B.object_name(b) + " has no preimage");
        }

    r.horizontally_full = r.vertically_full = true;
    for (Id a = 0; a < na; ++a)
        for (Id a2 = 0; a2 < na; ++a2) {
            for (Id g : BH.hom(F.obj(a), F.obj(a2))) {
                bool ok = false;
                for (Id f : AH.hom(a, a2)) ok = ok || F.h(f) == g;
                if (!ok) {
                    r.horizontally_full = false;
                    note("horizontally full", B.hname(g) + " between images of " +
                                                  tuple_name({A.object_name(a), A.object_name(a2)}));
                }
            }
            for (Id t : BV.hom(F.obj(a), F.obj(a2))) {
                bool ok = false;
                for (Id s : AV.hom(a, a2)) ok = ok || F.v(s) == t;
                if (!ok) {
                    r.vertically_full = false;
                    note("vertically full", B.vname(t) + " between images of " +
                                                tuple_name({A.object_name(a), A.object_name(a2)}));
                }
            }
        }

    r.full_on_squares = r.faithful_on_squares = true;
    auto vout = outgoing(AV);
    for (Id f = 0; f < to_id(A.hcell_count()); ++f)
        for (Id s : vout[static_cast<std::size_t>(AH.src[f])])
            for (Id s2 : vout[static_cast<std::size_t>(AH.tgt[f])])
                for (Id ft : AH.hom(AV.tgt[s], AV.tgt[s2])) {
                    SquareBoundary fr{f, ft, s, s2};
                    const auto& as = A.squares_in(fr);
                    const auto& bs = B.squares_in({F.h(f), F.h(ft), F.v(s), F.v(s2)});
                    std::set<Id> img;
                    for (Id x : as) img.insert(F.sq(x));
                    if (img.size() != as.size()) {
                        r.faithful_on_squares = false;
                        note("faithful on squares", "two squares with boundary " +
                                                        tuple_name({A.hname(f), A.hname(ft), A.vname(s), A.vname(s2)}) +
                                                        " share an image");
                    }
                    for (Id y : bs)
                        if (!img.count(y)) {
                            r.full_on_squares = false;
                            note("full on squares", B.sname(y) + " has no preimage");
                        }
                }

    if (!opt.gregarious) return r;

    r.gregarious_surjective = true;
    for (Id b = 0; b < nb; ++b) {
        bool found = false;
        for (Id a = 0; a < na && !found; ++a) {
            auto w = check_gregarious_object_equivalence(F.obj(a), b, B, opt.budget);
            if (w.status == SearchStatus::budget) r.budget_exhausted = true;
            if (w.found()) {
                r.object_witness.push_back({a, *w.witness});
                found = true;
            }
        }
        if (!found) {
            r.gregarious_surjective = false;
            note("gregarious on objects", B.object_name(b) + " is not gregariously equivalent to an image");
        }
    }
    r.horizontally_essentially_full = r.vertically_essentially_full = true;
    for (Id a = 0; a < na; ++a)
        for (Id a2 = 0; a2 < na; ++a2) {
            Id x = F.obj(a), y = F.obj(a2);
            for (Id g : BH.hom(x, y)) {
                std::optional<EssentialWitness> w;
                for (Id f : AH.hom(a, a2)) {
                    for (Id chi : B.squares_in({F.h(f), g, B.v1(x), B.v1(y)}))
                        if (B.vinverse(chi)) {
                            w = EssentialWitness{f, chi};
                            break;
                        }
                    if (w) break;
                }
                if (w)
                    r.hchi[{a, a2, g}] = *w;
                else {
                    r.horizontally_essentially_full = false;
                    note("horizontally essentially full", B.hname(g) + " is not isomorphic to an image");
                }
            }
            for (Id t : BV.hom(x, y)) {
                std::optional<EssentialWitness> w;
                for (Id s : AV.hom(a, a2)) {
                    for (Id chi : B.squares_in({B.h1(x), B.h1(y), t, F.v(s)}))
                        if (B.hinverse(chi)) {
                            w = EssentialWitness{s, chi};
                            break;
                        }
                    if (w) break;
                }
                if (w)
                    r.vchi[{a, a2, t}] = *w;
                else {
                    r.vertically_essentially_full = false;
                    note("vertically essentially full", B.vname(t) + " is not isomorphic to an image");
                }
            }
        }
    return r;
}

DoublePseudofunctor invert_surjective_equivalence(const DoublePseudofunctor& P) {
    auto v = validate_double_pseudofunctor(P);
    if (!v.report.ok()) throw PreconditionError("not a valid double functor", v.report.describe());
    if (!v.strict) throw PreconditionError("not a strict double functor", "a coherence square is not an identity");
    PropertyOptions opt;
    opt.gregarious = false;
    auto props = check_double_functor_properties(P, opt);
    if (!props.surjective_equivalence()) throw PreconditionError("not a surjective equivalence", props.summary());
    const auto& C = *P.source;
    const auto& A = *P.target;
    const auto& AH = A.horizontal;
    const auto& AV = A.vertical;
    DoublePseudofunctor J;
    J.source = P.target;
    J.target = P.source;
    J.map0.assign(A.object_count(), -1);
    for (Id c = to_id(C.object_count()); c-- > 0;) J.map0[static_cast<std::size_t>(P.obj(c))] = c;
    for (Id f = 0; f < to_id(A.hcell_count()); ++f) {
        Id pick = -1;
        for (Id h : C.horizontal.hom(J.obj(AH.src[f]), J.obj(AH.tgt[f])))
            if (P.h(h) == f) {
                pick = h;
                break;
            }
        J.maph.push_back(pick);
    }
    for (Id s = 0; s < to_id(A.vcell_count()); ++s) {
        Id pick = -1;
        for (Id h : C.vertical.hom(J.obj(AV.src[s]), J.obj(AV.tgt[s])))
            if (P.v(h) == s) {
                pick = h;
                break;
            }
        J.mapv.push_back(pick);
    }
    auto lift = [&](const SquareBoundary& fr, Id want) {
        Id pick = -1;
        for (Id q : C.squares_in(fr))
            if (P.sq(q) == want) {
                if (pick >= 0) throw StructuralError("square lift is not unique");
                pick = q;
            }
        if (pick < 0) throw StructuralError("square " + A.sname(want) + " has no lift");
        return pick;
    };
    for (Id q = 0; q < to_id(A.square_count()); ++q) {
        const auto& b = A.frame(q);
        J.mapsq.push_back(lift({J.h(b.top), J.h(b.bottom), J.v(b.left), J.v(b.right)}, q));
    }
    auto hout = outgoing(AH);
    auto vout = outgoing(AV);
    for (Id f = 0; f < to_id(A.hcell_count()); ++f)
        for (Id g : hout[static_cast<std::size_t>(AH.tgt[f])]) {
            Id gf = AH.compose_at(g, f);
            J.hcomp_cells.set(g, f,
                              lift({C.hpath({J.h(f), J.h(g)}), J.h(gf), C.v1(J.obj(AH.src[f])),
                                    C.v1(J.obj(AH.tgt[g]))},
                                   A.hid(gf)));
        }
    for (Id s = 0; s < to_id(A.vcell_count()); ++s)
        for (Id t : vout[static_cast<std::size_t>(AV.tgt[s])]) {
            Id ts = AV.compose_at(t, s);
            J.vcomp_cells.set(t, s,
                              lift({C.h1(J.obj(AV.src[s])), C.h1(J.obj(AV.tgt[t])), J.v(ts),
                                    C.vpath({J.v(s), J.v(t)})},
                                   A.vid(ts)));
        }
    for (Id a = 0; a < to_id(A.object_count()); ++a) {
        Id ja = J.obj(a);
        J.hunit_cells.push_back(lift({C.h1(ja), J.h(A.h1(a)), C.v1(ja), C.v1(ja)}, A.hid(A.h1(a))));
        J.vunit_cells.push_back(lift({C.h1(ja), C.h1(ja), J.v(A.v1(a)), C.v1(ja)}, A.vid(A.v1(a))));
    }
    J.strict = false;
    J.strict = validate_double_pseudofunctor(J).strict;
    return J;
}

bool is_identity_functor(const DoublePseudofunctor& F) {
    if (F.source != F.target) return false;
    const auto& D = *F.source;
    for (Id i = 0; i < to_id(F.map0.size()); ++i)
        if (F.map0[i] != i) return false;
    for (Id i = 0; i < to_id(F.maph.size()); ++i)
        if (F.maph[i] != i) return false;
    for (Id i = 0; i < to_id(F.mapv.size()); ++i)
        if (F.mapv[i] != i) return false;
    for (Id i = 0; i < to_id(F.mapsq.size()); ++i)
        if (F.mapsq[i] != i) return false;
    bool ok = true;
    F.hcomp_cells.for_each([&](Id g, Id f, Id x) { ok = ok && x == D.hid(D.horizontal.compose_at(g, f)); });
    F.vcomp_cells.for_each([&](Id t, Id s, Id x) { ok = ok && x == D.vid(D.vertical.compose_at(t, s)); });
    for (Id a = 0; a < to_id(D.object_count()); ++a)
        ok = ok && F.hunit_cells[a] == D.hid(D.h1(a)) && F.vunit_cells[a] == D.vid(D.v1(a));
    return ok;
}

}  // namespace fincat
