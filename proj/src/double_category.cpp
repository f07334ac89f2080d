#include "fincat/double_category.hpp"

#include <algorithm>

namespace fincat {

namespace {

std::array<Id, 4> key_of(const SquareBoundary& b) { return {b.top, b.bottom, b.left, b.right}; }

}  // namespace

Id FinDoubleCategory::hpath(std::initializer_list<Id> cells) const {
    auto it = cells.begin();
    Id acc = *it++;
    for (; it != cells.end(); ++it) acc = horizontal.compose_at(*it, acc);
    return acc;
}

Id FinDoubleCategory::vpath(std::initializer_list<Id> cells) const {
    auto it = cells.begin();
    Id acc = *it++;
    for (; it != cells.end(); ++it) acc = vertical.compose_at(*it, acc);
    return acc;
}

Id FinDoubleCategory::hcomp(Id l, Id r) const {
    auto x = hcomp_table.get(l, r);
    if (!x) {
        if (frame(l).right != frame(r).left)
            throw StructuralError("squares " + sname(l) + " | " + sname(r) + " do not share an edge");
        throw StructuralError("horizontal composite " + sname(l) + " | " + sname(r) + " is missing");
    }
    return *x;
}

Id FinDoubleCategory::vcomp(Id t, Id b) const {
    auto x = vcomp_table.get(t, b);
    if (!x) {
        if (frame(t).bottom != frame(b).top)
            throw StructuralError("squares " + sname(t) + " / " + sname(b) + " do not share an edge");
        throw StructuralError("vertical composite " + sname(t) + " / " + sname(b) + " is missing");
    }
    return *x;
}

Id FinDoubleCategory::hseq(std::initializer_list<Id> cells) const {
    auto it = cells.begin();
    Id acc = *it++;
    for (; it != cells.end(); ++it) acc = hcomp(acc, *it);
    return acc;
}

Id FinDoubleCategory::vseq(std::initializer_list<Id> cells) const {
    auto it = cells.begin();
    Id acc = *it++;
    for (; it != cells.end(); ++it) acc = vcomp(acc, *it);
    return acc;
}

const std::vector<Id>& FinDoubleCategory::squares_in(const SquareBoundary& b) const {
    static const std::vector<Id> none;
    auto it = frames_.find(key_of(b));
    return it == frames_.end() ? none : it->second;
}

std::optional<Id> FinDoubleCategory::hinverse(Id q) const {
    const auto& b = frame(q);
    if (!horizontal.is_identity(b.top) || !horizontal.is_identity(b.bottom)) return std::nullopt;
    for (Id p : squares_in({b.top, b.bottom, b.right, b.left})) {
        auto qp = hcomp_table.get(q, p);
        auto pq = hcomp_table.get(p, q);
        if (qp && pq && *qp == vid(b.left) && *pq == vid(b.right)) return p;
    }
    return std::nullopt;
}

std::optional<Id> FinDoubleCategory::vinverse(Id q) const {
    const auto& b = frame(q);
    if (!vertical.is_identity(b.left) || !vertical.is_identity(b.right)) return std::nullopt;
    for (Id p : squares_in({b.bottom, b.top, b.left, b.right})) {
        auto qp = vcomp_table.get(q, p);
        auto pq = vcomp_table.get(p, q);
        if (qp && pq && *qp == hid(b.top) && *pq == hid(b.bottom)) return p;
    }
    return std::nullopt;
}

Id FinDoubleCategory::hinverse_at(Id q) const {
    auto p = hinverse(q);
    if (!p) throw StructuralError("square " + sname(q) + " is not horizontally invertible");
    return *p;
}

Id FinDoubleCategory::vinverse_at(Id q) const {
    auto p = vinverse(q);
    if (!p) throw StructuralError("square " + sname(q) + " is not vertically invertible");
    return *p;
}

void FinDoubleCategory::finalize() {
    horizontal.finalize();
    vertical.finalize();
    if (horizontal.objects.names() != vertical.objects.names())
        throw StructuralError("horizontal and vertical object lists differ");
    const auto n = square_count();
    if (boundary.size() != n || hid_table.size() != hcell_count() || vid_table.size() != vcell_count())
        throw StructuralError("square tables do not cover every cell");
    const auto nh = to_id(hcell_count()), nv = to_id(vcell_count()), nq = to_id(n);
    for (Id q = 0; q < nq; ++q) {
        const auto& b = frame(q);
        if (b.top < 0 || b.top >= nh || b.bottom < 0 || b.bottom >= nh || b.left < 0 || b.left >= nv ||
            b.right < 0 || b.right >= nv)
            throw StructuralError("square '" + sname(q) + "' has a dangling boundary");
        if (horizontal.src[b.top] != vertical.src[b.left] || horizontal.tgt[b.top] != vertical.src[b.right] ||
            horizontal.src[b.bottom] != vertical.tgt[b.left] || horizontal.tgt[b.bottom] != vertical.tgt[b.right])
            throw StructuralError("square '" + sname(q) + "' has mismatched corners");
    }
    for (Id x : hid_table)
        if (x < 0 || x >= nq) throw StructuralError("identity square table is dangling");
    for (Id x : vid_table)
        if (x < 0 || x >= nq) throw StructuralError("identity square table is dangling");
    auto check = [&](Id a, Id b, Id r) {
        if (a < 0 || a >= nq || b < 0 || b >= nq || r < 0 || r >= nq)
            throw StructuralError("square composition table refers to an unknown square");
    };
    hcomp_table.for_each(check);
    vcomp_table.for_each(check);
    frames_.clear();
    by_left_.assign(vcell_count(), {});
    by_top_.assign(hcell_count(), {});
    for (Id q = 0; q < nq; ++q) {
        frames_[key_of(frame(q))].push_back(q);
        by_left_[static_cast<std::size_t>(frame(q).left)].push_back(q);
        by_top_[static_cast<std::size_t>(frame(q).top)].push_back(q);
    }
    h_cache_.reset();
    v_cache_.reset();
}

const Underlying2& FinDoubleCategory::H() const {
    std::lock_guard<std::mutex> g(*cache_lock_);
    if (!h_cache_) h_cache_ = std::make_shared<const Underlying2>(horizontal_2category(*this));
    return *h_cache_;
}

const Underlying2& FinDoubleCategory::V() const {
    std::lock_guard<std::mutex> g(*cache_lock_);
    if (!v_cache_) v_cache_ = std::make_shared<const Underlying2>(vertical_2category(*this));
    return *v_cache_;
}

Id Underlying2::cell(Id square) const {
    if (square < 0 || static_cast<std::size_t>(square) >= from_square.size() ||
        from_square[static_cast<std::size_t>(square)] < 0)
        throw StructuralError("square is not a 2-cell of the underlying 2-category");
    return from_square[static_cast<std::size_t>(square)];
}

namespace {

Underlying2 underlying(const FinDoubleCategory& d, bool horiz) {
    Underlying2 u;
    auto k = std::make_shared<Fin2Category>();
    k->one = horiz ? d.horizontal : d.vertical;
    u.from_square.assign(d.square_count(), -1);
    for (Id q = 0; q < to_id(d.square_count()); ++q) {
        const auto& b = d.frame(q);
        bool in = horiz ? d.vertical.is_identity(b.left) && d.vertical.is_identity(b.right)
                        : d.horizontal.is_identity(b.top) && d.horizontal.is_identity(b.bottom);
        if (!in) continue;
        u.from_square[static_cast<std::size_t>(q)] = to_id(u.to_square.size());
        u.to_square.push_back(q);
        k->cells2.add(d.sname(q));
        k->src2.push_back(horiz ? b.top : b.right);
        k->tgt2.push_back(horiz ? b.bottom : b.left);
    }
    const auto& ids = horiz ? d.hid_table : d.vid_table;
    for (Id q : ids) k->id2.push_back(u.cell(q));
    auto from = [&](Id q) { return u.from_square[static_cast<std::size_t>(q)]; };
    auto lift = [&](Id a, Id b, Id r) -> std::optional<Id> {
        if (from(a) < 0 || from(b) < 0) return std::nullopt;
        if (from(r) < 0) throw StructuralError("composite of identity-sided squares leaves the class");
        return from(r);
    };
    // horizontal: vcomp(b.a) from vcomp_sq(a, b), hcomp(b o a) from hcomp_sq(a, b)
    // vertical: vcomp(b.a) from hcomp_sq(b, a), hcomp(b o a) from vcomp_sq(a, b)
    d.vcomp_table.for_each([&](Id t, Id bot, Id r) {
        if (auto x = lift(t, bot, r)) {
            if (horiz)
                k->vcomp.set(from(bot), from(t), *x);
            else
                k->hcomp.set(from(bot), from(t), *x);
        }
    });
    d.hcomp_table.for_each([&](Id l, Id rr, Id r) {
        if (auto x = lift(l, rr, r)) {
            if (horiz)
                k->hcomp.set(from(rr), from(l), *x);
            else
                k->vcomp.set(from(l), from(rr), *x);
        }
    });
    k->finalize();
    u.k = k;
    return u;
}

}  // namespace

Underlying2 horizontal_2category(const FinDoubleCategory& d) { return underlying(d, true); }
Underlying2 vertical_2category(const FinDoubleCategory& d) { return underlying(d, false); }

ValidationReport validate_double_category(const FinDoubleCategory& d) {
    if (auto r = validate_category(d.horizontal); !r) {
        r.axiom = "horizontal " + r.axiom;
        return r;
    }
    if (auto r = validate_category(d.vertical); !r) {
        r.axiom = "vertical " + r.axiom;
        return r;
    }
    const auto nq = to_id(d.square_count());
    const auto& H = d.horizontal;
    const auto& V = d.vertical;
    auto sn = [&](Id q) { return d.sname(q); };

    for (Id f = 0; f < to_id(d.hcell_count()); ++f)
        if (!(d.frame(d.hid(f)) == SquareBoundary{f, f, V.identity(H.src[f]), V.identity(H.tgt[f])}))
            return ValidationReport::fail("identity-square-boundary", "identity square of " + d.hname(f));
    for (Id s = 0; s < to_id(d.vcell_count()); ++s)
        if (!(d.frame(d.vid(s)) == SquareBoundary{H.identity(V.src[s]), H.identity(V.tgt[s]), s, s}))
            return ValidationReport::fail("identity-square-boundary", "identity square of " + d.vname(s));
    for (Id a = 0; a < to_id(d.object_count()); ++a)
        if (d.hid(H.identity(a)) != d.vid(V.identity(a)))
            return ValidationReport::fail("identity-square", "two identity squares at " + d.object_name(a));

    ValidationReport bad;
    d.hcomp_table.for_each([&](Id l, Id r, Id x) {
        if (!bad.ok()) return;
        const auto &bl = d.frame(l), &br = d.frame(r);
        if (bl.right != br.left) {
            bad = ValidationReport::fail("hcomp-domain", sn(l) + " | " + sn(r) + " is not composable");
            return;
        }
        SquareBoundary want{H.compose_at(br.top, bl.top), H.compose_at(br.bottom, bl.bottom), bl.left, br.right};
        if (!(d.frame(x) == want)) bad = ValidationReport::fail("hcomp-boundary", sn(l) + " | " + sn(r));
    });
    if (!bad.ok()) return bad;
    d.vcomp_table.for_each([&](Id t, Id b, Id x) {
        if (!bad.ok()) return;
        const auto &bt = d.frame(t), &bb = d.frame(b);
        if (bt.bottom != bb.top) {
            bad = ValidationReport::fail("vcomp-domain", sn(t) + " / " + sn(b) + " is not composable");
            return;
        }
        SquareBoundary want{bt.top, bb.bottom, V.compose_at(bb.left, bt.left), V.compose_at(bb.right, bt.right)};
        if (!(d.frame(x) == want)) bad = ValidationReport::fail("vcomp-boundary", sn(t) + " / " + sn(b));
    });
    if (!bad.ok()) return bad;
    for (Id l = 0; l < nq; ++l) {
        for (Id r : d.squares_with_left(d.frame(l).right))
            if (!d.hcomp_table.contains(l, r)) return ValidationReport::fail("hcomp-total", sn(l) + " | " + sn(r));
        for (Id b : d.squares_with_top(d.frame(l).bottom))
            if (!d.vcomp_table.contains(l, b)) return ValidationReport::fail("vcomp-total", sn(l) + " / " + sn(b));
    }
    for (Id q = 0; q < nq; ++q) {
        const auto& b = d.frame(q);
        if (d.hcomp(d.vid(b.left), q) != q || d.hcomp(q, d.vid(b.right)) != q)
            return ValidationReport::fail("hcomp-unit-law", sn(q));
        if (d.vcomp(d.hid(b.top), q) != q || d.vcomp(q, d.hid(b.bottom)) != q)
            return ValidationReport::fail("vcomp-unit-law", sn(q));
    }
    for (Id f = 0; f < to_id(d.hcell_count()); ++f)
        for (Id q : d.squares_with_left(V.identity(H.tgt[f]))) {
            Id g = d.frame(q).top;
            if (q != d.hid(g)) continue;
            if (d.hcomp(d.hid(f), q) != d.hid(H.compose_at(g, f)))
                return ValidationReport::fail("identity-square-hcomp", d.hname(f) + " then " + d.hname(g));
        }
    for (Id s = 0; s < to_id(d.vcell_count()); ++s)
        for (Id q : d.squares_with_top(H.identity(V.tgt[s]))) {
            Id t = d.frame(q).left;
            if (q != d.vid(t)) continue;
            if (d.vcomp(d.vid(s), q) != d.vid(V.compose_at(t, s)))
                return ValidationReport::fail("identity-square-vcomp", d.vname(s) + " then " + d.vname(t));
        }
    for (Id a = 0; a < nq; ++a)
        for (Id b : d.squares_with_left(d.frame(a).right)) {
            Id ab = d.hcomp(a, b);
            for (Id c : d.squares_with_left(d.frame(b).right))
                if (d.hcomp(ab, c) != d.hcomp(a, d.hcomp(b, c)))
                    return ValidationReport::fail("hcomp-associativity", sn(a) + " | " + sn(b) + " | " + sn(c));
        }
    for (Id a = 0; a < nq; ++a)
        for (Id b : d.squares_with_top(d.frame(a).bottom)) {
            Id ab = d.vcomp(a, b);
            for (Id c : d.squares_with_top(d.frame(b).bottom))
                if (d.vcomp(ab, c) != d.vcomp(a, d.vcomp(b, c)))
                    return ValidationReport::fail("vcomp-associativity", sn(a) + " / " + sn(b) + " / " + sn(c));
        }
    for (Id a = 0; a < nq; ++a)
        for (Id b : d.squares_with_left(d.frame(a).right))
            for (Id c : d.squares_with_top(d.frame(a).bottom))
                for (Id e : d.squares_with_top(d.frame(b).bottom)) {
                    if (d.frame(e).left != d.frame(c).right) continue;
                    if (d.vcomp(d.hcomp(a, b), d.hcomp(c, e)) != d.hcomp(d.vcomp(a, c), d.vcomp(b, e)))
                        return ValidationReport::fail("interchange", "grid " + sn(a) + ", " + sn(b) + ", " + sn(c) +
                                                                         ", " + sn(e));
                }
    return ValidationReport::pass();
}

FinDoubleCategory double_of_2category(const Fin2Category& k) {
    FinDoubleCategory d;
    d.horizontal = k.one;
    d.vertical = k.one;
    std::map<std::array<Id, 5>, Id> index;  // (cell, top, bottom, left, right)
    auto add = [&](Id th, Id f, Id g, Id s, Id t) {
        Id q = d.squares.add(tuple_name({k.name2(th), k.name1(f), k.name1(g), k.name1(s), k.name1(t)}));
        d.boundary.push_back({f, g, s, t});
        index[{th, f, g, s, t}] = q;
    };
    struct Split { Id first, second; };
    // factorizations of each 1-cell as second o first
    std::vector<std::vector<Split>> splits(k.count1());
    for (Id f = 0; f < to_id(k.count1()); ++f)
        for (Id b = 0; b < to_id(k.count0()); ++b)
            for (Id t : k.one.hom(b, k.tgt0(f)))
                for (Id x : k.one.hom(k.src0(f), b))
                    if (k.comp1(t, x) == f) splits[static_cast<std::size_t>(f)].push_back({x, t});
    for (Id th = 0; th < to_id(k.count2()); ++th)
        for (auto [f, t] : splits[static_cast<std::size_t>(k.src2[th])])
            for (auto [s, g] : splits[static_cast<std::size_t>(k.tgt2[th])]) add(th, f, g, s, t);
    std::vector<std::array<Id, 5>> key(d.square_count());
    for (const auto& [kk, q] : index) key[static_cast<std::size_t>(q)] = kk;
    auto find = [&](std::array<Id, 5> kk) {
        auto it = index.find(kk);
        if (it == index.end()) throw StructuralError("square missing from the 2-category's double category");
        return it->second;
    };
    for (Id f = 0; f < to_id(k.count1()); ++f)
        d.hid_table.push_back(find({k.id2[f], f, f, k.id1(k.src0(f)), k.id1(k.tgt0(f))}));
    for (Id s = 0; s < to_id(k.count1()); ++s)
        d.vid_table.push_back(find({k.id2[s], k.id1(k.src0(s)), k.id1(k.tgt0(s)), s, s}));
    std::vector<std::vector<Id>> by_left(k.count1()), by_top(k.count1());
    for (Id q = 0; q < to_id(d.square_count()); ++q) {
        by_left[static_cast<std::size_t>(d.boundary[q].left)].push_back(q);
        by_top[static_cast<std::size_t>(d.boundary[q].top)].push_back(q);
    }
    for (Id l = 0; l < to_id(d.square_count()); ++l) {
        auto [th, f, g, s, t] = key[static_cast<std::size_t>(l)];
        for (Id r : by_left[static_cast<std::size_t>(t)]) {
            auto [th2, f2, g2, t_, t2] = key[static_cast<std::size_t>(r)];
            (void)t_;
            Id cell = k.v(k.post(g2, th), k.pre(th2, f));
            d.hcomp_table.set(l, r, find({cell, k.comp1(f2, f), k.comp1(g2, g), s, t2}));
        }
        for (Id b : by_top[static_cast<std::size_t>(g)]) {
            auto [th2, g_, h, s2, t2] = key[static_cast<std::size_t>(b)];
            (void)g_;
            Id cell = k.v(k.pre(th2, s), k.post(t2, th));
            d.vcomp_table.set(l, b, find({cell, f, h, k.comp1(s2, s), k.comp1(t2, t)}));
        }
    }
    d.finalize();
    return d;
}

FinDoubleCategory double_of_strict_monoidal(const MonoidalStructure& m) {
    const auto& c = *m.base;
    const auto n = to_id(c.object_count());
    for (Id a = 0; a < n; ++a) {
        if (m.tensor(m.unit, a) != a || m.tensor(a, m.unit) != a || !c.is_identity(m.left_unitor[a]) ||
            !c.is_identity(m.right_unitor[a]))
            throw PreconditionError("monoidal structure is not strict", "unit at " + c.object_name(a));
        for (Id b = 0; b < n; ++b)
            for (Id e = 0; e < n; ++e)
                if (m.tensor(m.tensor(a, b), e) != m.tensor(a, m.tensor(b, e)) || !c.is_identity(m.assoc(a, b, e)))
                    throw PreconditionError("monoidal structure is not strict",
                                            "associator at " + tuple_name({c.object_name(a), c.object_name(b),
                                                                           c.object_name(e)}));
    }
    FinDoubleCategory d;
    d.horizontal.objects.add("*");
    d.vertical.objects.add("*");
    for (Id a = 0; a < n; ++a) {
        d.horizontal.morphisms.add(c.object_name(a));
        d.horizontal.src.push_back(0);
        d.horizontal.tgt.push_back(0);
    }
    d.horizontal.identities = {m.unit};
    // first cell on the left of the tensor
    for (Id f = 0; f < n; ++f)
        for (Id g = 0; g < n; ++g) d.horizontal.composition.set(g, f, m.tensor(f, g));
    d.vertical.morphisms.add("1_*");
    d.vertical.src = {0};
    d.vertical.tgt = {0};
    d.vertical.identities = {0};
    d.vertical.composition.set(0, 0, 0);
    const auto nm = to_id(c.morphism_count());
    for (Id x = 0; x < nm; ++x) {
        d.squares.add(c.morphism_name(x));
        d.boundary.push_back({c.src[x], c.tgt[x], 0, 0});
    }
    for (Id l = 0; l < nm; ++l)
        for (Id r = 0; r < nm; ++r) {
            d.hcomp_table.set(l, r, m.tensor_arrow(l, r));
            if (auto x = c.compose(r, l)) d.vcomp_table.set(l, r, *x);
        }
    for (Id a = 0; a < n; ++a) d.hid_table.push_back(c.identity(a));
    d.vid_table = {c.identity(m.unit)};
    d.finalize();
    return d;
}

ValidationReport check_companions(const CompanionPair& p, const FinDoubleCategory& d) {
    const auto& H = d.horizontal;
    const auto& V = d.vertical;
    auto in = [](Id x, std::size_t n) { return x >= 0 && static_cast<std::size_t>(x) < n; };
    if (!in(p.f, d.hcell_count()) || !in(p.f_prime, d.vcell_count()) || !in(p.sigma, d.square_count()) ||
        !in(p.tau, d.square_count()))
        throw StructuralError("companion data refers to unknown cells");
    Id a = H.src[p.f], b = H.tgt[p.f];
    if (V.src[p.f_prime] != a || V.tgt[p.f_prime] != b)
        throw StructuralError("companion cells " + d.hname(p.f) + " and " + d.vname(p.f_prime) +
                              " are not parallel");
    if (!(d.frame(p.sigma) == SquareBoundary{H.identity(a), p.f, V.identity(a), p.f_prime}))
        throw StructuralError("binding cell " + d.sname(p.sigma) + " has the wrong boundary");
    if (!(d.frame(p.tau) == SquareBoundary{p.f, H.identity(b), p.f_prime, V.identity(b)}))
        throw StructuralError("binding cell " + d.sname(p.tau) + " has the wrong boundary");
    if (d.hcomp(p.sigma, p.tau) != d.hid(p.f))
        return ValidationReport::fail("companion-horizontal", "sigma | tau is not the identity square of " +
                                                                  d.hname(p.f));
    if (d.vcomp(p.sigma, p.tau) != d.vid(p.f_prime))
        return ValidationReport::fail("companion-vertical", "sigma / tau is not the identity square of " +
                                                                d.vname(p.f_prime));
    return ValidationReport::pass();
}

std::vector<CompanionPair> find_companions(Id f, const FinDoubleCategory& d) {
    const auto& H = d.horizontal;
    const auto& V = d.vertical;
    Id a = H.src[f], b = H.tgt[f];
    std::vector<CompanionPair> out;
    for (Id fp : V.hom(a, b))
        for (Id s : d.squares_in({H.identity(a), f, V.identity(a), fp}))
            for (Id t : d.squares_in({f, H.identity(b), fp, V.identity(b)}))
                if (check_companions({f, fp, s, t}, d)) out.push_back({f, fp, s, t});
    return out;
}

namespace {

const Underlying2& view(Orientation o, const FinDoubleCategory& d) { return o == Orientation::horizontal ? d.H() : d.V(); }

HVAdjointEquivalence back(Orientation o, const Underlying2& u, const AdjointEquivalence& e) {
    return {o, e.ell, e.r, u.to_square[static_cast<std::size_t>(e.eta)],
            u.to_square[static_cast<std::size_t>(e.epsilon)]};
}

}  // namespace

ValidationReport check_hv_adjoint_equivalence(const HVAdjointEquivalence& e, const FinDoubleCategory& d) {
    const auto& u = view(e.orientation, d);
    return check_adjoint_equivalence({e.ell, e.r, u.cell(e.eta), u.cell(e.epsilon)}, *u.k);
}

HVAdjointEquivalence identity_hv_adjoint_equivalence(Orientation o, const FinDoubleCategory& d, Id a) {
    const auto& u = view(o, d);
    return back(o, u, identity_adjoint_equivalence(*u.k, a));
}

SearchOutcome<HVAdjointEquivalence> complete_hv_adjoint_equivalence(Orientation o, Id ell,
                                                                    const FinDoubleCategory& d,
                                                                    const SearchBudget& budget) {
    const auto& u = view(o, d);
    auto r = complete_adjoint_equivalence(ell, *u.k, budget);
    SearchOutcome<HVAdjointEquivalence> out;
    out.status = r.status;
    out.candidates_examined = r.candidates_examined;
    if (r.witness) out.witness = back(o, u, *r.witness);
    return out;
}

std::vector<HVAdjointEquivalence> enumerate_hv_adjoint_equivalences(Orientation o, const FinDoubleCategory& d,
                                                                    Id x, Id y) {
    const auto& u = view(o, d);
    std::vector<HVAdjointEquivalence> out;
    for (const auto& e : enumerate_adjoint_equivalences(*u.k, x, y)) out.push_back(back(o, u, e));
    return out;
}

CompanionMates companion_mates(const CompanionPair& p, const HVAdjointEquivalence& hadj,
                               const HVAdjointEquivalence& vadj, const FinDoubleCategory& d) {
    if (hadj.ell != p.f || vadj.ell != p.f_prime)
        throw StructuralError("adjoint equivalences do not start from the companion cells");
    CompanionMates m;
    m.sigma_bar = d.hcomp(d.vseq({d.hcomp(d.hid(hadj.r), p.sigma), hadj.epsilon, d.vid(vadj.r)}), vadj.eta);
    m.tau_bar = d.hcomp(vadj.epsilon, d.vseq({d.vid(vadj.r), hadj.eta, d.hcomp(p.tau, d.hid(hadj.r))}));
    return m;
}

SearchOutcome<GregariousWitness> check_gregarious_object_equivalence(Id a, Id b, const FinDoubleCategory& d,
                                                                     const SearchBudget& budget) {
    const auto& H = d.horizontal;
    const auto& V = d.vertical;
    SearchOutcome<GregariousWitness> out;
    std::vector<std::optional<HVAdjointEquivalence>> vadj;
    for (Id fp : V.hom(a, b)) vadj.push_back(complete_hv_adjoint_equivalence(Orientation::vertical, fp, d).witness);
    for (Id f : H.hom(a, b)) {
        auto h = complete_hv_adjoint_equivalence(Orientation::horizontal, f, d).witness;
        if (!h) continue;
        for (std::size_t i = 0; i < vadj.size(); ++i) {
            if (!vadj[i]) continue;
            Id fp = V.hom(a, b)[i];
            for (Id s : d.squares_in({H.identity(a), f, V.identity(a), fp}))
                for (Id t : d.squares_in({f, H.identity(b), fp, V.identity(b)})) {
                    if (out.candidates_examined >= budget.max_candidates) {
                        out.status = SearchStatus::budget;
                        return out;
                    }
                    ++out.candidates_examined;
                    if (check_companions({f, fp, s, t}, d)) {
                        out.status = SearchStatus::found;
                        out.witness = GregariousWitness{*h, *vadj[i], {f, fp, s, t}};
                        return out;
                    }
                }
        }
    }
    out.status = SearchStatus::exhausted;
    return out;
}

Id evaluate(const FinDoubleCategory& d, const PasteSq& t, Id hole, FoldOrder order) {
    switch (t.kind) {
    case PasteSq::Kind::leaf:
        return t.cell;
    case PasteSq::Kind::hole:
        if (hole < 0) throw StructuralError("paste tree hole is unfilled");
        return hole;
    case PasteSq::Kind::h:
    case PasteSq::Kind::v: {
        if (t.parts.empty()) throw StructuralError("empty paste");
        std::vector<Id> xs;
        for (const auto& p : t.parts) xs.push_back(evaluate(d, p, hole, order));
        auto join = [&](Id x, Id y) {
            if (t.kind == PasteSq::Kind::h) {
                if (d.frame(x).right != d.frame(y).left) throw StructuralError("ill-boundaried horizontal paste");
                return d.hcomp(x, y);
            }
            if (d.frame(x).bottom != d.frame(y).top) throw StructuralError("ill-boundaried vertical paste");
            return d.vcomp(x, y);
        };
        if (order == FoldOrder::left) {
            Id acc = xs.front();
            for (std::size_t i = 1; i < xs.size(); ++i) acc = join(acc, xs[i]);
            return acc;
        }
        Id acc = xs.back();
        for (std::size_t i = xs.size() - 1; i-- > 0;) acc = join(xs[i], acc);
        return acc;
    }
    }
    return -1;
}

namespace {

bool regroup(const FinDoubleCategory& d, const PasteSq& t, Id hole, PasteSq& out) {
    bool changed = false;
    out = t;
    for (auto& p : out.parts) {
        PasteSq q;
        if (regroup(d, p, hole, q)) {
            p = std::move(q);
            changed = true;
        }
    }
    if (out.kind != PasteSq::Kind::h && out.kind != PasteSq::Kind::v) return changed;
    auto inner = out.kind == PasteSq::Kind::h ? PasteSq::Kind::v : PasteSq::Kind::h;
    if (out.parts.size() < 2) return changed;
    std::size_t rows = 0;
    for (const auto& p : out.parts) {
        if (p.kind != inner) return changed;
        if (rows == 0) rows = p.parts.size();
        if (p.parts.size() != rows || rows < 2) return changed;
    }
    PasteSq g{inner, -1, {}};
    for (std::size_t i = 0; i < rows; ++i) {
        PasteSq row{out.kind, -1, {}};
        for (const auto& p : out.parts) row.parts.push_back(p.parts[i]);
        try {
            evaluate(d, row, hole);
        } catch (const StructuralError&) {
            return changed;
        }
        g.parts.push_back(std::move(row));
    }
    out = std::move(g);
    return true;
}

}  // namespace

std::optional<PasteSq> interchange_variant(const FinDoubleCategory& d, const PasteSq& t, Id hole) {
    PasteSq out;
    if (!regroup(d, t, hole, out)) return std::nullopt;
    return out;
}

SolveOutcome solve_square(const FinDoubleCategory& d, const PasteSq& lhs, const PasteSq& rhs,
                          const SquareBoundary& hole_frame) {
    return solve_hole(d.squares_in(hole_frame),
                      [&](Id c) { return evaluate(d, lhs, c) == evaluate(d, rhs, c); });
}

}  // namespace fincat
