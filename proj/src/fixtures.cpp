#include "fincat/fixtures.hpp"

#include <memory>

namespace fincat::fixtures {

namespace {

std::string num(int i) { return std::to_string(i); }

}  // namespace

CatPtr terminal_category() { return CategoryBuilder().object("0").build_ptr(); }

CatPtr iso_category() { return codiscrete(2); }

CatPtr codiscrete(int n) {
    CategoryBuilder b;
    for (int i = 0; i < n; ++i) b.object(num(i));
    auto m = [](int i, int j) { return i == j ? "1_" + num(i) : num(i) + ">" + num(j); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) b.morphism(m(i, j), num(i), num(j));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (i != j && j != k) b.compose(m(j, k), m(i, j), m(i, k));
    return b.build_ptr();
}

CatPtr discrete(int n) {
    CategoryBuilder b;
    for (int i = 0; i < n; ++i) b.object(num(i));
    return b.build_ptr();
}

CatPtr arrow_category() { return CategoryBuilder().object("0").object("1").morphism("a", "0", "1").build_ptr(); }

CatPtr z2_group() { return CategoryBuilder().object("*").morphism("z", "*", "*").compose("z", "z", "1_*").build_ptr(); }

CatPtr z2_pair() {
    CategoryBuilder b;
    b.object("0").object("1");
    // hom(i, j) = {e, z}; e_ii is the identity
    auto m = [](int i, int j, int p) {
        if (i == j) return p ? "z_" + num(i) : "1_" + num(i);
        return std::string(p ? "z_" : "e_") + num(i) + num(j);
    };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int p = 0; p < 2; ++p)
                if (i != j || p) b.morphism(m(i, j, p), num(i), num(j));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int p = 0; p < 2; ++p)
                    for (int q = 0; q < 2; ++q) {
                        if ((i == j && !p) || (j == k && !q)) continue;  // unit laws are automatic
                        b.compose(m(j, k, q), m(i, j, p), m(i, k, (p + q) % 2));
                    }
    return b.build_ptr();
}

CatPtr arrow_with_iso_source() {
    return CategoryBuilder()
        .object("0")
        .object("0p")
        .object("1")
        .morphism("i", "0", "0p")
        .morphism("j", "0p", "0")
        .morphism("a", "0", "1")
        .morphism("b", "0p", "1")
        .compose("j", "i", "1_0")
        .compose("i", "j", "1_0p")
        .compose("b", "i", "a")
        .compose("a", "j", "b")
        .build_ptr();
}

CatPtr point_plus_iso() {
    return CategoryBuilder()
        .object("p")
        .object("0")
        .object("1")
        .morphism("i", "0", "1")
        .morphism("j", "1", "0")
        .compose("j", "i", "1_0")
        .compose("i", "j", "1_1")
        .build_ptr();
}

std::vector<NamedCategory> catalog() {
    return {
        {"1", terminal_category()},
        {"I", iso_category()},
        {"K3", codiscrete(3)},
        {"2", discrete(2)},
        {"A", arrow_category()},
        {"Z2", z2_group()},
        {"Z2I", z2_pair()},
        {"AI", arrow_with_iso_source()},
        {"1+I", point_plus_iso()},
    };
}

MonPtr m1() {
    auto c = discrete(2);
    return std::make_shared<const MonoidalStructure>(make_strict_monoidal(
        c, 0, [](Id a, Id b) { return (a + b) % 2; },
        [c](Id f, Id g) { return c->identity((c->src[f] + c->src[g]) % 2); }));
}

MonPtr z4_parity() {
    CategoryBuilder b;
    for (int i = 0; i < 4; ++i) b.object(num(i));
    auto m = [](int i, int j) { return i == j ? "1_" + num(i) : num(i) + ">" + num(j); };
    for (int i = 0; i < 4; ++i) b.morphism(m(i, (i + 2) % 4), num(i), num((i + 2) % 4));
    for (int i = 0; i < 4; ++i) b.compose(m((i + 2) % 4, i), m(i, (i + 2) % 4), m(i, i));
    auto c = b.build_ptr();
    return std::make_shared<const MonoidalStructure>(make_strict_monoidal(
        c, 0, [](Id a, Id x) { return (a + x) % 4; },
        [c](Id f, Id g) {
            return c->hom((c->src[f] + c->src[g]) % 4, (c->tgt[f] + c->tgt[g]) % 4).front();
        }));
}

MonPtr terminal_monoidal() {
    auto c = terminal_category();
    return std::make_shared<const MonoidalStructure>(
        make_strict_monoidal(c, 0, [](Id, Id) { return 0; }, [](Id, Id) { return 0; }));
}

MonoidalFunctorData quotient_z4_z2() {
    auto a = z4_parity();
    auto b = m1();
    FinFunctor u{a->base, b->base, {}, {}};
    for (Id x = 0; x < to_id(a->base->object_count()); ++x) u.obj_map.push_back(x % 2);
    for (Id f = 0; f < to_id(a->base->morphism_count()); ++f)
        u.mor_map.push_back(b->base->identity(a->base->src[f] % 2));
    return make_strict_monoidal_functor(a, b, u);
}

TwoPtr terminal_2category() { return TwoCategoryBuilder().cell0("*").build_ptr(); }

TwoPtr b2() {
    return TwoCategoryBuilder()
        .cell0("x")
        .cell0("y")
        .cell1("u", "x", "y")
        .cell1("u'", "x", "y")
        .cell2("th", "u", "u'")
        .cell2("thi", "u'", "u")
        .vcomp("thi", "th", "id_u")
        .vcomp("th", "thi", "id_u'")
        .build_ptr();
}

TwoPtr vu1() {
    return TwoCategoryBuilder()
        .cell0("x")
        .cell0("y")
        .cell1("u", "x", "y")
        .cell1("v", "y", "x")
        .comp1("v", "u", "1_x")
        .comp1("u", "v", "1_y")
        .thin()
        .build_ptr();
}

TwoPtr bz() {
    return TwoCategoryBuilder()
        .cell0("x")
        .cell0("y")
        .cell1("u", "x", "y")
        .cell2("z", "u", "u")
        .vcomp("z", "z", "id_u")
        .build_ptr();
}

TwoPtr bbz2() {
    return TwoCategoryBuilder()
        .cell0("*")
        .cell2("z", "1_*", "1_*")
        .vcomp("z", "z", "id_1_*")
        .hcomp("z", "z", "id_1_*")
        .build_ptr();
}

Pseudofunctor2 pseudo_unit() {
    auto s = terminal_2category();
    auto t = bbz2();
    Id z = t->cells2.at("z", "2-cell");
    Pseudofunctor2 F;
    F.source = s;
    F.target = t;
    F.map0 = {0};
    F.map1 = {t->id1(0)};
    F.map2 = {t->id2[t->id1(0)]};
    F.comp_cells.set(s->id1(0), s->id1(0), z);
    F.unit_cells = {z};
    return F;
}

Pseudofunctor2 collapse_to_terminal(const TwoPtr& k) {
    auto t = terminal_2category();
    return make_strict_2functor(k, t, std::vector<Id>(k->count0(), 0), std::vector<Id>(k->count1(), t->id1(0)),
                                std::vector<Id>(k->count2(), t->id2[t->id1(0)]));
}

DblPtr d_of(const TwoPtr& k) { return std::make_shared<const FinDoubleCategory>(double_of_2category(*k)); }

DblPtr degenerate(const MonPtr& m) {
    return std::make_shared<const FinDoubleCategory>(double_of_strict_monoidal(*m));
}

DblPtr terminal_double() { return d_of(terminal_2category()); }

DoublePseudofunctor quotient_double() {
    auto q = quotient_z4_z2();
    auto A = degenerate(q.source);
    auto B = degenerate(q.target);
    std::vector<Id> mh, msq;
    for (Id f = 0; f < to_id(A->hcell_count()); ++f)
        mh.push_back(B->horizontal.morphisms.at(q.target->base->object_name(
                                                    q.underlying.obj(q.source->base->objects.at(A->hname(f), "object"))),
                                                "hcell"));
    for (Id x = 0; x < to_id(A->square_count()); ++x)
        msq.push_back(B->squares.at(q.target->base->morphism_name(
                                        q.underlying.mor(q.source->base->morphisms.at(A->sname(x), "morphism"))),
                                    "square"));
    return make_strict_double_functor(A, B, {0}, mh, {0}, msq);
}

DoublePseudofunctor collapse_double(const DblPtr& d) {
    auto t = terminal_double();
    return make_strict_double_functor(d, t, std::vector<Id>(d->object_count(), 0), std::vector<Id>(d->hcell_count(), 0),
                                      std::vector<Id>(d->vcell_count(), 0), std::vector<Id>(d->square_count(), 0));
}

DoublePseudofunctor pseudo_unit_double() {
    auto s = terminal_double();
    auto t = d_of(bbz2());
    Id z = -1;
    for (Id q : t->squares_in({t->h1(0), t->h1(0), t->v1(0), t->v1(0)}))
        if (q != t->hid(t->h1(0))) z = q;
    DoublePseudofunctor F;
    F.source = s;
    F.target = t;
    F.map0 = {0};
    F.maph = {t->h1(0)};
    F.mapv = {t->v1(0)};
    F.mapsq = {t->hid(t->h1(0))};
    F.hcomp_cells.set(0, 0, z);
    F.hunit_cells = {z};
    F.vcomp_cells.set(0, 0, z);
    F.vunit_cells = {z};
    return F;
}

}  // namespace fincat::fixtures
