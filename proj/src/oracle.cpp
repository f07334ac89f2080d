#include "fincat/oracle.hpp"

namespace fincat {

MapKind parse_map_kind(std::string_view s) {
    if (s == "cat") return MapKind::cat;
    if (s == "mon") return MapKind::mon;
    if (s == "2cat") return MapKind::twocat;
    if (s == "dbl") return MapKind::dbl;
    throw StructuralError("unknown structure kind '" + std::string(s) + "'");
}

std::string to_string(MapKind k) {
    switch (k) {
    case MapKind::cat: return "cat";
    case MapKind::mon: return "mon";
    case MapKind::twocat: return "2cat";
    case MapKind::dbl: return "dbl";
    }
    return "?";
}

namespace {

void table_op(Presentation& p, int op, const PairTable& t) {
    for (const auto& [k, r] : t.sorted_entries()) p.add_entry(op, {k.first, k.second}, r);
}

// Sorts start at `base`: objects, then morphisms.
void add_category(Presentation& p, const FinCategory& c, int obj, int mor, const std::string& tag) {
    int s = p.add_op(tag + "src", {mor}, obj);
    int t = p.add_op(tag + "tgt", {mor}, obj);
    int i = p.add_op(tag + "id", {obj}, mor);
    int m = p.add_op(tag + "comp", {mor, mor}, mor);
    for (Id f = 0; f < to_id(c.morphism_count()); ++f) {
        p.add_entry(s, {f}, c.src[f]);
        p.add_entry(t, {f}, c.tgt[f]);
    }
    for (Id a = 0; a < to_id(c.object_count()); ++a) p.add_entry(i, {a}, c.identity(a));
    table_op(p, m, c.composition);
}

}  // namespace

Presentation present_category(const FinCategory& c) {
    Presentation p;
    p.sort_sizes = {c.object_count(), c.morphism_count()};
    add_category(p, c, 0, 1, "");
    return p;
}

Presentation present_monoidal(const MonoidalStructure& m) {
    const auto& c = *m.base;
    Presentation p = present_category(c);
    int to = p.add_op("tensor_obj", {0, 0}, 0);
    int tm = p.add_op("tensor_mor", {1, 1}, 1);
    int u = p.add_op("unit", {}, 0);
    int as = p.add_op("associator", {0, 0, 0}, 1);
    int lu = p.add_op("left_unitor", {0}, 1);
    int ru = p.add_op("right_unitor", {0}, 1);
    table_op(p, to, m.tensor_obj);
    table_op(p, tm, m.tensor_mor);
    p.add_entry(u, {}, m.unit);
    const auto n = to_id(c.object_count());
    for (Id a = 0; a < n; ++a) {
        p.add_entry(lu, {a}, m.left_unitor[a]);
        p.add_entry(ru, {a}, m.right_unitor[a]);
        for (Id b = 0; b < n; ++b)
            for (Id x = 0; x < n; ++x) p.add_entry(as, {a, b, x}, m.assoc(a, b, x));
    }
    return p;
}

Presentation present_2category(const Fin2Category& k) {
    Presentation p;
    p.sort_sizes = {k.count0(), k.count1(), k.count2()};
    add_category(p, k.one, 0, 1, "");
    int s = p.add_op("src2", {2}, 1);
    int t = p.add_op("tgt2", {2}, 1);
    int i = p.add_op("id2", {1}, 2);
    int v = p.add_op("vcomp", {2, 2}, 2);
    int h = p.add_op("hcomp", {2, 2}, 2);
    for (Id x = 0; x < to_id(k.count2()); ++x) {
        p.add_entry(s, {x}, k.src2[x]);
        p.add_entry(t, {x}, k.tgt2[x]);
    }
    for (Id f = 0; f < to_id(k.count1()); ++f) p.add_entry(i, {f}, k.id2[f]);
    table_op(p, v, k.vcomp);
    table_op(p, h, k.hcomp);
    return p;
}

Presentation present_double(const FinDoubleCategory& d) {
    Presentation p;
    p.sort_sizes = {d.object_count(), d.hcell_count(), d.vcell_count(), d.square_count()};
    add_category(p, d.horizontal, 0, 1, "h");
    add_category(p, d.vertical, 0, 2, "v");
    int top = p.add_op("top", {3}, 1);
    int bottom = p.add_op("bottom", {3}, 1);
    int left = p.add_op("left", {3}, 2);
    int right = p.add_op("right", {3}, 2);
    int hid = p.add_op("hid", {1}, 3);
    int vid = p.add_op("vid", {2}, 3);
    int hc = p.add_op("hcomp_sq", {3, 3}, 3);
    int vc = p.add_op("vcomp_sq", {3, 3}, 3);
    for (Id q = 0; q < to_id(d.square_count()); ++q) {
        const auto& b = d.frame(q);
        p.add_entry(top, {q}, b.top);
        p.add_entry(bottom, {q}, b.bottom);
        p.add_entry(left, {q}, b.left);
        p.add_entry(right, {q}, b.right);
    }
    for (Id f = 0; f < to_id(d.hcell_count()); ++f) p.add_entry(hid, {f}, d.hid(f));
    for (Id s = 0; s < to_id(d.vcell_count()); ++s) p.add_entry(vid, {s}, d.vid(s));
    table_op(p, hc, d.hcomp_table);
    table_op(p, vc, d.vcomp_table);
    return p;
}

namespace {

template <class T>
const T& expect(const Structure& s, const char* what) {
    if (const auto* p = std::get_if<T>(&s); p && *p) return *p;
    throw StructuralError(std::string("structure does not match the requested kind (expected ") + what + ")");
}

template <class T>
SearchOutcome<T> convert(const SearchOutcome<Assignment>& r, const std::function<T(const Assignment&)>& build) {
    SearchOutcome<T> out;
    out.status = r.status;
    out.candidates_examined = r.candidates_examined;
    if (r.witness) out.witness = build(*r.witness);
    return out;
}

}  // namespace

SearchOutcome<StructureMap> enumerate_maps(MapKind kind, const Structure& source, const Structure& target,
                                           const std::function<bool(const StructureMap&)>& predicate,
                                           const SearchBudget& budget) {
    std::function<StructureMap(const Assignment&)> build;
    Presentation ps, pt;
    switch (kind) {
    case MapKind::cat: {
        const auto& a = expect<CatPtr>(source, "category");
        const auto& b = expect<CatPtr>(target, "category");
        ps = present_category(*a);
        pt = present_category(*b);
        build = [a, b](const Assignment& x) -> StructureMap { return FinFunctor{a, b, x[0], x[1]}; };
        break;
    }
    case MapKind::mon: {
        const auto& a = expect<MonPtr>(source, "monoidal category");
        const auto& b = expect<MonPtr>(target, "monoidal category");
        ps = present_monoidal(*a);
        pt = present_monoidal(*b);
        build = [a, b](const Assignment& x) -> StructureMap {
            return make_strict_monoidal_functor(a, b, FinFunctor{a->base, b->base, x[0], x[1]});
        };
        break;
    }
    case MapKind::twocat: {
        const auto& a = expect<TwoPtr>(source, "2-category");
        const auto& b = expect<TwoPtr>(target, "2-category");
        ps = present_2category(*a);
        pt = present_2category(*b);
        build = [a, b](const Assignment& x) -> StructureMap { return make_strict_2functor(a, b, x[0], x[1], x[2]); };
        break;
    }
    case MapKind::dbl: {
        const auto& a = expect<DblPtr>(source, "double category");
        const auto& b = expect<DblPtr>(target, "double category");
        ps = present_double(*a);
        pt = present_double(*b);
        build = [a, b](const Assignment& x) -> StructureMap {
            return make_strict_double_functor(a, b, x[0], x[1], x[2], x[3]);
        };
        break;
    }
    }
    auto r = enumerate_homomorphisms(
        ps, pt, [&](const Assignment& x) { return predicate(build(x)); }, budget);
    return convert<StructureMap>(r, build);
}

SearchOutcome<StructureMap> enumerate_maps(std::string_view kind, const Structure& source, const Structure& target,
                                           const std::function<bool(const StructureMap&)>& predicate,
                                           const SearchBudget& budget) {
    return enumerate_maps(parse_map_kind(kind), source, target, predicate, budget);
}

namespace {

template <class T>
SearchOutcome<T> typed(MapKind k, const Structure& a, const Structure& b, const std::function<bool(const T&)>& pred,
                       const SearchBudget& budget) {
    auto r = enumerate_maps(
        k, a, b, [&](const StructureMap& m) { return pred(std::get<T>(m)); }, budget);
    SearchOutcome<T> out;
    out.status = r.status;
    out.candidates_examined = r.candidates_examined;
    if (r.witness) out.witness = std::get<T>(*r.witness);
    return out;
}

}  // namespace

SearchOutcome<FinFunctor> find_functor(const CatPtr& a, const CatPtr& b,
                                       const std::function<bool(const FinFunctor&)>& predicate,
                                       const SearchBudget& budget) {
    return typed<FinFunctor>(MapKind::cat, a, b, predicate, budget);
}

std::vector<FinFunctor> all_functors(const CatPtr& a, const CatPtr& b, const SearchBudget& budget) {
    std::vector<FinFunctor> out;
    auto r = find_functor(
        a, b,
        [&](const FinFunctor& f) {
            out.push_back(f);
            return false;
        },
        budget);
    if (r.status == SearchStatus::budget) throw StructuralError("functor enumeration exceeded its budget");
    return out;
}

SearchOutcome<MonoidalFunctorData> find_strict_monoidal_functor(
    const MonPtr& a, const MonPtr& b, const std::function<bool(const MonoidalFunctorData&)>& predicate,
    const SearchBudget& budget) {
    return typed<MonoidalFunctorData>(MapKind::mon, a, b, predicate, budget);
}

SearchOutcome<Pseudofunctor2> find_strict_2functor(const TwoPtr& a, const TwoPtr& b,
                                                   const std::function<bool(const Pseudofunctor2&)>& predicate,
                                                   const SearchBudget& budget) {
    return typed<Pseudofunctor2>(MapKind::twocat, a, b, predicate, budget);
}

SearchOutcome<DoublePseudofunctor> find_strict_double_functor(
    const DblPtr& a, const DblPtr& b, const std::function<bool(const DoublePseudofunctor&)>& predicate,
    const SearchBudget& budget) {
    return typed<DoublePseudofunctor>(MapKind::dbl, a, b, predicate, budget);
}

SearchOutcome<FinFunctor> oracle_equivalence_cat(const CatPtr& a, const CatPtr& b, const SearchBudget& budget) {
    return find_functor(
        a, b, [](const FinFunctor& f) { return check_functor_properties(f).equivalence(); }, budget);
}

std::vector<std::vector<std::size_t>> oracle_partition(const std::vector<CatPtr>& catalog,
                                                       const SearchBudget& budget) {
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        bool placed = false;
        for (auto& b : blocks) {
            auto r = oracle_equivalence_cat(catalog[i], catalog[b.front()], budget);
            if (r.status == SearchStatus::budget) throw StructuralError("oracle search exceeded its budget");
            if (r.found()) {
                b.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) blocks.push_back({i});
    }
    return blocks;
}

}  // namespace fincat
