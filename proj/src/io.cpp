#include "fincat/io.hpp"

#include <fstream>
#include <map>
#include <memory>

namespace fincat {

std::string to_string(ParseError::Kind k) {
    switch (k) {
    case ParseError::Kind::io: return "io";
    case ParseError::Kind::syntax: return "syntax";
    case ParseError::Kind::unknown_kind: return "unknown-kind";
    case ParseError::Kind::dangling: return "dangling-identifier";
    case ParseError::Kind::partial: return "partial-table";
    case ParseError::Kind::malformed: return "malformed";
    case ParseError::Kind::invalid: return "invalid";
    }
    return "?";
}

namespace {

using K = ParseError::Kind;
namespace fs = std::filesystem;

std::string at(const std::string& loc, const std::string& key) { return loc.empty() ? key : loc + "." + key; }
std::string idx(const std::string& loc, std::size_t i) { return loc + "[" + std::to_string(i) + "]"; }

const json& need(const json& o, const std::string& key, const std::string& loc) {
    if (!o.is_object()) throw ParseError(K::malformed, loc, "expected an object");
    auto it = o.find(key);
    if (it == o.end()) throw ParseError(K::malformed, at(loc, key), "missing field");
    return *it;
}

const json& need_array(const json& o, const std::string& key, const std::string& loc) {
    const json& v = need(o, key, loc);
    if (!v.is_array()) throw ParseError(K::malformed, at(loc, key), "expected an array");
    return v;
}

const json& need_object(const json& o, const std::string& key, const std::string& loc) {
    const json& v = need(o, key, loc);
    if (!v.is_object()) throw ParseError(K::malformed, at(loc, key), "expected an object");
    return v;
}

std::string str(const json& v, const std::string& loc) {
    if (!v.is_string()) throw ParseError(K::malformed, loc, "expected a string");
    return v.get<std::string>();
}

Id ref(const NameIndex& ix, const json& v, const std::string& loc, const char* what) {
    auto name = str(v, loc);
    auto i = ix.find(name);
    if (!i) throw ParseError(K::dangling, loc, std::string("unknown ") + what + " '" + name + "'");
    return *i;
}

Id field_ref(const NameIndex& ix, const json& o, const std::string& key, const std::string& loc, const char* what) {
    return ref(ix, need(o, key, loc), at(loc, key), what);
}

void add_name(NameIndex& ix, const std::string& name, const std::string& loc) {
    if (ix.find(name)) throw ParseError(K::malformed, loc, "duplicate identifier '" + name + "'");
    ix.add(name);
}

void read_names(NameIndex& ix, const json& o, const std::string& key, const std::string& loc) {
    const json& a = need_array(o, key, loc);
    for (std::size_t i = 0; i < a.size(); ++i) add_name(ix, str(a[i], idx(at(loc, key), i)), idx(at(loc, key), i));
}

// Total map between name sets, given as a json object.
std::vector<Id> read_map(const json& o, const std::string& key, const std::string& loc, const NameIndex& from,
                         const NameIndex& to, const char* what_from, const char* what_to) {
    const json& m = need_object(o, key, loc);
    std::vector<Id> out(from.size(), -1);
    for (const auto& [k, v] : m.items()) {
        const std::string l = at(at(loc, key), k);
        auto i = from.find(k);
        if (!i) throw ParseError(K::dangling, l, std::string("unknown ") + what_from + " '" + k + "'");
        out[static_cast<std::size_t>(*i)] = ref(to, v, l, what_to);
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i] < 0) throw ParseError(K::partial, at(loc, key), "no entry for '" + from.name(to_id(i)) + "'");
    return out;
}

// Cells with boundary, identities and composition of one category whose
// objects are already in place.
void read_cells(FinCategory& c, const json& o, const std::string& loc, const std::string& mors,
                const std::string& ids, const std::string& comp) {
    const json& ms = need_array(o, mors, loc);
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const std::string l = idx(at(loc, mors), i);
        add_name(c.morphisms, str(need(ms[i], "id", l), at(l, "id")), at(l, "id"));
        c.src.push_back(field_ref(c.objects, ms[i], "src", l, "object"));
        c.tgt.push_back(field_ref(c.objects, ms[i], "tgt", l, "object"));
    }
    c.identities = read_map(o, ids, loc, c.objects, c.morphisms, "object", "cell");
    const json& cs = need_array(o, comp, loc);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const std::string l = idx(at(loc, comp), i);
        Id g = field_ref(c.morphisms, cs[i], "g", l, "cell");
        Id f = field_ref(c.morphisms, cs[i], "f", l, "cell");
        c.composition.set(g, f, field_ref(c.morphisms, cs[i], "result", l, "cell"));
    }
}

template <class Fn>
void guarded(const std::string& loc, Fn&& fn) {
    try {
        fn();
    } catch (const ParseError&) {
        throw;
    } catch (const StructuralError& e) {
        throw ParseError(K::malformed, loc, e.what());
    }
}

void check(const ValidationReport& r, const std::string& loc, const std::map<std::string, std::string>& totals) {
    if (r.ok()) return;
    if (auto it = totals.find(r.axiom); it != totals.end())
        throw ParseError(K::partial, at(loc, it->second), r.describe());
    throw ParseError(K::invalid, loc, r.describe());
}

bool read_strict(const json& o) {
    auto it = o.find("strict");
    return it != o.end() && it->is_boolean() && it->get<bool>();
}

template <class T>
T sub(const json& o, const std::string& key, const std::string& loc, const fs::path& base, const char* what) {
    const json& v = need(o, key, loc);
    const std::string l = at(loc, key);
    AnyStructure s;
    try {
        if (v.is_string())
            s = parse_structure_file(base / v.get<std::string>(), true);
        else
            s = parse_structure(v, base, true);
    } catch (const ParseError& e) {
        throw ParseError(e.kind(), e.location().empty() ? l : l + ">" + e.location(), e.message());
    }
    if (auto* p = std::get_if<T>(&s)) return *p;
    throw ParseError(K::malformed, l, std::string("expected a ") + what);
}

CatPtr parse_category(const json& o, const std::string& loc, bool validate) {
    auto c = std::make_shared<FinCategory>();
    read_names(c->objects, o, "objects", loc);
    read_cells(*c, o, loc, "morphisms", "identities", "compose");
    guarded(loc, [&] { c->finalize(); });
    if (validate) check(validate_category(*c), loc, {{"composition-total", "compose"}});
    return c;
}

FinFunctor parse_functor(const json& o, const std::string& loc, const fs::path& base, bool validate) {
    FinFunctor F;
    F.source = sub<CatPtr>(o, "source", loc, base, "category");
    F.target = sub<CatPtr>(o, "target", loc, base, "category");
    F.obj_map = read_map(o, "obj_map", loc, F.source->objects, F.target->objects, "object", "object");
    F.mor_map = read_map(o, "mor_map", loc, F.source->morphisms, F.target->morphisms, "morphism", "morphism");
    if (validate) check(validate_functor(F), loc, {});
    return F;
}

MonPtr parse_monoidal(const json& o, const std::string& loc, bool validate) {
    auto m = std::make_shared<MonoidalStructure>();
    m->base = parse_category(o, loc, true);
    const auto& c = *m->base;
    const auto n = c.object_count();
    const json& to = need_array(o, "tensor_obj", loc);
    for (std::size_t i = 0; i < to.size(); ++i) {
        const std::string l = idx(at(loc, "tensor_obj"), i);
        Id a = field_ref(c.objects, to[i], "a", l, "object");
        Id b = field_ref(c.objects, to[i], "b", l, "object");
        m->tensor_obj.set(a, b, field_ref(c.objects, to[i], "result", l, "object"));
    }
    const json& tm = need_array(o, "tensor_mor", loc);
    for (std::size_t i = 0; i < tm.size(); ++i) {
        const std::string l = idx(at(loc, "tensor_mor"), i);
        Id f = field_ref(c.morphisms, tm[i], "f", l, "morphism");
        Id g = field_ref(c.morphisms, tm[i], "g", l, "morphism");
        m->tensor_mor.set(f, g, field_ref(c.morphisms, tm[i], "result", l, "morphism"));
    }
    m->unit = ref(c.objects, need(o, "unit", loc), at(loc, "unit"), "object");
    m->associator.assign(n * n * n, -1);
    const json& as = need_array(o, "associator", loc);
    for (std::size_t i = 0; i < as.size(); ++i) {
        const std::string l = idx(at(loc, "associator"), i);
        auto a = static_cast<std::size_t>(field_ref(c.objects, as[i], "a", l, "object"));
        auto b = static_cast<std::size_t>(field_ref(c.objects, as[i], "b", l, "object"));
        auto x = static_cast<std::size_t>(field_ref(c.objects, as[i], "c", l, "object"));
        m->associator[a * n * n + b * n + x] = field_ref(c.morphisms, as[i], "morphism", l, "morphism");
    }
    for (Id v : m->associator)
        if (v < 0) throw ParseError(K::partial, at(loc, "associator"), "an object triple has no component");
    const json& un = need_object(o, "unitors", loc);
    m->left_unitor = read_map(un, "left", at(loc, "unitors"), c.objects, c.morphisms, "object", "morphism");
    m->right_unitor = read_map(un, "right", at(loc, "unitors"), c.objects, c.morphisms, "object", "morphism");
    if (validate) check(validate_monoidal(*m), loc, {{"partial-tensor", "tensor_obj"}});
    return m;
}

MonoidalFunctorData parse_monoidal_functor(const json& o, const std::string& loc, const fs::path& base,
                                           bool validate) {
    MonoidalFunctorData d;
    d.source = sub<MonPtr>(o, "source", loc, base, "monoidal category");
    d.target = sub<MonPtr>(o, "target", loc, base, "monoidal category");
    const auto& A = *d.source->base;
    const auto& B = *d.target->base;
    d.underlying = {d.source->base, d.target->base, {}, {}};
    d.underlying.obj_map = read_map(o, "obj_map", loc, A.objects, B.objects, "object", "object");
    d.underlying.mor_map = read_map(o, "mor_map", loc, A.morphisms, B.morphisms, "morphism", "morphism");
    const auto n = A.object_count();
    d.phi.assign(n * n, -1);
    const json& ph = need_array(o, "phi", loc);
    for (std::size_t i = 0; i < ph.size(); ++i) {
        const std::string l = idx(at(loc, "phi"), i);
        auto a = static_cast<std::size_t>(field_ref(A.objects, ph[i], "a", l, "object"));
        auto b = static_cast<std::size_t>(field_ref(A.objects, ph[i], "b", l, "object"));
        d.phi[a * n + b] = field_ref(B.morphisms, ph[i], "morphism", l, "morphism");
    }
    for (Id v : d.phi)
        if (v < 0) throw ParseError(K::partial, at(loc, "phi"), "an object pair has no component");
    d.phi_unit = ref(B.morphisms, need(o, "phi_unit", loc), at(loc, "phi_unit"), "morphism");
    d.strict = read_strict(o);
    if (validate) check(validate_monoidal_functor(d).validation, loc, {});
    return d;
}

TwoPtr parse_2category(const json& o, const std::string& loc, bool validate) {
    auto k = std::make_shared<Fin2Category>();
    read_names(k->one.objects, o, "cells0", loc);
    read_cells(k->one, o, loc, "cells1", "identities1", "hcomp1");
    guarded(loc, [&] { k->one.finalize(); });
    const json& c2 = need_array(o, "cells2", loc);
    for (std::size_t i = 0; i < c2.size(); ++i) {
        const std::string l = idx(at(loc, "cells2"), i);
        add_name(k->cells2, str(need(c2[i], "id", l), at(l, "id")), at(l, "id"));
        k->src2.push_back(field_ref(k->one.morphisms, c2[i], "src", l, "1-cell"));
        k->tgt2.push_back(field_ref(k->one.morphisms, c2[i], "tgt", l, "1-cell"));
    }
    k->id2 = read_map(o, "identities2", loc, k->one.morphisms, k->cells2, "1-cell", "2-cell");
    for (const char* key : {"vcomp", "hcomp2"}) {
        const json& t = need_array(o, key, loc);
        PairTable& tab = std::string(key) == "vcomp" ? k->vcomp : k->hcomp;
        for (std::size_t i = 0; i < t.size(); ++i) {
            const std::string l = idx(at(loc, key), i);
            Id b = field_ref(k->cells2, t[i], "b", l, "2-cell");
            Id a = field_ref(k->cells2, t[i], "a", l, "2-cell");
            tab.set(b, a, field_ref(k->cells2, t[i], "result", l, "2-cell"));
        }
    }
    guarded(loc, [&] { k->finalize(); });
    if (validate)
        check(validate_2category(*k), loc,
              {{"composition-total", "hcomp1"}, {"vcomp-total", "vcomp"}, {"hcomp-total", "hcomp2"}});
    return k;
}

Pseudofunctor2 parse_pseudofunctor(const json& o, const std::string& loc, const fs::path& base, bool validate) {
    Pseudofunctor2 F;
    F.source = sub<TwoPtr>(o, "source", loc, base, "2-category");
    F.target = sub<TwoPtr>(o, "target", loc, base, "2-category");
    const auto& A = *F.source;
    const auto& B = *F.target;
    F.map0 = read_map(o, "map0", loc, A.one.objects, B.one.objects, "0-cell", "0-cell");
    F.map1 = read_map(o, "map1", loc, A.one.morphisms, B.one.morphisms, "1-cell", "1-cell");
    F.map2 = read_map(o, "map2", loc, A.cells2, B.cells2, "2-cell", "2-cell");
    const json& cc = need_array(o, "comp_cells", loc);
    for (std::size_t i = 0; i < cc.size(); ++i) {
        const std::string l = idx(at(loc, "comp_cells"), i);
        Id g = field_ref(A.one.morphisms, cc[i], "g", l, "1-cell");
        Id f = field_ref(A.one.morphisms, cc[i], "f", l, "1-cell");
        F.comp_cells.set(g, f, field_ref(B.cells2, cc[i], "cell", l, "2-cell"));
    }
    F.unit_cells = read_map(o, "unit_cells", loc, A.one.objects, B.cells2, "0-cell", "2-cell");
    F.strict = read_strict(o);
    if (validate) check(validate_pseudofunctor(F).report, loc, {});
    return F;
}

DblPtr parse_double(const json& o, const std::string& loc, bool validate) {
    auto d = std::make_shared<FinDoubleCategory>();
    read_names(d->horizontal.objects, o, "objects", loc);
    d->vertical.objects = d->horizontal.objects;
    read_cells(d->horizontal, o, loc, "hcells", "hidentities", "hcompose");
    read_cells(d->vertical, o, loc, "vcells", "videntities", "vcompose");
    guarded(loc, [&] {
        d->horizontal.finalize();
        d->vertical.finalize();
    });
    const json& sq = need_array(o, "squares", loc);
    for (std::size_t i = 0; i < sq.size(); ++i) {
        const std::string l = idx(at(loc, "squares"), i);
        add_name(d->squares, str(need(sq[i], "id", l), at(l, "id")), at(l, "id"));
        d->boundary.push_back({field_ref(d->horizontal.morphisms, sq[i], "top", l, "horizontal cell"),
                               field_ref(d->horizontal.morphisms, sq[i], "bottom", l, "horizontal cell"),
                               field_ref(d->vertical.morphisms, sq[i], "left", l, "vertical cell"),
                               field_ref(d->vertical.morphisms, sq[i], "right", l, "vertical cell")});
    }
    const json& hc = need_array(o, "hcomp_sq", loc);
    for (std::size_t i = 0; i < hc.size(); ++i) {
        const std::string l = idx(at(loc, "hcomp_sq"), i);
        Id a = field_ref(d->squares, hc[i], "left", l, "square");
        Id b = field_ref(d->squares, hc[i], "right", l, "square");
        d->hcomp_table.set(a, b, field_ref(d->squares, hc[i], "result", l, "square"));
    }
    const json& vc = need_array(o, "vcomp_sq", loc);
    for (std::size_t i = 0; i < vc.size(); ++i) {
        const std::string l = idx(at(loc, "vcomp_sq"), i);
        Id a = field_ref(d->squares, vc[i], "top", l, "square");
        Id b = field_ref(d->squares, vc[i], "bottom", l, "square");
        d->vcomp_table.set(a, b, field_ref(d->squares, vc[i], "result", l, "square"));
    }
    d->hid_table = read_map(o, "hid_sq", loc, d->horizontal.morphisms, d->squares, "horizontal cell", "square");
    d->vid_table = read_map(o, "vid_sq", loc, d->vertical.morphisms, d->squares, "vertical cell", "square");
    guarded(loc, [&] { d->finalize(); });
    if (validate)
        check(validate_double_category(*d), loc,
              {{"horizontal composition-total", "hcompose"},
               {"vertical composition-total", "vcompose"},
               {"hcomp-total", "hcomp_sq"},
               {"vcomp-total", "vcomp_sq"}});
    return d;
}

DoublePseudofunctor parse_double_functor(const json& o, const std::string& loc, const fs::path& base,
                                         bool validate) {
    DoublePseudofunctor F;
    F.source = sub<DblPtr>(o, "source", loc, base, "double category");
    F.target = sub<DblPtr>(o, "target", loc, base, "double category");
    const auto& A = *F.source;
    const auto& B = *F.target;
    F.map0 = read_map(o, "map0", loc, A.horizontal.objects, B.horizontal.objects, "object", "object");
    F.maph = read_map(o, "maph", loc, A.horizontal.morphisms, B.horizontal.morphisms, "horizontal cell",
                      "horizontal cell");
    F.mapv = read_map(o, "mapv", loc, A.vertical.morphisms, B.vertical.morphisms, "vertical cell", "vertical cell");
    F.mapsq = read_map(o, "mapsq", loc, A.squares, B.squares, "square", "square");
    const json& hc = need_array(o, "hcomp_cells", loc);
    for (std::size_t i = 0; i < hc.size(); ++i) {
        const std::string l = idx(at(loc, "hcomp_cells"), i);
        Id g = field_ref(A.horizontal.morphisms, hc[i], "g", l, "horizontal cell");
        Id f = field_ref(A.horizontal.morphisms, hc[i], "f", l, "horizontal cell");
        F.hcomp_cells.set(g, f, field_ref(B.squares, hc[i], "square", l, "square"));
    }
    const json& vc = need_array(o, "vcomp_cells", loc);
    for (std::size_t i = 0; i < vc.size(); ++i) {
        const std::string l = idx(at(loc, "vcomp_cells"), i);
        Id t = field_ref(A.vertical.morphisms, vc[i], "t", l, "vertical cell");
        Id s = field_ref(A.vertical.morphisms, vc[i], "s", l, "vertical cell");
        F.vcomp_cells.set(t, s, field_ref(B.squares, vc[i], "square", l, "square"));
    }
    F.hunit_cells = read_map(o, "hunit_cells", loc, A.horizontal.objects, B.squares, "object", "square");
    F.vunit_cells = read_map(o, "vunit_cells", loc, A.horizontal.objects, B.squares, "object", "square");
    F.strict = read_strict(o);
    if (validate) check(validate_double_pseudofunctor(F).report, loc, {});
    return F;
}

}  // namespace

std::string kind_name(const AnyStructure& s) {
    static const char* names[] = {"category",      "functor",       "monoidal",       "monoidal_functor",
                                  "2category",     "pseudofunctor", "doublecategory", "double_functor"};
    return names[s.index()];
}

AnyStructure parse_structure(const json& j, const fs::path& base_dir, bool validate) {
    if (!j.is_object()) throw ParseError(K::malformed, "", "expected a json object");
    const std::string kind = str(need(j, "kind", ""), "kind");
    if (kind == "category") return parse_category(j, "", validate);
    if (kind == "functor") return parse_functor(j, "", base_dir, validate);
    if (kind == "monoidal") return parse_monoidal(j, "", validate);
    if (kind == "monoidal_functor") return parse_monoidal_functor(j, "", base_dir, validate);
    if (kind == "2category") return parse_2category(j, "", validate);
    if (kind == "pseudofunctor") return parse_pseudofunctor(j, "", base_dir, validate);
    if (kind == "doublecategory") return parse_double(j, "", validate);
    if (kind == "double_functor") return parse_double_functor(j, "", base_dir, validate);
    throw ParseError(K::unknown_kind, "kind", "unknown kind '" + kind + "'");
}

AnyStructure parse_structure_file(const fs::path& path, bool validate) {
    std::ifstream in(path);
    if (!in) throw ParseError(K::io, "", "cannot open " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(K::syntax, "byte " + std::to_string(e.byte), e.what());
    }
    return parse_structure(j, path.parent_path(), validate);
}

namespace {

json cells_json(const FinCategory& c) {
    json a = json::array();
    for (Id f = 0; f < to_id(c.morphism_count()); ++f)
        a.push_back({{"id", c.morphism_name(f)}, {"src", c.object_name(c.src[f])}, {"tgt", c.object_name(c.tgt[f])}});
    return a;
}

json identities_json(const FinCategory& c) {
    json m = json::object();
    for (Id a = 0; a < to_id(c.object_count()); ++a) m[c.object_name(a)] = c.morphism_name(c.identity(a));
    return m;
}

json compose_json(const FinCategory& c) {
    json a = json::array();
    for (const auto& [k, r] : c.composition.sorted_entries())
        a.push_back({{"g", c.morphism_name(k.first)}, {"f", c.morphism_name(k.second)}, {"result", c.morphism_name(r)}});
    return a;
}

json map_json(const std::vector<Id>& m, const NameIndex& from, const NameIndex& to) {
    json o = json::object();
    for (std::size_t i = 0; i < m.size(); ++i) o[from.name(to_id(i))] = to.name(m[i]);
    return o;
}

}  // namespace

json to_json(const FinCategory& c) {
    return {{"kind", "category"},
            {"objects", c.objects.names()},
            {"morphisms", cells_json(c)},
            {"identities", identities_json(c)},
            {"compose", compose_json(c)}};
}

json to_json(const FinFunctor& f) {
    return {{"kind", "functor"},
            {"source", to_json(*f.source)},
            {"target", to_json(*f.target)},
            {"obj_map", map_json(f.obj_map, f.source->objects, f.target->objects)},
            {"mor_map", map_json(f.mor_map, f.source->morphisms, f.target->morphisms)}};
}

json to_json(const MonoidalStructure& m) {
    const auto& c = *m.base;
    json j = to_json(c);
    j["kind"] = "monoidal";
    json to = json::array(), tm = json::array(), as = json::array();
    for (const auto& [k, r] : m.tensor_obj.sorted_entries())
        to.push_back({{"a", c.object_name(k.first)}, {"b", c.object_name(k.second)}, {"result", c.object_name(r)}});
    for (const auto& [k, r] : m.tensor_mor.sorted_entries())
        tm.push_back(
            {{"f", c.morphism_name(k.first)}, {"g", c.morphism_name(k.second)}, {"result", c.morphism_name(r)}});
    const auto n = to_id(c.object_count());
    for (Id a = 0; a < n; ++a)
        for (Id b = 0; b < n; ++b)
            for (Id x = 0; x < n; ++x)
                as.push_back({{"a", c.object_name(a)},
                              {"b", c.object_name(b)},
                              {"c", c.object_name(x)},
                              {"morphism", c.morphism_name(m.assoc(a, b, x))}});
    j["tensor_obj"] = to;
    j["tensor_mor"] = tm;
    j["unit"] = c.object_name(m.unit);
    j["associator"] = as;
    j["unitors"] = {{"left", map_json(m.left_unitor, c.objects, c.morphisms)},
                    {"right", map_json(m.right_unitor, c.objects, c.morphisms)}};
    return j;
}

json to_json(const MonoidalFunctorData& d) {
    const auto& A = *d.source->base;
    const auto& B = *d.target->base;
    json ph = json::array();
    const auto n = to_id(A.object_count());
    for (Id a = 0; a < n; ++a)
        for (Id b = 0; b < n; ++b)
            ph.push_back({{"a", A.object_name(a)}, {"b", A.object_name(b)}, {"morphism", B.morphism_name(d.phi_at(a, b))}});
    return {{"kind", "monoidal_functor"},
            {"source", to_json(*d.source)},
            {"target", to_json(*d.target)},
            {"obj_map", map_json(d.underlying.obj_map, A.objects, B.objects)},
            {"mor_map", map_json(d.underlying.mor_map, A.morphisms, B.morphisms)},
            {"phi", ph},
            {"phi_unit", B.morphism_name(d.phi_unit)},
            {"strict", d.strict}};
}

json to_json(const Fin2Category& k) {
    json c2 = json::array(), v = json::array(), h = json::array();
    for (Id t = 0; t < to_id(k.count2()); ++t)
        c2.push_back({{"id", k.name2(t)}, {"src", k.name1(k.src2[t])}, {"tgt", k.name1(k.tgt2[t])}});
    for (const auto& [p, r] : k.vcomp.sorted_entries())
        v.push_back({{"b", k.name2(p.first)}, {"a", k.name2(p.second)}, {"result", k.name2(r)}});
    for (const auto& [p, r] : k.hcomp.sorted_entries())
        h.push_back({{"b", k.name2(p.first)}, {"a", k.name2(p.second)}, {"result", k.name2(r)}});
    return {{"kind", "2category"},
            {"cells0", k.one.objects.names()},
            {"cells1", cells_json(k.one)},
            {"identities1", identities_json(k.one)},
            {"hcomp1", compose_json(k.one)},
            {"cells2", c2},
            {"identities2", map_json(k.id2, k.one.morphisms, k.cells2)},
            {"vcomp", v},
            {"hcomp2", h}};
}

json to_json(const Pseudofunctor2& F) {
    const auto& A = *F.source;
    const auto& B = *F.target;
    json cc = json::array();
    for (const auto& [p, r] : F.comp_cells.sorted_entries())
        cc.push_back({{"g", A.name1(p.first)}, {"f", A.name1(p.second)}, {"cell", B.name2(r)}});
    return {{"kind", "pseudofunctor"},
            {"source", to_json(A)},
            {"target", to_json(B)},
            {"map0", map_json(F.map0, A.one.objects, B.one.objects)},
            {"map1", map_json(F.map1, A.one.morphisms, B.one.morphisms)},
            {"map2", map_json(F.map2, A.cells2, B.cells2)},
            {"comp_cells", cc},
            {"unit_cells", map_json(F.unit_cells, A.one.objects, B.cells2)},
            {"strict", F.strict}};
}

json to_json(const FinDoubleCategory& d) {
    json sq = json::array(), hc = json::array(), vc = json::array();
    for (Id q = 0; q < to_id(d.square_count()); ++q) {
        const auto& b = d.frame(q);
        sq.push_back({{"id", d.sname(q)},
                      {"top", d.hname(b.top)},
                      {"bottom", d.hname(b.bottom)},
                      {"left", d.vname(b.left)},
                      {"right", d.vname(b.right)}});
    }
    for (const auto& [p, r] : d.hcomp_table.sorted_entries())
        hc.push_back({{"left", d.sname(p.first)}, {"right", d.sname(p.second)}, {"result", d.sname(r)}});
    for (const auto& [p, r] : d.vcomp_table.sorted_entries())
        vc.push_back({{"top", d.sname(p.first)}, {"bottom", d.sname(p.second)}, {"result", d.sname(r)}});
    return {{"kind", "doublecategory"},
            {"objects", d.horizontal.objects.names()},
            {"hcells", cells_json(d.horizontal)},
            {"hidentities", identities_json(d.horizontal)},
            {"hcompose", compose_json(d.horizontal)},
            {"vcells", cells_json(d.vertical)},
            {"videntities", identities_json(d.vertical)},
            {"vcompose", compose_json(d.vertical)},
            {"squares", sq},
            {"hcomp_sq", hc},
            {"vcomp_sq", vc},
            {"hid_sq", map_json(d.hid_table, d.horizontal.morphisms, d.squares)},
            {"vid_sq", map_json(d.vid_table, d.vertical.morphisms, d.squares)}};
}

json to_json(const DoublePseudofunctor& F) {
    const auto& A = *F.source;
    const auto& B = *F.target;
    json hc = json::array(), vc = json::array();
    for (const auto& [p, r] : F.hcomp_cells.sorted_entries())
        hc.push_back({{"g", A.hname(p.first)}, {"f", A.hname(p.second)}, {"square", B.sname(r)}});
    for (const auto& [p, r] : F.vcomp_cells.sorted_entries())
        vc.push_back({{"t", A.vname(p.first)}, {"s", A.vname(p.second)}, {"square", B.sname(r)}});
    return {{"kind", "double_functor"},
            {"source", to_json(A)},
            {"target", to_json(B)},
            {"map0", map_json(F.map0, A.horizontal.objects, B.horizontal.objects)},
            {"maph", map_json(F.maph, A.horizontal.morphisms, B.horizontal.morphisms)},
            {"mapv", map_json(F.mapv, A.vertical.morphisms, B.vertical.morphisms)},
            {"mapsq", map_json(F.mapsq, A.squares, B.squares)},
            {"hcomp_cells", hc},
            {"hunit_cells", map_json(F.hunit_cells, A.horizontal.objects, B.squares)},
            {"vcomp_cells", vc},
            {"vunit_cells", map_json(F.vunit_cells, A.horizontal.objects, B.squares)},
            {"strict", F.strict}};
}

json to_json(const AnyStructure& s) {
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, CatPtr> || std::is_same_v<T, MonPtr> || std::is_same_v<T, TwoPtr> ||
                          std::is_same_v<T, DblPtr>)
                return to_json(*x);
            else
                return to_json(x);
        },
        s);
}

void write_json_file(const fs::path& path, const json& j) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw ParseError(K::io, "", "cannot write " + path.string());
    out << j.dump(1) << "\n";
}

}  // namespace fincat
