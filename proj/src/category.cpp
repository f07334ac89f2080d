#include "fincat/category.hpp"

namespace fincat {

Id FinCategory::compose_at(Id g, Id f) const {
    auto r = composition.get(g, f);
    if (!r)
        throw StructuralError("composite " + morphism_name(g) + " . " + morphism_name(f) +
                              " is not in the table");
    return *r;
}

Id FinCategory::compose_path(const std::vector<Id>& path) const {
    if (path.empty()) throw StructuralError("empty composition path");
    Id acc = path.back();
    for (std::size_t i = path.size() - 1; i-- > 0;) acc = compose_at(path[i], acc);
    return acc;
}

std::optional<Id> FinCategory::inverse(Id f) const {
    const Id a = src[f], b = tgt[f];
    for (Id g : hom(b, a)) {
        auto gf = composition.get(g, f);
        auto fg = composition.get(f, g);
        if (gf && fg && *gf == identities[a] && *fg == identities[b]) return g;
    }
    return std::nullopt;
}

void FinCategory::finalize() {
    const auto n = static_cast<Id>(objects.size());
    const auto m = static_cast<Id>(morphisms.size());
    if (src.size() != morphisms.size() || tgt.size() != morphisms.size())
        throw StructuralError("src/tgt tables do not cover every morphism");
    if (identities.size() != objects.size())
        throw StructuralError("identity table does not cover every object");
    for (Id f = 0; f < m; ++f)
        if (src[f] < 0 || src[f] >= n || tgt[f] < 0 || tgt[f] >= n)
            throw StructuralError("morphism '" + morphisms.name(f) + "' has a dangling endpoint");
    for (Id a = 0; a < n; ++a)
        if (identities[a] < 0 || identities[a] >= m)
            throw StructuralError("identity of object '" + objects.name(a) + "' is dangling");
    composition.for_each([&](Id g, Id f, Id r) {
        if (g < 0 || g >= m || f < 0 || f >= m || r < 0 || r >= m)
            throw StructuralError("composition table refers to an unknown morphism");
    });
    homs_.assign(objects.size() * objects.size(), {});
    for (Id f = 0; f < m; ++f)
        homs_[static_cast<std::size_t>(src[f]) * objects.size() + static_cast<std::size_t>(tgt[f])].push_back(f);
}

CategoryBuilder& CategoryBuilder::object(const std::string& name) {
    objects_.push_back(name);
    return *this;
}

CategoryBuilder& CategoryBuilder::morphism(const std::string& name, const std::string& s, const std::string& t) {
    morphisms_.push_back({name, s, t});
    return *this;
}

CategoryBuilder& CategoryBuilder::compose(const std::string& g, const std::string& f, const std::string& r) {
    compositions_.push_back({g, f, r});
    return *this;
}

FinCategory CategoryBuilder::build() const {
    FinCategory c;
    for (const auto& o : objects_) c.objects.add(o);
    for (const auto& o : objects_) {
        Id a = c.objects.at(o, "object");
        c.identities.push_back(c.morphisms.add("1_" + o));
        c.src.push_back(a);
        c.tgt.push_back(a);
    }
    for (const auto& m : morphisms_) {
        c.morphisms.add(m.name);
        c.src.push_back(c.objects.at(m.src, "object"));
        c.tgt.push_back(c.objects.at(m.tgt, "object"));
    }
    for (Id f = 0; f < to_id(c.morphisms.size()); ++f) {
        c.composition.set(f, c.identities[c.src[f]], f);
        c.composition.set(c.identities[c.tgt[f]], f, f);
    }
    for (const auto& k : compositions_)
        c.composition.set(c.morphisms.at(k.g, "morphism"), c.morphisms.at(k.f, "morphism"),
                          c.morphisms.at(k.result, "morphism"));
    c.finalize();
    return c;
}

ValidationReport validate_category(const FinCategory& c) {
    const auto n = to_id(c.object_count());
    const auto m = to_id(c.morphism_count());
    if (c.src.size() != c.morphism_count() || c.tgt.size() != c.morphism_count() ||
        c.identities.size() != c.object_count())
        return ValidationReport::structural("table-size", "src/tgt/identity tables incomplete");
    for (Id f = 0; f < m; ++f)
        if (c.src[f] < 0 || c.src[f] >= n || c.tgt[f] < 0 || c.tgt[f] >= n)
            return ValidationReport::structural("dangling-identifier", c.morphism_name(f));
    for (Id a = 0; a < n; ++a)
        if (c.identities[a] < 0 || c.identities[a] >= m)
            return ValidationReport::structural("dangling-identifier", "identity of " + c.object_name(a));
    bool dangling = false;
    c.composition.for_each([&](Id g, Id f, Id r) {
        if (g < 0 || g >= m || f < 0 || f >= m || r < 0 || r >= m) dangling = true;
    });
    if (dangling) return ValidationReport::structural("dangling-identifier", "composition table");

    auto mn = [&](Id f) { return c.morphism_name(f); };
    auto pair_str = [&](Id g, Id f) { return "(" + mn(g) + ", " + mn(f) + ")"; };

    for (Id a = 0; a < n; ++a) {
        Id i = c.identities[a];
        if (c.src[i] != a || c.tgt[i] != a)
            return ValidationReport::fail("identity-boundary", c.object_name(a));
    }
    // Defined exactly on composable pairs, with the right boundary.
    std::optional<ValidationReport> bad;
    c.composition.for_each([&](Id g, Id f, Id r) {
        if (bad) return;
        if (c.tgt[f] != c.src[g])
            bad = ValidationReport::fail("composition-domain", pair_str(g, f) + " is not composable");
        else if (c.src[r] != c.src[f] || c.tgt[r] != c.tgt[g])
            bad = ValidationReport::fail("composition-boundary", pair_str(g, f) + " -> " + mn(r));
    });
    if (bad) return *bad;
    for (Id f = 0; f < m; ++f)
        for (Id g = 0; g < m; ++g)
            if (c.tgt[f] == c.src[g] && !c.composition.contains(g, f))
                return ValidationReport::fail("composition-total", pair_str(g, f) + " missing");
    for (Id f = 0; f < m; ++f) {
        if (*c.compose(c.identities[c.tgt[f]], f) != f || *c.compose(f, c.identities[c.src[f]]) != f)
            return ValidationReport::fail("unit-law", mn(f));
    }
    for (Id f = 0; f < m; ++f)
        for (Id g = 0; g < m; ++g) {
            if (c.tgt[f] != c.src[g]) continue;
            Id gf = *c.compose(g, f);
            for (Id h = 0; h < m; ++h) {
                if (c.tgt[g] != c.src[h]) continue;
                if (*c.compose(h, gf) != *c.compose(*c.compose(h, g), f))
                    return ValidationReport::fail("associativity",
                                                  "(" + mn(h) + ", " + mn(g) + ", " + mn(f) + ")");
            }
        }
    return ValidationReport::pass();
}

}  // namespace fincat
