#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fincat/common.hpp"

namespace fincat {

// A finite category stored as tables. compose(g, f) is g after f.
struct FinCategory {
    NameIndex objects;
    NameIndex morphisms;
    std::vector<Id> src, tgt;
    std::vector<Id> identities;  // per object
    PairTable composition;       // (g, f) -> g.f

    std::size_t object_count() const { return objects.size(); }
    std::size_t morphism_count() const { return morphisms.size(); }
    const std::string& object_name(Id a) const { return objects.name(a); }
    const std::string& morphism_name(Id f) const { return morphisms.name(f); }

    Id identity(Id a) const { return identities[static_cast<std::size_t>(a)]; }
    bool is_identity(Id f) const { return src[f] == tgt[f] && identities[src[f]] == f; }
    std::optional<Id> compose(Id g, Id f) const { return composition.get(g, f); }
    // Throws StructuralError when the composite is missing.
    Id compose_at(Id g, Id f) const;
    // Composite of a path given in application order: {h, g, f} is h.g.f.
    Id compose_path(const std::vector<Id>& path) const;

    // Morphisms a -> b in declaration order; requires finalize().
    const std::vector<Id>& hom(Id a, Id b) const {
        return homs_[static_cast<std::size_t>(a) * objects.size() + static_cast<std::size_t>(b)];
    }
    // Two-sided inverse found by scanning the table; never cached.
    std::optional<Id> inverse(Id f) const;
    bool is_iso(Id f) const { return inverse(f).has_value(); }

    // Checks index ranges and builds the hom index. Throws StructuralError.
    void finalize();

private:
    std::vector<std::vector<Id>> homs_;
};

using CatPtr = std::shared_ptr<const FinCategory>;

// Convenience builder for hand-written fixtures. Every object gets an
// identity named "1_<object>" and the unit compositions are filled in.
class CategoryBuilder {
public:
    CategoryBuilder& object(const std::string& name);
    CategoryBuilder& morphism(const std::string& name, const std::string& src, const std::string& tgt);
    CategoryBuilder& compose(const std::string& g, const std::string& f, const std::string& result);
    FinCategory build() const;
    CatPtr build_ptr() const { return std::make_shared<const FinCategory>(build()); }

private:
    struct Mor { std::string name, src, tgt; };
    struct Comp { std::string g, f, result; };
    std::vector<std::string> objects_;
    std::vector<Mor> morphisms_;
    std::vector<Comp> compositions_;
};

ValidationReport validate_category(const FinCategory& c);

}  // namespace fincat
