#pragma once

#include <map>
#include <string>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

struct FinFunctor {
    CatPtr source, target;
    std::vector<Id> obj_map;
    std::vector<Id> mor_map;

    Id obj(Id a) const { return obj_map[static_cast<std::size_t>(a)]; }
    Id mor(Id f) const { return mor_map[static_cast<std::size_t>(f)]; }
};

FinFunctor identity_functor(const CatPtr& c);
// g after f
FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f);

ValidationReport validate_functor(const FinFunctor& f);

struct FunctorPropertyReport {
    bool surjective_on_objects = false;
    bool essentially_surjective = false;
    bool full = false;
    bool faithful = false;

    // For satisfied existential properties: one witness per target object.
    std::vector<Id> object_preimage;                  // surjective_on_objects
    std::vector<std::pair<Id, Id>> essential_witness;  // (a, iso F(a) -> b)
    // For failed properties: one counterexample, keyed by property name.
    std::map<std::string, std::string> counterexample;

    bool surjective_equivalence() const { return surjective_on_objects && full && faithful; }
    bool equivalence() const { return essentially_surjective && full && faithful; }
    std::string summary() const;
};

FunctorPropertyReport check_functor_properties(const FinFunctor& f);

}  // namespace fincat
