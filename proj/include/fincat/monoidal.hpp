#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "fincat/cat_span.hpp"

namespace fincat {

struct MonoidalStructure {
    CatPtr base;
    PairTable tensor_obj;  // (a, b) -> a (x) b
    PairTable tensor_mor;  // (f, g) -> f (x) g
    Id unit = 0;
    std::vector<Id> associator;  // index a*n*n + b*n + c : (a b) c -> a (b c)
    std::vector<Id> left_unitor;   // I a -> a
    std::vector<Id> right_unitor;  // a I -> a

    Id tensor(Id a, Id b) const;        // throws StructuralError if partial
    Id tensor_arrow(Id f, Id g) const;  // throws StructuralError if partial
    Id assoc(Id a, Id b, Id c) const {
        const auto n = static_cast<std::size_t>(base->object_count());
        return associator[static_cast<std::size_t>(a) * n * n + static_cast<std::size_t>(b) * n +
                          static_cast<std::size_t>(c)];
    }
};

using MonPtr = std::shared_ptr<const MonoidalStructure>;

// Strict structure with identity coherence cells; tensor given on objects
// and morphisms by callbacks over indices.
MonoidalStructure make_strict_monoidal(const CatPtr& base, Id unit,
                                       const std::function<Id(Id, Id)>& tensor_obj,
                                       const std::function<Id(Id, Id)>& tensor_mor);

ValidationReport validate_monoidal(const MonoidalStructure& m);

struct MonoidalFunctorData {
    MonPtr source, target;
    FinFunctor underlying;
    std::vector<Id> phi;  // index a*n + b : F(a) (x) F(b) -> F(a (x) b)
    Id phi_unit = 0;      // I_B -> F(I_A)
    bool strict = false;  // declared; re-derived by the validator

    Id phi_at(Id a, Id b) const {
        return phi[static_cast<std::size_t>(a) * source->base->object_count() + static_cast<std::size_t>(b)];
    }
};

// Strict monoidal functor with identity phi; the object equalities must hold.
MonoidalFunctorData make_strict_monoidal_functor(const MonPtr& source, const MonPtr& target,
                                                 const FinFunctor& underlying);

struct MonoidalFunctorReport {
    ValidationReport validation;
    std::vector<std::string> non_invertible;  // offending phi components
    bool strict = false;                      // derived
    bool monoidal_equivalence = false;
    bool surjective_equivalence = false;
    FunctorPropertyReport properties;
};

MonoidalFunctorReport validate_monoidal_functor(const MonoidalFunctorData& d);

struct MonoidalSpan {
    MonPtr apex;
    MonoidalFunctorData left, right;
    MonoidalFunctorReport left_report, right_report;

    bool certified() const {
        return left_report.validation.ok() && right_report.validation.ok() && left_report.strict &&
               right_report.strict && left_report.surjective_equivalence && right_report.surjective_equivalence;
    }
};

MonoidalSpan build_span_monoidal(const MonoidalFunctorData& d);

}  // namespace fincat
