#pragma once

#include <vector>

#include "fincat/functor.hpp"

namespace fincat {

struct CatSpan {
    CatPtr apex;
    FinFunctor left;   // P : C -> A
    FinFunctor right;  // Q : C -> B
    std::vector<Id> iso;  // l component of each apex object
    FunctorPropertyReport left_report, right_report;

    bool certified() const {
        return left_report.surjective_equivalence() && right_report.surjective_equivalence();
    }
};

// Iso-comma apex of F: objects (a, b, l) with l : F(a) -> b invertible,
// morphisms (f, g) with g.l = l'.F(f). No hypothesis on F is needed.
CatSpan build_apex_cat(const FinFunctor& F);

// Refuses (PreconditionError) unless F is certified an equivalence.
CatSpan build_span_cat(const FinFunctor& F);

struct Pullback {
    CatPtr apex;
    FinFunctor to_p_source;  // projection onto the source of P
    FinFunctor to_f_source;  // projection onto the source of F (opposite P)
};

Pullback pullback_span(const FinFunctor& P, const FinFunctor& F);

// Blocks of catalog indices, each sorted, blocks ordered by first member.
std::vector<std::vector<std::size_t>> zigzag_closure(const std::vector<CatPtr>& catalog,
                                                     const std::vector<FinFunctor>& edges);

}  // namespace fincat
