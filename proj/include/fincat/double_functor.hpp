#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "fincat/double_category.hpp"

namespace fincat {

// Coherence squares, keyed like Pseudofunctor2 (later cell first):
//   hcomp_cells (g, f): top Ff;Fg, bottom F(g o f), identity sides
//   hunit_cells a:      top identity, bottom F(1_a), identity sides
//   vcomp_cells (t, s): right Ft o Fs, left F(t o s), identity top and bottom
//   vunit_cells a:      right identity, left F(1_a)
// The horizontal ones are vertically invertible, the vertical ones
// horizontally invertible. Read in the underlying 2-categories, both kinds
// point from the composite of images to the image of the composite.
struct DoublePseudofunctor {
    DblPtr source, target;
    std::vector<Id> map0, maph, mapv, mapsq;
    PairTable hcomp_cells;
    std::vector<Id> hunit_cells;
    PairTable vcomp_cells;
    std::vector<Id> vunit_cells;
    bool strict = false;  // declared; re-derived by the validator

    Id phi(Id g, Id f) const;  // throws when missing
    Id psi(Id t, Id s) const;
    Id obj(Id a) const { return map0[static_cast<std::size_t>(a)]; }
    Id h(Id f) const { return maph[static_cast<std::size_t>(f)]; }
    Id v(Id s) const { return mapv[static_cast<std::size_t>(s)]; }
    Id sq(Id q) const { return mapsq[static_cast<std::size_t>(q)]; }
};

DoublePseudofunctor identity_double_functor(const DblPtr& d);
// Strict double functor; identity coherence squares.
DoublePseudofunctor make_strict_double_functor(const DblPtr& source, const DblPtr& target, std::vector<Id> map0,
                                               std::vector<Id> maph, std::vector<Id> mapv, std::vector<Id> mapsq);
// g after f. Coherence of the composite: G's cell, then G applied to F's
// cell with G's transverse unit cells correcting the sides.
DoublePseudofunctor compose_double_functors(const DoublePseudofunctor& g, const DoublePseudofunctor& f);

struct DoubleFunctorValidation {
    ValidationReport report;
    bool strict = false;  // derived
};
DoubleFunctorValidation validate_double_pseudofunctor(const DoublePseudofunctor& F);

// Underlying pseudofunctor of horizontal 2-categories. Requires F to send
// vertical identities to vertical identities (true for strict functors).
Pseudofunctor2 horizontal_restriction(const DoublePseudofunctor& F);

struct EssentialWitness {
    Id preimage = -1;  // horizontal or vertical cell of the source
    Id chi = -1;       // invertible square from its image to the cell
};

struct DoubleFunctorReport {
    bool surjective_on_objects = false;
    bool horizontally_full = false;
    bool vertically_full = false;
    bool full_on_squares = false;
    bool faithful_on_squares = false;
    bool gregarious_surjective = false;
    bool horizontally_essentially_full = false;
    bool vertically_essentially_full = false;
    bool budget_exhausted = false;  // some search hit its budget

    std::vector<std::pair<Id, GregariousWitness>> object_witness;  // per target object
    // keyed by (a, a2, cell) for a cell Fa -> Fa2 of the target
    std::map<std::array<Id, 3>, EssentialWitness> hchi;
    std::map<std::array<Id, 3>, EssentialWitness> vchi;
    std::map<std::string, std::string> counterexample;

    bool gregarious_equivalence() const {
        return gregarious_surjective && horizontally_essentially_full && vertically_essentially_full &&
               full_on_squares && faithful_on_squares;
    }
    bool surjective_equivalence() const {
        return surjective_on_objects && horizontally_full && vertically_full && full_on_squares &&
               faithful_on_squares;
    }
    std::string summary() const;
};

struct PropertyOptions {
    bool gregarious = true;  // run the gregarious object and essential-fullness searches
    SearchBudget budget{1'000'000, 1};
};
DoubleFunctorReport check_double_functor_properties(const DoublePseudofunctor& F, const PropertyOptions& opt = {});

// Inverse of a strict surjective equivalence P : C -> A. Choices are the
// first preimages; squares and coherence squares are the unique lifts of
// the corresponding squares and identity squares of A.
DoublePseudofunctor invert_surjective_equivalence(const DoublePseudofunctor& P);

// True when every cell map of F is the identity and every coherence square
// is an identity square.
bool is_identity_functor(const DoublePseudofunctor& F);

}  // namespace fincat
