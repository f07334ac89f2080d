#pragma once

#include <string>
#include <vector>

#include "fincat/double_functor.hpp"
#include "fincat/monoidal.hpp"
#include "fincat/twocat.hpp"

namespace fincat::fixtures {

// Categories
CatPtr terminal_category();
CatPtr iso_category();           // I: 0 <-> 1
CatPtr codiscrete(int n);        // one morphism between any two objects
CatPtr discrete(int n);
CatPtr arrow_category();         // 0 -> 1
CatPtr z2_group();               // one object, z.z = 1
CatPtr z2_pair();                // two isomorphic objects, each hom a copy of Z2
CatPtr arrow_with_iso_source();  // 0 <-> 0', both mapping to 1
CatPtr point_plus_iso();         // p, and 0 <-> 1

struct NamedCategory {
    std::string name;
    CatPtr cat;
};
// Small categories (at most 4 objects and 12 morphisms).
std::vector<NamedCategory> catalog();

// Monoidal
MonPtr m1();             // discrete {0,1}, tensor addition mod 2
MonPtr z4_parity();      // objects Z/4, one morphism m -> n iff m = n mod 2
MonPtr terminal_monoidal();
MonoidalFunctorData quotient_z4_z2();  // strict, mod 2 on objects

// 2-categories
TwoPtr terminal_2category();
TwoPtr b2();        // u, u': x -> y with an invertible 2-cell u => u'
TwoPtr vu1();       // u: x -> y, v: y -> x, vu = 1, uv = 1
TwoPtr bz();        // u: x -> y with Aut(u) = Z2
TwoPtr bbz2();      // one object, one 1-cell, 2-cells Z2
// Pseudofunctor terminal -> bbz2 whose unit and composition cells are z.
Pseudofunctor2 pseudo_unit();
Pseudofunctor2 collapse_to_terminal(const TwoPtr& k);

// Double categories
DblPtr d_of(const TwoPtr& k);
DblPtr degenerate(const MonPtr& m);
DblPtr terminal_double();
// The quotient functor between the degenerate double categories.
DoublePseudofunctor quotient_double();
// Strict double functor collapsing a double category onto the terminal one.
DoublePseudofunctor collapse_double(const DblPtr& d);
// Double pseudofunctor terminal -> D(bbz2) with every coherence square z.
DoublePseudofunctor pseudo_unit_double();

}  // namespace fincat::fixtures
