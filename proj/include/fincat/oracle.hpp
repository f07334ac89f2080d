#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fincat/double_functor.hpp"
#include "fincat/monoidal.hpp"
#include "fincat/search.hpp"
#include "fincat/twocat.hpp"

namespace fincat {

enum class MapKind { cat, mon, twocat, dbl };

// "cat", "mon", "2cat", "dbl"; anything else is a StructuralError.
MapKind parse_map_kind(std::string_view s);
std::string to_string(MapKind k);

// Every structure as a finite many-sorted algebra; strict structure maps
// are exactly the homomorphisms.
Presentation present_category(const FinCategory& c);
Presentation present_monoidal(const MonoidalStructure& m);
Presentation present_2category(const Fin2Category& k);
Presentation present_double(const FinDoubleCategory& d);

using Structure = std::variant<CatPtr, MonPtr, TwoPtr, DblPtr>;
using StructureMap = std::variant<FinFunctor, MonoidalFunctorData, Pseudofunctor2, DoublePseudofunctor>;

// Strict maps of the given kind in lexicographic order; the first one
// satisfying the predicate is returned. The structures must hold the
// alternative matching the kind (StructuralError otherwise).
SearchOutcome<StructureMap> enumerate_maps(MapKind kind, const Structure& source, const Structure& target,
                                           const std::function<bool(const StructureMap&)>& predicate,
                                           const SearchBudget& budget = {});
SearchOutcome<StructureMap> enumerate_maps(std::string_view kind, const Structure& source, const Structure& target,
                                           const std::function<bool(const StructureMap&)>& predicate,
                                           const SearchBudget& budget = {});

// Typed front ends.
SearchOutcome<FinFunctor> find_functor(const CatPtr& a, const CatPtr& b,
                                       const std::function<bool(const FinFunctor&)>& predicate,
                                       const SearchBudget& budget = {});
std::vector<FinFunctor> all_functors(const CatPtr& a, const CatPtr& b, const SearchBudget& budget = {});
SearchOutcome<MonoidalFunctorData> find_strict_monoidal_functor(
    const MonPtr& a, const MonPtr& b, const std::function<bool(const MonoidalFunctorData&)>& predicate,
    const SearchBudget& budget = {});
SearchOutcome<Pseudofunctor2> find_strict_2functor(const TwoPtr& a, const TwoPtr& b,
                                                   const std::function<bool(const Pseudofunctor2&)>& predicate,
                                                   const SearchBudget& budget = {});
SearchOutcome<DoublePseudofunctor> find_strict_double_functor(
    const DblPtr& a, const DblPtr& b, const std::function<bool(const DoublePseudofunctor&)>& predicate,
    const SearchBudget& budget = {});

// First functor A -> B certified an equivalence, or exhaustion.
SearchOutcome<FinFunctor> oracle_equivalence_cat(const CatPtr& a, const CatPtr& b, const SearchBudget& budget = {});
// Partition of the catalog by pairwise oracle equivalence. Throws
// StructuralError if some search runs out of budget.
std::vector<std::vector<std::size_t>> oracle_partition(const std::vector<CatPtr>& catalog,
                                                       const SearchBudget& budget = {});

}  // namespace fincat
