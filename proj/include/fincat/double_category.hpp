#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "fincat/monoidal.hpp"
#include "fincat/twocat.hpp"

namespace fincat {

struct SquareBoundary {
    Id top = -1, bottom = -1, left = -1, right = -1;
    bool operator==(const SquareBoundary&) const = default;
};

struct Underlying2;

// Strict double category. Horizontal cells are the morphisms of
// `horizontal`, vertical cells those of `vertical`; both share the object
// list. hcomp(l, r) pastes l to the left of r along r's left edge;
// vcomp(t, b) pastes t above b. hid(f) is the vertical identity square on
// the horizontal cell f, vid(s) the horizontal identity square on s.
struct FinDoubleCategory {
    FinCategory horizontal;
    FinCategory vertical;
    NameIndex squares;
    std::vector<SquareBoundary> boundary;
    PairTable hcomp_table;  // (left, right) -> square
    PairTable vcomp_table;  // (top, bottom) -> square
    std::vector<Id> hid_table;  // per horizontal cell
    std::vector<Id> vid_table;  // per vertical cell

    std::size_t object_count() const { return horizontal.object_count(); }
    std::size_t hcell_count() const { return horizontal.morphism_count(); }
    std::size_t vcell_count() const { return vertical.morphism_count(); }
    std::size_t square_count() const { return squares.size(); }
    const std::string& object_name(Id a) const { return horizontal.object_name(a); }
    const std::string& hname(Id f) const { return horizontal.morphism_name(f); }
    const std::string& vname(Id s) const { return vertical.morphism_name(s); }
    const std::string& sname(Id q) const { return squares.name(q); }
    const SquareBoundary& frame(Id q) const { return boundary[static_cast<std::size_t>(q)]; }

    Id h1(Id a) const { return horizontal.identity(a); }
    Id v1(Id a) const { return vertical.identity(a); }
    // Horizontal cells composed along the path, first cell first.
    Id hpath(std::initializer_list<Id> cells) const;
    Id vpath(std::initializer_list<Id> cells) const;
    Id hid(Id f) const { return hid_table[static_cast<std::size_t>(f)]; }
    Id vid(Id s) const { return vid_table[static_cast<std::size_t>(s)]; }
    Id hcomp(Id l, Id r) const;  // throws StructuralError
    Id vcomp(Id t, Id b) const;  // throws StructuralError
    Id hseq(std::initializer_list<Id> cells) const;  // left to right
    Id vseq(std::initializer_list<Id> cells) const;  // top to bottom

    const std::vector<Id>& squares_in(const SquareBoundary& b) const;
    // Inverse for hcomp (requires identity top and bottom) or vcomp
    // (requires identity left and right).
    std::optional<Id> hinverse(Id q) const;
    std::optional<Id> vinverse(Id q) const;
    Id hinverse_at(Id q) const;
    Id vinverse_at(Id q) const;

    const std::vector<Id>& squares_with_left(Id s) const { return by_left_[static_cast<std::size_t>(s)]; }
    const std::vector<Id>& squares_with_top(Id f) const { return by_top_[static_cast<std::size_t>(f)]; }

    // Underlying 2-categories, built on first use.
    const Underlying2& H() const;
    const Underlying2& V() const;

    void finalize();  // checks ranges and corners, builds indexes; throws StructuralError

private:
    std::map<std::array<Id, 4>, std::vector<Id>> frames_;
    std::vector<std::vector<Id>> by_left_, by_top_;
    mutable std::shared_ptr<const Underlying2> h_cache_, v_cache_;
    mutable std::shared_ptr<std::mutex> cache_lock_ = std::make_shared<std::mutex>();
};

using DblPtr = std::shared_ptr<const FinDoubleCategory>;

// Horizontal 2-category: 1-cells the horizontal cells, 2-cells the squares
// with identity vertical sides (source top, target bottom).
// Vertical 2-category: 1-cells the vertical cells, 2-cells the squares with
// identity horizontal sides, source the right edge and target the left edge.
struct Underlying2 {
    TwoPtr k;
    std::vector<Id> to_square;    // 2-cell -> square
    std::vector<Id> from_square;  // square -> 2-cell or -1
    Id cell(Id square) const;     // throws when the square is not a 2-cell here
};
Underlying2 horizontal_2category(const FinDoubleCategory& d);
Underlying2 vertical_2category(const FinDoubleCategory& d);

ValidationReport validate_double_category(const FinDoubleCategory& d);

// Squares with boundary (f, g, s, t) are the 2-cells t.f => g.s.
FinDoubleCategory double_of_2category(const Fin2Category& k);
// One object; horizontal cells the objects of m, composed by the tensor;
// only the identity vertical cell; squares the morphisms. m must be strict.
FinDoubleCategory double_of_strict_monoidal(const MonoidalStructure& m);

struct CompanionPair {
    Id f = -1, f_prime = -1, sigma = -1, tau = -1;
    bool operator==(const CompanionPair&) const = default;
};

// Throws StructuralError on boundary mismatch.
ValidationReport check_companions(const CompanionPair& p, const FinDoubleCategory& d);
// All binding-cell candidates for f in lexicographic order of (f', sigma, tau).
std::vector<CompanionPair> find_companions(Id f, const FinDoubleCategory& d);

enum class Orientation { horizontal, vertical };

struct HVAdjointEquivalence {
    Orientation orientation = Orientation::horizontal;
    Id ell = -1, r = -1, eta = -1, epsilon = -1;  // eta, epsilon are squares
    bool operator==(const HVAdjointEquivalence&) const = default;
};

ValidationReport check_hv_adjoint_equivalence(const HVAdjointEquivalence& e, const FinDoubleCategory& d);
HVAdjointEquivalence identity_hv_adjoint_equivalence(Orientation o, const FinDoubleCategory& d, Id a);
SearchOutcome<HVAdjointEquivalence> complete_hv_adjoint_equivalence(Orientation o, Id ell,
                                                                    const FinDoubleCategory& d,
                                                                    const SearchBudget& budget = {1'000'000, 1});
std::vector<HVAdjointEquivalence> enumerate_hv_adjoint_equivalences(Orientation o, const FinDoubleCategory& d,
                                                                    Id x, Id y);

// sigma_bar has the tau shape for (r_H, r_V); tau_bar has the sigma shape.
struct CompanionMates {
    Id sigma_bar = -1, tau_bar = -1;
    CompanionPair as_pair(Id rH, Id rV) const { return {rH, rV, tau_bar, sigma_bar}; }
};
CompanionMates companion_mates(const CompanionPair& p, const HVAdjointEquivalence& hadj,
                               const HVAdjointEquivalence& vadj, const FinDoubleCategory& d);

struct GregariousWitness {
    HVAdjointEquivalence hadj, vadj;
    CompanionPair binding;
};
SearchOutcome<GregariousWitness> check_gregarious_object_equivalence(Id a, Id b, const FinDoubleCategory& d,
                                                                     const SearchBudget& budget = {1'000'000, 1});

// Expression tree over squares; H children left to right, V top to bottom.
struct PasteSq {
    enum class Kind { leaf, hole, h, v } kind = Kind::leaf;
    Id cell = -1;
    std::vector<PasteSq> parts;

    static PasteSq leaf(Id c) { return {Kind::leaf, c, {}}; }
    static PasteSq hole() { return {Kind::hole, -1, {}}; }
    static PasteSq H(std::vector<PasteSq> p) { return {Kind::h, -1, std::move(p)}; }
    static PasteSq V(std::vector<PasteSq> p) { return {Kind::v, -1, std::move(p)}; }
};

enum class FoldOrder { left, right };
// Throws StructuralError when ill-boundaried.
Id evaluate(const FinDoubleCategory& d, const PasteSq& t, Id hole = -1, FoldOrder order = FoldOrder::left);
// Regroups H-of-V grids into V-of-H where the rows line up; nullopt when no
// node can be regrouped.
std::optional<PasteSq> interchange_variant(const FinDoubleCategory& d, const PasteSq& t, Id hole = -1);
SolveOutcome solve_square(const FinDoubleCategory& d, const PasteSq& lhs, const PasteSq& rhs,
                          const SquareBoundary& hole_frame);

}  // namespace fincat
