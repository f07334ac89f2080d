#pragma once

#include <map>
#include <memory>
#include <vector>

#include "fincat/cat_span.hpp"
#include "fincat/search.hpp"

namespace fincat {

// Strict 2-category. 0-cells and 1-cells live in `one` (1-cell composition
// is its composition). All compositions are written in application order:
// vcomp(b, a) is b.a with a first; hcomp(b, a) is b o a with a : x -> y and
// b : y -> z.
struct Fin2Category {
    FinCategory one;
    NameIndex cells2;
    std::vector<Id> src2, tgt2;  // 1-cells
    std::vector<Id> id2;         // per 1-cell
    PairTable vcomp;
    PairTable hcomp;

    std::size_t count0() const { return one.object_count(); }
    std::size_t count1() const { return one.morphism_count(); }
    std::size_t count2() const { return cells2.size(); }
    const std::string& name0(Id a) const { return one.object_name(a); }
    const std::string& name1(Id f) const { return one.morphism_name(f); }
    const std::string& name2(Id t) const { return cells2.name(t); }
    Id src0(Id f) const { return one.src[f]; }
    Id tgt0(Id f) const { return one.tgt[f]; }
    // 0-cell boundary of a 2-cell
    Id from0(Id t) const { return one.src[src2[t]]; }
    Id to0(Id t) const { return one.tgt[src2[t]]; }

    Id id1(Id a) const { return one.identity(a); }
    Id comp1(Id g, Id f) const { return one.compose_at(g, f); }
    Id comp1(std::initializer_list<Id> path) const { return one.compose_path(path); }
    Id v(Id b, Id a) const;  // throws when missing
    Id h(Id b, Id a) const;  // throws when missing
    // Whiskers: post(g, t) = 1_g o t, pre(t, f) = t o 1_f.
    Id post(Id g, Id t) const { return h(id2[g], t); }
    Id pre(Id t, Id f) const { return h(t, id2[f]); }
    // Vertical composite of a sequence given top-to-bottom (first applied first).
    Id vseq(std::initializer_list<Id> cells) const;

    const std::vector<Id>& hom2(Id f, Id g) const {
        return homs2_[static_cast<std::size_t>(f) * count1() + static_cast<std::size_t>(g)];
    }
    std::optional<Id> vinverse(Id t) const;
    bool is_invertible(Id t) const { return vinverse(t).has_value(); }

    void finalize();  // throws StructuralError

private:
    std::vector<std::vector<Id>> homs2_;
};

using TwoPtr = std::shared_ptr<const Fin2Category>;

// Builder for fixtures. Identities "1_x" and "id_<1-cell>" are created
// automatically, and every entry whose value is forced by a unit law is
// filled in. thin() additionally fills every composite whose boundary
// admits exactly one 2-cell.
class TwoCategoryBuilder {
public:
    TwoCategoryBuilder& cell0(const std::string& name);
    TwoCategoryBuilder& cell1(const std::string& name, const std::string& src, const std::string& tgt);
    TwoCategoryBuilder& comp1(const std::string& g, const std::string& f, const std::string& result);
    TwoCategoryBuilder& cell2(const std::string& name, const std::string& src, const std::string& tgt);
    TwoCategoryBuilder& vcomp(const std::string& b, const std::string& a, const std::string& result);
    TwoCategoryBuilder& hcomp(const std::string& b, const std::string& a, const std::string& result);
    TwoCategoryBuilder& thin() {
        thin_ = true;
        return *this;
    }
    Fin2Category build() const;
    TwoPtr build_ptr() const { return std::make_shared<const Fin2Category>(build()); }

private:
    CategoryBuilder one_;
    struct C2 { std::string name, src, tgt; };
    struct E { std::string b, a, r; };
    std::vector<C2> cells2_;
    std::vector<E> v_, h_;
    bool thin_ = false;
};

ValidationReport validate_2category(const Fin2Category& k);

// Hom-category k(a, b): objects the 1-cells a -> b, morphisms the 2-cells.
struct HomCategory {
    CatPtr cat;
    std::vector<Id> cells1;  // local object -> global 1-cell
    std::vector<Id> cells2;  // local morphism -> global 2-cell
};
HomCategory hom_category(const Fin2Category& k, Id a, Id b);

struct AdjointEquivalence {
    Id ell = -1, r = -1, eta = -1, epsilon = -1;
    bool operator==(const AdjointEquivalence&) const = default;
};

// Throws StructuralError on boundary mismatch (including a missing r).
ValidationReport check_adjoint_equivalence(const AdjointEquivalence& e, const Fin2Category& k);
AdjointEquivalence identity_adjoint_equivalence(const Fin2Category& k, Id a);
SearchOutcome<AdjointEquivalence> complete_adjoint_equivalence(Id ell, const Fin2Category& k,
                                                               const SearchBudget& budget = {1'000'000, 1});
// All adjoint equivalences x -> y in lexicographic order of (ell, r, eta, epsilon).
std::vector<AdjointEquivalence> enumerate_adjoint_equivalences(const Fin2Category& k, Id x, Id y);

// Mate of lambda : l'.Ff => g.l under adj (at the source) and adj2 (at the
// target): (r' g eps).(r' lambda r).(eta' Ff r).
Id mate_of(const Fin2Category& k, Id lambda, Id Ff, Id g, const AdjointEquivalence& adj,
           const AdjointEquivalence& adj2);
// Inverse direction: (eps' g l).(l' rho l).(l' Ff eta).
Id reverse_mate_of(const Fin2Category& k, Id rho, Id Ff, Id g, const AdjointEquivalence& adj,
                   const AdjointEquivalence& adj2);
// The two compatibility equations between lambda and rho.
std::pair<bool, bool> lambda_rho_compatible(const Fin2Category& k, Id lambda, Id rho, Id Ff, Id g,
                                            const AdjointEquivalence& adj, const AdjointEquivalence& adj2);

struct Pseudofunctor2 {
    TwoPtr source, target;
    std::vector<Id> map0, map1, map2;
    PairTable comp_cells;         // (g, f) -> F(g) o F(f) => F(g o f)
    std::vector<Id> unit_cells;   // per 0-cell: 1_{Fa} => F(1_a)
    bool strict = false;          // declared; re-derived by the validator

    Id comp_cell(Id g, Id f) const;
};

Pseudofunctor2 identity_pseudofunctor(const TwoPtr& k);
// Strict 2-functor with identity coherence cells.
Pseudofunctor2 make_strict_2functor(const TwoPtr& source, const TwoPtr& target, std::vector<Id> map0,
                                    std::vector<Id> map1, std::vector<Id> map2);
// g after f, with composite coherence cells.
Pseudofunctor2 compose_pseudofunctors(const Pseudofunctor2& g, const Pseudofunctor2& f);

struct PseudofunctorValidation {
    ValidationReport report;
    bool strict = false;  // derived
};
PseudofunctorValidation validate_pseudofunctor(const Pseudofunctor2& F);

struct Pseudofunctor2Report {
    bool surjective_on_objects = false;
    bool essentially_surjective = false;
    bool locally_equivalence = false;
    bool locally_surjective_equivalence = false;
    std::vector<std::pair<Id, AdjointEquivalence>> essential_witness;  // per target 0-cell
    std::map<std::string, std::string> counterexample;

    bool biequivalence() const { return essentially_surjective && locally_equivalence; }
    bool surjective_equivalence() const { return surjective_on_objects && locally_surjective_equivalence; }
    std::string summary() const;
};
Pseudofunctor2Report check_pseudofunctor_properties(const Pseudofunctor2& F);

// Expression tree over 2-cells. Children are listed in diagram order: for
// V top-to-bottom (first applied first), for H along the 1-cell path.
struct Paste2 {
    enum class Kind { leaf, hole, v, h } kind = Kind::leaf;
    Id cell = -1;
    std::vector<Paste2> parts;

    static Paste2 leaf(Id c) { return {Kind::leaf, c, {}}; }
    static Paste2 hole() { return {Kind::hole, -1, {}}; }
    static Paste2 V(std::vector<Paste2> p) { return {Kind::v, -1, std::move(p)}; }
    static Paste2 H(std::vector<Paste2> p) { return {Kind::h, -1, std::move(p)}; }
};
// Throws StructuralError when the tree is ill-boundaried.
Id evaluate(const Fin2Category& k, const Paste2& t, Id hole = -1);

// Counts 2-cells src => tgt filling the hole of lhs = rhs.
SolveOutcome solve_2cell(const Fin2Category& k, const Paste2& lhs, const Paste2& rhs, Id hole_src, Id hole_tgt);

// Apex of the span for F: 0-cells (a, b, l, r, eta, eps), 1-cells
// (f, g, lambda, rho), 2-cells (alpha, beta). Built with no hypothesis on F.
struct TwoCellData {
    struct Obj { Id a, b; AdjointEquivalence adj; };
    struct One { Id f, g, lambda, rho; };
    struct Two { Id alpha, beta; };
    std::vector<Obj> objs;
    std::vector<One> ones;
    std::vector<Two> twos;
    std::map<std::vector<Id>, Id> one_index;  // (c, c2, f, g, lambda, rho)
    std::map<std::vector<Id>, Id> two_index;  // (one, one2, alpha, beta)
};

struct TwoSpan {
    TwoPtr apex;
    Pseudofunctor2 left, right;
    TwoCellData data;
    Pseudofunctor2Report left_report, right_report;

    bool certified() const {
        return left_report.surjective_equivalence() && right_report.surjective_equivalence();
    }
};

TwoSpan build_apex_2cat(const Pseudofunctor2& F);
// Refuses (PreconditionError) unless F is certified a biequivalence.
TwoSpan build_span_2cat(const Pseudofunctor2& F);

// The two equations on an apex 2-cell candidate (alpha, beta) between
// apex 1-cells one and one2.
std::pair<bool, bool> two_cell_equations(const Pseudofunctor2& F, const TwoSpan& s, Id one, Id one2, Id alpha,
                                         Id beta);
// beta o l = lambda~ . (l' F alpha) . lambda^-1, as a pair of trees with a
// hole for beta.
std::pair<Paste2, Paste2> unique_beta_equation(const Pseudofunctor2& F, const TwoSpan& s, Id one, Id one2,
                                               Id alpha);

// Lift a 1-cell f of A to an apex 1-cell c -> c2 by the eta pasting.
Id lift_along_left(const Pseudofunctor2& F, const TwoSpan& s, Id c, Id c2, Id f);
// Lift a 1-cell g of B using an invertible chi : Ff => r' g l.
Id lift_along_right(const Pseudofunctor2& F, const TwoSpan& s, Id c, Id c2, Id g);

}  // namespace fincat
