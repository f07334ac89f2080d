#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "fincat/double_functor.hpp"

namespace fincat {

// Apex data for a double pseudofunctor F : A -> B.
//   object: (a, b, hadj, vadj, binding) with hadj, vadj adjoint
//           equivalences Fa -> b and binding making their left adjoints
//           companions
//   hcell:  (f, g, lamH, rhoH, lamV, rhoV)
//   vcell:  (s, t, gamV, delV, gamH, delH)
//   square: (alpha, beta)
struct DoubleCellData {
    struct Obj {
        Id a, b;
        HVAdjointEquivalence hadj, vadj;
        CompanionPair binding;
        CompanionMates mates;  // binding cells for the right adjoints
    };
    struct HCell { Id src, tgt, f, g, lamH, rhoH, lamV, rhoV; };
    struct VCell { Id src, tgt, s, t, gamV, delV, gamH, delH; };
    struct Sq { Id alpha, beta; };
    std::vector<Obj> objs;
    std::vector<HCell> hcells;
    std::vector<VCell> vcells;
    std::vector<Sq> squares;
    std::map<std::vector<Id>, Id> hcell_index;   // (src, tgt, f, g, lamH, rhoH, lamV, rhoV)
    std::map<std::vector<Id>, Id> vcell_index;   // (src, tgt, s, t, gamV, delV, gamH, delH)
    std::map<std::vector<Id>, Id> square_index;  // (top, bottom, left, right, alpha, beta)
};

struct DoubleSpan {
    DoublePseudofunctor F;
    DblPtr apex;
    DoublePseudofunctor left, right;  // P to the source of F, Q to its target
    DoubleCellData data;
    DoubleFunctorReport left_report, right_report;

    bool certified() const {
        return left_report.surjective_equivalence() && right_report.surjective_equivalence();
    }
};

// Builds the apex with no hypothesis on F (beyond validity) and both legs;
// leg reports are filled in.
DoubleSpan build_apex_double(const DoublePseudofunctor& F, const PropertyOptions& opt = {false, {1'000'000, 1}});
// Refuses (PreconditionError) unless F validates and is certified a
// gregarious double equivalence.
DoubleSpan build_span_double(const DoublePseudofunctor& F);

// One coherence equation as a pair of paste trees over squares of B.
struct NamedEquation {
    std::string family;
    PasteSq lhs, rhs;
};

// Families: 1ha, 1hb, 1hc (horizontal cells), 1va, 1vb, 1vc (vertical
// cells) and 2 (squares). Candidate cells need not be in the apex.
std::vector<NamedEquation> hcell_equations(const DoubleSpan& s, const DoubleCellData::HCell& h);
std::vector<NamedEquation> vcell_equations(const DoubleSpan& s, const DoubleCellData::VCell& v);
// The rho compatibility the proof calls redundant, using the mates.
std::vector<NamedEquation> hcell_redundant_equations(const DoubleSpan& s, const DoubleCellData::HCell& h);

// Equations 2a to 2d for a candidate (alpha, beta) on the frame of apex
// cells (top, bottom, left, right).
std::vector<NamedEquation> square_equations(const DoubleSpan& s, Id top, Id bottom, Id left, Id right, Id alpha,
                                            Id beta);
std::array<bool, 4> check_coherence_quadruple(const DoubleSpan& s, Id top, Id bottom, Id left, Id right, Id alpha,
                                              Id beta);

// Outcome of evaluating an equation: both sides agree, and agree again
// under the right fold and under an interchange regrouping.
struct EquationCheck {
    bool holds = false;
    bool alternate_orders_agree = true;
};
EquationCheck evaluate_equation(const FinDoubleCategory& d, const NamedEquation& e);

struct ApexEquationReport {
    std::map<std::string, std::size_t> checked;  // per family
    std::map<std::string, std::size_t> failed;
    std::size_t order_mismatches = 0;
    std::size_t redundant_failures = 0;
    bool all_hold() const;
};
ApexEquationReport verify_apex_equations(const DoubleSpan& s);

// xi with gamma_H | xi = theta, for theta with boundary
// (l_H;X, l~_H;Z, Fs, Y). Also counts all solutions.
struct LeftCancellation {
    Id xi = -1;
    bool solves = false;
    std::size_t solutions = 0;
};
LeftCancellation solve_left_cancellation(const DoubleSpan& s, Id vcell, Id theta, Id X, Id Z);
// theta built from an apex square: lam^-1 . (F alpha | gamma'_H) . lam~
Id cancellation_target(const DoubleSpan& s, Id square);

// Explicit lifts of horizontal cells along the legs. The horizontal
// components come from the unit/counit pastings; the vertical ones from
// the binding cells. Returns -1 when the pasted cell is not in the apex.
Id lift_hcell_along_left(const DoubleSpan& s, Id c, Id c2, Id f);
Id lift_hcell_along_right(const DoubleSpan& s, Id c, Id c2, Id g);

}  // namespace fincat
