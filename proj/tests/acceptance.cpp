// One line per acceptance criterion. Exit status 1 when a criterion fails
// that is not listed as a known failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "fincat/double_span.hpp"
#include "fincat/fixtures.hpp"
#include "fincat/oracle.hpp"

using namespace fincat;
namespace fx = fincat::fixtures;

namespace {

struct Result {
    bool pass = true;
    std::ostringstream detail;
    // Set when the failure is understood and recorded.
    std::string known_failure;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail << "failed: " << what << "; ";
            pass = false;
        }
    }
};

std::vector<CatPtr> catalog_cats() {
    std::vector<CatPtr> out;
    for (const auto& c : fx::catalog()) out.push_back(c.cat);
    return out;
}

std::vector<FinFunctor> surjective_equivalences(const std::vector<CatPtr>& cats) {
    std::vector<FinFunctor> se;
    for (const auto& a : cats)
        for (const auto& b : cats)
            for (const auto& F : all_functors(a, b))
                if (check_functor_properties(F).surjective_equivalence()) se.push_back(F);
    return se;
}

void criterion1(Result& r) {
    auto cats = catalog_cats();
    std::size_t eq = 0;
    for (const auto& a : cats)
        for (const auto& b : cats)
            for (const auto& F : all_functors(a, b)) {
                if (!check_functor_properties(F).equivalence()) continue;
                ++eq;
                auto s = build_span_cat(F);
                r.require(validate_category(*s.apex).ok(), "apex validates");
                r.require(check_functor_properties(s.left).surjective_equivalence(), "left leg");
                r.require(check_functor_properties(s.right).surjective_equivalence(), "right leg");
            }
    r.detail << eq << " equivalences, every span certified";
}

void criterion2(Result& r) {
    auto cats = catalog_cats();
    auto edges = surjective_equivalences(cats);
    auto z = zigzag_closure(cats, edges);
    auto o = oracle_partition(cats);
    r.require(z == o, "closure equals oracle partition");
    auto names = fx::catalog();
    for (const auto& b : z) {
        r.detail << "{";
        for (std::size_t i = 0; i < b.size(); ++i) r.detail << (i ? "," : "") << names[b[i]].name;
        r.detail << "} ";
    }
    r.detail << "from " << edges.size() << " surjective equivalences";
}

void criterion3(Result& r) {
    auto cats = catalog_cats();
    std::size_t n = 0;
    for (const auto& P : surjective_equivalences(cats))
        for (const auto& c : cats)
            for (const auto& F : all_functors(c, P.target)) {
                auto pb = pullback_span(P, F);
                r.require(check_functor_properties(pb.to_f_source).surjective_equivalence(), "projection");
                ++n;
            }
    r.detail << n << " pullback projections certified";
}

bool strict_on_pairs(const MonoidalFunctorData& F) {
    const auto& A = *F.source;
    const auto& B = *F.target;
    const auto n = to_id(A.base->object_count());
    const auto m = to_id(A.base->morphism_count());
    for (Id a = 0; a < n; ++a)
        for (Id b = 0; b < n; ++b)
            if (F.underlying.obj(A.tensor(a, b)) != B.tensor(F.underlying.obj(a), F.underlying.obj(b))) return false;
    for (Id f = 0; f < m; ++f)
        for (Id g = 0; g < m; ++g)
            if (F.underlying.mor(A.tensor_arrow(f, g)) != B.tensor_arrow(F.underlying.mor(f), F.underlying.mor(g)))
                return false;
    return true;
}

void criterion4(Result& r) {
    auto M1 = fx::m1();
    const std::vector<std::pair<std::string, MonoidalFunctorData>> cases{
        {"identity of M1", make_strict_monoidal_functor(M1, M1, identity_functor(M1->base))},
        {"Z4 -> Z2", fx::quotient_z4_z2()}};
    for (const auto& [name, F] : cases) {
        auto s = build_span_monoidal(F);
        r.require(validate_monoidal(*s.apex).ok(), name + " apex");
        r.require(s.certified(), name + " legs");
        r.require(strict_on_pairs(s.left) && strict_on_pairs(s.right), name + " strict on all pairs");
        r.detail << name << ": apex " << s.apex->base->object_count() << " objects; ";
    }
}

void criterion5(Result& r) {
    auto fwd = find_strict_monoidal_functor(fx::z4_parity(), fx::m1(), [](const MonoidalFunctorData& d) {
        return validate_monoidal_functor(d).surjective_equivalence;
    });
    auto rev = find_strict_monoidal_functor(fx::m1(), fx::z4_parity(), [](const MonoidalFunctorData& d) {
        return validate_monoidal_functor(d).monoidal_equivalence;
    });
    r.require(fwd.status == SearchStatus::found, "forward found");
    r.require(rev.status == SearchStatus::exhausted, "reverse exhausted");
    r.detail << "Z4 -> Z2 " << to_string(fwd.status) << " after " << fwd.candidates_examined << "; Z2 -> Z4 "
             << to_string(rev.status) << " after " << rev.candidates_examined << " candidates";
}

void check_2span(Result& r, const std::string& name, const Pseudofunctor2& F, const TwoSpan& s) {
    const Fin2Category& A = *F.source;
    const Fin2Category& B = *F.target;
    r.require(validate_2category(*s.apex).ok(), name + " apex");
    const auto n1 = to_id(s.apex->count1());
    std::size_t slots = 0;
    for (Id m = 0; m < n1; ++m) {
        const auto& x = s.data.ones[m];
        const auto& adj = s.data.objs[s.apex->src0(m)].adj;
        const auto& adj2 = s.data.objs[s.apex->tgt0(m)].adj;
        r.require(mate_of(B, x.lambda, F.map1[x.f], x.g, adj, adj2) == x.rho, name + " rho is the mate");
        auto [e1, e2] = lambda_rho_compatible(B, x.lambda, x.rho, F.map1[x.f], x.g, adj, adj2);
        r.require(e1 && e2, name + " 1-cell equations");
    }
    for (Id m = 0; m < n1; ++m)
        for (Id m2 = 0; m2 < n1; ++m2) {
            if (s.apex->src0(m) != s.apex->src0(m2) || s.apex->tgt0(m) != s.apex->tgt0(m2)) continue;
            for (Id al : A.hom2(s.data.ones[m].f, s.data.ones[m2].f)) {
                auto [lhs, rhs] = unique_beta_equation(F, s, m, m2, al);
                r.require(solve_2cell(B, lhs, rhs, s.data.ones[m].g, s.data.ones[m2].g).count() == 1,
                          name + " unique beta");
                ++slots;
            }
        }
    r.detail << name << ": apex " << s.apex->count0() << "/" << s.apex->count1() << "/" << s.apex->count2() << ", "
             << slots << " beta slots unique; ";
}

void criterion6(Result& r) {
    auto id = identity_pseudofunctor(fx::b2());
    auto s = build_span_2cat(id);
    r.require(s.certified(), "identity legs");
    check_2span(r, "identity of B2", id, s);

    auto F = fx::collapse_to_terminal(fx::b2());
    try {
        build_span_2cat(F);
    } catch (const PreconditionError& e) {
        r.require(false, "B2 -> 1 span");
        r.known_failure =
            "B2 -> 1 is not a biequivalence: hom(y,x) is empty but hom(*,*) is not, so the local functor is "
            "not essentially surjective and the span is refused";
        // The same checks on the apex built without the hypothesis.
        auto apex = build_apex_2cat(F);
        Result info;
        check_2span(info, "B2 -> 1 apex", F, apex);
        r.detail << "B2 -> 1 refused (" << e.what() << "); unchecked apex: " << info.detail.str()
                 << "legs certified " << apex.left_report.surjective_equivalence() << "/"
                 << apex.right_report.surjective_equivalence();
    }
}

struct DoubleCase {
    std::string name;
    DoublePseudofunctor F;
};

std::vector<DoubleCase> double_cases() {
    return {{"identity of D(B2)", identity_double_functor(fx::d_of(fx::b2()))},
            {"quotient of degenerate Z4 -> Z2", fx::quotient_double()},
            {"identity of D(Bz)", identity_double_functor(fx::d_of(fx::bz()))}};
}

std::vector<std::pair<std::string, DoubleSpan>>& double_spans() {
    static std::vector<std::pair<std::string, DoubleSpan>> spans = [] {
        std::vector<std::pair<std::string, DoubleSpan>> out;
        for (const auto& c : double_cases()) out.push_back({c.name, build_span_double(c.F)});
        return out;
    }();
    return spans;
}

void criterion7(Result& r) {
    for (const auto& [name, s] : double_spans()) {
        r.require(validate_double_category(*s.apex).ok(), name + " apex");
        auto eq = verify_apex_equations(s);
        r.require(eq.all_hold(), name + " coherence equations");
        r.require(eq.checked.size() == 7, name + " seven families");
        r.require(s.certified(), name + " legs");
        r.require(validate_double_pseudofunctor(s.left).strict && validate_double_pseudofunctor(s.right).strict,
                  name + " strict legs");
        std::size_t cells = 0;
        for (const auto& [fam, n] : eq.checked) cells += n;
        r.detail << name << ": apex " << s.apex->object_count() << "/" << s.apex->hcell_count() << "/"
                 << s.apex->vcell_count() << "/" << s.apex->square_count() << ", " << cells << " equations; ";
    }
}

void criterion8(Result& r) {
    std::size_t n = 0;
    for (const auto& [name, s] : double_spans()) {
        auto J = invert_surjective_equivalence(s.left);
        r.require(is_identity_functor(compose_double_functors(s.left, J)), name + " PJ = 1");
        r.require(check_double_functor_properties(J).gregarious_equivalence(), name + " J certified");
        ++n;
    }
    r.detail << n << " left legs inverted";
}

void criterion9(Result& r) {
    std::size_t squares = 0, mutations = 0;
    for (const auto& [name, s] : double_spans()) {
        const auto& B = *s.F.target;
        for (Id q = 0; q < to_id(s.apex->square_count()); ++q) {
            const auto& fr = s.apex->frame(q);
            const auto& sq = s.data.squares[q];
            auto four = check_coherence_quadruple(s, fr.top, fr.bottom, fr.left, fr.right, sq.alpha, sq.beta);
            r.require(four == std::array<bool, 4>{true, true, true, true}, name + " quadruple");
            ++squares;
            for (Id other : B.squares_in(B.frame(sq.beta))) {
                if (other == sq.beta) continue;
                auto m = check_coherence_quadruple(s, fr.top, fr.bottom, fr.left, fr.right, sq.alpha, other);
                r.require(m == std::array<bool, 4>{false, false, false, false}, name + " mutation detected");
                ++mutations;
            }
        }
    }
    r.require(mutations >= 10, "at least 10 mutations");
    r.detail << squares << " squares all true; " << mutations << " beta mutations all false";
}

void criterion10(Result& r) {
    auto q = fx::quotient_double();
    auto s = build_span_double(q);
    auto G = compose_double_functors(s.left, invert_surjective_equivalence(s.right));
    r.require(G.source == q.target && G.target == q.source, "reverse direction");
    r.require(validate_double_pseudofunctor(G).report.ok(), "G validates");
    r.require(check_double_functor_properties(G).gregarious_equivalence(), "G certified");
    auto back = build_span_double(G);
    r.require(back.certified() && verify_apex_equations(back).all_hold(), "span of G");
    auto e = find_strict_double_functor(q.target, q.source, [](const DoublePseudofunctor& H) {
        return check_double_functor_properties(H).gregarious_equivalence();
    });
    r.require(e.status == SearchStatus::exhausted, "no strict reverse equivalence");
    r.detail << "pseudo reverse G strict=" << validate_double_pseudofunctor(G).strict
             << " certified; strict reverse search " << to_string(e.status) << " after " << e.candidates_examined
             << " candidates";
}

void criterion11(Result& r) {
    auto k = fx::b2();
    auto d = fx::d_of(k);
    const Id u = d->horizontal.morphisms.at("u", "hcell");
    // 1-cells isomorphic to u, read off the 2-category directly.
    std::set<std::string> iso;
    for (Id w : k->one.hom(k->src0(u), k->tgt0(u)))
        for (Id t : k->hom2(u, w))
            if (k->is_invertible(t)) iso.insert(k->name1(w));
    std::set<std::string> comp;
    for (const auto& p : find_companions(u, *d))
        if (check_companions(p, *d).ok()) comp.insert(d->vname(p.f_prime));
    r.require(comp == iso, "companions of u");
    r.detail << "companions of u: {";
    for (const auto& n : comp) r.detail << " " << n;
    r.detail << " }; ";

    std::size_t lifted = 0;
    for (const auto& [name, s] : double_spans())
        for (const auto* P : {&s.left, &s.right}) {
            const auto& C = *P->source;
            const auto& A = *P->target;
            for (Id h = 0; h < to_id(C.hcell_count()); ++h)
                for (Id v = 0; v < to_id(C.vcell_count()); ++v) {
                    const Id a = C.horizontal.src[h], b = C.horizontal.tgt[h];
                    if (C.vertical.src[v] != a || C.vertical.tgt[v] != b) continue;
                    for (const auto& p : find_companions(P->h(h), A)) {
                        if (p.f_prime != P->v(v)) continue;
                        std::vector<Id> sig, ta;
                        for (Id x : C.squares_in({C.h1(a), h, C.v1(a), v}))
                            if (P->sq(x) == p.sigma) sig.push_back(x);
                        for (Id x : C.squares_in({h, C.h1(b), v, C.v1(b)}))
                            if (P->sq(x) == p.tau) ta.push_back(x);
                        r.require(sig.size() == 1 && ta.size() == 1, name + " unique lifts of binding cells");
                        if (sig.size() == 1 && ta.size() == 1)
                            r.require(check_companions({h, v, sig[0], ta[0]}, C).ok(), name + " reflection");
                        ++lifted;
                    }
                }
        }
    r.detail << lifted << " companion pairs reflected along the legs";
}

}  // namespace

int main() {
    const std::vector<std::function<void(Result&)>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                             criterion5, criterion6, criterion7, criterion8,
                                                             criterion9, criterion10, criterion11};
    int unexpected = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Result r;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i](r);
        } catch (const std::exception& e) {
            r.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "criterion " << i + 1 << ": " << (r.pass ? "PASS" : "FAIL") << " [" << secs << "s] "
                  << r.detail.str();
        if (!r.pass && !r.known_failure.empty()) std::cout << " (known: " << r.known_failure << ")";
        std::cout << std::endl;
        if (!r.pass && r.known_failure.empty()) ++unexpected;
    }
    return unexpected == 0 ? 0 : 1;
}
