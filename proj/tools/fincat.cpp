// Command line front end: validate, check, span, invert, oracle, closure.
// Exit codes: 0 pass or found, 1 certified negative, 2 broken input or budget.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "fincat/cat_span.hpp"
#include "fincat/double_span.hpp"
#include "fincat/io.hpp"
#include "fincat/oracle.hpp"

using namespace fincat;
namespace fs = std::filesystem;

namespace {

struct Options {
    std::string kind;
    std::string prop;
    std::string pred = "any";
    std::vector<std::string> files;
    std::vector<std::string> edges;
    std::string out;
    std::string format = "text";
    std::uint64_t budget = 10'000'000;
    unsigned parallel = 1;
};

// Exit status plus a report. Kept as a json object; text output flattens it.
struct Outcome {
    int status = 0;
    json report = json::object();
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void flatten(const json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
    } else {
        os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const Options& o, const json& report) {
    if (o.format == "json")
        std::cout << report.dump(2) << "\n";
    else
        flatten(report, "", std::cout);
}

// Kind of a file as named on the command line.
std::string kind_family(const AnyStructure& s) {
    switch (s.index()) {
    case 0:
    case 1: return "cat";
    case 2:
    case 3: return "mon";
    case 4:
    case 5: return "2cat";
    default: return "dbl";
    }
}

AnyStructure load(const Options& o, const std::string& path, bool validate) {
    auto s = parse_structure_file(path, validate);
    if (!o.kind.empty() && kind_family(s) != o.kind)
        throw InputError(path + " holds a " + kind_name(s) + ", not a --kind " + o.kind + " structure");
    return s;
}

template <class T>
T load_as(const Options& o, const std::string& path, const char* what) {
    auto s = load(o, path, true);
    if (auto* p = std::get_if<T>(&s)) return *p;
    throw InputError(path + " holds a " + kind_name(s) + ", expected a " + what);
}

json conditions_json(const std::vector<std::pair<std::string, bool>>& c,
                     const std::map<std::string, std::string>& counterexample) {
    json j = json::object();
    json flags = json::array();
    for (const auto& [k, v] : c) flags.push_back({{"condition", k}, {"holds", v}});
    j["conditions"] = flags;
    for (const auto& [k, v] : c)
        if (!v) {
            j["first_failure"] = k;
            if (auto it = counterexample.find(k); it != counterexample.end()) j["counterexample"] = it->second;
            break;
        }
    return j;
}

std::vector<std::pair<std::string, bool>> functor_conditions(const FunctorPropertyReport& r, const std::string& prop) {
    if (prop == "equivalence")
        return {{"essentially_surjective", r.essentially_surjective}, {"full", r.full}, {"faithful", r.faithful}};
    return {{"surjective_on_objects", r.surjective_on_objects}, {"full", r.full}, {"faithful", r.faithful}};
}

std::vector<std::pair<std::string, bool>> twofunctor_conditions(const Pseudofunctor2Report& r,
                                                                const std::string& prop) {
    if (prop == "biequivalence")
        return {{"essentially_surjective", r.essentially_surjective}, {"locally_equivalence", r.locally_equivalence}};
    return {{"surjective_on_objects", r.surjective_on_objects},
            {"locally_surjective_equivalence", r.locally_surjective_equivalence}};
}

std::vector<std::pair<std::string, bool>> double_conditions(const DoubleFunctorReport& r, const std::string& prop) {
    if (prop == "gregarious-equivalence")
        return {{"gregarious on objects", r.gregarious_surjective},
                {"horizontally essentially full", r.horizontally_essentially_full},
                {"vertically essentially full", r.vertically_essentially_full},
                {"full on squares", r.full_on_squares},
                {"faithful on squares", r.faithful_on_squares}};
    return {{"surjective on objects", r.surjective_on_objects},
            {"horizontally full", r.horizontally_full},
            {"vertically full", r.vertically_full},
            {"full on squares", r.full_on_squares},
            {"faithful on squares", r.faithful_on_squares}};
}

std::vector<std::pair<std::string, bool>> monoidal_conditions(const MonoidalFunctorReport& r,
                                                              const std::string& prop) {
    if (prop == "strict") return {{"strict", r.strict}};
    if (prop == "monoidal-equivalence") return {{"monoidal_equivalence", r.monoidal_equivalence}};
    return {{"strict", r.strict}, {"surjective_equivalence", r.surjective_equivalence}};
}

bool all_true(const std::vector<std::pair<std::string, bool>>& c) {
    for (const auto& [k, v] : c)
        if (!v) return false;
    return true;
}

PropertyOptions double_options(const Options& o, bool gregarious) {
    return {gregarious, {o.budget, o.parallel}};
}

Outcome cmd_validate(const Options& o) {
    Outcome out;
    const auto& path = o.files.at(0);
    auto s = load(o, path, false);
    ValidationReport r = std::visit(
        [](const auto& x) -> ValidationReport {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, CatPtr>) return validate_category(*x);
            else if constexpr (std::is_same_v<T, FinFunctor>) return validate_functor(x);
            else if constexpr (std::is_same_v<T, MonPtr>) return validate_monoidal(*x);
            else if constexpr (std::is_same_v<T, MonoidalFunctorData>) return validate_monoidal_functor(x).validation;
            else if constexpr (std::is_same_v<T, TwoPtr>) return validate_2category(*x);
            else if constexpr (std::is_same_v<T, Pseudofunctor2>) return validate_pseudofunctor(x).report;
            else if constexpr (std::is_same_v<T, DblPtr>) return validate_double_category(*x);
            else return validate_double_pseudofunctor(x).report;
        },
        s);
    out.report = {{"verb", "validate"}, {"file", path}, {"structure", kind_name(s)}};
    const bool partial = r.axiom.size() > 6 && r.axiom.ends_with("-total");
    if (r.verdict == Verdict::structural_error || partial) {
        out.status = 2;
        out.report["error"] = {{"kind", partial ? "partial-table" : "structural"}, {"axiom", r.axiom}, {"message", r.detail}};
        return out;
    }
    out.report["result"] = r.ok() ? "pass" : "fail";
    if (!r.ok()) {
        out.report["axiom"] = r.axiom;
        out.report["detail"] = r.detail;
    }
    out.status = r.ok() ? 0 : 1;
    return out;
}

Outcome cmd_check(const Options& o) {
    Outcome out;
    const auto& path = o.files.at(0);
    out.report = {{"verb", "check"}, {"kind", o.kind}, {"prop", o.prop}, {"file", path}};
    std::vector<std::pair<std::string, bool>> c;
    std::map<std::string, std::string> cex;
    if (o.kind == "cat") {
        auto F = load_as<FinFunctor>(o, path, "functor");
        auto r = check_functor_properties(F);
        c = functor_conditions(r, o.prop);
        cex = r.counterexample;
    } else if (o.kind == "mon") {
        auto F = load_as<MonoidalFunctorData>(o, path, "monoidal functor");
        auto r = validate_monoidal_functor(F);
        c = monoidal_conditions(r, o.prop);
        cex = r.properties.counterexample;
    } else if (o.kind == "2cat") {
        auto F = load_as<Pseudofunctor2>(o, path, "pseudofunctor");
        auto r = check_pseudofunctor_properties(F);
        c = twofunctor_conditions(r, o.prop);
        cex = r.counterexample;
    } else {
        auto F = load_as<DoublePseudofunctor>(o, path, "double functor");
        auto r = check_double_functor_properties(F, double_options(o, o.prop == "gregarious-equivalence"));
        if (r.budget_exhausted) {
            out.status = 2;
            out.report["error"] = {{"kind", "budget"}, {"message", "a witness search hit its budget"}};
            return out;
        }
        c = double_conditions(r, o.prop);
        cex = r.counterexample;
    }
    out.report.update(conditions_json(c, cex));
    out.report["result"] = all_true(c) ? "pass" : "fail";
    out.status = all_true(c) ? 0 : 1;
    return out;
}

void write_span(const Options& o, Outcome& out, const json& apex, const json& left, const json& right) {
    if (o.out.empty()) return;
    fs::path dir(o.out);
    write_json_file(dir / "apex.json", apex);
    write_json_file(dir / "left.json", left);
    write_json_file(dir / "right.json", right);
    out.report["written"] = {(dir / "apex.json").string(), (dir / "left.json").string(),
                             (dir / "right.json").string()};
}

Outcome cmd_span(const Options& o) {
    Outcome out;
    const auto& path = o.files.at(0);
    out.report = {{"verb", "span"}, {"kind", o.kind}, {"file", path}};
    try {
        bool certified = false;
        if (o.kind == "cat") {
            auto s = build_span_cat(load_as<FinFunctor>(o, path, "functor"));
            certified = s.certified();
            out.report["apex"] = {{"objects", s.apex->object_count()}, {"morphisms", s.apex->morphism_count()}};
            out.report["left"] = s.left_report.summary();
            out.report["right"] = s.right_report.summary();
            write_span(o, out, to_json(*s.apex), to_json(s.left), to_json(s.right));
        } else if (o.kind == "mon") {
            auto s = build_span_monoidal(load_as<MonoidalFunctorData>(o, path, "monoidal functor"));
            certified = s.certified();
            out.report["apex"] = {{"objects", s.apex->base->object_count()},
                                  {"morphisms", s.apex->base->morphism_count()},
                                  {"validation", validate_monoidal(*s.apex).describe()}};
            out.report["left"] = s.left_report.properties.summary();
            out.report["right"] = s.right_report.properties.summary();
            write_span(o, out, to_json(*s.apex), to_json(s.left), to_json(s.right));
        } else if (o.kind == "2cat") {
            auto s = build_span_2cat(load_as<Pseudofunctor2>(o, path, "pseudofunctor"));
            certified = s.certified();
            out.report["apex"] = {{"cells0", s.apex->count0()},
                                  {"cells1", s.apex->count1()},
                                  {"cells2", s.apex->count2()},
                                  {"validation", validate_2category(*s.apex).describe()}};
            out.report["left"] = s.left_report.summary();
            out.report["right"] = s.right_report.summary();
            write_span(o, out, to_json(*s.apex), to_json(s.left), to_json(s.right));
        } else {
            auto s = build_span_double(load_as<DoublePseudofunctor>(o, path, "double functor"));
            certified = s.certified();
            auto eq = verify_apex_equations(s);
            out.report["apex"] = {{"objects", s.apex->object_count()},
                                  {"hcells", s.apex->hcell_count()},
                                  {"vcells", s.apex->vcell_count()},
                                  {"squares", s.apex->square_count()},
                                  {"validation", validate_double_category(*s.apex).describe()},
                                  {"coherence_equations", eq.all_hold() ? "hold" : "fail"}};
            out.report["left"] = conditions_json(double_conditions(s.left_report, "surjective-equivalence"),
                                                 s.left_report.counterexample);
            out.report["right"] = conditions_json(double_conditions(s.right_report, "surjective-equivalence"),
                                                  s.right_report.counterexample);
            write_span(o, out, to_json(*s.apex), to_json(s.left), to_json(s.right));
        }
        out.report["result"] = certified ? "certified" : "not certified";
        out.status = certified ? 0 : 1;
    } catch (const PreconditionError& e) {
        out.report["result"] = "refused";
        out.report["reason"] = e.what();
        out.report["detail"] = e.report();
        out.status = 1;
    }
    return out;
}

Outcome cmd_invert(const Options& o) {
    Outcome out;
    const auto& path = o.files.at(0);
    out.report = {{"verb", "invert"}, {"kind", o.kind}, {"file", path}};
    auto P = load_as<DoublePseudofunctor>(o, path, "double functor");
    try {
        auto J = invert_surjective_equivalence(P);
        auto PJ = compose_double_functors(P, J);
        auto r = check_double_functor_properties(J, double_options(o, true));
        out.report["strict"] = validate_double_pseudofunctor(J).strict;
        out.report["composite_is_identity"] = is_identity_functor(PJ);
        out.report["inverse"] = conditions_json(double_conditions(r, "gregarious-equivalence"), r.counterexample);
        out.report["result"] = r.gregarious_equivalence() ? "certified" : "not certified";
        out.status = r.gregarious_equivalence() && is_identity_functor(PJ) ? 0 : 1;
        if (!o.out.empty()) {
            write_json_file(fs::path(o.out) / "inverse.json", to_json(J));
            out.report["written"] = (fs::path(o.out) / "inverse.json").string();
        }
    } catch (const PreconditionError& e) {
        out.report["result"] = "refused";
        out.report["reason"] = e.what();
        out.report["detail"] = e.report();
        out.status = 1;
    }
    return out;
}

std::function<bool(const StructureMap&)> oracle_predicate(const Options& o) {
    const std::string p = o.pred;
    if (p == "any") return [](const StructureMap&) { return true; };
    const bool se = p == "surjective-equivalence";
    if (o.kind == "cat" && (se || p == "equivalence"))
        return [se](const StructureMap& m) {
            auto r = check_functor_properties(std::get<FinFunctor>(m));
            return se ? r.surjective_equivalence() : r.equivalence();
        };
    if (o.kind == "mon" && (se || p == "equivalence"))
        return [se](const StructureMap& m) {
            auto r = validate_monoidal_functor(std::get<MonoidalFunctorData>(m));
            return se ? r.surjective_equivalence : r.monoidal_equivalence;
        };
    if (o.kind == "2cat" && (se || p == "biequivalence"))
        return [se](const StructureMap& m) {
            auto r = check_pseudofunctor_properties(std::get<Pseudofunctor2>(m));
            return se ? r.surjective_equivalence() : r.biequivalence();
        };
    if (o.kind == "dbl" && (se || p == "gregarious-equivalence")) {
        PropertyOptions opt = double_options(o, !se);
        opt.budget.workers = 1;
        return [se, opt](const StructureMap& m) {
            auto r = check_double_functor_properties(std::get<DoublePseudofunctor>(m), opt);
            return se ? r.surjective_equivalence() : r.gregarious_equivalence();
        };
    }
    throw InputError("predicate '" + p + "' is not available for --kind " + o.kind);
}

Outcome cmd_oracle(const Options& o) {
    Outcome out;
    out.report = {{"verb", "oracle"}, {"kind", o.kind}, {"pred", o.pred}, {"source", o.files.at(0)},
                  {"target", o.files.at(1)}};
    auto as_structure = [&](const std::string& path) -> Structure {
        auto s = load(o, path, true);
        if (auto* p = std::get_if<CatPtr>(&s)) return *p;
        if (auto* p = std::get_if<MonPtr>(&s)) return *p;
        if (auto* p = std::get_if<TwoPtr>(&s)) return *p;
        if (auto* p = std::get_if<DblPtr>(&s)) return *p;
        throw InputError(path + " holds a map, expected a structure");
    };
    auto a = as_structure(o.files[0]);
    auto b = as_structure(o.files[1]);
    auto pred = oracle_predicate(o);
    auto r = enumerate_maps(parse_map_kind(o.kind), a, b, pred, {o.budget, o.parallel});
    out.report["status"] = to_string(r.status);
    out.report["candidates_examined"] = r.candidates_examined;
    if (r.witness) {
        json w = std::visit([](const auto& m) { return to_json(m); }, *r.witness);
        w.erase("source");
        w.erase("target");
        out.report["witness"] = w;
    }
    out.status = r.status == SearchStatus::found ? 0 : r.status == SearchStatus::exhausted ? 1 : 2;
    return out;
}

Outcome cmd_closure(const Options& o) {
    Outcome out;
    out.report = {{"verb", "closure"}, {"kind", o.kind}};
    std::vector<CatPtr> catalog;
    std::vector<json> shapes;
    for (const auto& f : o.files) {
        catalog.push_back(load_as<CatPtr>(o, f, "category"));
        shapes.push_back(to_json(*catalog.back()));
    }
    auto locate = [&](const CatPtr& c, const std::string& path) -> CatPtr {
        auto j = to_json(*c);
        for (std::size_t i = 0; i < shapes.size(); ++i)
            if (shapes[i] == j) return catalog[i];
        throw InputError(path + " references a category outside the catalog");
    };
    std::vector<FinFunctor> edges;
    if (!o.edges.empty()) {
        for (const auto& e : o.edges) {
            auto F = load_as<FinFunctor>(o, e, "functor");
            F.source = locate(F.source, e);
            F.target = locate(F.target, e);
            auto r = check_functor_properties(F);
            if (!r.surjective_equivalence()) {
                out.report["result"] = "refused";
                out.report["reason"] = e + " is not a surjective equivalence: " + r.summary();
                out.status = 1;
                return out;
            }
            edges.push_back(F);
        }
    } else {
        for (const auto& a : catalog)
            for (const auto& b : catalog)
                for (const auto& F : all_functors(a, b, {o.budget, o.parallel}))
                    if (check_functor_properties(F).surjective_equivalence()) edges.push_back(F);
    }
    out.report["edges"] = edges.size();
    json blocks = json::array();
    for (const auto& b : zigzag_closure(catalog, edges)) {
        json blk = json::array();
        for (auto i : b) blk.push_back(o.files[i]);
        blocks.push_back(blk);
    }
    out.report["blocks"] = blocks;
    out.status = 0;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite categorical structures: validation, span constructions and oracles"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* c) {
        c->add_option("--budget", o.budget, "Candidate cap for searches");
        c->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
        c->add_option("--out,-o", o.out, "Output directory");
        c->add_option("--parallel", o.parallel, "Worker threads for searches")->check(CLI::Range(1u, 256u));
    };
    const std::vector<std::string> kinds{"cat", "mon", "2cat", "dbl"};

    auto* validate = app.add_subcommand("validate", "Validate a structure file");
    validate->add_option("--kind", o.kind)->check(CLI::IsMember(kinds));
    validate->add_option("file", o.files)->required()->expected(1);
    common(validate);

    auto* check = app.add_subcommand("check", "Check a property of a structure map");
    check->add_option("--kind", o.kind)->required()->check(CLI::IsMember(kinds));
    check->add_option("--prop", o.prop)->required();
    check->add_option("file", o.files)->required()->expected(1);
    common(check);

    auto* span = app.add_subcommand("span", "Build the span of surjective equivalences for an equivalence");
    span->add_option("--kind", o.kind)->required()->check(CLI::IsMember(kinds));
    span->add_option("file", o.files)->required()->expected(1);
    common(span);

    auto* invert = app.add_subcommand("invert", "Invert a strict surjective double equivalence");
    invert->add_option("--kind", o.kind)->check(CLI::IsMember({"dbl"}));
    invert->add_option("file", o.files)->required()->expected(1);
    common(invert);

    auto* oracle = app.add_subcommand("oracle", "Search all strict maps between two structures");
    oracle->add_option("--kind", o.kind)->required()->check(CLI::IsMember(kinds));
    oracle->add_option("--pred", o.pred, "any, equivalence, surjective-equivalence, biequivalence, "
                                         "gregarious-equivalence");
    oracle->add_option("files", o.files)->required()->expected(2);
    common(oracle);

    auto* closure = app.add_subcommand("closure", "Zigzag closure of a catalog of categories");
    closure->add_option("--kind", o.kind)->check(CLI::IsMember({"cat"}));
    closure->add_option("--edges", o.edges, "Functor files; found by enumeration when absent");
    closure->add_option("files", o.files)->required();
    common(closure);

    // Property names per kind, checked before any file is read.
    const std::map<std::string, std::vector<std::string>> props{
        {"cat", {"equivalence", "surjective-equivalence"}},
        {"mon", {"monoidal-equivalence", "surjective-equivalence", "strict"}},
        {"2cat", {"biequivalence", "surjective-equivalence"}},
        {"dbl", {"gregarious-equivalence", "surjective-equivalence"}}};
    check->callback([&] {
        const auto& allowed = props.at(o.kind);
        if (std::find(allowed.begin(), allowed.end(), o.prop) == allowed.end())
            throw CLI::ValidationError("--prop", o.prop + " is not a property for --kind " + o.kind);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    Outcome out;
    const std::string verb = app.get_subcommands().front()->get_name();
    if (verb == "invert" && o.kind.empty()) o.kind = "dbl";
    if (verb == "closure" && o.kind.empty()) o.kind = "cat";
    try {
        if (verb == "validate") out = cmd_validate(o);
        else if (verb == "check") out = cmd_check(o);
        else if (verb == "span") out = cmd_span(o);
        else if (verb == "invert") out = cmd_invert(o);
        else if (verb == "oracle") out = cmd_oracle(o);
        else out = cmd_closure(o);
    } catch (const ParseError& e) {
        out.status = 2;
        out.report = {{"verb", verb},
                      {"error", {{"kind", to_string(e.kind())}, {"location", e.location()}, {"message", e.message()}}}};
    } catch (const InputError& e) {
        out.status = 2;
        out.report = {{"verb", verb}, {"error", {{"kind", "input"}, {"message", e.what()}}}};
    } catch (const StructuralError& e) {
        out.status = 2;
        out.report = {{"verb", verb}, {"error", {{"kind", "structural"}, {"message", e.what()}}}};
    }
    out.report["exit"] = out.status;
    emit(o, out.report);
    return out.status;
}
