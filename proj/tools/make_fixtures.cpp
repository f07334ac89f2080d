// Writes the bundled structure files used by the tests and the README examples.

#include <filesystem>
#include <iostream>

#include "fincat/double_span.hpp"
#include "fincat/fixtures.hpp"
#include "fincat/io.hpp"
#include "fincat/oracle.hpp"

using namespace fincat;
namespace fx = fincat::fixtures;
namespace fs = std::filesystem;

namespace {

std::string file_name(const std::string& catalog_name) {
    std::string s;
    for (char c : catalog_name) s += c == '+' ? std::string("_plus_") : std::string(1, c);
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_fixtures DIR\n";
        return 2;
    }
    const fs::path dir = argv[1];
    auto put = [&](const fs::path& rel, const json& j) { write_json_file(dir / rel, j); };

    for (const auto& [name, cat] : fx::catalog()) put(fs::path("catalog") / (file_name(name) + ".json"), to_json(*cat));

    auto I = fx::iso_category();
    auto one = fx::terminal_category();
    put("I.json", to_json(*I));
    put("1.json", to_json(*one));
    // Source and target given as paths relative to the functor file.
    json f = to_json(all_functors(I, one).front());
    f["source"] = "I.json";
    f["target"] = "1.json";
    put("F_I_to_1.json", f);

    auto m1 = fx::m1();
    auto z4 = fx::z4_parity();
    put("M1.json", to_json(*m1));
    put("Z4.json", to_json(*z4));
    put("quotient_Z4_Z2.json", to_json(fx::quotient_z4_z2()));

    put("B2.json", to_json(*fx::b2()));
    put("vu1.json", to_json(*fx::vu1()));
    put("Bz.json", to_json(*fx::bz()));
    put("id_B2.json", to_json(identity_pseudofunctor(fx::b2())));
    put("B2_to_terminal.json", to_json(fx::collapse_to_terminal(fx::b2())));

    auto db2 = fx::d_of(fx::b2());
    put("D_B2.json", to_json(*db2));
    put("id_D_B2.json", to_json(identity_double_functor(db2)));
    auto q = fx::quotient_double();
    put("D_Z4.json", to_json(*q.source));
    put("D_M1.json", to_json(*q.target));
    put("quotient_double.json", to_json(q));

    // Left leg of the span for the identity of D(Bz), and a corruption of
    // it that identifies the two automorphisms of u.
    auto dbz = fx::d_of(fx::bz());
    auto span = build_span_double(identity_double_functor(dbz));
    put("P_D_Bz.json", to_json(span.left));
    auto squash = find_strict_double_functor(dbz, dbz, [](const DoublePseudofunctor& G) {
        auto r = check_double_functor_properties(G);
        return r.surjective_on_objects && r.horizontally_full && r.vertically_full && !r.faithful_on_squares;
    });
    if (!squash.witness) {
        std::cerr << "no squashing endofunctor found\n";
        return 1;
    }
    put("P_D_Bz_corrupted.json", to_json(compose_double_functors(*squash.witness, span.left)));

    // Deliberately broken inputs.
    json bad = to_json(*I);
    bad["morphisms"][0]["src"] = "nowhere";
    put("broken/dangling_src.json", bad);
    bad = to_json(*I);
    bad["compose"].erase(bad["compose"].size() - 1);
    put("broken/partial_compose.json", bad);
    bad = to_json(*I);
    bad["kind"] = "operad";
    put("broken/unknown_kind.json", bad);
    json nonfunctor = to_json(identity_functor(I));
    nonfunctor["mor_map"][nonfunctor["mor_map"].begin().key()] = nonfunctor["mor_map"].back();
    put("broken/not_a_functor.json", nonfunctor);
    return 0;
}
