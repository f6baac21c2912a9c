// Writes the sample documents used by the CLI tests into the given directory.

#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <json.hpp>

#include "hvb/random.hpp"
#include "hvb/sdp.hpp"
#include "hvb/svb.hpp"

namespace {

using namespace hvb;
using nlohmann::json;

std::string dir;

void put(const std::string& name, const json& doc) {
    std::ofstream out(dir + "/" + name);
    out << doc.dump(1) << "\n";
    if (!out) throw std::runtime_error("cannot write " + name);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_fixtures <dir>\n";
        return 2;
    }
    dir = argv[1];
    std::mt19937 rng(4242);

    json pair2 = groupoid_to_json(pair_groupoid(2));
    put("groupoid_pair2.json", pair2);
    json broken = pair2;
    // Send the composite of the first composable pair to a different arrow.
    auto& entry = broken["composition"][0];
    for (const auto& a : pair2["arrows"])
        if (a["name"] != entry[2]) {
            entry[2] = a["name"];
            break;
        }
    put("groupoid_broken_composition.json", broken);
    json malformed = pair2;
    malformed.erase("units");
    put("groupoid_missing_units.json", malformed);

    auto p2 = gen::nerve_of(pair_groupoid(2));
    const Ruth order0 = gen::rand_ruth(rng, p2, ChainComplex({2}, {Mat()}));
    put("ruth_order0.json", ruth_to_json(order0));
    const Ruth order1 = gen::rand_ruth(rng, p2, ChainComplex({1, 1}, {Mat(), Mat::identity(1)}));
    put("ruth_order1.json", ruth_to_json(order1));
    Ruth rh2 = order1;
    for (std::size_t g = 0; g < p2->size(2); ++g)
        if (!p2->is_degenerate(2, g)) {
            Mat b = rh2.block(2, g, 0);
            b(0, 0) += 1;
            rh2.set_block(2, g, 0, b);
            break;
        }
    put("ruth_rh2_perturbed.json", ruth_to_json(rh2));

    const ChainComplex y = gen::rand_bounded_complex(rng, {1, 2, 1});
    const Ruth unit = chain_complexes(gen::nerve_of(unit_groupoid(1)), {y});
    put("ruth_unit_complex.json", ruth_to_json(unit));

    const SimpVB dkv = to_bundle(dk(y, 4));
    put("svb_dk.json", svb_to_json(dkv));
    put("cleavage_dk_degenerate.json", cleavage_to_json(degenerate_cleavage(dkv)));
    json bad = svb_to_json(dkv);
    for (auto& f : bad["faces"])
        if (f["level"] == 2) {
            f["matrix"][0][0] = "2";
            break;
        }
    put("svb_broken_face.json", bad);

    const Sdp s = build_sdp(order0, 3);
    put("svb_sdp_order0.json", svb_to_json(s.bundle));
    put("cleavage_sdp_order0.json", cleavage_to_json(s.cleavage));

    const NotFull nf = example_not_full(4);
    put("svb_not_full.json", svb_to_json(nf.v));
    put("cleavage_not_full_C.json", cleavage_to_json(nf.c));
    put("cleavage_not_full_Cprime.json", cleavage_to_json(nf.c_prime));
    put("cleavage_not_full_Cprime_corrected.json", cleavage_to_json(example_not_full(4, true).c_prime));
    return 0;
}
