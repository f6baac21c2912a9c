// hvb: validate documents, build and split semi-direct products, run the gallery.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 the input could not be used.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "acceptance.hpp"
#include "hvb/random.hpp"
#include "hvb/sdp.hpp"
#include "hvb/split.hpp"
#include "hvb/svb.hpp"

namespace {

using namespace hvb;
using nlohmann::json;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string json_out;
    bool quiet = false;
    int level = -1;
    int mcap = -1;
};

// One command's report: inputs with digests, named checks and a result payload.
// Nothing time-dependent goes into it.
struct Run {
    std::string command;
    json args = json::object();
    json inputs = json::array();
    Report report;
    json result = json::object();
};

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) throw std::runtime_error("sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 15]);
    }
    return out;
}

// Relative paths missing from the working directory are looked up in $HVB_FIXTURES.
std::filesystem::path resolve(const std::string& p) {
    namespace fs = std::filesystem;
    if (fs::exists(p)) return p;
    if (const char* dir = std::getenv("HVB_FIXTURES"); dir && fs::path(p).is_relative()) {
        const fs::path q = fs::path(dir) / p;
        if (fs::exists(q)) return q;
    }
    throw InputError("cannot open '" + p + "'");
}

json load(Run& run, const std::string& path) {
    const auto full = resolve(path);
    std::ifstream in(full, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    run.inputs.push_back({{"path", path}, {"sha256", sha256_hex(text)}});
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

void save(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << doc.dump(1) << "\n";
}

// Loader errors are input errors; the document was not usable.
template <class F>
auto parse_doc(const std::string& path, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const GroupoidAxiomError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

Ruth load_ruth(Run& run, const std::string& path, int mcap) {
    const json doc = load(run, path);
    Ruth r = parse_doc(path, [&] { return ruth_from_json(doc); });
    if (mcap >= 0) {
        if (mcap > Nerve::kMaxLevel) throw InputError("--mcap beyond the supported nerve level");
        r.mcap = mcap;
    }
    return r;
}

SimpVB load_svb(Run& run, const std::string& path) {
    const json doc = load(run, path);
    return parse_doc(path, [&] { return svb_from_json(doc); });
}

Cleavage load_cleavage(Run& run, const std::string& path, const SimpVB& v) {
    const json doc = load(run, path);
    return parse_doc(path, [&] { return cleavage_from_json(doc, v); });
}

void record_message(Report& rep, const std::string& name, bool ok, const std::string& message) {
    rep.record(name, ok, [&] { return json{{"message", message}}; });
}

// The requirements for splitting: complement, normal, weakly flat.  Flatness is
// reported as a property only.
void cleavage_checks(Run& run, const SimpVB& v, const Cleavage& c) {
    const CleavageReport cr = check_cleavage(v, c);
    run.report.merge(cr.report.only([](const std::string& name) { return name != "flat" && name != "flat: interior faces"; }));
    run.result["cleavage"] = {{"complement", cr.complement}, {"normal", cr.normal}, {"weakly_flat", cr.weakly_flat}, {"flat", cr.flat}};
}

// validate <kind> <path>
void cmd_validate(Run& run, const Options& o, const std::string& kind, const std::string& path, const std::string& bundle) {
    run.args = {{"kind", kind}, {"path", path}};
    if (kind == "groupoid") {
        const json doc = load(run, path);
        try {
            const FinGroupoid g = parse_doc(path, [&] { return groupoid_from_json(doc); });
            record_message(run.report, "groupoid axioms", true, "");
            run.result = {{"name", g.name()}, {"objects", g.num_objects()}, {"arrows", g.num_arrows()}};
        } catch (const GroupoidAxiomError& e) {
            record_message(run.report, "groupoid axioms", false, e.what());
        }
    } else if (kind == "ruth") {
        const Ruth r = load_ruth(run, path, o.mcap);
        run.report.merge(validate(r));
        run.result = {{"order", r.top()}, {"mcap", r.mcap}, {"dims", bundle_to_json(r.E)}};
    } else if (kind == "svb") {
        const SimpVB v = load_svb(run, path);
        run.report.merge(check_simplicial(v));
        run.result = {{"L", v.L}};
    } else if (kind == "cleavage") {
        if (bundle.empty()) throw InputError("validate cleavage needs --bundle <svb document>");
        const SimpVB v = load_svb(run, bundle);
        run.args["bundle"] = bundle;
        const Cleavage c = load_cleavage(run, path, v);
        cleavage_checks(run, v, c);
    } else {
        throw InputError("unknown document kind '" + kind + "'");
    }
}

// build-sdp <ruth>: construct, then verify simplicial identities, fibration order,
// the canonical cleavage, the core and whichever classical model applies.
void cmd_build_sdp(Run& run, const Options& o, const std::string& path, const std::string& out_svb, const std::string& out_cleavage) {
    run.args = {{"ruth", path}};
    const Ruth r = load_ruth(run, path, o.mcap);
    const int N = r.top();
    const int L = o.level >= 0 ? o.level : 2 * N + 3;
    if (L < 1 || L > Nerve::kMaxLevel) throw InputError("--level out of range");
    run.args["level"] = L;
    const Report valid = validate(r);
    run.report.merge(valid, "R: ");
    if (!valid.ok()) return;
    const Sdp s = build_sdp(r, L);
    run.report.merge(check_simplicial(s.bundle));
    // Unique fillers are certified one level past the order.
    const SimpVB low = L > N + 2 ? sdp_bundle(r, N + 2) : s.bundle;
    const FibrationReport f = check_fibration(low);
    run.report.record("fibration", f.fibration);
    if (low.L > N) run.report.record("order = N", f.order == N, [&] { return json{{"order", f.order}, {"N", N}}; });
    cleavage_checks(run, s.bundle, s.cleavage);
    const GradedBundle e = core(low);
    run.report.record("core = E", e == r.E, [&] { return json{{"core", bundle_to_json(e)}, {"E", bundle_to_json(r.E)}}; });
    run.report.merge(classical_cross_checks(r, s.bundle));
    run.result["order"] = f.order;
    run.result["L"] = L;
    run.result["fibration_checked_to"] = low.L;
    if (!out_svb.empty()) save(out_svb, svb_to_json(s.bundle));
    if (!out_cleavage.empty()) save(out_cleavage, cleavage_to_json(s.cleavage));
}

// split <svb> <cleavage>
void cmd_split(Run& run, const std::string& svb_path, const std::string& c_path, const std::string& out_ruth,
               const std::string& out_cert) {
    run.args = {{"svb", svb_path}, {"cleavage", c_path}};
    const SimpVB v = load_svb(run, svb_path);
    const Cleavage c = load_cleavage(run, c_path, v);
    cleavage_checks(run, v, c);
    if (!run.report.ok()) return;
    std::optional<SplitContext> ctx;
    try {
        ctx.emplace(v, c);
    } catch (const SplitError& e) {
        record_message(run.report, "split preconditions", false, e.what());
        return;
    }
    const Roundtrip rt = roundtrip_bundle(*ctx);
    run.report.merge(rt.report);
    const Ruth direct = extract_ruth_direct(*ctx);
    bool same = direct.E == rt.r.E;
    for (int m = 0; same && m <= rt.r.max_op(); ++m)
        for (std::size_t g = 0; same && g < rt.r.nerve->size(m); ++g)
            for (int k = 0; k <= rt.r.top(); ++k) same = same && direct.block(m, g, k) == rt.r.block(m, g, k);
    run.report.record("direct extraction agrees", same);
    run.result["order"] = ctx->order();
    run.result["ruth"] = ruth_to_json(rt.r);
    if (!out_ruth.empty()) save(out_ruth, ruth_to_json(rt.r));
    if (!out_cert.empty()) save(out_cert, json{{"checks", run.report.to_json()}, {"inputs", run.inputs}});
}

// cohomology <svb> --degree p [--ruth r]
void cmd_cohomology(Run& run, const Options& o, const std::string& path, int degree, const std::string& ruth_path) {
    run.args = {{"svb", path}, {"degree", degree}};
    const SimpVB v = load_svb(run, path);
    if (degree < 0 || degree + 1 > v.L) throw InputError("--degree beyond the truncation of the bundle (need degree + 1 <= L)");
    std::optional<Ruth> r;
    if (!ruth_path.empty()) {
        run.args["ruth"] = ruth_path;
        r = load_ruth(run, ruth_path, o.mcap);
    }
    const CohomologyReport c = linear_cochain_cohomology(v, degree, r ? &*r : nullptr);
    run.report.merge(c.report);
    run.result["dims"] = c.dims;
}

Ruth rank_one(std::shared_ptr<const Nerve> nv, bool sign) {
    const auto& G = nv->groupoid();
    std::vector<Mat> mats;
    for (int a = 0; a < G.num_arrows(); ++a) mats.push_back(Mat::identity(1).scaled(sign && !G.is_unit(a) ? -1 : 1));
    return representation(nv, std::vector<int>(G.num_objects(), 1), mats);
}

void example_not_full(Run& run) {
    const NotFull ex = hvb::example_not_full(3);
    const CleavageReport c = check_cleavage(ex.v, ex.c);
    run.report.record("C normal", c.normal);
    run.report.record("C flat", c.flat);
    const CleavageReport cp = check_cleavage(ex.v, ex.c_prime);
    run.report.record("C' normal", cp.normal);
    const CheckResult* wf = cp.report.find("weakly flat");
    run.report.record("C' weakly flat", cp.weakly_flat, [&] { return json{{"failures", wf->failed}, {"first", wf->witness}}; });
    const Report m = check_weakly_flat_morphism(identity_map(ex.v), ex.v, ex.c_prime, ex.c);
    const Vec w{0, 1, 1};
    run.report.record("id : (V, C') -> (V, C) is not weakly flat", !m.ok());
    run.report.record("lambda = 0, mu = 1 lies in C' but not in C",
                      ex.c_prime.c[2][ex.witness_simplex].contains(w) && !ex.c.c[2][ex.witness_simplex].contains(w));
    // The corrected third triangle keeps every assertion.
    const NotFull fix = hvb::example_not_full(3, true);
    const CleavageReport fc = check_cleavage(fix.v, fix.c_prime);
    run.report.record("corrected C' normal and weakly flat", fc.normal && fc.weakly_flat);
    run.report.record("corrected: id : (V, C') -> (V, C) is not weakly flat",
                      !check_weakly_flat_morphism(identity_map(fix.v), fix.v, fix.c_prime, fix.c).ok());
    run.result["weakly_flat_failures_of_printed_C'"] = wf ? wf->failed : 0;
}

void example_rh2_converse(Run& run) {
    std::mt19937 rng(79);
    auto nv = gen::nerve_of(pair_groupoid(2));
    const Ruth r = gen::rand_ruth(rng, nv, ChainComplex({1, 1}, {Mat(), Mat::identity(1)}));
    std::size_t g2 = 0;
    for (std::size_t g = 0; g < nv->size(2); ++g)
        if (!nv->is_degenerate(2, g)) g2 = g;
    const Report base = rh2_sensitivity(r, 2, g2, 0, 0, 0, Q(0), 4);
    run.report.record("unperturbed: RH2 holds", base.ok("RH2"));
    run.report.record("unperturbed: d_0 d_0 = d_0 d_1 holds", base.ok("d_0 d_0 = d_0 d_1"));
    const Report p = rh2_sensitivity(r, 2, g2, 0, 0, 0, Q(1), 4);
    run.report.record("R_2 + 1 at one entry: RH2 fails", !p.ok("RH2"));
    run.report.record("R_2 + 1 at one entry: d_0 d_0 = d_0 d_1 fails", !p.ok("d_0 d_0 = d_0 d_1"),
                      [&] { return json{{"note", "d_0 d_0 = d_0 d_1 unexpectedly held"}}; });
    run.report.record("d_0 d_0 = d_0 d_1 iff RH2", p.ok("d_0 d_0 = d_0 d_1 iff RH2"));
    const Report u = rh2_sensitivity(r, 1, nv->unit_simplex(1, 1), 0, 0, 0, Q(1, 2), 4);
    run.report.record("R_1 at a unit changed: d_0 u_0 = id fails", !u.ok("d_0 u_0 = id"));
    run.report.record("d_0 u_0 = id iff unit clause", u.ok("d_0 u_0 = id iff unit clause"));
    if (const auto* w = p.find("d_0 d_0 = d_0 d_1")) run.result["d0d0_witness"] = w->witness;
    if (const auto* w = p.find("RH2")) run.result["rh2_witness"] = w->witness;
}

void example_cohomology_sign(Run& run) {
    auto z2 = gen::nerve_of(cyclic_group(2));
    const Ruth sign = rank_one(z2, true), triv = rank_one(z2, false);
    const CohomologyReport s = linear_cochain_cohomology(sdp_bundle(sign, 3), 2, &sign);
    const CohomologyReport t = linear_cochain_cohomology(sdp_bundle(triv, 3), 2, &triv);
    run.report.merge(s.report, "sign: ");
    run.report.record("H^0(Z/2; sign) = 0", s.dims[0] == 0, [&] { return json{{"dims", s.dims}}; });
    run.report.record("H^0(Z/2; trivial) = 1", t.dims[0] == 1, [&] { return json{{"dims", t.dims}}; });
    run.result = {{"sign", s.dims}, {"trivial", t.dims}};
}

void example_all(Run& run, const Options& o) {
    json lines = json::array();
    acceptance::run({}, [&](const acceptance::Outcome& oc) {
        if (!o.quiet) {
            std::printf("%s\n", acceptance::format_line(oc).c_str());
            std::fflush(stdout);
            std::fprintf(stderr, "  criterion %d: %.1f s\n", oc.id, oc.seconds);
        }
        run.report.record("criterion " + std::to_string(oc.id) + ": " + oc.title, oc.pass,
                          [&] { return json{{"detail", oc.detail}}; });
        lines.push_back({{"id", oc.id}, {"pass", oc.pass}, {"detail", oc.detail}, {"known_red", acceptance::known_red(oc.id)}});
    });
    run.result["criteria"] = lines;
}

const std::vector<std::string> kGallery = {"not-full", "rh2-converse", "cohomology-sign-rep", "all"};

void cmd_examples(Run& run, const Options& o, const std::string& name) {
    run.args = {{"name", name}};
    if (name.empty()) {
        run.result["gallery"] = kGallery;
        if (!o.quiet)
            for (const auto& n : kGallery) std::printf("%s\n", n.c_str());
        return;
    }
    if (name == "not-full") return example_not_full(run);
    if (name == "rh2-converse") return example_rh2_converse(run);
    if (name == "cohomology-sign-rep") return example_cohomology_sign(run);
    if (name == "all") return example_all(run, o);
    throw InputError("unknown example '" + name + "'");
}

int finish(const Run& run, const Options& o, bool print_table) {
    const bool ok = run.report.ok();
    json doc = {{"command", run.command}, {"arguments", run.args}, {"inputs", run.inputs},
                {"ok", ok},               {"checks", run.report.to_json()}, {"result", run.result}};
    if (!o.json_out.empty()) save(o.json_out, doc);
    if (!o.quiet) {
        if (print_table) std::cout << run.report.table();
        std::cout << (ok ? "ok" : "FAILED") << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Representations up to homotopy and simplicial vector bundles over finite groupoids"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--json", o.json_out, "Write the report as JSON");
    app.add_flag("--quiet", o.quiet, "No report on stdout");
    app.add_option("--level", o.level, "Truncation level L");
    app.add_option("--mcap", o.mcap, "Highest m for which RH2 is checked");

    std::string kind, path, bundle, path2, out_svb, out_cleavage, out_ruth, out_cert, ruth, name;
    int degree = -1;

    auto* validate_cmd = app.add_subcommand("validate", "Parse a document and run its validators");
    validate_cmd->add_option("kind", kind, "groupoid, ruth, svb or cleavage")->required();
    validate_cmd->add_option("path", path)->required();
    validate_cmd->add_option("--bundle", bundle, "The svb document a cleavage refers to");

    auto* build = app.add_subcommand("build-sdp", "Semi-direct product of a representation, with its verification");
    build->add_option("ruth", path)->required();
    build->add_option("--out-svb", out_svb);
    build->add_option("--out-cleavage", out_cleavage);

    auto* split = app.add_subcommand("split", "Extract a representation from a bundle with a cleavage");
    split->add_option("svb", path)->required();
    split->add_option("cleavage", path2)->required();
    split->add_option("--out-ruth", out_ruth);
    split->add_option("--out-certificate", out_cert);

    auto* examples = app.add_subcommand("examples", "Gallery: not-full, rh2-converse, cohomology-sign-rep, all");
    examples->add_option("name", name);

    auto* coh = app.add_subcommand("cohomology", "Linear cochain cohomology of a bundle");
    coh->add_option("svb", path)->required();
    coh->add_option("--degree", degree, "Highest degree p")->required();
    coh->add_option("--ruth", ruth, "Order 0 representation underlying the bundle, for the explicit formula");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const auto t0 = std::chrono::steady_clock::now();
    Run run;
    bool table = true;
    try {
        if (*validate_cmd) {
            run.command = "validate";
            cmd_validate(run, o, kind, path, bundle);
        } else if (*build) {
            run.command = "build-sdp";
            cmd_build_sdp(run, o, path, out_svb, out_cleavage);
        } else if (*split) {
            run.command = "split";
            cmd_split(run, path, path2, out_ruth, out_cert);
        } else if (*examples) {
            run.command = "examples";
            table = name != "all" && !name.empty();
            cmd_examples(run, o, name);
        } else if (*coh) {
            run.command = "cohomology";
            cmd_cohomology(run, o, path, degree, ruth);
        }
    } catch (const InputError& e) {
        std::cerr << "hvb: " << e.what() << "\n";
        return 2;
    }
    const int code = finish(run, o, table);
    if (!o.quiet)
        std::cerr << "elapsed " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";
    return code;
}
