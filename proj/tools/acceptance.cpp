#include "acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

#include "hvb/doldkan.hpp"
#include "hvb/random.hpp"
#include "hvb/sdp.hpp"
#include "hvb/split.hpp"
#include "hvb/svb.hpp"

namespace hvb::acceptance {

using namespace hvb::gen;

namespace {

// Runtime budgets in seconds.
constexpr double kDoldKanBudget = 30;
constexpr double kSdpBudget = 300;
constexpr double kExampleBudget = 1;

constexpr int kComplexes = 100;
constexpr int kFixtures = 50;
constexpr int kMorphisms = 20;
constexpr int kSimplicialLevel = 7;
constexpr int kEntryBound = 9;

using Clock = std::chrono::steady_clock;

struct Base {
    std::string name;
    std::shared_ptr<const Nerve> nerve;
};

const std::vector<Base>& bases() {
    static const std::vector<Base> b = {{"unit(2)", nerve_of(unit_groupoid(2))},
                                        {"pair(2)", nerve_of(pair_groupoid(2))},
                                        {"pair(3)", nerve_of(pair_groupoid(3))},
                                        {"Z/2", nerve_of(cyclic_group(2))}};
    return b;
}

std::string where(const Fixture& f, std::size_t i) {
    return "fixture " + std::to_string(i) + " (" + f.base + ", N = " + std::to_string(f.r.top()) + ")";
}

// First operator where a and b differ, or empty.
std::string operator_mismatch(const Ruth& a, const Ruth& b) {
    if (!(a.E == b.E)) return "graded bundles differ";
    const int top = std::max(a.max_op(), b.max_op());
    for (int m = 0; m <= top; ++m)
        for (std::size_t g = 0; g < a.nerve->size(m); ++g)
            for (int k = 0; k <= a.top(); ++k) {
                const int tk = k + m - 1;
                if (tk < 0 || tk > a.top()) continue;
                if (!(a.block(m, g, k) == b.block(m, g, k)))
                    return "R_" + std::to_string(m) + " at simplex " + std::to_string(g) + ", degree " + std::to_string(k);
            }
    return {};
}

// Collects per-item verdicts into a report and remembers the first failure.
struct Tally {
    Report report;
    std::string first;
    int items = 0;

    void check(const std::string& name, bool ok, const std::string& context) {
        report.record(name, ok, [&] { return nlohmann::json{{"context", context}}; });
        if (!ok && first.empty()) first = context + ": " + name;
    }
    void absorb(const Report& r, const std::string& prefix, const std::string& context) {
        report.merge(r, prefix);
        if (first.empty())
            for (const auto& c : r.checks())
                if (!c.ok()) {
                    first = context + ": " + prefix + c.name + " " + c.witness.dump();
                    break;
                }
    }
    Outcome done(int id, const std::string& title, const std::string& summary) const {
        Outcome o;
        o.id = id;
        o.title = title;
        o.report = report;
        o.pass = report.ok();
        o.detail = o.pass ? summary : first;
        return o;
    }
};

// 1. Normalization of dk(Y) recovers Y.
Outcome dold_kan_round_trip() {
    std::mt19937 rng(101);
    Tally t;
    for (int i = 0; i < kComplexes; ++i) {
        const ChainComplex y = rand_bounded_complex(rng, rand_dims(rng, 4, 3), kEntryBound);
        const std::string ctx = "complex " + std::to_string(i);
        const SimpVS x = dk(y, kSimplicialLevel);
        const Normalization nz = normalize(x);
        bool dims = true;
        for (int n = 0; n <= kSimplicialLevel; ++n) dims = dims && nz.complex.dim(n) == y.dim(n);
        t.check("normalized dims", dims, ctx);
        bool equal = dims;
        for (int n = 1; equal && n <= y.top(); ++n) equal = nz.complex.d[n] == y.d[n];
        t.check("normalized boundary equals Y", equal, ctx);
        const auto f = chain_iso(nz.complex, y);
        t.check("constructed isomorphism N(dk Y) -> Y", f.has_value() && is_chain_iso(nz.complex, y, *f), ctx);
        t.absorb(check_simplicial(x), "dk: ", ctx);
        ++t.items;
    }
    return t.done(1, "Dold-Kan round trip", std::to_string(t.items) + " complexes, simplicial to level " +
                                                  std::to_string(kSimplicialLevel));
}

// 2. The two constructions agree level-wise but not as simplicial objects.
Outcome dold_kan_classic() {
    std::mt19937 rng(101);
    Tally t;
    for (int i = 0; i < kComplexes; ++i) {
        const ChainComplex y = rand_bounded_complex(rng, rand_dims(rng, 4, 3), kEntryBound);
        const std::string ctx = "complex " + std::to_string(i);
        const int L = y.top() + 2;
        const SimpVS a = dk(y, L), b = dk_classic(y, L);
        t.check("level dims agree", a.dims == b.dims, ctx);
        const Normalization na = normalize(a), nb = normalize(b);
        bool dims = true;
        for (int n = 0; n <= L; ++n) dims = dims && na.complex.dim(n) == nb.complex.dim(n);
        t.check("normalized dims agree", dims, ctx);
        const auto f = chain_iso(nb.complex, na.complex);
        t.check("normalizations isomorphic", f.has_value() && is_chain_iso(nb.complex, na.complex, *f), ctx);
        t.absorb(check_simplicial(b), "classic: ", ctx);
    }
    // Q in degree 1 with zero boundary: the identity on levels does not commute with u_1 at level 1.
    const ChainComplex q({0, 1}, {Mat(), Mat(0, 1)});
    const SimpVS a = dk(q, 3), b = dk_classic(q, 3);
    t.check("level-wise identification is not simplicial", a.dims == b.dims && a.degen[1][1] != b.degen[1][1],
            "Q[1], u_1 at level 1");
    return t.done(2, "dk vs dk_classic", std::to_string(kComplexes) + " complexes; identity on levels breaks u_1 for Q[1]");
}

// Every boundary that could be nonzero is.
bool lively(const ChainComplex& y) {
    for (int n = 1; n <= y.top(); ++n) {
        const int room = n == 1 ? y.dim(0) : kernel(y.d[n - 1]).dim();
        if (room > 0 && y.dim(n) > 0 && y.d[n].is_zero()) return false;
    }
    return true;
}

}  // namespace

std::vector<Fixture> fixtures(unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<Fixture> out;
    std::uniform_int_distribution<int> dim(1, 2), bit(0, 1);
    for (int i = 0; i < kFixtures; ++i) {
        const Base& b = bases()[i % 4];
        const int N = (i / 4) % 3;
        std::vector<int> dims(N + 1);
        for (auto& d : dims) d = dim(rng);
        // Nonzero boundaries wherever the degrees allow, so that R_0 does not commute
        // trivially with a perturbation of R_2.
        ChainComplex model = rand_complex(rng, dims);
        while (!lively(model)) model = rand_complex(rng, dims);
        std::vector<int> parity;
        const auto& G = b.nerve->groupoid();
        if (b.name == "Z/2") {
            const int w = bit(rng);
            for (int a = 0; a < G.num_arrows(); ++a) parity.push_back(G.is_unit(a) ? 0 : w);
        }
        Ruth s = rand_strict(rng, b.nerve, model, parity);
        Ops ops = random_gauge(s, rng);
        Ruth r = gauge_twist(s, ops);
        out.push_back({b.name, std::move(s), std::move(ops), std::move(r)});
    }
    return out;
}

namespace {

// 3. Simplicial identities, order and core of the semi-direct product.
Outcome sdp_identities(const std::vector<Fixture>& fx) {
    Tally t;
    for (std::size_t i = 0; i < fx.size(); ++i) {
        const Ruth& r = fx[i].r;
        const std::string ctx = where(fx[i], i);
        const int N = r.top();
        t.absorb(validate(r), "R: ", ctx);
        const Sdp s = build_sdp(r);
        t.check("built to level 2N + 3", s.bundle.L == 2 * N + 3, ctx);
        t.absorb(check_simplicial(s.bundle), "", ctx);
        const SimpVB low = sdp_bundle(r, N + 2);
        const FibrationReport f = check_fibration(low);
        t.check("fibration", f.fibration, ctx);
        t.check("order = N", f.order == N, ctx);
        const GradedBundle e = core(low);
        t.check("core dims = E", e == r.E, ctx);
        bool span = true;
        const auto& B = *r.nerve;
        for (int x = 0; x < B.groupoid().num_objects(); ++x)
            for (int n = 0; n <= N; ++n) {
                const std::size_t u = B.unit_simplex(n, x);
                const auto off = sdp_offsets(r, n, u);
                const int dim = low.dim(n, u), lo = off[off.size() - 2];
                std::vector<Vec> cols;
                for (int j = lo; j < off.back(); ++j) cols.push_back(unit_vec(dim, j));
                span = span && Subspace::span_cols(core_basis(low, n, x)) == Subspace::span(cols, dim);
            }
        t.check("core is the iota summand at units", span, ctx);
    }
    return t.done(3, "Semi-direct product identities",
                  std::to_string(fx.size()) + " fixtures, simplicial to 2N + 3, order N, core E");
}

// 4. Horn kernel ranks and horn-space dims.
Outcome rank_law(const std::vector<Fixture>& fx) {
    Tally t;
    for (std::size_t i = 0; i < fx.size(); ++i) {
        const Ruth& r = fx[i].r;
        // Horn spaces at every k <= n up to one level past the order.
        t.absorb(rank_identities(sdp_bundle(r, r.top() + 2)), "", where(fx[i], i));
    }
    return t.done(4, "Rank law", std::to_string(fx.size()) + " fixtures, levels up to N + 2, every k <= n");
}

// 5. Perturbing R_2 breaks RH2 and d_0 d_0 = d_0 d_1 at the same simplex.
Outcome rh2_converse(const std::vector<Fixture>& fx) {
    std::mt19937 rng(505);
    Tally t;
    int used = 0, skipped = 0;
    for (std::size_t i = 0; i < fx.size(); ++i) {
        const Ruth& r = fx[i].r;
        const std::string ctx = where(fx[i], i);
        const Nerve& B = *r.nerve;
        // Blocks of R_2 are E_k -> E_{k+1}; there are none when N = 0.  Nondegenerate
        // simplices are preferred; over unit(2) every 2-simplex is degenerate.
        struct Slot {
            std::size_t g;
            int k;
        };
        std::vector<Slot> slots;
        bool nondegenerate = false;
        for (std::size_t g = 0; g < B.size(2); ++g) nondegenerate = nondegenerate || !B.is_degenerate(2, g);
        for (std::size_t g = 0; g < B.size(2); ++g) {
            if (nondegenerate && B.is_degenerate(2, g)) continue;
            for (int k = 0; k + 1 <= r.top(); ++k) {
                const Mat b = r.block(2, g, k);
                if (b.rows() && b.cols()) slots.push_back({g, k});
            }
        }
        if (slots.empty()) {
            ++skipped;
            continue;
        }
        const Slot s = slots[std::uniform_int_distribution<std::size_t>(0, slots.size() - 1)(rng)];
        const Mat b = r.block(2, s.g, s.k);
        const int row = std::uniform_int_distribution<int>(0, b.rows() - 1)(rng);
        const int col = std::uniform_int_distribution<int>(0, b.cols() - 1)(rng);
        Q delta;
        do delta = rand_q(rng); while (delta == 0);
        const int L = r.top() + 3;

        const Report p = rh2_sensitivity(r, 2, s.g, s.k, row, col, delta, L);
        t.check("perturbed: RH2 fails", !p.ok("RH2"), ctx);
        t.check("perturbed: d_0 d_0 = d_0 d_1 fails", !p.ok("d_0 d_0 = d_0 d_1"), ctx);
        t.check("d_0 d_0 = d_0 d_1 iff RH2", p.ok("d_0 d_0 = d_0 d_1 iff RH2"), ctx);
        // RH2 at (m, g) in source degree k is read off d_0 at level m + k over u_0^k g, so
        // every failing RH2 level is witnessed by d_0 d_0 = d_0 d_1 failing over some u_0^j g.
        Ruth pr = r;
        Mat pb = b;
        pb(row, col) += delta;
        pr.set_block(2, s.g, s.k, pb);
        const SimpVB v = sdp_bundle(pr, L);
        auto dd_fails = [&](int n, std::size_t h) {
            return !(v.face[n - 1][0][B.face(n, 0, h)] * v.face[n][0][h] == v.face[n - 1][0][B.face(n, 1, h)] * v.face[n][1][h]);
        };
        bool matched = true;
        const Report rh2 = check_rh2(pr);
        for (const auto& c : rh2.checks()) {
            if (c.ok() || !c.witness.contains("simplex")) continue;
            int n = c.witness["simplex"]["level"].get<int>();
            auto h = c.witness["simplex"]["index"].get<std::size_t>();
            if (n + r.top() > L) continue;
            bool seen = false;
            for (; !seen && n <= L; h = B.degen(n, 0, h), ++n) seen = n >= 2 && dd_fails(n, h);
            matched = matched && seen;
        }
        t.check("witness fibers match", matched, ctx);

        const Report q = rh2_sensitivity(r, 2, s.g, s.k, row, col, Q(0), L);
        t.check("restored: RH2 holds", q.ok("RH2"), ctx);
        t.check("restored: d_0 d_0 = d_0 d_1 holds", q.ok("d_0 d_0 = d_0 d_1"), ctx);
        ++used;
    }
    return t.done(5, "RH2 converse",
                  std::to_string(used) + " fixtures perturbed; " + std::to_string(skipped) + " of order 0 have no R_2 block");
}

// 6. Splitting the semi-direct product along its canonical cleavage.
Outcome round_trip_a(const std::vector<Fixture>& fx) {
    Tally t;
    for (std::size_t i = 0; i < fx.size(); ++i) {
        const Ruth& r = fx[i].r;
        const std::string ctx = where(fx[i], i);
        const Sdp s = build_sdp(r, r.top() + 2);
        const SplitContext sc(s.bundle, s.cleavage);
        const std::string a = operator_mismatch(extract_ruth(sc), r);
        t.check("extract(build(R)) = R", a.empty(), ctx + (a.empty() ? "" : ", " + a));
        const std::string b = operator_mismatch(extract_ruth_direct(sc), r);
        t.check("direct extraction = R", b.empty(), ctx + (b.empty() ? "" : ", " + b));
    }
    return t.done(6, "Splitting round trip A", std::to_string(fx.size()) + " fixtures, operator-by-operator, two routes");
}

// 7. Splitting along a twisted cleavage gives a gauge-equivalent representation.
Outcome round_trip_b(const std::vector<Fixture>& fx) {
    std::mt19937 rng(707);
    Tally t;
    for (std::size_t i = 0; i < fx.size(); ++i) {
        const Ruth& r = fx[i].r;
        const std::string ctx = where(fx[i], i);
        const Ops ops = random_gauge(r, rng);
        const SimpVB v = sdp_bundle(r, r.top() + 2);
        const Cleavage c = twisted_cleavage(r, ops, v);
        const SplitContext sc(v, c);
        const Roundtrip rt = roundtrip_bundle(sc);
        t.absorb(rt.report, "roundtrip: ", ctx);
        auto src = std::make_shared<const Ruth>(r);
        auto tw = std::make_shared<const Ruth>(rt.r);
        t.absorb(check_morphism(gauge_morphism(src, tw, ops)), "psi: R -> R'': ", ctx);
        const std::string m = operator_mismatch(rt.r, gauge_transport(r, ops));
        t.check("R'' = transport of R along psi", m.empty(), ctx + (m.empty() ? "" : ", " + m));
    }
    return t.done(7, "Splitting round trip B",
                  std::to_string(fx.size()) + " twisted cleavages, phi exact, gauge-equivalent via psi");
}

// 8. Lifting and lowering morphisms.
Outcome morphism_round_trips(const std::vector<Fixture>& fx) {
    std::mt19937 rng(808);
    Tally t;
    int count = 0;
    for (std::size_t i = 0; i < fx.size() && count < kMorphisms; ++i) {
        const Fixture& f = fx[i];
        const std::string ctx = where(f, i);
        const auto nv = f.strict.nerve;
        const int objects = nv->groupoid().num_objects();
        // Frame change on the strict model, then the twist that produced the fixture, then a second gauge.
        std::vector<Mat> frames;
        for (int x = 0; x < objects; ++x) {
            Mat a(f.strict.E.total(x), f.strict.E.total(x));
            for (int k = 0; k <= f.strict.top(); ++k) {
                const int o = f.strict.E.offset(x, k), d = f.strict.E.dim(x, k);
                a.set_block(o, o, rand_invertible(rng, d));
            }
            frames.push_back(a);
        }
        Ruth moved = f.strict;
        for (int m = 0; m <= moved.max_op(); ++m)
            for (std::size_t g = 0; g < nv->size(m); ++g) {
                const Mat tot = f.strict.total(m, g);
                const int x0 = nv->vertex(m, g, 0), xm = nv->vertex(m, g, m);
                const Mat conj = frames[xm] * tot * inverse(frames[x0]);
                for (int k = 0; k <= moved.top(); ++k) {
                    const int tk = k + m - 1;
                    if (tk < 0 || tk > moved.top()) continue;
                    moved.set_block(m, g, k,
                                    conj.block(moved.E.offset(xm, tk), moved.E.offset(x0, k), moved.E.dim(xm, tk), moved.E.dim(x0, k)));
                }
            }
        auto r0 = std::make_shared<const Ruth>(f.strict);
        auto r1 = std::make_shared<const Ruth>(moved);
        RuthMorphism frame(r0, r1);
        for (int x = 0; x < objects; ++x)
            for (int k = 0; k <= r0->top(); ++k) {
                const int o = r0->E.offset(x, k), d = r0->E.dim(x, k);
                frame.set_block(0, nv->unit_simplex(0, x), k, frames[x].block(o, o, d, d));
            }
        const Ops ops = random_gauge(*r1, rng);
        auto r2 = std::make_shared<const Ruth>(gauge_transport(*r1, ops));
        const RuthMorphism gauge = gauge_morphism(r1, r2, ops);
        const RuthMorphism psi = compose(gauge, frame);
        t.absorb(check_morphism(psi), "psi: ", ctx);

        const int L = r0->top() + 2;
        const BundleMap lifted = lift_morphism(psi, L);
        const SimpVB v0 = sdp_bundle(*r0, L), v2 = sdp_bundle(*r2, L);
        t.absorb(check_bundle_map(lifted, v0, v2), "lift: ", ctx);
        const RuthMorphism low = lower_morphism(lifted, r0, r2);
        bool same = true;
        for (int m = 0; m <= r2->top(); ++m)
            for (std::size_t g = 0; g < nv->size(m); ++g)
                for (int k = 0; k <= r0->top(); ++k) same = same && low.block(m, g, k) == psi.block(m, g, k);
        t.check("lower(lift(psi)) = psi", same, ctx);
        const BundleMap back = lift_morphism(low, L);
        bool again = true;
        for (int n = 0; n <= L; ++n)
            for (std::size_t g = 0; g < nv->size(n); ++g) again = again && back.f[n][g] == lifted.f[n][g];
        t.check("lift(lower(phi)) = phi", again, ctx);

        const BundleMap a = lift_morphism(frame, L), b = lift_morphism(gauge, L);
        bool functor = true;
        for (int n = 0; n <= L; ++n)
            for (std::size_t g = 0; g < nv->size(n); ++g) functor = functor && lifted.f[n][g] == b.f[n][g] * a.f[n][g];
        t.check("lift(psi' psi) = lift(psi') lift(psi)", functor, ctx);
        const BundleMap id = lift_morphism(identity_morphism(r0), L);
        bool unit = true;
        for (int n = 0; n <= L; ++n)
            for (std::size_t g = 0; g < nv->size(n); ++g) unit = unit && id.f[n][g].is_identity();
        t.check("lift(id) = id", unit, ctx);
        ++count;
    }
    t.check("enough morphisms", count == kMorphisms, std::to_string(count) + " built");
    return t.done(8, "Morphism round trips", std::to_string(count) + " morphisms, lift/lower both ways, composition");
}

// 9. The non-full example as printed.
Outcome not_full_example() {
    Tally t;
    const NotFull ex = example_not_full(3);
    const std::string ctx = "printed example";
    t.absorb(check_simplicial(ex.v), "V: ", ctx);
    const CleavageReport c = check_cleavage(ex.v, ex.c);
    t.check("C normal", c.normal, ctx);
    t.check("C flat", c.flat, ctx);
    const CleavageReport cp = check_cleavage(ex.v, ex.c_prime);
    t.check("C' normal", cp.normal, ctx);
    std::string wit;
    if (const auto* w = cp.report.find("weakly flat"); w && !w->ok()) wit = " (" + std::to_string(w->failed) + " failures, first " + w->witness.dump() + ")";
    t.check("C' weakly flat", cp.weakly_flat, ctx + wit);
    t.check("C' flat over the zero section to level 3", cp.flat, ctx);
    const Report m = check_weakly_flat_morphism(identity_map(ex.v), ex.v, ex.c_prime, ex.c);
    t.check("id : (V, C') -> (V, C) not weakly flat", !m.ok(), ctx);
    // lambda = 0, mu = 1 over (x, x, y): iota component 1.
    const Vec w{0, 1, 1};
    t.check("witness in C'", ex.c_prime.c[2][ex.witness_simplex].contains(w), ctx);
    t.check("witness not in C", !ex.c.c[2][ex.witness_simplex].contains(w), ctx);
    return t.done(9, "Example with a non-full identity", "C normal and flat, C' normal and weakly flat, id not weakly flat");
}

// 10. Classical models.
Outcome classical(const std::vector<Fixture>& fx) {
    Tally t;
    int order0 = 0, order1 = 0, units = 0;
    for (std::size_t i = 0; i < fx.size(); ++i) {
        const Ruth& r = fx[i].r;
        const bool unit = fx[i].base == "unit(2)";
        if (r.top() > 1 && !unit) continue;
        order0 += r.top() == 0;
        order1 += r.top() == 1;
        units += unit;
        t.absorb(classical_cross_checks(r, sdp_bundle(r, 3)), "", where(fx[i], i));
    }
    t.check("order 0 and order 1 fixtures present", order0 > 0 && order1 > 0, "coverage");
    return t.done(10, "Classical cross-checks",
                  std::to_string(order0) + " translation groupoid, " + std::to_string(order1) + " Grothendieck, " +
                      std::to_string(units) + " unit-groupoid comparisons");
}

Ruth rank_one(std::shared_ptr<const Nerve> nv, bool sign) {
    const auto& G = nv->groupoid();
    std::vector<Mat> mats;
    for (int a = 0; a < G.num_arrows(); ++a) mats.push_back(Mat::identity(1).scaled(sign && !G.is_unit(a) ? -1 : 1));
    return representation(nv, std::vector<int>(G.num_objects(), 1), mats);
}

// 11. Linear cochain cohomology.
Outcome cohomology(const std::vector<Fixture>& fx) {
    Tally t;
    const Ruth triv = rank_one(nerve_of(unit_groupoid(1)), false);
    const CohomologyReport a = linear_cochain_cohomology(sdp_bundle(triv, 3), 2);
    t.absorb(a.report, "trivial: ", "unit(1)");
    t.check("H^0, H^1, H^2 = 1, 0, 0", a.dims == std::vector<int>{1, 0, 0}, "unit(1) trivial");
    const Ruth sign = rank_one(nerve_of(cyclic_group(2)), true);
    const CohomologyReport b = linear_cochain_cohomology(sdp_bundle(sign, 2), 1, &sign);
    t.absorb(b.report, "sign: ", "Z/2 sign");
    t.check("H^0 = 0", b.dims[0] == 0, "Z/2 sign");
    int n0 = 0;
    for (std::size_t i = 0; i < fx.size(); ++i) {
        const Ruth& r = fx[i].r;
        if (r.top() != 0) continue;
        const CohomologyReport c = linear_cochain_cohomology(sdp_bundle(r, 2), 1, &r);
        const std::string name = "degree 0 coboundary matches the dual representation formula";
        t.check(name, c.report.find(name) != nullptr && c.report.ok(name), where(fx[i], i));
        ++n0;
    }
    return t.done(11, "Cohomology", "trivial and sign representations, dual formula on " + std::to_string(n0) + " order 0 fixtures");
}

// 12. Pointwise homology is constant along arrows.
Outcome orbit_homology(const std::vector<Fixture>& fx) {
    Tally t;
    for (std::size_t i = 0; i < fx.size(); ++i) {
        const Ruth& r = fx[i].r;
        const Nerve& B = *r.nerve;
        std::vector<HomologyDims> h;
        for (int x = 0; x < B.groupoid().num_objects(); ++x) h.push_back(cycles_borders(r, x));
        bool same = true;
        for (std::size_t g = 0; g < B.size(1); ++g) {
            const auto& p = h[B.vertex(1, g, 0)];
            const auto& q = h[B.vertex(1, g, 1)];
            same = same && p.z == q.z && p.b == q.b && p.h == q.h;
        }
        t.check("cycle and boundary dims agree along arrows", same, where(fx[i], i));
    }
    return t.done(12, "Orbit invariance of pointwise homology", std::to_string(fx.size()) + " fixtures");
}

}  // namespace

bool known_red(int id) { return id == 9; }

std::vector<Outcome> run(const std::vector<int>& which, const std::function<void(const Outcome&)>& on_done) {
    const std::set<int> want(which.begin(), which.end());
    auto wanted = [&](int id) { return want.empty() || want.count(id) > 0; };
    // Built by the first criterion that needs them, and timed with it.
    std::vector<Fixture> fx;
    bool built = false;
    auto need = [&]() -> const std::vector<Fixture>& {
        if (!built) {
            fx = fixtures();
            built = true;
        }
        return fx;
    };
    const std::vector<std::function<Outcome()>> criteria = {
        dold_kan_round_trip,
        dold_kan_classic,
        [&] { return sdp_identities(need()); },
        [&] { return rank_law(need()); },
        [&] { return rh2_converse(need()); },
        [&] { return round_trip_a(need()); },
        [&] { return round_trip_b(need()); },
        [&] { return morphism_round_trips(need()); },
        not_full_example,
        [&] { return classical(need()); },
        [&] { return cohomology(need()); },
        [&] { return orbit_homology(need()); },
    };
    const std::vector<double> budget = {kDoldKanBudget, 0, kSdpBudget, 0, 0, 0, 0, 0, kExampleBudget, 0, 0, 0};
    std::vector<Outcome> out;
    for (int id = 1; id <= static_cast<int>(criteria.size()); ++id) {
        if (!wanted(id)) continue;
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = criteria[id - 1]();
        } catch (const std::exception& e) {
            o.id = id;
            o.title = "criterion " + std::to_string(id);
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        o.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (budget[id - 1] > 0 && o.seconds > budget[id - 1]) {
            o.pass = false;
            o.detail = "over budget: " + std::to_string(o.seconds) + " s > " + std::to_string(budget[id - 1]) + " s";
        }
        if (on_done) on_done(o);
        out.push_back(std::move(o));
    }
    return out;
}

std::string format_line(const Outcome& o) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s %2d  ", o.pass ? "PASS" : "FAIL", o.id);
    std::ostringstream s;
    s << buf << o.title << ": " << o.detail;
    return s.str();
}

}  // namespace hvb::acceptance
