#include <doctest.h>

#include "hvb/ruth.hpp"
#include "support.hpp"

using namespace hvb;
using namespace hvb::testing;

namespace {

using Ops = std::vector<std::vector<std::vector<Mat>>>;

RuthMorphism gauge_morphism(std::shared_ptr<const Ruth> s, std::shared_ptr<const Ruth> t, const Ops& ops) {
    RuthMorphism psi(s, t);
    const Nerve& B = *s->nerve;
    for (int x = 0; x < s->groupoid().num_objects(); ++x)
        for (int k = 0; k <= s->top(); ++k) psi.set_block(0, B.unit_simplex(0, x), k, Mat::identity(s->E.dim(x, k)));
    for (int m = 1; m < static_cast<int>(ops.size()); ++m)
        for (std::size_t g = 0; g < ops[m].size(); ++g)
            for (int k = 0; k < static_cast<int>(ops[m][g].size()); ++k)
                if (ops[m][g][k].rows() && ops[m][g][k].cols()) psi.set_block(m, g, k, ops[m][g][k]);
    return psi;
}

std::size_t first_nondegenerate(const Nerve& B, int n) {
    for (std::size_t g = 0; g < B.size(n); ++g)
        if (!B.is_degenerate(n, g)) return g;
    return 0;
}

}  // namespace

TEST_CASE("a chain complex over a point is a representation") {
    std::mt19937 rng(1);
    auto nv = nerve_of(unit_groupoid(1));
    ChainComplex y = rand_complex(rng, {2, 3, 1});
    Ruth r = chain_complexes(nv, {y});
    CHECK(validate(r).ok());
    CHECK(r.total(1, nv->unit_simplex(1, 0)).is_identity());
    CHECK(r.block(0, 0, 1) == y.d[1]);
    CHECK(r.mcap == 2 * r.top() + 2);
    CHECK_THROWS_AS(chain_complexes(nerve_of(pair_groupoid(2)), {y, y}), RuthError);
    CHECK_THROWS_AS(chain_complexes(nv, {y, y}), RuthError);
}

TEST_CASE("RH1 reports operators on degenerate simplices") {
    std::mt19937 rng(2);
    auto nv = nerve_of(pair_groupoid(2));
    Ruth r = rand_ruth(rng, nv, ChainComplex({1, 1}, {Mat(), Mat::identity(1)}));
    REQUIRE(check_rh1(r).ok());
    const std::size_t deg = nv->degen(1, 0, first_nondegenerate(*nv, 1));
    Ruth bad = r;
    bad.set_block(2, deg, 0, Mat::identity(1));
    Report rep = check_rh1(bad);
    const auto* c = rep.find("R_m vanishes on degenerate simplices");
    REQUIRE(c != nullptr);
    CHECK_FALSE(c->ok());
    CHECK(c->witness["simplex"]["index"] == deg);

    Ruth unit_bad = r;
    unit_bad.set_block(1, nv->unit_simplex(1, 1), 1, Mat::identity(1).scaled(3));
    CHECK_FALSE(check_rh1(unit_bad).ok("R_1 at units is the identity"));
}

TEST_CASE("RH2 at low levels") {
    std::mt19937 rng(3);
    auto nv = nerve_of(pair_groupoid(2));
    Ruth r = rand_ruth(rng, nv, ChainComplex({1, 2, 1}, {Mat(), Mat::from_rows({{1, 0}}, 2), Mat::from_rows({{0}, {1}}, 1)}));
    REQUIRE(check_rh2(r).ok());

    // Level 2 read as a homotopy: R_1^{hg} - R_1^h R_1^g = -(R_0 R_2 + R_2 R_0).
    const Nerve& B = *nv;
    for (std::size_t g = 0; g < B.size(2); ++g) {
        const std::size_t hg = B.face(2, 1, g), h = B.face(2, 0, g), gg = B.face(2, 2, g);
        const Mat r0s = r.total(0, B.unit_simplex(0, B.vertex(2, g, 0)));
        const Mat r0t = r.total(0, B.unit_simplex(0, B.vertex(2, g, 2)));
        CHECK(r.total(1, hg) - r.total(1, h) * r.total(1, gg) == -(r0t * r.total(2, g) + r.total(2, g) * r0s));
    }

    Ruth d2 = r;  // R_0 no longer squares to zero
    d2.set_block(0, B.unit_simplex(0, 0), 2, r.block(0, B.unit_simplex(0, 0), 1).transpose());
    Report a = check_rh2(d2);
    CHECK_FALSE(a.ok("RH2 at level 0"));

    Ruth chain = r;  // R_1 no longer a chain map
    const std::size_t g1 = first_nondegenerate(B, 1);
    Mat b = chain.block(1, g1, 1);
    b(0, 0) += 1;
    chain.set_block(1, g1, 1, b);
    CHECK_FALSE(check_rh2(chain).ok("RH2 at level 1"));
}

TEST_CASE("order 1 three-simplex identity") {
    std::mt19937 rng(4);
    for (auto model : {ChainComplex({1, 1}, {Mat(), Mat::identity(1)}), rand_complex(rng, {2, 1})}) {
        auto nv = nerve_of(pair_groupoid(3));
        Ruth r = rand_ruth(rng, nv, model);
        REQUIRE(validate(r).ok());
        const Nerve& B = *nv;
        bool nonzero_r2 = false;
        for (std::size_t g = 0; g < B.size(2); ++g) nonzero_r2 = nonzero_r2 || !r.total(2, g).is_zero();
        CHECK(nonzero_r2);
        for (std::size_t g = 0; g < B.size(3); ++g) {
            const std::size_t g1 = B.restrict(3, g, OrdMap(1, 3, {0, 1}));
            const std::size_t g3 = B.restrict(3, g, OrdMap(1, 3, {2, 3}));
            const Mat lhs = -r.total(2, B.face(3, 1, g)) + r.total(2, B.face(3, 2, g));
            const Mat rhs = -r.total(2, B.face(3, 0, g)) * r.total(1, g1) + r.total(1, g3) * r.total(2, B.face(3, 3, g));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("order 0 representations compose and invert") {
    std::mt19937 rng(5);
    auto nv = nerve_of(pair_groupoid(3));
    Ruth r = rand_strict(rng, nv, ChainComplex({2}, {Mat()}));
    CHECK(validate(r).ok());
    const Nerve& B = *nv;
    for (std::size_t g = 0; g < B.size(2); ++g)
        CHECK(r.total(1, B.face(2, 1, g)) == r.total(1, B.face(2, 0, g)) * r.total(1, B.face(2, 2, g)));
    for (std::size_t g = 0; g < B.size(1); ++g) CHECK(rank(r.total(1, g)) == 2);

    const auto& G = nv->groupoid();
    std::vector<Mat> mats;
    for (int a = 0; a < G.num_arrows(); ++a) mats.push_back(r.total(1, B.index(Simplex{G.src(a), {a}})));
    CHECK(validate(representation(nv, {2, 2, 2}, mats)).ok());
    int a = 0;
    while (G.is_unit(a)) ++a;
    mats[a] = mats[a].scaled(5);
    CHECK_FALSE(check_rh2(representation(nv, {2, 2, 2}, mats)).ok());
}

TEST_CASE("morphism axioms") {
    std::mt19937 rng(6);
    auto nv = nerve_of(pair_groupoid(2));
    auto r = std::make_shared<const Ruth>(
        rand_ruth(rng, nv, ChainComplex({1, 2, 1}, {Mat(), Mat::from_rows({{1, 0}}, 2), Mat::from_rows({{0}, {1}}, 1)})));
    const RuthMorphism id = identity_morphism(r);
    CHECK(check_morphism(id).ok());

    RuthMorphism p1 = id;
    const std::size_t g1 = first_nondegenerate(*nv, 1);
    Mat b = p1.block(1, g1, 0);
    b(0, 0) += 1;
    p1.set_block(1, g1, 0, b);
    Report rep = check_morphism(p1);
    CHECK_FALSE(rep.ok());
    bool rh4_fails = false;
    for (const auto& c : rep.checks()) rh4_fails = rh4_fails || (c.name.rfind("RH4", 0) == 0 && !c.ok());
    CHECK(rh4_fails);

    RuthMorphism p0 = id;  // psi_0 not a chain map
    p0.set_block(0, nv->unit_simplex(0, 0), 1, Mat::identity(2).scaled(2));
    CHECK_FALSE(check_morphism(p0).ok("RH4 at level 0"));

    RuthMorphism p3 = id;
    p3.set_block(1, nv->unit_simplex(1, 0), 0, Mat::identity(2).block(0, 0, 2, 1));
    CHECK_FALSE(check_morphism(p3).ok("RH3: psi_m vanishes on degenerate simplices"));
}

TEST_CASE("gauge transport produces valid targets and morphisms") {
    std::mt19937 rng(7);
    for (auto g : {pair_groupoid(2), cyclic_group(2), pair_groupoid(3)}) {
        auto nv = nerve_of(g);
        auto s = std::make_shared<const Ruth>(rand_strict(rng, nv, ChainComplex({1, 1}, {Mat(), Mat::identity(1)})));
        const Ops ops = random_gauge(*s, rng);
        auto t = std::make_shared<const Ruth>(gauge_transport(*s, ops));
        CHECK(validate(*t).ok());
        CHECK(check_morphism(gauge_morphism(s, t, ops)).ok());
        const Ops zero = random_gauge(*s, rng, 0);
        const Ruth same = gauge_transport(*s, zero);
        for (std::size_t h = 0; h < nv->size(2); ++h) CHECK(same.total(2, h) == s->total(2, h));
    }
    // A strict representation twisted by a nonzero psi_1 acquires a nonzero R_2.
    auto nv = nerve_of(pair_groupoid(2));
    auto s = std::make_shared<const Ruth>(rand_strict(rng, nv, ChainComplex({1, 1}, {Mat(), Mat::identity(1)})));
    Ops ops = random_gauge(*s, rng);
    const std::size_t g1 = first_nondegenerate(*nv, 1);
    ops[1][g1][0] = Mat::identity(1);
    const Ruth t = gauge_transport(*s, ops);
    bool nonzero = false;
    for (std::size_t h = 0; h < nv->size(2); ++h) nonzero = nonzero || !t.total(2, h).is_zero();
    CHECK(nonzero);
}

TEST_CASE("composition of morphisms") {
    std::mt19937 rng(8);
    auto nv = nerve_of(pair_groupoid(2));
    auto r0 = std::make_shared<const Ruth>(rand_strict(rng, nv, rand_complex(rng, {1, 2, 1})));
    const Ops a_ops = random_gauge(*r0, rng);
    auto r1 = std::make_shared<const Ruth>(gauge_transport(*r0, a_ops));
    const Ops b_ops = random_gauge(*r1, rng);
    auto r2 = std::make_shared<const Ruth>(gauge_transport(*r1, b_ops));
    const RuthMorphism a = gauge_morphism(r0, r1, a_ops), b = gauge_morphism(r1, r2, b_ops);
    const RuthMorphism ba = compose(b, a);
    CHECK(check_morphism(ba).ok());
    const RuthMorphism ia = compose(identity_morphism(r1), a), ai = compose(a, identity_morphism(r0));
    for (int m = 0; m <= a.max_op(); ++m)
        for (std::size_t g = 0; g < nv->size(m); ++g) {
            CHECK(ia.total(m, g) == a.total(m, g));
            CHECK(ai.total(m, g) == a.total(m, g));
        }
    // Level 1 by hand: (b a)_1 = b_1 a_0 + b_0 a_1.
    for (std::size_t g = 0; g < nv->size(1); ++g) {
        const std::size_t s = nv->unit_simplex(0, nv->vertex(1, g, 0)), t = nv->unit_simplex(0, nv->vertex(1, g, 1));
        CHECK(ba.total(1, g) == b.total(1, g) * a.total(0, s) + b.total(0, t) * a.total(1, g));
    }
}

TEST_CASE("cycles and borders") {
    auto nv = nerve_of(unit_groupoid(1));
    HomologyDims acyc = cycles_borders(chain_complexes(nv, {ChainComplex({0, 2, 2}, {Mat(), Mat(0, 2), Mat::identity(2)})}), 0);
    CHECK(acyc.h == std::vector<int>{0, 0, 0});
    HomologyDims zero = cycles_borders(chain_complexes(nv, {ChainComplex({1, 2}, {Mat(), Mat(1, 2)})}), 0);
    CHECK(zero.z == std::vector<int>{1, 2});
    CHECK(zero.b == std::vector<int>{0, 0});
    CHECK(zero.h == std::vector<int>{1, 2});

    std::mt19937 rng(9);
    for (int t = 0; t < 6; ++t) {
        auto pv = nerve_of(pair_groupoid(2));
        Ruth r = rand_ruth(rng, pv, rand_complex(rng, {2, 3, 2}));
        CHECK(cycles_borders(r, 0).z == cycles_borders(r, 1).z);
        CHECK(cycles_borders(r, 0).b == cycles_borders(r, 1).b);
    }
}

TEST_CASE("documents round trip") {
    std::mt19937 rng(10);
    auto nv = nerve_of(pair_groupoid(2));
    auto s = std::make_shared<const Ruth>(rand_strict(rng, nv, rand_complex(rng, {1, 2, 1})));
    const Ops ops = random_gauge(*s, rng);
    auto t = std::make_shared<const Ruth>(gauge_transport(*s, ops));
    const Ruth back = ruth_from_json(ruth_to_json(*t));
    CHECK(back.E == t->E);
    CHECK(back.mcap == t->mcap);
    for (int m = 0; m <= t->max_op(); ++m)
        for (std::size_t g = 0; g < nv->size(m); ++g) CHECK(back.total(m, g) == t->total(m, g));
    const RuthMorphism psi = gauge_morphism(s, t, ops);
    const RuthMorphism psi2 = morphism_from_json(morphism_to_json(psi), s, t);
    for (int m = 0; m <= psi.max_op(); ++m)
        for (std::size_t g = 0; g < nv->size(m); ++g) CHECK(psi2.total(m, g) == psi.total(m, g));
    CHECK_THROWS_AS(ruth_from_json(nlohmann::json{{"groupoid", "pair(2)"}}), RuthError);
}

TEST_CASE("Grothendieck construction of order 1 data") {
    std::mt19937 rng(11);
    auto nv = nerve_of(pair_groupoid(2));
    auto r = std::make_shared<const Ruth>(rand_ruth(rng, nv, rand_complex(rng, {2, 1})));
    const Grothendieck gr = grothendieck(r);
    const Nerve& B = *nv;
    for (std::size_t g = 0; g < B.size(1); ++g) {
        const Vec c{rand_q(rng)}, e{rand_q(rng), rand_q(rng)};
        const int y = B.vertex(1, g, 1);
        Vec expect = r->block(0, B.unit_simplex(0, y), 1).apply(c);
        const Vec te = r->block(1, g, 0).apply(e);
        for (std::size_t i = 0; i < expect.size(); ++i) expect[i] += te[i];
        CHECK(gr.target(g, c, e) == expect);
        // Inverse then product gives the unit arrow, whose E_1 part is zero.
        const int a = B.simplex(1, g).arrows[0];
        const std::size_t gi = B.index(Simplex{y, {nv->groupoid().inv(a)}});
        const Vec ci = gr.inverse_c(g, c, e);
        CHECK(gr.multiply_c(gi, ci, g, c, e) == Vec{0});
    }
    // With E_1 = 0 this is the translation groupoid: products carry no data.
    auto r0 = std::make_shared<const Ruth>(rand_strict(rng, nv, ChainComplex({2}, {Mat()})));
    const Grothendieck tr = grothendieck(r0);
    for (std::size_t g = 0; g < B.size(1); ++g) {
        const Vec e{1, 2};
        CHECK(tr.target(g, Vec{}, e) == r0->block(1, g, 0).apply(e));
    }
    CHECK_THROWS_AS(grothendieck(std::make_shared<const Ruth>(rand_strict(rng, nv, rand_complex(rng, {1, 1, 1})))),
                    RuthError);
}
