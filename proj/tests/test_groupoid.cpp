#include <doctest.h>

#include <functional>

#include "hvb/groupoid.hpp"

using namespace hvb;

TEST_CASE("builtin catalog") {
    CHECK(unit_groupoid(1).num_objects() == 1);
    CHECK(unit_groupoid(1).num_arrows() == 1);
    CHECK(pair_groupoid(2).num_objects() == 2);
    CHECK(pair_groupoid(2).num_arrows() == 4);
    CHECK(cyclic_group(2).num_objects() == 1);
    CHECK(cyclic_group(2).num_arrows() == 2);
    auto p = builtin_groupoid("pair(2)*Z(3)");
    CHECK(p.num_objects() == 2);
    CHECK(p.num_arrows() == 12);
    for (const auto& n : builtin_examples()) CHECK_NOTHROW(builtin_groupoid(n));
    CHECK_THROWS_AS(builtin_groupoid("torus(2)"), GroupoidError);
}

TEST_CASE("validation reports the failing axiom") {
    auto doc = groupoid_to_json(cyclic_group(3));
    CHECK(groupoid_from_json(doc).num_arrows() == 3);
    // r1*r1 = r2; break it.
    for (auto& t : doc["composition"])
        if (t[0] == "r1" && t[1] == "r1") t[2] = "r0";
    try {
        groupoid_from_json(doc);
        FAIL("expected a validation error");
    } catch (const GroupoidAxiomError& e) {
        CHECK(std::string(e.what()).find("fails") != std::string::npos);
    }
    // Malformed documents are not axiom failures.
    nlohmann::json bad = groupoid_to_json(cyclic_group(3));
    bad.erase("units");
    CHECK_THROWS_AS(groupoid_from_json(bad), GroupoidError);
    try {
        groupoid_from_json(bad);
    } catch (const GroupoidAxiomError&) {
        FAIL("missing field reported as an axiom failure");
    } catch (const GroupoidError&) {
    }
}

TEST_CASE("json round trip") {
    auto g = builtin_groupoid("pair(2)*Z(2)");
    auto h = groupoid_from_json(groupoid_to_json(g));
    CHECK(groupoid_to_json(h) == groupoid_to_json(g));
}

TEST_CASE("nerve level sizes") {
    Nerve u(unit_groupoid(2));
    CHECK(u.size(3) == 2);
    Nerve p(pair_groupoid(2));
    CHECK(p.size(1) == 4);
    CHECK(p.size(2) == 8);
    for (int n = 0; n <= 6; ++n) CHECK(p.size(n) == (std::size_t{1} << (n + 1)));
    Nerve z(cyclic_group(3));
    CHECK(z.size(4) == 81);
}

TEST_CASE("nerve enumeration order is lexicographic") {
    Nerve p(pair_groupoid(3));
    for (int n = 1; n <= 4; ++n)
        for (std::size_t i = 1; i < p.size(n); ++i) CHECK(p.simplex(n, i - 1).arrows < p.simplex(n, i).arrows);
}

TEST_CASE("restrict: faces, vertices and degeneracies") {
    Nerve p(pair_groupoid(3));
    const auto& G = p.groupoid();
    for (std::size_t idx = 0; idx < p.size(3); ++idx) {
        const Simplex& s = p.simplex(3, idx);
        Simplex d0 = p.restrict(s, delta(3, 0));
        CHECK(d0.arrows == std::vector<int>{s.arrows[1], s.arrows[2]});
        Simplex d3 = p.restrict(s, delta(3, 3));
        CHECK(d3.arrows == std::vector<int>{s.arrows[0], s.arrows[1]});
        Simplex d1 = p.restrict(s, delta(3, 1));
        CHECK(d1.arrows == std::vector<int>{G.comp(s.arrows[1], s.arrows[0]), s.arrows[2]});
        for (int i = 0; i <= 3; ++i) CHECK(p.restrict(s, chi(i, 3)).x0 == p.vertex(3, idx, i));
        CHECK(p.restrict(s, identity(3)) == s);
        for (int j = 0; j <= 3; ++j) {
            std::size_t u = p.degen(3, j, idx);
            CHECK(p.face(4, j, u) == idx);
            CHECK(p.face(4, j + 1, u) == idx);
            CHECK(p.is_degenerate(4, u));
            CHECK(p.simplex(4, u).arrows[j] == G.unit(p.vertex(3, idx, j)));
        }
    }
}

TEST_CASE("restrict is contravariantly functorial") {
    for (const char* name : {"pair(2)", "Z(2)", "unit(2)", "pair(2)*Z(2)"}) {
        Nerve N(builtin_groupoid(name));
        for (int n = 0; n <= 4; ++n)
            for (int m = 0; m <= 3; ++m)
                for (const auto& t2 : enumerate_monotone(m, n))
                    for (int k = 0; k <= 2; ++k)
                        for (const auto& t1 : enumerate_monotone(k, m))
                            for (std::size_t idx = 0; idx < N.size(n); idx += 3) {
                                const Simplex& g = N.simplex(n, idx);
                                CHECK(N.restrict(N.restrict(g, t2), t1) == N.restrict(g, compose(t2, t1)));
                            }
    }
}

TEST_CASE("simplicial identities of the nerve index tables") {
    Nerve N(builtin_groupoid("pair(2)*Z(2)"));
    for (int n = 2; n <= 4; ++n)
        for (std::size_t g = 0; g < N.size(n); ++g) {
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i < j; ++i) CHECK(N.face(n - 1, i, N.face(n, j, g)) == N.face(n - 1, j - 1, N.face(n, i, g)));
        }
}

namespace {

// Counts compatible (n,k)-horns by backtracking over face tuples and checks that
// each has exactly one filler.
void check_unique_horn_fillers(const Nerve& N, int n, int k) {
    std::vector<int> idxs;
    for (int i = 0; i <= n; ++i)
        if (i != k) idxs.push_back(i);
    std::vector<std::size_t> chosen(n + 1);
    std::size_t horns = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == idxs.size()) {
            ++horns;
            std::size_t fillers = 0;
            for (std::size_t g = 0; g < N.size(n); ++g) {
                bool ok = true;
                for (int i : idxs) ok = ok && N.face(n, i, g) == chosen[i];
                fillers += ok;
            }
            CHECK(fillers == 1);
            return;
        }
        int j = idxs[pos];
        for (std::size_t v = 0; v < N.size(n - 1); ++v) {
            bool ok = true;
            for (std::size_t q = 0; q < pos && ok; ++q) {
                int i = idxs[q];  // i < j: d_i v_j = d_{j-1} v_i
                ok = N.face(n - 1, i, v) == N.face(n - 1, j - 1, chosen[i]);
            }
            if (!ok) continue;
            chosen[j] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    CHECK(horns == N.size(n));
}

}  // namespace

TEST_CASE("nerve horns have unique fillers above level 1") {
    for (const char* name : {"pair(2)", "Z(3)", "unit(2)"}) {
        Nerve N(builtin_groupoid(name));
        for (int n = 2; n <= 4; ++n)
            for (int k = 0; k <= n; ++k) check_unique_horn_fillers(N, n, k);
    }
}
