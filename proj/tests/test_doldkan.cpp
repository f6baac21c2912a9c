#include <doctest.h>

#include "hvb/doldkan.hpp"
#include "hvb/svb.hpp"
#include "support.hpp"

using namespace hvb;
using namespace hvb::testing;

namespace {

int binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    int r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

ChainComplex identity_pair() {
    // Q --id--> Q in degrees 2, 1.
    return {{0, 1, 1}, {Mat(), Mat(0, 1), Mat::identity(1)}};
}

// Top degree with a nonzero space.
int support_top(const ChainComplex& y) {
    int t = 0;
    for (int n = 0; n <= y.top(); ++n)
        if (y.dims[n] > 0) t = n;
    return t;
}

}  // namespace

TEST_CASE("chain complex validation and documents") {
    CHECK_THROWS_AS(ChainComplex({1, 1, 1}, {Mat(), Mat::identity(1), Mat::identity(1)}), ChainError);
    CHECK_THROWS_AS(ChainComplex({1, 2}, {Mat(), Mat::identity(1)}), ChainError);
    std::mt19937 rng(3);
    ChainComplex y = rand_complex(rng, {2, 3, 2});
    ChainComplex z = chain_from_json(chain_to_json(y));
    CHECK(z.dims == y.dims);
    for (int n = 1; n <= y.top(); ++n) CHECK(z.d[n] == y.d[n]);
    CHECK(y.boundary(0).rows() == 0);
    CHECK(y.boundary(3).cols() == 0);
    CHECK(sign_twisted(y).d[2] == -y.d[2]);
    CHECK(sign_twisted(y).d[1] == y.d[1]);
}

TEST_CASE("constant simplicial space from a degree 0 complex") {
    ChainComplex y({1}, {Mat()});
    for (const SimpVS& x : {dk(y, 4), dk_classic(y, 4)}) {
        for (int n = 0; n <= 4; ++n) CHECK(x.dims[n] == 1);
        for (int n = 1; n <= 4; ++n)
            for (const auto& f : x.face[n]) CHECK(f.is_identity());
        for (int n = 0; n < 4; ++n)
            for (const auto& s : x.degen[n]) CHECK(s.is_identity());
        Normalization nx = normalize(x);
        CHECK(nx.complex.dims == std::vector<int>{1, 0, 0, 0, 0});
    }
}

TEST_CASE("level dimensions follow the subset count") {
    CHECK(dk(identity_pair(), 2).dims[2] == 3);
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        ChainComplex y = rand_complex(rng, rand_dims(rng, 3, 2));
        SimpVS a = dk(y, 4), b = dk_classic(y, 4);
        for (int n = 0; n <= 4; ++n) {
            int expect = 0;
            for (int k = 0; k <= n; ++k) expect += binom(n, k) * y.dim(k);
            CHECK(a.dims[n] == expect);
            CHECK(b.dims[n] == expect);
        }
    }
}

TEST_CASE("d_0 blocks in the two matrix cases") {
    std::mt19937 rng(8);
    ChainComplex y = rand_complex(rng, {2, 2, 1, 1});
    const int L = 4;
    SimpVS x = dk(y, L);
    for (int n = 1; n <= L; ++n) {
        auto off_r = dk_offsets(y, n - 1), off_c = dk_offsets(y, n);
        const int l = n - 1;
        const int r0 = off_r[zero_mono_index(identity(l))];
        // Case I with k = l+1: alpha = beta' = iota_n.
        CHECK(x.face[n][0].block(r0, off_c[zero_mono_index(identity(n))], y.dim(l), y.dim(n)) == y.boundary(n));
        for (int i = 1; i <= l; ++i) {
            OrdMap a = delta(n, i);
            Mat blk = x.face[n][0].block(r0, off_c[zero_mono_index(a)], y.dim(l), y.dim(l));
            CHECK(blk == Mat::identity(y.dim(l)).scaled(i % 2 ? 1 : -1));
        }
    }
}

TEST_CASE("simplicial identities hold for random complexes") {
    std::mt19937 rng(13);
    for (int t = 0; t < 12; ++t) {
        ChainComplex y = rand_complex(rng, rand_dims(rng, 3, 2));
        const int L = y.top() + 3;
        CHECK(check_simplicial(dk(y, L)).ok());
        CHECK(check_simplicial(dk_classic(y, L)).ok());
    }
}

TEST_CASE("normalization inverts both constructions") {
    std::mt19937 rng(21);
    std::vector<ChainComplex> ys = {identity_pair()};
    for (int t = 0; t < 15; ++t) ys.push_back(rand_complex(rng, rand_dims(rng, 4, 3)));
    for (const auto& y : ys) {
        const int L = y.top() + 2;
        Normalization a = normalize(dk(y, L));
        for (int n = 0; n <= y.top(); ++n) CHECK(a.complex.dim(n) == y.dim(n));
        for (int n = y.top() + 1; n <= L; ++n) CHECK(a.complex.dim(n) == 0);
        // NX_n is exactly the iota summand, so the boundary comes back unchanged.
        for (int n = 1; n <= y.top(); ++n) CHECK(a.complex.d[n] == y.d[n]);
        for (int n = 0; n <= y.top(); ++n) CHECK(Subspace::span_cols(a.basis[n]) == Subspace::span_cols(dk_unit_map(y, n)));

        Normalization b = normalize(dk_classic(y, L));
        auto f = chain_iso(b.complex, y);
        REQUIRE(f.has_value());
        CHECK(is_chain_iso(b.complex, y, *f));
    }
}

TEST_CASE("chain_iso rejects non-isomorphic complexes") {
    ChainComplex a({1, 1}, {Mat(), Mat::identity(1)});
    ChainComplex b({1, 1}, {Mat(), Mat(1, 1)});
    CHECK_FALSE(chain_iso(a, b).has_value());
    CHECK(chain_iso(a, a).has_value());
}

TEST_CASE("degenerate span is the kernel of the iota projection") {
    std::mt19937 rng(34);
    for (int t = 0; t < 10; ++t) {
        ChainComplex y = rand_complex(rng, rand_dims(rng, 3, 2));
        const int L = y.top() + 2;
        SimpVS x = dk(y, L), xc = dk_classic(y, L);
        CHECK(degenerate_span(x, 0).dim() == 0);
        Normalization nc = normalize(xc);
        for (int n = 0; n <= L; ++n) {
            Subspace D = degenerate_span(x, n);
            CHECK(D == kernel(dk_unit_map(y, n).transpose()));
            CHECK(D.dim() + y.dim(n) == x.dims[n]);
            CHECK(nc.complex.dim(n) == xc.dims[n] - degenerate_span(xc, n).dim());
        }
    }
}

TEST_CASE("kernels of positive faces are coordinate subspaces") {
    std::mt19937 rng(55);
    ChainComplex y = rand_complex(rng, {1, 2, 1, 1});
    const int L = 4;
    SimpVS x = dk(y, L);
    for (int n = 1; n <= L; ++n) {
        auto off = dk_offsets(y, n);
        auto monos = enumerate_zero_monos(n);
        for (int i = 1; i <= n; ++i) {
            std::vector<Vec> cols;
            for (std::size_t p = 0; p < monos.size(); ++p) {
                const auto& im = monos[p].img;
                if (std::find(im.begin(), im.end(), i) == im.end()) continue;
                for (int t = off[p]; t < off[p + 1]; ++t) cols.push_back(unit_vec(x.dims[n], t));
            }
            CHECK(kernel(x.face[n][i]) == Subspace::span(cols, x.dims[n]));
        }
        std::vector<Mat> pos(x.face[n].begin() + 1, x.face[n].end());
        CHECK(kernel(Mat::vstack(pos, x.dims[n])) == Subspace::span_cols(dk_unit_map(y, n)));
    }
}

TEST_CASE("level-wise identification with the classical form is not simplicial") {
    // Q in degree 1 with zero boundary; compare u_1 at level 1.
    ChainComplex y({0, 1}, {Mat(), Mat(0, 1)});
    SimpVS a = dk(y, 3), b = dk_classic(y, 3);
    CHECK(a.dims == b.dims);
    CHECK(a.degen[1][1] != b.degen[1][1]);
}

TEST_CASE("sign change is a simplicial isomorphism onto the sign-twisted construction") {
    std::mt19937 rng(89);
    for (int t = 0; t < 8; ++t) {
        ChainComplex y = rand_complex(rng, rand_dims(rng, 4, 2));
        const int L = y.top() + 2;
        SimpVS a = dk(sign_twisted(y), L), b = dk(y, L);
        for (int n = 1; n <= L; ++n)
            for (int i = 0; i <= n; ++i) CHECK(epsilon(y, n - 1) * a.face[n][i] == b.face[n][i] * epsilon(y, n));
        for (int n = 0; n < L; ++n)
            for (int j = 0; j <= n; ++j) CHECK(epsilon(y, n + 1) * a.degen[n][j] == b.degen[n][j] * epsilon(y, n));
    }
}

TEST_CASE("degenerate simplices give the unique flat normal cleavage") {
    std::mt19937 rng(144);
    std::vector<ChainComplex> ys = {ChainComplex({0}, {Mat()}), identity_pair()};
    for (int t = 0; t < 5; ++t) ys.push_back(rand_complex(rng, rand_dims(rng, 2, 2)));
    for (const auto& y : ys) {
        const int L = y.top() + 2;
        Report r = check_unique_flat_cleavage(dk(y, L));
        CHECK_MESSAGE(r.ok(), r.table());
        FibrationReport f = check_fibration(to_bundle(dk(y, L)));
        CHECK(f.fibration);
        for (int n = 1; n <= L; ++n) CHECK(f.unique_fillers[n] == (n > support_top(y)));
        CHECK(f.order == support_top(y));
    }
}
