#include <doctest.h>

#include "hvb/exactla.hpp"
#include "support.hpp"

using namespace hvb;
using hvb::testing::rand_mat;
using hvb::testing::rand_rank;

TEST_CASE("kernel examples") {
    CHECK(kernel(Mat(2, 3)) == Subspace::full(3));
    CHECK(kernel(Mat::identity(4)).dim() == 0);
    Subspace k = kernel(Mat::from_rows({{1, 1}, {2, 2}}, 2));
    CHECK(k == Subspace::span({{1, -1}}, 2));
}

TEST_CASE("solve_unique") {
    std::mt19937 rng(1);
    Vec b = {Q(1, 2), Q(-3), Q(7, 5)};
    CHECK(solve_unique(Mat::identity(3), b).x == b);
    auto r = solve_unique(Mat::from_rows({{2}}, 1), {Q(3)});
    CHECK(r.status == SolveStatus::Ok);
    CHECK(r.x[0] == Q(3, 2));
    Mat sing = Mat::from_rows({{1, 1}, {1, 1}}, 2);
    CHECK(solve_unique(sing, {Q(1), Q(2)}).status == SolveStatus::NoSolution);
    CHECK(solve_unique(sing, {Q(1), Q(1)}).status == SolveStatus::NotUnique);
}

TEST_CASE("subspace operations") {
    Subspace x = Subspace::span({{1, 0}}, 2), y = Subspace::span({{0, 1}}, 2);
    CHECK(intersect(x, x) == x);
    CHECK(is_complement(x, y, 2));
    CHECK(!is_complement(x, x, 2));
    CHECK(sum(x, y) == Subspace::full(2));
    Mat proj = Mat::from_rows({{1, 0}}, 2);
    CHECK(preimage(proj, Subspace(1)) == y);
    CHECK_THROWS_AS(intersect(x, Subspace(3)), DimensionError);
}

TEST_CASE("rank-nullity and RREF canonicality") {
    std::mt19937 rng(7);
    for (int t = 0; t < 100; ++t) {
        int r = 1 + rng() % 5, c = 1 + rng() % 5, k = rng() % 4;
        Mat a = rand_rank(rng, r, c, k);
        CHECK(kernel(a).dim() + rank(a) == c);
        CHECK((a * kernel(a).basis_cols()).is_zero());
        Subspace s = image(a);
        // A different spanning set of the same space.
        Mat g = rand_mat(rng, c, c);
        while (rank(g) < c) g = rand_mat(rng, c, c);
        CHECK(image(a * g) == s);
    }
}

TEST_CASE("image/preimage adjunction on 5x5") {
    std::mt19937 rng(9);
    for (int t = 0; t < 50; ++t) {
        Mat a = rand_rank(rng, 5, 5, rng() % 6);
        Subspace s = image(rand_rank(rng, 5, 5, rng() % 6));
        CHECK(s.contains(image(a, preimage(a, s))));
        Subspace u = image(rand_rank(rng, 5, 5, rng() % 6));
        CHECK(preimage(a, image(a, u)).contains(u));
    }
}

TEST_CASE("intersection agrees with dimension formula") {
    std::mt19937 rng(13);
    for (int t = 0; t < 60; ++t) {
        Subspace s = image(rand_rank(rng, 6, 4, rng() % 5)), u = image(rand_rank(rng, 6, 4, rng() % 5));
        Subspace i = intersect(s, u);
        CHECK(i.dim() + sum(s, u).dim() == s.dim() + u.dim());
        CHECK(s.contains(i));
        CHECK(u.contains(i));
    }
}

TEST_CASE("inverse, left inverse, projection, coords") {
    std::mt19937 rng(17);
    for (int t = 0; t < 40; ++t) {
        Mat a = rand_mat(rng, 4, 4);
        if (rank(a) < 4) continue;
        CHECK((a * inverse(a)).is_identity());
        Mat tall = rand_mat(rng, 6, 3);
        if (rank(tall) == 3) CHECK((left_inverse(tall) * tall).is_identity());
        Subspace k = image(rand_rank(rng, 4, 4, 2)), c = image(rand_rank(rng, 4, 4, 2));
        if (is_complement(k, c, 4)) {
            Mat p = projection(k, c);
            CHECK(p * p == p);
            CHECK(image(p) == k);
            CHECK(kernel(p) == c);
        }
        Vec coeff = {testing::rand_q(rng), testing::rand_q(rng)};
        if (k.dim() == 2) CHECK(k.coords(k.basis().transpose().apply(coeff)) == coeff);
    }
    CHECK_THROWS_AS(inverse(Mat::from_rows({{1, 2}, {2, 4}}, 2)), SingularMatrix);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("-6/4") == Q(-3, 2));
    CHECK(to_string(Q(-3, 2)) == "-3/2");
    CHECK(to_string(Q(4)) == "4");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("sparse storage agrees with dense arithmetic") {
    std::mt19937 rng(21);
    for (int t = 0; t < 50; ++t) {
        Mat a = rand_rank(rng, 4, 5, 2), b = rand_mat(rng, 5, 3);
        a(0, 0) = 0;
        SparseMat sa(a), sb(b);
        CHECK(sa.dense() == a);
        CHECK((sa * sb).dense() == a * b);
        CHECK(sa * b == a * b);
        Vec v = b.col(0);
        CHECK(sa.apply(v) == a.apply(v));
    }
    CHECK(SparseMat(Mat::identity(3)).is_identity());
    CHECK(!SparseMat(Mat::identity(3).scaled(2)).is_identity());
    CHECK(SparseMat(Mat(2, 2)).is_zero());
}

TEST_CASE("sparse matrices from entry lists") {
    std::mt19937 rng(22);
    for (int t = 0; t < 20; ++t) {
        Mat a = rand_mat(rng, 4, 5, 3);
        a(1, 2) = 0;
        std::vector<SparseMat::Entry> e;
        // Every entry split into two summands, listed backwards, plus a cancelling pair.
        for (int i = 3; i >= 0; --i)
            for (int j = 4; j >= 0; --j) {
                e.push_back({i, j, a(i, j) - 1});
                e.push_back({i, j, Q(1)});
            }
        e.push_back({2, 0, Q(5)});
        e.push_back({2, 0, Q(-5)});
        const SparseMat s = SparseMat::from_entries(4, 5, e);
        CHECK(s.dense() == a);
        CHECK(s == SparseMat(a));
    }
    CHECK(SparseMat::from_entries(3, 2, {}).is_zero());
    CHECK(SparseMat::from_entries(2, 2, {{1, 1, Q(1)}, {0, 0, Q(1)}}).is_identity());
    CHECK_THROWS_AS(SparseMat::from_entries(2, 2, {{2, 0, Q(1)}}), DimensionError);
}

TEST_CASE("coordinate subspaces") {
    const Subspace c = Subspace::coordinate(5, 1, 3);
    CHECK(c == Subspace::span({unit_vec(5, 2), unit_vec(5, 1)}, 5));
    CHECK(c.pivots() == std::vector<int>{1, 2});
    CHECK(Subspace::coordinate(4, 2, 2) == Subspace::zero(4));
    CHECK(Subspace::full(3) == Subspace::span_rows(Mat::identity(3)));
    CHECK_THROWS_AS(Subspace::coordinate(3, 2, 4), DimensionError);
}
