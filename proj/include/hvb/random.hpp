#pragma once

// Random rational data and representations that are valid by construction.

#include <algorithm>
#include <random>
#include <vector>

#include "hvb/doldkan.hpp"
#include "hvb/exactla.hpp"
#include "hvb/groupoid.hpp"
#include "hvb/ruth.hpp"

namespace hvb::gen {

inline Q rand_q(std::mt19937& rng, int bound = 9) {
    std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
    Q q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline Mat rand_mat(std::mt19937& rng, int r, int c, int bound = 9) {
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = rand_q(rng, bound);
    return m;
}

// Random matrix of prescribed rank (at most min(r,c)).
inline Mat rand_rank(std::mt19937& rng, int r, int c, int k) {
    return rand_mat(rng, r, k) * rand_mat(rng, k, c);
}

// Random complex: each boundary lands in the kernel of the previous one.
inline ChainComplex rand_complex(std::mt19937& rng, std::vector<int> dims) {
    std::vector<Mat> d(dims.size());
    for (std::size_t n = 1; n < dims.size(); ++n) {
        Mat z = n == 1 ? Mat::identity(dims[0]) : kernel(d[n - 1]).basis_cols();
        std::uniform_int_distribution<int> rk(0, std::min(z.cols(), dims[n]));
        d[n] = z * rand_rank(rng, z.cols(), dims[n], rk(rng));
    }
    return {dims, d};
}

// Random complex whose boundary entries all have numerator and denominator at
// most bound in absolute value: small combinations of kernel vectors, retried
// with lower rank until they fit (rank 0 always does).
inline ChainComplex rand_bounded_complex(std::mt19937& rng, std::vector<int> dims, int bound = 9) {
    auto fits = [&](const Mat& m) {
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) {
                const Q& q = m(i, j);
                if (abs(q.get_num()) > bound || q.get_den() > bound) return false;
            }
        return true;
    };
    std::vector<Mat> d(dims.size());
    for (std::size_t n = 1; n < dims.size(); ++n) {
        const Mat z = n == 1 ? Mat::identity(dims[0]) : kernel(d[n - 1]).basis_cols();
        std::uniform_int_distribution<int> rk(0, std::min(z.cols(), dims[n]));
        for (int r = rk(rng);; r = std::max(r - 1, 0)) {
            Mat cand = z * rand_rank(rng, z.cols(), dims[n], r);
            bool ok = fits(cand);
            for (int t = 0; t < 8 && !ok; ++t) ok = fits(cand = z * rand_mat(rng, z.cols(), r, 2) * rand_mat(rng, r, dims[n], 2));
            if (ok) {
                d[n] = cand;
                break;
            }
        }
    }
    return {dims, d};
}

inline std::vector<int> rand_dims(std::mt19937& rng, int max_degree, int max_dim) {
    std::uniform_int_distribution<int> deg(0, max_degree), dim(0, max_dim);
    std::vector<int> dims(deg(rng) + 1);
    for (auto& x : dims) x = dim(rng);
    return dims;
}

inline std::shared_ptr<const Nerve> nerve_of(const FinGroupoid& g) { return std::make_shared<const Nerve>(g); }

inline Mat rand_invertible(std::mt19937& rng, int n) {
    for (;;) {
        Mat m = rand_mat(rng, n, n, 3);
        if (rank(m) == n) return m;
    }
}

// Block-diagonal frames, one per object, for the degrees of the model.
inline std::vector<Mat> rand_frames(std::mt19937& rng, int objects, const ChainComplex& model) {
    int total = 0;
    for (int k = 0; k <= model.top(); ++k) total += model.dim(k);
    std::vector<Mat> out;
    for (int x = 0; x < objects; ++x) {
        Mat f(total, total);
        int at = 0;
        for (int k = 0; k <= model.top(); ++k) {
            f.set_block(at, at, rand_invertible(rng, model.dim(k)));
            at += model.dim(k);
        }
        out.push_back(f);
    }
    return out;
}

inline Ruth rand_strict(std::mt19937& rng, std::shared_ptr<const Nerve> nv, const ChainComplex& model,
                        const std::vector<int>& parity = {}) {
    return conjugated_complex(nv, model, rand_frames(rng, nv->groupoid().num_objects(), model), parity);
}

// Generally non-strict: a random gauge transform of a strict one.
inline Ruth rand_ruth(std::mt19937& rng, std::shared_ptr<const Nerve> nv, const ChainComplex& model) {
    Ruth s = rand_strict(rng, nv, model);
    return gauge_transport(s, random_gauge(s, rng));
}

}  // namespace hvb::gen
