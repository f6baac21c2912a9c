#include "hvb/svb.hpp"

#include <algorithm>

namespace hvb {

SimpVB::SimpVB(std::shared_ptr<const Nerve> b, int L_, std::vector<std::vector<int>> d)
    : base(std::move(b)), L(L_), dims(std::move(d)) {
    if (L < 0 || L > Nerve::kMaxLevel) throw BundleError("bundle: level out of range");
    if (static_cast<int>(dims.size()) != L + 1) throw BundleError("bundle: one dims row per level expected");
    for (int n = 0; n <= L; ++n)
        if (dims[n].size() != base->size(n)) throw BundleError("bundle: dims row " + std::to_string(n) + " has the wrong length");
    face.resize(L + 1);
    degen.resize(L);
    for (int n = 1; n <= L; ++n) {
        face[n].resize(n + 1);
        for (int i = 0; i <= n; ++i)
            for (std::size_t g = 0; g < size(n); ++g) face[n][i].emplace_back(dims[n - 1][base->face(n, i, g)], dims[n][g]);
    }
    for (int n = 0; n < L; ++n) {
        degen[n].resize(n + 1);
        for (int j = 0; j <= n; ++j)
            for (std::size_t g = 0; g < size(n); ++g) degen[n][j].emplace_back(dims[n + 1][base->degen(n, j, g)], dims[n][g]);
    }
}

Mat SimpVB::first_face(int n, int k, std::size_t g, std::size_t* at) const {
    Mat m = Mat::identity(dims[n][g]);
    for (int q = n; q > k; --q) {
        m = face[q][q][g] * m;
        g = base->face(q, q, g);
    }
    if (at) *at = g;
    return m;
}

void SimpVB::validate_shapes() const {
    auto bad = [](const std::string& what) { throw BundleError("bundle: " + what + " has the wrong shape"); };
    for (int n = 1; n <= L; ++n)
        for (int i = 0; i <= n; ++i)
            for (std::size_t g = 0; g < size(n); ++g) {
                const auto& m = face[n][i][g];
                if (m.rows() != dims[n - 1][base->face(n, i, g)] || m.cols() != dims[n][g])
                    bad("face d_" + std::to_string(i) + " at level " + std::to_string(n));
            }
    for (int n = 0; n < L; ++n)
        for (int j = 0; j <= n; ++j)
            for (std::size_t g = 0; g < size(n); ++g) {
                const auto& m = degen[n][j][g];
                if (m.rows() != dims[n + 1][base->degen(n, j, g)] || m.cols() != dims[n][g])
                    bad("degeneracy u_" + std::to_string(j) + " at level " + std::to_string(n));
            }
}

Report check_simplicial(const SimpVB& v) {
    Report rep;
    const Nerve& B = *v.base;
    auto wit = [&](const char* id, int n, int i, int j, std::size_t g) {
        return [=, &B] {
            const Simplex& s = B.simplex(n, g);
            return nlohmann::json{{"identity", id}, {"level", n}, {"i", i}, {"j", j}, {"simplex", g}, {"x0", s.x0}, {"arrows", s.arrows}};
        };
    };
    for (int n = 2; n <= v.L; ++n)
        for (std::size_t g = 0; g < v.size(n); ++g)
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i) {
                    SparseMat a = v.face[n - 1][i][B.face(n, j, g)] * v.face[n][j][g];
                    SparseMat b = v.face[n - 1][j - 1][B.face(n, i, g)] * v.face[n][i][g];
                    rep.record("d_i d_j = d_{j-1} d_i", a == b, wit("d_i d_j = d_{j-1} d_i", n, i, j, g));
                }
    for (int n = 0; n < v.L; ++n)
        for (std::size_t g = 0; g < v.size(n); ++g)
            for (int j = 0; j <= n; ++j) {
                const std::size_t h = B.degen(n, j, g);
                for (int i = 0; i <= n + 1; ++i) {
                    SparseMat lhs = v.face[n + 1][i][h] * v.degen[n][j][g];
                    bool ok;
                    if (i < j)
                        ok = lhs == v.degen[n - 1][j - 1][B.face(n, i, g)] * v.face[n][i][g];
                    else if (i == j || i == j + 1)
                        ok = lhs.is_identity() || (lhs.rows() == 0 && lhs.cols() == 0);
                    else
                        ok = lhs == v.degen[n - 1][j][B.face(n, i - 1, g)] * v.face[n][i - 1][g];
                    rep.record("d_i u_j", ok, wit("d_i u_j", n, i, j, g));
                }
            }
    for (int n = 0; n + 2 <= v.L; ++n)
        for (std::size_t g = 0; g < v.size(n); ++g)
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= j; ++i) {
                    SparseMat a = v.degen[n + 1][i][B.degen(n, j, g)] * v.degen[n][j][g];
                    SparseMat b = v.degen[n + 1][j + 1][B.degen(n, i, g)] * v.degen[n][i][g];
                    rep.record("u_i u_j = u_{j+1} u_i", a == b, wit("u_i u_j = u_{j+1} u_i", n, i, j, g));
                }
    return rep;
}

SimpVB svb_from_json(const nlohmann::json& doc) {
    try {
        auto G = std::make_shared<const FinGroupoid>(groupoid_from_json(doc.at("groupoid")));
        auto nv = std::make_shared<const Nerve>(G);
        const int L = doc.at("L").get<int>();
        if (L < 0 || L > Nerve::kMaxLevel) throw BundleError("bundle document: L out of range");
        SimpVB v(nv, L, doc.at("dims").get<std::vector<std::vector<int>>>());
        auto load = [&](const char* key, const char* idx, bool faces) {
            if (!doc.contains(key)) return;
            for (const auto& e : doc.at(key)) {
                const int n = e.at("level").get<int>(), i = e.at(idx).get<int>();
                const auto g = e.at("simplex").get<std::size_t>();
                if (faces ? (n < 1 || n > L) : (n < 0 || n >= L)) throw BundleError(std::string(key) + ": level out of range");
                if (i < 0 || i > n || g >= v.size(n)) throw BundleError(std::string(key) + ": index out of range");
                auto& slot = faces ? v.face[n][i][g] : v.degen[n][i][g];
                slot = SparseMat(mat_from_json(e.at("matrix"), slot.rows(), slot.cols()));
            }
        };
        load("faces", "i", true);
        load("degeneracies", "j", false);
        return v;
    } catch (const nlohmann::json::exception& e) {
        throw BundleError(std::string("bundle document: ") + e.what());
    }
}

nlohmann::json svb_to_json(const SimpVB& v) {
    nlohmann::json doc = {{"kind", "svb"}, {"groupoid", groupoid_to_json(v.base->groupoid())}, {"L", v.L}, {"dims", v.dims}};
    doc["faces"] = nlohmann::json::array();
    doc["degeneracies"] = nlohmann::json::array();
    for (int n = 1; n <= v.L; ++n)
        for (int i = 0; i <= n; ++i)
            for (std::size_t g = 0; g < v.size(n); ++g)
                if (!v.face[n][i][g].is_zero())
                    doc["faces"].push_back({{"level", n}, {"i", i}, {"simplex", g}, {"matrix", to_json(v.d(n, i, g))}});
    for (int n = 0; n < v.L; ++n)
        for (int j = 0; j <= n; ++j)
            for (std::size_t g = 0; g < v.size(n); ++g)
                if (!v.degen[n][j][g].is_zero())
                    doc["degeneracies"].push_back({{"level", n}, {"j", j}, {"simplex", g}, {"matrix", to_json(v.s(n, j, g))}});
    return doc;
}

SimpVB pullback(const SimpVS& x, std::shared_ptr<const Nerve> base) {
    std::vector<std::vector<int>> dims;
    for (int n = 0; n <= x.L; ++n) dims.emplace_back(base->size(n), x.dims[n]);
    SimpVB v(std::move(base), x.L, dims);
    for (int n = 1; n <= x.L; ++n)
        for (int i = 0; i <= n; ++i) {
            const SparseMat f(x.face[n][i]);
            for (auto& slot : v.face[n][i]) slot = f;
        }
    for (int n = 0; n < x.L; ++n)
        for (int j = 0; j <= n; ++j) {
            const SparseMat s(x.degen[n][j]);
            for (auto& slot : v.degen[n][j]) slot = s;
        }
    return v;
}

SimpVB to_bundle(const SimpVS& x) { return pullback(x, std::make_shared<const Nerve>(unit_groupoid(1))); }

Mat horn_map(const SimpVB& v, int n, int k, std::size_t g) {
    std::vector<Mat> rows;
    for (int i = 0; i <= n; ++i)
        if (i != k) rows.push_back(v.d(n, i, g));
    return Mat::vstack(rows, v.dim(n, g));
}

Subspace horn_space(const SimpVB& v, int n, int k, std::size_t g) {
    const Nerve& B = *v.base;
    std::vector<int> off(n + 2, 0);
    for (int i = 0; i <= n; ++i) off[i + 1] = off[i] + (i == k ? 0 : v.dim(n - 1, B.face(n, i, g)));
    const int amb = off[n + 1];
    if (n == 1) return Subspace::full(amb);
    std::vector<Mat> eqs;
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i < j; ++i) {
            if (i == k || j == k) continue;
            const std::size_t gj = B.face(n, j, g), gi = B.face(n, i, g);
            const Mat a = v.d(n - 1, i, gj), b = v.d(n - 1, j - 1, gi);
            Mat row(a.rows(), amb);
            row.set_block(0, off[j], a);
            row.add_block(0, off[i], b, -1);
            eqs.push_back(row);
        }
    return kernel(Mat::vstack(eqs, amb));
}

FibrationReport check_fibration(const SimpVB& v) {
    FibrationReport fr;
    Report& rep = fr.report;
    const Nerve& B = *v.base;
    fr.surjective.assign(v.L + 1, true);
    fr.unique_fillers.assign(v.L + 1, true);
    bool kan = true;
    for (int n = 1; n <= v.L; ++n)
        for (std::size_t g = 0; g < v.size(n); ++g)
            for (int k = 0; k <= n; ++k) {
                const Mat h = horn_map(v, n, k, g);
                const Subspace hs = horn_space(v, n, k, g);
                const Subspace img = image(h);
                const bool lands = hs.contains(img);
                const bool surj = lands && img.dim() == hs.dim();
                const bool bij = surj && img.dim() == v.dim(n, g);
                auto wit = [&] {
                    return nlohmann::json{{"level", n}, {"k", k}, {"simplex", g}, {"rank", img.dim()}, {"horn_dim", hs.dim()},
                                          {"fiber_dim", v.dim(n, g)}};
                };
                rep.record("horn map lands in the horn space", lands, wit);
                rep.record("relative horn map surjective", surj, wit);
                if (!surj) fr.surjective[n] = false;
                if (!bij) fr.unique_fillers[n] = false;
                // Kan side: every compatible tuple has a filler, tested by column containment.
                if (n >= 2) {
                    const Mat aug = Mat::hstack({h, hs.basis_cols()}, h.rows());
                    if (rank(aug) != rank(h)) kan = false;
                }
            }
    fr.fibration = std::all_of(fr.surjective.begin() + 1, fr.surjective.end(), [](bool b) { return b; });
    bool ends_surj = true;
    if (v.L >= 1)
        for (std::size_t g = 0; g < v.size(1); ++g)
            for (int i = 0; i <= 1; ++i)
                if (rank(v.d(1, i, g)) != v.dim(0, B.face(1, i, g))) ends_surj = false;
    if (v.L >= 1)
        for (int x = 0; x < B.groupoid().num_objects(); ++x)
            for (int i = 0; i <= 1; ++i) {
                SparseMat p = v.face[1][i][B.unit_simplex(1, x)] * v.degen[0][0][static_cast<std::size_t>(x)];
                if (!(p.is_identity() || p.rows() == 0)) kan = false;
            }
    rep.record("relative fibration iff Kan with surjective d_0, d_1", fr.fibration == (kan && ends_surj),
               [&] { return nlohmann::json{{"relative", fr.fibration}, {"kan", kan}, {"ends_surjective", ends_surj}}; });
    if (fr.fibration) {
        int N = v.L;
        while (N > 0 && fr.unique_fillers[N]) --N;
        fr.order = N;
    }
    return fr;
}

Mat core_basis(const SimpVB& v, int n, int x) {
    const std::size_t g = v.base->unit_simplex(n, x);
    if (n == 0) return Mat::identity(v.dim(0, g));
    std::vector<Mat> pos;
    for (int i = 1; i <= n; ++i) pos.push_back(v.d(n, i, g));
    return kernel(Mat::vstack(pos, v.dim(n, g))).basis_cols();
}

GradedBundle core(const SimpVB& v) {
    const auto& G = v.base->groupoid();
    std::vector<std::vector<int>> dims(G.num_objects());
    int top = 0;
    for (int x = 0; x < G.num_objects(); ++x)
        for (int n = 0; n <= v.L; ++n) {
            dims[x].push_back(core_basis(v, n, x).cols());
            if (dims[x].back() > 0) top = std::max(top, n);
        }
    for (auto& row : dims) row.resize(top + 1);
    return {v.base->groupoid_ptr(), dims};
}

Cleavage cleavage_from_json(const nlohmann::json& doc, const SimpVB& v) {
    try {
        Cleavage c;
        c.L = doc.at("L").get<int>();
        if (c.L != v.L) throw BundleError("cleavage document: L does not match the bundle");
        c.c.resize(v.L + 1);
        for (std::size_t g = 0; g < v.size(0); ++g) c.c[0].push_back(Subspace::full(v.dim(0, g)));
        for (int n = 1; n <= v.L; ++n)
            for (std::size_t g = 0; g < v.size(n); ++g) c.c[n].push_back(Subspace::zero(v.dim(n, g)));
        for (const auto& e : doc.at("fibers")) {
            const int n = e.at("level").get<int>();
            const auto g = e.at("simplex").get<std::size_t>();
            if (n < 1 || n > v.L || g >= v.size(n)) throw BundleError("cleavage document: fiber index out of range");
            const auto& rows = e.at("basis");
            c.c[n][g] = Subspace::span_rows(mat_from_json(rows, static_cast<int>(rows.size()), v.dim(n, g)));
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw BundleError(std::string("cleavage document: ") + e.what());
    }
}

nlohmann::json cleavage_to_json(const Cleavage& c) {
    nlohmann::json doc = {{"kind", "cleavage"}, {"L", c.L}, {"fibers", nlohmann::json::array()}};
    for (int n = 1; n <= c.L; ++n)
        for (std::size_t g = 0; g < c.c[n].size(); ++g)
            doc["fibers"].push_back({{"level", n}, {"simplex", g}, {"basis", to_json(c.c[n][g].basis())}});
    return doc;
}

Cleavage degenerate_cleavage(const SimpVB& v) {
    const Nerve& B = *v.base;
    Cleavage c;
    c.L = v.L;
    c.c.resize(v.L + 1);
    for (std::size_t g = 0; g < v.size(0); ++g) c.c[0].push_back(Subspace::full(v.dim(0, g)));
    for (int n = 1; n <= v.L; ++n) {
        std::vector<std::vector<Mat>> gens(v.size(n));
        for (std::size_t g = 0; g < v.size(n - 1); ++g)
            for (int j = 0; j < n; ++j) gens[B.degen(n - 1, j, g)].push_back(v.s(n - 1, j, g));
        for (std::size_t g = 0; g < v.size(n); ++g)
            c.c[n].push_back(gens[g].empty() ? Subspace::zero(v.dim(n, g)) : image(Mat::hstack(gens[g], v.dim(n, g))));
    }
    return c;
}

namespace {

// W = C_n^g cut by s_0 w in S, s_k w in C_k for 0 < k < n, and d_i w in C_{n-1} for i in faces.
Subspace flat_witness(const SimpVB& v, const Cleavage& c, const std::vector<Subspace>* s, int n, std::size_t g,
                      const std::vector<int>& faces) {
    Subspace w = c.c[n][g];
    std::size_t at = 0;
    if (s) {
        Mat s0 = v.first_face(n, 0, g, &at);
        w = intersect(w, preimage(s0, (*s)[at]));
    }
    for (int k = 1; k < n; ++k) {
        Mat sk = v.first_face(n, k, g, &at);
        w = intersect(w, preimage(sk, c.c[k][at]));
    }
    for (int i : faces) w = intersect(w, preimage(v.d(n, i, g), c.c[n - 1][v.base->face(n, i, g)]));
    return w;
}

}  // namespace

Report check_flat_over(const SimpVB& v, const Cleavage& c, const std::vector<Subspace>& s, const std::string& label) {
    Report rep;
    const Nerve& B = *v.base;
    bool flat = true;
    for (int n = 2; n <= v.L; ++n)
        for (std::size_t g = 0; g < v.size(n); ++g) {
            std::vector<int> faces;
            for (int i = 1; i <= n; ++i) faces.push_back(i);
            Subspace w = flat_witness(v, c, &s, n, g, faces);
            const Subspace img = image(v.d(n, 0, g), w);
            const bool ok = c.c[n - 1][B.face(n, 0, g)].contains(img);
            flat = flat && ok;
            rep.record(label, ok, [&] { return nlohmann::json{{"level", n}, {"simplex", g}, {"witness_dim", w.dim()}}; });
        }
    if (!flat) return rep;
    for (int n = 2; n <= v.L; ++n)
        for (std::size_t g = 0; g < v.size(n); ++g)
            for (int i0 = 1; i0 < n; ++i0) {
                std::vector<int> faces;
                for (int i = 0; i <= n; ++i)
                    if (i != i0) faces.push_back(i);
                Subspace w = flat_witness(v, c, &s, n, g, faces);
                const bool ok = c.c[n - 1][B.face(n, i0, g)].contains(image(v.d(n, i0, g), w));
                rep.record(label + ": interior faces", ok,
                           [&] { return nlohmann::json{{"level", n}, {"simplex", g}, {"i0", i0}}; });
            }
    return rep;
}

CleavageReport check_cleavage(const SimpVB& v, const Cleavage& c) {
    CleavageReport cr;
    Report& rep = cr.report;
    for (int n = 1; n <= v.L; ++n)
        for (std::size_t g = 0; g < v.size(n); ++g)
            for (int k = 0; k < n; ++k) {
                const Subspace ker = kernel(horn_map(v, n, k, g));
                rep.record("C_n complements the horn kernel", is_complement(c.c[n][g], ker, v.dim(n, g)), [&] {
                    return nlohmann::json{{"level", n}, {"k", k}, {"simplex", g}, {"dim C", c.c[n][g].dim()}, {"dim ker", ker.dim()}};
                });
            }
    const Cleavage deg = degenerate_cleavage(v);
    for (int n = 1; n <= v.L; ++n)
        for (std::size_t g = 0; g < v.size(n); ++g)
            rep.record("normal", c.c[n][g].contains(deg.c[n][g]), [&] { return nlohmann::json{{"level", n}, {"simplex", g}}; });
    std::vector<Subspace> zero, full;
    for (std::size_t x = 0; x < v.size(0); ++x) {
        zero.push_back(Subspace::zero(v.dim(0, x)));
        full.push_back(Subspace::full(v.dim(0, x)));
    }
    Report weak = check_flat_over(v, c, zero, "weakly flat");
    Report fl = check_flat_over(v, c, full, "flat");
    cr.complement = rep.ok("C_n complements the horn kernel");
    cr.normal = rep.ok("normal");
    cr.weakly_flat = weak.ok("weakly flat");
    cr.flat = fl.ok("flat");
    rep.merge(weak);
    rep.merge(fl);
    return cr;
}

BundleMap identity_map(const SimpVB& v) {
    BundleMap id;
    id.f.resize(v.L + 1);
    for (int n = 0; n <= v.L; ++n)
        for (std::size_t g = 0; g < v.size(n); ++g) id.f[n].push_back(Mat::identity(v.dim(n, g)));
    return id;
}

Report check_bundle_map(const BundleMap& phi, const SimpVB& v, const SimpVB& w) {
    Report rep;
    const Nerve& B = *v.base;
    const int L = std::min(v.L, w.L);
    for (int n = 0; n <= L; ++n)
        for (std::size_t g = 0; g < v.size(n); ++g) {
            const Mat& f = phi.f[n][g];
            if (f.rows() != w.dim(n, g) || f.cols() != v.dim(n, g)) throw BundleError("bundle map: wrong shape at level " + std::to_string(n));
            if (n >= 1)
                for (int i = 0; i <= n; ++i)
                    rep.record("commutes with faces", w.face[n][i][g] * f == phi.f[n - 1][B.face(n, i, g)] * v.d(n, i, g),
                               [&] { return nlohmann::json{{"level", n}, {"i", i}, {"simplex", g}}; });
            if (n < L)
                for (int j = 0; j <= n; ++j)
                    rep.record("commutes with degeneracies", w.degen[n][j][g] * f == phi.f[n + 1][B.degen(n, j, g)] * v.s(n, j, g),
                               [&] { return nlohmann::json{{"level", n}, {"j", j}, {"simplex", g}}; });
        }
    return rep;
}

Report check_weakly_flat_morphism(const BundleMap& phi, const SimpVB& v, const Cleavage& c, const Cleavage& c2) {
    Report rep;
    std::vector<Subspace> zero;
    for (std::size_t x = 0; x < v.size(0); ++x) zero.push_back(Subspace::zero(v.dim(0, x)));
    for (int n = 1; n <= v.L; ++n)
        for (std::size_t g = 0; g < v.size(n); ++g) {
            const Subspace w = flat_witness(v, c, &zero, n, g, {});
            const Subspace img = image(phi.f[n][g], w);
            const bool ok = c2.c[n][g].contains(img);
            rep.record("weakly flat morphism", ok, [&] {
                nlohmann::json j = {{"level", n}, {"simplex", g}};
                for (int i = 0; i < img.dim(); ++i)
                    if (!c2.c[n][g].contains(Vec(img.basis().row(i)))) {
                        j["image_vector"] = to_json(img.basis().row(i));
                        break;
                    }
                return j;
            });
        }
    return rep;
}

Report rank_identities(const SimpVB& v) {
    Report rep;
    const Nerve& B = *v.base;
    const int nobj = B.groupoid().num_objects();
    // lambda[j][x]: kernel rank of a relative horn map at the unit simplex.
    std::vector<std::vector<int>> lambda(v.L + 1, std::vector<int>(nobj));
    for (int x = 0; x < nobj; ++x) {
        lambda[0][x] = v.dim(0, static_cast<std::size_t>(x));
        for (int j = 1; j <= v.L; ++j) lambda[j][x] = kernel(horn_map(v, j, 0, B.unit_simplex(j, x))).dim();
    }
    auto binom = [](int n, int k) {
        long long r = 1;
        for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
        return static_cast<int>(r);
    };
    for (int n = 1; n <= v.L; ++n)
        for (std::size_t g = 0; g < v.size(n); ++g) {
            const int x = B.vertex(n, g, 0);
            int formula = 0;
            for (int j = 0; j < n; ++j) formula += binom(n, j) * lambda[j][x];
            const int core_n = core_basis(v, n, x).cols();
            for (int k = 0; k <= n; ++k) {
                const int direct = horn_space(v, n, k, g).dim();
                const int ker = kernel(horn_map(v, n, k, g)).dim();
                auto wit = [&] {
                    return nlohmann::json{{"level", n}, {"k", k}, {"simplex", g}, {"direct", direct}, {"binomial", formula},
                                          {"rank_minus_kernel", v.dim(n, g) - ker}, {"kernel", ker}, {"core", core_n}};
                };
                rep.record("horn dim = binomial formula", direct == formula, wit);
                rep.record("horn dim = rank - kernel", direct == v.dim(n, g) - ker, wit);
                rep.record("horn kernel rank = core rank", ker == core_n, wit);
            }
        }
    return rep;
}

Mat coboundary(const SimpVB& v, int m) {
    if (m < 0 || m + 1 > v.L) throw BundleError("coboundary: degree out of the truncation range");
    const Nerve& B = *v.base;
    std::vector<int> co(v.size(m) + 1, 0), ro(v.size(m + 1) + 1, 0);
    for (std::size_t g = 0; g < v.size(m); ++g) co[g + 1] = co[g] + v.dim(m, g);
    for (std::size_t g = 0; g < v.size(m + 1); ++g) ro[g + 1] = ro[g] + v.dim(m + 1, g);
    Mat d(ro.back(), co.back());
    for (std::size_t g = 0; g < v.size(m + 1); ++g)
        for (int i = 0; i <= m + 1; ++i) d.add_block(ro[g], co[B.face(m + 1, i, g)], v.d(m + 1, i, g).transpose(), i % 2 ? -1 : 1);
    return d;
}

CohomologyReport linear_cochain_cohomology(const SimpVB& v, int p, const Ruth* r) {
    if (p < 0 || p > v.L - 1) throw BundleError("cohomology: degree must lie in 0..L-1");
    CohomologyReport out;
    int prev_rank = 0;
    Mat d0;
    for (int m = 0; m <= p; ++m) {
        Mat d = coboundary(v, m);
        if (m == 0) d0 = d;
        const int rk = rank(d);
        out.dims.push_back(d.cols() - rk - prev_rank);
        if (m > 0) {
            Mat prev = coboundary(v, m - 1);
            out.report.record("coboundary squares to zero", (d * prev).is_zero(), [&] { return nlohmann::json{{"degree", m}}; });
        }
        prev_rank = rk;
    }
    if (r && r->top() == 0) {
        // delta c(g) = -(R^g)^T D*(c)(g) with D*(c)(g) = (R^{g^-1})^T c(src) - c(tgt).
        const Nerve& B = *v.base;
        const auto& G = B.groupoid();
        std::vector<int> co(v.size(0) + 1, 0), ro(v.size(1) + 1, 0);
        for (std::size_t x = 0; x < v.size(0); ++x) co[x + 1] = co[x] + r->E.dim(static_cast<int>(x), 0);
        for (std::size_t g = 0; g < v.size(1); ++g) ro[g + 1] = ro[g] + r->E.dim(B.vertex(1, g, 0), 0);
        Mat expl(ro.back(), co.back());
        for (std::size_t g = 0; g < v.size(1); ++g) {
            const int a = B.simplex(1, g).arrows[0];
            const std::size_t gi = B.index(Simplex{G.tgt(a), {G.inv(a)}});
            const Mat rt = r->block(1, g, 0).transpose();
            const Mat dual_inv = r->block(1, gi, 0).transpose();
            expl.add_block(ro[g], co[G.src(a)], (rt * dual_inv).scaled(-1));
            expl.add_block(ro[g], co[G.tgt(a)], rt);
        }
        out.report.record("degree 0 coboundary matches the dual representation formula", expl == d0);
    }
    return out;
}

}  // namespace hvb
