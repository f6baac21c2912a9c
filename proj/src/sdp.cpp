#include "hvb/sdp.hpp"

#include <algorithm>

namespace hvb {

namespace {

std::vector<std::vector<OrdMap>> monos_upto(int L) {
    std::vector<std::vector<OrdMap>> m;
    for (int n = 0; n <= L + 1; ++n) m.push_back(enumerate_zero_monos(n));
    return m;
}

void check_case(const OrdMap& beta, const OrdMap& alpha, D0Case expect) {
    if (classify_d0(beta, alpha) != expect) throw std::logic_error("sdp: d_0 index classification disagrees with construction");
}

// beta with beta' = b.
OrdMap unprime(const OrdMap& b) {
    std::vector<int> v;
    for (int j = 1; j <= b.dom; ++j) v.push_back(b(j) - 1);
    return {b.dom - 1, b.cod - 1, v};
}

std::vector<std::vector<int>> fiber_dims(const Ruth& r, int L) {
    std::vector<std::vector<int>> dims(L + 1);
    for (int n = 0; n <= L; ++n)
        for (std::size_t g = 0; g < r.nerve->size(n); ++g) dims[n].push_back(sdp_offsets(r, n, g).back());
    return dims;
}

}  // namespace

std::vector<int> sdp_offsets(const Ruth& r, int n, std::size_t g) {
    std::vector<int> off{0};
    for (const auto& a : enumerate_zero_monos(n)) off.push_back(off.back() + r.E.dim(r.nerve->vertex(n, g, a(a.dom)), a.dom));
    return off;
}

namespace {

// Index data of the blockwise formulas at one level, independent of the simplex.
struct LevelPlan {
    struct CaseI {
        int k, m, a;
        OrdMap restrict_to;
    };
    struct CaseII {
        int sign, a;
    };
    std::vector<std::vector<int>> face;    // face[i][p]: summand of delta_i beta_p, i >= 1
    std::vector<std::vector<CaseI>> d0i;   // per beta in level n - 1
    std::vector<std::vector<CaseII>> d0ii;
    std::vector<std::vector<int>> degen;   // degen[j][p]: summand of upsilon_j beta_p, or -1
};

LevelPlan plan_level(const std::vector<std::vector<OrdMap>>& monos, int n, int L, int max_op) {
    LevelPlan plan;
    if (n >= 1) {
        plan.face.resize(n + 1);
        for (int i = 1; i <= n; ++i)
            for (const auto& b : monos[n - 1]) plan.face[i].push_back(static_cast<int>(zero_mono_index(compose(delta(n, i), b))));
        for (const auto& beta : monos[n - 1]) {
            const int l = beta.dom;
            const OrdMap bp = prime(beta);
            auto& one = plan.d0i.emplace_back();
            for (int k = 0; k <= l + 1; ++k) {
                const int m = l + 1 - k;
                if (m > max_op) continue;
                const OrdMap a = compose(bp, sigma(k, l + 1));
                check_case(beta, a, {D0Case::CaseI, k});
                one.push_back({k, m, static_cast<int>(zero_mono_index(a)), compose(bp, tau(m, l + 1))});
            }
            auto& two = plan.d0ii.emplace_back();
            for (int i = 1; i <= l; ++i) {
                const OrdMap a = compose(bp, delta(l + 1, i));
                check_case(beta, a, {D0Case::CaseII, i});
                two.push_back({i % 2 ? 1 : -1, static_cast<int>(zero_mono_index(a))});
            }
        }
    }
    if (n < L) {
        plan.degen.resize(n + 1);
        for (int j = 0; j <= n; ++j)
            for (const auto& b : monos[n + 1]) {
                const OrdMap a = compose(upsilon(n, j), b);
                plan.degen[j].push_back(a.injective() ? static_cast<int>(zero_mono_index(a)) : -1);
            }
    }
    return plan;
}

}  // namespace

SimpVB sdp_bundle(const Ruth& r, int L) {
    const Nerve& B = *r.nerve;
    const auto monos = monos_upto(L);
    std::vector<std::vector<std::vector<int>>> offs(L + 1);
    for (int n = 0; n <= L; ++n)
        for (std::size_t g = 0; g < B.size(n); ++g) offs[n].push_back(sdp_offsets(r, n, g));
    std::vector<std::vector<int>> dims(L + 1);
    for (int n = 0; n <= L; ++n)
        for (const auto& o : offs[n]) dims[n].push_back(o.back());
    SimpVB v(r.nerve, L, dims);
    using Entries = std::vector<SparseMat::Entry>;
    auto eye = [](Entries& e, int ro, int co, int w, int sign) {
        for (int t = 0; t < w; ++t) e.push_back({ro + t, co + t, Q(sign)});
    };
    auto block = [](Entries& e, int ro, int co, const Mat& b, int sign) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j)
                if (sgn(b(i, j)) != 0) e.push_back({ro + i, co + j, sign * b(i, j)});
    };
    for (int n = 0; n <= L; ++n) {
        const LevelPlan plan = plan_level(monos, n, L, r.max_op());
        for (std::size_t g = 0; g < B.size(n); ++g) {
            const auto& off = offs[n][g];
            if (n >= 1) {
                for (int i = 1; i <= n; ++i) {
                    const auto& offh = offs[n - 1][B.face(n, i, g)];
                    Entries f;
                    for (std::size_t p = 0; p + 1 < offh.size(); ++p)
                        if (offh[p + 1] > offh[p]) eye(f, offh[p], off[plan.face[i][p]], offh[p + 1] - offh[p], 1);
                    v.face[n][i][g] = SparseMat::from_entries(offh.back(), off.back(), std::move(f));
                }
                const auto& offh = offs[n - 1][B.face(n, 0, g)];
                Entries f;
                for (std::size_t p = 0; p + 1 < offh.size(); ++p) {
                    if (offh[p + 1] == offh[p]) continue;
                    const int sl = monos[n - 1][p].dom % 2 ? -1 : 1;
                    for (const auto& c : plan.d0i[p]) block(f, offh[p], off[c.a], r.block(c.m, B.restrict(n, g, c.restrict_to), c.k), sl);
                    for (const auto& c : plan.d0ii[p]) eye(f, offh[p], off[c.a], offh[p + 1] - offh[p], c.sign);
                }
                v.face[n][0][g] = SparseMat::from_entries(offh.back(), off.back(), std::move(f));
            }
            if (n < L)
                for (int j = 0; j <= n; ++j) {
                    const auto& offh = offs[n + 1][B.degen(n, j, g)];
                    Entries s;
                    for (std::size_t p = 0; p + 1 < offh.size(); ++p)
                        if (offh[p + 1] > offh[p] && plan.degen[j][p] >= 0)
                            eye(s, offh[p], off[plan.degen[j][p]], offh[p + 1] - offh[p], 1);
                    v.degen[n][j][g] = SparseMat::from_entries(offh.back(), off.back(), std::move(s));
                }
        }
    }
    return v;
}

SimpVB sdp_bundle_homogeneous(const Ruth& r, int L) {
    const Nerve& B = *r.nerve;
    const auto monos = monos_upto(L);
    SimpVB v(r.nerve, L, fiber_dims(r, L));
    for (int n = 0; n <= L; ++n)
        for (std::size_t g = 0; g < B.size(n); ++g) {
            const auto off = sdp_offsets(r, n, g);
            std::vector<Mat> d;
            std::vector<std::vector<int>> doff;
            if (n >= 1)
                for (int i = 0; i <= n; ++i) {
                    doff.push_back(sdp_offsets(r, n - 1, B.face(n, i, g)));
                    d.emplace_back(doff.back().back(), off.back());
                }
            std::vector<Mat> s;
            std::vector<std::vector<int>> soff;
            if (n < L)
                for (int j = 0; j <= n; ++j) {
                    soff.push_back(sdp_offsets(r, n + 1, B.degen(n, j, g)));
                    s.emplace_back(soff.back().back(), off.back());
                }
            for (std::size_t q = 0; q < monos[n].size(); ++q) {
                const OrdMap& alpha = monos[n][q];
                const int k = alpha.dom;
                const int w = off[q + 1] - off[q];
                if (w == 0) continue;
                const Mat I = Mat::identity(w);
                auto has = [&](int t) { return std::find(alpha.img.begin(), alpha.img.end(), t) != alpha.img.end(); };
                for (int i = 1; i <= n; ++i)
                    if (!has(i)) d[i].add_block(doff[i][zero_mono_index(compose(upsilon(n - 1, i - 1), alpha))], off[q], I);
                for (int j = 0; j < static_cast<int>(s.size()); ++j) {
                    if (j == 0) {
                        s[0].add_block(soff[0][zero_mono_index(compose(delta(n + 1, 1), alpha))], off[q], I);
                    } else {
                        s[j].add_block(soff[j][zero_mono_index(compose(delta(n + 1, j), alpha))], off[q], I);
                        if (has(j)) s[j].add_block(soff[j][zero_mono_index(compose(delta(n + 1, j + 1), alpha))], off[q], I);
                    }
                }
                if (n == 0) continue;
                // d_0, first kind: beta' extends alpha by a tail T above alpha(k).  Every beta' contains 1.
                const int lo = alpha(k) + 1;
                const int span = n - lo + 1;
                for (std::uint64_t t = 0; t < (std::uint64_t{1} << span); ++t) {
                    std::vector<int> img = alpha.img;
                    for (int b = 0; b < span; ++b)
                        if (t >> b & 1) img.push_back(lo + b);
                    const int m = static_cast<int>(img.size()) - 1 - k;
                    const int l = static_cast<int>(img.size()) - 2;
                    if (l < 0 || m > r.max_op() || img[1] != 1) continue;
                    const OrdMap bp(l + 1, n, img);
                    const OrdMap beta = unprime(bp);
                    const std::size_t tg = B.restrict(n, g, compose(bp, tau(m, l + 1)));
                    d[0].add_block(doff[0][zero_mono_index(beta)], off[q], r.block(m, tg, k), l % 2 ? -1 : 1);
                }
                // Second kind: beta' is alpha with one value inserted before position i <= k.
                for (int i = 1; i <= k; ++i)
                    for (int val = alpha(i - 1) + 1; val < alpha(i); ++val) {
                        std::vector<int> img = alpha.img;
                        img.insert(img.begin() + i, val);
                        if (img[1] != 1) continue;
                        const OrdMap beta = unprime(OrdMap(k + 1, n, img));
                        d[0].add_block(doff[0][zero_mono_index(beta)], off[q], I, i % 2 ? 1 : -1);
                    }
            }
            for (int i = 0; i < static_cast<int>(d.size()); ++i) v.face[n][i][g] = SparseMat(d[i]);
            for (int j = 0; j < static_cast<int>(s.size()); ++j) v.degen[n][j][g] = SparseMat(s[j]);
        }
    return v;
}

Cleavage canonical_cleavage(const Ruth& r, const SimpVB& v) {
    Cleavage c;
    c.L = v.L;
    c.c.resize(v.L + 1);
    for (std::size_t x = 0; x < v.size(0); ++x) c.c[0].push_back(Subspace::full(v.dim(0, x)));
    for (int n = 1; n <= v.L; ++n)
        for (std::size_t g = 0; g < v.size(n); ++g) {
            const auto off = sdp_offsets(r, n, g);
            c.c[n].push_back(Subspace::coordinate(off.back(), 0, off[off.size() - 2]));
        }
    return c;
}

Sdp build_sdp(const Ruth& r, int L) {
    if (L < 0) L = 2 * r.top() + 3;
    if (L < 1) throw RuthError("build_sdp: L must be at least 1");
    Report rep = validate(r);
    if (!rep.ok()) throw RuthError("build_sdp: representation fails its axioms\n" + rep.table());
    Sdp out;
    out.bundle = sdp_bundle(r, L);
    out.cleavage = canonical_cleavage(r, out.bundle);
    return out;
}

BundleMap lift_morphism(const RuthMorphism& psi, int L) {
    const Ruth& R = *psi.src;
    const Ruth& R2 = *psi.tgt;
    const Nerve& B = *R.nerve;
    BundleMap phi;
    phi.f.resize(L + 1);
    for (int n = 0; n <= L; ++n) {
        const auto monos = enumerate_zero_monos(n);
        for (std::size_t g = 0; g < B.size(n); ++g) {
            const auto os = sdp_offsets(R, n, g), ot = sdp_offsets(R2, n, g);
            Mat f(ot.back(), os.back());
            for (std::size_t p = 0; p < monos.size(); ++p) {
                const OrdMap& beta = monos[p];
                const int l = beta.dom;
                for (int q = 0; q <= l; ++q) {
                    if (l - q > psi.max_op()) continue;
                    const OrdMap a = compose(beta, sigma(q, l));
                    const std::size_t t = B.restrict(n, g, compose(beta, tau(l - q, l)));
                    f.add_block(ot[p], os[zero_mono_index(a)], psi.block(l - q, t, q));
                }
            }
            phi.f[n].push_back(f);
        }
    }
    return phi;
}

NotFull example_not_full(int L, bool corrected) {
    if (L < 2) throw BundleError("example_not_full: L must be at least 2");
    auto nv = std::make_shared<const Nerve>(pair_groupoid(2));
    const ChainComplex e({0, 1, 1}, {Mat(), Mat(0, 1), Mat::identity(1)});
    NotFull out;
    out.v = pullback(dk(e, L), nv);
    Cleavage c;
    c.L = L;
    c.c.resize(L + 1);
    for (std::size_t x = 0; x < out.v.size(0); ++x) c.c[0].push_back(Subspace::full(out.v.dim(0, x)));
    for (int n = 1; n <= L; ++n) {
        const auto off = dk_offsets(e, n);
        std::vector<Vec> units;
        for (int t = 0; t < off[off.size() - 2]; ++t) units.push_back(unit_vec(off.back(), t));
        c.c[n].assign(out.v.size(n), Subspace::span(units, off.back()));
    }
    out.c = c;
    out.c_prime = c;
    // Level 2 coordinates are (v10, v20, v210); simplices named by (x2, x1, x0).
    const auto& G = nv->groupoid();
    auto find = [&](const char* x2, const char* x1, const char* x0) {
        for (std::size_t g = 0; g < nv->size(2); ++g)
            if (G.object_name(nv->vertex(2, g, 2)) == x2 && G.object_name(nv->vertex(2, g, 1)) == x1 &&
                G.object_name(nv->vertex(2, g, 0)) == x0)
                return g;
        throw std::logic_error("example_not_full: simplex not found");
    };
    auto span = [](std::vector<Vec> rows) { return Subspace::span(rows, 3); };
    out.witness_simplex = find("x", "x", "y");
    out.c_prime.c[2][out.witness_simplex] = corrected ? span({{1, 0, 2}, {0, 1, -2}}) : span({{1, 0, -1}, {0, 1, 1}});
    out.c_prime.c[2][find("x", "y", "x")] = span({{1, 0, 0}, {0, 1, -2}});
    out.c_prime.c[2][find("y", "x", "y")] = span({{1, 0, 2}, {0, 1, 0}});
    return out;
}

Report rh2_sensitivity(const Ruth& r, int m, std::size_t g, int k, int row, int col, const Q& delta, int L) {
    if (L < 0) L = 2 * r.top() + 3;
    Ruth p = r;
    if (m < 0 || m > p.max_op() || g >= p.nerve->size(m) || k < 0 || k > p.top())
        throw RuthError("rh2_sensitivity: no stored block at that position");
    Mat b = p.block(m, g, k);
    if (row < 0 || row >= b.rows() || col < 0 || col >= b.cols()) throw RuthError("rh2_sensitivity: entry outside the block");
    b(row, col) += delta;
    p.set_block(m, g, k, b);

    Report rep;
    const Nerve& B = *p.nerve;
    const SimpVB v = sdp_bundle(p, L);
    const bool rh2 = check_rh2(p).ok();
    bool dd = true;
    for (int n = 2; n <= L; ++n)
        for (std::size_t h = 0; h < B.size(n); ++h) {
            const bool ok =
                v.face[n - 1][0][B.face(n, 0, h)] * v.face[n][0][h] == v.face[n - 1][0][B.face(n, 1, h)] * v.face[n][1][h];
            dd = dd && ok;
            rep.record("d_0 d_0 = d_0 d_1", ok, [&] { return nlohmann::json{{"level", n}, {"simplex", h}}; });
        }
    rep.record("RH2", rh2);
    rep.record("d_0 d_0 = d_0 d_1 iff RH2", dd == rh2, [&] { return nlohmann::json{{"rh2", rh2}, {"d0d0", dd}}; });

    bool unit_clause = true;
    for (int x = 0; x < p.groupoid().num_objects(); ++x)
        if (!p.block(1, B.unit_simplex(1, x), 0).is_identity()) unit_clause = false;
    for (int l = 1; l + 1 <= p.max_op() && l + 1 <= L; ++l)
        for (std::size_t h = 0; h < B.size(l); ++h)
            if (!p.block(l + 1, B.degen(l, 0, h), 0).is_zero()) unit_clause = false;
    bool du = true;
    for (int n = 0; n < L; ++n)
        for (std::size_t h = 0; h < B.size(n); ++h) {
            const SparseMat t = v.face[n + 1][0][B.degen(n, 0, h)] * v.degen[n][0][h];
            const bool ok = t.is_identity();
            du = du && ok;
            rep.record("d_0 u_0 = id", ok, [&] { return nlohmann::json{{"level", n}, {"simplex", h}}; });
        }
    rep.record("unit clause on E_0", unit_clause);
    rep.record("d_0 u_0 = id iff unit clause", du == unit_clause,
               [&] { return nlohmann::json{{"unit_clause", unit_clause}, {"d0u0", du}}; });
    return rep;
}

SimpVB grothendieck_nerve(const Ruth& r, int L) {
    if (r.top() > 1) throw RuthError("grothendieck_nerve: order at most 1 required");
    const Nerve& B = *r.nerve;
    auto e0 = [&](int x) { return r.E.dim(x, 0); };
    auto e1 = [&](int x) { return r.E.dim(x, 1); };
    std::vector<std::vector<int>> dims(L + 1);
    for (int n = 0; n <= L; ++n)
        for (std::size_t g = 0; g < B.size(n); ++g) {
            int d = e0(B.vertex(n, g, 0));
            for (int i = 1; i <= n; ++i) d += e1(B.vertex(n, g, i));
            dims[n].push_back(d);
        }
    SimpVB v(r.nerve, L, dims);
    for (int n = 0; n <= L; ++n)
        for (std::size_t g = 0; g < B.size(n); ++g) {
            const int dim = dims[n][g];
            std::vector<int> x(n + 1), oc(n + 2);
            for (int i = 0; i <= n; ++i) x[i] = B.vertex(n, g, i);
            oc[1] = e0(x[0]);
            for (int i = 1; i <= n; ++i) oc[i + 1] = oc[i] + e1(x[i]);
            auto sel = [&](int i) { return Mat::identity(dim).block(oc[i], 0, oc[i + 1] - oc[i], dim); };
            std::vector<std::size_t> arrow(n + 1);
            for (int i = 1; i <= n; ++i) arrow[i] = B.restrict(n, g, OrdMap(1, n, {i - 1, i}));
            // pt[i]: the point x_i of the chain as a function of the coordinates.
            std::vector<Mat> pt{sel(0)};
            for (int i = 1; i <= n; ++i) {
                Mat next = r.block(1, arrow[i], 0) * pt[i - 1];
                if (r.top() >= 1) next += r.block(0, B.unit_simplex(0, x[i]), 1) * sel(i);
                pt.push_back(next);
            }
            if (n >= 1)
                for (int i = 0; i <= n; ++i) {
                    std::vector<Mat> rows;
                    if (i == 0) {
                        rows.push_back(pt[1]);
                        for (int j = 2; j <= n; ++j) rows.push_back(sel(j));
                    } else {
                        rows.push_back(sel(0));
                        for (int j = 1; j <= n; ++j) {
                            if (j == i && i < n) {
                                Mat c = sel(i + 1);
                                if (r.top() >= 1) {
                                    const std::size_t pr = B.restrict(n, g, OrdMap(2, n, {i - 1, i, i + 1}));
                                    c += r.block(1, arrow[i + 1], 1) * sel(i) + r.block(2, pr, 0) * pt[i - 1];
                                }
                                rows.push_back(c);
                            } else if (j == i + 1 || j == i) {
                                continue;
                            } else {
                                rows.push_back(sel(j));
                            }
                        }
                    }
                    v.face[n][i][g] = SparseMat(Mat::vstack(rows, dim));
                }
            if (n < L)
                for (int j = 0; j <= n; ++j) {
                    std::vector<Mat> rows{sel(0)};
                    for (int t = 1; t <= j; ++t) rows.push_back(sel(t));
                    rows.emplace_back(e1(x[j]), dim);
                    for (int t = j + 1; t <= n; ++t) rows.push_back(sel(t));
                    v.degen[n][j][g] = SparseMat(Mat::vstack(rows, dim));
                }
        }
    return v;
}

Mat grothendieck_comparison(const Ruth& r, int n, std::size_t g) {
    if (r.top() > 1) throw RuthError("grothendieck_comparison: order at most 1 required");
    const Nerve& B = *r.nerve;
    const auto& G = B.groupoid();
    auto rp = std::make_shared<const Ruth>(r);
    const Grothendieck gr = grothendieck(rp);
    const auto off = sdp_offsets(r, n, g);
    const int dim = off.back();
    // Same-source arrows h_i = g_i ... g_1 and the positions of their E_1 parts.
    std::vector<std::size_t> h(n + 1);
    std::vector<int> pos(n + 1);
    for (int i = 1; i <= n; ++i) {
        h[i] = B.restrict(n, g, OrdMap(1, n, {0, i}));
        pos[i] = off[zero_mono_index(OrdMap(1, n, {0, i}))];
    }
    const int ne = off[1];
    Mat out(dim, dim);
    for (int col = 0; col < dim; ++col) {
        const Vec u = unit_vec(dim, col);
        const Vec e(u.begin(), u.begin() + ne);
        auto ct = [&](int i) { return Vec(u.begin() + pos[i], u.begin() + pos[i] + r.E.dim(B.vertex(n, g, i), 1)); };
        Vec chain = e;
        if (n >= 1) {
            Vec c1 = ct(1);
            chain.insert(chain.end(), c1.begin(), c1.end());
        }
        for (int i = 1; i < n; ++i) {
            const int a = B.simplex(1, h[i]).arrows[0];
            const std::size_t hinv = B.index(Simplex{G.tgt(a), {G.inv(a)}});
            const Vec ei = gr.target(h[i], ct(i), e);
            const Vec cinv = gr.inverse_c(h[i], ct(i), e);
            const Vec next = gr.multiply_c(h[i + 1], ct(i + 1), hinv, cinv, ei);
            chain.insert(chain.end(), next.begin(), next.end());
        }
        for (int t = 0; t < dim; ++t) out(t, col) = chain[t];
    }
    return out;
}

Report classical_cross_checks(const Ruth& r, const SimpVB& v) {
    Report rep;
    const Nerve& B = *r.nerve;
    const int L = v.L;
    if (r.top() <= 1) {
        const SimpVB gr = grothendieck_nerve(r, L);
        const std::string name = r.top() == 0 ? "order 0: translation groupoid nerve" : "order 1: Grothendieck nerve";
        for (int n = 0; n <= L; ++n)
            for (std::size_t g = 0; g < B.size(n); ++g) {
                const SparseMat p(grothendieck_comparison(r, n, g));
                auto wit = [&] { return nlohmann::json{{"level", n}, {"simplex", g}}; };
                if (r.top() == 0) rep.record(name + " (same coordinates)", p.is_identity(), wit);
                for (int i = 0; n >= 1 && i <= n; ++i)
                    rep.record(name + " faces", SparseMat(grothendieck_comparison(r, n - 1, B.face(n, i, g))) * v.face[n][i][g] == gr.face[n][i][g] * p,
                               wit);
                for (int j = 0; n < L && j <= n; ++j)
                    rep.record(name + " degeneracies",
                               SparseMat(grothendieck_comparison(r, n + 1, B.degen(n, j, g))) * v.degen[n][j][g] == gr.degen[n][j][g] * p, wit);
            }
    }
    const auto& G = r.groupoid();
    bool units = true;
    for (int a = 0; a < G.num_arrows(); ++a) units = units && G.is_unit(a);
    if (units)
        for (int x = 0; x < G.num_objects(); ++x) {
            std::vector<Mat> d{Mat()};
            for (int k = 1; k <= r.top(); ++k) d.push_back(r.block(0, static_cast<std::size_t>(x), k));
            const SimpVS y = dk(sign_twisted(ChainComplex(r.E.dims[x], d)), L);
            for (int n = 1; n <= L; ++n) {
                const std::size_t u = B.unit_simplex(n, x);
                for (int i = 0; i <= n; ++i)
                    rep.record("unit groupoid: sign-twisted Dold-Kan faces", v.d(n, i, u) == y.face[n][i],
                               [&] { return nlohmann::json{{"object", G.object_name(x)}, {"level", n}, {"i", i}}; });
            }
        }
    return rep;
}

}  // namespace hvb
