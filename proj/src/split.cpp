#include "hvb/split.hpp"

#include <algorithm>
#include <bit>

#include "hvb/sdp.hpp"

namespace hvb {

namespace {

Mat annihilator(const Subspace& s) { return kernel(s.basis()).basis(); }

std::size_t degenerate_prefix(const Nerve& B, int m, std::size_t g, int k) {
    for (int t = 0; t < k; ++t) g = B.degen(m + t, 0, g);
    return g;
}

int sign(int e) { return e % 2 ? -1 : 1; }

}  // namespace

SplitContext::SplitContext(SimpVB v, Cleavage c) : v_(std::move(v)), c_(std::move(c)) {
    if (c_.L != v_.L || static_cast<int>(c_.c.size()) != v_.L + 1) throw SplitError("split: cleavage levels do not match the bundle");
    e_ = core(v_);
    const CleavageReport cr = check_cleavage(v_, c_);
    if (!cr.complement || !cr.normal || !cr.weakly_flat)
        throw SplitError("split: the cleavage must be a normal weakly flat complement\n" + cr.report.table());
    if (v_.L < order() + 2)
        throw SplitError("split: L = " + std::to_string(v_.L) + " is below N + 2 = " + std::to_string(order() + 2));
}

const Mat& SplitContext::pi_k(int n, std::size_t g) const {
    const auto k = key(n, 0, g);
    if (auto it = pik_.find(k); it != pik_.end()) return it->second;
    Mat p;
    if (n == 0) {
        p = Mat::identity(v_.dim(0, g));
    } else {
        std::vector<Mat> pos;
        for (int i = 1; i <= n; ++i) pos.push_back(v_.d(n, i, g));
        const Subspace kn = kernel(Mat::vstack(pos, v_.dim(n, g)));
        if (!is_complement(kn, c_.c[n][g], v_.dim(n, g)))
            throw SplitError("split: K and C are not complementary at level " + std::to_string(n) + ", simplex " + std::to_string(g));
        p = projection(kn, c_.c[n][g]);
    }
    return pik_.emplace(k, std::move(p)).first->second;
}

const Mat& SplitContext::filler(int n, int k, std::size_t g) const {
    const auto kk = key(n, static_cast<std::uint64_t>(k), g);
    if (auto it = fill_.find(kk); it != fill_.end()) return it->second;
    if (k < 0 || k >= n) throw SplitError("split: fillers exist only for horns with k < n");
    const Mat b = c_.c[n][g].basis_cols();
    const Mat hm = horn_map(v_, n, k, g);
    Mat f(v_.dim(n, g), hm.rows());
    if (b.cols() > 0) {
        const Mat hb = hm * b;
        if (rank(hb) != b.cols())
            throw SplitError("split: horn map not injective on C at level " + std::to_string(n) + ", simplex " + std::to_string(g));
        f = b * left_inverse(hb);
    }
    return fill_.emplace(kk, std::move(f)).first->second;
}

Mat SplitContext::restriction(int n, std::size_t g, std::uint64_t mask, std::size_t* at) const {
    const Nerve& B = *v_.base;
    // Remove missing vertices from the top down; lower positions stay put.
    SparseMat acc;
    bool first = true;
    for (int j = n; j >= 0; --j) {
        if (mask >> j & 1) continue;
        const SparseMat& d = v_.face[n][j][g];
        acc = first ? d : d * acc;
        first = false;
        g = B.face(n, j, g);
        --n;
    }
    if (at) *at = g;
    return first ? Mat::identity(v_.dim(n, g)) : acc.dense();
}

const Mat& SplitContext::core_basis_at(int k, int x) const {
    const auto kk = key(k, 0, static_cast<std::size_t>(x));
    if (auto it = basis_.find(kk); it != basis_.end()) return it->second;
    return basis_.emplace(kk, core_basis(v_, k, x)).first->second;
}

const Mat& SplitContext::core_coords(int k, int x) const {
    const auto kk = key(k, 0, static_cast<std::size_t>(x));
    if (auto it = coords_.find(kk); it != coords_.end()) return it->second;
    const Mat& b = core_basis_at(k, x);
    return coords_.emplace(kk, b.cols() ? left_inverse(b) : Mat(0, b.rows())).first->second;
}

Vec horn_fill_in_cleavage(const SplitContext& ctx, int n, int k, std::size_t g, const Vec& horn) {
    if (!horn_space(ctx.bundle(), n, k, g).contains(horn)) throw SplitError("horn_fill_in_cleavage: not a horn");
    return ctx.filler(n, k, g).apply(horn);
}

const PushForward& push_forward(const SplitContext& ctx, int n, int i, std::size_t g) {
    const auto key = SplitContext::key(n, static_cast<std::uint64_t>(i), g);
    if (auto it = ctx.push_.find(key); it != ctx.push_.end()) return it->second;
    if (i < 0 || i >= n) throw SplitError("push_forward: need 0 <= i < n");
    if (n + 1 > ctx.L()) throw SplitError("push_forward: level n + 1 is above the truncation");
    const SimpVB& v = ctx.bundle();
    const Nerve& B = *v.base;
    const std::size_t hat = B.degen(n, i + 1, g);
    const std::uint64_t both = (std::uint64_t{3} << i), full = (std::uint64_t{1} << (n + 2)) - 1;

    std::vector<std::uint64_t> order;
    for (std::uint64_t m = 1; m <= full; ++m)
        if ((m & both) == both) order.push_back(m);
    std::stable_sort(order.begin(), order.end(), [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });

    std::unordered_map<std::uint64_t, Mat> h;
    auto part = [&](std::uint64_t m) -> Mat {
        if (m >> (i + 1) & 1) return h.at(m);
        // Off vertex i + 1 the simplex is the given one.
        const std::uint64_t low = m & ((std::uint64_t{1} << (i + 1)) - 1);
        return ctx.restriction(n, g, low | ((m >> (i + 2)) << (i + 1)));
    };
    for (const std::uint64_t m : order) {
        const OrdMap a = from_mask(m, n + 1);
        const int dim = a.dom;
        const int ip = static_cast<int>(std::find(a.img.begin(), a.img.end(), i) - a.img.begin());
        std::vector<Mat> faces;
        for (int j = 0; j <= dim; ++j)
            if (j != ip) faces.push_back(part(m & ~(std::uint64_t{1} << a.img[j])));
        const std::size_t at = B.restrict(n + 1, hat, a);
        h.emplace(m, ctx.filler(dim, ip, at) * Mat::vstack(faces, v.dim(n, g)));
    }
    PushForward out;
    out.h = h.at(full);
    out.h_at = hat;
    out.p = v.face[n + 1][i][hat] * out.h;
    out.p_at = B.face(n + 1, i, hat);
    return ctx.push_.emplace(key, std::move(out)).first->second;
}

Transport intermediate_retraction(const SplitContext& ctx, int n, int a, std::size_t g) {
    if (a < 0 || a > n) throw SplitError("intermediate_retraction: need 0 <= a <= n");
    Transport t{Mat::identity(ctx.bundle().dim(n, g)), g};
    for (int b = 1; b <= a; ++b)
        for (int i = b - 1; i >= 0; --i) {
            const PushForward& pf = push_forward(ctx, n, i, t.at);
            t.m = pf.p * t.m;
            t.at = pf.p_at;
        }
    return t;
}

const Transport& retraction(const SplitContext& ctx, int n, std::size_t g) {
    const auto key = SplitContext::key(n, 0, g);
    if (auto it = ctx.retr_.find(key); it != ctx.retr_.end()) return it->second;
    Transport t = intermediate_retraction(ctx, n, n, g);
    const Nerve& B = *ctx.bundle().base;
    if (t.at != B.unit_simplex(n, B.vertex(n, g, n))) throw SplitError("retraction: did not land over the last vertex");
    return ctx.retr_.emplace(key, std::move(t)).first->second;
}

std::vector<int> split_offsets(const SplitContext& ctx, int n, std::size_t g) {
    const Nerve& B = *ctx.bundle().base;
    std::vector<int> off{0};
    for (const OrdMap& a : enumerate_zero_monos(n)) off.push_back(off.back() + ctx.core_bundle().dim(B.vertex(n, g, a.img.back()), a.dom));
    return off;
}

const Mat& phi(const SplitContext& ctx, int n, std::size_t g) {
    const auto key = SplitContext::key(n, 0, g);
    if (auto it = ctx.phi_.find(key); it != ctx.phi_.end()) return it->second;
    const Nerve& B = *ctx.bundle().base;
    const auto off = split_offsets(ctx, n, g);
    Mat f(off.back(), ctx.bundle().dim(n, g));
    const auto monos = enumerate_zero_monos(n);
    for (std::size_t p = 0; p < monos.size(); ++p) {
        if (off[p + 1] == off[p]) continue;
        const OrdMap& a = monos[p];
        const int k = a.dom, x = B.vertex(n, g, a.img.back());
        std::size_t at = 0;
        const Mat res = ctx.restriction(n, g, a.mask(), &at);
        f.set_block(off[p], 0, ctx.core_coords(k, x) * (retraction(ctx, k, at).m * (ctx.pi_k(k, at) * res)));
    }
    return ctx.phi_.emplace(key, std::move(f)).first->second;
}

namespace {

// Shared loop of both extraction routes: value(n, hat, k, m) returns the
// block pi_iota d_0 of the preimage of (E_k, sigma_k) over hat, unsigned.
template <class F>
Ruth extract_with(const SplitContext& ctx, F value) {
    const SimpVB& v = ctx.bundle();
    const Nerve& B = *v.base;
    const GradedBundle& E = ctx.core_bundle();
    const int N = E.top();
    Ruth out(v.base, E);
    for (int m = 0; m <= N + 1; ++m)
        for (std::size_t g = 0; g < B.size(m); ++g)
            for (int k = 0; k <= N; ++k) {
                const int tk = k + m - 1;
                if (tk < 0 || tk > N) continue;
                const int x0 = B.vertex(m, g, 0), xm = B.vertex(m, g, m);
                if (E.dim(x0, k) == 0 || E.dim(xm, tk) == 0) continue;
                const int n = k + m;
                const std::size_t hat = degenerate_prefix(B, m, g, k);
                out.set_block(m, g, k, value(n, hat, k).scaled(sign(m + k - 1)));
            }
    return out;
}

}  // namespace

Ruth extract_ruth(const SplitContext& ctx) {
    const SimpVB& v = ctx.bundle();
    const Nerve& B = *v.base;
    return extract_with(ctx, [&](int n, std::size_t hat, int k) {
        const auto off = split_offsets(ctx, n, hat);
        const std::size_t s = zero_mono_index(sigma(k, n));
        const Mat pre = inverse(phi(ctx, n, hat)).block(0, off[s], v.dim(n, hat), off[s + 1] - off[s]);
        const std::size_t f = B.face(n, 0, hat);
        const auto offf = split_offsets(ctx, n - 1, f);
        const Mat img = phi(ctx, n - 1, f) * (v.face[n][0][hat] * pre);
        const int last = static_cast<int>(offf.size()) - 2;
        return img.block(offf[last], 0, offf[last + 1] - offf[last], pre.cols());
    });
}

Ruth extract_ruth_direct(const SplitContext& ctx) {
    const SimpVB& v = ctx.bundle();
    const Nerve& B = *v.base;
    const int N = ctx.order();
    return extract_with(ctx, [&](int n, std::size_t hat, int k) {
        const int x0 = B.vertex(n, hat, 0);
        const Mat& basis = ctx.core_basis_at(k, x0);
        std::vector<Mat> rows;
        Mat rhs(0, basis.cols());
        const std::uint64_t sk = sigma(k, n).mask();
        for (const OrdMap& b : enumerate_zero_monos(n)) {
            if (b.dom > N) continue;
            std::size_t at = 0;
            const Mat res = ctx.restriction(n, hat, b.mask(), &at);
            Mat cond, val;
            if (b.mask() == sk) {
                cond = res;
                val = basis;
            } else {
                cond = b.dom == 0 ? res : annihilator(ctx.cleavage().c[b.dom][at]) * res;
                val = Mat(cond.rows(), basis.cols());
            }
            rows.push_back(cond);
            rhs = Mat::vstack({rhs, val}, basis.cols());
        }
        const Mat a = Mat::vstack(rows, v.dim(n, hat));
        Mat pre(v.dim(n, hat), basis.cols());
        for (int c = 0; c < basis.cols(); ++c) {
            const SolveResult sr = solve_unique(a, rhs.col(c));
            if (sr.status != SolveStatus::Ok) throw SplitError("extract_ruth_direct: preimage not unique at level " + std::to_string(n));
            for (int r = 0; r < pre.rows(); ++r) pre(r, c) = sr.x[r];
        }
        const std::size_t f = B.face(n, 0, hat);
        const int xl = B.vertex(n - 1, f, n - 1);
        return ctx.core_coords(n - 1, xl) * (retraction(ctx, n - 1, f).m * (ctx.pi_k(n - 1, f) * (v.face[n][0][hat] * pre)));
    });
}

Roundtrip roundtrip_bundle(const SplitContext& ctx) {
    const SimpVB& v = ctx.bundle();
    Roundtrip out;
    out.r = extract_ruth(ctx);
    out.report.merge(validate(out.r), "extracted: ");
    const SimpVB w = sdp_bundle(out.r, v.L);
    const Cleavage cc = canonical_cleavage(out.r, w);
    out.phi.f.resize(v.L + 1);
    for (int n = 0; n <= v.L; ++n)
        for (std::size_t g = 0; g < v.size(n); ++g) {
            const Mat& f = phi(ctx, n, g);
            out.phi.f[n].push_back(f);
            auto wit = [&] { return nlohmann::json{{"level", n}, {"simplex", g}}; };
            out.report.record("phi invertible", f.rows() == f.cols() && rank(f) == f.cols(), wit);
            if (n >= 1) out.report.record("phi(C) = C^can", image(f, ctx.cleavage().c[n][g]) == cc.c[n][g], wit);
        }
    out.report.merge(check_bundle_map(out.phi, v, w), "phi ");
    return out;
}

RuthMorphism lower_morphism(const BundleMap& f, std::shared_ptr<const Ruth> src, std::shared_ptr<const Ruth> tgt) {
    const int L = static_cast<int>(f.f.size()) - 1;
    if (L < 1) throw SplitError("lower_morphism: need levels 0 and 1 at least");
    const SimpVB v = sdp_bundle(*src, L), w = sdp_bundle(*tgt, L);
    const Report wf = check_weakly_flat_morphism(f, v, canonical_cleavage(*src, v), canonical_cleavage(*tgt, w));
    if (!wf.ok()) throw SplitError("lower_morphism: the map is not weakly flat\n" + wf.table());
    const Nerve& B = *src->nerve;
    RuthMorphism psi(src, tgt);
    for (int m = 0; m <= tgt->top(); ++m)
        for (std::size_t g = 0; g < B.size(m); ++g)
            for (int k = 0; k <= src->top(); ++k) {
                const int n = k + m;
                if (n > tgt->top() || n > L) continue;
                const std::size_t hat = degenerate_prefix(B, m, g, k);
                const auto os = sdp_offsets(*src, n, hat), ot = sdp_offsets(*tgt, n, hat);
                const std::size_t s = zero_mono_index(sigma(k, n));
                const int last = static_cast<int>(ot.size()) - 2;
                psi.set_block(m, g, k, f.f[n][hat].block(ot[last], os[s], ot[last + 1] - ot[last], os[s + 1] - os[s]));
            }
    return psi;
}

RuthMorphism lower_between(const Roundtrip& a, const Roundtrip& b, const BundleMap& f) {
    BundleMap conj;
    conj.f.resize(f.f.size());
    for (std::size_t n = 0; n < f.f.size(); ++n)
        for (std::size_t g = 0; g < f.f[n].size(); ++g) conj.f[n].push_back(b.phi.f[n][g] * f.f[n][g] * inverse(a.phi.f[n][g]));
    return lower_morphism(conj, std::make_shared<const Ruth>(a.r), std::make_shared<const Ruth>(b.r));
}

RuthMorphism gauge_morphism(std::shared_ptr<const Ruth> src, std::shared_ptr<const Ruth> tgt,
                            const std::vector<std::vector<std::vector<Mat>>>& psi_ops) {
    RuthMorphism psi(src, tgt);
    const Nerve& B = *src->nerve;
    for (int x = 0; x < src->groupoid().num_objects(); ++x)
        for (int k = 0; k <= src->top(); ++k) psi.set_block(0, B.unit_simplex(0, x), k, Mat::identity(src->E.dim(x, k)));
    for (int m = 1; m < static_cast<int>(psi_ops.size()) && m <= psi.max_op(); ++m)
        for (std::size_t g = 0; g < psi_ops[m].size(); ++g)
            for (int k = 0; k < static_cast<int>(psi_ops[m][g].size()); ++k)
                if (!psi_ops[m][g][k].empty()) psi.set_block(m, g, k, psi_ops[m][g][k]);
    return psi;
}

Cleavage twisted_cleavage(const Ruth& r, const std::vector<std::vector<std::vector<Mat>>>& psi_ops, const SimpVB& v) {
    // The lift and the canonical cleavage only read E and psi, so R stands in for the target.
    auto rp = std::make_shared<const Ruth>(r);
    const BundleMap f = lift_morphism(gauge_morphism(rp, rp, psi_ops), v.L);
    const Cleavage can = canonical_cleavage(r, v);
    Cleavage c;
    c.L = v.L;
    c.c.resize(v.L + 1);
    c.c[0] = can.c[0];
    for (int n = 1; n <= v.L; ++n)
        for (std::size_t g = 0; g < v.size(n); ++g) c.c[n].push_back(preimage(f.f[n][g], can.c[n][g]));
    return c;
}

Ruth gauge_twist(const Ruth& r, const std::vector<std::vector<std::vector<Mat>>>& psi_ops) {
    const Nerve& B = *r.nerve;
    for (int m = 1; m < static_cast<int>(psi_ops.size()); ++m)
        for (std::size_t g = 0; g < psi_ops[m].size(); ++g)
            for (const Mat& b : psi_ops[m][g])
                if (B.is_degenerate(m, g) && !b.is_zero())
                    throw RuthError("gauge_twist: psi does not vanish on the degenerate simplex " + std::to_string(g) + " at level " +
                                    std::to_string(m));
    const int L = r.top() + 2;
    const Sdp s = build_sdp(r, L);
    SplitContext ctx(s.bundle, twisted_cleavage(r, psi_ops, s.bundle));
    Ruth out = extract_ruth(ctx);
    out.mcap = r.mcap;
    const Report rep = validate(out);
    if (!rep.ok()) throw RuthError("gauge_twist: the twisted representation fails its axioms\n" + rep.table());
    return out;
}

}  // namespace hvb
