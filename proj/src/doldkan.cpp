#include "hvb/doldkan.hpp"

#include "hvb/svb.hpp"

namespace hvb {

ChainComplex::ChainComplex(std::vector<int> dims_, std::vector<Mat> d_) : dims(std::move(dims_)), d(std::move(d_)) {
    validate();
}

Mat ChainComplex::boundary(int n) const {
    if (n >= 1 && n <= top()) return d[n];
    return Mat(dim(n - 1), dim(n));
}

void ChainComplex::validate() const {
    if (dims.empty()) throw ChainError("chain complex needs at least degree 0");
    if (static_cast<int>(d.size()) != top() + 1) throw ChainError("chain complex: one boundary per degree 1..top expected");
    for (int n = 0; n <= top(); ++n)
        if (dims[n] < 0) throw ChainError("chain complex: negative dimension");
    for (int n = 1; n <= top(); ++n)
        if (d[n].rows() != dims[n - 1] || d[n].cols() != dims[n])
            throw ChainError("chain complex: boundary " + std::to_string(n) + " has wrong shape");
    for (int n = 2; n <= top(); ++n)
        if (!(d[n - 1] * d[n]).is_zero()) throw ChainError("chain complex: d∘d != 0 at degree " + std::to_string(n));
}

ChainComplex chain_from_json(const nlohmann::json& doc) {
    try {
        std::vector<int> dims = doc.at("dims").get<std::vector<int>>();
        std::vector<Mat> d(dims.size());
        const auto& b = doc.at("boundaries");
        if (b.size() + 1 != dims.size()) throw ChainError("chain complex: 'boundaries' must list degrees 1..top");
        for (std::size_t n = 1; n < dims.size(); ++n) d[n] = mat_from_json(b[n - 1], dims[n - 1], dims[n]);
        return {dims, d};
    } catch (const nlohmann::json::exception& e) {
        throw ChainError(std::string("chain complex document: ") + e.what());
    }
}

nlohmann::json chain_to_json(const ChainComplex& y) {
    nlohmann::json doc = {{"kind", "chain_complex"}, {"dims", y.dims}, {"boundaries", nlohmann::json::array()}};
    for (int n = 1; n <= y.top(); ++n) doc["boundaries"].push_back(to_json(y.d[n]));
    return doc;
}

ChainComplex sign_twisted(const ChainComplex& y) {
    ChainComplex out = y;
    for (int n = 2; n <= y.top(); n += 2) out.d[n] = -y.d[n];
    return out;
}

Report check_simplicial(const SimpVS& x) {
    Report rep;
    const int L = x.L;
    auto wit = [](const char* id, int n, int i, int j) {
        return [=] { return nlohmann::json{{"identity", id}, {"level", n}, {"i", i}, {"j", j}}; };
    };
    for (int n = 2; n <= L; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                rep.record("d_i d_j = d_{j-1} d_i", x.face[n - 1][i] * x.face[n][j] == x.face[n - 1][j - 1] * x.face[n][i],
                           wit("d_i d_j = d_{j-1} d_i", n, i, j));
    for (int n = 0; n < L; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                Mat lhs = x.face[n + 1][i] * x.degen[n][j];
                bool ok;
                if (i < j)
                    ok = lhs == x.degen[n - 1][j - 1] * x.face[n][i];
                else if (i == j || i == j + 1)
                    ok = lhs.is_identity();
                else
                    ok = lhs == x.degen[n - 1][j] * x.face[n][i - 1];
                rep.record("d_i u_j", ok, wit("d_i u_j", n, i, j));
            }
    for (int n = 0; n + 2 <= L; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                rep.record("u_i u_j = u_{j+1} u_i", x.degen[n + 1][i] * x.degen[n][j] == x.degen[n + 1][j + 1] * x.degen[n][i],
                           wit("u_i u_j = u_{j+1} u_i", n, i, j));
    return rep;
}

nlohmann::json simpvs_to_json(const SimpVS& x) {
    nlohmann::json doc = {{"kind", "simplicial_vector_space"}, {"L", x.L}, {"dims", x.dims}};
    doc["faces"] = nlohmann::json::array();
    doc["degeneracies"] = nlohmann::json::array();
    for (int n = 1; n <= x.L; ++n)
        for (int i = 0; i <= n; ++i) doc["faces"].push_back({{"level", n}, {"i", i}, {"matrix", to_json(x.face[n][i])}});
    for (int n = 0; n < x.L; ++n)
        for (int j = 0; j <= n; ++j) doc["degeneracies"].push_back({{"level", n}, {"j", j}, {"matrix", to_json(x.degen[n][j])}});
    return doc;
}

Normalization normalize(const SimpVS& x) {
    std::vector<Subspace> K(x.L + 1);
    Normalization out;
    out.basis.resize(x.L + 1);
    std::vector<int> dims(x.L + 1);
    for (int n = 0; n <= x.L; ++n) {
        if (n == 0) {
            K[0] = Subspace::full(x.dims[0]);
        } else {
            std::vector<Mat> pos(x.face[n].begin() + 1, x.face[n].end());
            K[n] = kernel(Mat::vstack(pos, x.dims[n]));
        }
        out.basis[n] = K[n].basis_cols();
        dims[n] = K[n].dim();
    }
    std::vector<Mat> d(x.L + 1);
    for (int n = 1; n <= x.L; ++n) {
        Mat img = x.face[n][0] * out.basis[n];
        Mat coords(dims[n - 1], dims[n]);
        for (int c = 0; c < dims[n]; ++c) {
            Vec v = img.col(c);
            if (!K[n - 1].contains(v)) throw ChainError("normalize: d_0 leaves the normalized subspace at level " + std::to_string(n));
            Vec cv = K[n - 1].coords(v);
            for (int r = 0; r < dims[n - 1]; ++r) coords(r, c) = cv[r];
        }
        d[n] = coords;
    }
    out.complex = ChainComplex(dims, d);
    return out;
}

std::vector<int> dk_offsets(const ChainComplex& y, int n) {
    std::vector<int> off;
    int acc = 0;
    for (const auto& a : enumerate_zero_monos(n)) {
        off.push_back(acc);
        acc += y.dim(a.dom);
    }
    off.push_back(acc);
    return off;
}

SimpVS dk(const ChainComplex& y, int L) {
    SimpVS x;
    x.L = L;
    std::vector<std::vector<int>> off(L + 2);
    for (int n = 0; n <= L; ++n) {
        off[n] = dk_offsets(y, n);
        x.dims.push_back(off[n].back());
    }
    auto eye = [&](int k) { return Mat::identity(y.dim(k)); };
    x.face.resize(L + 1);
    x.degen.resize(L);
    for (int n = 1; n <= L; ++n) {
        auto rows = enumerate_zero_monos(n - 1);
        x.face[n].assign(n + 1, Mat(x.dims[n - 1], x.dims[n]));
        for (const auto& beta : rows) {
            const int l = beta.dom;
            const int r0 = off[n - 1][zero_mono_index(beta)];
            for (int i = 1; i <= n; ++i) {
                OrdMap a = compose(delta(n, i), beta);
                x.face[n][i].set_block(r0, off[n][zero_mono_index(a)], eye(l));
            }
            // d_0: boundary at beta', then -(-1)^i at beta' delta_i.
            const OrdMap bp = prime(beta);
            x.face[n][0].add_block(r0, off[n][zero_mono_index(bp)], y.boundary(l + 1));
            for (int i = 1; i <= l + 1; ++i) {
                OrdMap a = compose(bp, delta(l + 1, i));
                x.face[n][0].add_block(r0, off[n][zero_mono_index(a)], eye(l).scaled(i % 2 ? 1 : -1));
            }
        }
    }
    for (int n = 0; n < L; ++n) {
        x.degen[n].assign(n + 1, Mat(x.dims[n + 1], x.dims[n]));
        for (const auto& beta : enumerate_zero_monos(n + 1))
            for (int j = 0; j <= n; ++j) {
                OrdMap a = compose(upsilon(n, j), beta);
                if (!a.injective()) continue;
                x.degen[n][j].set_block(off[n + 1][zero_mono_index(beta)], off[n][zero_mono_index(a)], eye(beta.dom));
            }
    }
    return x;
}

OrdMap dual_mono(const OrdMap& epi) {
    if (!epi.surjective()) throw std::invalid_argument("dual_mono: not a surjection");
    std::vector<int> v(epi.cod + 1, -1);
    for (int t = epi.dom; t >= 0; --t) v[epi(t)] = t;
    return {epi.cod, epi.dom, v};
}

OrdMap dual_epi(const OrdMap& mono) {
    if (!mono.injective() || !mono.preserves_zero()) throw std::invalid_argument("dual_epi: not a 0-preserving injection");
    std::vector<int> v(mono.cod + 1);
    int j = 0;
    for (int t = 0; t <= mono.cod; ++t) {
        while (j < mono.dom && mono(j + 1) <= t) ++j;
        v[t] = j;
    }
    return {mono.cod, mono.dom, v};
}

std::vector<OrdMap> enumerate_surjections(int n) {
    std::vector<OrdMap> out;
    for (const auto& a : enumerate_zero_monos(n)) out.push_back(dual_epi(a));
    return out;
}

SimpVS dk_classic(const ChainComplex& y, int L) {
    SimpVS x;
    x.L = L;
    std::vector<std::vector<int>> off(L + 1);
    for (int n = 0; n <= L; ++n) {
        off[n] = dk_offsets(y, n);
        x.dims.push_back(off[n].back());
    }
    auto at = [&](int n, const OrdMap& epi) { return off[n][zero_mono_index(dual_mono(epi))]; };
    x.face.resize(L + 1);
    x.degen.resize(L);
    for (int n = 1; n <= L; ++n) {
        x.face[n].assign(n + 1, Mat(x.dims[n - 1], x.dims[n]));
        for (const auto& alpha : enumerate_surjections(n)) {
            const int k = alpha.cod;
            const int c0 = at(n, alpha);
            for (int i = 0; i <= n; ++i) {
                OrdMap a = compose(alpha, delta(n, i));
                if (a.surjective()) {
                    x.face[n][i].set_block(at(n - 1, a), c0, Mat::identity(y.dim(k)));
                } else if (i == n && a.img.back() == k - 1) {
                    // alpha delta_n = delta_k beta with beta the corestriction to [k-1].
                    OrdMap beta(n - 1, k - 1, a.img);
                    x.face[n][i].set_block(at(n - 1, beta), c0, y.boundary(k));
                }
            }
        }
    }
    for (int n = 0; n < L; ++n) {
        x.degen[n].assign(n + 1, Mat(x.dims[n + 1], x.dims[n]));
        for (const auto& alpha : enumerate_surjections(n))
            for (int j = 0; j <= n; ++j)
                x.degen[n][j].set_block(at(n + 1, compose(alpha, upsilon(n, j))), at(n, alpha), Mat::identity(y.dim(alpha.cod)));
    }
    return x;
}

Mat dk_unit_map(const ChainComplex& y, int n) {
    auto off = dk_offsets(y, n);
    Mat m(off.back(), y.dim(n));
    m.set_block(off[zero_mono_index(identity(n))], 0, Mat::identity(y.dim(n)));
    return m;
}

Mat epsilon(const ChainComplex& y, int n) {
    auto off = dk_offsets(y, n);
    Mat m(off.back(), off.back());
    auto monos = enumerate_zero_monos(n);
    for (std::size_t p = 0; p < monos.size(); ++p) {
        const int k = monos[p].dom;
        const int s = (k * (k - 1) / 2) % 2 ? -1 : 1;
        for (int t = off[p]; t < off[p + 1]; ++t) m(t, t) = s;
    }
    return m;
}

Subspace degenerate_span(const SimpVS& x, int n) {
    if (n == 0) return Subspace(x.dims[0]);
    return image(Mat::hstack(x.degen[n - 1], x.dims[n]));
}

namespace {

// Complement of s in Q^d spanned by unit vectors off the pivot columns.
Mat unit_complement(const Subspace& s) {
    std::vector<char> piv(s.ambient(), 0);
    for (int p : s.pivots()) piv[p] = 1;
    std::vector<Vec> cols;
    for (int j = 0; j < s.ambient(); ++j)
        if (!piv[j]) cols.push_back(unit_vec(s.ambient(), j));
    return Mat::from_cols(cols, s.ambient());
}

struct Adapted {
    std::vector<Mat> w;  // complement of cycles, per degree
    std::vector<Mat> h;  // complement of boundaries inside cycles
};

Adapted adapted(const ChainComplex& c, int top) {
    Adapted a;
    a.w.resize(top + 2);
    a.h.resize(top + 2);
    for (int n = 0; n <= top + 1; ++n) {
        Subspace z = kernel(c.boundary(n));
        Subspace b = image(c.boundary(n + 1));
        a.w[n] = unit_complement(z);
        std::vector<Vec> hs;
        Subspace acc = b;
        for (int i = 0; i < z.dim(); ++i) {
            Vec v = z.basis().row(i);
            if (acc.contains(v)) continue;
            hs.push_back(v);
            acc = sum(acc, Subspace::span({v}, c.dim(n)));
        }
        a.h[n] = Mat::from_cols(hs, c.dim(n));
    }
    return a;
}

}  // namespace

std::optional<std::vector<Mat>> chain_iso(const ChainComplex& a, const ChainComplex& b) {
    const int top = std::max(a.top(), b.top());
    Adapted A = adapted(a, top), B = adapted(b, top);
    std::vector<Mat> f(top + 1);
    for (int n = 0; n <= top; ++n) {
        if (a.dim(n) != b.dim(n) || A.w[n].cols() != B.w[n].cols() || A.h[n].cols() != B.h[n].cols()) return std::nullopt;
        Mat pa = Mat::hstack({a.boundary(n + 1) * A.w[n + 1], A.h[n], A.w[n]}, a.dim(n));
        Mat pb = Mat::hstack({b.boundary(n + 1) * B.w[n + 1], B.h[n], B.w[n]}, b.dim(n));
        f[n] = pb * inverse(pa);
    }
    if (!is_chain_iso(a, b, f)) return std::nullopt;
    return f;
}

bool is_chain_iso(const ChainComplex& a, const ChainComplex& b, const std::vector<Mat>& f) {
    const int top = std::max(a.top(), b.top());
    if (static_cast<int>(f.size()) != top + 1) return false;
    for (int n = 0; n <= top; ++n) {
        if (f[n].rows() != b.dim(n) || f[n].cols() != a.dim(n) || rank(f[n]) != a.dim(n) || a.dim(n) != b.dim(n)) return false;
        if (n > 0 && b.boundary(n) * f[n] != f[n - 1] * a.boundary(n)) return false;
    }
    return true;
}

Report check_unique_flat_cleavage(const SimpVS& x) {
    SimpVB v = to_bundle(x);
    Cleavage d = degenerate_cleavage(v);
    Report rep;
    CleavageReport c = check_cleavage(v, d);
    rep.merge(c.report);
    // Order criterion: NX_n = 0 for n > N iff horn fillers are unique for n > N.
    Normalization nx = normalize(x);
    FibrationReport f = check_fibration(v);
    for (int n = 1; n <= x.L; ++n) {
        bool unique = f.unique_fillers[n];
        rep.record("NX_n = 0 iff unique horn fillers", unique == (nx.complex.dim(n) == 0),
                   [&] { return nlohmann::json{{"level", n}, {"dim NX", nx.complex.dim(n)}, {"unique", unique}}; });
    }
    return rep;
}

}  // namespace hvb
