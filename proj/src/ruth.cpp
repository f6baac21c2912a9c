#include "hvb/ruth.hpp"

#include <algorithm>

namespace hvb {

GradedBundle::GradedBundle(std::shared_ptr<const FinGroupoid> g, std::vector<std::vector<int>> d)
    : groupoid(std::move(g)), dims(std::move(d)) {
    if (static_cast<int>(dims.size()) != groupoid->num_objects()) throw RuthError("graded bundle: one dims row per object expected");
    for (const auto& row : dims) {
        if (row.size() != dims[0].size() || row.empty()) throw RuthError("graded bundle: all objects need the same degree range");
        for (int v : row)
            if (v < 0) throw RuthError("graded bundle: negative dimension");
    }
}

int GradedBundle::total(int x) const {
    int s = 0;
    for (int v : dims[x]) s += v;
    return s;
}

int GradedBundle::offset(int x, int n) const {
    int s = 0;
    for (int k = 0; k < n && k <= top(); ++k) s += dims[x][k];
    return s;
}

nlohmann::json bundle_to_json(const GradedBundle& e) {
    nlohmann::json d = nlohmann::json::object();
    for (int x = 0; x < e.groupoid->num_objects(); ++x) d[e.groupoid->object_name(x)] = e.dims[x];
    return d;
}

namespace {

int src_vertex(const Nerve& nv, int m, std::size_t g) { return nv.vertex(m, g, 0); }
int tgt_vertex(const Nerve& nv, int m, std::size_t g) { return nv.vertex(m, g, m); }

using Ops = std::vector<std::vector<std::vector<Mat>>>;

Ops zero_ops(const Nerve& nv, const GradedBundle& s, const GradedBundle& t, int max_m, int shift) {
    Ops ops(max_m + 1);
    for (int m = 0; m <= max_m; ++m) {
        ops[m].resize(nv.size(m));
        for (std::size_t g = 0; g < nv.size(m); ++g) {
            const int x0 = src_vertex(nv, m, g), xm = tgt_vertex(nv, m, g);
            for (int k = 0; k <= s.top(); ++k) ops[m][g].emplace_back(t.dim(xm, k + m + shift), s.dim(x0, k));
        }
    }
    return ops;
}

Mat get_block(const Nerve& nv, const Ops& ops, const GradedBundle& s, const GradedBundle& t, int m, std::size_t g, int k,
              int shift) {
    if (m < static_cast<int>(ops.size()) && k >= 0 && k <= s.top()) return ops[m][g][k];
    return Mat(t.dim(tgt_vertex(nv, m, g), k + m + shift), s.dim(src_vertex(nv, m, g), k));
}

void put_block(const Ops& ops_c, Ops& ops, int m, std::size_t g, int k, const Mat& b, const char* who) {
    if (m >= static_cast<int>(ops_c.size())) {
        if (!b.is_zero()) throw RuthError(std::string(who) + ": operator level beyond the degree range must vanish");
        return;
    }
    Mat& slot = ops[m][g].at(k);
    if (slot.rows() != b.rows() || slot.cols() != b.cols())
        throw RuthError(std::string(who) + ": block shape " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                        " does not match " + std::to_string(slot.rows()) + "x" + std::to_string(slot.cols()));
    slot = b;
}

Mat total_of(const Nerve& nv, const Ops& ops, const GradedBundle& s, const GradedBundle& t, int m, std::size_t g, int shift) {
    const int x0 = src_vertex(nv, m, g), xm = tgt_vertex(nv, m, g);
    Mat out(t.total(xm), s.total(x0));
    if (m >= static_cast<int>(ops.size())) return out;
    for (int k = 0; k <= s.top(); ++k) {
        const int tk = k + m + shift;
        if (tk < 0 || tk > t.top()) continue;
        out.set_block(t.offset(xm, tk), s.offset(x0, k), ops[m][g][k]);
    }
    return out;
}

// Totals for every stored level, indexed [m][g].
std::vector<std::vector<Mat>> all_totals(const Ruth& r) {
    std::vector<std::vector<Mat>> t(r.max_op() + 1);
    for (int m = 0; m <= r.max_op(); ++m)
        for (std::size_t g = 0; g < r.nerve->size(m); ++g) t[m].push_back(r.total(m, g));
    return t;
}

std::vector<std::vector<Mat>> all_totals(const RuthMorphism& p) {
    std::vector<std::vector<Mat>> t(p.max_op() + 1);
    for (int m = 0; m <= p.max_op(); ++m)
        for (std::size_t g = 0; g < p.src->nerve->size(m); ++g) t[m].push_back(p.total(m, g));
    return t;
}

// Lazily shaped access to a table of totals; zero above the stored levels.
struct Totals {
    const Nerve& nv;
    const std::vector<std::vector<Mat>>& t;
    const GradedBundle& s;
    const GradedBundle& u;
    Mat operator()(int m, std::size_t g) const {
        if (m < static_cast<int>(t.size())) return t[m][g];
        return Mat(u.total(tgt_vertex(nv, m, g)), s.total(src_vertex(nv, m, g)));
    }
    bool zero_level(int m) const { return m >= static_cast<int>(t.size()); }
};

nlohmann::json simplex_json(const Nerve& nv, int m, std::size_t g) {
    const auto& G = nv.groupoid();
    const Simplex& s = nv.simplex(m, g);
    nlohmann::json a = nlohmann::json::array();
    for (int id : s.arrows) a.push_back(G.arrow(id).name);
    return {{"level", m}, {"index", g}, {"object", G.object_name(s.x0)}, {"arrows", a}};
}

std::size_t parse_simplex(const Nerve& nv, int m, const nlohmann::json& op) {
    const auto& G = nv.groupoid();
    if (op.contains("simplex")) {
        auto idx = op.at("simplex").get<std::size_t>();
        if (idx >= nv.size(m)) throw RuthError("operator: simplex index out of range");
        return idx;
    }
    if (m == 0) return static_cast<std::size_t>(G.object_id(op.at("object").get<std::string>()));
    Simplex s;
    for (const auto& n : op.at("arrows")) s.arrows.push_back(G.arrow_id(n.get<std::string>()));
    if (s.level() != m) throw RuthError("operator: arrow list length must equal m");
    s.x0 = G.src(s.arrows[0]);
    for (int i = 1; i < m; ++i)
        if (G.src(s.arrows[i]) != G.tgt(s.arrows[i - 1])) throw RuthError("operator: arrows are not composable");
    return nv.index(s);
}

void ops_from_json(const nlohmann::json& list, const Nerve& nv, const GradedBundle& s, const GradedBundle& t, int shift,
                   const std::function<void(int, std::size_t, int, const Mat&)>& put) {
    for (const auto& op : list) {
        const int m = op.at("m").get<int>();
        const int k = op.at("degree").get<int>();
        if (m < 0 || m > Nerve::kMaxLevel) throw RuthError("operator: level m out of range");
        if (k < 0 || k > s.top()) throw RuthError("operator: source degree out of range");
        const std::size_t g = parse_simplex(nv, m, op);
        const int rows = t.dim(tgt_vertex(nv, m, g), k + m + shift), cols = s.dim(src_vertex(nv, m, g), k);
        put(m, g, k, mat_from_json(op.at("matrix"), rows, cols));
    }
}

nlohmann::json ops_to_json(const Nerve& nv, const Ops& ops) {
    nlohmann::json list = nlohmann::json::array();
    for (int m = 0; m < static_cast<int>(ops.size()); ++m)
        for (std::size_t g = 0; g < ops[m].size(); ++g)
            for (int k = 0; k < static_cast<int>(ops[m][g].size()); ++k) {
                const Mat& b = ops[m][g][k];
                if (b.empty() || b.is_zero()) continue;
                nlohmann::json op = {{"m", m}, {"simplex", g}, {"degree", k}, {"matrix", to_json(b)}};
                auto sj = simplex_json(nv, m, g);
                if (m == 0)
                    op["object"] = sj["object"];
                else
                    op["arrows"] = sj["arrows"];
                list.push_back(op);
            }
    return list;
}

GradedBundle bundle_from_json(const nlohmann::json& d, std::shared_ptr<const FinGroupoid> G) {
    std::vector<std::vector<int>> dims(G->num_objects());
    if (d.is_object()) {
        for (auto it = d.begin(); it != d.end(); ++it) dims[G->object_id(it.key())] = it.value().get<std::vector<int>>();
    } else {
        if (d.size() != dims.size()) throw RuthError("dims: one row per object expected");
        for (std::size_t x = 0; x < d.size(); ++x) dims[x] = d[x].get<std::vector<int>>();
    }
    return {G, dims};
}

}  // namespace

Ruth::Ruth(std::shared_ptr<const Nerve> nv, GradedBundle e, int cap) : nerve(std::move(nv)), E(std::move(e)) {
    if (E.top() < 0) throw RuthError("graded bundle has no degrees");
    mcap = cap < 0 ? 2 * E.top() + 2 : cap;
    if (mcap > Nerve::kMaxLevel) throw RuthError("mcap beyond the supported nerve level");
    ops = zero_ops(*nerve, E, E, max_op(), -1);
    for (int x = 0; x < groupoid().num_objects(); ++x)
        for (int k = 0; k <= top(); ++k) ops[1][nerve->unit_simplex(1, x)][k] = Mat::identity(E.dim(x, k));
}

Mat Ruth::block(int m, std::size_t g, int k) const { return get_block(*nerve, ops, E, E, m, g, k, -1); }

void Ruth::set_block(int m, std::size_t g, int k, const Mat& b) { put_block(ops, ops, m, g, k, b, "Ruth::set_block"); }

Mat Ruth::total(int m, std::size_t g) const { return total_of(*nerve, ops, E, E, m, g, -1); }

RuthMorphism::RuthMorphism(std::shared_ptr<const Ruth> s, std::shared_ptr<const Ruth> t) : src(std::move(s)), tgt(std::move(t)) {
    if (src->nerve.get() != tgt->nerve.get() && src->groupoid().num_arrows() != tgt->groupoid().num_arrows())
        throw RuthError("morphism: source and target live over different groupoids");
    ops = zero_ops(*src->nerve, src->E, tgt->E, max_op(), 0);
}

Mat RuthMorphism::block(int m, std::size_t g, int k) const { return get_block(*src->nerve, ops, src->E, tgt->E, m, g, k, 0); }

void RuthMorphism::set_block(int m, std::size_t g, int k, const Mat& b) {
    put_block(ops, ops, m, g, k, b, "RuthMorphism::set_block");
}

Mat RuthMorphism::total(int m, std::size_t g) const { return total_of(*src->nerve, ops, src->E, tgt->E, m, g, 0); }

Ruth ruth_from_json(const nlohmann::json& doc) {
    try {
        auto G = std::make_shared<const FinGroupoid>(groupoid_from_json(doc.at("groupoid")));
        auto nv = std::make_shared<const Nerve>(G);
        GradedBundle E = bundle_from_json(doc.at("dims"), G);
        Ruth r(nv, E, doc.value("mcap", -1));
        if (doc.contains("operators"))
            ops_from_json(doc.at("operators"), *nv, E, E, -1,
                          [&](int m, std::size_t g, int k, const Mat& b) { r.set_block(m, g, k, b); });
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw RuthError(std::string("ruth document: ") + e.what());
    }
}

nlohmann::json ruth_to_json(const Ruth& r) {
    return {{"kind", "ruth"},
            {"groupoid", groupoid_to_json(r.groupoid())},
            {"dims", bundle_to_json(r.E)},
            {"mcap", r.mcap},
            {"operators", ops_to_json(*r.nerve, r.ops)}};
}

RuthMorphism morphism_from_json(const nlohmann::json& doc, std::shared_ptr<const Ruth> src, std::shared_ptr<const Ruth> tgt) {
    try {
        RuthMorphism p(src, tgt);
        ops_from_json(doc.at("operators"), *src->nerve, src->E, tgt->E, 0,
                      [&](int m, std::size_t g, int k, const Mat& b) { p.set_block(m, g, k, b); });
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw RuthError(std::string("morphism document: ") + e.what());
    }
}

nlohmann::json morphism_to_json(const RuthMorphism& p) {
    return {{"kind", "ruth_morphism"}, {"operators", ops_to_json(*p.src->nerve, p.ops)}};
}

Report check_rh1(const Ruth& r) {
    Report rep;
    const Nerve& nv = *r.nerve;
    for (int x = 0; x < r.groupoid().num_objects(); ++x) {
        const std::size_t u = nv.unit_simplex(1, x);
        rep.record("R_1 at units is the identity", r.total(1, u).is_identity(),
                   [&] { return nlohmann::json{{"simplex", simplex_json(nv, 1, u)}, {"R_1", to_json(r.total(1, u))}}; });
    }
    for (int m = 2; m <= r.mcap; ++m) {
        if (m > r.max_op()) break;
        for (std::size_t g = 0; g < nv.size(m); ++g) {
            if (!nv.is_degenerate(m, g)) continue;
            Mat t = r.total(m, g);
            rep.record("R_m vanishes on degenerate simplices", t.is_zero(),
                       [&] { return nlohmann::json{{"simplex", simplex_json(nv, m, g)}, {"R_m", to_json(t)}}; });
        }
    }
    return rep;
}

Report check_rh2(const Ruth& r) {
    Report rep;
    const Nerve& nv = *r.nerve;
    auto table = all_totals(r);
    Totals T{nv, table, r.E, r.E};
    for (int m = 0; m <= r.mcap; ++m)
        for (std::size_t g = 0; g < nv.size(m); ++g) {
            const int x0 = nv.vertex(m, g, 0), xm = nv.vertex(m, g, m);
            Mat lhs(r.E.total(xm), r.E.total(x0)), rhs = lhs;
            if (!T.zero_level(m - 1))
                for (int i = 1; i < m; ++i) lhs.add_block(0, 0, T(m - 1, nv.face(m, i, g)), i % 2 ? -1 : 1);
            for (int q = 0; q <= m; ++q) {
                if (T.zero_level(q) || T.zero_level(m - q)) continue;
                const std::size_t s = nv.restrict(m, g, sigma(q, m)), t = nv.restrict(m, g, tau(m - q, m));
                rhs.add_block(0, 0, T(m - q, t) * T(q, s), q % 2 ? -1 : 1);
            }
            rep.record("RH2 at level " + std::to_string(m), lhs == rhs, [&] {
                return nlohmann::json{{"simplex", simplex_json(nv, m, g)}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}};
            });
        }
    return rep;
}

Report validate(const Ruth& r) {
    Report rep = check_rh1(r);
    rep.merge(check_rh2(r));
    return rep;
}

Report check_morphism(const RuthMorphism& p, int mcap) {
    Report rep;
    const Ruth& R = *p.src;
    const Ruth& R2 = *p.tgt;
    const Nerve& nv = *R.nerve;
    if (mcap < 0) mcap = std::max(R.mcap, R2.mcap);
    auto tr = all_totals(R), tr2 = all_totals(R2), tp = all_totals(p);
    Totals TR{nv, tr, R.E, R.E}, TR2{nv, tr2, R2.E, R2.E}, TP{nv, tp, R.E, R2.E};
    for (int m = 1; m <= std::min(mcap, p.max_op()); ++m)
        for (std::size_t g = 0; g < nv.size(m); ++g) {
            if (!nv.is_degenerate(m, g)) continue;
            rep.record("RH3: psi_m vanishes on degenerate simplices", tp[m][g].is_zero(),
                       [&] { return nlohmann::json{{"simplex", simplex_json(nv, m, g)}, {"psi_m", to_json(tp[m][g])}}; });
        }
    for (int m = 0; m <= mcap; ++m)
        for (std::size_t g = 0; g < nv.size(m); ++g) {
            const int x0 = nv.vertex(m, g, 0), xm = nv.vertex(m, g, m);
            Mat lhs(R2.E.total(xm), R.E.total(x0)), rhs = lhs;
            const int sm = m % 2 ? -1 : 1;
            for (int q = 0; q <= m; ++q) {
                const std::size_t s = nv.restrict(m, g, sigma(q, m)), t = nv.restrict(m, g, tau(m - q, m));
                if (!TR2.zero_level(m - q) && !TP.zero_level(q)) lhs.add_block(0, 0, TR2(m - q, t) * TP(q, s), sm);
                if (!TP.zero_level(m - q) && !TR.zero_level(q)) rhs.add_block(0, 0, TP(m - q, t) * TR(q, s), q % 2 ? -1 : 1);
            }
            if (!TP.zero_level(m - 1))
                for (int i = 1; i < m; ++i) lhs.add_block(0, 0, TP(m - 1, nv.face(m, i, g)), i % 2 ? -1 : 1);
            rep.record("RH4 at level " + std::to_string(m), lhs == rhs, [&] {
                return nlohmann::json{{"simplex", simplex_json(nv, m, g)}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}};
            });
        }
    return rep;
}

RuthMorphism identity_morphism(std::shared_ptr<const Ruth> r) {
    RuthMorphism p(r, r);
    for (int x = 0; x < r->groupoid().num_objects(); ++x)
        for (int k = 0; k <= r->top(); ++k) p.set_block(0, static_cast<std::size_t>(x), k, Mat::identity(r->E.dim(x, k)));
    return p;
}

RuthMorphism compose(const RuthMorphism& b, const RuthMorphism& a) {
    if (a.tgt->E.dims != b.src->E.dims) throw RuthError("compose: middle bundles differ");
    RuthMorphism out(a.src, b.tgt);
    const Nerve& nv = *a.src->nerve;
    for (int m = 0; m <= out.max_op(); ++m)
        for (std::size_t g = 0; g < nv.size(m); ++g)
            for (int k = 0; k <= a.src->top(); ++k) {
                if (k + m > out.tgt->top()) continue;
                Mat acc = out.block(m, g, k);
                for (int q = 0; q <= m; ++q) {
                    const std::size_t s = nv.restrict(m, g, sigma(q, m)), t = nv.restrict(m, g, tau(m - q, m));
                    acc += b.block(m - q, t, k + q) * a.block(q, s, k);
                }
                out.set_block(m, g, k, acc);
            }
    return out;
}

Ruth gauge_transport(const Ruth& r, const std::vector<std::vector<std::vector<Mat>>>& psi_ops) {
    auto rp = std::make_shared<const Ruth>(r);
    RuthMorphism psi(rp, rp);
    for (int m = 1; m <= psi.max_op() && m < static_cast<int>(psi_ops.size()); ++m)
        for (std::size_t g = 0; g < psi_ops[m].size(); ++g)
            for (int k = 0; k < static_cast<int>(psi_ops[m][g].size()); ++k) psi.set_block(m, g, k, psi_ops[m][g][k]);
    for (int x = 0; x < r.groupoid().num_objects(); ++x)
        for (int k = 0; k <= r.top(); ++k) psi.set_block(0, static_cast<std::size_t>(x), k, Mat::identity(r.E.dim(x, k)));

    const Nerve& nv = *r.nerve;
    Ruth out(r.nerve, r.E, r.mcap);
    auto tr = all_totals(r), tp = all_totals(psi);
    Totals TR{nv, tr, r.E, r.E}, TP{nv, tp, r.E, r.E};
    std::vector<std::vector<Mat>> tout(out.max_op() + 1);
    for (int m = 0; m <= out.max_op(); ++m) {
        for (std::size_t g = 0; g < nv.size(m); ++g) {
            const int x0 = nv.vertex(m, g, 0), xm = nv.vertex(m, g, m);
            Mat rhs(r.E.total(xm), r.E.total(x0)), rest = rhs;
            for (int q = 0; q <= m; ++q) {
                const std::size_t s = nv.restrict(m, g, sigma(q, m)), t = nv.restrict(m, g, tau(m - q, m));
                if (!TP.zero_level(m - q) && !TR.zero_level(q)) rhs.add_block(0, 0, TP(m - q, t) * TR(q, s), q % 2 ? -1 : 1);
                if (q >= 1 && !TP.zero_level(q)) rest.add_block(0, 0, tout[m - q][t] * TP(q, s));
            }
            Mat faces(rhs.rows(), rhs.cols());
            if (!TP.zero_level(m - 1))
                for (int i = 1; i < m; ++i) faces.add_block(0, 0, TP(m - 1, nv.face(m, i, g)), i % 2 ? -1 : 1);
            // (-1)^m R'_m = rhs - (-1)^m rest - faces
            const int sm = m % 2 ? -1 : 1;
            Mat val = (rhs - faces).scaled(sm) - rest;
            tout[m].push_back(val);
            for (int k = 0; k <= r.top(); ++k) {
                const int tk = k + m - 1;
                if (tk < 0 || tk > r.top()) continue;
                out.set_block(m, g, k, val.block(r.E.offset(xm, tk), r.E.offset(x0, k), r.E.dim(xm, tk), r.E.dim(x0, k)));
            }
        }
    }
    return out;
}

HomologyDims cycles_borders(const Ruth& r, int x) {
    HomologyDims h;
    const int N = r.top();
    for (int k = 0; k <= N; ++k) {
        const int dim = r.E.dim(x, k);
        const int z = k == 0 ? dim : dim - rank(r.block(0, static_cast<std::size_t>(x), k));
        const int b = k == N ? 0 : rank(r.block(0, static_cast<std::size_t>(x), k + 1));
        h.z.push_back(z);
        h.b.push_back(b);
        h.h.push_back(z - b);
    }
    return h;
}

Ruth representation(std::shared_ptr<const Nerve> nerve, const std::vector<int>& dims, const std::vector<Mat>& arrow_mats) {
    const auto& G = nerve->groupoid();
    if (static_cast<int>(arrow_mats.size()) != G.num_arrows()) throw RuthError("representation: one matrix per arrow expected");
    std::vector<std::vector<int>> d;
    for (int v : dims) d.push_back({v});
    Ruth r(nerve, GradedBundle(nerve->groupoid_ptr(), d));
    for (std::size_t g = 0; g < nerve->size(1); ++g) r.set_block(1, g, 0, arrow_mats[nerve->simplex(1, g).arrows[0]]);
    return r;
}

Ruth chain_complexes(std::shared_ptr<const Nerve> nerve, const std::vector<ChainComplex>& ys) {
    const auto& G = nerve->groupoid();
    if (static_cast<int>(ys.size()) != G.num_objects()) throw RuthError("chain_complexes: one complex per object expected");
    for (int a = 0; a < G.num_arrows(); ++a)
        if (!G.is_unit(a)) throw RuthError("chain_complexes: the base must be a unit groupoid");
    int top = 0;
    for (const auto& y : ys) top = std::max(top, y.top());
    std::vector<std::vector<int>> d;
    for (const auto& y : ys) {
        std::vector<int> row(top + 1, 0);
        for (int k = 0; k <= y.top(); ++k) row[k] = y.dims[k];
        d.push_back(row);
    }
    Ruth r(nerve, GradedBundle(nerve->groupoid_ptr(), d));
    for (int x = 0; x < G.num_objects(); ++x)
        for (int k = 1; k <= top; ++k) r.set_block(0, static_cast<std::size_t>(x), k, ys[x].boundary(k));
    return r;
}

Ruth conjugated_complex(std::shared_ptr<const Nerve> nerve, const ChainComplex& model, const std::vector<Mat>& frames,
                        const std::vector<int>& parity) {
    const auto& G = nerve->groupoid();
    if (static_cast<int>(frames.size()) != G.num_objects()) throw RuthError("conjugated_complex: one frame per object expected");
    const int N = model.top();
    std::vector<int> off(N + 2, 0);
    for (int k = 0; k <= N; ++k) off[k + 1] = off[k] + model.dims[k];
    std::vector<std::vector<int>> d(G.num_objects(), model.dims);
    Ruth r(nerve, GradedBundle(nerve->groupoid_ptr(), d));
    // Frames are block diagonal by degree; only the diagonal blocks are read.
    auto fb = [&](int x, int k) { return frames[x].block(off[k], off[k], model.dims[k], model.dims[k]); };
    for (int x = 0; x < G.num_objects(); ++x)
        for (int k = 1; k <= N; ++k)
            r.set_block(0, static_cast<std::size_t>(x), k, inverse(fb(x, k - 1)) * model.boundary(k) * fb(x, k));
    for (std::size_t g = 0; g < nerve->size(1); ++g) {
        const int a = nerve->simplex(1, g).arrows[0];
        const int s = !parity.empty() && parity[a] % 2 ? -1 : 1;
        for (int k = 0; k <= N; ++k) r.set_block(1, g, k, (inverse(fb(G.tgt(a), k)) * fb(G.src(a), k)).scaled(s));
    }
    return r;
}

std::vector<std::vector<std::vector<Mat>>> random_gauge(const Ruth& r, std::mt19937& rng, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    const Nerve& nv = *r.nerve;
    std::vector<std::vector<std::vector<Mat>>> ops(r.top() + 1);
    for (int m = 1; m <= r.top(); ++m) {
        ops[m].resize(nv.size(m));
        for (std::size_t g = 0; g < nv.size(m); ++g) {
            const int x0 = nv.vertex(m, g, 0), xm = nv.vertex(m, g, m);
            for (int k = 0; k <= r.top(); ++k) {
                Mat b(r.E.dim(xm, k + m), r.E.dim(x0, k));
                if (!nv.is_degenerate(m, g))
                    for (int i = 0; i < b.rows(); ++i)
                        for (int j = 0; j < b.cols(); ++j) b(i, j) = dist(rng);
                ops[m][g].push_back(b);
            }
        }
    }
    return ops;
}

Grothendieck grothendieck(std::shared_ptr<const Ruth> r) {
    if (r->top() > 1) throw RuthError("grothendieck: order at most 1 required");
    return {std::move(r)};
}

namespace {

std::size_t pair_index(const Nerve& nv, std::size_t g2, std::size_t g1) {
    return nv.index(Simplex{nv.simplex(1, g1).x0, {nv.simplex(1, g1).arrows[0], nv.simplex(1, g2).arrows[0]}});
}

}  // namespace

Vec Grothendieck::target(std::size_t g, const Vec& c, const Vec& e) const {
    const int y = r->nerve->vertex(1, g, 1);
    Vec out = r->block(1, g, 0).apply(e);
    if (r->top() >= 1) {
        Vec rc = r->block(0, static_cast<std::size_t>(y), 1).apply(c);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += rc[i];
    }
    return out;
}

Vec Grothendieck::multiply_c(std::size_t g2, const Vec& c2, std::size_t g1, const Vec& c1, const Vec& e1) const {
    Vec out = c2;
    if (r->top() < 1) return out;
    Vec a = r->block(1, g2, 1).apply(c1);
    Vec b = r->block(2, pair_index(*r->nerve, g2, g1), 0).apply(e1);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += a[i] + b[i];
    return out;
}

Vec Grothendieck::inverse_c(std::size_t g, const Vec& c, const Vec& e) const {
    if (r->top() < 1) return {};
    const auto& G = r->groupoid();
    const Nerve& nv = *r->nerve;
    const int ginv = G.inv(nv.simplex(1, g).arrows[0]);
    const std::size_t gi = nv.index(Simplex{G.src(ginv), {ginv}});
    Vec a = r->block(1, gi, 1).apply(c);
    Vec b = r->block(2, pair_index(nv, gi, g), 0).apply(e);
    Vec out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = -a[i] - b[i];
    return out;
}

}  // namespace hvb
