#include "hvb/groupoid.hpp"

#include <regex>
#include <sstream>

namespace hvb {

FinGroupoid::FinGroupoid(std::string name, std::vector<std::string> objects, std::vector<Arrow> arrows,
                         std::vector<int> units, std::vector<int> inverses, std::vector<int> table)
    : name_(std::move(name)),
      objects_(std::move(objects)),
      arrows_(std::move(arrows)),
      units_(std::move(units)),
      inv_(std::move(inverses)),
      table_(std::move(table)) {
    validate();
}

void FinGroupoid::validate() const {
    const int O = num_objects(), A = num_arrows();
    auto fail = [](const std::string& m) { throw GroupoidAxiomError(m); };
    if (static_cast<int>(units_.size()) != O) fail("units: one per object required");
    if (static_cast<int>(inv_.size()) != A) fail("inverses: one per arrow required");
    if (table_.size() != static_cast<std::size_t>(A) * A) fail("composition table has wrong size");
    for (int a = 0; a < A; ++a)
        if (src(a) < 0 || src(a) >= O || tgt(a) < 0 || tgt(a) >= O) fail("arrow " + arrows_[a].name + ": bad endpoint");
    for (int x = 0; x < O; ++x) {
        int u = units_[x];
        if (u < 0 || u >= A || src(u) != x || tgt(u) != x) fail("unit of " + objects_[x] + " is not a loop at it");
    }
    for (int g2 = 0; g2 < A; ++g2)
        for (int g1 = 0; g1 < A; ++g1) {
            int c = comp(g2, g1);
            bool composable = tgt(g1) == src(g2);
            if (!composable && c != -1) fail("composition defined for non-composable " + arrows_[g2].name + "*" + arrows_[g1].name);
            if (!composable) continue;
            if (c < 0 || c >= A) fail("composition missing for " + arrows_[g2].name + "*" + arrows_[g1].name);
            if (src(c) != src(g1) || tgt(c) != tgt(g2))
                fail("composite " + arrows_[g2].name + "*" + arrows_[g1].name + " has wrong endpoints");
        }
    for (int a = 0; a < A; ++a) {
        if (comp(a, units_[src(a)]) != a || comp(units_[tgt(a)], a) != a) fail("unit law fails at " + arrows_[a].name);
        int b = inv_[a];
        if (b < 0 || b >= A || src(b) != tgt(a) || tgt(b) != src(a)) fail("inverse of " + arrows_[a].name + " has wrong endpoints");
        if (comp(b, a) != units_[src(a)] || comp(a, b) != units_[tgt(a)]) fail("inverse law fails at " + arrows_[a].name);
    }
    for (int h = 0; h < A; ++h)
        for (int g = 0; g < A; ++g) {
            if (tgt(g) != src(h)) continue;
            int hg = comp(h, g);
            for (int f = 0; f < A; ++f) {
                if (tgt(f) != src(g)) continue;
                if (comp(hg, f) != comp(h, comp(g, f)))
                    fail("associativity fails at (" + arrows_[h].name + "," + arrows_[g].name + "," + arrows_[f].name + ")");
            }
        }
}

int FinGroupoid::object_id(const std::string& n) const {
    for (int x = 0; x < num_objects(); ++x)
        if (objects_[x] == n) return x;
    throw GroupoidError("unknown object '" + n + "'");
}

int FinGroupoid::arrow_id(const std::string& n) const {
    for (int a = 0; a < num_arrows(); ++a)
        if (arrows_[a].name == n) return a;
    throw GroupoidError("unknown arrow '" + n + "'");
}

namespace {

std::vector<std::string> point_names(int k) {
    static const char* letters = "xyzwuvabcdefgh";
    std::vector<std::string> v;
    for (int i = 0; i < k; ++i) v.push_back(k <= 14 ? std::string(1, letters[i]) : "p" + std::to_string(i));
    return v;
}

}  // namespace

FinGroupoid unit_groupoid(int k) {
    if (k < 1) throw GroupoidError("unit groupoid needs at least one object");
    std::vector<Arrow> arrows;
    std::vector<int> units(k), table(static_cast<std::size_t>(k) * k, -1);
    auto names = point_names(k);
    for (int x = 0; x < k; ++x) {
        arrows.push_back({"1" + names[x], x, x});
        units[x] = x;
        table[static_cast<std::size_t>(x) * k + x] = x;
    }
    return {"unit(" + std::to_string(k) + ")", names, arrows, units, units, table};
}

FinGroupoid pair_groupoid(int k) {
    if (k < 1) throw GroupoidError("pair groupoid needs at least one object");
    // Arrow tgt*k + src goes src -> tgt.
    const int A = k * k;
    auto names = point_names(k);
    std::vector<Arrow> arrows(A);
    std::vector<int> units(k), inv(A), table(static_cast<std::size_t>(A) * A, -1);
    for (int t = 0; t < k; ++t)
        for (int s = 0; s < k; ++s) {
            int a = t * k + s;
            arrows[a] = {names[t] + names[s], s, t};
            inv[a] = s * k + t;
        }
    for (int x = 0; x < k; ++x) units[x] = x * k + x;
    for (int g2 = 0; g2 < A; ++g2)
        for (int g1 = 0; g1 < A; ++g1)
            if (g1 / k == g2 % k) table[static_cast<std::size_t>(g2) * A + g1] = (g2 / k) * k + g1 % k;
    return {"pair(" + std::to_string(k) + ")", names, arrows, units, inv, table};
}

FinGroupoid cyclic_group(int m) {
    if (m < 1) throw GroupoidError("cyclic group needs positive order");
    std::vector<Arrow> arrows(m);
    std::vector<int> inv(m), table(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a) {
        arrows[a] = {"r" + std::to_string(a), 0, 0};
        inv[a] = (m - a) % m;
        for (int b = 0; b < m; ++b) table[static_cast<std::size_t>(a) * m + b] = (a + b) % m;
    }
    return {"Z(" + std::to_string(m) + ")", {"*"}, arrows, {0}, inv, table};
}

FinGroupoid product(const FinGroupoid& a, const FinGroupoid& b) {
    const int Oa = a.num_objects(), Ob = b.num_objects(), Aa = a.num_arrows(), Ab = b.num_arrows();
    std::vector<std::string> objs;
    for (int x = 0; x < Oa; ++x)
        for (int y = 0; y < Ob; ++y) objs.push_back("(" + a.object_name(x) + "," + b.object_name(y) + ")");
    std::vector<Arrow> arrows;
    std::vector<int> inv, units(Oa * Ob), table(static_cast<std::size_t>(Aa * Ab) * Aa * Ab, -1);
    for (int f = 0; f < Aa; ++f)
        for (int g = 0; g < Ab; ++g) {
            arrows.push_back({"(" + a.arrow(f).name + "," + b.arrow(g).name + ")", a.src(f) * Ob + b.src(g), a.tgt(f) * Ob + b.tgt(g)});
            inv.push_back(a.inv(f) * Ab + b.inv(g));
        }
    for (int x = 0; x < Oa; ++x)
        for (int y = 0; y < Ob; ++y) units[x * Ob + y] = a.unit(x) * Ab + b.unit(y);
    const int A = Aa * Ab;
    for (int p = 0; p < A; ++p)
        for (int q = 0; q < A; ++q) {
            int f = a.comp(p / Ab, q / Ab), g = b.comp(p % Ab, q % Ab);
            if (f >= 0 && g >= 0) table[static_cast<std::size_t>(p) * A + q] = f * Ab + g;
        }
    return {a.name() + "*" + b.name(), objs, arrows, units, inv, table};
}

FinGroupoid builtin_groupoid(const std::string& desc) {
    auto star = desc.find('*');
    if (star != std::string::npos) return product(builtin_groupoid(desc.substr(0, star)), builtin_groupoid(desc.substr(star + 1)));
    static const std::regex re(R"(\s*(unit|pair|Z)\((\d+)\)\s*)");
    std::smatch m;
    if (!std::regex_match(desc, m, re)) throw GroupoidError("unknown builtin groupoid '" + desc + "'");
    int k = std::stoi(m[2]);
    if (k > 64) throw GroupoidError("builtin groupoid too large: '" + desc + "'");
    if (m[1] == "unit") return unit_groupoid(k);
    if (m[1] == "pair") return pair_groupoid(k);
    return cyclic_group(k);
}

std::vector<std::string> builtin_examples() { return {"unit(1)", "unit(2)", "pair(2)", "pair(3)", "Z(2)", "Z(3)", "pair(2)*Z(2)"}; }

FinGroupoid groupoid_from_json(const nlohmann::json& doc) {
    if (doc.is_string()) return builtin_groupoid(doc.get<std::string>());
    if (doc.contains("builtin")) return builtin_groupoid(doc.at("builtin").get<std::string>());
    try {
        std::vector<std::string> objects = doc.at("objects").get<std::vector<std::string>>();
        auto obj = [&](const std::string& n) {
            for (std::size_t i = 0; i < objects.size(); ++i)
                if (objects[i] == n) return static_cast<int>(i);
            throw GroupoidError("arrows: unknown object '" + n + "'");
        };
        std::vector<Arrow> arrows;
        for (const auto& a : doc.at("arrows")) arrows.push_back({a.at("name").get<std::string>(), obj(a.at("src")), obj(a.at("tgt"))});
        auto arr = [&](const std::string& n) {
            for (std::size_t i = 0; i < arrows.size(); ++i)
                if (arrows[i].name == n) return static_cast<int>(i);
            throw GroupoidError("unknown arrow '" + n + "'");
        };
        std::vector<int> units(objects.size(), -1), inv(arrows.size(), -1);
        for (const auto& [o, a] : doc.at("units").items()) units[obj(o)] = arr(a.get<std::string>());
        for (const auto& [a, b] : doc.at("inverses").items()) inv[arr(a)] = arr(b.get<std::string>());
        std::vector<int> table(arrows.size() * arrows.size(), -1);
        for (const auto& t : doc.at("composition")) {
            if (!t.is_array() || t.size() != 3) throw GroupoidError("composition: entries must be [g2, g1, g2g1]");
            table[arr(t[0]) * arrows.size() + arr(t[1])] = arr(t[2]);
        }
        return {doc.value("name", std::string("groupoid")), objects, arrows, units, inv, table};
    } catch (const nlohmann::json::exception& e) {
        throw GroupoidError(std::string("groupoid document: ") + e.what());
    }
}

nlohmann::json groupoid_to_json(const FinGroupoid& g) {
    nlohmann::json doc;
    doc["kind"] = "groupoid";
    doc["name"] = g.name();
    std::vector<std::string> objs;
    for (int x = 0; x < g.num_objects(); ++x) objs.push_back(g.object_name(x));
    doc["objects"] = objs;
    doc["arrows"] = nlohmann::json::array();
    doc["units"] = nlohmann::json::object();
    doc["inverses"] = nlohmann::json::object();
    doc["composition"] = nlohmann::json::array();
    for (int a = 0; a < g.num_arrows(); ++a) {
        doc["arrows"].push_back({{"name", g.arrow(a).name}, {"src", g.object_name(g.src(a))}, {"tgt", g.object_name(g.tgt(a))}});
        doc["inverses"][g.arrow(a).name] = g.arrow(g.inv(a)).name;
    }
    for (int x = 0; x < g.num_objects(); ++x) doc["units"][g.object_name(x)] = g.arrow(g.unit(x)).name;
    for (int p = 0; p < g.num_arrows(); ++p)
        for (int q = 0; q < g.num_arrows(); ++q)
            if (g.comp(p, q) >= 0) doc["composition"].push_back({g.arrow(p).name, g.arrow(q).name, g.arrow(g.comp(p, q)).name});
    return doc;
}

Nerve::Nerve(std::shared_ptr<const FinGroupoid> g) : g_(std::move(g)) {}

std::uint64_t Nerve::key(const Simplex& s) const {
    if (s.arrows.empty()) return static_cast<std::uint64_t>(s.x0);
    std::uint64_t k = 0;
    for (int a : s.arrows) k = k * g_->num_arrows() + a;
    return k;
}

void Nerve::ensure(int n) const {
    if (n < 0 || n > kMaxLevel) throw std::out_of_range("nerve level out of range");
    std::lock_guard<std::mutex> lock(mu_);
    for (int m = built_.load(std::memory_order_relaxed) + 1; m <= n; ++m) {
        build(m);
        built_.store(m, std::memory_order_release);
    }
}

void Nerve::build(int n) const {
    const FinGroupoid& G = *g_;
    Level& L = levels_[n];
    double total = 1;
    for (int i = 0; i <= n; ++i) total *= G.num_arrows();
    if (total > 1.8e19) throw std::out_of_range("nerve level too large to index");
    if (n == 0) {
        for (int x = 0; x < G.num_objects(); ++x) L.simplices.push_back({x, {}});
    } else {
        // Extend each (n-1)-chain lexicographically by a last arrow.
        std::vector<std::vector<int>> out_of(G.num_objects());
        for (int a = 0; a < G.num_arrows(); ++a) out_of[G.src(a)].push_back(a);
        if (n == 1) {
            for (int a = 0; a < G.num_arrows(); ++a) L.simplices.push_back({G.src(a), {a}});
        } else {
            for (const auto& s : levels_[n - 1].simplices)
                for (int a : out_of[G.tgt(s.arrows.back())]) {
                    Simplex t = s;
                    t.arrows.push_back(a);
                    L.simplices.push_back(std::move(t));
                }
        }
    }
    L.vertices.reserve(L.simplices.size() * (n + 1));
    for (std::size_t idx = 0; idx < L.simplices.size(); ++idx) {
        const Simplex& s = L.simplices[idx];
        L.vertices.push_back(s.x0);
        for (int a : s.arrows) L.vertices.push_back(G.tgt(a));
        L.lookup.emplace(key(s), idx);
    }
    if (n == 0) return;
    L.faces.assign(n + 1, std::vector<std::size_t>(L.simplices.size()));
    for (int i = 0; i <= n; ++i)
        for (std::size_t idx = 0; idx < L.simplices.size(); ++idx)
            L.faces[i][idx] = levels_[n - 1].lookup.at(key(restrict(L.simplices[idx], delta(n, i))));
    Level& P = levels_[n - 1];
    P.degens.assign(n, std::vector<std::size_t>(P.simplices.size()));
    for (int j = 0; j < n; ++j)
        for (std::size_t idx = 0; idx < P.simplices.size(); ++idx)
            P.degens[j][idx] = L.lookup.at(key(restrict(P.simplices[idx], upsilon(n - 1, j))));
}

std::size_t Nerve::index(const Simplex& s) const {
    const Level& L = level(s.level());
    auto it = L.lookup.find(key(s));
    if (it == L.lookup.end() || L.simplices[it->second] != s) throw std::invalid_argument("not a simplex of the nerve");
    return it->second;
}

std::size_t Nerve::degen(int n, int j, std::size_t idx) const {
    level(n + 1);
    return levels_[n].degens[j][idx];
}

bool Nerve::is_degenerate(int n, std::size_t idx) const {
    for (int a : simplex(n, idx).arrows)
        if (g_->is_unit(a)) return true;
    return false;
}

std::size_t Nerve::unit_simplex(int n, int x) const {
    Simplex s{x, std::vector<int>(n, g_->unit(x))};
    return index(s);
}

Simplex Nerve::restrict(const Simplex& s, const OrdMap& theta) const {
    if (theta.cod != s.level()) throw CompositionError("restrict: map codomain does not match simplex level");
    const FinGroupoid& G = *g_;
    auto vert = [&](int i) { return i == 0 ? s.x0 : G.tgt(s.arrows[i - 1]); };
    Simplex out{vert(theta(0)), {}};
    out.arrows.reserve(theta.dom);
    for (int t = 1; t <= theta.dom; ++t) {
        int a = theta(t - 1), b = theta(t);
        if (a == b) {
            out.arrows.push_back(G.unit(vert(a)));
            continue;
        }
        int c = s.arrows[a];
        for (int q = a + 1; q < b; ++q) c = G.comp(s.arrows[q], c);
        out.arrows.push_back(c);
    }
    return out;
}

std::size_t Nerve::restrict(int n, std::size_t idx, const OrdMap& theta) const {
    if (theta.cod != n) throw CompositionError("restrict: map codomain does not match simplex level");
    return index(restrict(simplex(n, idx), theta));
}

}  // namespace hvb
