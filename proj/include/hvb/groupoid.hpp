#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "hvb/ordmap.hpp"

namespace hvb {

class GroupoidError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Well-formed data that violates a groupoid axiom (unit, inverse, associativity, endpoints).
class GroupoidAxiomError : public GroupoidError {
public:
    using GroupoidError::GroupoidError;
};

struct Arrow {
    std::string name;
    int src = 0;
    int tgt = 0;
};

// Finite groupoid with a dense composition table.  comp(g2, g1) is g2 o g1,
// defined when tgt(g1) == src(g2).
class FinGroupoid {
public:
    FinGroupoid(std::string name, std::vector<std::string> objects, std::vector<Arrow> arrows, std::vector<int> units,
                std::vector<int> inverses, std::vector<int> table);

    const std::string& name() const { return name_; }
    int num_objects() const { return static_cast<int>(objects_.size()); }
    int num_arrows() const { return static_cast<int>(arrows_.size()); }
    const std::string& object_name(int x) const { return objects_[x]; }
    const Arrow& arrow(int a) const { return arrows_[a]; }
    int src(int a) const { return arrows_[a].src; }
    int tgt(int a) const { return arrows_[a].tgt; }
    int unit(int x) const { return units_[x]; }
    int inv(int a) const { return inv_[a]; }
    bool is_unit(int a) const { return units_[src(a)] == a; }
    // -1 when not composable.
    int comp(int g2, int g1) const { return table_[static_cast<std::size_t>(g2) * arrows_.size() + g1]; }

    int object_id(const std::string& name) const;
    int arrow_id(const std::string& name) const;

private:
    void validate() const;

    std::string name_;
    std::vector<std::string> objects_;
    std::vector<Arrow> arrows_;
    std::vector<int> units_, inv_, table_;
};

FinGroupoid unit_groupoid(int k);
FinGroupoid pair_groupoid(int k);
FinGroupoid cyclic_group(int m);
FinGroupoid product(const FinGroupoid& a, const FinGroupoid& b);
// Parses "unit(k)", "pair(k)", "Z(m)" and products "A*B".
FinGroupoid builtin_groupoid(const std::string& desc);
std::vector<std::string> builtin_examples();

// Document form: objects, arrows with src/tgt, units, inverses, composition triples.
// A plain string is read as a builtin name.
FinGroupoid groupoid_from_json(const nlohmann::json& doc);
nlohmann::json groupoid_to_json(const FinGroupoid& g);

// An n-simplex of the nerve: a chain x_0 -g_1-> x_1 -> ... -g_n-> x_n, stored
// as arrows[i-1] = g_i.  x0 is kept so that level 0 needs no special case.
struct Simplex {
    int x0 = 0;
    std::vector<int> arrows;

    int level() const { return static_cast<int>(arrows.size()); }
    bool operator==(const Simplex&) const = default;
};

// Nerve with memoized levels.  Level n lists composable chains in
// lexicographic order of (g_1, ..., g_n) by arrow id; level 0 lists objects.
// Levels are built under a lock and never modified afterwards.
class Nerve {
public:
    static constexpr int kMaxLevel = 15;

    explicit Nerve(std::shared_ptr<const FinGroupoid> g);
    explicit Nerve(const FinGroupoid& g) : Nerve(std::make_shared<const FinGroupoid>(g)) {}

    const FinGroupoid& groupoid() const { return *g_; }
    std::shared_ptr<const FinGroupoid> groupoid_ptr() const { return g_; }

    std::size_t size(int n) const { return level(n).simplices.size(); }
    const Simplex& simplex(int n, std::size_t idx) const { return level(n).simplices[idx]; }
    std::size_t index(const Simplex& s) const;

    int vertex(int n, std::size_t idx, int i) const { return level(n).vertices[idx * (n + 1) + i]; }
    std::size_t face(int n, int i, std::size_t idx) const { return level(n).faces[i][idx]; }
    std::size_t degen(int n, int j, std::size_t idx) const;
    bool is_degenerate(int n, std::size_t idx) const;
    std::size_t unit_simplex(int n, int x) const;

    Simplex restrict(const Simplex& s, const OrdMap& theta) const;
    std::size_t restrict(int n, std::size_t idx, const OrdMap& theta) const;

    void ensure(int n) const;

private:
    struct Level {
        std::vector<Simplex> simplices;
        std::vector<int> vertices;
        std::vector<std::vector<std::size_t>> faces;  // faces[i][idx], level n-1
        std::vector<std::vector<std::size_t>> degens;  // degens[j][idx], level n+1; filled when n+1 is built
        std::unordered_map<std::uint64_t, std::size_t> lookup;
    };

    const Level& level(int n) const {
        if (n > built_.load(std::memory_order_acquire)) ensure(n);
        return levels_[n];
    }
    std::uint64_t key(const Simplex& s) const;
    void build(int n) const;

    std::shared_ptr<const FinGroupoid> g_;
    mutable std::array<Level, kMaxLevel + 1> levels_;
    mutable std::atomic<int> built_{-1};
    mutable std::mutex mu_;
};

}  // namespace hvb
