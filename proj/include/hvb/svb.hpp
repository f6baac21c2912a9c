#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "hvb/doldkan.hpp"
#include "hvb/exactla.hpp"
#include "hvb/groupoid.hpp"
#include "hvb/report.hpp"
#include "hvb/ruth.hpp"

namespace hvb {

class BundleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Truncated simplicial vector bundle over a groupoid nerve, levels 0..L.
// face[n][i][g] : V_n^g -> V_{n-1}^{d_i g} and degen[n][j][g] : V_n^g -> V_{n+1}^{s_j g}.
struct SimpVB {
    std::shared_ptr<const Nerve> base;
    int L = 0;
    std::vector<std::vector<int>> dims;  // dims[n][g]
    std::vector<std::vector<std::vector<SparseMat>>> face;
    std::vector<std::vector<std::vector<SparseMat>>> degen;

    SimpVB() = default;
    // All structure maps zero, correctly shaped.
    SimpVB(std::shared_ptr<const Nerve> base, int L, std::vector<std::vector<int>> dims);

    int dim(int n, std::size_t g) const { return dims[n][g]; }
    std::size_t size(int n) const { return base->size(n); }
    Mat d(int n, int i, std::size_t g) const { return face[n][i][g].dense(); }
    Mat s(int n, int j, std::size_t g) const { return degen[n][j][g].dense(); }
    // Restriction to the first k-face, s_k = d_{k+1} ... d_n; returns the target simplex through *at.
    Mat first_face(int n, int k, std::size_t g, std::size_t* at = nullptr) const;
    void validate_shapes() const;
};

// Fiberwise simplicial identities, each named family with its first failing fiber.
Report check_simplicial(const SimpVB& v);
SimpVB svb_from_json(const nlohmann::json& doc);
nlohmann::json svb_to_json(const SimpVB& v);
// Pullback of a simplicial vector space along the map from the nerve to a point.
SimpVB pullback(const SimpVS& x, std::shared_ptr<const Nerve> base);
// A simplicial vector space as a bundle over the one-object unit groupoid.
SimpVB to_bundle(const SimpVS& x);

// Relative horn map prod_{i != k} d_i at g.
Mat horn_map(const SimpVB& v, int n, int k, std::size_t g);
// Compatible face tuples (v_i)_{i != k} with d_i v_j = d_{j-1} v_i, as a subspace
// of the direct sum of the fibers over d_i g listed in increasing i.
Subspace horn_space(const SimpVB& v, int n, int k, std::size_t g);

struct FibrationReport {
    Report report;
    bool fibration = false;
    // Minimal N with unique fillers at every level N < n <= L; only certified up to L.
    int order = -1;
    std::vector<bool> surjective;      // per level, all k and g
    std::vector<bool> unique_fillers;  // per level, all k and g
};
FibrationReport check_fibration(const SimpVB& v);

// Core dims: intersection of ker d_i, i > 0, at the totally degenerate simplex
// over each object, for degrees 0..L, trimmed to the top nonzero degree.
GradedBundle core(const SimpVB& v);
// Basis (columns) of that intersection at u_0^n(x).
Mat core_basis(const SimpVB& v, int n, int x);

// Per level and simplex subspace; level 0 is the whole fiber.
struct Cleavage {
    int L = 0;
    std::vector<std::vector<Subspace>> c;  // c[n][g]
};
Cleavage cleavage_from_json(const nlohmann::json& doc, const SimpVB& v);
nlohmann::json cleavage_to_json(const Cleavage& c);
// Span of the degenerate vectors at every level; over a unit groupoid this is the unique normal cleavage.
Cleavage degenerate_cleavage(const SimpVB& v);

struct CleavageReport {
    Report report;
    bool complement = false;
    bool normal = false;
    bool weakly_flat = false;
    bool flat = false;
};
// All conditions are decided as subspace containments.
CleavageReport check_cleavage(const SimpVB& v, const Cleavage& c);
// Flatness over a chosen subspace S^x of each vertex fiber, with the interior
// face variant checked whenever the cleavage is flat over S.
Report check_flat_over(const SimpVB& v, const Cleavage& c, const std::vector<Subspace>& s, const std::string& label);

// Fiberwise linear map over the identity of the base: f[n][g] : V_n^g -> V'_n^g.
struct BundleMap {
    std::vector<std::vector<Mat>> f;
};
BundleMap identity_map(const SimpVB& v);
Report check_bundle_map(const BundleMap& phi, const SimpVB& v, const SimpVB& w);
Report check_weakly_flat_morphism(const BundleMap& phi, const SimpVB& v, const Cleavage& c, const Cleavage& c2);

// Horn-space dims computed directly and by the binomial formula, and kernel
// ranks of relative horn maps against the core.
Report rank_identities(const SimpVB& v);

struct CohomologyReport {
    std::vector<int> dims;  // H^0 .. H^p
    Report report;
};
// Fiberwise-linear cochains with coboundary sum (-1)^i d_i^*.  When r is an
// order 0 representation underlying v, degree 0 is compared against the
// explicit formula for the dual representation.
CohomologyReport linear_cochain_cohomology(const SimpVB& v, int p, const Ruth* r = nullptr);
// The coboundary C^m -> C^{m+1} as a matrix on stacked fiber coordinates.
Mat coboundary(const SimpVB& v, int m);

}  // namespace hvb
