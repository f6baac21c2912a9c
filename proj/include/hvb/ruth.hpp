#pragma once

#include <memory>
#include <random>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "hvb/doldkan.hpp"
#include "hvb/exactla.hpp"
#include "hvb/groupoid.hpp"
#include "hvb/report.hpp"

namespace hvb {

class RuthError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Graded vector bundle over the objects: dims[x][n] for degrees 0..top.
struct GradedBundle {
    std::shared_ptr<const FinGroupoid> groupoid;
    std::vector<std::vector<int>> dims;

    GradedBundle() = default;
    GradedBundle(std::shared_ptr<const FinGroupoid> g, std::vector<std::vector<int>> d);

    int top() const { return dims.empty() ? -1 : static_cast<int>(dims[0].size()) - 1; }
    int dim(int x, int n) const { return n >= 0 && n <= top() ? dims[x][n] : 0; }
    int total(int x) const;
    // Position of degree n inside the total space of E^x (degrees ascending).
    int offset(int x, int n) const;
    bool operator==(const GradedBundle& o) const { return dims == o.dims; }
};

nlohmann::json bundle_to_json(const GradedBundle& e);

// Operators R_m^g stored per (m, g, source degree k) as the block
// E^{x_0}_k -> E^{x_m}_{k+m-1}.  Only m <= top+1 can be nonzero.
struct Ruth {
    std::shared_ptr<const Nerve> nerve;
    GradedBundle E;
    int mcap = 0;  // checks run for m <= mcap; default 2N+2
    std::vector<std::vector<std::vector<Mat>>> ops;  // ops[m][g][k]

    Ruth() = default;
    // All operators zero; R_1 at units is set to the identity.
    Ruth(std::shared_ptr<const Nerve> nerve, GradedBundle e, int mcap = -1);

    const FinGroupoid& groupoid() const { return nerve->groupoid(); }
    int top() const { return E.top(); }
    int max_op() const { return top() + 1; }
    // Shaped zero when nothing is stored.
    Mat block(int m, std::size_t g, int k) const;
    void set_block(int m, std::size_t g, int k, const Mat& b);
    // Total matrix E^{x_0} -> E^{x_m} over all degrees.
    Mat total(int m, std::size_t g) const;
};

// psi_m^g : E^{x_0}_k -> E'^{x_m}_{k+m}; only m <= top of the target can be nonzero.
struct RuthMorphism {
    std::shared_ptr<const Ruth> src, tgt;
    std::vector<std::vector<std::vector<Mat>>> ops;  // ops[m][g][k]

    RuthMorphism() = default;
    RuthMorphism(std::shared_ptr<const Ruth> s, std::shared_ptr<const Ruth> t);

    int max_op() const { return tgt->top(); }
    Mat block(int m, std::size_t g, int k) const;
    void set_block(int m, std::size_t g, int k, const Mat& b);
    Mat total(int m, std::size_t g) const;
};

Ruth ruth_from_json(const nlohmann::json& doc);
nlohmann::json ruth_to_json(const Ruth& r);
// Operators of a morphism between two given representations.
RuthMorphism morphism_from_json(const nlohmann::json& doc, std::shared_ptr<const Ruth> src, std::shared_ptr<const Ruth> tgt);
nlohmann::json morphism_to_json(const RuthMorphism& psi);

Report check_rh1(const Ruth& r);
Report check_rh2(const Ruth& r);
// RH3 and RH4.
Report check_morphism(const RuthMorphism& psi, int mcap = -1);
Report validate(const Ruth& r);

RuthMorphism identity_morphism(std::shared_ptr<const Ruth> r);
// (b o a)_m^g = sum_s b_{m-s}^{t_{m-s} g} a_s^{s_s g}.
RuthMorphism compose(const RuthMorphism& b, const RuthMorphism& a);

// Solves RH4 for the target: given R and gauge data psi (psi_0 = id), the
// unique R' making psi : R -> R' a morphism.  Only the higher operators of
// psi are read.  The result is not validated.
Ruth gauge_transport(const Ruth& r, const std::vector<std::vector<std::vector<Mat>>>& psi_ops);

struct HomologyDims {
    std::vector<int> z, b, h;
};
HomologyDims cycles_borders(const Ruth& r, int x);

// Builders that are valid by construction.
// Strict representation on E_0 from one matrix per arrow; R^{hg} = R^h R^g is checked by RH2.
Ruth representation(std::shared_ptr<const Nerve> nerve, const std::vector<int>& dims, const std::vector<Mat>& arrow_mats);
// Chain complexes over the unit groupoid, one per object.
Ruth chain_complexes(std::shared_ptr<const Nerve> nerve, const std::vector<ChainComplex>& ys);
// Strict representation conjugate to a model complex: R_0^x = A_x^{-1} d A_x and
// R_1^g = A_{t g}^{-1} S_g A_{s g}, where S_g is the sign rep (-1)^{w(g)} for a
// homomorphism w to Z/2 given per arrow (pass an empty vector for w = 0).
Ruth conjugated_complex(std::shared_ptr<const Nerve> nerve, const ChainComplex& model, const std::vector<Mat>& frames,
                        const std::vector<int>& parity);
// Random higher gauge data vanishing on degenerate simplices.
std::vector<std::vector<std::vector<Mat>>> random_gauge(const Ruth& r, std::mt19937& rng, int bound = 2);

// Grothendieck construction of an order <= 1 representation, as a nerve of
// composable chains: level n over g has coordinates (e, c_1, ..., c_n) where
// e in E_0^{x_0} is the source of the first arrow and c_i in E_1^{x_i} is the
// E_1 part of the i-th arrow (c_i, g_i, e_{i-1}).
struct Grothendieck {
    std::shared_ptr<const Ruth> r;
    // Target of the arrow (c, g, e).
    Vec target(std::size_t g, const Vec& c, const Vec& e) const;
    // (c', g', e')(c, g, e) as the E_1 component of the product.
    Vec multiply_c(std::size_t g2, const Vec& c2, std::size_t g1, const Vec& c1, const Vec& e1) const;
    // E_1 component of the inverse of (c, g, e).
    Vec inverse_c(std::size_t g, const Vec& c, const Vec& e) const;
};
Grothendieck grothendieck(std::shared_ptr<const Ruth> r);

}  // namespace hvb
