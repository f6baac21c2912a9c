#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "hvb/ruth.hpp"
#include "hvb/svb.hpp"

namespace hvb {

class SplitError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct PushForward {
    Mat h;               // V_n^g -> V_{n+1} over u_{i+1} g
    std::size_t h_at = 0;
    Mat p;               // d_i h, over d_i u_{i+1} g
    std::size_t p_at = 0;
};

struct Transport {
    Mat m;
    std::size_t at = 0;  // simplex the image lies over
};

// A bundle with a validated normal weakly flat cleavage.  All transport maps
// are assembled per fiber on demand and cached; the context is not thread safe.
class SplitContext {
public:
    // Throws SplitError with the cleavage report when C is not a normal, weakly
    // flat complement, or when L < N + 2 (extraction reads level N + 1 and the
    // retraction there reads one level higher).
    SplitContext(SimpVB v, Cleavage c);

    const SimpVB& bundle() const { return v_; }
    const Cleavage& cleavage() const { return c_; }
    const GradedBundle& core_bundle() const { return e_; }
    int order() const { return e_.top(); }
    int L() const { return v_.L; }

    // Projection onto K_n = intersection of ker d_i, i > 0, with kernel C_n.
    const Mat& pi_k(int n, std::size_t g) const;
    // Linear filler: stacked horn (faces i != k ascending) -> C_n, for k < n.
    const Mat& filler(int n, int k, std::size_t g) const;
    // Restriction v -> v|_alpha for any mono alpha into [n], with the target simplex.
    Mat restriction(int n, std::size_t g, std::uint64_t mask, std::size_t* at = nullptr) const;
    // Core coordinates of K_k at the unit simplex over x, and their left inverse.
    const Mat& core_basis_at(int k, int x) const;
    const Mat& core_coords(int k, int x) const;

private:
    static std::uint64_t key(int n, std::uint64_t a, std::size_t g) {
        return (static_cast<std::uint64_t>(n) << 58) ^ (a << 32) ^ static_cast<std::uint64_t>(g);
    }

    SimpVB v_;
    Cleavage c_;
    GradedBundle e_;
    mutable std::unordered_map<std::uint64_t, Mat> pik_, fill_, basis_, coords_, phi_;
    mutable std::unordered_map<std::uint64_t, PushForward> push_;
    mutable std::unordered_map<std::uint64_t, Transport> retr_;
    friend const PushForward& push_forward(const SplitContext&, int, int, std::size_t);
    friend const Transport& retraction(const SplitContext&, int, std::size_t);
    friend const Mat& phi(const SplitContext&, int, std::size_t);
};

// The unique c in C_n^g with the given horn; rejects horns outside the horn space.
Vec horn_fill_in_cleavage(const SplitContext& ctx, int n, int k, std::size_t g, const Vec& horn);

// Requires n + 1 <= L.
const PushForward& push_forward(const SplitContext& ctx, int n, int i, std::size_t g);

// r_a = (p_0 ... p_{a-1}) ... (p_0 p_1) p_0; r = r_n lands over the unit simplex at the last vertex.
Transport intermediate_retraction(const SplitContext& ctx, int n, int a, std::size_t g);
const Transport& retraction(const SplitContext& ctx, int n, std::size_t g);

// Offsets of W_n^g = sum over zero monos alpha of E_{dim alpha} at alpha(k).
std::vector<int> split_offsets(const SplitContext& ctx, int n, std::size_t g);
// pi_alpha phi(v) = r pi_K(v|_alpha), in core coordinates.
const Mat& phi(const SplitContext& ctx, int n, std::size_t g);

// R_m^g(e) = (-1)^{m+n-1} pi_iota d_0 phi^{-1}(e, sigma_n, u_0^n g), on E = core(V).
Ruth extract_ruth(const SplitContext& ctx);
// Same operators without inverting phi: the preimage of (e, sigma_n) is solved
// from its restrictions (in C off sigma_n, equal to e on sigma_n).
Ruth extract_ruth_direct(const SplitContext& ctx);

struct Roundtrip {
    Ruth r;
    BundleMap phi;  // V -> sdp(R), levels 0..L
    Report report;
};
Roundtrip roundtrip_bundle(const SplitContext& ctx);

// psi_m^g(e) = pi_iota f(e, sigma_n, u_0^n g) for a map between two semi-direct
// products; throws SplitError unless f is weakly flat for the canonical cleavages.
RuthMorphism lower_morphism(const BundleMap& f, std::shared_ptr<const Ruth> src, std::shared_ptr<const Ruth> tgt);
// A map between two split bundles, conjugated by phi on both sides and lowered.
RuthMorphism lower_between(const Roundtrip& a, const Roundtrip& b, const BundleMap& f);

// Pulls the canonical cleavage back along psi^ for gauge data psi (psi_0 = id)
// and splits the semi-direct product of R along it.
Cleavage twisted_cleavage(const Ruth& r, const std::vector<std::vector<std::vector<Mat>>>& psi_ops, const SimpVB& v);
Ruth gauge_twist(const Ruth& r, const std::vector<std::vector<std::vector<Mat>>>& psi_ops);
// psi_0 = id plus the given higher operators, as a morphism src -> tgt.
RuthMorphism gauge_morphism(std::shared_ptr<const Ruth> src, std::shared_ptr<const Ruth> tgt,
                            const std::vector<std::vector<std::vector<Mat>>>& psi_ops);

}  // namespace hvb
