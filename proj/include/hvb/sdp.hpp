#pragma once

#include <memory>
#include <vector>

#include "hvb/ruth.hpp"
#include "hvb/svb.hpp"

namespace hvb {

// Offsets of the summands of the fiber over g, in enumerate_zero_monos(n) order.
// The summand of alpha : [k] -> [n] is E_k at the vertex alpha(k) of g.
std::vector<int> sdp_offsets(const Ruth& r, int n, std::size_t g);

struct Sdp {
    SimpVB bundle;
    Cleavage cleavage;  // kernel of the iota projection
};

// Validates R first (RH1, RH2) and throws RuthError when it fails.  L < 0 means 2N+3.
Sdp build_sdp(const Ruth& r, int L = -1);
// Blockwise construction without validation.
SimpVB sdp_bundle(const Ruth& r, int L);
// Second path: per homogeneous column, the alternate formulas with the
// unspecified sign tokens taken as 1.
SimpVB sdp_bundle_homogeneous(const Ruth& r, int L);
Cleavage canonical_cleavage(const Ruth& r, const SimpVB& v);

// psi^ : sdp(R) -> sdp(R') over the identity, levels 0..L.
BundleMap lift_morphism(const RuthMorphism& psi, int L);

struct NotFull {
    SimpVB v;
    Cleavage c;        // v_210 = 0
    Cleavage c_prime;  // modified at three base 2-simplices
    std::size_t witness_simplex = 0;  // base simplex with vertices (x, x, y)
};
// Pair groupoid on {x, y}; V is the pullback of dk(E) with E_1 = E_2 = Q, boundary id.
// The printed C' is not weakly flat at three 3-simplices (xxyx, yxxy, xyxy).
// corrected = true uses v210 = 2 v10 - 2 v20 over (x, x, y), the only choice with
// coefficients in [-2, 2] there that keeps the other two triangles and is weakly flat.
// Since V_0 = 0, weakly flat and flat coincide for every cleavage of this V.
NotFull example_not_full(int L = 4, bool corrected = false);

// Adds delta to one entry of one block of R, rebuilds the bundle and compares
// the failure of RH2 with that of d_0 d_0 = d_0 d_1, and the unit clause with d_0 u_0 = id.
Report rh2_sensitivity(const Ruth& r, int m, std::size_t g, int k, int row, int col, const Q& delta, int L = -1);

// Nerve of the Grothendieck construction of an order <= 1 representation in
// composable-chain coordinates (e, c_1, ..., c_n); for order 0 this is the
// translation groupoid.
SimpVB grothendieck_nerve(const Ruth& r, int L);
// Change of variables from sdp coordinates (same-source arrows) to chain coordinates.
Mat grothendieck_comparison(const Ruth& r, int n, std::size_t g);

// Whichever classical model applies to R: the translation groupoid (order 0),
// the Grothendieck nerve (order 1), the sign-twisted Dold-Kan space per object
// (unit groupoids).  v must be sdp_bundle(r, L).
Report classical_cross_checks(const Ruth& r, const SimpVB& v);

}  // namespace hvb
