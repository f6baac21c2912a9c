#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "hvb/exactla.hpp"
#include "hvb/ordmap.hpp"
#include "hvb/report.hpp"

namespace hvb {

class ChainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Nonnegatively graded chain complex of finite-dimensional rational spaces.
// d[n] : Y_n -> Y_{n-1} for 1 <= n <= top; d[0] is an empty placeholder.
struct ChainComplex {
    std::vector<int> dims;
    std::vector<Mat> d;

    ChainComplex() = default;
    ChainComplex(std::vector<int> dims_, std::vector<Mat> d_);

    int top() const { return static_cast<int>(dims.size()) - 1; }
    int dim(int n) const { return n >= 0 && n <= top() ? dims[n] : 0; }
    // Boundary Y_n -> Y_{n-1} at any degree, zero outside the support.
    Mat boundary(int n) const;
    void validate() const;
};

ChainComplex chain_from_json(const nlohmann::json& doc);
nlohmann::json chain_to_json(const ChainComplex& y);
// The same complex with boundary (-1)^{n-1} d_n in degree n.
ChainComplex sign_twisted(const ChainComplex& y);

// Truncated simplicial vector space: levels 0..L.
struct SimpVS {
    int L = 0;
    std::vector<int> dims;
    std::vector<std::vector<Mat>> face;   // face[n][i] : X_n -> X_{n-1}, 1 <= n <= L
    std::vector<std::vector<Mat>> degen;  // degen[n][j] : X_n -> X_{n+1}, 0 <= n < L
};

Report check_simplicial(const SimpVS& x);
nlohmann::json simpvs_to_json(const SimpVS& x);

struct Normalization {
    ChainComplex complex;
    std::vector<Mat> basis;  // basis[n] : NX_n -> X_n, columns span the intersection of ker d_i, i > 0
};
// Degrees 0..L.  Throws ChainError if d_0 does not preserve NX.
Normalization normalize(const SimpVS& x);

// Offsets of the summands of DK(Y)_n, indexed by enumerate_zero_monos(n).
std::vector<int> dk_offsets(const ChainComplex& y, int n);
SimpVS dk(const ChainComplex& y, int L);

// Surjections [n] -> [k], listed in the order of their dual 0-preserving
// injections (alpha(j) = min of the preimage of j), so that the level-wise
// identification with dk is the identity matrix.
std::vector<OrdMap> enumerate_surjections(int n);
OrdMap dual_mono(const OrdMap& epi);
OrdMap dual_epi(const OrdMap& mono);
SimpVS dk_classic(const ChainComplex& y, int L);

// y -> (y, iota_n), the natural map Y_n -> N(DK(Y))_n.
Mat dk_unit_map(const ChainComplex& y, int n);
// Diagonal sign (-1)^{k(k-1)/2} on each summand of dimension k of DK(Y)_n;
// a simplicial isomorphism DK(sign_twisted(Y)) -> DK(Y).
Mat epsilon(const ChainComplex& y, int n);

Subspace degenerate_span(const SimpVS& x, int n);

// Explicit chain isomorphism f_n : a_n -> b_n, built from bases adapted to
// cycles, boundaries and homology; nullopt when the complexes are not isomorphic.
std::optional<std::vector<Mat>> chain_iso(const ChainComplex& a, const ChainComplex& b);
bool is_chain_iso(const ChainComplex& a, const ChainComplex& b, const std::vector<Mat>& f);

// Normal cleavage by degenerate simplices: horn bijectivity for k < n, flatness,
// and the order criterion NX_n = 0 for n > N iff unique fillers for n > N.
Report check_unique_flat_cleavage(const SimpVS& x);

}  // namespace hvb
