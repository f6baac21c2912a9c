#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hvb {

// A weakly monotone map [dom] -> [cod], stored by its image vector.
struct OrdMap {
    int dom = 0;
    int cod = 0;
    std::vector<int> img;

    OrdMap() : img{0} {}
    OrdMap(int dom_, int cod_, std::vector<int> img_);

    int operator()(int i) const { return img[i]; }
    bool injective() const;
    bool surjective() const;
    bool preserves_zero() const { return img[0] == 0; }
    // Image set as a bitmask; only meaningful for injective maps.
    std::uint64_t mask() const;
    std::string str() const;

    bool operator==(const OrdMap& o) const = default;
};

class CompositionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

OrdMap identity(int n);
OrdMap delta(int n, int i);    // [n-1] -> [n], skips i
OrdMap upsilon(int n, int j);  // [n+1] -> [n], hits j twice
OrdMap sigma(int k, int n);    // [k] -> [n], first inclusion
OrdMap tau(int k, int n);      // [k] -> [n], last inclusion
OrdMap chi(int i, int n);      // [0] -> [n], the i-th vertex
OrdMap from_mask(std::uint64_t mask, int n);

OrdMap compose(const OrdMap& outer, const OrdMap& inner);
OrdMap prime(const OrdMap& theta);

// Surjection-injection factorization: theta = mono o epi.
struct EpiMono {
    OrdMap epi;
    OrdMap mono;
};
EpiMono factor(const OrdMap& theta);

// Injective 0-preserving maps into [n], ascending by image bitmask.
// The map with image mask m sits at position m >> 1.
std::vector<OrdMap> enumerate_zero_monos(int n);
inline std::size_t zero_mono_index(const OrdMap& alpha) { return alpha.mask() >> 1; }
inline std::size_t zero_mono_count(int n) { return std::size_t{1} << n; }

struct D0Case {
    enum Kind { None, CaseI, CaseII };
    Kind kind = None;
    int param = -1;  // k for CaseI, i for CaseII

    bool operator==(const D0Case& o) const = default;
};

// For beta: [l] -> [n-1] and alpha: [k] -> [n], both injective and 0-preserving,
// decides whether alpha = beta' sigma_k (CaseI) or alpha = beta' delta_i with
// 1 <= i <= l (CaseII).
D0Case classify_d0(const OrdMap& beta, const OrdMap& alpha);

// All monotone maps [m] -> [n].
std::vector<OrdMap> enumerate_monotone(int m, int n);

}  // namespace hvb
