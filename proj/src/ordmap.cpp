#include "hvb/ordmap.hpp"

#include <sstream>

namespace hvb {

OrdMap::OrdMap(int dom_, int cod_, std::vector<int> img_) : dom(dom_), cod(cod_), img(std::move(img_)) {
    if (dom < 0 || cod < 0 || static_cast<int>(img.size()) != dom + 1)
        throw std::invalid_argument("OrdMap: image length must be dom+1");
    for (int i = 0; i <= dom; ++i) {
        if (img[i] < 0 || img[i] > cod) throw std::invalid_argument("OrdMap: image out of range");
        if (i > 0 && img[i] < img[i - 1]) throw std::invalid_argument("OrdMap: not monotone");
    }
}

bool OrdMap::injective() const {
    for (int i = 1; i <= dom; ++i)
        if (img[i] == img[i - 1]) return false;
    return true;
}

bool OrdMap::surjective() const {
    if (img[0] != 0 || img[dom] != cod) return false;
    for (int i = 1; i <= dom; ++i)
        if (img[i] > img[i - 1] + 1) return false;
    return true;
}

std::uint64_t OrdMap::mask() const {
    std::uint64_t m = 0;
    for (int v : img) m |= std::uint64_t{1} << v;
    return m;
}

std::string OrdMap::str() const {
    std::ostringstream os;
    os << "[" << dom << "->" << cod << ":";
    for (int i = 0; i <= dom; ++i) os << (i ? "," : "") << img[i];
    os << "]";
    return os.str();
}

OrdMap identity(int n) {
    std::vector<int> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = i;
    return {n, n, v};
}

OrdMap delta(int n, int i) {
    if (n < 1 || i < 0 || i > n) throw std::invalid_argument("delta: index out of range");
    std::vector<int> v(n);
    for (int t = 0; t < n; ++t) v[t] = t < i ? t : t + 1;
    return {n - 1, n, v};
}

OrdMap upsilon(int n, int j) {
    if (j < 0 || j > n) throw std::invalid_argument("upsilon: index out of range");
    std::vector<int> v(n + 2);
    for (int t = 0; t <= n + 1; ++t) v[t] = t <= j ? t : t - 1;
    return {n + 1, n, v};
}

OrdMap sigma(int k, int n) {
    if (k < 0 || k > n) throw std::invalid_argument("sigma: index out of range");
    std::vector<int> v(k + 1);
    for (int t = 0; t <= k; ++t) v[t] = t;
    return {k, n, v};
}

OrdMap tau(int k, int n) {
    if (k < 0 || k > n) throw std::invalid_argument("tau: index out of range");
    std::vector<int> v(k + 1);
    for (int t = 0; t <= k; ++t) v[t] = t + n - k;
    return {k, n, v};
}

OrdMap chi(int i, int n) { return {0, n, {i}}; }

OrdMap from_mask(std::uint64_t mask, int n) {
    std::vector<int> v;
    for (int t = 0; t <= n; ++t)
        if (mask >> t & 1) v.push_back(t);
    if (v.empty() || (mask >> (n + 1)) != 0) throw std::invalid_argument("from_mask: bad mask");
    return {static_cast<int>(v.size()) - 1, n, v};
}

OrdMap compose(const OrdMap& outer, const OrdMap& inner) {
    if (inner.cod != outer.dom)
        throw CompositionError("compose: " + inner.str() + " does not land in the domain of " + outer.str());
    std::vector<int> v(inner.dom + 1);
    for (int t = 0; t <= inner.dom; ++t) v[t] = outer.img[inner.img[t]];
    return {inner.dom, outer.cod, v};
}

OrdMap prime(const OrdMap& theta) {
    std::vector<int> v(theta.dom + 2);
    v[0] = 0;
    for (int t = 0; t <= theta.dom; ++t) v[t + 1] = theta.img[t] + 1;
    return {theta.dom + 1, theta.cod + 1, v};
}

EpiMono factor(const OrdMap& theta) {
    std::vector<int> image;
    std::vector<int> epi(theta.dom + 1);
    for (int t = 0; t <= theta.dom; ++t) {
        if (image.empty() || image.back() != theta.img[t]) image.push_back(theta.img[t]);
        epi[t] = static_cast<int>(image.size()) - 1;
    }
    int k = static_cast<int>(image.size()) - 1;
    return {OrdMap(theta.dom, k, epi), OrdMap(k, theta.cod, image)};
}

std::vector<OrdMap> enumerate_zero_monos(int n) {
    if (n < 0 || n > 40) throw std::invalid_argument("enumerate_zero_monos: n out of range");
    std::vector<OrdMap> out;
    out.reserve(zero_mono_count(n));
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << (n + 1)); m += 2) out.push_back(from_mask(m, n));
    return out;
}

D0Case classify_d0(const OrdMap& beta, const OrdMap& alpha) {
    if (!beta.injective() || !beta.preserves_zero() || !alpha.injective() || !alpha.preserves_zero() ||
        alpha.cod != beta.cod + 1)
        throw std::invalid_argument("classify_d0: expects injective 0-preserving beta:[l]->[n-1], alpha:[k]->[n]");
    const OrdMap bp = prime(beta);
    const int l = beta.dom;
    D0Case found;
    int hits = 0;
    // alpha = beta' sigma_k: alpha is a prefix of beta'.
    if (alpha.dom <= l + 1) {
        bool prefix = true;
        for (int t = 0; t <= alpha.dom && prefix; ++t) prefix = alpha.img[t] == bp.img[t];
        if (prefix) {
            found = {D0Case::CaseI, alpha.dom};
            ++hits;
        }
    }
    // alpha = beta' delta_i, 1 <= i <= l: beta' with its i-th entry removed.
    if (alpha.dom == l) {
        for (int i = 1; i <= l; ++i) {
            bool match = true;
            for (int t = 0; t <= l && match; ++t) match = alpha.img[t] == bp.img[t < i ? t : t + 1];
            if (match) {
                found = {D0Case::CaseII, i};
                ++hits;
            }
        }
    }
    if (hits > 1) throw std::logic_error("classify_d0: factorization not unique");
    return found;
}

std::vector<OrdMap> enumerate_monotone(int m, int n) {
    std::vector<OrdMap> out;
    std::vector<int> v(m + 1, 0);
    while (true) {
        out.emplace_back(m, n, v);
        int t = m;
        while (t >= 0 && v[t] == n) --t;
        if (t < 0) break;
        ++v[t];
        for (int s = t + 1; s <= m; ++s) v[s] = v[t];
    }
    return out;
}

}  // namespace hvb
