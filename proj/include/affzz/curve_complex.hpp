#pragma once

#include "complexes.hpp"
#include "curves.hpp"

namespace affzz {

// L(c): one projective per crossing, one differential component per essential segment
inline ProjComplex curve_complex(const TrigradedCurve& c, const CurveConventions& conv = default_conventions()) {
    int n = c.n;
    Algebra R(n);
    ProjComplex L{n, {}, {}};
    auto pos = d_positions(c);
    std::vector<int> id(c.word.size(), -1);
    for (int p : pos) {
        const Tri& mu = c.word[p].mu;
        id[p] = L.add({c.word[p].idx, mu[0] + n * mu[2], mu[1] - n * mu[2], -mu[2], 0});
    }
    for (std::size_t i = 0; i + 1 < pos.size(); ++i) {
        auto s = essential_segment(c, pos[i], pos[i + 1], conv);
        int a = id[pos[i]], b = id[pos[i + 1]];
        if (!s.first_is_source) std::swap(a, b);
        if (L.summands[b].coh != L.summands[a].coh + 1)
            throw InvariantViolation("segment joins crossings whose degrees differ by more than one");
        L.set(a, b, AlgebraElement::basis(s.element));
    }
    // parity is conventional on L; choose it so the differential is homogeneous
    for (std::size_t i = 1; i < pos.size(); ++i) {
        auto s = essential_segment(c, pos[i - 1], pos[i], conv);
        int flip = R.tridegree(s.element).d2;
        L.summands[id[pos[i]]].par = (L.summands[id[pos[i - 1]]].par + flip) & 1;
    }
    validate(L);
    return canonical_order(L);
}

}  // namespace affzz
