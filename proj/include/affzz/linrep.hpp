#pragma once

#include "braid.hpp"
#include "laurent.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace affzz {

enum class Rep { H, RH, AKS };

inline std::string rep_name(Rep r) {
    switch (r) {
        case Rep::H: return "h";
        case Rep::RH: return "rh";
        case Rep::AKS: return "aks";
    }
    return {};
}

inline Rep parse_rep(const std::string& s) {
    if (s == "h" || s == "H") return Rep::H;
    if (s == "rh" || s == "RH") return Rep::RH;
    if (s == "aks" || s == "AKS") return Rep::AKS;
    throw std::invalid_argument("unknown representation " + s);
}

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

struct RepMatrix {
    Rep rep = Rep::AKS;
    int n = 3;
    PolyMatrix m;

    std::size_t dim() const { return m.size(); }
    bool operator==(const RepMatrix& o) const { return rep == o.rep && n == o.n && m == o.m; }
};

inline const VarSet& rep_vars(Rep r) { return r == Rep::AKS ? vars_ts() : vars_tq(); }
inline int rep_dim(Rep r, int n) { return r == Rep::H ? n + 1 : n; }

inline PolyMatrix identity_matrix(const VarSet& vs, int d) {
    PolyMatrix m(d, std::vector<LaurentPoly>(d, LaurentPoly(vs)));
    for (int i = 0; i < d; ++i) m[i][i] = LaurentPoly(vs, 1);
    return m;
}

inline PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    std::size_t d = a.size();
    const VarSet& vs = a[0][0].vars();
    PolyMatrix c(d, std::vector<LaurentPoly>(d, LaurentPoly(vs)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < d; ++j)
                if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

// determinant by dynamic programming over column subsets
inline LaurentPoly determinant(const PolyMatrix& a) {
    std::size_t d = a.size();
    const VarSet& vs = a[0][0].vars();
    std::vector<LaurentPoly> f(std::size_t(1) << d, LaurentPoly(vs));
    f[0] = LaurentPoly(vs, 1);
    for (std::size_t mask = 0; mask < f.size(); ++mask) {
        if (f[mask].is_zero()) continue;
        std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (row == d) continue;
        for (std::size_t c = 0; c < d; ++c) {
            if (mask & (std::size_t(1) << c) || a[row][c].is_zero()) continue;
            int above = __builtin_popcountll(mask >> (c + 1));
            LaurentPoly term = f[mask] * a[row][c];
            if (above % 2) f[mask | (std::size_t(1) << c)] -= term;
            else f[mask | (std::size_t(1) << c)] += term;
        }
    }
    return f.back();
}

// inverse over the Laurent ring; the determinant must be +-monomial
inline PolyMatrix mat_inverse(const PolyMatrix& a) {
    std::size_t d = a.size();
    const VarSet& vs = a[0][0].vars();
    LaurentPoly det = determinant(a);
    if (det.terms().size() != 1) throw std::domain_error("matrix determinant is not a unit: " + det.to_string());
    const auto& [e, c] = *det.terms().begin();
    if (c != 1 && c != -1) throw std::domain_error("matrix determinant is not a unit: " + det.to_string());
    Exponents neg(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
    LaurentPoly det_inv = LaurentPoly::monomial(vs, neg, c);
    PolyMatrix inv(d, std::vector<LaurentPoly>(d, LaurentPoly(vs)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            PolyMatrix minor;
            for (std::size_t r = 0; r < d; ++r) {
                if (r == i) continue;
                std::vector<LaurentPoly> row;
                for (std::size_t s = 0; s < d; ++s)
                    if (s != j) row.push_back(a[r][s]);
                minor.push_back(std::move(row));
            }
            LaurentPoly cof = d == 1 ? LaurentPoly(vs, 1) : determinant(minor);
            if ((i + j) % 2) cof = -cof;
            inv[j][i] = cof * det_inv;
        }
    return inv;
}

namespace detail {

inline LaurentPoly mono(Rep r, int t, int other, int coef = 1) {
    return LaurentPoly::monomial(rep_vars(r), {t, other}, coef);
}

// generator data as displayed; AKS sigma_i for 2 <= i <= n-1 is taken with +t at (i, i+1) unless verbatim is set
inline PolyMatrix displayed_or_used(Rep r, const Letter& g, int n, bool verbatim) {
    const VarSet& vs = rep_vars(r);
    int d = rep_dim(r, n);
    PolyMatrix m = identity_matrix(vs, d);
    auto zero = LaurentPoly(vs);
    auto one = LaurentPoly(vs, 1);
    auto t = mono(r, 1, 0);
    if (r == Rep::H) {
        if (g.is_rho() && g.exp > 0) {
            m = PolyMatrix(d, std::vector<LaurentPoly>(d, zero));
            auto q = mono(r, 0, 1);
            m[0][0] = t;
            m[1][0] = one - q;
            for (int k = 1; k <= n - 1; ++k) m[k + 1][k] = one;
            m[0][n] = mono(r, n, 0) - mono(r, n + 1, 0);
            m[1][n] = mono(r, n - 1, 0) - mono(r, n, 0) + mono(r, n, 1);
            for (int j = 2; j <= n; ++j) m[j][n] = mono(r, n - j, 0) - mono(r, n - j + 1, 0);
            return m;
        }
        if (!g.is_rho() && g.exp > 0 && g.index <= n - 1) {
            int i = g.index;
            m[i][i] = zero;
            m[i][i + 1] = t;
            m[i + 1][i] = one;
            m[i + 1][i + 1] = one - t;
            return m;
        }
        throw std::out_of_range("no displayed H matrix for this generator");
    }
    auto at = [&](int row, int col) -> LaurentPoly& { return m[row - 1][col - 1]; };
    if (g.is_rho()) {
        if (g.exp > 0) {
            m = PolyMatrix(d, std::vector<LaurentPoly>(d, zero));
            for (int j = 1; j <= n - 1; ++j) at(j + 1, j) = one;
            at(1, n) = r == Rep::AKS ? mono(r, 0, -1) : mono(r, n, 1);
            return m;
        }
        if (r == Rep::AKS) {
            m = PolyMatrix(d, std::vector<LaurentPoly>(d, zero));
            for (int j = 1; j <= n - 1; ++j) at(j, j + 1) = one;
            at(n, 1) = mono(r, 0, 1);
            return m;
        }
        throw std::out_of_range("no displayed RH matrix for rho^-1");
    }
    if (g.exp < 0) throw std::out_of_range("no displayed matrix for an inverse generator");
    int i = g.index;
    if (i == 1) {
        at(1, 1) = -t;
        at(1, 2) = t;
        at(1, n) = r == Rep::AKS ? mono(r, 0, -1) : mono(r, n, 1);
        return m;
    }
    if (i == n) {
        if (r != Rep::AKS) throw std::out_of_range("no displayed RH matrix for sigma_n");
        at(n, 1) = mono(r, 1, 1);
        at(n, n - 1) = one;
        at(n, n) = -t;
        return m;
    }
    at(i, i - 1) = one;
    at(i, i) = -t;
    at(i, i + 1) = (r == Rep::AKS && verbatim) ? -t : t;
    return m;
}

}  // namespace detail

// the matrices exactly as displayed, for fidelity checks
inline PolyMatrix displayed_matrix(Rep r, const Letter& g, int n) { return detail::displayed_or_used(r, g, n, true); }

inline bool has_displayed_matrix(Rep r, const Letter& g, int n) {
    try {
        detail::displayed_or_used(r, g, n, true);
        return true;
    } catch (const std::out_of_range&) {
        return false;
    }
}

// sigma_0^2 in the rank n+1 representation, stored for a documented consistency check
inline PolyMatrix h_sigma0_squared(int n) {
    const VarSet& vs = vars_tq();
    PolyMatrix m = identity_matrix(vs, n + 1);
    auto P = [&](const char* s) { return LaurentPoly::parse(s, vs); };
    m[0][0] = P("t");
    m[0][1] = P("t - t^2");
    m[1][0] = P("1 - q");
    m[1][1] = P("1 + t*q - t");
    return m;
}

inline const PolyMatrix& generator_matrix(Rep r, const Letter& g, int n) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int, int>, PolyMatrix> cache;
    auto key = std::tuple(static_cast<int>(r), n, g.index, g.exp);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    PolyMatrix m;
    if (has_displayed_matrix(r, g, n)) {
        m = detail::displayed_or_used(r, g, n, false);
    } else if (!g.is_rho() && g.index == n && g.exp > 0) {
        // sigma_n = rho sigma_{n-1} rho^{-1}
        m = mat_mul(mat_mul(generator_matrix(r, rho(1), n), generator_matrix(r, sigma(n - 1), n)),
                    generator_matrix(r, rho(-1), n));
    } else {
        m = mat_inverse(generator_matrix(r, g.inverse(), n));
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(m)).first->second;
}

// M(w) = M(w_1) M(w_2) ... M(w_L), the rightmost letter acting first
inline RepMatrix rep_matrix(Rep r, const BraidWord& w) {
    check_n(w.n);
    PolyMatrix m = identity_matrix(rep_vars(r), rep_dim(r, w.n));
    for (const auto& l : w.letters) m = mat_mul(m, generator_matrix(r, l, w.n));
    return {r, w.n, std::move(m)};
}

inline PolyMatrix specialize_aks(const PolyMatrix& m, int n) {
    std::map<std::string, MonomialImage> sub{{"t", {1, {1, 0}}}, {"s", {1, {-n, -1}}}};
    PolyMatrix out;
    for (const auto& row : m) {
        std::vector<LaurentPoly> r;
        for (const auto& e : row) r.push_back(lp_specialize(e, sub, vars_tq()));
        out.push_back(std::move(r));
    }
    return out;
}

inline bool check_specialization(const BraidWord& w) {
    return specialize_aks(rep_matrix(Rep::AKS, w).m, w.n) == rep_matrix(Rep::RH, w).m;
}

}  // namespace affzz
