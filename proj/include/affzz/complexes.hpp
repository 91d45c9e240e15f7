#pragma once

#include "algebra.hpp"
#include "laurent.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace affzz {

struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct ShiftedProjective {
    int vertex = 1;
    int coh = 0;
    int g1 = 0;
    int g3 = 0;
    int par = 0;  // second grading mod 2, only read by k_class

    auto key() const { return std::tuple(coh, vertex, g1, g3, par); }
    bool operator==(const ShiftedProjective&) const = default;
};

// differential rows: d[u][v] is the component P(u) -> P(v), a map p -> p * d[u][v]
struct ProjComplex {
    int n = 3;
    std::vector<ShiftedProjective> summands;
    std::vector<std::map<int, AlgebraElement>> d;

    std::size_t size() const { return summands.size(); }
    int add(const ShiftedProjective& s) {
        summands.push_back(s);
        d.emplace_back();
        return static_cast<int>(summands.size()) - 1;
    }
    void set(int u, int v, const AlgebraElement& x) {
        if (x.is_zero()) d[u].erase(v);
        else d[u][v] = x;
    }
    const AlgebraElement* entry(int u, int v) const {
        auto it = d[u].find(v);
        return it == d[u].end() ? nullptr : &it->second;
    }
};

inline ProjComplex projective(int n, int i, int coh = 0, int g1 = 0, int g3 = 0, int par = 0) {
    check_n(n);
    if (i < 1 || i > n) throw std::invalid_argument("vertex out of range");
    ProjComplex c{n, {}, {}};
    c.add({i, coh, g1, g3, par & 1});
    return c;
}

inline ProjComplex zero_complex(int n) { return ProjComplex{n, {}, {}}; }

// direct sum
inline ProjComplex direct_sum(const ProjComplex& a, const ProjComplex& b) {
    ProjComplex c = a;
    int off = static_cast<int>(a.size());
    for (std::size_t u = 0; u < b.size(); ++u) c.add(b.summands[u]);
    for (std::size_t u = 0; u < b.size(); ++u)
        for (const auto& [v, x] : b.d[u]) c.set(off + static_cast<int>(u), off + v, x);
    return c;
}

// C[-a]{b}<c>: every summand moves to cohomological degree coh + a
inline ProjComplex shifted(const ProjComplex& c, int dcoh, int dg1, int dg3) {
    ProjComplex r = c;
    for (auto& s : r.summands) {
        s.coh += dcoh;
        s.g1 += dg1;
        s.g3 += dg3;
    }
    return r;
}

inline void validate(const ProjComplex& c) {
    Algebra R(c.n);
    for (std::size_t u = 0; u < c.size(); ++u) {
        const auto& su = c.summands[u];
        for (const auto& [v, x] : c.d[u]) {
            const auto& sv = c.summands[v];
            if (sv.coh != su.coh + 1) throw InvariantViolation("differential entry not of cohomological degree 1");
            for (const auto& [p, k] : x.terms) {
                if (R.source(p) != su.vertex || R.target(p) != sv.vertex)
                    throw InvariantViolation("differential entry has wrong endpoints");
                auto t = R.tridegree(p);
                if (su.g1 != t.d1 + sv.g1 || su.g3 != t.d3 + sv.g3 || su.par != ((t.d2 + sv.par) & 1))
                    throw InvariantViolation("differential entry is not homogeneous");
            }
        }
    }
    for (std::size_t u = 0; u < c.size(); ++u) {
        std::map<int, AlgebraElement> sq;
        for (const auto& [v, x] : c.d[u])
            for (const auto& [w, y] : c.d[v]) sq[w] += multiply(R, x, y);
        for (const auto& [w, z] : sq)
            if (!z.is_zero()) throw InvariantViolation("differential does not square to zero");
    }
}

namespace detail {

inline void prune(ProjComplex& c) {
    for (auto& row : c.d)
        for (auto it = row.begin(); it != row.end();) it = it->second.is_zero() ? row.erase(it) : std::next(it);
}

inline ProjComplex apply_sigma(int i, const ProjComplex& c) {
    Algebra R(c.n);
    ProjComplex r{c.n, {}, {}};
    std::vector<int> copy(c.size());
    std::vector<std::map<Path, int>> piece(c.size());
    for (std::size_t u = 0; u < c.size(); ++u) {
        const auto& s = c.summands[u];
        for (const auto& x : R.paths_between(i, s.vertex)) {
            auto t = R.tridegree(x);
            piece[u][x] = r.add({i, s.coh - 1, s.g1 + t.d1, s.g3 + t.d3, (s.par + t.d2) & 1});
        }
        copy[u] = r.add(s);
    }
    for (std::size_t u = 0; u < c.size(); ++u) {
        for (const auto& [x, pu] : piece[u]) r.set(pu, copy[u], AlgebraElement::basis(x));
        for (const auto& [v, y] : c.d[u]) {
            r.set(copy[u], copy[v], y);
            for (const auto& [x, pu] : piece[u]) {
                AlgebraElement xy = multiply(R, AlgebraElement::basis(x), y);
                for (const auto& [x2, k] : xy.terms) {
                    auto& e = r.d[pu][piece[v].at(x2)];
                    e.add({PathKind::Idem, i}, -k);
                }
            }
        }
    }
    prune(r);
    return r;
}

// the component of 1 -> sum a (x) c landing on the piece indexed by c
inline Path unit_to_piece(const Algebra& R, int i, const Path& c) {
    switch (c.kind) {
        case PathKind::Idem: return {PathKind::Loop, i};
        case PathKind::Loop: return {PathKind::Idem, i};
        case PathKind::Down: return {PathKind::Up, R.target(c)};
        case PathKind::Up: return {PathKind::Down, R.target(c)};
    }
    return {};
}

inline ProjComplex apply_sigma_inv(int i, const ProjComplex& c) {
    Algebra R(c.n);
    ProjComplex r{c.n, {}, {}};
    std::vector<int> copy(c.size());
    std::vector<std::map<Path, int>> piece(c.size());
    for (std::size_t u = 0; u < c.size(); ++u) {
        const auto& s = c.summands[u];
        copy[u] = r.add(s);
        for (const auto& x : R.paths_between(i, s.vertex)) {
            auto t = R.tridegree(x);
            piece[u][x] = r.add({i, s.coh + 1, s.g1 + t.d1 - 1, s.g3 + t.d3, (s.par + t.d2) & 1});
        }
    }
    for (std::size_t u = 0; u < c.size(); ++u) {
        for (const auto& [x, pu] : piece[u]) r.set(copy[u], pu, AlgebraElement::basis(unit_to_piece(R, i, x)));
        for (const auto& [v, y] : c.d[u]) {
            r.set(copy[u], copy[v], y);
            for (const auto& [x, pu] : piece[u]) {
                AlgebraElement xy = multiply(R, AlgebraElement::basis(x), y);
                for (const auto& [x2, k] : xy.terms) {
                    auto& e = r.d[pu][piece[v].at(x2)];
                    e.add({PathKind::Idem, i}, -k);
                }
            }
        }
    }
    prune(r);
    return r;
}

inline ProjComplex apply_rho(int e, const ProjComplex& c) {
    Algebra R(c.n);
    ProjComplex r = c;
    for (auto& s : r.summands) {
        if (e > 0) {
            if (s.vertex == c.n) s.g3 -= 1;
        } else {
            if (s.vertex == 1) s.g3 += 1;
        }
        s.vertex = wrap(s.vertex + e, c.n);
    }
    for (auto& row : r.d)
        for (auto& [v, x] : row) {
            AlgebraElement y;
            for (const auto& [p, k] : x.terms) y.add(R.shift(p, e), k);
            x = y;
        }
    return r;
}

}  // namespace detail

inline ProjComplex apply_generator(const Letter& g, const ProjComplex& c, bool check = true) {
    ProjComplex r;
    if (g.is_rho()) r = detail::apply_rho(g.exp, c);
    else if (g.exp > 0) r = detail::apply_sigma(g.index, c);
    else r = detail::apply_sigma_inv(g.index, c);
    if (check) validate(r);
    return r;
}

inline ProjComplex minimize(const ProjComplex& c);

inline ProjComplex apply_word(const BraidWord& w, const ProjComplex& c, bool minimize_steps = true,
                              bool check = true) {
    if (w.n != c.n) throw std::invalid_argument("word and complex have different n");
    ProjComplex r = c;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        r = apply_generator(*it, r, check);
        if (minimize_steps) r = minimize(r);
    }
    return r;
}

inline bool summand_less(const ShiftedProjective& a, const ShiftedProjective& b) { return a.key() < b.key(); }

// reorder summands by (coh, vertex, g1, g3), stable
inline ProjComplex canonical_order(const ProjComplex& c) {
    std::vector<int> idx(c.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return summand_less(c.summands[a], c.summands[b]); });
    std::vector<int> pos(c.size());
    for (std::size_t k = 0; k < idx.size(); ++k) pos[idx[k]] = static_cast<int>(k);
    ProjComplex r{c.n, {}, {}};
    for (int u : idx) r.add(c.summands[u]);
    for (std::size_t u = 0; u < c.size(); ++u)
        for (const auto& [v, x] : c.d[u]) r.set(pos[u], pos[v], x);
    return r;
}

inline ProjComplex minimize(const ProjComplex& c) {
    Algebra R(c.n);
    const std::size_t N = c.size();
    std::vector<std::map<int, AlgebraElement>> row = c.d;
    std::vector<std::set<int>> col(N);
    for (std::size_t u = 0; u < N; ++u)
        for (const auto& [v, x] : row[u]) col[v].insert(static_cast<int>(u));
    std::vector<char> alive(N, 1);
    std::vector<int> order(N);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return c.summands[a].coh < c.summands[b].coh; });

    auto unit_of = [](const AlgebraElement& x) -> std::int64_t {
        if (x.terms.size() != 1) return 0;
        const auto& [p, k] = *x.terms.begin();
        return p.kind == PathKind::Idem ? k : 0;
    };

    while (true) {
        int pu = -1, pv = -1;
        std::int64_t pc = 0;
        for (std::size_t oi = 0; oi < N && pu < 0; ++oi) {
            int u = order[oi];
            if (!alive[u]) continue;
            for (const auto& [v, x] : row[u]) {
                std::int64_t k = unit_of(x);
                if (k == 1 || k == -1) {
                    pu = u;
                    pv = v;
                    pc = k;
                    break;
                }
            }
        }
        if (pu < 0) break;
        // D'[x][y] = D[x][y] - D[x][v] * c^{-1} * D[u][y]
        std::vector<std::pair<int, AlgebraElement>> into_v, from_u;
        for (int x : col[pv])
            if (x != pu) into_v.emplace_back(x, row[x].at(pv));
        for (const auto& [y, z] : row[pu])
            if (y != pv) from_u.emplace_back(y, z);
        for (const auto& [x, a] : into_v)
            for (const auto& [y, b] : from_u) {
                AlgebraElement corr = multiply(R, a, b).scaled(-pc);
                if (corr.is_zero()) continue;
                auto& e = row[x][y];
                e += corr;
                if (e.is_zero()) {
                    row[x].erase(y);
                    col[y].erase(x);
                } else {
                    col[y].insert(x);
                }
            }
        for (int dead : {pu, pv}) {
            for (const auto& [y, z] : row[dead]) col[y].erase(dead);
            row[dead].clear();
            for (int x : col[dead]) row[x].erase(dead);
            col[dead].clear();
            alive[dead] = 0;
        }
    }

    ProjComplex r{c.n, {}, {}};
    std::vector<int> pos(N, -1);
    for (std::size_t u = 0; u < N; ++u)
        if (alive[u]) pos[u] = r.add(c.summands[u]);
    for (std::size_t u = 0; u < N; ++u) {
        if (!alive[u]) continue;
        for (const auto& [v, x] : row[u]) {
            for (const auto& [p, k] : x.terms)
                if (p.kind == PathKind::Idem)
                    throw InvariantViolation("non-unit idempotent coefficient " + std::to_string(k) +
                                             " survives minimization");
            r.set(pos[u], pos[v], x);
        }
    }
    return canonical_order(r);
}

// ---- Hom into a complex ----

struct TorsionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// diagonal of a Smith-type reduction: the nonzero pivots (their product structure is irrelevant here)
inline std::vector<BigInt> smith_diagonal(std::vector<std::vector<BigInt>> a) {
    std::vector<BigInt> diag;
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        std::size_t bi = rows, bj = cols;
        BigInt best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (best == 0 || abs(a[i][j]) < best)) {
                    best = abs(a[i][j]);
                    bi = i;
                    bj = j;
                }
        if (best == 0) break;
        std::swap(a[t], a[bi]);
        for (auto& r : a) std::swap(r[t], r[bj]);
        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (a[i][t] == 0) continue;
            BigInt q = a[i][t] / a[t][t];
            for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
            if (a[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (a[t][j] == 0) continue;
            BigInt q = a[t][j] / a[t][t];
            for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
            if (a[t][j] != 0) clean = false;
        }
        if (!clean) continue;
        diag.push_back(abs(a[t][t]));
        ++t;
    }
    return diag;
}

}  // namespace detail

inline LaurentPoly hom_poincare(int k, const ProjComplex& c) {
    Algebra R(c.n);
    if (k < 1 || k > c.n) throw std::invalid_argument("vertex out of range");
    struct Gen {
        int u;
        Path x;
        int coh, s2, s3;
    };
    std::vector<Gen> gens;
    std::map<std::pair<int, Path>, int> gen_index;
    for (std::size_t u = 0; u < c.size(); ++u) {
        const auto& s = c.summands[u];
        for (const auto& x : R.paths_between(k, s.vertex)) {
            auto t = R.tridegree(x);
            gen_index[{static_cast<int>(u), x}] = static_cast<int>(gens.size());
            gens.push_back({static_cast<int>(u), x, s.coh, s.g1 + t.d1, s.g3 + t.d3});
        }
    }
    // group by internal degree, then by coh
    std::map<std::pair<int, int>, std::map<int, std::vector<int>>> blocks;
    for (std::size_t g = 0; g < gens.size(); ++g) blocks[{gens[g].s2, gens[g].s3}][gens[g].coh].push_back(static_cast<int>(g));

    LaurentPoly out(vars_q());
    for (const auto& [deg, levels] : blocks) {
        std::map<int, std::size_t> rank_out;
        for (const auto& [m, src] : levels) {
            auto nit = levels.find(m + 1);
            if (nit == levels.end()) continue;
            const auto& dst = nit->second;
            std::map<int, std::size_t> col;
            for (std::size_t j = 0; j < dst.size(); ++j) col[dst[j]] = j;
            std::vector<std::vector<BigInt>> mat(src.size(), std::vector<BigInt>(dst.size(), 0));
            for (std::size_t i = 0; i < src.size(); ++i) {
                const Gen& g = gens[src[i]];
                for (const auto& [w, y] : c.d[g.u]) {
                    AlgebraElement img = multiply(R, AlgebraElement::basis(g.x), y);
                    for (const auto& [p, kk] : img.terms) {
                        int h = gen_index.at({w, p});
                        auto cit = col.find(h);
                        if (cit == col.end()) throw InvariantViolation("hom differential leaves its degree block");
                        mat[i][cit->second] += kk;
                    }
                }
            }
            auto diag = detail::smith_diagonal(std::move(mat));
            for (const auto& dv : diag)
                if (dv != 1)
                    throw TorsionError("torsion Z/" + dv.str() + " in Hom(P_" + std::to_string(k) + ", -)");
            rank_out[m] = diag.size();
        }
        for (const auto& [m, src] : levels) {
            long long r = static_cast<long long>(src.size());
            if (rank_out.count(m)) r -= static_cast<long long>(rank_out[m]);
            if (rank_out.count(m - 1)) r -= static_cast<long long>(rank_out[m - 1]);
            if (r) out.add_term({m, deg.first, deg.second}, r);
        }
    }
    return out;
}

using KVector = std::vector<LaurentPoly>;

inline KVector k_class(const ProjComplex& c) {
    KVector v(c.n, LaurentPoly(vars_ts()));
    for (const auto& s : c.summands) v[s.vertex - 1].add_term({s.g1, s.g3}, ((s.coh + s.par) % 2 == 0) ? 1 : -1);
    return v;
}

// sorted (vertex, coh, g1, g3) list, parity dropped; with hom_table this is the isomorphism proxy
inline std::vector<ShiftedProjective> summand_multiset(const ProjComplex& c) {
    auto s = c.summands;
    for (auto& x : s) x.par = 0;
    std::sort(s.begin(), s.end(), summand_less);
    return s;
}

inline std::vector<LaurentPoly> hom_table(const ProjComplex& c) {
    std::vector<LaurentPoly> t;
    for (int k = 1; k <= c.n; ++k) t.push_back(hom_poincare(k, c));
    return t;
}


enum class VerdictKind { Identity, CentralPower, Nontrivial };

// certificate: a vertex i where F_w(P_i) is not P_i<-p>, with its minimal complex invariants
struct Verdict {
    VerdictKind kind = VerdictKind::Identity;
    int power = 0;
    int vertex = 0;
    std::vector<ShiftedProjective> summands;
    std::vector<LaurentPoly> homs;
};

// w acts trivially iff it is the identity; acting as <-p> on every P_i means w = rho^{np}
inline Verdict identify(const BraidWord& w) {
    std::optional<int> p;
    for (int i = 1; i <= w.n; ++i) {
        ProjComplex m = minimize(apply_word(w, projective(w.n, i)));
        const auto& s = m.summands;
        bool pure = s.size() == 1 && s[0].vertex == i && s[0].coh == 0 && s[0].g1 == 0;
        if (pure && (!p || *p == -s[0].g3)) {
            p = -s[0].g3;
            continue;
        }
        return {VerdictKind::Nontrivial, 0, i, summand_multiset(m), hom_table(m)};
    }
    if (*p == 0) return {VerdictKind::Identity, 0, 0, {}, {}};
    return {VerdictKind::CentralPower, *p, 0, {}, {}};
}

}  // namespace affzz
