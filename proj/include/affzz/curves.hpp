#pragma once

#include "algebra.hpp"
#include "braid.hpp"
#include "laurent.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace affzz {

// Curves on the disk with puncture 0 at the centre and punctures 1..n on a circle.
// Barrier d_k: ray from 0 to the boundary between punctures k and k+1.
// Auxiliary arc e_k: ray from puncture k out to the boundary.
// Region R_k: sector between d_{k-1} and d_k, cut along e_k.
// d_k^+ crosses from R_k to R_{k+1}; e_k^+ crosses e_k in the direction of increasing angle.

using Tri = std::array<int, 3>;

inline Tri operator+(const Tri& a, const Tri& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Tri operator-(const Tri& a) { return {-a[0], -a[1], -a[2]}; }

enum class Arc { D, E };

struct CurveLetter {
    Arc arc = Arc::D;
    int idx = 1;
    int dir = 1;
    int tag = -1;  // identity of a crossing carried through a twist, -1 for fresh letters
    Tri mu{0, 0, 0};

    bool same_letter(const CurveLetter& o) const { return arc == o.arc && idx == o.idx && dir == o.dir; }
    bool cancels(const CurveLetter& o) const { return arc == o.arc && idx == o.idx && dir == -o.dir; }
};

struct TrigradedCurve {
    int n = 3;
    int start = 1;
    int end = 2;
    std::vector<CurveLetter> word;
};

struct CrossingRecord {
    int barrier;
    Tri mu;
};

enum class SegmentType { T1, T1p, T2, T2p, T3, T3p };

inline std::string segment_type_name(SegmentType t) {
    switch (t) {
        case SegmentType::T1: return "1";
        case SegmentType::T1p: return "1'";
        case SegmentType::T2: return "2";
        case SegmentType::T2p: return "2'";
        case SegmentType::T3: return "3";
        case SegmentType::T3p: return "3'";
    }
    return {};
}

struct SegmentRecord {
    int sector;
    SegmentType type;
    int puncture = 0;  // types 3 and 3' only
};

// Orientation conventions fixed once against the categorical action.
struct CurveConventions {
    bool sigma_is_ccw = true;        // sigma_k acts by the counter-clockwise half twist
    bool outer_is_up = false;        // type 1 (outside the puncture) carries (k|k-1), type 1' carries (k-1|k)
    bool t2_source_outer = true;     // type 2: the outer crossing is the source of the loop
    bool t2p_source_outer = false;   // type 2': the inner crossing is the source of the loop
};

inline const CurveConventions& default_conventions() {
    static const CurveConventions c{};
    return c;
}

struct CurveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline CurveLetter dl(int k, int dir, Tri mu = {0, 0, 0}) { return {Arc::D, k, dir, -1, mu}; }
inline CurveLetter el(int k, int dir) { return {Arc::E, k, dir, -1, {0, 0, 0}}; }

// region after each prefix; throws on an inconsistent word
inline std::vector<int> regions(const TrigradedCurve& c) {
    int n = c.n;
    std::vector<int> reg{c.start};
    int r = c.start;
    for (const auto& l : c.word) {
        if (l.arc == Arc::E) {
            if (l.idx != r) throw CurveError("e-crossing outside its sector");
        } else if (l.dir > 0) {
            if (l.idx != r) throw CurveError("d-crossing from the wrong sector");
            r = wrap(r + 1, n);
        } else {
            if (wrap(l.idx + 1, n) != r) throw CurveError("d-crossing from the wrong sector");
            r = l.idx;
        }
        reg.push_back(r);
    }
    if (r != c.end) throw CurveError("curve does not end in the sector of its end puncture");
    return reg;
}

// free cancellation plus removal of e-crossings next to the endpoint punctures
inline TrigradedCurve reduce(TrigradedCurve c) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<CurveLetter> st;
        for (const auto& l : c.word) {
            if (!st.empty() && st.back().cancels(l)) {
                st.pop_back();
                changed = true;
            } else {
                st.push_back(l);
            }
        }
        std::size_t b = 0;
        while (b < st.size() && st[b].arc == Arc::E && st[b].idx == c.start) ++b;
        std::size_t e = st.size();
        while (e > b && st[e - 1].arc == Arc::E && st[e - 1].idx == c.end) --e;
        if (b > 0 || e < st.size()) changed = true;
        c.word.assign(st.begin() + static_cast<std::ptrdiff_t>(b), st.begin() + static_cast<std::ptrdiff_t>(e));
    }
    return c;
}

inline std::vector<int> d_positions(const TrigradedCurve& c) {
    std::vector<int> pos;
    for (std::size_t i = 0; i < c.word.size(); ++i)
        if (c.word[i].arc == Arc::D) pos.push_back(static_cast<int>(i));
    return pos;
}

inline std::vector<CrossingRecord> crossings(const TrigradedCurve& c) {
    std::vector<CrossingRecord> out;
    for (const auto& l : c.word)
        if (l.arc == Arc::D) out.push_back({l.idx, l.mu});
    return out;
}

// an essential segment between consecutive d-crossings, with the algebra element of its differential
struct SegmentInfo {
    int sector;
    SegmentType type;
    int first;   // position of the earlier d-letter in the word
    int second;  // position of the later d-letter
    bool first_is_source;
    Path element;
};

inline SegmentInfo essential_segment(const TrigradedCurve& c, int p, int q,
                                     const CurveConventions& conv = default_conventions()) {
    int n = c.n;
    const auto& A = c.word[p];
    const auto& B = c.word[q];
    int j = A.dir > 0 ? wrap(A.idx + 1, n) : A.idx;
    const CurveLetter* e = nullptr;
    for (int i = p + 1; i < q; ++i) {
        if (e) throw CurveError("two e-crossings inside one segment");
        e = &c.word[i];
    }
    SegmentInfo s{j, SegmentType::T1, p, q, true, {}};
    if (A.idx != B.idx) {
        bool outer = e != nullptr;
        s.type = outer ? SegmentType::T1 : SegmentType::T1p;
        bool first_is_lo = A.idx == wrap(j - 1, n);
        if (outer == conv.outer_is_up) {
            s.first_is_source = first_is_lo;
            s.element = {PathKind::Up, wrap(j - 1, n)};
        } else {
            s.first_is_source = !first_is_lo;
            s.element = {PathKind::Down, j};
        }
        return s;
    }
    if (!e) throw CurveError("bigon: segment returns to the same barrier without enclosing a puncture");
    bool first_outer;
    bool src_outer;
    if (A.idx == j) {
        s.type = SegmentType::T2;
        first_outer = e->dir < 0;
        src_outer = conv.t2_source_outer;
    } else {
        s.type = SegmentType::T2p;
        first_outer = e->dir > 0;
        src_outer = conv.t2p_source_outer;
    }
    s.first_is_source = first_outer == src_outer;
    s.element = {PathKind::Loop, A.idx};
    return s;
}

// index at the target of a differential component x, given the index at its source
inline Tri index_step(int n, const Tri& src, const Path& x, int direction) {
    Algebra R(n);
    auto t = R.tridegree(x);
    int sgn = direction;
    int coh = src[0] + n * src[2];
    int g1 = src[1] - n * src[2];
    int mu3 = src[2] + sgn * t.d3;
    coh += sgn;
    g1 -= sgn * t.d1;
    return {coh - n * mu3, g1 + n * mu3, mu3};
}

inline std::vector<SegmentRecord> segments(const TrigradedCurve& c,
                                           const CurveConventions& conv = default_conventions()) {
    std::vector<SegmentRecord> out;
    auto pos = d_positions(c);
    if (pos.empty()) return out;
    const auto& first = c.word[pos.front()];
    out.push_back({c.start, first.idx == c.start ? SegmentType::T3 : SegmentType::T3p, c.start});
    for (std::size_t i = 0; i + 1 < pos.size(); ++i) {
        auto s = essential_segment(c, pos[i], pos[i + 1], conv);
        out.push_back({s.sector, s.type, 0});
    }
    const auto& last = c.word[pos.back()];
    out.push_back({c.end, last.idx == c.end ? SegmentType::T3 : SegmentType::T3p, c.end});
    return out;
}

// recompute every index from the crossing at position anchor
inline void propagate_indices(TrigradedCurve& c, int anchor, const CurveConventions& conv = default_conventions()) {
    auto pos = d_positions(c);
    std::size_t a = 0;
    while (a < pos.size() && pos[a] != anchor) ++a;
    if (a == pos.size()) throw CurveError("anchor is not a d-crossing");
    for (std::size_t i = a; i + 1 < pos.size(); ++i) {
        auto s = essential_segment(c, pos[i], pos[i + 1], conv);
        c.word[pos[i + 1]].mu = index_step(c.n, c.word[pos[i]].mu, s.element, s.first_is_source ? 1 : -1);
    }
    for (std::size_t i = a; i > 0; --i) {
        auto s = essential_segment(c, pos[i - 1], pos[i], conv);
        c.word[pos[i - 1]].mu = index_step(c.n, c.word[pos[i]].mu, s.element, s.first_is_source ? -1 : 1);
    }
}

inline void validate_curve(const TrigradedCurve& c, const CurveConventions& conv = default_conventions()) {
    if (c.start < 1 || c.start > c.n || c.end < 1 || c.end > c.n || c.start == c.end)
        throw CurveError("endpoints must be distinct punctures in 1..n");
    regions(c);
    TrigradedCurve r = reduce(c);
    if (r.word.size() != c.word.size()) throw CurveError("curve is not in normal form");
    auto pos = d_positions(c);
    for (std::size_t i = 0; i + 1 < pos.size(); ++i) {
        auto s = essential_segment(c, pos[i], pos[i + 1], conv);
        Tri want = index_step(c.n, c.word[pos[i]].mu, s.element, s.first_is_source ? 1 : -1);
        if (want != c.word[pos[i + 1]].mu) throw CurveError("local indices violate the propagation rule");
    }
}

inline TrigradedCurve basic_curve(int n, int k) {
    check_n(n);
    return TrigradedCurve{n, k, wrap(k + 1, n), {dl(k, 1)}};
}

inline TrigradedCurve chi_shift(TrigradedCurve c, const Tri& r) {
    for (auto& l : c.word)
        if (l.arc == Arc::D) l.mu = l.mu + r;
    return c;
}

inline bool is_basic_shape(const TrigradedCurve& c, int k) {
    if (c.word.size() != 1 || c.word[0].arc != Arc::D || c.word[0].idx != k) return false;
    int k1 = wrap(k + 1, c.n);
    return (c.start == k && c.end == k1) || (c.start == k1 && c.end == k);
}

namespace detail {

inline void push_all(std::vector<CurveLetter>& out, std::initializer_list<CurveLetter> ls) {
    out.insert(out.end(), ls.begin(), ls.end());
}

// counter-clockwise half twist along b_k (ccw = true) or its inverse, as a substitution on the word
inline TrigradedCurve half_twist_word(const TrigradedCurve& c, int k, bool ccw) {
    int n = c.n;
    int k1 = wrap(k + 1, n);
    TrigradedCurve r{n, c.start, c.end, {}};
    auto& w = r.word;
    // start stub
    if (ccw) {
        if (c.start == k) {
            r.start = k1;
            push_all(w, {dl(k, -1), el(k, -1)});
        } else if (c.start == k1) {
            r.start = k;
            push_all(w, {dl(k, 1)});
        }
    } else {
        if (c.start == k) {
            r.start = k1;
            push_all(w, {dl(k, -1)});
        } else if (c.start == k1) {
            r.start = k;
            push_all(w, {dl(k, 1), el(k1, 1)});
        }
    }
    for (const auto& l : c.word) {
        if (l.arc == Arc::E && l.idx == k) {
            if (ccw) {
                push_all(w, {el(k, 1), dl(k, 1), el(k1, l.dir), dl(k, -1), el(k, -1)});
            } else {
                push_all(w, {dl(k, 1), el(k1, l.dir), dl(k, -1)});
            }
        } else if (l.arc == Arc::E && l.idx == k1) {
            if (ccw) {
                push_all(w, {dl(k, -1), el(k, l.dir), dl(k, 1)});
            } else if (l.dir > 0) {
                push_all(w, {el(k1, -1), dl(k, -1), el(k, 1), dl(k, 1), el(k1, 1)});
            } else {
                push_all(w, {el(k1, -1), dl(k, -1), el(k, -1), dl(k, 1), el(k1, 1)});
            }
        } else {
            w.push_back(l);
        }
    }
    // end stub
    if (ccw) {
        if (c.end == k) {
            r.end = k1;
            push_all(w, {el(k, 1), dl(k, 1)});
        } else if (c.end == k1) {
            r.end = k;
            push_all(w, {dl(k, -1)});
        }
    } else {
        if (c.end == k) {
            r.end = k1;
            push_all(w, {dl(k, 1)});
        } else if (c.end == k1) {
            r.end = k;
            push_all(w, {el(k1, -1), dl(k, -1)});
        }
    }
    return r;
}

inline TrigradedCurve rotate(const TrigradedCurve& c, int e) {
    int n = c.n;
    TrigradedCurve r{n, wrap(c.start + e, n), wrap(c.end + e, n), c.word};
    for (auto& l : r.word) {
        if (l.arc == Arc::D) {
            if (e > 0 && l.idx == n) l.mu = l.mu + Tri{-n, n, 1};
            if (e < 0 && l.idx == 1) l.mu = l.mu + Tri{n, -n, -1};
        }
        l.idx = wrap(l.idx + e, n);
    }
    return r;
}

}  // namespace detail

// action of one generator on a trigraded curve in normal form
inline TrigradedCurve twist(const Letter& g, const TrigradedCurve& c0, const CurveConventions& conv = default_conventions()) {
    TrigradedCurve c = reduce(c0);
    if (g.is_rho()) return detail::rotate(c, g.exp);
    int k = g.index;
    if (is_basic_shape(c, k)) {
        TrigradedCurve r = c;
        std::swap(r.start, r.end);
        r.word[0].dir = -r.word[0].dir;
        r.word[0].mu = r.word[0].mu + (g.exp > 0 ? Tri{-1, 1, 0} : Tri{1, -1, 0});
        // keep the letter direction consistent with the new endpoints
        r.word[0].dir = r.start == k ? 1 : -1;
        return r;
    }
    for (std::size_t i = 0; i < c.word.size(); ++i) c.word[i].tag = static_cast<int>(i);
    bool ccw = (g.exp > 0) == conv.sigma_is_ccw;
    TrigradedCurve r = reduce(detail::half_twist_word(c, k, ccw));
    int anchor = -1;
    for (std::size_t i = 0; i < r.word.size() && anchor < 0; ++i)
        if (r.word[i].arc == Arc::D && r.word[i].tag >= 0) anchor = static_cast<int>(i);
    if (anchor < 0) throw CurveError("no crossing survives the twist");
    std::vector<std::pair<int, Tri>> kept;
    for (std::size_t i = 0; i < r.word.size(); ++i)
        if (r.word[i].arc == Arc::D && r.word[i].tag >= 0) kept.emplace_back(static_cast<int>(i), r.word[i].mu);
    propagate_indices(r, anchor, conv);
    for (const auto& [i, mu] : kept)
        if (r.word[i].mu != mu) throw CurveError("twist moved the index of a fixed crossing");
    for (auto& l : r.word) l.tag = -1;
    return r;
}

// rightmost letter acts first
inline TrigradedCurve twist_word(const BraidWord& w, const TrigradedCurve& c,
                                 const CurveConventions& conv = default_conventions()) {
    TrigradedCurve r = reduce(c);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r = twist(*it, r, conv);
    return r;
}

inline TrigradedCurve reversed(const TrigradedCurve& c) {
    TrigradedCurve r{c.n, c.end, c.start, {}};
    for (auto it = c.word.rbegin(); it != c.word.rend(); ++it) {
        CurveLetter l = *it;
        l.dir = -l.dir;
        r.word.push_back(l);
    }
    return r;
}

// same normal form and indices, orientation ignored
inline bool equivalent(const TrigradedCurve& a, const TrigradedCurve& b) {
    auto eq = [](const TrigradedCurve& x, const TrigradedCurve& y) {
        if (x.n != y.n || x.start != y.start || x.end != y.end || x.word.size() != y.word.size()) return false;
        for (std::size_t i = 0; i < x.word.size(); ++i)
            if (!x.word[i].same_letter(y.word[i]) || x.word[i].mu != y.word[i].mu) return false;
        return true;
    };
    return eq(a, b) || eq(a, reversed(b));
}

inline std::string letter_text(const CurveLetter& l) {
    std::string s = (l.arc == Arc::D ? "d" : "e") + std::to_string(l.idx) + (l.dir > 0 ? "+" : "-");
    return s;
}

inline std::string to_string(const TrigradedCurve& c) {
    std::string s = std::to_string(c.start) + ":";
    for (const auto& l : c.word) {
        s += " " + letter_text(l);
        if (l.arc == Arc::D)
            s += "(" + std::to_string(l.mu[0]) + "," + std::to_string(l.mu[1]) + "," + std::to_string(l.mu[2]) + ")";
    }
    return s + " :" + std::to_string(c.end);
}


// ---- k-strings ----

enum class KFamily { I, II, IIp, III, IIIp, IV, IVp, V, Vp, VI };

inline std::string family_name(KFamily f) {
    switch (f) {
        case KFamily::I: return "I";
        case KFamily::II: return "II";
        case KFamily::IIp: return "II'";
        case KFamily::III: return "III";
        case KFamily::IIIp: return "III'";
        case KFamily::IV: return "IV";
        case KFamily::IVp: return "IV'";
        case KFamily::V: return "V";
        case KFamily::Vp: return "V'";
        case KFamily::VI: return "VI";
    }
    return {};
}

// piece: the component as a word; start/end are punctures, or 0 where it leaves through d_{k-1} or d_{k+1}
struct KString {
    int k = 1;
    KFamily family = KFamily::VI;
    int u = 0;
    Tri base{0, 0, 0};
    TrigradedCurve piece;
};

namespace detail {

inline std::vector<TrigradedCurve> k_pieces(const TrigradedCurve& c, int k) {
    int n = c.n;
    int k1 = wrap(k + 1, n);
    auto inside = [&](int r) { return r == k || r == k1; };
    auto reg = regions(c);
    std::vector<TrigradedCurve> out;
    std::optional<TrigradedCurve> cur;
    if (inside(reg[0])) cur = TrigradedCurve{n, c.start, 0, {}};
    for (std::size_t i = 0; i < c.word.size(); ++i) {
        bool a = inside(reg[i]), b = inside(reg[i + 1]);
        if (!a && b) cur = TrigradedCurve{n, 0, 0, {}};
        if (cur) cur->word.push_back(c.word[i]);
        if (a && !b) {
            out.push_back(*cur);
            cur.reset();
        }
    }
    if (cur) {
        cur->end = c.end;
        out.push_back(*cur);
    }
    return out;
}

// 'P' puncture, 'L' through d_{k-1}, 'R' through d_{k+1}
inline char end_kind(const TrigradedCurve& p, bool at_start, int k) {
    if ((at_start ? p.start : p.end) != 0) return 'P';
    const auto& l = at_start ? p.word.front() : p.word.back();
    return l.idx == wrap(k - 1, p.n) ? 'L' : 'R';
}

inline bool same_shape(const TrigradedCurve& a, const TrigradedCurve& b) {
    if (a.start != b.start || a.end != b.end || a.word.size() != b.word.size()) return false;
    for (std::size_t i = 0; i < a.word.size(); ++i)
        if (!a.word[i].same_letter(b.word[i])) return false;
    return true;
}

inline TrigradedCurve string_twist(const TrigradedCurve& p, int k, bool ccw) {
    return reduce(half_twist_word(p, k, ccw));
}

inline TrigradedCurve shape(int n, int start, int end, std::vector<CurveLetter> w) {
    return TrigradedCurve{n, start, end, std::move(w)};
}

}  // namespace detail

// representatives of winding zero, oriented as the classification expects
inline TrigradedCurve k_string_pattern(int n, int k, KFamily f) {
    int k0 = wrap(k - 1, n), k1 = wrap(k + 1, n);
    using detail::shape;
    switch (f) {
        case KFamily::I: return shape(n, 0, 0, {dl(k0, 1), dl(k, 1), el(k1, 1), dl(k1, 1)});
        case KFamily::IV: return shape(n, 0, 0, {dl(k0, 1), dl(k, 1), dl(k1, 1)});
        case KFamily::IVp: return shape(n, 0, 0, {dl(k0, 1), el(k, 1), dl(k, 1), el(k1, 1), dl(k1, 1)});
        case KFamily::II: return shape(n, 0, 0, {dl(k0, 1), el(k, 1), dl(k0, -1)});
        case KFamily::V: return shape(n, 0, 0, {dl(k0, 1), el(k, 1), dl(k, 1), el(k1, 1), dl(k, -1), dl(k0, -1)});
        case KFamily::IIp: return shape(n, 0, 0, {dl(k1, -1), el(k1, -1), dl(k1, 1)});
        case KFamily::Vp:
            return shape(n, 0, 0, {dl(k1, -1), el(k1, -1), dl(k, -1), el(k, -1), dl(k, 1), dl(k1, 1)});
        case KFamily::III: return shape(n, k, 0, {dl(k0, -1)});
        case KFamily::IIIp: return shape(n, k1, 0, {dl(k1, 1)});
        case KFamily::VI: return shape(n, k, k1, {dl(k, 1)});
    }
    return {};
}

// u counts applications of the twist for sigma_k to the pattern; base is the index of the reference crossing
inline std::vector<KString> k_strings(const TrigradedCurve& c0, int k, const CurveConventions& conv = default_conventions()) {
    TrigradedCurve c = reduce(c0);
    int n = c.n;
    bool ccw = conv.sigma_is_ccw;
    std::vector<KString> out;
    for (auto p : detail::k_pieces(c, k)) {
        char a = detail::end_kind(p, true, k), b = detail::end_kind(p, false, k);
        if ((a == 'R' && b == 'L') || (a != 'P' && b == 'P')) {
            p = reversed(p);
            std::swap(a, b);
        }
        KString s{k, KFamily::VI, 0, {0, 0, 0}, p};
        if (a == 'P' && b == 'P') {
            if (p.word.size() != 1 || p.word[0].arc != Arc::D) throw CurveError("unclassifiable k-string");
            s.base = p.word[0].mu;
            out.push_back(s);
            continue;
        }
        std::vector<KFamily> fixed, orbit;
        if (a == 'L' && b == 'R') fixed = {KFamily::IV, KFamily::IVp}, orbit = {KFamily::I};
        else if (a == 'L' && b == 'L') fixed = {KFamily::V}, orbit = {KFamily::II};
        else if (a == 'R' && b == 'R') fixed = {KFamily::Vp}, orbit = {KFamily::IIp};
        else if (b == 'L') orbit = {KFamily::III};
        else orbit = {KFamily::IIIp};
        std::vector<TrigradedCurve> forms{p};
        if (a == b) forms.push_back(reversed(p));
        bool found = false;
        for (auto f : fixed)
            for (const auto& q : forms)
                if (!found && detail::same_shape(q, k_string_pattern(n, k, f))) {
                    s.family = f;
                    s.piece = q;
                    found = true;
                }
        int bound = static_cast<int>(p.word.size()) + 4;
        for (auto f : orbit) {
            auto pat = k_string_pattern(n, k, f);
            for (const auto& q : forms) {
                TrigradedCurve back = q, fwd = q;
                for (int v = 0; v <= bound && !found; ++v) {
                    if (detail::same_shape(back, pat)) {
                        s.family = f, s.u = v, s.piece = q, found = true;
                    } else if (detail::same_shape(fwd, pat)) {
                        s.family = f, s.u = -v, s.piece = q, found = true;
                    }
                    back = detail::string_twist(back, k, !ccw);
                    fwd = detail::string_twist(fwd, k, ccw);
                }
            }
        }
        if (!found) throw CurveError("unclassifiable k-string");
        const auto& w = s.piece.word;
        bool first = s.family != KFamily::II && s.family != KFamily::III && s.family != KFamily::IIIp;
        s.base = first ? w.front().mu : w.back().mu;
        out.push_back(s);
    }
    return out;
}

// contribution of a winding-zero string with base index (0,0,0)
inline LaurentPoly k_string_table(int n, int k, KFamily f) {
    const VarSet& vs = vars_q();
    LaurentPoly v(vs);
    switch (f) {
        case KFamily::I:
        case KFamily::II: v = LaurentPoly::parse("1 + q1*q2^-1", vs); break;
        case KFamily::IIp: v = LaurentPoly::parse("q1 + q2", vs); break;
        case KFamily::III: v = LaurentPoly(vs, 1); break;
        case KFamily::IIIp: v = LaurentPoly::parse("q2", vs); break;
        case KFamily::VI: return LaurentPoly::parse("1 + q2", vs);
        default: return v;
    }
    if (k == 1 && (f == KFamily::I || f == KFamily::II || f == KFamily::III)) v = v.shifted({0, 0, -1});
    if (k == n && (f == KFamily::IIp || f == KFamily::IIIp)) v = v.shifted({0, 0, 1});
    return v;
}

inline LaurentPoly k_string_contribution(int n, const KString& s) {
    const Tri& r = s.base;
    return k_string_table(n, s.k, s.family).shifted({r[0] + n * r[2] - s.u, r[1] - n * r[2] + s.u, -r[2]});
}

// exact half-integer
struct HalfInteger {
    long long twice = 0;
    bool operator==(const HalfInteger&) const = default;
    std::string to_string() const {
        return twice % 2 == 0 ? std::to_string(twice / 2) : std::to_string(twice) + "/2";
    }
};

inline HalfInteger geometric_intersection_with_basic(int k, const TrigradedCurve& c,
                                                     const CurveConventions& conv = default_conventions()) {
    HalfInteger h;
    for (const auto& s : k_strings(c, k, conv)) {
        switch (s.family) {
            case KFamily::I:
            case KFamily::II:
            case KFamily::IIp: h.twice += 2; break;
            case KFamily::III:
            case KFamily::IIIp: h.twice += 1; break;
            case KFamily::VI: h.twice += 2; break;
            default: break;
        }
    }
    return h;
}

inline LaurentPoly trigraded_intersection_with_basic(int k, const TrigradedCurve& c,
                                                     const CurveConventions& conv = default_conventions()) {
    LaurentPoly p(vars_q());
    for (const auto& s : k_strings(c, k, conv)) p += k_string_contribution(c.n, s);
    return p;
}

}  // namespace affzz
