#pragma once

#include "braid.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace affzz {

enum class PathKind { Idem, Up, Down, Loop };

// Up at v: v -> v+1, Down at v: v -> v-1 (indices cyclic in 1..n)
struct Path {
    PathKind kind = PathKind::Idem;
    int v = 1;

    auto operator<=>(const Path&) const = default;
};

struct TriDegree {
    int d1 = 0;
    int d2 = 0;
    int d3 = 0;
    bool operator==(const TriDegree&) const = default;
};

class Algebra {
public:
    explicit Algebra(int n) : n_(n) { check_n(n); }

    int n() const { return n_; }

    int source(const Path& p) const { return p.v; }
    int target(const Path& p) const {
        switch (p.kind) {
            case PathKind::Up: return wrap(p.v + 1, n_);
            case PathKind::Down: return wrap(p.v - 1, n_);
            default: return p.v;
        }
    }

    TriDegree tridegree(const Path& p) const {
        switch (p.kind) {
            case PathKind::Idem: return {0, 0, 0};
            case PathKind::Loop: return {1, 0, 0};
            case PathKind::Up: return {1, 1, p.v == n_ ? 1 : 0};
            case PathKind::Down: return {0, 1, p.v == 1 ? -1 : 0};
        }
        return {};
    }

    // path concatenation, x first then y
    std::optional<Path> multiply(const Path& x, const Path& y) const {
        if (target(x) != source(y)) return std::nullopt;
        if (x.kind == PathKind::Idem) return y;
        if (y.kind == PathKind::Idem) return x;
        if (x.kind == PathKind::Up && y.kind == PathKind::Down) return Path{PathKind::Loop, x.v};
        if (x.kind == PathKind::Down && y.kind == PathKind::Up) return Path{PathKind::Loop, x.v};
        return std::nullopt;
    }

    // basis of e_i R e_j: paths from i to j
    std::vector<Path> paths_between(int i, int j) const {
        std::vector<Path> out;
        if (i == j) {
            out.push_back({PathKind::Idem, i});
            out.push_back({PathKind::Loop, i});
        }
        if (wrap(i + 1, n_) == j) out.push_back({PathKind::Up, i});
        if (wrap(i - 1, n_) == j) out.push_back({PathKind::Down, i});
        return out;
    }

    std::vector<Path> basis() const {
        std::vector<Path> out;
        for (int i = 1; i <= n_; ++i)
            for (auto k : {PathKind::Idem, PathKind::Up, PathKind::Down, PathKind::Loop}) out.push_back({k, i});
        return out;
    }

    // vertex relabelling i -> i+s
    Path shift(const Path& p, int s) const { return {p.kind, wrap(p.v + s, n_)}; }

    std::string name(const Path& p) const {
        auto s = [](int a) { return std::to_string(a); };
        switch (p.kind) {
            case PathKind::Idem: return "(" + s(p.v) + ")";
            case PathKind::Up: return "(" + s(p.v) + "|" + s(target(p)) + ")";
            case PathKind::Down: return "(" + s(p.v) + "|" + s(target(p)) + ")";
            case PathKind::Loop: return "(" + s(p.v) + "|" + s(wrap(p.v + 1, n_)) + "|" + s(p.v) + ")";
        }
        return {};
    }

private:
    int n_;
};

// integer combination of basis paths
struct AlgebraElement {
    std::map<Path, std::int64_t> terms;

    static AlgebraElement basis(const Path& p, std::int64_t c = 1) {
        AlgebraElement e;
        if (c != 0) e.terms[p] = c;
        return e;
    }
    bool is_zero() const { return terms.empty(); }
    void add(const Path& p, std::int64_t c) {
        if (c == 0) return;
        auto [it, fresh] = terms.try_emplace(p, c);
        if (!fresh && (it->second += c) == 0) terms.erase(it);
    }
    AlgebraElement& operator+=(const AlgebraElement& o) {
        for (const auto& [p, c] : o.terms) add(p, c);
        return *this;
    }
    AlgebraElement scaled(std::int64_t c) const {
        AlgebraElement r;
        if (c == 0) return r;
        for (const auto& [p, k] : terms) r.terms[p] = k * c;
        return r;
    }
    std::int64_t coeff(const Path& p) const {
        auto it = terms.find(p);
        return it == terms.end() ? 0 : it->second;
    }
    bool operator==(const AlgebraElement&) const = default;
};

inline AlgebraElement multiply(const Algebra& R, const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement r;
    for (const auto& [p, a] : x.terms)
        for (const auto& [q, b] : y.terms)
            if (auto pq = R.multiply(p, q)) r.add(*pq, a * b);
    return r;
}

inline std::string to_string(const Algebra& R, const AlgebraElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : x.terms) {
        std::string body = R.name(p);
        if (c == 1) out += first ? body : " + " + body;
        else if (c == -1) out += first ? "-" + body : " - " + body;
        else if (c < 0) out += (first ? "-" : " - ") + std::to_string(-c) + "*" + body;
        else out += (first ? "" : " + ") + std::to_string(c) + "*" + body;
        first = false;
    }
    return out;
}

// accepts the output of to_string, e.g. "(1|2)", "-(3)", "2*(1|2|1)"
inline AlgebraElement parse_element(const Algebra& R, const std::string& text) {
    AlgebraElement r;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && text[i] == ' ') ++i;
    };
    skip();
    if (text.substr(i) == "0") return r;
    while (true) {
        skip();
        if (i >= text.size()) break;
        std::int64_t sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip();
        }
        std::int64_t c = 1;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::size_t b = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            c = std::stoll(text.substr(b, i - b));
            if (i >= text.size() || text[i] != '*') throw ParseError("expected '*'", i);
            ++i;
        }
        if (i >= text.size() || text[i] != '(') throw ParseError("expected '('", i);
        std::size_t close = text.find(')', i);
        if (close == std::string::npos) throw ParseError("unterminated path", i);
        std::vector<int> vs;
        std::size_t j = i + 1;
        while (j < close) {
            std::size_t b = j;
            while (j < close && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (b == j) throw ParseError("bad vertex", j);
            vs.push_back(std::stoi(text.substr(b, j - b)));
            if (j < close && text[j] == '|') ++j;
        }
        int n = R.n();
        for (int v : vs)
            if (v < 1 || v > n) throw ParseError("vertex out of range", i);
        Path p;
        if (vs.size() == 1) p = {PathKind::Idem, vs[0]};
        else if (vs.size() == 2 && wrap(vs[0] + 1, n) == vs[1]) p = {PathKind::Up, vs[0]};
        else if (vs.size() == 2 && wrap(vs[0] - 1, n) == vs[1]) p = {PathKind::Down, vs[0]};
        else if (vs.size() == 3 && vs[0] == vs[2] && (wrap(vs[0] + 1, n) == vs[1] || wrap(vs[0] - 1, n) == vs[1]))
            p = {PathKind::Loop, vs[0]};
        else throw ParseError("not a path of the cyclic quiver", i);
        r.add(p, sign * c);
        i = close + 1;
    }
    return r;
}

}  // namespace affzz
