#include <catch_amalgamated.hpp>

#include <affzz/algebra.hpp>

#include <set>

using namespace affzz;

namespace {

// independent model: a path is a vertex sequence; length <= 2, loops of both shapes identified,
// length-2 non-returning paths and length >= 3 paths vanish
struct Walk {
    std::vector<int> vs;
};

std::optional<std::vector<int>> normal(const std::vector<int>& vs, int n) {
    if (vs.size() > 3) return std::nullopt;
    if (vs.size() == 3) {
        if (vs[0] != vs[2]) return std::nullopt;
        return std::vector<int>{vs[0], wrap(vs[0] + 1, n), vs[0]};
    }
    return vs;
}

std::optional<std::vector<int>> concat_walk(const std::vector<int>& a, const std::vector<int>& b, int n) {
    if (a.back() != b.front()) return std::nullopt;
    std::vector<int> c = a;
    c.insert(c.end(), b.begin() + 1, b.end());
    return normal(c, n);
}

std::vector<int> walk_of(const Algebra& R, const Path& p) {
    switch (p.kind) {
        case PathKind::Idem: return {p.v};
        case PathKind::Loop: return {p.v, wrap(p.v + 1, R.n()), p.v};
        default: return {p.v, R.target(p)};
    }
}

}  // namespace

TEST_CASE("basis has rank 4n") {
    for (int n = 3; n <= 8; ++n) {
        Algebra R(n);
        auto b = R.basis();
        CHECK(b.size() == static_cast<std::size_t>(4 * n));
        CHECK(std::set<Path>(b.begin(), b.end()).size() == b.size());
    }
}

TEST_CASE("multiplication agrees with the vertex-sequence model") {
    for (int n = 3; n <= 8; ++n) {
        Algebra R(n);
        for (const auto& x : R.basis())
            for (const auto& y : R.basis()) {
                auto got = R.multiply(x, y);
                auto want = concat_walk(walk_of(R, x), walk_of(R, y), n);
                REQUIRE(got.has_value() == want.has_value());
                if (got) CHECK(walk_of(R, *got) == *want);
            }
    }
}

TEST_CASE("both factorizations of the loop agree") {
    Algebra R(5);
    for (int i = 1; i <= 5; ++i) {
        Path up{PathKind::Up, i}, down{PathKind::Down, i};
        Path back_down{PathKind::Down, wrap(i + 1, 5)}, back_up{PathKind::Up, wrap(i - 1, 5)};
        CHECK(R.multiply(up, back_down) == Path{PathKind::Loop, i});
        CHECK(R.multiply(down, back_up) == Path{PathKind::Loop, i});
        CHECK_FALSE(R.multiply(Path{PathKind::Loop, i}, Path{PathKind::Loop, i}).has_value());
    }
}

TEST_CASE("tridegrees") {
    for (int n : {3, 4, 7}) {
        Algebra R(n);
        CHECK(R.tridegree({PathKind::Loop, n}) == TriDegree{1, 0, 0});
        CHECK(R.tridegree({PathKind::Up, n}) == TriDegree{1, 1, 1});
        CHECK(R.tridegree({PathKind::Down, 1}) == TriDegree{0, 1, -1});
        CHECK(R.tridegree({PathKind::Up, 1}) == TriDegree{1, 1, 0});
        CHECK(R.tridegree({PathKind::Down, 2}) == TriDegree{0, 1, 0});
    }
}

TEST_CASE("degree additivity, associativity and unit for n = 3..8") {
    for (int n = 3; n <= 8; ++n) {
        Algebra R(n);
        auto B = R.basis();
        for (const auto& x : B)
            for (const auto& y : B) {
                auto xy = R.multiply(x, y);
                if (xy) {
                    auto a = R.tridegree(x), b = R.tridegree(y), c = R.tridegree(*xy);
                    CHECK(c.d1 == a.d1 + b.d1);
                    CHECK(c.d3 == a.d3 + b.d3);
                    CHECK(c.d2 == (a.d2 + b.d2) % 2);
                }
                for (const auto& z : B) {
                    auto l = xy ? R.multiply(*xy, z) : std::nullopt;
                    auto yz = R.multiply(y, z);
                    auto r = yz ? R.multiply(x, *yz) : std::nullopt;
                    CHECK(l == r);
                }
            }
        for (const auto& x : B) {
            AlgebraElement one;
            for (int i = 1; i <= n; ++i) one.add({PathKind::Idem, i}, 1);
            CHECK(multiply(R, one, AlgebraElement::basis(x)) == AlgebraElement::basis(x));
            CHECK(multiply(R, AlgebraElement::basis(x), one) == AlgebraElement::basis(x));
        }
    }
}

TEST_CASE("paths between vertices") {
    Algebra R(5);
    CHECK(R.paths_between(1, 1) == std::vector<Path>{{PathKind::Idem, 1}, {PathKind::Loop, 1}});
    CHECK(R.paths_between(1, 2) == std::vector<Path>{{PathKind::Up, 1}});
    CHECK(R.paths_between(1, 5) == std::vector<Path>{{PathKind::Down, 1}});
    CHECK(R.paths_between(1, 3).empty());
    // oracle: exhaustive enumeration of normal walks from i to j
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
            std::size_t count = 0;
            std::set<std::vector<int>> seen;
            std::vector<std::vector<int>> walks{{i}};
            for (int d : {-1, 1}) walks.push_back({i, wrap(i + d, 5)});
            for (int d : {-1, 1})
                for (int e : {-1, 1}) walks.push_back({i, wrap(i + d, 5), wrap(i + d + e, 5)});
            for (const auto& w : walks)
                if (auto nw = normal(w, 5); nw && nw->back() == j) seen.insert(*nw);
            count = seen.size();
            CHECK(R.paths_between(i, j).size() == count);
        }
}

TEST_CASE("path notation round-trips") {
    Algebra R(4);
    for (const auto& p : R.basis()) {
        auto e = AlgebraElement::basis(p, -2);
        CHECK(parse_element(R, to_string(R, e)) == e);
    }
    CHECK(R.name({PathKind::Loop, 4}) == "(4|1|4)");
    CHECK(parse_element(R, "(2|1|2)") == AlgebraElement::basis({PathKind::Loop, 2}));
    CHECK_THROWS(parse_element(R, "(1|3)"));
}
