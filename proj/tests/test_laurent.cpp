#include <catch_amalgamated.hpp>

#include <affzz/laurent.hpp>

#include <random>

using namespace affzz;

namespace {

LaurentPoly P(const std::string& s) { return LaurentPoly::parse(s, vars_q()); }

// dense reference: exponents in [-4,4]^3 flattened into an array
using Dense = std::map<std::vector<int>, long long>;

Dense dense(const LaurentPoly& p) {
    Dense d;
    for (const auto& [e, c] : p.terms()) d[e] = static_cast<long long>(c);
    return d;
}

LaurentPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> ex(-2, 2), co(-3, 3), nt(0, 4);
    LaurentPoly p(vars_q());
    int k = nt(rng);
    for (int i = 0; i < k; ++i) p.add_term({ex(rng), ex(rng), ex(rng)}, co(rng));
    return p;
}

}  // namespace

TEST_CASE("addition cancels and merges term maps") {
    CHECK((P("1 + q2") + P("-q2")) == P("1"));
    CHECK((LaurentPoly(vars_q()) + P("q1 + q2")) == P("q1 + q2"));
    // oracle: merge of the two term maps
    Dense a = dense(P("1 + q1*q2^-1")), b = dense(P("q1 + q2"));
    for (const auto& [e, c] : b) a[e] += c;
    CHECK(dense(P("1 + q1*q2^-1") + P("q1 + q2")) == a);
}

TEST_CASE("multiplication") {
    CHECK(P("q1") * P("q1^-1") == P("1"));
    CHECK((P("1 + q2") * LaurentPoly(vars_q())).is_zero());
    LaurentPoly entry = P("1 + q1*q2^-1");
    LaurentPoly scale = P("q1*q2^-1") * P("q1*q2^-1");
    CHECK(scale * entry == P("q1^2*q2^-2 + q1^3*q2^-3"));
}

TEST_CASE("mismatched variable sets are rejected") {
    LaurentPoly a = LaurentPoly::var(vars_ts(), "t");
    CHECK_THROWS(a + P("q1"));
    CHECK_THROWS(a * P("q1"));
}

TEST_CASE("specialization") {
    int n = 4;
    std::map<std::string, MonomialImage> sub{{"t", {1, {1, 0}}}, {"s", {1, {-n, -1}}}};
    LaurentPoly sinv = LaurentPoly::var(vars_ts(), "s", -1);
    CHECK(lp_specialize(sinv, sub, vars_tq()) == LaurentPoly::parse("q*t^4", vars_tq()));

    std::map<std::string, MonomialImage> id{{"q1", {1, {1, 0, 0}}}, {"q2", {1, {0, 1, 0}}}, {"q3", {1, {0, 0, 1}}}};
    LaurentPoly p = P("3*q1^-2*q3 - q2 + 7");
    CHECK(lp_specialize(p, id, vars_q()) == p);

    VarSet none{{}};
    std::map<std::string, MonomialImage> ones{{"q1", {1, {}}}, {"q2", {1, {}}}, {"q3", {1, {}}}};
    CHECK(lp_specialize(P("1 + q1*q2^-1"), ones, none) == LaurentPoly(none, 2));

    std::map<std::string, MonomialImage> partial{{"q1", {1, {1, 0, 0}}}};
    CHECK_THROWS(lp_specialize(p, partial, vars_q()));

    std::map<std::string, MonomialImage> neg{{"q1", {-1, {1, 0, 0}}}, {"q2", {1, {0, 1, 0}}}, {"q3", {1, {0, 0, 1}}}};
    CHECK(lp_specialize(P("q1 + q1^2 + q1^-3"), neg, vars_q()) == P("-q1 + q1^2 - q1^-3"));
}

TEST_CASE("ring axioms and specialization homomorphism on random polynomials") {
    std::mt19937_64 rng(7);
    std::map<std::string, MonomialImage> sub{{"q1", {1, {1, -1}}}, {"q2", {-1, {0, 2}}}, {"q3", {1, {3, 1}}}};
    for (int it = 0; it < 200; ++it) {
        auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(lp_specialize(a * b, sub, vars_ts()) == lp_specialize(a, sub, vars_ts()) * lp_specialize(b, sub, vars_ts()));
    }
}

TEST_CASE("canonical printing round-trips") {
    CHECK(P("q1*q2^-1 + 1").to_string() == "1 + q1*q2^-1");
    CHECK(P("  -q3^-1 ").to_string() == "-q3^-1");
    CHECK(P("0").to_string() == "0");
    CHECK(P("2*q1 - 3 + q2*q1").to_string() == "-3 + 2*q1 + q1*q2");
    std::mt19937_64 rng(11);
    for (int it = 0; it < 200; ++it) {
        auto a = random_poly(rng);
        CHECK(P(a.to_string()) == a);
    }
    CHECK_THROWS(P("q4"));
    CHECK_THROWS(P("1 +"));
}
