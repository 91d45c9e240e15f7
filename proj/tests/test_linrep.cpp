#include <catch_amalgamated.hpp>

#include <affzz/linrep.hpp>

#include <random>

using namespace affzz;

namespace {

LaurentPoly P(Rep r, const char* s) { return LaurentPoly::parse(s, rep_vars(r)); }

PolyMatrix word_matrix(Rep r, const char* w, int n) { return rep_matrix(r, parse_word(w, n)).m; }

bool is_identity(const PolyMatrix& m) { return m == identity_matrix(m[0][0].vars(), static_cast<int>(m.size())); }

// matrix product written out with the relation applied by hand: sigma_i sigma_{i+1} sigma_i
bool braid_holds(const PolyMatrix& a, const PolyMatrix& b) {
    return mat_mul(mat_mul(a, b), a) == mat_mul(mat_mul(b, a), b);
}

}  // namespace

TEST_CASE("rotation matrices") {
    for (int n = 3; n <= 6; ++n) {
        auto rh = word_matrix(Rep::RH, "r", n);
        auto aks = word_matrix(Rep::AKS, "r", n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                bool sub = i == j + 1;
                bool corner = i == 0 && j == n - 1;
                LaurentPoly want_rh = corner ? LaurentPoly::monomial(vars_tq(), {n, 1}) : LaurentPoly(vars_tq(), sub ? 1 : 0);
                LaurentPoly want_aks = corner ? P(Rep::AKS, "s^-1") : LaurentPoly(vars_ts(), sub ? 1 : 0);
                CHECK(rh[i][j] == want_rh);
                CHECK(aks[i][j] == want_aks);
            }
    }
}

TEST_CASE("empty word and inverse pairs give the identity") {
    for (int n = 3; n <= 5; ++n)
        for (Rep r : {Rep::H, Rep::RH, Rep::AKS}) {
            CHECK(is_identity(rep_matrix(r, BraidWord{n, {}}).m));
            for (const auto& g : all_letters(n)) CHECK(is_identity(rep_matrix(r, BraidWord{n, {g, g.inverse()}}).m));
        }
    CHECK(is_identity(word_matrix(Rep::H, "s1 s1^-1", 4)));
}

TEST_CASE("displayed sigma_1 rows") {
    int n = 4;
    auto rh = word_matrix(Rep::RH, "s1", n);
    CHECK(rh[0][0] == P(Rep::RH, "-t"));
    CHECK(rh[0][1] == P(Rep::RH, "t"));
    CHECK(rh[0][2].is_zero());
    CHECK(rh[0][3] == P(Rep::RH, "t^4*q"));
    auto aks = word_matrix(Rep::AKS, "s1", n);
    CHECK(aks[0][3] == P(Rep::AKS, "s^-1"));
    auto h = word_matrix(Rep::H, "s2", n);
    CHECK(h[2][2].is_zero());
    CHECK(h[2][3] == P(Rep::H, "t"));
    CHECK(h[3][2] == P(Rep::H, "1"));
    CHECK(h[3][3] == P(Rep::H, "1 - t"));
}

TEST_CASE("determinants are unit monomials") {
    std::mt19937_64 rng(3);
    for (int n = 3; n <= 5; ++n)
        for (Rep r : {Rep::H, Rep::RH, Rep::AKS})
            for (int t = 0; t < 5; ++t) {
                auto det = determinant(rep_matrix(r, random_word(n, 4, rng)).m);
                REQUIRE(det.terms().size() == 1);
                auto c = det.terms().begin()->second;
                CHECK((c == 1 || c == -1));
            }
}

TEST_CASE("defining relations hold in every representation") {
    for (int n = 3; n <= 6; ++n)
        for (Rep r : {Rep::H, Rep::RH, Rep::AKS})
            for (const auto& rel : relations(n)) {
                INFO(rep_name(r) << " n=" << n << " " << rel.name);
                CHECK(rep_matrix(r, rel.lhs) == rep_matrix(r, rel.rhs));
            }
}

TEST_CASE("rho^n is central") {
    for (int n = 3; n <= 6; ++n)
        for (Rep r : {Rep::H, Rep::RH, Rep::AKS}) {
            auto rn = power(BraidWord{n, {rho()}}, n);
            for (int i = 1; i <= n; ++i) {
                auto conj = concat(concat(rn, BraidWord{n, {sigma(i)}}), inverse(rn));
                CHECK(rep_matrix(r, conj) == rep_matrix(r, BraidWord{n, {sigma(i)}}));
            }
        }
}

TEST_CASE("AKS specializes to RH") {
    CHECK(check_specialization(parse_word("r", 4)));
    CHECK(check_specialization(parse_word("s1", 4)));
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> len(0, 10);
    for (int n = 3; n <= 6; ++n)
        for (int t = 0; t < 100; ++t) {
            auto w = random_word(n, len(rng), rng);
            INFO(to_string(w));
            CHECK(check_specialization(w));
        }
}

TEST_CASE("the displayed AKS middle generators with -t break the braid relation") {
    for (int n = 4; n <= 6; ++n) {
        auto a = displayed_matrix(Rep::AKS, sigma(2), n);
        auto b = displayed_matrix(Rep::AKS, sigma(3), n);
        CHECK_FALSE(braid_holds(a, b));
        auto ua = generator_matrix(Rep::AKS, sigma(2), n);
        auto ub = generator_matrix(Rep::AKS, sigma(3), n);
        CHECK(braid_holds(ua, ub));
        CHECK(ua[1][2] == P(Rep::AKS, "t"));
        CHECK(a[1][2] == P(Rep::AKS, "-t"));
    }
}

TEST_CASE("stored sigma_0 squared matches rho times the inverse of sigma_1...sigma_{n-1}") {
    for (int n = 3; n <= 6; ++n) {
        BraidWord w{n, {rho()}};
        for (int i = n - 1; i >= 1; --i) w.letters.push_back(sigma(i, -1));
        CHECK(rep_matrix(Rep::H, w).m == h_sigma0_squared(n));
    }
}

TEST_CASE("matrix inverse") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 5; ++t) {
        auto m = rep_matrix(Rep::RH, random_word(4, 3, rng)).m;
        CHECK(is_identity(mat_mul(m, mat_inverse(m))));
    }
}
