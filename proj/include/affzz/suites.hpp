#pragma once

#include "complexes.hpp"
#include "curve_complex.hpp"
#include "io.hpp"
#include "linrep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace affzz {

struct SuiteConfig {
    std::vector<int> ns{3, 4, 5, 6};
    int maxlen = 3;
    std::uint64_t seed = 1;
    unsigned threads = 0;  // 0: hardware concurrency, capped by AFFZZ_THREADS
};

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::size_t torsion = 0;
    Json counterexample;  // first failing case in case order
};

inline unsigned worker_count(unsigned requested) {
    unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("AFFZZ_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && cap > 0) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return n;
}

// a case returns nullopt on success, a description of the failure otherwise
using SuiteCase = std::function<std::optional<Json>()>;

inline SuiteResult run_cases(const std::string& name, const std::vector<SuiteCase>& cases, unsigned threads) {
    std::vector<std::optional<Json>> out(cases.size());
    std::vector<char> torsion(cases.size(), 0);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cases.size();) {
            try {
                out[i] = cases[i]();
            } catch (const TorsionError& e) {
                torsion[i] = 1;
                out[i] = Json{{"error", "torsion"}, {"what", e.what()}};
            } catch (const std::exception& e) {
                out[i] = Json{{"error", "exception"}, {"what", e.what()}};
            }
        }
    };
    unsigned w = std::min<unsigned>(worker_count(threads), static_cast<unsigned>(std::max<std::size_t>(1, cases.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < w; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    SuiteResult r{name, true, cases.size(), 0, 0, nullptr};
    for (std::size_t i = 0; i < cases.size(); ++i) {
        r.torsion += torsion[i];
        if (!out[i]) continue;
        if (r.failures++ == 0) r.counterexample = *out[i];
        r.pass = false;
    }
    return r;
}

inline bool same_object(const ProjComplex& a, const ProjComplex& b) {
    return summand_multiset(a) == summand_multiset(b) && hom_table(a) == hom_table(b);
}

inline Json word_case(const BraidWord& w) { return {{"n", w.n}, {"word", to_string(w)}}; }

inline std::vector<std::string> suite_names() {
    return {"relations", "specialization", "inverse-functors", "decat", "homs-vs-itri", "central"};
}

namespace detail {

inline const std::vector<Rep>& all_reps() {
    static const std::vector<Rep> r{Rep::H, Rep::RH, Rep::AKS};
    return r;
}

inline void relations_cases(int n, std::vector<SuiteCase>& cases) {
    for (const auto& rel : relations(n)) {
        for (Rep rep : all_reps())
            cases.push_back([rel, rep]() -> std::optional<Json> {
                if (rep_matrix(rep, rel.lhs) == rep_matrix(rep, rel.rhs)) return std::nullopt;
                return Json{{"relation", rel.name}, {"n", rel.lhs.n}, {"rep", rep_name(rep)}};
            });
        for (int i = 1; i <= n; ++i)
            cases.push_back([rel, i, n]() -> std::optional<Json> {
                auto a = minimize(apply_word(rel.lhs, projective(n, i)));
                auto b = minimize(apply_word(rel.rhs, projective(n, i)));
                if (same_object(a, b)) return std::nullopt;
                return Json{{"relation", rel.name}, {"n", n}, {"object", "P_" + std::to_string(i)},
                            {"lhs", to_json(a)}, {"rhs", to_json(b)}};
            });
    }
}

inline void specialization_cases(int n, std::uint64_t seed, std::vector<SuiteCase>& cases) {
    std::mt19937_64 rng(seed * 1000003u + static_cast<std::uint64_t>(n));
    std::uniform_int_distribution<int> len(0, 10);
    for (int t = 0; t < 100; ++t) {
        BraidWord w = random_word(n, len(rng), rng);
        cases.push_back([w]() -> std::optional<Json> {
            if (check_specialization(w)) return std::nullopt;
            return word_case(w);
        });
    }
}

inline void inverse_cases(int n, std::vector<SuiteCase>& cases) {
    for (const auto& g : all_letters(n))
        for (int i = 1; i <= n; ++i)
            cases.push_back([g, i, n]() -> std::optional<Json> {
                BraidWord w{n, {g, g.inverse()}};
                auto m = minimize(apply_word(w, projective(n, i)));
                if (m.size() == 1 && summand_multiset(m) == summand_multiset(projective(n, i)))
                    return std::nullopt;
                return Json{{"n", n}, {"word", to_string(w)}, {"object", "P_" + std::to_string(i)}, {"result", to_json(m)}};
            });
    for (int i = 1; i <= n; ++i)
        cases.push_back([i, n]() -> std::optional<Json> {
            auto m = apply_word(power(BraidWord{n, {rho()}}, n), projective(n, i), false);
            if (summand_multiset(m) == summand_multiset(projective(n, i, 0, 0, -1)) && m.size() == 1) return std::nullopt;
            return Json{{"n", n}, {"word", "r^" + std::to_string(n)}, {"object", "P_" + std::to_string(i)},
                        {"result", to_json(m)}};
        });
}

inline void decat_cases(int n, std::uint64_t seed, std::vector<SuiteCase>& cases) {
    std::mt19937_64 rng(seed * 7919u + static_cast<std::uint64_t>(n));
    std::uniform_int_distribution<int> len(0, 8);
    for (int t = 0; t < 50; ++t) {
        BraidWord w = random_word(n, len(rng), rng);
        cases.push_back([w, n]() -> std::optional<Json> {
            auto M = rep_matrix(Rep::AKS, w);
            for (int i = 1; i <= n; ++i) {
                auto v = k_class(minimize(apply_word(w, projective(n, i))));
                for (int r = 0; r < n; ++r)
                    if (v[r] != M.m[r][i - 1]) {
                        Json j = word_case(w);
                        j["column"] = i;
                        j["row"] = r + 1;
                        j["k_class"] = v[r].to_string();
                        j["matrix"] = M.m[r][i - 1].to_string();
                        return j;
                    }
            }
            return std::nullopt;
        });
    }
}

inline std::optional<Json> dual_case(const BraidWord& w) {
    int n = w.n;
    for (int l = 1; l <= n; ++l) {
        auto curve = twist_word(w, basic_curve(n, l));
        auto F = minimize(apply_word(w, projective(n, l)));
        for (int k = 1; k <= n; ++k) {
            auto itri = trigraded_intersection_with_basic(k, curve);
            auto hom = hom_poincare(k, F);
            auto geo = geometric_intersection_with_basic(k, curve);
            if (itri == hom && BigInt(geo.twice) == itri.eval_at_one()) continue;
            Json j = word_case(w);
            j["k"] = k;
            j["l"] = l;
            j["itri"] = itri.to_string();
            j["hom"] = hom.to_string();
            j["geometric"] = geo.to_string();
            return j;
        }
    }
    return std::nullopt;
}

inline void dual_cases(int n, int maxlen, std::uint64_t seed, std::vector<SuiteCase>& cases) {
    for (const auto& w : all_words(n, maxlen)) cases.push_back([w] { return dual_case(w); });
    std::mt19937_64 rng(seed * 104729u + static_cast<std::uint64_t>(n));
    std::uniform_int_distribution<int> len(0, 6);
    for (int t = 0; t < 20; ++t) {
        BraidWord w = random_word(n, len(rng), rng);
        cases.push_back([w] { return dual_case(w); });
    }
}

inline void central_cases(int n, std::vector<SuiteCase>& cases) {
    BraidWord rn = power(BraidWord{n, {rho()}}, n);
    cases.push_back([rn]() -> std::optional<Json> {
        auto v = identify(rn);
        if (v.kind == VerdictKind::CentralPower && v.power == 1) return std::nullopt;
        return Json{{"n", rn.n}, {"word", to_string(rn)}, {"verdict", to_json(v)}};
    });
    for (int i = 1; i <= n; ++i) {
        BraidWord w = concat(concat(rn, BraidWord{n, {sigma(i)}}), concat(inverse(rn), BraidWord{n, {sigma(i, -1)}}));
        for (Rep rep : all_reps())
            cases.push_back([w, rep]() -> std::optional<Json> {
                if (rep_matrix(rep, w).m == identity_matrix(rep_vars(rep), rep_dim(rep, w.n))) return std::nullopt;
                Json j = word_case(w);
                j["rep"] = rep_name(rep);
                return j;
            });
        cases.push_back([w]() -> std::optional<Json> {
            auto v = identify(w);
            if (v.kind == VerdictKind::Identity) return std::nullopt;
            Json j = word_case(w);
            j["verdict"] = to_json(v);
            return j;
        });
    }
}

}  // namespace detail

inline SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
    std::vector<SuiteCase> cases;
    for (int n : cfg.ns) {
        check_n(n);
        if (name == "relations") detail::relations_cases(n, cases);
        else if (name == "specialization") detail::specialization_cases(n, cfg.seed, cases);
        else if (name == "inverse-functors") detail::inverse_cases(n, cases);
        else if (name == "decat") detail::decat_cases(n, cfg.seed, cases);
        else if (name == "homs-vs-itri") detail::dual_cases(n, cfg.maxlen, cfg.seed, cases);
        else if (name == "central") detail::central_cases(n, cases);
        else throw std::invalid_argument("unknown suite " + name);
    }
    return run_cases(name, cases, cfg.threads);
}

inline Json to_json(const SuiteResult& r) {
    Json j{{"suite", r.name}, {"result", r.pass ? "pass" : "fail"}, {"cases", r.cases}, {"failures", r.failures},
           {"torsion", r.torsion}};
    if (!r.pass) j["counterexample"] = r.counterexample;
    return j;
}

}  // namespace affzz
