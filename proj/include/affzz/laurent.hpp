#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace affzz {

using BigInt = boost::multiprecision::cpp_int;

struct VarSet {
    std::vector<std::string> names;

    int index_of(const std::string& v) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == v) return static_cast<int>(i);
        return -1;
    }
    std::size_t size() const { return names.size(); }
    bool operator==(const VarSet&) const = default;
};

inline const VarSet& vars_q() {
    static const VarSet v{{"q1", "q2", "q3"}};
    return v;
}
inline const VarSet& vars_ts() {
    static const VarSet v{{"t", "s"}};
    return v;
}
inline const VarSet& vars_tq() {
    static const VarSet v{{"t", "q"}};
    return v;
}

using Exponents = std::vector<int>;

class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(VarSet vs) : vars_(std::move(vs)) {}
    LaurentPoly(VarSet vs, const BigInt& c) : vars_(std::move(vs)) {
        if (c != 0) terms_[Exponents(vars_.size(), 0)] = c;
    }

    static LaurentPoly monomial(const VarSet& vs, Exponents e, const BigInt& c = 1) {
        if (e.size() != vs.size()) throw std::invalid_argument("exponent vector length mismatch");
        LaurentPoly p(vs);
        if (c != 0) p.terms_[std::move(e)] = c;
        return p;
    }
    static LaurentPoly var(const VarSet& vs, const std::string& name, int power = 1) {
        int i = vs.index_of(name);
        if (i < 0) throw std::invalid_argument("unknown variable " + name);
        Exponents e(vs.size(), 0);
        e[i] = power;
        return monomial(vs, std::move(e));
    }

    const VarSet& vars() const { return vars_; }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    BigInt coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    void add_term(const Exponents& e, const BigInt& c) {
        if (e.size() != vars_.size()) throw std::invalid_argument("exponent vector length mismatch");
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const {
        LaurentPoly r(vars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_same(b);
        LaurentPoly r(a.vars_);
        Exponents e(a.vars_.size());
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const BigInt& c) const {
        LaurentPoly r(vars_);
        if (c == 0) return r;
        for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
        return r;
    }

    // multiply by a monomial with exponent vector e
    LaurentPoly shifted(const Exponents& e) const {
        LaurentPoly r(vars_);
        Exponents f(vars_.size());
        for (const auto& [ea, c] : terms_) {
            for (std::size_t i = 0; i < f.size(); ++i) f[i] = ea[i] + e[i];
            r.terms_[f] = c;
        }
        return r;
    }

    // sum of coefficients times the value of each monomial at all variables = 1
    BigInt eval_at_one() const {
        BigInt s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    bool operator==(const LaurentPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    std::string to_string() const;
    static LaurentPoly parse(const std::string& text, const VarSet& vs);

private:
    void check_same(const LaurentPoly& o) const {
        if (!(vars_ == o.vars_)) throw std::invalid_argument("mismatched variable sets");
    }

    VarSet vars_;
    std::map<Exponents, BigInt> terms_;
};

inline LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
inline LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

// image of one variable: sign * monomial over the target variables
struct MonomialImage {
    int sign = 1;
    Exponents exps;
};

inline LaurentPoly lp_specialize(const LaurentPoly& p, const std::map<std::string, MonomialImage>& subst,
                                 const VarSet& target) {
    std::vector<const MonomialImage*> img;
    for (const auto& name : p.vars().names) {
        auto it = subst.find(name);
        if (it == subst.end()) throw std::invalid_argument("no substitution for variable " + name);
        if (it->second.exps.size() != target.size() || (it->second.sign != 1 && it->second.sign != -1))
            throw std::invalid_argument("bad substitution image for " + name);
        img.push_back(&it->second);
    }
    LaurentPoly r(target);
    Exponents f(target.size());
    for (const auto& [e, c] : p.terms()) {
        std::fill(f.begin(), f.end(), 0);
        int sign = 1;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::size_t j = 0; j < f.size(); ++j) f[j] += e[i] * img[i]->exps[j];
            if (img[i]->sign < 0 && (e[i] % 2 != 0)) sign = -sign;
        }
        r.add_term(f, sign < 0 ? BigInt(-c) : c);
    }
    return r;
}

inline std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool neg = c < 0;
        BigInt mag = neg ? BigInt(-c) : c;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_.names[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        std::string body;
        if (mono.empty()) body = mag.str();
        else if (mag == 1) body = mono;
        else body = mag.str() + "*" + mono;
        if (first) out += (neg ? "-" : "") + body;
        else out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

inline LaurentPoly LaurentPoly::parse(const std::string& text, const VarSet& vs) {
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("polynomial parse error at " + std::to_string(i) + ": " + msg);
    };
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&]() -> BigInt {
        std::size_t b = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (b == i) fail("expected integer");
        return BigInt(text.substr(b, i - b));
    };
    LaurentPoly r(vs);
    skip();
    if (text.substr(i) == "0") return r;
    bool any = false;
    while (true) {
        skip();
        if (i >= text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip();
        } else if (any) {
            fail("expected + or -");
        }
        BigInt coef = 1;
        Exponents e(vs.size(), 0);
        bool have_factor = false;
        while (true) {
            skip();
            if (i >= text.size()) break;
            if (std::isdigit(static_cast<unsigned char>(text[i]))) {
                coef *= read_int();
            } else if (std::isalpha(static_cast<unsigned char>(text[i]))) {
                std::size_t b = i;
                while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
                std::string name = text.substr(b, i - b);
                int vi = vs.index_of(name);
                if (vi < 0) fail("unknown variable " + name);
                skip();
                int pw = 1;
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    skip();
                    int s = 1;
                    if (i < text.size() && text[i] == '-') {
                        s = -1;
                        ++i;
                    }
                    pw = s * static_cast<int>(read_int());
                }
                e[vi] += pw;
            } else {
                fail(std::string("unexpected character '") + text[i] + "'");
            }
            have_factor = true;
            skip();
            if (i < text.size() && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!have_factor) fail("empty term");
        r.add_term(e, sign * coef);
        any = true;
    }
    if (!any) fail("empty polynomial");
    return r;
}

}  // namespace affzz
