#pragma once

#include <cctype>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace affzz {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

inline int wrap(int i, int n) { return ((i - 1) % n + n) % n + 1; }

// sigma_index == 0 means rho
struct Letter {
    int index = 0;
    int exp = 1;

    bool is_rho() const { return index == 0; }
    Letter inverse() const { return {index, -exp}; }
    bool operator==(const Letter&) const = default;
};

inline Letter sigma(int i, int e = 1) { return {i, e}; }
inline Letter rho(int e = 1) { return {0, e}; }

struct BraidWord {
    int n = 3;
    std::vector<Letter> letters;

    bool operator==(const BraidWord&) const = default;
    std::size_t size() const { return letters.size(); }
};

inline void check_n(int n) {
    if (n < 3) throw std::invalid_argument("n must be at least 3");
}

inline std::string letter_to_string(const Letter& l) {
    std::string s = l.is_rho() ? "r" : "s" + std::to_string(l.index);
    if (l.exp < 0) s += "^-1";
    return s;
}

inline std::string to_string(const BraidWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += ' ';
        out += letter_to_string(w.letters[i]);
    }
    return out;
}

inline BraidWord parse_word(const std::string& text, int n) {
    check_n(n);
    BraidWord w{n, {}};
    std::size_t i = 0;
    while (true) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size()) break;
        std::size_t start = i;
        Letter l;
        if (text[i] == 'r') {
            ++i;
            l = rho();
        } else if (text[i] == 's') {
            ++i;
            std::size_t b = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (b == i) throw ParseError("expected generator index", i);
            int idx = std::stoi(text.substr(b, i - b));
            if (idx < 1 || idx > n) throw ParseError("generator index out of range 1.." + std::to_string(n), b);
            l = sigma(idx);
        } else {
            throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
        }
        if (i < text.size() && text[i] == '^') {
            if (text.compare(i, 3, "^-1") == 0) {
                l.exp = -1;
                i += 3;
            } else if (text.compare(i, 2, "^1") == 0) {
                i += 2;
            } else {
                throw ParseError("malformed exponent", i);
            }
        }
        if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
            throw ParseError("malformed token", start);
        w.letters.push_back(l);
    }
    return w;
}

inline BraidWord free_reduce(const BraidWord& w) {
    BraidWord r{w.n, {}};
    for (const auto& l : w.letters) {
        if (!r.letters.empty() && r.letters.back() == l.inverse()) r.letters.pop_back();
        else r.letters.push_back(l);
    }
    return r;
}

inline BraidWord inverse(const BraidWord& w) {
    BraidWord r{w.n, {}};
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(it->inverse());
    return r;
}

inline BraidWord concat(const BraidWord& a, const BraidWord& b) {
    BraidWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

inline BraidWord power(const BraidWord& w, int p) {
    BraidWord base = p < 0 ? inverse(w) : w;
    BraidWord r{w.n, {}};
    for (int i = 0; i < (p < 0 ? -p : p); ++i) r = concat(r, base);
    return r;
}

// all 2n+2 generator tokens
inline std::vector<Letter> all_letters(int n) {
    std::vector<Letter> out;
    for (int i = 1; i <= n; ++i) {
        out.push_back(sigma(i));
        out.push_back(sigma(i, -1));
    }
    out.push_back(rho());
    out.push_back(rho(-1));
    return out;
}

// freely reduced random word of exact length len over all generator tokens
inline BraidWord random_word(int n, int len, std::mt19937_64& rng) {
    auto gens = all_letters(n);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    BraidWord w{n, {}};
    while (static_cast<int>(w.letters.size()) < len) {
        Letter l = gens[pick(rng)];
        if (!w.letters.empty() && w.letters.back() == l.inverse()) continue;
        w.letters.push_back(l);
    }
    return w;
}

// every word of length <= maxlen over all generator tokens, empty word included
inline std::vector<BraidWord> all_words(int n, int maxlen) {
    auto gens = all_letters(n);
    std::vector<BraidWord> out{BraidWord{n, {}}};
    std::vector<BraidWord> layer = out;
    for (int l = 1; l <= maxlen; ++l) {
        std::vector<BraidWord> next;
        for (const auto& w : layer)
            for (const auto& g : gens) {
                BraidWord v = w;
                v.letters.push_back(g);
                next.push_back(std::move(v));
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

struct Relation {
    std::string name;
    BraidWord lhs;
    BraidWord rhs;
};

// defining relations of the extended affine braid group, indices cyclic mod n
inline std::vector<Relation> relations(int n) {
    check_n(n);
    std::vector<Relation> out;
    auto word = [n](std::initializer_list<Letter> ls) { return BraidWord{n, ls}; };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int d = j - i;
            if (d == 1 || d == n - 1) continue;
            out.push_back({"BEA1 i=" + std::to_string(i) + " j=" + std::to_string(j), word({sigma(i), sigma(j)}),
                           word({sigma(j), sigma(i)})});
        }
    for (int i = 1; i <= n; ++i) {
        int k = wrap(i + 1, n);
        out.push_back({"BEA2 i=" + std::to_string(i), word({sigma(i), sigma(k), sigma(i)}),
                       word({sigma(k), sigma(i), sigma(k)})});
    }
    for (int i = 1; i <= n; ++i)
        out.push_back({"BEA3 i=" + std::to_string(i), word({rho(), sigma(i), rho(-1)}), word({sigma(wrap(i + 1, n))})});
    return out;
}

// ---- free group F_{n+1} on x_0..x_n ----

struct FreeLetter {
    int gen = 0;
    int exp = 1;
    bool operator==(const FreeLetter&) const = default;
};

struct FreeWord {
    std::vector<FreeLetter> letters;
    bool operator==(const FreeWord&) const = default;
};

inline FreeWord reduced(FreeWord w) {
    std::vector<FreeLetter> st;
    for (const auto& l : w.letters) {
        if (!st.empty() && st.back().gen == l.gen && st.back().exp == -l.exp) st.pop_back();
        else st.push_back(l);
    }
    return {st};
}

inline FreeWord fw_mul(const FreeWord& a, const FreeWord& b) {
    FreeWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return reduced(r);
}

inline FreeWord fw_inv(const FreeWord& a) {
    FreeWord r;
    for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) r.letters.push_back({it->gen, -it->exp});
    return r;
}

inline FreeWord fw_gen(int j, int e = 1) { return {{{j, e}}}; }

inline std::string to_string(const FreeWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += ' ';
        out += "x" + std::to_string(w.letters[i].gen);
        if (w.letters[i].exp < 0) out += "^-1";
    }
    return out;
}

inline FreeWord parse_free_word(const std::string& text, int n) {
    FreeWord w;
    std::istringstream in(text);
    std::string tok;
    std::size_t pos = 0;
    while (in >> tok) {
        pos = text.find(tok, pos);
        int e = 1;
        std::string body = tok;
        if (body.size() > 3 && body.compare(body.size() - 3, 3, "^-1") == 0) {
            e = -1;
            body.resize(body.size() - 3);
        }
        if (body.size() < 2 || body[0] != 'x') throw ParseError("malformed free-group token", pos);
        for (std::size_t k = 1; k < body.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(body[k]))) throw ParseError("malformed free-group token", pos);
        int g = std::stoi(body.substr(1));
        if (g < 0 || g > n) throw ParseError("free generator index out of range 0.." + std::to_string(n), pos);
        w.letters.push_back({g, e});
        pos += tok.size();
    }
    return reduced(w);
}

namespace detail {

// x_a x_{a+1} ... x_b (increasing), or its inverse
inline FreeWord run_up(int a, int b) {
    FreeWord w;
    for (int j = a; j <= b; ++j) w.letters.push_back({j, 1});
    return w;
}
// x_b^{-1} ... x_a^{-1}
inline FreeWord run_up_inv(int a, int b) { return fw_inv(run_up(a, b)); }

// image of generator x_j under one braid generator
inline FreeWord artin_gen_image(const Letter& l, int j, int n) {
    if (l.is_rho()) {
        if (l.exp > 0) {
            if (j == 0) return reduced({{{1, -1}, {0, 1}, {1, 1}}});
            if (j == n) return fw_mul(fw_mul(run_up_inv(0, n), fw_gen(1)), run_up(0, n));
            return fw_gen(j + 1);
        }
        if (j == 0) {
            // x_0..x_n x_{n-1}^{-1}..x_1^{-1} x_0..x_{n-1} x_n^{-1}..x_0^{-1}
            FreeWord w = run_up(0, n);
            w = fw_mul(w, run_up_inv(1, n - 1));
            w = fw_mul(w, run_up(0, n - 1));
            return fw_mul(w, run_up_inv(0, n));
        }
        if (j == 1) return fw_mul(run_up(0, n), run_up_inv(0, n - 1));
        return fw_gen(j - 1);
    }
    int i = l.index;
    if (i < n) {
        if (l.exp > 0) {
            if (j == i) return fw_gen(i + 1);
            if (j == i + 1) return reduced({{{i + 1, -1}, {i, 1}, {i + 1, 1}}});
            return fw_gen(j);
        }
        if (j == i) return reduced({{{i, 1}, {i + 1, 1}, {i, -1}}});
        if (j == i + 1) return fw_gen(i);
        return fw_gen(j);
    }
    if (l.exp > 0) {
        if (j == 0) {
            // x_1^{-1} x_0..x_n x_{n-1}^{-1}..x_1^{-1} x_0..x_{n-1} x_n^{-1}..x_0^{-1} x_1
            FreeWord w = fw_gen(1, -1);
            w = fw_mul(w, run_up(0, n));
            w = fw_mul(w, run_up_inv(1, n - 1));
            w = fw_mul(w, run_up(0, n - 1));
            w = fw_mul(w, run_up_inv(0, n));
            return fw_mul(w, fw_gen(1));
        }
        if (j == 1) {
            FreeWord w = fw_gen(1, -1);
            w = fw_mul(w, run_up(0, n));
            w = fw_mul(w, run_up_inv(0, n - 1));
            return fw_mul(w, fw_gen(1));
        }
        if (j == n) return fw_mul(fw_mul(run_up_inv(0, n), fw_gen(1)), run_up(0, n));
        return fw_gen(j);
    }
    return {};  // handled by conjugation in artin_apply
}

inline FreeWord apply_letter(const Letter& l, const FreeWord& x, int n) {
    if (!l.is_rho() && l.index == n && l.exp < 0) {
        // sigma_n^{-1} = rho sigma_{n-1}^{-1} rho^{-1}
        FreeWord y = apply_letter(rho(-1), x, n);
        y = apply_letter(sigma(n - 1, -1), y, n);
        return apply_letter(rho(1), y, n);
    }
    FreeWord out;
    for (const auto& fl : x.letters) {
        FreeWord img = artin_gen_image(l, fl.gen, n);
        out = fw_mul(out, fl.exp > 0 ? img : fw_inv(img));
    }
    return out;
}

}  // namespace detail

// rightmost letter of w acts first
inline FreeWord artin_apply(const BraidWord& w, const FreeWord& x) {
    FreeWord y = reduced(x);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) y = detail::apply_letter(*it, y, w.n);
    return y;
}

inline std::pair<int, int> phi_G(const FreeWord& x) {
    int a = 0, b = 0;
    for (const auto& l : x.letters) (l.gen == 0 ? b : a) += l.exp;
    return {a, b};
}

}  // namespace affzz
