// affzz: command-line front end for the braid group computations
#include <affzz/suites.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>

using namespace affzz;

namespace {

struct Options {
    int n = 3;
    bool n_given = false;
    std::string word;
    std::string word2;
    int k = 1;
    int l = 1;
    std::string rep = "aks";
    std::string format = "json";
    std::uint64_t seed = 1;
    int maxlen = 3;
    std::string suite;
};

void check_vertex(const char* flag, int v, int n) {
    if (v < 1 || v > n) throw ParseError(std::string(flag) + " must lie in 1.." + std::to_string(n), 0);
}

BraidWord target_word(const Options& o) {
    BraidWord w = parse_word(o.word, o.n);
    if (!o.word2.empty()) w = concat(w, inverse(parse_word(o.word2, o.n)));
    return w;
}

std::string summand_text(const ShiftedProjective& s) {
    std::ostringstream os;
    os << "P" << s.vertex << "[" << -s.coh << "]{" << s.g1 << "}<" << s.g3 << ">";
    return os.str();
}

int cmd_matrix(const Options& o, std::ostream& out) {
    auto m = rep_matrix(parse_rep(o.rep), parse_word(o.word, o.n));
    if (o.format == "table") out << matrix_table(m);
    else out << to_json(m).dump() << '\n';
    return 0;
}

int cmd_complex(const Options& o, std::ostream& out) {
    check_vertex("--l", o.l, o.n);
    auto c = minimize(apply_word(target_word(o), projective(o.n, o.l)));
    if (o.format == "table") {
        Algebra R(o.n);
        for (std::size_t u = 0; u < c.size(); ++u) out << u << ": " << summand_text(c.summands[u]) << '\n';
        for (std::size_t u = 0; u < c.size(); ++u)
            for (const auto& [v, x] : c.d[u]) out << u << " -> " << v << ": " << to_string(R, x) << '\n';
    } else {
        out << to_json(c).dump() << '\n';
    }
    return 0;
}

int cmd_hom(const Options& o, std::ostream& out) {
    check_vertex("--k", o.k, o.n);
    check_vertex("--l", o.l, o.n);
    auto c = minimize(apply_word(target_word(o), projective(o.n, o.l)));
    auto h = hom_poincare(o.k, c);
    if (o.format == "table") out << h.to_string() << '\n';
    else out << Json{{"k", o.k}, {"l", o.l}, {"hom", h.to_string()}}.dump() << '\n';
    return 0;
}

int cmd_itri(const Options& o, std::ostream& out) {
    check_vertex("--k", o.k, o.n);
    check_vertex("--l", o.l, o.n);
    auto curve = twist_word(target_word(o), basic_curve(o.n, o.l));
    auto strings = k_strings(curve, o.k);
    auto itri = trigraded_intersection_with_basic(o.k, curve);
    auto geo = geometric_intersection_with_basic(o.k, curve);
    if (o.format == "table") {
        out << "curve: " << to_string(curve) << '\n';
        for (const auto& s : strings)
            out << "string " << family_name(s.family) << " u=" << s.u << " base=(" << s.base[0] << "," << s.base[1]
                << "," << s.base[2] << ")\n";
        out << "itri: " << itri.to_string() << '\n' << "geometric: " << geo.to_string() << '\n';
        return 0;
    }
    Json j;
    j["k"] = o.k;
    j["l"] = o.l;
    j["curve"] = to_json(curve);
    j["strings"] = Json::array();
    for (const auto& s : strings) j["strings"].push_back(to_json(s));
    j["itri"] = itri.to_string();
    j["geometric"] = geo.to_string();
    out << j.dump() << '\n';
    return 0;
}

int cmd_identify(const Options& o, std::ostream& out) {
    auto v = identify(target_word(o));
    if (o.format == "table") {
        switch (v.kind) {
            case VerdictKind::Identity: out << "identity\n"; break;
            case VerdictKind::CentralPower: out << "central_power " << v.power << '\n'; break;
            case VerdictKind::Nontrivial:
                out << "nontrivial at P" << v.vertex << ":";
                for (const auto& s : v.summands) out << ' ' << summand_text(s);
                out << '\n';
                break;
        }
    } else {
        out << to_json(v).dump() << '\n';
    }
    return 0;
}

int cmd_check(const Options& o, std::ostream& out) {
    SuiteConfig cfg;
    if (o.n_given) cfg.ns = {o.n};
    cfg.maxlen = o.maxlen;
    cfg.seed = o.seed;
    std::vector<std::string> names = o.suite == "all" ? suite_names() : std::vector<std::string>{o.suite};
    bool ok = true;
    for (const auto& name : names) {
        auto r = run_suite(name, cfg);
        ok = ok && r.pass;
        if (o.format == "table") {
            out << name << ": " << (r.pass ? "pass" : "FAIL") << " (" << r.cases << " cases, " << r.failures
                << " failures, " << r.torsion << " torsion)\n";
            if (!r.pass) out << "  first counterexample: " << r.counterexample.dump() << '\n';
        } else {
            out << to_json(r).dump() << '\n';
        }
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Extended affine braid group: representations, complexes and curves"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* s) {
        s->add_option("--n", o.n, "number of punctures (n >= 3)")->check(CLI::Range(3, 64));
        s->add_option("--word", o.word, "braid word, e.g. \"s1 s2^-1 r\"");
        s->add_option("--word2", o.word2, "second word; the command uses word * word2^-1");
        s->add_option("--k", o.k, "vertex of the test projective / basic curve");
        s->add_option("--l", o.l, "vertex of the source projective / basic curve");
        s->add_option("--rep", o.rep, "representation")->check(CLI::IsMember({"h", "rh", "aks"}));
        s->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "table"}));
        s->add_option("--seed", o.seed, "seed for random words");
        s->add_option("--maxlen", o.maxlen, "maximal exhaustive word length")->check(CLI::Range(0, 8));
    };
    std::map<std::string, int (*)(const Options&, std::ostream&)> handlers{
        {"matrix", cmd_matrix}, {"complex", cmd_complex}, {"hom", cmd_hom},
        {"itri", cmd_itri},     {"identify", cmd_identify}, {"check", cmd_check}};
    std::map<std::string, std::string> help{
        {"matrix", "matrix of a word in a linear representation"},
        {"complex", "minimal complex F_w(P_l)"},
        {"hom", "Poincare polynomial of Hom(P_k, F_w(P_l))"},
        {"itri", "trigraded intersection of b_k with the twisted basic curve b_l"},
        {"identify", "decide whether a word acts trivially"},
        {"check", "run an invariant suite"}};
    std::vector<CLI::App*> subs;
    for (const auto& [name, h] : handlers) {
        auto* s = app.add_subcommand(name, help[name]);
        common(s);
        if (name == "check")
            s->add_option("--suite", o.suite, "suite name or 'all'")
                ->required()
                ->check(CLI::IsMember([] {
                    auto v = suite_names();
                    v.push_back("all");
                    return v;
                }()));
        subs.push_back(s);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    for (auto* s : subs) {
        if (!s->parsed()) continue;
        o.n_given = s->count("--n") > 0;
        try {
            return handlers[s->get_name()](o, std::cout);
        } catch (const ParseError& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 2;
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 2;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 1;
        }
    }
    return 2;
}
