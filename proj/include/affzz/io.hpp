#pragma once

#include "complexes.hpp"
#include "curves.hpp"
#include "linrep.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace affzz {

using Json = nlohmann::ordered_json;

inline Json to_json(const ProjComplex& c) {
    Algebra R(c.n);
    Json j;
    j["n"] = c.n;
    j["summands"] = Json::array();
    for (const auto& s : c.summands)
        j["summands"].push_back({{"vertex", s.vertex}, {"coh", s.coh}, {"g1", s.g1}, {"g3", s.g3}});
    j["differential"] = Json::array();
    for (std::size_t u = 0; u < c.size(); ++u)
        for (const auto& [v, x] : c.d[u])
            j["differential"].push_back({{"from", u}, {"to", v}, {"element", to_string(R, x)}});
    return j;
}

// parity is rebuilt from the differential, component by component
inline ProjComplex complex_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    Algebra R(n);
    ProjComplex c{n, {}, {}};
    for (const auto& s : j.at("summands"))
        c.add({s.at("vertex").get<int>(), s.at("coh").get<int>(), s.at("g1").get<int>(), s.at("g3").get<int>(), 0});
    std::vector<std::vector<std::pair<int, int>>> adj(c.size());
    for (const auto& e : j.at("differential")) {
        int u = e.at("from").get<int>(), v = e.at("to").get<int>();
        if (u < 0 || v < 0 || u >= static_cast<int>(c.size()) || v >= static_cast<int>(c.size()))
            throw std::invalid_argument("differential entry refers to a missing summand");
        auto x = parse_element(R, e.at("element").get<std::string>());
        c.set(u, v, x);
        if (x.is_zero()) continue;
        int flip = R.tridegree(x.terms.begin()->first).d2 & 1;
        adj[u].push_back({v, flip});
        adj[v].push_back({u, flip});
    }
    std::vector<int> seen(c.size(), 0);
    for (std::size_t r = 0; r < c.size(); ++r) {
        if (seen[r]) continue;
        seen[r] = 1;
        std::vector<int> stack{static_cast<int>(r)};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [v, f] : adj[u]) {
                if (seen[v]) continue;
                seen[v] = 1;
                c.summands[v].par = (c.summands[u].par + f) & 1;
                stack.push_back(v);
            }
        }
    }
    validate(c);
    return c;
}

inline Json to_json(const RepMatrix& m) {
    Json rows = Json::array();
    for (const auto& row : m.m) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(e.to_string());
        rows.push_back(r);
    }
    return {{"rep", rep_name(m.rep)}, {"n", m.n}, {"matrix", rows}};
}

inline std::string matrix_table(const RepMatrix& m) {
    std::size_t w = 1;
    for (const auto& row : m.m)
        for (const auto& e : row) w = std::max(w, e.to_string().size());
    std::ostringstream os;
    for (const auto& row : m.m) {
        for (std::size_t j = 0; j < row.size(); ++j)
            os << (j ? "  " : "") << std::setw(static_cast<int>(w)) << row[j].to_string();
        os << '\n';
    }
    return os.str();
}

inline Json tri_json(const Tri& t) { return Json::array({t[0], t[1], t[2]}); }

inline Json to_json(const TrigradedCurve& c) {
    Json j;
    j["n"] = c.n;
    j["start"] = c.start;
    j["end"] = c.end;
    auto segs = segments(c);
    auto cr = crossings(c);
    Json path = Json::array();
    for (std::size_t i = 0; i < segs.size(); ++i) {
        Json s{{"segment", segment_type_name(segs[i].type)}, {"sector", segs[i].sector}};
        if (segs[i].puncture) s["puncture"] = segs[i].puncture;
        path.push_back(s);
        if (i < cr.size()) path.push_back({{"crossing", cr[i].barrier}, {"mu", tri_json(cr[i].mu)}});
    }
    if (segs.empty()) path.push_back({{"segment", "3"}, {"sector", c.start}});
    j["path"] = path;
    j["word"] = to_string(c);
    return j;
}

inline Json to_json(const KString& s) {
    return {{"k", s.k}, {"family", family_name(s.family)}, {"u", s.u}, {"base", tri_json(s.base)}};
}

inline Json to_json(const ShiftedProjective& s) {
    return {{"vertex", s.vertex}, {"coh", s.coh}, {"g1", s.g1}, {"g3", s.g3}};
}

inline Json to_json(const Verdict& v) {
    switch (v.kind) {
        case VerdictKind::Identity: return {{"verdict", "identity"}};
        case VerdictKind::CentralPower: return {{"verdict", "central_power"}, {"power", v.power}};
        case VerdictKind::Nontrivial: break;
    }
    Json cert;
    cert["vertex"] = v.vertex;
    cert["summands"] = Json::array();
    for (const auto& s : v.summands) cert["summands"].push_back(to_json(s));
    cert["hom"] = Json::array();
    for (const auto& h : v.homs) cert["hom"].push_back(h.to_string());
    return {{"verdict", "nontrivial"}, {"certificate", cert}};
}

}  // namespace affzz
