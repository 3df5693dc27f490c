#pragma once

#include <json.hpp>

#include "ramicalc/harmonicity.hpp"
#include "ramicalc/ramification.hpp"

namespace ramicalc {

using Json = nlohmann::ordered_json;

/* ---- scalars ---- */

inline Json to_json(const LogValue& x) { return Json{{"v", x.str()}}; }

inline LogValue logvalue_from_json(const Json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "inf") return LogValue::zero();
        return LogValue::from_v(parse_rat(s));
    }
    if (!j.is_object()) throw Error(errc::schema_error, "scalar must be an object or string");
    if (j.contains("v")) {
        std::string s = j.at("v").get<std::string>();
        if (s == "inf") return LogValue::zero();
        return LogValue::from_v(parse_rat(s));
    }
    if (j.contains("value_exp"))
        return LogValue::from_value_exp(parse_rat(j.at("value_exp").get<std::string>()));
    throw Error(errc::schema_error, "scalar needs a \"v\" or \"value_exp\" field");
}

inline long long_from_json(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw Error(errc::schema_error, std::string(what) + " must be an integer");
    return j.get<long>();
}

/* ---- piecewise functions ---- */

inline Json to_json(const PiecewisePower& f) {
    Json pieces = Json::array();
    for (const auto& pc : f.pieces()) {
        pieces.push_back(Json{{"lo_v", pc.lo.str()},
                              {"hi_v", pc.hi.str()},
                              {"exp", rat_str(pc.exp)},
                              {"coef_v", rat_str(pc.coef_v)}});
    }
    return Json{{"pieces", pieces}};
}

inline Json to_json(const LambdaP& f) {
    Json breaks = Json::array(), coeffs = Json::array(), alphas = Json::array();
    for (const auto& b : f.breaks()) breaks.push_back(rat_str(b.v()));
    for (const auto& a : f.coefficients()) coeffs.push_back(rat_str(a.v()));
    for (long a : f.alphas()) alphas.push_back(a);
    return Json{{"p", f.p().value()},
                {"breaks_v", breaks},
                {"alphas", alphas},
                {"coeffs_v", coeffs}};
}

inline LambdaP lambda_from_json(const Json& j, long default_p) {
    if (!j.is_object()) throw Error(errc::schema_error, "lambda spec must be an object");
    long p = j.contains("p") ? long_from_json(j.at("p"), "p") : default_p;
    if (p <= 0) throw Error(errc::schema_error, "no prime given (set \"p\" or RAMICALC_P)");
    std::vector<LogValue> breaks;
    if (j.contains("breaks_v"))
        for (const auto& b : j.at("breaks_v"))
            breaks.push_back(LogValue::from_v(parse_rat(b.get<std::string>())));
    std::vector<long> alphas;
    if (!j.contains("alphas")) throw Error(errc::schema_error, "lambda spec needs alphas");
    for (const auto& a : j.at("alphas")) alphas.push_back(long_from_json(a, "alpha"));
    return make_lambda(Prime(p), breaks, alphas);
}

/* ---- groups and inertia ---- */

inline FiniteGroup group_from_json(const Json& j) {
    if (!j.is_object()) throw Error(errc::schema_error, "group spec must be an object");
    if (j.contains("table")) {
        std::vector<std::vector<int>> t;
        for (const auto& row : j.at("table")) {
            t.push_back({});
            for (const auto& x : row) t.back().push_back(static_cast<int>(long_from_json(x, "table entry")));
        }
        return FiniteGroup(std::move(t));
    }
    if (!j.contains("construct"))
        throw Error(errc::schema_error, "group spec needs \"construct\" or \"table\"");
    std::string c = j.at("construct").get<std::string>();
    if (c == "cyclic") return FiniteGroup::cyclic(long_from_json(j.at("n"), "n"));
    if (c == "dihedral") return FiniteGroup::dihedral(long_from_json(j.at("n"), "n"));
    if (c == "elementary_abelian")
        return FiniteGroup::elementary_abelian(long_from_json(j.at("p"), "p"),
                                               long_from_json(j.at("k"), "k"));
    if (c == "product") {
        const auto& fs = j.at("factors");
        if (!fs.is_array() || fs.empty())
            throw Error(errc::schema_error, "product needs a factors array");
        FiniteGroup g = group_from_json(fs[0]);
        for (std::size_t i = 1; i < fs.size(); ++i)
            g = FiniteGroup::direct_product(g, group_from_json(fs[i]));
        return g;
    }
    throw Error(errc::schema_error, "unknown group constructor: " + c);
}

inline Subgroup subgroup_from_json(const Json& j, const FiniteGroup& g) {
    if (j.is_array()) {
        std::vector<int> elems;
        for (const auto& x : j) elems.push_back(static_cast<int>(long_from_json(x, "element")));
        return Subgroup::from_elements(g, elems);
    }
    if (j.is_number_integer()) {  // bitmask over element indices
        unsigned long long mask = j.get<unsigned long long>();
        std::vector<int> elems;
        for (std::size_t i = 0; i < g.order() && i < 64; ++i)
            if (mask & (1ull << i)) elems.push_back(static_cast<int>(i));
        return Subgroup::from_elements(g, elems);
    }
    throw Error(errc::schema_error, "subgroup must be an index array or bitmask");
}

inline Json to_json(const Subgroup& h) {
    Json a = Json::array();
    for (int e : h.elements()) a.push_back(e);
    return a;
}

inline InertiaFunction inertia_from_json(const Json& j, const FiniteGroup& g) {
    if (!j.is_object()) throw Error(errc::schema_error, "inertia spec must be an object");
    if (j.contains("values_per_element")) {
        std::vector<LogValue> vals;
        for (const auto& x : j.at("values_per_element")) vals.push_back(logvalue_from_json(x));
        return InertiaFunction(g, std::move(vals));
    }
    if (!j.contains("chain") || !j.contains("values_v"))
        throw Error(errc::schema_error, "inertia spec needs chain and values_v");
    std::vector<Subgroup> chain;
    for (const auto& s : j.at("chain")) chain.push_back(subgroup_from_json(s, g));
    std::vector<LogValue> values;
    for (const auto& x : j.at("values_v"))
        values.push_back(LogValue::from_v(parse_rat(x.get<std::string>())));
    return make_filtration_inertia(g, chain, values);
}

/* ---- series ---- */

inline ValuedSeries series_from_json(const Json& j, long default_p) {
    if (!j.is_object()) throw Error(errc::schema_error, "series spec must be an object");
    long p = j.contains("p") ? long_from_json(j.at("p"), "p") : default_p;
    if (p <= 0) throw Error(errc::schema_error, "no prime given (set \"p\" or RAMICALC_P)");
    LogValue radius =
        j.contains("radius_v")
            ? LogValue::from_v(parse_rat(j.at("radius_v").get<std::string>()))
            : LogValue::one();
    bool exact = j.contains("coeffs");
    bool skel = j.contains("coeffs_v");
    if (j.contains("mode")) {
        std::string m = j.at("mode").get<std::string>();
        if (m != "exact" && m != "skeleton")
            throw Error(errc::schema_error, "mode must be exact or skeleton");
        if ((m == "exact") != exact || (m == "skeleton") != skel)
            throw Error(errc::schema_error, "mode does not match the coefficient field");
    }
    if (exact == skel)
        throw Error(errc::schema_error, "series needs exactly one of coeffs / coeffs_v");
    auto parse_index = [](const std::string& s) {
        try {
            std::size_t pos = 0;
            long i = std::stol(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return i;
        } catch (const std::exception&) {
            throw Error(errc::schema_error, "bad series index: " + s);
        }
    };
    if (exact) {
        std::map<long, Rat> cs;
        for (const auto& [k, val] : j.at("coeffs").items())
            cs[parse_index(k)] = parse_rat(val.get<std::string>());
        return ValuedSeries::exact(Prime(p), radius, std::move(cs));
    }
    std::map<long, LogValue> cs;
    for (const auto& [k, val] : j.at("coeffs_v").items())
        cs[parse_index(k)] = LogValue::from_v(parse_rat(val.get<std::string>()));
    return ValuedSeries::skeleton(Prime(p), radius, std::move(cs));
}

inline Json to_json(const ValuedSeries& f) {
    Json coeffs = Json::object();
    if (f.is_exact()) {
        for (const auto& [i, c] : f.exact_coeffs()) coeffs[std::to_string(i)] = rat_str(c);
        return Json{{"p", f.p().value()},
                    {"mode", "exact"},
                    {"radius_v", f.radius().str()},
                    {"coeffs", coeffs}};
    }
    for (long i : f.support()) coeffs[std::to_string(i)] = f.norm(i).str();
    return Json{{"p", f.p().value()},
                {"mode", "skeleton"},
                {"radius_v", f.radius().str()},
                {"coeffs_v", coeffs}};
}

inline AnnulusMorphism annulus_from_json(const Json& j, long default_p) {
    if (!j.is_object() || !j.contains("inner_v"))
        throw Error(errc::schema_error, "annulus spec needs inner_v");
    return AnnulusMorphism(series_from_json(j, default_p),
                           LogValue::from_v(parse_rat(j.at("inner_v").get<std::string>())));
}

/* ---- reports ---- */

inline Json to_json(const Report& rep) {
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json item{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) item["detail"] = c.detail;
        checks.push_back(item);
    }
    return Json{{"checks", checks}, {"pass", rep.pass()}};
}

inline Json to_json(const NewtonPolygon& np) {
    Json verts = Json::array(), edges = Json::array();
    for (const auto& [i, v] : np.vertices)
        verts.push_back(Json{{"index", i}, {"coeff_v", rat_str(v)}});
    for (const auto& e : np.edges)
        edges.push_back(Json{{"slope", rat_str(e.slope)}, {"length", e.length}});
    return Json{{"vertices", verts}, {"edges", edges}};
}

inline Json to_json(const Profile& pr) {
    Json dom = Json::array();
    for (long i : pr.dominating) dom.push_back(i);
    return Json{{"fn", to_json(pr.fn)},
                {"dominating", dom},
                {"normalized", to_json(pr.normalized)}};
}

inline Json to_json(const RadialityCertificate& cert) {
    Json out;
    switch (cert.verdict) {
        case RadialVerdict::radial: out["verdict"] = "radial"; break;
        case RadialVerdict::weakly_n_radial: out["verdict"] = "weakly-n-radial"; break;
        case RadialVerdict::not_radial: out["verdict"] = "not-radial"; break;
    }
    out["characteristic"] = cert.characteristic;
    out["weak_level"] = cert.weak_level;
    out["n_radial_level"] = cert.n_radial_level;
    out["border_v"] = cert.border.str();
    Json dom = Json::array();
    for (long i : cert.dominating) dom.push_back(i);
    out["dominating"] = dom;
    if (cert.witness) {
        out["witness"] = Json{{"index", cert.witness->index},
                              {"center_radius_v", cert.witness->center_radius.str()},
                              {"eval_radius_v", cert.witness->eval_radius.str()}};
    }
    out["simple"] = cert.simple();
    return out;
}

inline Json to_json(const Tower& t) {
    Json chain = Json::array(), steps = Json::array(), s_idx = Json::array();
    for (const auto& h : t.chain) chain.push_back(to_json(h));
    for (const auto& s : t.steps) steps.push_back(to_json(s));
    for (long s : t.s_index) s_idx.push_back(s);
    Json out{{"chain", chain}, {"s_index", s_idx}, {"steps", steps},
             {"has_trivial_tail", t.has_trivial_tail}};
    if (t.has_trivial_tail) out["tail"] = to_json(t.tail.front());
    return out;
}

inline Json to_json(const Flow& fl) {
    return Json{{"coef_v", rat_str(fl.coef_v)},
                {"exp", rat_str(fl.exp)},
                {"limit_v", rat_str(fl.limit_v)},
                {"alpha_below", fl.alpha_below},
                {"alpha_above", fl.alpha_above}};
}

inline Json to_json(const DirectionData& dd) {
    Json flows = Json::array(), alphas = Json::array(), layers = Json::array();
    for (const auto& fl : dd.flows) flows.push_back(to_json(fl));
    for (long a : dd.alphas) alphas.push_back(a);
    for (int l : dd.flow_layer) layers.push_back(l);
    return Json{{"direction", dd.label},
                {"d", dd.d},
                {"sigma", dd.sigma},
                {"eps_v", dd.eps.str()},
                {"window_v0", rat_str(dd.window_v0)},
                {"alphas", alphas},
                {"flows", flows},
                {"flow_layers", layers}};
}

inline Json to_json(const HarmonicityReport& hr) {
    Json breaks = Json::array(), alphas = Json::array(), dirs = Json::array(),
         layers = Json::array();
    for (const auto& b : hr.gauss_breaks) breaks.push_back(b.str());
    for (long a : hr.gauss_alphas) alphas.push_back(a);
    for (const auto& dd : hr.directions) dirs.push_back(to_json(dd));
    for (const auto& li : hr.layers) {
        layers.push_back(Json{{"layer", li.layer},
                              {"lhs", rat_str(li.lhs)},
                              {"rhs", rat_str(li.rhs)},
                              {"generic_term", rat_str(li.generic_term)},
                              {"pass", li.pass}});
    }
    return Json{{"deg_local", hr.deg_local},
                {"gauss_breaks_v", breaks},
                {"gauss_alphas", alphas},
                {"convention", convention_name(hr.convention)},
                {"directions", dirs},
                {"riemann_hurwitz",
                 Json{{"lhs", rat_str(hr.rh_lhs)},
                      {"rhs", rat_str(hr.rh_rhs)},
                      {"generic_sigma_zero", hr.generic_sigma_zero},
                      {"pass", hr.rh_pass}}},
                {"generic_rep_matches", hr.generic_rep_matches},
                {"layers", layers},
                {"pass", hr.pass}};
}

}  // namespace ramicalc
