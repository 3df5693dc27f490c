// ramicalc -- exact computations with piecewise-monomial profiles, Herbrand
// functions, disc/annulus morphisms and Gauss-point harmonicity.
//
// Every job reads one JSON document, writes one deterministic JSON report to
// stdout (or --out), and exits 0 when all embedded checks pass, 1 when a
// check fails, 2 on malformed input.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ramicalc/ramicalc.hpp"

using namespace ramicalc;

namespace {

Json read_input(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw Error(errc::schema_error, "cannot open input: " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw Error(errc::schema_error, std::string("invalid json: ") + e.what());
    }
}

long default_prime() {
    const char* env = std::getenv("RAMICALC_P");
    if (!env) return 0;
    try {
        return std::stol(env);
    } catch (const std::exception&) {
        throw Error(errc::schema_error, "RAMICALC_P is not an integer");
    }
}

Json envelope(const std::string& command, const Json& input, Json result, bool pass) {
    return Json{{"command", command}, {"input", input}, {"result", std::move(result)},
                {"pass", pass}};
}

struct JobResult {
    Json report;
    bool pass = true;
};

JobResult run_lambda_factor(const Json& in) {
    LambdaP f = lambda_from_json(in, default_prime());
    auto factors = canonical_factorization(f);
    Json jf = Json::array();
    for (const auto& g : factors) jf.push_back(to_json(g));
    // recomposition and chain-condition checks
    Report rep;
    PiecewisePower acc = PiecewisePower::identity(LogValue::zero(), LogValue::one());
    for (const auto& g : factors) acc = compose(g.fn(), acc);
    rep.add("recomposition equals the input", pw_equals(acc, f.fn()));
    for (std::size_t i = 0; i + 1 < factors.size(); ++i)
        rep.add("chain condition at factor " + std::to_string(i + 1),
                factors[i].eval(factors[i].breaks()[0]) < factors[i + 1].breaks()[0]);
    Json result{{"input_function", to_json(f)}, {"factors", jf}, {"checks", to_json(rep)}};
    return {envelope("lambda-factor", in, std::move(result), rep.pass()), rep.pass()};
}

JobResult run_lambda_compose(const Json& in) {
    if (!in.contains("outer") || !in.contains("inner"))
        throw Error(errc::schema_error, "lambda-compose needs outer and inner");
    LambdaP f = lambda_from_json(in.at("outer"), default_prime());
    LambdaP g = lambda_from_json(in.at("inner"), default_prime());
    LambdaP h = compose(f, g);
    Json result{{"composition", to_json(h)}};
    return {envelope("lambda-compose", in, std::move(result), true), true};
}

JobResult run_herbrand(const Json& in) {
    long p = in.contains("p") ? long_from_json(in.at("p"), "p") : default_prime();
    if (p <= 0) throw Error(errc::schema_error, "no prime given (set \"p\" or RAMICALC_P)");
    FiniteGroup g = group_from_json(in.at("group"));
    InertiaFunction i = inertia_from_json(in.at("inertia"), g);
    auto filt = ramification_filtration(g, i, Prime(p));
    Json jfilt = Json::array();
    for (const auto& st : filt)
        jfilt.push_back(Json{{"break_v", st.break_value.str()},
                             {"subgroup", to_json(st.group)},
                             {"order", st.group.size()}});
    LambdaP h = in.contains("subgroup")
                    ? herbrand_relative(g, i, subgroup_from_json(in.at("subgroup"), g), Prime(p))
                    : herbrand_galois(g, i, Prime(p));
    Json result{{"filtration", jfilt}, {"herbrand", to_json(h)}};
    return {envelope("herbrand", in, std::move(result), true), true};
}

JobResult run_tower(const Json& in) {
    long p = in.contains("p") ? long_from_json(in.at("p"), "p") : default_prime();
    if (p <= 0) throw Error(errc::schema_error, "no prime given (set \"p\" or RAMICALC_P)");
    FiniteGroup g = group_from_json(in.at("group"));
    InertiaFunction i = inertia_from_json(in.at("inertia"), g);
    Subgroup h = in.contains("subgroup") ? subgroup_from_json(in.at("subgroup"), g)
                                         : Subgroup::trivial(g);
    Tower t = canonical_tower(g, i, h, Prime(p));
    LambdaP total = herbrand_relative(g, i, h, Prime(p));
    auto rep = verify_tower(t, total);
    Json result{{"tower", to_json(t)}, {"herbrand", to_json(total)}, {"checks", to_json(rep)}};
    return {envelope("tower", in, std::move(result), rep.pass()), rep.pass()};
}

JobResult run_polygon(const Json& in) {
    ValuedSeries f = series_from_json(in, default_prime());
    Json result{{"polygon", to_json(newton_polygon(f))}};
    return {envelope("polygon", in, std::move(result), true), true};
}

JobResult run_profile(const Json& in, const std::string& at_v) {
    ValuedSeries f = series_from_json(in, default_prime());
    Json result{{"profile", to_json(profile(f))}};
    if (!at_v.empty()) {
        auto pp = profile_at_point(f, LogValue::from_v(parse_rat(at_v)));
        Json dom = Json::array();
        for (long i : pp.dominating) dom.push_back(i);
        result["at_point"] = Json{{"rho_v", at_v},
                                  {"profile", to_json(pp.profile)},
                                  {"dominating", dom},
                                  {"generic", pp.generic}};
    }
    return {envelope("profile", in, std::move(result), true), true};
}

JobResult run_radial(const Json& in) {
    ValuedSeries f = series_from_json(in, default_prime());
    auto cert = classify_radiality(f);
    auto rep = radial_arithmetic_check(f, cert);
    Json result{{"certificate", to_json(cert)}, {"arithmetic_checks", to_json(rep)}};
    return {envelope("radial", in, std::move(result), rep.pass()), rep.pass()};
}

JobResult run_sigma(const Json& in) {
    AnnulusMorphism f = annulus_from_json(in, default_prime());
    long d = annulus_degree(f);
    auto se = sigma_epsilon(f);
    Json result{{"degree", d},
                {"sigma", se.sigma},
                {"eps_v", se.eps_norm.str()},
                {"eps_raw_v", se.eps_raw.str()},
                {"window_v0", rat_str(se.window_v0)}};
    return {envelope("sigma", in, std::move(result), true), true};
}

JobResult run_different_check(const Json& in) {
    AnnulusMorphism f = annulus_from_json(in, default_prime());
    auto rep = different_identity_check(f);
    auto fs = break_flows(f);
    Json flows = Json::array();
    for (const auto& fl : fs.flows) flows.push_back(to_json(fl));
    Json result{{"degree", annulus_degree(f)},
                {"sigma", sigma_epsilon(f).sigma},
                {"flows", flows},
                {"window_v0", rat_str(fs.window_v0)},
                {"checks", to_json(rep)}};
    return {envelope("different-check", in, std::move(result), rep.pass()), rep.pass()};
}

JobResult run_harmonicity(const Json& in, const std::string& convention,
                          const std::string& csv_path, long grid) {
    ValuedSeries f = series_from_json(in, default_prime());
    SignConvention conv;
    if (convention == "plus") conv = SignConvention::plus;
    else if (convention == "minus") conv = SignConvention::minus;
    else throw Error(errc::schema_error, "convention must be plus or minus");
    auto hr = gauss_harmonicity(f, f.p(), conv);
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw Error(errc::schema_error, "cannot open csv output: " + csv_path);
        out << export_flows(hr.directions, grid);
    }
    Json result = to_json(hr);
    return {envelope("harmonicity", in, std::move(result), hr.pass), hr.pass};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact profiles, Herbrand functions and harmonicity checks"};
    app.require_subcommand(1);

    std::string input, out_path, csv_path, at_v, convention = "plus";
    long grid = 9;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "input json path, or - for stdin")->required();
        cmd->add_option("--out", out_path, "write the report here instead of stdout");
    };
    add_common(app.add_subcommand("lambda-factor", "canonical factorization in Lambda_p"));
    add_common(app.add_subcommand("lambda-compose", "compose two Lambda_p functions"));
    add_common(app.add_subcommand("herbrand", "ramification filtration and Herbrand function"));
    add_common(app.add_subcommand("tower", "canonical tower with verification"));
    add_common(app.add_subcommand("polygon", "Newton polygon of a series"));
    auto* prof = app.add_subcommand("profile", "profile of a disc morphism");
    add_common(prof);
    prof->add_option("--at", at_v, "also compute the Gauss-point profile at v(rho)");
    add_common(app.add_subcommand("radial", "radiality classification"));
    add_common(app.add_subcommand("sigma", "sigma exponent of an annulus morphism"));
    add_common(app.add_subcommand("different-check", "the different identity on an annulus"));
    auto* harm = app.add_subcommand("harmonicity", "Gauss-point harmonicity verification");
    add_common(harm);
    harm->add_option("--convention", convention, "sign convention: plus (default) or minus");
    harm->add_option("--csv", csv_path, "write flow plot data (exact rationals) here");
    harm->add_option("--grid", grid, "rows per direction in the csv (default 9)");

    CLI11_PARSE(app, argc, argv);

    try {
        const std::string cmd = app.get_subcommands().front()->get_name();
        Json in = read_input(input);
        JobResult res;
        if (cmd == "lambda-factor") res = run_lambda_factor(in);
        else if (cmd == "lambda-compose") res = run_lambda_compose(in);
        else if (cmd == "herbrand") res = run_herbrand(in);
        else if (cmd == "tower") res = run_tower(in);
        else if (cmd == "polygon") res = run_polygon(in);
        else if (cmd == "profile") res = run_profile(in, at_v);
        else if (cmd == "radial") res = run_radial(in);
        else if (cmd == "sigma") res = run_sigma(in);
        else if (cmd == "different-check") res = run_different_check(in);
        else if (cmd == "harmonicity") res = run_harmonicity(in, convention, csv_path, grid);
        else throw Error(errc::schema_error, "unknown command");

        std::string text = res.report.dump(2) + "\n";
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path);
            if (!out) throw Error(errc::schema_error, "cannot open output: " + out_path);
            out << text;
        }
        return res.pass ? 0 : 1;
    } catch (const Error& e) {
        Json err{{"error", errc_name(e.code())}, {"message", e.what()}};
        std::cerr << err.dump(2) << "\n";
        bool schema = e.code() == errc::schema_error || e.code() == errc::invalid_argument;
        return schema ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", "Unhandled"}, {"message", e.what()}}.dump(2) << "\n";
        return 2;
    }
}
