#pragma once

#include <optional>
#include <string>

#include "ramicalc/report.hpp"
#include "ramicalc/series.hpp"

namespace ramicalc {

/*
 * A finite morphism of open annuli A(0; r1, 1) -> A(0; r', 1), written as a
 * Laurent polynomial (the outer radius is pinned to 1 by the coordinate).
 * The single-slope invariant is enforced where the degree is computed.
 */
class AnnulusMorphism {
  public:
    AnnulusMorphism(ValuedSeries coeffs, LogValue inner)
        : coeffs_(std::move(coeffs)), inner_(std::move(inner)) {
        if (inner_.is_zero() || inner_.v() <= 0)
            throw Error(errc::radius_out_of_range, "inner radius must lie in (0,1)");
    }

    const ValuedSeries& series() const { return coeffs_; }
    const LogValue& inner() const { return inner_; }
    const Prime& p() const { return coeffs_.p(); }

  private:
    ValuedSeries coeffs_;
    LogValue inner_;
};

namespace detail {

/* the valuation of a monomial in rho as a function of V = v(rho) > 0 */
struct VAffine {
    Rat c;  // constant part
    Rat s;  // slope in V
    Rat at(const Rat& V) const { return c + s * V; }
};

/*
 * The dominating term near rho -> 1 (V -> 0+): minimal constant, ties
 * resolved toward the smaller slope.  window_v0 bounds the V-interval on
 * which the domination persists (nullopt: all V > 0).
 */
struct DomTerm {
    std::size_t pos;
    VAffine term;
    std::optional<Rat> window_v0;
};

inline DomTerm dominating_term(const std::vector<VAffine>& terms) {
    if (terms.empty()) throw Error(errc::empty_support, "no terms");
    std::size_t best = 0;
    for (std::size_t k = 1; k < terms.size(); ++k) {
        if (terms[k].c < terms[best].c ||
            (terms[k].c == terms[best].c && terms[k].s < terms[best].s))
            best = k;
    }
    DomTerm out{best, terms[best], std::nullopt};
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (k == best) continue;
        // need terms[k] >= dominant on the window
        Rat ds = out.term.s - terms[k].s;
        if (ds > 0) {
            Rat v0 = (terms[k].c - out.term.c) / ds;
            if (!out.window_v0 || v0 < *out.window_v0) out.window_v0 = v0;
        }
    }
    return out;
}

/* one normalized break flow b_j(rho) = p^{-c} rho^{e} on the window */
struct Flow {
    Rat coef_v;       // c: v of the coefficient
    Rat exp;          // e: the exponent in rho (the boundary slope)
    Rat limit_v;      // v(lim_{rho->1} b_j) = c
    long alpha_below; // local degree exponent below the break
    long alpha_above; // local degree exponent above the break
};

struct FlowSet {
    std::vector<Flow> flows;   // ordered by increasing break
    std::vector<long> alphas;  // local degree exponents of the point profile
    Rat window_v0;             // structure is exact for v(rho) in (0, window_v0)
    long top_index = 0;        // dominating index at the boundary (local disc degree)
};

/*
 * Exact break flows of the family of Gauss-point profiles along an annulus.
 * Candidates give, per coordinate index i, the monomials-in-rho whose max is
 * the generic norm N_i; delta is the v-slope of the disc radius (+1 for
 * inner directions, -1 for the infinity direction, where the disc radius is
 * 1/rho).  The structure (realized terms, dominating envelope and its
 * junctions) is located at a sample V and certified by affine constraints;
 * the sample descends across structure changes until the window is adjacent
 * to V = 0.
 */
inline FlowSet compute_flows(const std::vector<std::pair<long, std::vector<VAffine>>>& cands,
                             int delta, const Prime& p, const Rat& v_start) {
    if (cands.empty()) throw Error(errc::empty_support, "no flow candidates");
    Rat V = v_start;
    for (int rounds = 0; rounds < 256; ++rounds) {
        std::vector<std::pair<Rat, Rat>> constraints;  // A + B V >= 0, strict at V
        bool degenerate = false;

        // realize each N_i at the sample
        std::vector<EnvLine> lines;
        std::vector<VAffine> realized(cands.size());
        std::vector<long> idx_of(cands.size());
        for (std::size_t k = 0; k < cands.size(); ++k) {
            const auto& [i, terms] = cands[k];
            std::size_t best = 0;
            for (std::size_t t = 1; t < terms.size(); ++t)
                if (terms[t].at(V) < terms[best].at(V)) best = t;
            for (std::size_t t = 0; t < terms.size(); ++t) {
                if (t == best) continue;
                Rat A = terms[t].c - terms[best].c, B = terms[t].s - terms[best].s;
                if (A == 0 && B == 0) continue;  // identical monomials
                if (A + B * V == 0) degenerate = true;
                constraints.push_back({A, B});
            }
            realized[k] = terms[best];
            idx_of[k] = i;
            lines.push_back(EnvLine{i, terms[best].at(V)});
        }
        if (!degenerate) {
            // envelope structure at the sample, clipped at the disc radius
            LogValue s_max = LogValue::from_v(Rat(delta) * V);
            auto env = value_envelope(lines, s_max);
            auto affine_of = [&](long i) {
                for (std::size_t k = 0; k < cands.size(); ++k)
                    if (idx_of[k] == i) return realized[k];
                throw Error(errc::invalid_argument, "unknown envelope index");
            };
            // w_j(V) between consecutive dominating indices, affine in V
            std::vector<VAffine> junctions;
            for (std::size_t j = 0; j + 1 < env.size(); ++j) {
                VAffine na = affine_of(env[j].idx), nb = affine_of(env[j + 1].idx);
                Rat den(env[j + 1].idx - env[j].idx);
                junctions.push_back(VAffine{(na.c - nb.c) / den, (na.s - nb.s) / den});
            }
            // every line stays above the envelope at every junction, every
            // junction stays inside the disc, and non-dominating lines stay
            // above the envelope at the boundary radius
            auto add = [&](const Rat& A, const Rat& B) {
                if (A == 0 && B == 0) return;  // holds with equality identically
                if (A + B * V == 0) degenerate = true;
                constraints.push_back({A, B});
            };
            for (std::size_t j = 0; j < junctions.size(); ++j) {
                VAffine na = affine_of(env[j].idx);
                const auto& w = junctions[j];
                // env value at the junction: na + idx * w, affine in V
                Rat ec = na.c + env[j].idx * w.c;
                Rat es = na.s + env[j].idx * w.s;
                for (std::size_t k = 0; k < cands.size(); ++k) {
                    if (idx_of[k] == env[j].idx || idx_of[k] == env[j + 1].idx) continue;
                    add(realized[k].c + idx_of[k] * w.c - ec,
                        realized[k].s + idx_of[k] * w.s - es);
                }
                // the break stays interior: w_j > delta V
                add(w.c, w.s - delta);
            }
            {
                // boundary dominance: at w = delta V the last active index wins
                VAffine nd = affine_of(env.back().idx);
                Rat ec = nd.c, es = nd.s + Rat(env.back().idx * delta);
                for (std::size_t k = 0; k < cands.size(); ++k) {
                    if (idx_of[k] == env.back().idx) continue;
                    add(realized[k].c - ec,
                        realized[k].s + Rat(idx_of[k] * delta) - es);
                }
            }
            if (!degenerate) {
                // collapse the constraints to a window around the sample
                std::optional<Rat> lower, upper;
                for (const auto& [A, B] : constraints) {
                    if (B > 0) {
                        Rat bound = -A / B;
                        if (!lower || bound > *lower) lower = bound;
                    } else if (B < 0) {
                        Rat bound = -A / B;
                        if (!upper || bound < *upper) upper = bound;
                    }
                }
                if (!lower || *lower <= 0) {
                    FlowSet fs;
                    fs.window_v0 = upper ? std::min(*upper, v_start) : v_start;
                    fs.top_index = env.back().idx;
                    for (const auto& e : env) {
                        auto a = p_power_exponent(Int(e.idx), p.value());
                        if (!a)
                            throw Error(errc::not_in_lambda_p,
                                        "point-profile degree " + std::to_string(e.idx) +
                                            " is not a power of " + std::to_string(p.value()));
                        fs.alphas.push_back(*a);
                    }
                    for (std::size_t j = 0; j < junctions.size(); ++j) {
                        Flow fl;
                        fl.coef_v = junctions[j].c;
                        fl.exp = junctions[j].s - delta;
                        fl.limit_v = junctions[j].c;
                        fl.alpha_below = fs.alphas[j];
                        fl.alpha_above = fs.alphas[j + 1];
                        fs.flows.push_back(fl);  // junctions already in increasing-b order
                    }
                    return fs;
                }
                V = *lower / 2;
                continue;
            }
        }
        V = V / 2;
    }
    throw Error(errc::no_stable_window, "no stable window adjacent to the boundary");
}

}  // namespace detail

/* lines |f_n| rho^n of the coefficients, as functions of V = v(rho) */
inline std::vector<detail::VAffine> annulus_lines(const ValuedSeries& f) {
    std::vector<detail::VAffine> out;
    for (long n : f.support()) out.push_back(detail::VAffine{f.norm(n).v(), Rat(n)});
    return out;
}

/*
 * The degree of the annulus morphism: the unique dominating index over the
 * whole annulus (r1, 1); a crossing inside the annulus is an error, and the
 * aligned orientation requires d > 0.
 */
inline long annulus_degree(const AnnulusMorphism& f) {
    auto lines = annulus_lines(f.series());
    auto dom = detail::dominating_term(lines);
    long d = f.series().support()[dom.pos];
    if (dom.window_v0 && *dom.window_v0 < f.inner().v())
        throw Error(errc::multiple_slopes_on_annulus,
                    "polygon breaks at v(rho) = " + rat_str(*dom.window_v0) +
                        " inside the annulus");
    if (d <= 0) throw Error(errc::not_aligned, "dominating index must be positive");
    return d;
}

struct SigmaEpsilon {
    long sigma = 0;
    LogValue eps_norm;  // coefficient norm after unit-normalizing both annuli
    LogValue eps_raw;
    Rat window_v0;  // the slope is stable for v(rho) in (0, window_v0)
};

/*
 * dS/dT = eps T^sigma (1 + h) near the outer boundary: sigma is the
 * dominating index of the derivative there, eps its coefficient norm,
 * normalized by the image outer radius.
 */
inline SigmaEpsilon sigma_epsilon(const AnnulusMorphism& f) {
    std::vector<detail::VAffine> dlines;
    std::vector<long> didx;
    for (long n : f.series().support()) {
        if (n == 0) continue;
        Rat c = Rat(padic_valuation(Rat(n), f.p())) + f.series().norm(n).v();
        dlines.push_back(detail::VAffine{c, Rat(n - 1)});
        didx.push_back(n - 1);
    }
    if (dlines.empty()) throw Error(errc::empty_support, "zero derivative");
    auto dom = detail::dominating_term(dlines);
    auto img = detail::dominating_term(annulus_lines(f.series()));

    SigmaEpsilon out;
    out.sigma = didx[dom.pos];
    out.eps_raw = LogValue::from_v(dom.term.c);
    out.eps_norm = LogValue::from_v(dom.term.c - img.term.c);
    Rat w = f.inner().v();
    if (dom.window_v0 && *dom.window_v0 < w) w = *dom.window_v0;
    if (img.window_v0 && *img.window_v0 < w) w = *img.window_v0;
    out.window_v0 = w;
    return out;
}

/* sigma(g o f) = deg(f) sigma(g) + sigma(f), both sides computed independently */
inline Report sigma_composition_check(const AnnulusMorphism& f, const AnnulusMorphism& g) {
    if (!f.series().is_exact() || !g.series().is_exact())
        throw Error(errc::skeleton_mode_unsupported, "composition needs exact coefficients");
    f.series().require_disc();
    g.series().require_disc();
    long df = annulus_degree(f);
    long dg = annulus_degree(g);
    (void)dg;
    auto comp_poly = poly_compose(g.series().exact_coeffs(), f.series().exact_coeffs());
    auto comp = AnnulusMorphism(
        ValuedSeries::exact(f.p(), LogValue::one(), comp_poly),
        lv_max(f.inner(), g.inner()));
    long lhs = sigma_epsilon(comp).sigma;
    long rhs = df * sigma_epsilon(g).sigma + sigma_epsilon(f).sigma;
    Report rep;
    rep.add("sigma(g o f) = deg(f) sigma(g) + sigma(f)", lhs == rhs,
            std::to_string(lhs) + " vs " + std::to_string(rhs));
    return rep;
}

using detail::Flow;
using detail::FlowSet;

/* generic-norm candidates of f at points of the annulus (delta = +1 side) */
inline std::vector<std::pair<long, std::vector<detail::VAffine>>> flow_candidates(
    const ValuedSeries& f, long top) {
    std::vector<std::pair<long, std::vector<detail::VAffine>>> cands;
    for (long i = 1; i <= top; ++i) {
        std::vector<detail::VAffine> terms;
        for (long n : f.support()) {
            LogValue cn = binomial_norm(n, i, f.p());
            if (cn.is_zero()) continue;
            terms.push_back(detail::VAffine{cn.v() + f.norm(n).v(), Rat(n - i)});
        }
        if (!terms.empty()) cands.push_back({i, std::move(terms)});
    }
    return cands;
}

/*
 * The normalized break points b_j(rho) of the profile at eta_rho, as exact
 * monomials of rho on a computed stable window adjacent to rho = 1.
 */
inline FlowSet break_flows(const AnnulusMorphism& f) {
    long d = annulus_degree(f);
    auto cands = flow_candidates(f.series(), d);
    return detail::compute_flows(cands, +1, f.p(), f.inner().v());
}

/* the limit exponent of d log h / d log rho as rho -> 1 */
inline Rat boundary_slope(const Flow& h) { return h.exp; }

/*
 * Eq. (sigma and breaks): |eps| rho^{sigma - d + 1} equals the product of
 * b_j(rho)^{p^{alpha_j} - p^{alpha_{j-1}}}, verified as an identity of
 * exact monomials in rho on the common window.
 */
inline Report different_identity_check(const AnnulusMorphism& f) {
    long d = annulus_degree(f);
    auto se = sigma_epsilon(f);
    auto fs = break_flows(f);
    const long p = f.p().value();

    Rat lhs_c = se.eps_norm.v();
    Rat lhs_s = Rat(se.sigma - d + 1);
    Rat rhs_c(0), rhs_s(0);
    for (const auto& fl : fs.flows) {
        Rat weight = Rat(p_pow(p, fl.alpha_above) - p_pow(p, fl.alpha_below));
        rhs_c += weight * fl.coef_v;
        rhs_s += weight * fl.exp;
    }
    Report rep;
    rep.add("coefficient: v(eps) = sum (p^a_j - p^a_{j-1}) v(b_j)", lhs_c == rhs_c,
            rat_str(lhs_c) + " vs " + rat_str(rhs_c));
    rep.add("exponent: sigma - d + 1 = sum (p^a_j - p^a_{j-1}) db_j", lhs_s == rhs_s,
            rat_str(lhs_s) + " vs " + rat_str(rhs_s));
    // d = s * p^{alpha_top}: the separable part divides out exactly
    rep.add("annulus degree divisible by the point-profile degree",
            Int(d) % p_pow(p, fs.alphas.back()) == 0,
            std::to_string(d) + " vs p^" + std::to_string(fs.alphas.back()));
    return rep;
}

}  // namespace ramicalc
