#pragma once

#include <set>

#include "ramicalc/annulus.hpp"
#include "ramicalc/radial.hpp"

namespace ramicalc {

enum class SignConvention { plus, minus };

inline const char* convention_name(SignConvention c) {
    return c == SignConvention::plus ? "plus" : "minus";
}

/*
 * Per-tangent-direction record at the Gauss point eta_{0,1}: annulus degree,
 * sigma exponent with normalized coefficient norm, and the exact break flows
 * with boundary slopes and limit classes.
 */
struct DirectionData {
    std::string label;            // "0", "0mod2", ..., "inf", "generic"
    long d = 0;                   // annulus degree of the direction
    long sigma = 0;
    LogValue eps;                 // normalized coefficient norm of the derivative
    Rat window_v0;                // data exact for v(rho) in (0, window_v0)
    std::vector<Flow> flows;      // normalized break flows b_{t,j}(rho)
    std::vector<long> alphas;     // local degree exponents of the point profile
    std::vector<int> flow_layer;  // per flow: the Gauss layer its limit joins (0: limit 1)
};

namespace detail {

/* sigma and d of an annulus direction from its coefficient-norm lines */
struct DirCore {
    long d = 0;
    long sigma = 0;
    Rat eps_c;  // normalized
    Rat window_v0;
};

inline DirCore direction_core(const std::vector<std::pair<long, Rat>>& coeff_lines,
                              const Prime& p, int delta) {
    std::vector<VAffine> flines, dlines;
    std::vector<long> didx;
    for (const auto& [n, c] : coeff_lines) {
        flines.push_back(VAffine{c, Rat(delta * n)});
        if (n != 0) {
            dlines.push_back(
                VAffine{Rat(padic_valuation(Rat(n), p)) + c, Rat(delta * (n - 1))});
            didx.push_back(n - 1);
        }
    }
    auto domf = dominating_term(flines);
    auto domd = dominating_term(dlines);
    DirCore out;
    out.window_v0 = Rat(1);
    if (domf.window_v0 && *domf.window_v0 < out.window_v0) out.window_v0 = *domf.window_v0;
    if (domd.window_v0 && *domd.window_v0 < out.window_v0) out.window_v0 = *domd.window_v0;
    long nf = coeff_lines[domf.pos].first;
    long nd = didx[domd.pos];
    out.d = nf;
    if (delta > 0) {
        out.sigma = nd;
    } else {
        // the infinity direction via W = 1/f(1/U): dW/dU = f'(1/U) / (U^2 f(1/U)^2),
        // so sigma = 2d - d' - 2 and the image radius normalization cancels one a
        out.sigma = 2 * nf - nd - 2;
    }
    out.eps_c = domd.term.c - domf.term.c;
    if (out.d <= 0) throw Error(errc::not_aligned, "direction degree must be positive");
    return out;
}

/* flow candidates of a coefficient-norm list, on either side of the point */
inline std::vector<std::pair<long, std::vector<VAffine>>> norm_flow_candidates(
    const std::vector<std::pair<long, Rat>>& coeff_lines, long top, const Prime& p,
    int delta) {
    std::vector<std::pair<long, std::vector<VAffine>>> cands;
    for (long i = 1; i <= top; ++i) {
        std::vector<VAffine> terms;
        for (const auto& [n, c] : coeff_lines) {
            LogValue cn = binomial_norm(n, i, p);
            if (cn.is_zero()) continue;
            terms.push_back(VAffine{cn.v() + c, Rat(delta * (n - i))});
        }
        if (!terms.empty()) cands.push_back({i, std::move(terms)});
    }
    return cands;
}

inline DirectionData direction_from_lines(std::string label,
                                          const std::vector<std::pair<long, Rat>>& lines,
                                          long top, const Prime& p, int delta) {
    DirectionData dd;
    dd.label = std::move(label);
    auto core = direction_core(lines, p, delta);
    dd.d = core.d;
    dd.sigma = core.sigma;
    dd.eps = LogValue::from_v(core.eps_c);
    auto fs = compute_flows(norm_flow_candidates(lines, top, p, delta), delta, p, Rat(1));
    dd.flows = fs.flows;
    dd.alphas = fs.alphas;
    dd.window_v0 = std::min(core.window_v0, fs.window_v0);
    return dd;
}

inline std::vector<std::pair<long, Rat>> norm_lines(const ValuedSeries& f) {
    std::vector<std::pair<long, Rat>> out;
    for (long n : f.support()) out.push_back({n, f.norm(n).v()});
    return out;
}

}  // namespace detail

/*
 * Direction data at the Gauss point eta_{0,1}.  center = 0 is the inward
 * direction and nullopt the outward one; both are computed from coefficient
 * norms alone and work in either mode.  A unit-circle center requires exact
 * mode (Taylor recentering).
 */
inline DirectionData direction_data(const ValuedSeries& f, const std::optional<Rat>& center,
                                    const Prime& p) {
    f.require_disc();
    if (f.p() != p) throw Error(errc::invalid_argument, "prime mismatch");
    if (!center)
        return detail::direction_from_lines("inf", detail::norm_lines(f), f.degree(), p, -1);
    if (*center == 0)
        return detail::direction_from_lines("0", detail::norm_lines(f), f.degree(), p, +1);
    if (!f.is_exact())
        throw Error(errc::skeleton_mode_unsupported,
                    "unit-circle directions need exact coefficients");
    if (padic_norm(*center, p) != LogValue::one())
        throw Error(errc::not_on_unit_circle, "direction center must have |a| = 1");
    ValuedSeries g = taylor_recenter(f, *center);
    return detail::direction_from_lines(rat_str(*center), detail::norm_lines(g), g.degree(),
                                        p, +1);
}

namespace detail {

/*
 * The generic direction: every residue class avoiding the critical ones has
 * recentered coefficient norms equal to the limit norms N_n(1), so its data
 * is computed symbolically from those.
 */
inline DirectionData generic_direction(const ValuedSeries& f, const Prime& p) {
    auto norms = generic_norms(f, LogValue::one());
    std::vector<std::pair<long, Rat>> lines;
    for (long n = 1; n <= f.degree(); ++n)
        if (!norms[n - 1].is_zero()) lines.push_back({n, norms[n - 1].v()});
    return direction_from_lines("generic", lines, f.degree(), p, +1);
}

/*
 * Residue classes of unit-circle zeros of the coordinate functions f_[i]
 * (including f' = f_[1]): the only classes whose direction data can deviate
 * from the generic one.  The norm polygons decide existence in either mode;
 * resolving the classes themselves needs exact coefficients, and classes
 * outside the prime field cannot be recentered over Q and are rejected.
 */
inline std::set<long> critical_classes(const ValuedSeries& f, const Prime& p) {
    std::set<long> classes;
    const long pv = p.value();
    for (long i = 1; i <= f.degree(); ++i) {
        // norm polygon of f_[i](T) = sum_n C(n,i) f_n T^{n-i}
        std::vector<EnvLine> lines;
        for (long n : f.support()) {
            if (n < i) continue;
            LogValue cn = binomial_norm(n, i, p);
            if (cn.is_zero()) continue;
            lines.push_back(EnvLine{n - i, cn.v() + f.norm(n).v()});
        }
        if (lines.size() < 2) continue;
        auto hull = lower_hull(lines);
        for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
            if (hull[k].c != hull[k + 1].c) continue;  // only slope-0 edges matter
            if (!f.is_exact())
                throw Error(errc::non_rational_critical_direction,
                            "skeleton mode cannot resolve unit-circle zeros of f_[" +
                                std::to_string(i) + "]");
            // edge polynomial over F_p from the exact coefficients
            long m1 = hull[k].idx, m2 = hull[k + 1].idx;
            long e = rat_num(hull[k].c).convert_to<long>();
            std::vector<long> edge(m2 - m1 + 1, 0);
            for (long n : f.support()) {
                long m = n - i;
                if (m < m1 || m > m2) continue;
                Rat c = Rat(binom_int(n, i)) * f.exact_coeff(n);
                if (c == 0) continue;
                Rat scaled = e >= 0 ? c / Rat(p_pow(pv, e)) : c * Rat(p_pow(pv, -e));
                if (padic_valuation(scaled, p) > 0) continue;
                Int num_m = ((rat_num(scaled) % pv) + pv) % pv;
                Int den_m = ((rat_den(scaled) % pv) + pv) % pv;
                long nm = num_m.convert_to<long>();
                long dm = den_m.convert_to<long>();
                long inv = 1;
                for (long t = 1; t < pv; ++t)
                    if ((dm * t) % pv == 1) inv = t;
                edge[m - m1] = (nm * inv) % pv;
            }
            long lead = 0;
            while (lead < static_cast<long>(edge.size()) && edge[lead] == 0) ++lead;
            std::vector<long> poly(edge.begin() + lead, edge.end());
            long deg_left = static_cast<long>(poly.size()) - 1;
            for (long r = 1; r < pv && deg_left > 0; ++r) {
                bool again = true;
                while (again && deg_left > 0) {
                    long val = 0, xp = 1;
                    for (long j = 0; j <= deg_left; ++j) {
                        val = (val + poly[j] * xp) % pv;
                        xp = (xp * r) % pv;
                    }
                    if (val % pv != 0) {
                        again = false;
                        continue;
                    }
                    classes.insert(r);
                    std::vector<long> q(deg_left, 0);
                    long carry = poly[deg_left];
                    for (long j = deg_left - 1; j >= 0; --j) {
                        q[j] = ((carry % pv) + pv) % pv;
                        carry = poly[j] + carry * r;
                    }
                    poly.assign(q.begin(), q.end());
                    deg_left = static_cast<long>(poly.size()) - 1;
                }
            }
            if (deg_left > 0)
                throw Error(errc::non_rational_critical_direction,
                            "f_[" + std::to_string(i) +
                                "] has unit-circle zeros outside the prime field");
        }
    }
    return classes;
}

/* classify a flow limit against the Gauss-point breaks */
inline int layer_of_limit(const Rat& limit_v, const std::vector<LogValue>& breaks) {
    if (limit_v == 0) return 0;  // flows converging to 1
    for (std::size_t i = 0; i < breaks.size(); ++i)
        if (breaks[i].v() == limit_v) return static_cast<int>(i) + 1;
    throw Error(errc::no_stable_window,
                "flow limit v = " + rat_str(limit_v) + " matches no Gauss break");
}

}  // namespace detail

struct LayerIdentity {
    int layer = 0;
    Rat lhs, rhs;
    Rat generic_term;  // one generic direction's contribution; must vanish
    bool pass = false;
};

struct HarmonicityReport {
    long deg_local = 0;  // [H(y):H(x)] at the Gauss point
    std::vector<LogValue> gauss_breaks;
    std::vector<long> gauss_alphas;
    SignConvention convention = SignConvention::plus;
    std::vector<DirectionData> directions;  // 0, critical classes, inf, then generic
    Rat rh_lhs, rh_rhs;
    bool rh_pass = false;
    bool generic_sigma_zero = false;
    bool generic_rep_matches = true;  // exact-mode cross-check of the symbolic data
    std::vector<LayerIdentity> layers;
    bool pass = false;
};

/*
 * The harmonicity verifier at the Gauss point eta_{0,1}: local Riemann-
 * Hurwitz and the layered identities, with the (db +- 1) sign fixed by the
 * chosen convention.  The inward and outward directions plus every critical
 * residue class are computed exactly; all remaining classes carry the
 * symbolic generic-direction data, whose contribution must vanish for the
 * direction sums to converge.
 */
inline HarmonicityReport gauss_harmonicity(const ValuedSeries& f, const Prime& p,
                                           SignConvention convention) {
    f.require_disc();
    if (!(f.radius() == LogValue::one()))
        throw Error(errc::non_finite_at_gauss_point, "the Gauss point needs radius 1");

    HarmonicityReport rep;
    rep.convention = convention;
    auto gauss = profile_at_point(f, LogValue::one());
    rep.gauss_breaks = gauss.profile.breaks();
    rep.gauss_alphas = gauss.profile.alphas();
    rep.deg_local = largest_argmax(series_lines(f), LogValue::one());

    auto critical = detail::critical_classes(f, p);

    rep.directions.push_back(direction_data(f, Rat(0), p));
    for (long r : critical) rep.directions.push_back(direction_data(f, Rat(r), p));
    rep.directions.push_back(direction_data(f, std::nullopt, p));
    rep.directions.push_back(detail::generic_direction(f, p));

    // exact-mode cross-check: one non-critical rational class must reproduce
    // the symbolic generic data
    if (f.is_exact()) {
        for (long r = 1; r < p.value(); ++r) {
            if (critical.count(r)) continue;
            auto probe = direction_data(f, Rat(r), p);
            const auto& gen = rep.directions.back();
            bool same = probe.d == gen.d && probe.sigma == gen.sigma &&
                        probe.eps == gen.eps && probe.flows.size() == gen.flows.size();
            for (std::size_t j = 0; same && j < probe.flows.size(); ++j)
                same = probe.flows[j].coef_v == gen.flows[j].coef_v &&
                       probe.flows[j].exp == gen.flows[j].exp;
            rep.generic_rep_matches = same;
            break;
        }
    }

    for (auto& dd : rep.directions)
        for (auto& fl : dd.flows)
            dd.flow_layer.push_back(detail::layer_of_limit(fl.limit_v, rep.gauss_breaks));

    const DirectionData& gen = rep.directions.back();
    rep.generic_sigma_zero = gen.sigma == 0;

    // local Riemann-Hurwitz: 2 deg - 2 = sum sigma_t
    rep.rh_lhs = Rat(2 * rep.deg_local - 2);
    rep.rh_rhs = 0;
    for (std::size_t k = 0; k + 1 < rep.directions.size(); ++k)
        rep.rh_rhs += rep.directions[k].sigma;
    rep.rh_pass = rep.generic_sigma_zero && rep.rh_lhs == rep.rh_rhs;

    const Rat sign = convention == SignConvention::plus ? Rat(1) : Rat(-1);
    const long pv = p.value();
    const long n = static_cast<long>(rep.gauss_breaks.size());
    for (int layer = 0; layer <= n; ++layer) {
        LayerIdentity li;
        li.layer = layer;
        if (layer == 0) {
            li.lhs = Rat(2 * rep.deg_local) - Rat(2) * Rat(p_pow(pv, rep.gauss_alphas.back()));
        } else {
            li.lhs = Rat(2) * Rat(p_pow(pv, rep.gauss_alphas[layer]) -
                                  p_pow(pv, rep.gauss_alphas[layer - 1]));
        }
        li.rhs = 0;
        auto contribution = [&](const DirectionData& dd) {
            Rat sum(0);
            for (std::size_t j = 0; j < dd.flows.size(); ++j) {
                if (dd.flow_layer[j] != layer) continue;
                Rat weight = Rat(p_pow(pv, dd.flows[j].alpha_above) -
                                 p_pow(pv, dd.flows[j].alpha_below));
                sum += weight * (dd.flows[j].exp + sign);
            }
            if (layer == 0) sum += Rat(dd.d) - Rat(p_pow(pv, dd.alphas.back()));
            return sum;
        };
        for (std::size_t k = 0; k + 1 < rep.directions.size(); ++k)
            li.rhs += contribution(rep.directions[k]);
        li.generic_term = contribution(gen);
        li.pass = li.generic_term == 0 && li.lhs == li.rhs;
        rep.layers.push_back(li);
    }
    rep.pass = rep.rh_pass && rep.generic_rep_matches;
    for (const auto& li : rep.layers) rep.pass = rep.pass && li.pass;
    return rep;
}

}  // namespace ramicalc
