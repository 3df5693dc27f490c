#pragma once

#include <map>
#include <vector>

#include "ramicalc/lambda.hpp"
#include "ramicalc/valuation.hpp"

namespace ramicalc {

enum class SeriesMode { exact, skeleton };

/*
 * A finitely supported series sum f_i T^i representing a morphism on a
 * closed disc of the given radius (negative Laurent indices are reserved
 * for the annulus module).  Exact mode stores rational coefficients over
 * (Q, |.|_p); skeleton mode stores bare coefficient norms, which is the
 * mode that exercises fractional valuations |k*| = p^Q.  The constant
 * term is always absent (compatible coordinates).
 */
class ValuedSeries {
  public:
    static ValuedSeries exact(Prime p, LogValue radius, std::map<long, Rat> coeffs) {
        ValuedSeries s(p, SeriesMode::exact, std::move(radius));
        for (auto& [i, c] : coeffs)
            if (c != 0) s.exact_.emplace(i, c);
        s.validate();
        return s;
    }

    static ValuedSeries skeleton(Prime p, LogValue radius, std::map<long, LogValue> coeffs) {
        ValuedSeries s(p, SeriesMode::skeleton, std::move(radius));
        for (auto& [i, c] : coeffs) {
            if (c.is_zero())
                throw Error(errc::empty_support, "skeleton coefficient with value 0");
            s.skel_.emplace(i, c);
        }
        s.validate();
        return s;
    }

    const Prime& p() const { return p_; }
    SeriesMode mode() const { return mode_; }
    bool is_exact() const { return mode_ == SeriesMode::exact; }
    const LogValue& radius() const { return radius_; }

    std::vector<long> support() const {
        std::vector<long> out;
        if (is_exact())
            for (const auto& [i, c] : exact_) out.push_back(i);
        else
            for (const auto& [i, c] : skel_) out.push_back(i);
        return out;
    }
    long min_index() const { return support().front(); }
    long degree() const { return support().back(); }

    LogValue norm(long i) const {
        if (is_exact()) {
            auto it = exact_.find(i);
            return it == exact_.end() ? LogValue::zero() : padic_norm(it->second, p_);
        }
        auto it = skel_.find(i);
        return it == skel_.end() ? LogValue::zero() : it->second;
    }

    const Rat& exact_coeff(long i) const {
        static const Rat zero(0);
        if (!is_exact())
            throw Error(errc::skeleton_mode_unsupported, "exact coefficients unavailable");
        auto it = exact_.find(i);
        return it == exact_.end() ? zero : it->second;
    }
    const std::map<long, Rat>& exact_coeffs() const {
        if (!is_exact())
            throw Error(errc::skeleton_mode_unsupported, "exact coefficients unavailable");
        return exact_;
    }

    /* disc morphisms have support in [1, deg] */
    void require_disc() const {
        if (min_index() < 1)
            throw Error(errc::invalid_argument, "disc morphism needs indices >= 1");
    }

  private:
    ValuedSeries(Prime p, SeriesMode m, LogValue r) : p_(p), mode_(m), radius_(std::move(r)) {}

    void validate() const {
        if (exact_.empty() && skel_.empty())
            throw Error(errc::empty_support, "series has empty support");
        if (radius_.is_zero())
            throw Error(errc::radius_out_of_range, "disc radius must be nonzero");
        for (long i : support())
            if (i == 0) throw Error(errc::invalid_argument, "constant term must be absent");
    }

    Prime p_;
    SeriesMode mode_;
    LogValue radius_;
    std::map<long, Rat> exact_;
    std::map<long, LogValue> skel_;
};

/* ---- the lower-envelope engine shared by polygons and profiles ---- */

struct EnvLine {
    long idx;  // monomial degree
    Rat c;     // v of the coefficient: the line w |-> c + idx * w
};

struct EnvPiece {
    long idx;
    Rat c;
    LogValue lo, hi;  // radius interval of dominance
};

/* lower hull of the points (idx, c), slopes strictly increasing */
inline std::vector<EnvLine> lower_hull(std::vector<EnvLine> lines) {
    std::sort(lines.begin(), lines.end(), [](const EnvLine& a, const EnvLine& b) {
        return a.idx < b.idx || (a.idx == b.idx && a.c < b.c);
    });
    std::vector<EnvLine> uniq;
    for (auto& l : lines)
        if (uniq.empty() || uniq.back().idx != l.idx) uniq.push_back(l);
    std::vector<EnvLine> hull;
    for (const auto& l : uniq) {
        while (hull.size() >= 2) {
            const auto &a = hull[hull.size() - 2], &b = hull.back();
            // drop b when slope(a,b) >= slope(b,l); keeps collinear middles out
            if ((b.c - a.c) * (l.idx - b.idx) >= (l.c - b.c) * (b.idx - a.idx))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(l);
    }
    return hull;
}

/*
 * Dominance pieces of max_i |a_i| s^{idx_i} on s in [0, s_max], ordered by
 * increasing radius.  A vertex whose dominance interval degenerates to the
 * boundary point s_max is dropped.
 */
inline std::vector<EnvPiece> value_envelope(const std::vector<EnvLine>& lines,
                                            const LogValue& s_max) {
    if (lines.empty()) throw Error(errc::empty_support, "empty envelope");
    auto hull = lower_hull(lines);
    const Rat w_lo = s_max.v();
    // junction radius (in v) between hull[k] and hull[k+1]; strictly decreasing in k
    auto junction = [&](std::size_t k) {
        return (hull[k].c - hull[k + 1].c) / (hull[k + 1].idx - hull[k].idx);
    };
    std::vector<EnvPiece> out;
    for (std::size_t k = 0; k < hull.size(); ++k) {
        LogValue lo = k == 0 ? LogValue::zero() : LogValue::from_v(junction(k - 1));
        bool last = k + 1 == hull.size() || !(junction(k) > w_lo);
        LogValue hi = last ? s_max : LogValue::from_v(junction(k));
        if (lo < hi) out.push_back(EnvPiece{hull[k].idx, hull[k].c, lo, hi});
        if (last) break;
    }
    return out;
}

/* the largest index attaining the maximum of |a_i| s^i at s (closed-disc degree) */
inline long largest_argmax(const std::vector<EnvLine>& lines, const LogValue& s) {
    if (lines.empty()) throw Error(errc::empty_support, "empty line set");
    bool have = false;
    Rat best;
    long arg = 0;
    for (const auto& l : lines) {
        Rat v = l.c + Rat(l.idx) * s.v();
        if (!have || v < best) {
            best = v;
            arg = l.idx;
            have = true;
        } else if (v == best && l.idx > arg) {
            arg = l.idx;
        }
    }
    return arg;
}

/* raw coefficient lines of a series */
inline std::vector<EnvLine> series_lines(const ValuedSeries& f) {
    std::vector<EnvLine> lines;
    for (long i : f.support()) lines.push_back(EnvLine{i, f.norm(i).v()});
    return lines;
}

/* ---- Newton polygon ---- */

struct NewtonEdge {
    Rat slope;
    long length;
};

struct NewtonPolygon {
    std::vector<std::pair<long, Rat>> vertices;  // (index, v(coefficient))
    std::vector<NewtonEdge> edges;
};

inline NewtonPolygon newton_polygon(const ValuedSeries& f) {
    auto hull = lower_hull(series_lines(f));
    NewtonPolygon np;
    for (const auto& h : hull) np.vertices.push_back({h.idx, h.c});
    for (std::size_t k = 0; k + 1 < hull.size(); ++k)
        np.edges.push_back(NewtonEdge{(hull[k + 1].c - hull[k].c) / (hull[k + 1].idx - hull[k].idx),
                                      hull[k + 1].idx - hull[k].idx});
    return np;
}

/* ---- profile rho |-> max_i |f_i| rho^i ---- */

struct Profile {
    PiecewisePower fn;             // on [0, R]
    std::vector<long> dominating;  // one index per piece, strictly increasing
    PiecewisePower normalized;     // on [0, 1], codomain scaled to [0, 1]
};

inline PiecewisePower envelope_to_piecewise(const std::vector<EnvPiece>& env) {
    std::vector<Piece> pieces;
    for (const auto& e : env) pieces.push_back(Piece{e.lo, e.hi, Rat(e.idx), e.c});
    return PiecewisePower(std::move(pieces));
}

/* rescale a profile on [0, R] to the unit square */
inline PiecewisePower normalize_to_unit(const PiecewisePower& fn) {
    const Rat r_v = fn.domain_hi().v();
    const Rat top_v = fn.range_hi().v();
    std::vector<Piece> pieces;
    for (const auto& pc : fn.pieces()) {
        LogValue lo = pc.lo.is_zero() ? LogValue::zero() : LogValue::from_v(pc.lo.v() - r_v);
        LogValue hi = LogValue::from_v(pc.hi.v() - r_v);
        pieces.push_back(Piece{lo, hi, pc.exp, pc.coef_v + pc.exp * r_v - top_v});
    }
    return PiecewisePower(std::move(pieces));
}

inline Profile profile(const ValuedSeries& f) {
    f.require_disc();
    auto env = value_envelope(series_lines(f), f.radius());
    Profile pr;
    pr.fn = envelope_to_piecewise(env);
    for (const auto& e : env) pr.dominating.push_back(e.idx);
    pr.normalized = normalize_to_unit(pr.fn);
    return pr;
}

/* ---- Taylor recentering (exact mode) ---- */

inline Int binom_int(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long j = 1; j <= k; ++j) {
        r *= (n - k + j);
        r /= j;
    }
    return r;
}

/*
 * The recentered coefficients f_{[i]}(a) = sum_j C(i+j, j) a^j f_{i+j},
 * i.e. the Taylor coefficients of f(a + T) - f(a).
 */
inline ValuedSeries taylor_recenter(const ValuedSeries& f, const Rat& a) {
    if (!f.is_exact())
        throw Error(errc::skeleton_mode_unsupported, "recentering needs exact coefficients");
    f.require_disc();
    if (a != 0 && f.radius() < padic_norm(a, f.p()))
        throw Error(errc::center_outside_disc,
                    "|a| = " + padic_norm(a, f.p()).str() + " exceeds radius");
    if (a == 0) return f;
    std::map<long, Rat> out;
    for (long n = 1; n <= f.degree(); ++n) {
        Rat g(0);
        Rat apow(1);
        // g_n = sum_{m >= n} C(m, n) a^{m-n} f_m
        for (long m = n; m <= f.degree(); ++m) {
            if (m > n) apow *= a;
            Rat fm = f.exact_coeff(m);
            if (fm != 0) g += Rat(binom_int(m, n)) * apow * fm;
        }
        if (g != 0) out[n] = g;
    }
    return ValuedSeries::exact(f.p(), f.radius(), std::move(out));
}

/* ---- generic norms and the profile at a Gauss point ---- */

/*
 * N_i(rho) = max_n |C(n, i)| |f_n| rho^{n-i}: the norm of the i-th
 * coordinate function at all but finitely many centers of radius rho.
 */
inline std::vector<LogValue> generic_norms(const ValuedSeries& f, const LogValue& rho) {
    f.require_disc();
    if (rho.is_zero() || rho > f.radius())
        throw Error(errc::radius_out_of_range, "need 0 < rho <= R");
    std::vector<LogValue> out;
    for (long i = 1; i <= f.degree(); ++i) {
        LogValue best = LogValue::zero();
        for (long n : f.support()) {
            LogValue cn = binomial_norm(n, i, f.p());
            if (cn.is_zero()) continue;
            best = lv_max(best, cn * f.norm(n) * rho.pow(Rat(n - i)));
        }
        out.push_back(best);
    }
    return out;
}

struct PointProfile {
    LambdaP profile;               // normalized to the unit square
    std::vector<long> dominating;  // dominating indices of the envelope
    bool generic;                  // false when a norm max is attained twice
};

/*
 * The profile of f at the Gauss point of radius rho: the envelope of the
 * generic coordinate norms on [0, rho], normalized to the unit square.
 * This is the Herbrand function of the induced residue-field extension,
 * so it validates as Lambda_p.
 */
inline PointProfile profile_at_point(const ValuedSeries& f, const LogValue& rho) {
    f.require_disc();
    if (rho.is_zero() || rho > f.radius())
        throw Error(errc::radius_out_of_range, "need 0 < rho <= R");
    bool generic = true;
    std::vector<EnvLine> lines;
    for (long i = 1; i <= f.degree(); ++i) {
        LogValue best = LogValue::zero();
        int count = 0;
        for (long n : f.support()) {
            LogValue cn = binomial_norm(n, i, f.p());
            if (cn.is_zero()) continue;
            LogValue term = cn * f.norm(n) * rho.pow(Rat(n - i));
            if (term > best) {
                best = term;
                count = 1;
            } else if (term == best) {
                ++count;
            }
        }
        if (count > 1) generic = false;
        if (!best.is_zero()) lines.push_back(EnvLine{i, best.v()});
    }
    auto env = value_envelope(lines, rho);
    auto fn = normalize_to_unit(envelope_to_piecewise(env));
    std::vector<long> dom;
    for (const auto& e : env) dom.push_back(e.idx);
    return PointProfile{LambdaP(f.p(), fn), std::move(dom), generic};
}

/* ---- restriction of a profile to a sub-disc (Lemma profile change) ---- */

inline LambdaP restrict_profile(const LambdaP& P, const LogValue& r) {
    if (r.is_zero() || r.v() <= 0)
        throw Error(errc::radius_out_of_range, "restriction radius must lie in (0,1)");
    std::vector<LogValue> breaks;
    std::vector<long> alphas{0};
    auto bs = P.breaks();
    const auto& as = P.alphas();
    for (std::size_t j = 0; j < bs.size(); ++j) {
        if (bs[j] < r) {  // only breaks strictly inside the sub-disc survive
            breaks.push_back(LogValue::from_v(bs[j].v() - r.v()));
            alphas.push_back(as[j + 1]);
        }
    }
    return make_lambda(P.p(), breaks, alphas);
}

/* ---- residual separable / inseparable degrees ---- */

struct ResidualDegrees {
    Int separable;
    Int inseparable;
};

inline ResidualDegrees residual_degrees(const ValuedSeries& f, const LogValue& rho) {
    auto pp = profile_at_point(f, rho);
    Int insep = pp.profile.degree();
    long local = largest_argmax(series_lines(f), rho);
    if (Int(local) % insep != 0)
        throw Error(errc::non_integral_separable_degree,
                    "local degree " + std::to_string(local) + " not divisible by " +
                        insep.str());
    return ResidualDegrees{Int(local) / insep, insep};
}

/* ---- exact polynomial algebra on coefficient maps ---- */

using Poly = std::map<long, Rat>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b) {
            Rat v = x * y;
            if (v != 0) {
                auto& slot = out[i + j];
                slot += v;
                if (slot == 0) out.erase(i + j);
            }
        }
    return out;
}

/* outer(inner(T)); both with nonnegative exponents */
inline Poly poly_compose(const Poly& outer, const Poly& inner) {
    Poly out;
    Poly power{{0, Rat(1)}};
    long prev = 0;
    for (const auto& [m, c] : outer) {
        for (long t = prev; t < m; ++t) power = poly_mul(power, inner);
        prev = m;
        for (const auto& [i, x] : power) {
            Rat v = c * x;
            if (v != 0) {
                auto& slot = out[i];
                slot += v;
                if (slot == 0) out.erase(i);
            }
        }
    }
    return out;
}

inline Poly poly_derivative(const Poly& a) {
    Poly out;
    for (const auto& [i, x] : a)
        if (i != 0) out[i - 1] = Rat(i) * x;
    return out;
}

}  // namespace ramicalc
