#pragma once

#include <optional>

#include "ramicalc/report.hpp"
#include "ramicalc/series.hpp"

namespace ramicalc {

enum class RadialVerdict { radial, weakly_n_radial, not_radial };

struct RadialWitness {
    long index;             // recentered coordinate index whose norm breaks the bound
    LogValue center_radius; // centers approach this radius (the full disc radius)
    LogValue eval_radius;   // a radius where N_index * s^index exceeds the profile
};

struct RadialityCertificate {
    RadialVerdict verdict = RadialVerdict::not_radial;
    long characteristic = 0;        // for radial: the total slope count
    long weak_level = 0;            // largest n with f weakly n-radial
    long n_radial_level = 0;        // largest n with f n-radial (0: breaks pile up at R)
    LogValue border;                // border of n_radial_level-radiality (0 when radial)
    std::vector<long> dominating;   // the certified dominating set D_{f,n}
    std::optional<RadialWitness> witness;

    bool radial() const { return verdict == RadialVerdict::radial; }
    bool simple() const { return radial() && characteristic == 2; }
};

namespace detail {

/*
 * Violation interval of the limit-norm line M(w) = w_c + idx * w against the
 * envelope in v-coordinates: the w-region where the recentered monomial
 * strictly exceeds the profile.  By concavity of the envelope this is one
 * interval (w_start, w_end), possibly unbounded above (radii shrinking to 0).
 */
struct Violation {
    Rat w_start;
    bool starts_at_boundary = false;  // w_start == v(R): breaks accumulate at R
    bool unbounded = false;
    Rat w_end;  // meaningful when !unbounded
};

inline std::optional<Violation> violation_of(const std::vector<EnvPiece>& env, long idx,
                                             const Rat& w_c) {
    std::optional<Rat> lo, hi;
    bool unbounded = false;
    for (const auto& pc : env) {
        // env piece in w: [a, b], b = +inf on the innermost piece
        Rat a = pc.hi.v();
        bool binf = pc.lo.is_zero();
        Rat b = binf ? Rat(0) : pc.lo.v();
        // diff(w) = (pc.c - w_c) + (pc.idx - idx) * w > 0 <=> violation
        Rat d0 = pc.c - w_c;
        long ds = pc.idx - idx;
        auto record = [&](const Rat& x, const Rat& y, bool yinf) {
            if (!lo || x < *lo) lo = x;
            if (yinf) unbounded = true;
            else if (!hi || y > *hi) hi = y;
        };
        if (ds == 0) {
            if (d0 > 0) record(a, b, binf);
            continue;
        }
        Rat root = -d0 / ds;
        if (ds > 0) {
            // violated for w > root
            Rat x = std::max(a, root);
            if (binf || x < b) record(x, b, binf);
        } else {
            // violated for w < root
            if (root > a) {
                if (binf) record(a, root, false);
                else record(a, std::min(b, root), false);
            }
        }
    }
    if (!lo) return std::nullopt;
    Violation v;
    v.w_start = *lo;
    v.starts_at_boundary = *lo == env.back().hi.v();
    v.unbounded = unbounded;
    if (!unbounded) v.w_end = *hi;
    return v;
}

}  // namespace detail

/*
 * Decide (weak) radiality from the limit generic norms N_i(R).  A center at
 * radius rho < R realizes N_i(rho) for all but finitely many residue classes,
 * and N_i is nondecreasing in rho, so the recentered polygon is center
 * independent past some s < R exactly when no limit-norm monomial exceeds the
 * profile there and the governing coefficients are exact.  All comparisons
 * are line-versus-envelope checks at finitely many crossings.
 */
inline RadialityCertificate classify_radiality(const ValuedSeries& f) {
    f.require_disc();
    const LogValue R = f.radius();
    auto raw = series_lines(f);
    auto env = value_envelope(raw, R);
    const std::size_t m = env.size();
    auto norms = generic_norms(f, R);  // N_i(R), i = 1..deg

    // exactness of dominating coefficients: N_{i_l}(R) = |f_{i_l}|
    std::vector<bool> exact(m, false);
    for (std::size_t k = 0; k < m; ++k)
        exact[k] = norms[env[k].idx - 1] == f.norm(env[k].idx);

    // violations of every recentered index against the profile
    std::vector<std::pair<long, detail::Violation>> viols;
    for (long i = 1; i <= f.degree(); ++i) {
        if (norms[i - 1].is_zero()) continue;
        auto v = detail::violation_of(env, i, norms[i - 1].v());
        if (v) viols.push_back({i, *v});
    }

    RadialityCertificate cert;
    cert.characteristic = static_cast<long>(m);

    long exact_suffix = 0;
    for (std::size_t k = m; k-- > 0;) {
        if (!exact[k]) break;
        ++exact_suffix;
    }

    if (viols.empty() && exact_suffix == static_cast<long>(m)) {
        cert.verdict = RadialVerdict::radial;
        cert.border = LogValue::zero();
        cert.n_radial_level = static_cast<long>(m);
        cert.weak_level = static_cast<long>(m);
        for (const auto& e : env) cert.dominating.push_back(e.idx);
        return cert;
    }

    // witness: a radius strictly inside the first violation
    if (!viols.empty()) {
        const auto& [wi, wv] = viols.front();
        Rat mid = wv.unbounded ? Rat(wv.w_start + 1) : Rat((wv.w_start + wv.w_end) / 2);
        cert.witness = RadialWitness{wi, R, LogValue::from_v(mid)};
    } else {
        // an inexact dominating coefficient without a strict violation can only
        // touch the envelope; still not radial, witnessed at its own piece
        for (std::size_t k = 0; k < m; ++k)
            if (!exact[k]) {
                Rat a = env[k].hi.v(), b = env[k].lo.is_zero() ? a + 2 : env[k].lo.v();
                cert.witness = RadialWitness{env[k].idx, R, LogValue::from_v((a + b) / 2)};
                break;
            }
    }

    // n-radiality: the top exact_suffix slopes, provided no violation reaches R
    bool boundary_violation = false;
    Rat viol_w_min;  // smallest violating w = largest violating radius
    bool have_viol = false;
    for (const auto& [vi, vv] : viols) {
        (void)vi;
        if (vv.starts_at_boundary) boundary_violation = true;
        if (!have_viol || vv.w_start < viol_w_min) {
            viol_w_min = vv.w_start;
            have_viol = true;
        }
    }
    cert.n_radial_level = boundary_violation ? 0 : exact_suffix;
    if (cert.n_radial_level > 0) {
        // border = max(structural break below the top-n region, violation sup)
        Rat border_w;
        bool have_border = false;
        std::size_t first_piece = m - static_cast<std::size_t>(cert.n_radial_level);
        if (first_piece > 0) {
            border_w = env[first_piece].lo.v();
            have_border = true;
        }
        if (have_viol && (!have_border || viol_w_min < border_w)) {
            border_w = viol_w_min;
            have_border = true;
        }
        cert.border = have_border ? LogValue::from_v(border_w) : LogValue::zero();
    }

    // weak level: top-n slopes center independent
    auto weak_holds = [&](long n) {
        if (n < 1 || n > static_cast<long>(m)) return false;
        for (long l = 0; l < n; ++l)
            if (!exact[m - 1 - static_cast<std::size_t>(l)]) return false;
        long lowest_top = env[m - static_cast<std::size_t>(n)].idx;
        // region bounds in w: the top-n region and top-(n-1) region
        auto region_hi = [&](long depth) -> std::optional<Rat> {
            // w upper end of the top-`depth` dominance region; nullopt = +inf
            if (depth <= 0) return R.v();
            std::size_t first = m - static_cast<std::size_t>(depth);
            if (env[first].lo.is_zero()) return std::nullopt;
            return env[first].lo.v();
        };
        for (const auto& [vi, vv] : viols) {
            bool in_top = false;
            for (long l = 0; l < n; ++l)
                if (env[m - 1 - static_cast<std::size_t>(l)].idx == vi) in_top = true;
            if (in_top) return false;  // exact dominating lines never violate
            std::optional<Rat> hi = vi > lowest_top ? region_hi(n) : region_hi(n - 1);
            if (!hi) return false;            // region unbounded: any violation kills it
            if (vv.w_start < *hi) return false;
        }
        return true;
    };
    cert.weak_level = 0;
    for (long n = static_cast<long>(m); n >= 1; --n)
        if (weak_holds(n)) {
            cert.weak_level = n;
            break;
        }
    cert.verdict =
        cert.weak_level >= 1 ? RadialVerdict::weakly_n_radial : RadialVerdict::not_radial;
    for (long l = cert.weak_level; l-- > 0;)
        cert.dominating.push_back(env[m - 1 - static_cast<std::size_t>(l)].idx);
    std::sort(cert.dominating.begin(), cert.dominating.end());
    return cert;
}

/*
 * Arithmetic consequences of (weak) n-radiality: dominating indices are
 * strictly increasing powers of p with p^l | i_l, the divisibility and
 * binomial bound for coefficients reaching past a dominating one, and the
 * multiple inequality |m| |f_{mi}| R^{mi} <= |f_i| R^i.
 */
inline Report radial_arithmetic_check(const ValuedSeries& f, const RadialityCertificate& cert) {
    Report rep;
    const long p = f.p().value();
    const LogValue R = f.radius();
    long l = 0;
    long prev = 0;
    for (long i : cert.dominating) {
        auto a = p_power_exponent(Int(i), p);
        rep.add("dominating index " + std::to_string(i) + " is a power of " + std::to_string(p),
                a.has_value());
        rep.add("p^" + std::to_string(l) + " | " + std::to_string(i),
                Int(i) % p_pow(p, l) == 0);
        if (l > 0)
            rep.add("dominating indices strictly increase", i > prev);
        prev = i;
        ++l;
    }
    for (long i : cert.dominating) {
        LogValue lhs_i = f.norm(i) * R.pow(Rat(i));
        for (long j : f.support()) {
            if (j == i) continue;
            LogValue lhs_j = f.norm(j) * R.pow(Rat(j));
            if (lhs_j < lhs_i) continue;
            rep.add("index " + std::to_string(j) + " beyond dominating " + std::to_string(i) +
                        ": j > i and i | j",
                    j > i && j % i == 0);
            bool bound = binomial_norm(j, i, f.p()) * lhs_j <= lhs_i;
            rep.add("binomial bound |C(" + std::to_string(j) + "," + std::to_string(i) +
                        ")| |f_j| R^j <= |f_i| R^i",
                    bound);
        }
        for (long mult = 2; mult * i <= f.degree(); ++mult) {
            long j = mult * i;
            if (f.norm(j).is_zero()) continue;
            LogValue lhs = padic_norm(Rat(mult), f.p()) * f.norm(j) * R.pow(Rat(j));
            rep.add("multiple bound |m| |f_{mi}| R^{mi} <= |f_i| R^i at m = " +
                        std::to_string(mult) + ", i = " + std::to_string(i),
                    lhs <= lhs_i);
        }
    }
    return rep;
}

/*
 * Verify a user-supplied factorization of an exact disc morphism: the
 * factors must compose (first entry applied first) to f exactly, and their
 * Gauss-point profiles must reproduce the canonical factorization of the
 * profile of f, with identity-profile (residually separable) factors
 * permitted only at the tail.
 */
inline Report verify_disc_factorization(const ValuedSeries& f,
                                        const std::vector<ValuedSeries>& factors) {
    if (!f.is_exact())
        throw Error(errc::skeleton_mode_unsupported, "factorization check needs exact mode");
    if (factors.empty()) throw Error(errc::empty_data, "no factors supplied");
    for (const auto& g : factors) {
        if (!g.is_exact())
            throw Error(errc::skeleton_mode_unsupported, "factor in skeleton mode");
        g.require_disc();
    }
    f.require_disc();

    Poly comp = factors.front().exact_coeffs();
    for (std::size_t k = 1; k < factors.size(); ++k)
        comp = poly_compose(factors[k].exact_coeffs(), comp);
    for (const auto& [i, c] : f.exact_coeffs()) {
        auto it = comp.find(i);
        if (it == comp.end() || it->second != c)
            throw Error(errc::composition_mismatch,
                        "coefficient of T^" + std::to_string(i) + " differs: expected " +
                            rat_str(c));
    }
    for (const auto& [i, c] : comp)
        if (f.exact_coeffs().find(i) == f.exact_coeffs().end())
            throw Error(errc::composition_mismatch,
                        "unexpected coefficient of T^" + std::to_string(i) + " = " + rat_str(c));

    Report rep;
    rep.add("composition equals f exactly", true);

    auto canon = canonical_factorization(profile_at_point(f, f.radius()).profile);
    LogValue rho = f.radius();
    std::vector<LambdaP> nontrivial;
    bool tail_ok = true;
    bool seen_identity = false;
    for (const auto& g : factors) {
        auto pp = profile_at_point(g, rho);
        if (pp.profile.break_count() == 0) {
            seen_identity = true;
        } else {
            if (seen_identity) tail_ok = false;  // identity factor before a ramified one
            nontrivial.push_back(pp.profile);
        }
        rho = profile(g).fn.eval(rho);  // image disc radius feeds the next factor
    }
    rep.add("identity-profile factors only in the tail", tail_ok);
    rep.add("ramified factor count matches the canonical chain",
            nontrivial.size() == canon.size(),
            std::to_string(nontrivial.size()) + " vs " + std::to_string(canon.size()));
    if (nontrivial.size() == canon.size()) {
        for (std::size_t k = 0; k < canon.size(); ++k) {
            rep.add("factor " + std::to_string(k + 1) + " profile is simple",
                    is_simple(nontrivial[k]));
            rep.add("factor " + std::to_string(k + 1) + " profile equals canonical factor",
                    pw_equals(nontrivial[k].fn(), canon[k].fn()));
        }
    }
    return rep;
}

}  // namespace ramicalc
