#pragma once

#include <map>
#include <string>
#include <vector>

#include "ramicalc/group.hpp"
#include "ramicalc/lambda.hpp"
#include "ramicalc/report.hpp"

namespace ramicalc {

/*
 * An inertia assignment i: G -> [0,1] (values).  The identity maps to the
 * value 0; every other element to a value in (0,1].  Admissibility is the
 * four-axiom suite of validate_inertia, which is exactly what makes the
 * level sets a filtration by normal subgroups.
 */
class InertiaFunction {
  public:
    InertiaFunction(const FiniteGroup& g, std::vector<LogValue> values)
        : values_(std::move(values)) {
        if (values_.size() != g.order())
            throw Error(errc::bad_inertia, "need one value per group element");
    }

    const LogValue& operator()(int s) const { return values_[s]; }
    std::size_t size() const { return values_.size(); }

  private:
    std::vector<LogValue> values_;
};

struct InertiaViolation {
    std::string axiom;
    int sigma = -1, tau = -1;
};

struct InertiaReport {
    std::vector<InertiaViolation> violations;
    bool valid() const { return violations.empty(); }
};

/* Exhaustive check of the four admissibility axioms. */
inline InertiaReport validate_inertia(const FiniteGroup& g, const InertiaFunction& i) {
    InertiaReport rep;
    const int n = static_cast<int>(g.order());
    for (int s = 0; s < n; ++s) {
        if (s == g.identity()) {
            if (!i(s).is_zero()) rep.violations.push_back({"i(e) = 0", s, -1});
            continue;
        }
        if (i(s).is_zero()) rep.violations.push_back({"i(sigma) > 0 for sigma != e", s, -1});
        else if (i(s) > LogValue::one())
            rep.violations.push_back({"i(sigma) <= 1", s, -1});
        if (!(i(g.inv(s)) == i(s)))
            rep.violations.push_back({"i(sigma^{-1}) = i(sigma)", s, -1});
    }
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            if (i(g.mul(s, t)) > lv_max(i(s), i(t)))
                rep.violations.push_back({"i(st) <= max(i(s), i(t))", s, t});
            if (!(i(g.conj(t, s)) == i(s)))
                rep.violations.push_back({"i(tst^{-1}) = i(s)", s, t});
        }
    return rep;
}

/*
 * Test-data generator: a filtration inertia from a strictly increasing
 * chain {e} = N_0 < N_1 < ... < N_m = G of normal subgroups and values
 * 0 < v_1 < ... < v_m <= 1; elements of N_j \ N_{j-1} get value v_j.
 */
inline InertiaFunction make_filtration_inertia(const FiniteGroup& g,
                                               const std::vector<Subgroup>& chain,
                                               const std::vector<LogValue>& values) {
    if (chain.empty() || chain.front().size() != 1 || chain.back().size() != g.order())
        throw Error(errc::invalid_argument, "chain must run from {e} to G");
    if (values.size() != chain.size() - 1)
        throw Error(errc::non_monotone_values, "need one value per proper step");
    for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
        if (!chain[j].subset_of(chain[j + 1]) || chain[j].size() >= chain[j + 1].size())
            throw Error(errc::invalid_argument, "chain must strictly increase");
    }
    for (const auto& sg : chain)
        if (!sg.is_normal(g)) throw Error(errc::non_normal_subgroup, "chain subgroup not normal");
    for (std::size_t j = 0; j < values.size(); ++j) {
        if (values[j].is_zero() || values[j] > LogValue::one() || values[j].v() < 0)
            throw Error(errc::non_monotone_values, "values must lie in (0,1]");
        if (j > 0 && !(values[j - 1] < values[j]))
            throw Error(errc::non_monotone_values, "values must strictly increase");
    }
    std::vector<LogValue> vals(g.order(), LogValue::zero());
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (static_cast<int>(x) == g.identity()) continue;
        for (std::size_t j = 1; j < chain.size(); ++j)
            if (chain[j].contains(static_cast<int>(x))) {
                vals[x] = values[j - 1];
                break;
            }
    }
    InertiaFunction fn(g, std::move(vals));
    auto rep = validate_inertia(g, fn);
    if (!rep.valid()) throw Error(errc::bad_inertia, "generated inertia fails validation");
    return fn;
}

struct FiltrationStep {
    LogValue break_value;  // r_j; r_0 is the value 0
    Subgroup group;        // G_{r_j}
};

/*
 * Level sets G_r = { sigma : i(sigma) <= r } at the attained inertia values.
 * Each must be a normal subgroup; breaks below the value 1 must have p-power
 * order (the residual-characteristic consistency of Lemma p-groups).
 */
inline std::vector<FiltrationStep> ramification_filtration(const FiniteGroup& g,
                                                           const InertiaFunction& i,
                                                           const Prime& p) {
    auto rep = validate_inertia(g, i);
    if (!rep.valid())
        throw Error(errc::bad_inertia,
                    "inertia axioms fail (" + rep.violations.front().axiom + ")");
    std::vector<LogValue> breaks;
    for (std::size_t s = 0; s < g.order(); ++s) breaks.push_back(i(static_cast<int>(s)));
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    std::vector<FiltrationStep> out;
    for (const auto& r : breaks) {
        std::vector<bool> m(g.order(), false);
        for (std::size_t s = 0; s < g.order(); ++s)
            if (!(r < i(static_cast<int>(s)))) m[s] = true;
        Subgroup gr(g, std::move(m));
        if (!gr.is_normal(g))
            throw Error(errc::bad_inertia, "level set not normal");
        if (r < LogValue::one() && !p_power_exponent(Int(gr.size()), p.value()))
            throw Error(errc::p_group_violation,
                        "|G_r| = " + std::to_string(gr.size()) + " at break " + r.str() +
                            " is not a power of " + std::to_string(p.value()));
        out.push_back(FiltrationStep{r, std::move(gr)});
    }
    return out;
}

/*
 * The Herbrand function H(r) = prod_{sigma} max(r, i(sigma)), assembled
 * piece by piece: over (r_j, r_{j+1}) the local degree is |G_{r_j}|.
 */
inline LambdaP herbrand_galois(const FiniteGroup& g, const InertiaFunction& i,
                               const Prime& p) {
    auto filt = ramification_filtration(g, i, p);
    // interior break values (exclude 0 and 1)
    std::vector<FiltrationStep const*> interior;
    for (const auto& st : filt)
        if (!st.break_value.is_zero() && st.break_value < LogValue::one())
            interior.push_back(&st);

    std::vector<Piece> pieces(interior.size() + 1);
    Rat coef(0);
    for (std::size_t k = interior.size() + 1; k-- > 0;) {
        // the subgroup governing piece k is the level set at the break below it
        const Subgroup& gov = k == 0 ? filt.front().group : interior[k - 1]->group;
        pieces[k].exp = Rat(gov.size());
        pieces[k].coef_v = coef;
        pieces[k].lo = k == 0 ? LogValue::zero() : interior[k - 1]->break_value;
        pieces[k].hi = k == interior.size() ? LogValue::one() : interior[k]->break_value;
        if (k > 0) {
            const Subgroup& below =
                k == 1 ? filt.front().group : interior[k - 2]->group;
            Rat step = Rat(gov.size()) - Rat(below.size());
            coef += step * pieces[k].lo.v();
        }
    }
    return LambdaP(p, PiecewisePower(std::move(pieces)));
}

/* restriction of the inertia function to a subgroup, as its own group */
inline std::pair<FiniteGroup, InertiaFunction> subgroup_with_inertia(
    const FiniteGroup& g, const InertiaFunction& i, const Subgroup& h) {
    auto elems = h.elements();
    std::vector<int> pos(g.order(), -1);
    for (std::size_t k = 0; k < elems.size(); ++k) pos[elems[k]] = static_cast<int>(k);
    std::vector<std::vector<int>> t(elems.size(), std::vector<int>(elems.size()));
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = 0; b < elems.size(); ++b)
            t[a][b] = pos[g.mul(elems[a], elems[b])];
    FiniteGroup hg(std::move(t));
    std::vector<LogValue> vals;
    for (int e : elems) vals.push_back(i(e));
    return {hg, InertiaFunction(hg, std::move(vals))};
}

/*
 * H_{L/K} = H_{M/K} o H_{M/L}^{-1} with M the ambient Galois extension,
 * G = Gal(M/K) and H = Gal(M/L); the subgroup inherits the inertia of G.
 */
inline LambdaP herbrand_relative(const FiniteGroup& g, const InertiaFunction& i,
                                 const Subgroup& h, const Prime& p) {
    LambdaP hg = herbrand_galois(g, i, p);
    auto [hgrp, hin] = subgroup_with_inertia(g, i, h);
    LambdaP hl = herbrand_galois(hgrp, hin, p);
    return LambdaP(p, compose(hg.fn(), invert(hl.fn())));
}

struct Tower {
    std::vector<Subgroup> chain;      // H = H_1 < ... < H_{n+1} <= G
    std::vector<long> s_index;        // s(i) = min{ j : H_i = H G_{r_j} }
    std::vector<LambdaP> steps;       // Herbrand of L_i / L_{i+1}, i = 1..n
    bool has_trivial_tail = false;    // H_{n+1} < G
    std::vector<LambdaP> tail;        // the (identity) Herbrand of K'/K when present
};

/*
 * The canonical tower of Theorem (canonical towers): the distinct subgroups
 * H G_{r_j} ordered by inclusion, with per-step Herbrand functions.
 */
inline Tower canonical_tower(const FiniteGroup& g, const InertiaFunction& i,
                             const Subgroup& h, const Prime& p) {
    auto filt = ramification_filtration(g, i, p);
    // r_0 = 0 < r_1 < ... < r_m < 1 (drop a break at exactly 1)
    std::vector<FiltrationStep const*> below_one;
    for (const auto& st : filt)
        if (st.break_value < LogValue::one()) below_one.push_back(&st);

    Tower t;
    for (std::size_t j = 0; j < below_one.size(); ++j) {
        Subgroup hi = Subgroup::product(g, h, below_one[j]->group);
        bool seen = false;
        for (const auto& prev : t.chain)
            if (prev == hi) { seen = true; break; }
        if (!seen) {
            t.chain.push_back(hi);
            t.s_index.push_back(static_cast<long>(j));
        }
    }
    for (std::size_t k = 0; k + 1 < t.chain.size(); ++k) {
        auto [g1, i1] = subgroup_with_inertia(g, i, t.chain[k]);
        auto [g2, i2] = subgroup_with_inertia(g, i, t.chain[k + 1]);
        LambdaP up = herbrand_galois(g2, i2, p);
        LambdaP down = herbrand_galois(g1, i1, p);
        t.steps.emplace_back(p, compose(up.fn(), invert(down.fn())));
    }
    if (t.chain.back().size() < g.order()) {
        t.has_trivial_tail = true;
        auto [g1, i1] = subgroup_with_inertia(g, i, t.chain.back());
        LambdaP down = herbrand_galois(g1, i1, p);
        LambdaP up = herbrand_galois(g, i, p);
        t.tail.emplace_back(p, compose(up.fn(), invert(down.fn())));
    }
    return t;
}

using TowerReport = Report;

/*
 * The three Theorem clauses: every step simple of degree |H_{i+1}|/|H_i|,
 * a trivial tail when present, and step-by-step agreement with the
 * canonical factorization of the total Herbrand function.
 */
inline TowerReport verify_tower(const Tower& t, const LambdaP& f_total) {
    TowerReport rep;
    for (std::size_t k = 0; k < t.steps.size(); ++k) {
        const auto& s = t.steps[k];
        bool simple = is_simple(s);
        Int want = Int(t.chain[k + 1].size()) / Int(t.chain[k].size());
        bool deg = s.degree() == want;
        rep.add("step " + std::to_string(k + 1) + " simple", simple);
        rep.add("step " + std::to_string(k + 1) + " degree = subgroup index", deg,
                "degree " + s.degree().str() + ", index " + want.str());
    }
    if (t.has_trivial_tail) {
        bool trivial = t.tail.size() == 1 && t.tail[0].break_count() == 0;
        rep.add("trivial tail", trivial);
    }
    auto canon = canonical_factorization(f_total);
    bool count_ok = canon.size() == t.steps.size();
    rep.add("step count matches canonical factorization", count_ok,
            std::to_string(t.steps.size()) + " steps vs " + std::to_string(canon.size()) +
                " factors");
    if (count_ok) {
        for (std::size_t k = 0; k < canon.size(); ++k)
            rep.add("step " + std::to_string(k + 1) + " equals canonical factor",
                    pw_equals(t.steps[k].fn(), canon[k].fn()));
        // recomposition reproduces the total function exactly
        PiecewisePower acc = PiecewisePower::identity(LogValue::zero(), LogValue::one());
        for (const auto& s : t.steps) acc = compose(s.fn(), acc);
        rep.add("steps compose to the total Herbrand function",
                pw_equals(acc, f_total.fn()));
    }
    return rep;
}

}  // namespace ramicalc
