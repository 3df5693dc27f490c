#pragma once

#include <optional>
#include <vector>

#include "ramicalc/piecewise.hpp"
#include "ramicalc/valuation.hpp"

namespace ramicalc {

/*
 * The validated class Lambda_p: continuous strictly increasing bijections
 * of [0,1] whose pieces are monomials r |-> a_i * r^{p^{alpha_{i-1}}} with
 * 0 = alpha_0 < alpha_1 < ... < alpha_n.  The local coefficients are
 * determined by the break points:
 *     a_i = prod_{j>=i} b_j^{p^{alpha_j} - p^{alpha_{j-1}}},   a_{n+1} = 1.
 */
class LambdaP {
  public:
    LambdaP(Prime p, const PiecewisePower& fn) : p_(p), fn_(fn) { validate(); }

    static LambdaP identity(Prime p) {
        return LambdaP(p, PiecewisePower::identity(LogValue::zero(), LogValue::one()));
    }

    const Prime& p() const { return p_; }
    const PiecewisePower& fn() const { return fn_; }

    /* break points b_1 < ... < b_n, interior to (0,1) */
    std::vector<LogValue> breaks() const { return fn_.breaks(); }

    /* 0 = alpha_0 < ... < alpha_n with local degrees p^{alpha_i} */
    const std::vector<long>& alphas() const { return alphas_; }

    /* local coefficients a_1, ..., a_{n+1} */
    std::vector<LogValue> coefficients() const {
        std::vector<LogValue> a;
        for (const auto& pc : fn_.pieces()) a.push_back(LogValue::from_v(pc.coef_v));
        return a;
    }

    std::size_t break_count() const { return fn_.pieces().size() - 1; }
    long degree_exponent() const { return alphas_.back(); }
    Int degree() const { return p_pow(p_.value(), alphas_.back()); }

    LogValue eval(const LogValue& r) const { return fn_.eval(r); }

    bool operator==(const LambdaP& o) const { return p_ == o.p_ && fn_ == o.fn_; }

  private:
    Prime p_;
    PiecewisePower fn_;
    std::vector<long> alphas_;

    void validate() {
        if (!fn_.domain_lo().is_zero() || !fn_.domain_hi().is_one())
            throw Error(errc::not_in_lambda_p, "domain must be [0,1]");
        if (fn_.pieces().back().coef_v != 0)
            throw Error(errc::not_in_lambda_p, "f(1) != 1 (top coefficient not 1)");
        alphas_.clear();
        for (const auto& pc : fn_.pieces()) {
            if (!rat_is_int(pc.exp))
                throw Error(errc::not_in_lambda_p, "non-integral local degree");
            auto a = p_power_exponent(rat_num(pc.exp), p_.value());
            if (!a)
                throw Error(errc::not_in_lambda_p,
                            "local degree " + rat_str(pc.exp) + " is not a power of " +
                                std::to_string(p_.value()));
            if (!alphas_.empty() && *a <= alphas_.back())
                throw Error(errc::not_in_lambda_p, "local degrees not strictly increasing");
            alphas_.push_back(*a);
        }
        if (alphas_.front() != 0)
            throw Error(errc::not_in_lambda_p, "lowest local degree must be 1");
    }
};

/*
 * Build f in Lambda_p from its break points (increasing, interior) and
 * degree exponents; the coefficients come out of the product formula.
 */
inline LambdaP make_lambda(Prime p, const std::vector<LogValue>& breaks,
                           const std::vector<long>& alphas) {
    if (alphas.size() != breaks.size() + 1)
        throw Error(errc::invalid_argument, "need exactly one alpha per piece");
    if (alphas.front() != 0) throw Error(errc::alpha_zero_nonzero, "alpha_0 must be 0");
    for (std::size_t i = 0; i + 1 < alphas.size(); ++i)
        if (alphas[i] >= alphas[i + 1])
            throw Error(errc::non_increasing_alphas, "alphas must strictly increase");
    for (const auto& b : breaks) {
        if (b.is_zero() || b.v() <= 0)
            throw Error(errc::non_monotone_breaks, "breaks must lie in (0,1)");
    }
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
        if (!(breaks[i] < breaks[i + 1]))
            throw Error(errc::non_monotone_breaks, "breaks must strictly increase");

    const std::size_t n = breaks.size();
    std::vector<Piece> pieces(n + 1);
    // top down: a_{n+1} = 1, then a_i = a_{i+1} * b_i^{p^{alpha_i}-p^{alpha_{i-1}}}
    Rat coef(0);
    for (std::size_t i = n + 1; i-- > 0;) {
        pieces[i].exp = Rat(p_pow(p.value(), alphas[i]));
        pieces[i].coef_v = coef;
        pieces[i].lo = (i == 0) ? LogValue::zero() : breaks[i - 1];
        pieces[i].hi = (i == n) ? LogValue::one() : breaks[i];
        if (i > 0) {
            Rat step = Rat(p_pow(p.value(), alphas[i]) - p_pow(p.value(), alphas[i - 1]));
            coef += step * breaks[i - 1].v();
        }
    }
    return LambdaP(p, PiecewisePower(std::move(pieces)));
}

inline bool is_simple(const LambdaP& f) { return f.break_count() == 1; }

inline LambdaP compose(const LambdaP& f, const LambdaP& g) {
    if (f.p() != g.p()) throw Error(errc::domain_mismatch, "mixed primes in composition");
    return LambdaP(f.p(), compose(f.fn(), g.fn()));
}

/*
 * The canonical factorization into simple factors (innermost first):
 * f = f_n o ... o f_1 where f_i has the single break b_i^{p^{alpha_{i-1}}},
 * degree p^{alpha_i - alpha_{i-1}}, and f_i(b_{f_i}) < b_{f_{i+1}}.
 * n = 0 yields the empty sequence, a simple f yields {f}.
 */
inline std::vector<LambdaP> canonical_factorization(const LambdaP& f) {
    std::vector<LambdaP> out;
    const std::size_t n = f.break_count();
    if (n == 0) return out;
    if (n == 1) {
        out.push_back(f);
        return out;
    }
    auto breaks = f.breaks();
    const auto& alphas = f.alphas();
    for (std::size_t i = 0; i < n; ++i) {
        LogValue b = LogValue::from_v(breaks[i].v() * Rat(p_pow(f.p().value(), alphas[i])));
        out.push_back(make_lambda(f.p(), {b}, {0, alphas[i + 1] - alphas[i]}));
    }
    return out;
}

}  // namespace ramicalc
