#pragma once

#include <algorithm>
#include <vector>

#include "ramicalc/logvalue.hpp"

namespace ramicalc {

/*
 * A monomial piece of a strictly increasing function on a multiplicative
 * interval: f(r) = a * r^e for r in [lo, hi], with e > 0 and a nonzero.
 * In v-coordinates this is the affine map v |-> coef_v + exp * v, so all
 * continuity and equality checks are exact rational identities.
 */
struct Piece {
    LogValue lo, hi;  // radius interval, lo < hi; lo may be the zero value
    Rat exp;          // e > 0
    Rat coef_v;       // v(a)

    LogValue apply(const LogValue& r) const {
        if (r.is_zero()) return LogValue::zero();
        return LogValue::from_v(coef_v + exp * r.v());
    }
};

/*
 * Continuous, strictly increasing, piecewise monomial function given by
 * contiguous pieces ordered by increasing radius.  Representations are
 * normalized (equal adjacent pieces merged), so structural equality is
 * pointwise equality.
 */
class PiecewisePower {
  public:
    PiecewisePower() = default;

    explicit PiecewisePower(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
        validate_and_normalize();
    }

    /* the identity on [lo, hi] */
    static PiecewisePower identity(const LogValue& lo, const LogValue& hi) {
        return PiecewisePower({Piece{lo, hi, Rat(1), Rat(0)}});
    }

    /* single monomial a * r^e on [lo, hi] */
    static PiecewisePower monomial(const LogValue& lo, const LogValue& hi, Rat exp,
                                   Rat coef_v) {
        return PiecewisePower({Piece{lo, hi, std::move(exp), std::move(coef_v)}});
    }

    const std::vector<Piece>& pieces() const { return pieces_; }
    const LogValue& domain_lo() const { return pieces_.front().lo; }
    const LogValue& domain_hi() const { return pieces_.back().hi; }
    LogValue range_lo() const { return pieces_.front().apply(domain_lo()); }
    LogValue range_hi() const { return pieces_.back().apply(domain_hi()); }

    /* interior break radii, increasing */
    std::vector<LogValue> breaks() const {
        std::vector<LogValue> b;
        for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) b.push_back(pieces_[i].hi);
        return b;
    }

    LogValue eval(const LogValue& r) const {
        if (r < domain_lo() || domain_hi() < r)
            throw Error(errc::out_of_domain, "eval outside [" + domain_lo().str() +
                                                 ", " + domain_hi().str() + "]");
        for (const auto& pc : pieces_)
            if (!(r < pc.lo) && !(pc.hi < r)) return pc.apply(r);
        return pieces_.back().apply(r);  // unreachable
    }

    bool operator==(const PiecewisePower& o) const {
        if (pieces_.size() != o.pieces_.size()) return false;
        for (std::size_t i = 0; i < pieces_.size(); ++i) {
            const Piece &a = pieces_[i], &b = o.pieces_[i];
            if (a.lo != b.lo || a.hi != b.hi || a.exp != b.exp || a.coef_v != b.coef_v)
                return false;
        }
        return true;
    }

  private:
    std::vector<Piece> pieces_;

    void validate_and_normalize() {
        if (pieces_.empty()) throw Error(errc::bad_piecewise, "no pieces");
        for (const auto& pc : pieces_) {
            if (pc.exp <= 0) throw Error(errc::bad_piecewise, "exponent must be > 0");
            if (!(pc.lo < pc.hi))
                throw Error(errc::bad_piecewise, "empty or reversed piece interval");
            if (pc.hi.is_zero()) throw Error(errc::bad_piecewise, "zero upper radius");
        }
        for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
            const Piece &a = pieces_[i], &b = pieces_[i + 1];
            if (a.hi != b.lo)
                throw Error(errc::bad_piecewise, "pieces not contiguous");
            // continuity at the junction, an exact identity in v
            if (a.apply(a.hi) != b.apply(b.lo))
                throw Error(errc::bad_piecewise, "discontinuous at break " + a.hi.str());
        }
        std::vector<Piece> merged;
        for (auto& pc : pieces_) {
            if (!merged.empty() && merged.back().exp == pc.exp &&
                merged.back().coef_v == pc.coef_v) {
                merged.back().hi = pc.hi;
            } else {
                merged.push_back(pc);
            }
        }
        pieces_ = std::move(merged);
    }
};

inline bool pw_equals(const PiecewisePower& f, const PiecewisePower& g) { return f == g; }

/* f o g; requires range(g) inside domain(f). */
inline PiecewisePower compose(const PiecewisePower& f, const PiecewisePower& g) {
    if (g.range_lo() < f.domain_lo() || f.domain_hi() < g.range_hi())
        throw Error(errc::domain_mismatch, "range of inner not contained in outer domain");

    // cut points of the composite: breaks of g plus g^{-1}(breaks of f)
    std::vector<LogValue> cuts;
    cuts.push_back(g.domain_lo());
    for (const auto& b : g.breaks()) cuts.push_back(b);
    for (const auto& bf : f.breaks()) {
        if (bf < g.range_lo() || g.range_hi() < bf) continue;
        // g is strictly increasing: invert bf through the piece containing it
        for (const auto& pc : g.pieces()) {
            LogValue lo_img = pc.apply(pc.lo), hi_img = pc.apply(pc.hi);
            if (!(bf < lo_img) && !(hi_img < bf)) {
                cuts.push_back(LogValue::from_v((bf.v() - pc.coef_v) / pc.exp));
                break;
            }
        }
    }
    cuts.push_back(g.domain_hi());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Piece> out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const LogValue &lo = cuts[i], &hi = cuts[i + 1];
        // the open interval (lo, hi) lies inside one piece of g and its image
        // inside one piece of f; locate both by the upper end, which sits in
        // (piece.lo, piece.hi] of the governing piece
        const Piece* pg = nullptr;
        for (const auto& pc : g.pieces())
            if (pc.lo < hi && !(pc.hi < hi)) { pg = &pc; break; }
        if (!pg) throw Error(errc::bad_piecewise, "compose: cut outside inner pieces");
        LogValue hi_img = pg->apply(hi);
        const Piece* pf = nullptr;
        for (const auto& pc : f.pieces())
            if (pc.lo < hi_img && !(pc.hi < hi_img)) { pf = &pc; break; }
        if (!pf) throw Error(errc::bad_piecewise, "compose: image cut outside outer pieces");
        out.push_back(Piece{lo, hi, pf->exp * pg->exp, pf->coef_v + pf->exp * pg->coef_v});
    }
    return PiecewisePower(std::move(out));
}

/* exact inverse; exponents become reciprocals, breaks map through f */
inline PiecewisePower invert(const PiecewisePower& f) {
    std::vector<Piece> out;
    for (const auto& pc : f.pieces())
        out.push_back(Piece{pc.apply(pc.lo), pc.apply(pc.hi), Rat(1) / pc.exp,
                            -pc.coef_v / pc.exp});
    return PiecewisePower(std::move(out));
}

}  // namespace ramicalc
