#pragma once

#include <compare>
#include <string>

#include "ramicalc/numbers.hpp"

namespace ramicalc {

/*
 * An element of the value group p^Q u {0}, stored as the exact rational
 * v = -log_p |x|, so |x| = p^{-v}.  v = +inf encodes the value 0.
 * Comparisons follow the VALUE order (larger value <=> smaller v);
 * multiplication of values is addition of v.  Negative v (values > 1)
 * is legal and used for annuli reaching past radius 1.
 */
class LogValue {
  public:
    LogValue() : inf_(true) {}  // the value 0

    static LogValue zero() { return LogValue(); }
    static LogValue one() { return from_v(0); }

    static LogValue from_v(Rat v) {
        LogValue x;
        x.inf_ = false;
        x.v_ = std::move(v);
        return x;
    }
    static LogValue from_value_exp(const Rat& e) { return from_v(-e); }

    bool is_zero() const { return inf_; }
    bool is_one() const { return !inf_ && v_ == 0; }

    /* v = -log_p of the value; only for nonzero values. */
    const Rat& v() const {
        if (inf_) throw Error(errc::zero_input, "v() of the zero value");
        return v_;
    }

    LogValue operator*(const LogValue& o) const {
        if (inf_ || o.inf_) return zero();
        return from_v(v_ + o.v_);
    }
    LogValue operator/(const LogValue& o) const {
        if (o.inf_) throw Error(errc::division_by_zero, "division by the zero value");
        if (inf_) return zero();
        return from_v(v_ - o.v_);
    }
    LogValue pow(const Rat& q) const {
        if (inf_) {
            if (q <= 0)
                throw Error(errc::zero_to_nonpositive_power, "0^q with q <= 0");
            return zero();
        }
        return from_v(v_ * q);
    }

    /* value order: 0 is the least element; otherwise reversed v order */
    std::strong_ordering operator<=>(const LogValue& o) const {
        if (inf_ && o.inf_) return std::strong_ordering::equal;
        if (inf_) return std::strong_ordering::less;
        if (o.inf_) return std::strong_ordering::greater;
        if (v_ == o.v_) return std::strong_ordering::equal;
        return v_ > o.v_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    bool operator==(const LogValue& o) const {
        return (*this <=> o) == std::strong_ordering::equal;
    }

    std::string str() const { return inf_ ? "inf" : rat_str(v_); }

  private:
    bool inf_;
    Rat v_;
};

inline LogValue lv_max(const LogValue& a, const LogValue& b) { return a < b ? b : a; }
inline LogValue lv_min(const LogValue& a, const LogValue& b) { return a < b ? a : b; }

/* A validated prime, the residual characteristic of every computation. */
class Prime {
  public:
    explicit Prime(long p) : p_(p) {
        if (p < 2) throw Error(errc::invalid_argument, "prime must be >= 2");
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0)
                throw Error(errc::invalid_argument, std::to_string(p) + " is not prime");
    }

    long value() const { return p_; }
    bool operator==(const Prime& o) const { return p_ == o.p_; }
    bool operator!=(const Prime& o) const { return p_ != o.p_; }

  private:
    long p_;
};

}  // namespace ramicalc
