#pragma once

#include "ramicalc/logvalue.hpp"
#include "ramicalc/numbers.hpp"

namespace ramicalc {

inline long padic_valuation(Int x, const Prime& p) {
    if (x == 0) throw Error(errc::zero_input, "valuation of 0 is infinite");
    if (x < 0) x = -x;
    long v = 0;
    while (x % p.value() == 0) {
        x /= p.value();
        ++v;
    }
    return v;
}

inline long padic_valuation(const Rat& x, const Prime& p) {
    if (x == 0) throw Error(errc::zero_input, "valuation of 0 is infinite");
    return padic_valuation(rat_num(x), p) - padic_valuation(rat_den(x), p);
}

/* |x|_p as a LogValue; |0| = 0. */
inline LogValue padic_norm(const Rat& x, const Prime& p) {
    if (x == 0) return LogValue::zero();
    return LogValue::from_v(Rat(padic_valuation(x, p)));
}

/*
 * v_p(C(n,k)) by Kummer: the number of carries when adding k and n-k in
 * base p.
 */
inline long binomial_valuation(const Int& n, const Int& k, const Prime& p) {
    if (k < 0 || k > n) throw Error(errc::k_out_of_range, "need 0 <= k <= n");
    Int a = k, b = n - k;
    long carries = 0, carry = 0;
    while (a > 0 || b > 0 || carry > 0) {
        long da = static_cast<long>(a % p.value());
        long db = static_cast<long>(b % p.value());
        if (da + db + carry >= p.value()) {
            carry = 1;
            ++carries;
        } else {
            carry = 0;
        }
        a /= p.value();
        b /= p.value();
    }
    return carries;
}

/*
 * v_p(C(n,k)) for the generalized binomial coefficient with n any integer
 * (used for Laurent expansions); for n < 0, C(n,k) = (-1)^k C(k-n-1, k).
 * Returns no value when the coefficient vanishes (0 <= n < k).
 */
inline std::optional<long> binomial_valuation_generalized(const Int& n, const Int& k,
                                                          const Prime& p) {
    if (k < 0) return std::nullopt;
    if (k == 0) return 0;
    if (n >= 0) {
        if (k > n) return std::nullopt;
        return binomial_valuation(n, k, p);
    }
    return binomial_valuation(k - n - 1, k, p);
}

/* |C(n,k)|_p as a LogValue (zero coefficient -> value 0). */
inline LogValue binomial_norm(const Int& n, const Int& k, const Prime& p) {
    auto v = binomial_valuation_generalized(n, k, p);
    if (!v) return LogValue::zero();
    return LogValue::from_v(Rat(*v));
}

}  // namespace ramicalc
