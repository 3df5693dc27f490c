#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <random>

#include "ramicalc/lambda.hpp"
#include "support/random_gen.hpp"

using namespace ramicalc;
using ramicalc::testsupport::random_lambda;
using ramicalc::testsupport::random_prime;

namespace {

LogValue lv(long num, long den = 1) { return LogValue::from_v(Rat(num, den)); }

LambdaP two_break_example() {
    // p = 2, breaks v = [3, 1], alphas = [0, 1, 2]
    return make_lambda(Prime(2), {lv(3), lv(1)}, {0, 1, 2});
}

/*
 * Brute-force uniqueness oracle: enumerate candidate simple chains
 * (degree compositions of alpha_n and orders in which the factors consume
 * the breaks of f), keep those that recompose to f, and count how many
 * also satisfy the chain condition f_i(b_{f_i}) < b_{f_{i+1}}.
 */
int count_valid_chains(const LambdaP& f, std::vector<LambdaP>* found) {
    const std::size_t n = f.break_count();
    const long p = f.p().value();
    const long total = f.degree_exponent();
    auto breaks = f.breaks();

    std::vector<std::vector<long>> comps;
    std::vector<long> cur;
    std::function<void(long, std::size_t)> rec = [&](long left, std::size_t parts) {
        if (parts == 1) {
            if (left >= 1) {
                cur.push_back(left);
                comps.push_back(cur);
                cur.pop_back();
            }
            return;
        }
        for (long g = 1; g + static_cast<long>(parts) - 1 <= left; ++g) {
            cur.push_back(g);
            rec(left - g, parts - 1);
            cur.pop_back();
        }
    };
    rec(total, n);

    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;

    int valid = 0;
    do {
        for (const auto& gamma : comps) {
            // build factors left to right; factor i consumes break perm[i],
            // mapped through the previously built factors
            std::vector<LambdaP> chain;
            PiecewisePower acc = PiecewisePower::identity(LogValue::zero(), LogValue::one());
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) {
                LogValue b = acc.eval(breaks[perm[i]]);
                if (b.is_zero() || b.v() <= 0) { ok = false; break; }
                LambdaP fi = make_lambda(f.p(), {b}, {0, gamma[i]});
                chain.push_back(fi);
                acc = compose(fi.fn(), acc);
            }
            if (!ok) continue;
            if (!pw_equals(acc, f.fn())) continue;
            bool chain_cond = true;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                LogValue img = chain[i].eval(chain[i].breaks()[0]);
                if (!(img < chain[i + 1].breaks()[0])) { chain_cond = false; break; }
            }
            if (chain_cond) {
                ++valid;
                if (found) *found = chain;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    (void)p;
    return valid;
}

}  // namespace

TEST_CASE("make_lambda: coefficients from the break product formula") {
    auto f = two_break_example();
    auto a = f.coefficients();
    REQUIRE(a.size() == 3);
    CHECK(a[0].v() == Rat(5));
    CHECK(a[1].v() == Rat(2));
    CHECK(a[2].v() == Rat(0));
    // continuity at both breaks is already enforced; spot-check eval
    CHECK(f.eval(lv(4)) == lv(9));  // a_1 * r on the lowest piece
    CHECK(f.eval(lv(1)) == lv(4));  // break point, both pieces agree

    auto id = make_lambda(Prime(3), {}, {0});
    CHECK(id.fn() == PiecewisePower::identity(LogValue::zero(), LogValue::one()));

    auto g = make_lambda(Prime(2), {lv(1)}, {0, 1});
    auto ga = g.coefficients();
    CHECK(ga[0].v() == Rat(1));  // 2^{-1} r below the break
    CHECK(ga[1].v() == Rat(0));  // r^2 above

    CHECK_THROWS_AS(make_lambda(Prime(2), {lv(1), lv(3)}, {0, 1, 2}), Error);
    CHECK_THROWS_AS(make_lambda(Prime(2), {lv(1)}, {0, 0}), Error);
    CHECK_THROWS_AS(make_lambda(Prime(2), {lv(1)}, {1, 2}), Error);
}

TEST_CASE("is_simple") {
    CHECK_FALSE(is_simple(make_lambda(Prime(2), {}, {0})));
    CHECK(is_simple(make_lambda(Prime(2), {lv(1)}, {0, 1})));
    CHECK_FALSE(is_simple(two_break_example()));
}

TEST_CASE("canonical factorization of the two-break example") {
    auto f = two_break_example();
    auto fs = canonical_factorization(f);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].breaks()[0] == lv(3));
    CHECK(fs[0].degree() == 2);
    CHECK(fs[1].breaks()[0] == lv(2));
    CHECK(fs[1].degree() == 2);
    // chain condition: f_1(b_1) = 2^{-6} < 2^{-2}
    CHECK(fs[0].eval(fs[0].breaks()[0]) == lv(6));
    CHECK(fs[0].eval(fs[0].breaks()[0]) < fs[1].breaks()[0]);
    // recomposition at v(r) = 4: f_1 -> 7, f_2 -> 9 = direct eval
    CHECK(fs[0].eval(lv(4)) == lv(7));
    CHECK(fs[1].eval(lv(7)) == lv(9));
    CHECK(f.eval(lv(4)) == lv(9));
    // exact recomposition of the whole function
    auto acc = compose(fs[1].fn(), fs[0].fn());
    CHECK(pw_equals(acc, f.fn()));

    SECTION("simple input returns itself, identity returns empty") {
        auto s = make_lambda(Prime(2), {lv(1)}, {0, 1});
        auto ss = canonical_factorization(s);
        REQUIRE(ss.size() == 1);
        CHECK(ss[0] == s);
        CHECK(canonical_factorization(make_lambda(Prime(5), {}, {0})).empty());
    }
}

TEST_CASE("composition closure and identity law on random Lambda_p") {
    std::mt19937_64 rng(987);
    for (int it = 0; it < 500; ++it) {
        long p = random_prime(rng);
        auto f = random_lambda(rng, p);
        auto g = random_lambda(rng, p);
        LambdaP h = compose(f, g);  // validates membership in Lambda_p
        CHECK(h.p().value() == p);
        auto id = LambdaP::identity(Prime(p));
        CHECK(pw_equals(compose(id, f).fn(), f.fn()));
    }
}

TEST_CASE("max form: eval equals max_i a_i r^{p^{alpha_{i-1}}}") {
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<long> num(0, 40), den(1, 5);
    for (int it = 0; it < 100; ++it) {
        long p = random_prime(rng);
        auto f = random_lambda(rng, p);
        auto a = f.coefficients();
        const auto& alphas = f.alphas();
        for (int s = 0; s < 20; ++s) {
            LogValue r = LogValue::from_v(Rat(num(rng), den(rng)));
            LogValue best = LogValue::zero();
            for (std::size_t i = 0; i < a.size(); ++i)
                best = lv_max(best, a[i] * r.pow(Rat(p_pow(p, alphas[i]))));
            CHECK(f.eval(r) == best);
        }
    }
}

TEST_CASE("factorization recomposes and is unique among simple chains") {
    std::mt19937_64 rng(4242);
    int checked_unique = 0;
    for (int it = 0; it < 120; ++it) {
        long p = random_prime(rng);
        auto f = random_lambda(rng, p, 3);
        auto fs = canonical_factorization(f);
        if (f.break_count() == 0) {
            CHECK(fs.empty());
            continue;
        }
        auto acc = fs[0].fn();
        for (std::size_t i = 1; i < fs.size(); ++i) acc = compose(fs[i].fn(), acc);
        REQUIRE(pw_equals(acc, f.fn()));
        for (std::size_t i = 0; i + 1 < fs.size(); ++i)
            REQUIRE(fs[i].eval(fs[i].breaks()[0]) < fs[i + 1].breaks()[0]);

        if (f.break_count() >= 2 && checked_unique < 30) {
            std::vector<LambdaP> found;
            REQUIRE(count_valid_chains(f, &found) == 1);
            for (std::size_t i = 0; i < fs.size(); ++i) REQUIRE(found[i] == fs[i]);
            ++checked_unique;
        }
    }
    CHECK(checked_unique >= 20);
}

TEST_CASE("double inverse and inverse composition laws") {
    std::mt19937_64 rng(31337);
    for (int it = 0; it < 50; ++it) {
        long p = random_prime(rng);
        auto f = random_lambda(rng, p);
        CHECK(pw_equals(invert(invert(f.fn())), f.fn()));
        auto id = PiecewisePower::identity(LogValue::zero(), LogValue::one());
        CHECK(pw_equals(compose(f.fn(), invert(f.fn())), id));
    }
}
