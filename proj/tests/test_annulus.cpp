#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ramicalc/annulus.hpp"

using namespace ramicalc;

namespace {

LogValue lv(long num, long den = 1) { return LogValue::from_v(Rat(num, den)); }

AnnulusMorphism exact_annulus(long p, std::map<long, Rat> cs, LogValue inner) {
    return AnnulusMorphism(ValuedSeries::exact(Prime(p), LogValue::one(), std::move(cs)),
                           std::move(inner));
}

AnnulusMorphism skel_annulus(long p, std::map<long, LogValue> cs, LogValue inner) {
    return AnnulusMorphism(ValuedSeries::skeleton(Prime(p), LogValue::one(), std::move(cs)),
                           std::move(inner));
}

}  // namespace

TEST_CASE("annulus degree: single slope requirement") {
    auto td = exact_annulus(3, {{4, Rat(1)}}, lv(2));
    CHECK(annulus_degree(td) == 4);

    // T^2 + cT with v(c) = 1/2: near the outer radius the degree is 2
    auto f = skel_annulus(2, {{1, lv(1, 2)}, {2, lv(0)}}, lv(1, 4));
    CHECK(annulus_degree(f) == 2);

    // but on (0, 2^{-3/4}) the polygon breaks inside
    auto g = skel_annulus(2, {{1, lv(1, 2)}, {2, lv(0)}}, lv(3, 4));
    CHECK_THROWS_AS(annulus_degree(g), Error);

    // negative dominating index is rejected as unaligned
    auto h = exact_annulus(2, {{-1, Rat(1)}}, lv(2));
    CHECK_THROWS_AS(annulus_degree(h), Error);
}

TEST_CASE("sigma and epsilon of worked examples") {
    auto t3 = exact_annulus(2, {{3, Rat(1)}}, lv(2));
    auto s3 = sigma_epsilon(t3);
    CHECK(s3.sigma == 2);
    CHECK(s3.eps_norm.is_one());  // |3|_2 = 1

    auto t2 = exact_annulus(2, {{2, Rat(1)}}, lv(2));
    auto s2 = sigma_epsilon(t2);
    CHECK(s2.sigma == 1);
    CHECK(s2.eps_norm == lv(1));  // |2|

    auto f = skel_annulus(2, {{1, lv(1, 2)}, {2, lv(0)}}, lv(1, 4));
    auto sf = sigma_epsilon(f);
    CHECK(sf.sigma == 0);
    CHECK(sf.eps_norm == lv(1, 2));  // |c| dominates |2| rho near 1

    // scaling both coefficients leaves the normalized epsilon alone
    auto fs = exact_annulus(2, {{1, Rat(64)}, {2, Rat(32)}}, lv(1, 4));
    auto ss = sigma_epsilon(fs);
    CHECK(ss.sigma == 0);
    CHECK(ss.eps_norm == lv(1));
}

TEST_CASE("sigma composition law") {
    // f = T^2, g = T^3 over p = 5: sigma(g o f) = sigma(T^6) = 5 = 2*2 + 1
    auto f = exact_annulus(5, {{2, Rat(1)}}, lv(2));
    auto g = exact_annulus(5, {{3, Rat(1)}}, lv(2));
    CHECK(sigma_composition_check(f, g).pass());

    auto idm = exact_annulus(5, {{1, Rat(1)}}, lv(2));
    CHECK(sigma_composition_check(f, idm).pass());

    // f = T^2 + 2T, g = T^2 over p = 2: exact polynomial composition oracle
    auto f2 = exact_annulus(2, {{1, Rat(2)}, {2, Rat(1)}}, lv(1, 8));
    auto g2 = exact_annulus(2, {{2, Rat(1)}}, lv(1, 8));
    CHECK(sigma_composition_check(f2, g2).pass());

    SECTION("30 random exact composable pairs") {
        std::mt19937_64 rng(515);
        std::uniform_int_distribution<long> deg(1, 4), coef(1, 40);
        const long primes[] = {2, 3, 5};
        int done = 0;
        for (int it = 0; it < 60 && done < 30; ++it) {
            long p = primes[it % 3];
            std::map<long, Rat> fc, gc;
            long df = deg(rng), dg = deg(rng);
            fc[df] = Rat(1);
            gc[dg] = Rat(1);
            for (long i = 1; i < df; ++i)
                if (rng() % 2) fc[i] = Rat(coef(rng)) * Rat(p);
            for (long i = 1; i < dg; ++i)
                if (rng() % 2) gc[i] = Rat(coef(rng)) * Rat(p);
            auto fa = exact_annulus(p, fc, lv(1, 16));
            auto ga = exact_annulus(p, gc, lv(1, 16));
            REQUIRE(sigma_composition_check(fa, ga).pass());
            ++done;
        }
        CHECK(done == 30);
    }
}

TEST_CASE("break flows of worked examples") {
    // T^2 (p = 2): one constant flow at |2|
    auto t2 = exact_annulus(2, {{2, Rat(1)}}, lv(2));
    auto fs2 = break_flows(t2);
    REQUIRE(fs2.flows.size() == 1);
    CHECK(fs2.flows[0].coef_v == Rat(1));
    CHECK(fs2.flows[0].exp == 0);
    CHECK(boundary_slope(fs2.flows[0]) == 0);
    CHECK(fs2.alphas == std::vector<long>{0, 1});

    // T^2 + cT (p = 2, v(c) = 1/2): b(rho) = |c| / rho
    auto f = skel_annulus(2, {{1, lv(1, 2)}, {2, lv(0)}}, lv(1, 4));
    auto fsf = break_flows(f);
    REQUIRE(fsf.flows.size() == 1);
    CHECK(fsf.flows[0].coef_v == Rat(1, 2));
    CHECK(fsf.flows[0].exp == Rat(-1));
    CHECK(fsf.flows[0].limit_v == Rat(1, 2));

    // T^d with gcd(d, p) = 1: no breaks
    auto t5 = exact_annulus(3, {{5, Rat(1)}}, lv(2));
    CHECK(break_flows(t5).flows.empty());
}

TEST_CASE("different identity on the acceptance suite") {
    for (long p : {2L, 3L}) {
        // T^d for d <= 6
        for (long d = 1; d <= 6; ++d) {
            auto td = exact_annulus(p, {{d, Rat(1)}}, lv(3));
            auto rep = different_identity_check(td);
            INFO("T^" << d << " p=" << p);
            CHECK(rep.pass());
        }
        // T^p and T^p + cT with fractional |c|
        auto tp = exact_annulus(p, {{p, Rat(1)}}, lv(3));
        CHECK(different_identity_check(tp).pass());
        auto tpc = skel_annulus(p, {{1, lv(1, 2)}, {p, lv(0)}}, lv(1, 8));
        CHECK(different_identity_check(tpc).pass());
        // T^{p^2} + c1 T^p + c2 T with two breaks
        auto two = skel_annulus(p, {{1, lv(1, 2)}, {p, lv(1, 4)}, {p * p, lv(0)}}, lv(1, 32));
        auto rep2 = different_identity_check(two);
        INFO("two-break, p=" << p);
        CHECK(rep2.pass());
        auto flows2 = break_flows(two);
        CHECK(flows2.flows.size() == 2);
    }
}

TEST_CASE("generic-direction flow law b(rho) = b / rho for restricted annuli") {
    // a radial morphism viewed on an annulus above its largest break: the
    // flows are exactly b_j / rho
    auto f = skel_annulus(2, {{1, lv(1, 2)}, {4, lv(0)}}, lv(1, 16));
    auto pp = profile_at_point(
        ValuedSeries::skeleton(Prime(2), LogValue::one(), {{1, lv(1, 2)}, {4, lv(0)}}),
        LogValue::one());
    auto fs = break_flows(f);
    REQUIRE(fs.flows.size() == pp.profile.break_count());
    for (std::size_t j = 0; j < fs.flows.size(); ++j) {
        CHECK(fs.flows[j].coef_v == pp.profile.breaks()[j].v());
        CHECK(fs.flows[j].exp == Rat(-1));
    }
}
