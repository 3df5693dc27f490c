#include <catch2/catch_amalgamated.hpp>

#include "ramicalc/piecewise.hpp"

using namespace ramicalc;

namespace {

LogValue lv(long num, long den = 1) { return LogValue::from_v(Rat(num, den)); }

/* the 1-break Lambda_2 function: 2^{-1} r below 2^{-1}, r^2 above */
PiecewisePower one_break() {
    return PiecewisePower({Piece{LogValue::zero(), lv(1), Rat(1), Rat(1)},
                           Piece{lv(1), LogValue::one(), Rat(2), Rat(0)}});
}

}  // namespace

TEST_CASE("construction validates continuity and monotonicity") {
    CHECK_NOTHROW(one_break());
    // discontinuous junction
    CHECK_THROWS_AS(PiecewisePower({Piece{LogValue::zero(), lv(1), Rat(1), Rat(2)},
                                    Piece{lv(1), LogValue::one(), Rat(2), Rat(0)}}),
                    Error);
    // nonpositive exponent
    CHECK_THROWS_AS(PiecewisePower({Piece{LogValue::zero(), LogValue::one(), Rat(0), Rat(0)}}),
                    Error);
    // zero-length piece
    CHECK_THROWS_AS(PiecewisePower({Piece{lv(1), lv(1), Rat(1), Rat(0)}}), Error);
}

TEST_CASE("eval: monomial pieces, agreement at breaks") {
    auto f = one_break();
    CHECK(f.eval(lv(4)) == lv(5));            // lower piece: v+1
    CHECK(f.eval(LogValue::one()).is_one());  // upper end
    CHECK(f.eval(lv(1)) == lv(2));            // both pieces give v=2 at the break
    CHECK(f.eval(LogValue::zero()).is_zero());
    CHECK_THROWS_AS(f.eval(lv(-1)), Error);

    auto id = PiecewisePower::identity(LogValue::zero(), LogValue::one());
    CHECK(id.eval(lv(7, 3)) == lv(7, 3));
}

TEST_CASE("merging makes structural equality pointwise equality") {
    auto direct = PiecewisePower::monomial(LogValue::zero(), LogValue::one(), Rat(2), Rat(0));
    auto split = PiecewisePower({Piece{LogValue::zero(), lv(1), Rat(2), Rat(0)},
                                 Piece{lv(1), LogValue::one(), Rat(2), Rat(0)}});
    CHECK(pw_equals(direct, split));
}

TEST_CASE("compose: identity laws and monomial composition") {
    auto f = one_break();
    auto id = PiecewisePower::identity(LogValue::zero(), LogValue::one());
    CHECK(pw_equals(compose(id, f), f));
    CHECK(pw_equals(compose(f, id), f));

    // r^2 after 2^{-1} r gives 2^{-2} r^2
    auto sq = PiecewisePower::monomial(LogValue::zero(), LogValue::one(), Rat(2), Rat(0));
    auto half = PiecewisePower::monomial(LogValue::zero(), LogValue::one(), Rat(1), Rat(1));
    auto c = compose(sq, half);
    REQUIRE(c.pieces().size() == 1);
    CHECK(c.pieces()[0].exp == Rat(2));
    CHECK(c.pieces()[0].coef_v == Rat(2));

    // domain mismatch: half maps into [0, 1/2], sq o half fine; half o sq fine too,
    // but a function on [1/2, 1] cannot take sq's range
    auto upper = PiecewisePower::monomial(lv(1), LogValue::one(), Rat(1), Rat(0));
    CHECK_THROWS_AS(compose(upper, sq), Error);
}

TEST_CASE("invert: exact inverse with reciprocal exponents") {
    auto f = one_break();
    auto g = invert(f);
    REQUIRE(g.pieces().size() == 2);
    // lower piece of the inverse: slope 1, intercept -1 in v-coordinates
    CHECK(g.pieces()[0].exp == Rat(1));
    CHECK(g.pieces()[0].coef_v == Rat(-1));
    CHECK(g.pieces()[0].hi == lv(2));  // break maps through f
    CHECK(g.pieces()[1].exp == Rat(1, 2));

    CHECK(pw_equals(compose(g, f), PiecewisePower::identity(LogValue::zero(), LogValue::one())));
    CHECK(pw_equals(compose(f, g), PiecewisePower::identity(LogValue::zero(), LogValue::one())));
    CHECK(pw_equals(invert(g), f));

    auto id = PiecewisePower::identity(LogValue::zero(), LogValue::one());
    CHECK(pw_equals(invert(id), id));

    auto powp = PiecewisePower::monomial(LogValue::zero(), LogValue::one(), Rat(3), Rat(0));
    auto r = invert(powp);
    REQUIRE(r.pieces().size() == 1);
    CHECK(r.pieces()[0].exp == Rat(1, 3));
}
