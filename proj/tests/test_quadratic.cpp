#include <doctest.h>

#include "narayana/closedforms.hpp"
#include "narayana/hfrac.hpp"
#include "narayana/quadratic.hpp"
#include "narayana/sequences.hpp"
#include "narayana/verify.hpp"

using namespace narayana;

namespace {

const RatFunc T(PolyT::t());

// -1 + (1 - q + tq) gamma - tq gamma^2 = 0
QuadTriple narayana_triple() {
    return {PolyQ(-1), PolyQ{RatFunc(1), T - RatFunc(1)}, PolyQ::q() * (-T)};
}

SeriesQ solve(const QuadTriple& tq, std::size_t order) { return quad_solve_series(tq, order); }

// F = -a q^k / (D - q^(k+2) G) with G solving the output triple
void check_soundness(const QuadTriple& in, const SixTuple& st, std::size_t order) {
    const SeriesQ f = solve(in, order);
    const SeriesQ g = solve(st.next(), order);
    const SeriesQ den = SeriesQ(st.d, order) - series_shift(g, st.k + 2).truncate(order);
    const SeriesQ rhs = series_shift(series_invert(den) * (-st.a), st.k).truncate(order);
    CHECK(rhs == f);
}

}  // namespace

TEST_CASE("solving quadratics") {
    const SeriesQ g1 = narayana_series(10) - SeriesQ::one(10);
    CHECK(solve(family_quadratic(1, 0), 10) == g1);
    CHECK(solve({PolyQ(-1), PolyQ{RatFunc(1), RatFunc(-1)}, PolyQ()}, 6) ==
          series_invert(SeriesQ(PolyQ{RatFunc(1), RatFunc(-1)}, 6)));
    CHECK(solve(family_quadratic(2, 2), 12) == family_series({2, 2}, 12));
    for (unsigned m = 1; m <= 4; ++m)
        for (unsigned m0 = 0; m0 <= std::min(m, 3u); ++m0) {
            const QuadTriple tq = family_quadratic(m, m0);
            CHECK(solve(tq, 15) == family_series({m, m0}, 15));
            CHECK(quad_residual(tq, solve(tq, 15)).is_zero());
        }
    CHECK_THROWS(solve({PolyQ(1), PolyQ(), PolyQ::q()}, 4));
}

TEST_CASE("family quadratic examples") {
    const QuadTriple q22 = family_quadratic(2, 2);
    CHECK(q22.A == PolyQ(-1));
    CHECK(q22.B == beta_poly(2));
    CHECK(q22.C == PolyQ::monomial(-T * T, 4));
    const QuadTriple q33 = family_quadratic(3, 3);
    CHECK(q33.A == PolyQ(-1));
    CHECK(q33.C == PolyQ::monomial(-T * T * T, 6));
    CHECK_THROWS_AS(family_quadratic(1, 2), PreconditionError);
}

TEST_CASE("transform examples") {
    const QuadTriple n = narayana_triple();
    CHECK(quad_scale(n, PolyQ(1)) == quad_normalize(n));
    const SeriesQ g = solve(n, 10);
    CHECK(solve(quad_scale(n, PolyQ(3)), 10) == g * RatFunc(3));
    const PolyQ one_q{RatFunc(1), RatFunc(1)};
    const SeriesQ g1 = g - SeriesQ::one(10);
    CHECK(solve(quad_scale(quad_shift(n, PolyQ(-1)), one_q), 10) == g1 * SeriesQ(one_q, 10));
    CHECK_THROWS_AS(quad_scale(n, PolyQ::q()), MathError);

    CHECK(quad_shift(n, PolyQ()) == n);
    const QuadTriple shifted = quad_shift(n, PolyQ(-1));
    CHECK(shifted.A == PolyQ::monomial(RatFunc(-1), 1));
    CHECK(shifted.B == PolyQ{RatFunc(1), RatFunc(-1) - T});
    CHECK(shifted.C == n.C);
    CHECK(quad_shift(shifted, PolyQ(1)) == n);

    CHECK(quad_power(n, 1) == n);
    const QuadTriple sq = quad_power(n, 2);
    CHECK(solve(sq, 10) == g * g);
    CHECK_THROWS_AS(quad_power(n, 0), PreconditionError);
}

TEST_CASE("transforms on random triples") {
    RandomSource rs(8080);
    for (int i = 0; i < 20; ++i) {
        const QuadTriple tq = rs.triple();
        const SeriesQ f = solve(tq, 15);
        PolyQ u = rs.poly(2);
        const PolyQ unit = PolyQ(rs.nonzero_coefficient()) + rs.poly(1).shift_up(1);
        CHECK(solve(quad_scale(tq, unit), 15) == f * SeriesQ(unit, 15));
        CHECK(solve(quad_shift(tq, u), 15) == f + SeriesQ(u, 15));
        for (unsigned n = 2; n <= 4; ++n) CHECK(solve(quad_power(tq, n), 15) == series_pow(f, n).truncate(15));
    }
}

TEST_CASE("NextABC first step of the shift-2 family") {
    const SixTuple st = next_abc(family_quadratic(2, 2));
    CHECK(st.k == 0);
    CHECK(st.a == RatFunc(-1));
    CHECK(st.d == PolyQ{RatFunc(1), RatFunc(PolyT{-2, -2})});
    CHECK(st.d == (beta_poly(2) - PolyQ::monomial(RatFunc(PolyT{1, 0, 1}), 2)));
    for (unsigned m = 2; m <= 6; ++m) {
        const SixTuple s = next_abc(family_quadratic(m, 2));
        CHECK(s.k == m - 2);
        CHECK(s.a == RatFunc(-1));
    }
}

TEST_CASE("NextABC shortcuts give identical output") {
    for (unsigned m = 1; m <= 5; ++m)
        for (unsigned m0 = 0; m0 <= std::min(m, 3u); ++m0) {
            QuadTriple tq = family_quadratic(m, m0);
            for (int step = 0; step < 4; ++step) {
                const SixTuple fast = next_abc(tq, true);
                CHECK(fast == next_abc(tq, false));
                if (fast.a_star.is_zero()) break;
                tq = fast.next();
            }
        }
    RandomSource rs(606);
    for (int i = 0; i < 30; ++i) {
        const QuadTriple tq = rs.triple();
        CHECK(next_abc(tq, true) == next_abc(tq, false));
    }
}

TEST_CASE("NextABC soundness") {
    for (unsigned m = 1; m <= 4; ++m)
        for (unsigned m0 = 0; m0 <= std::min(m, 3u); ++m0) {
            QuadTriple tq = family_quadratic(m, m0);
            for (int step = 0; step < 3; ++step) {
                const SixTuple st = next_abc(tq);
                check_soundness(tq, st, 20);
                tq = st.next();
            }
        }
    RandomSource rs(1001);
    for (int i = 0; i < 30; ++i) {
        const QuadTriple tq = rs.triple();
        const SixTuple st = next_abc(tq);
        CHECK(st.b_star.coeff(0) == RatFunc(1));
        CHECK(st.c_star.coeff(0).is_zero());
        CHECK(st.d.coeff(0) == RatFunc(1));
        CHECK(st.d.degree() <= static_cast<long>(st.k) + 1);
        if (!st.a_star.is_zero()) check_soundness(tq, st, 20);
    }
}

TEST_CASE("NextABC preconditions") {
    CHECK_THROWS(next_abc({PolyQ(), PolyQ(1), PolyQ::q()}));
    CHECK_THROWS(next_abc({PolyQ(1), PolyQ(1), PolyQ()}));
    CHECK_THROWS(next_abc({PolyQ(1), PolyQ(2), PolyQ::q()}));
}

TEST_CASE("iteration and the induced H-fraction") {
    CHECK(iterate_next_abc(family_quadratic(2, 2), 0).empty());
    const auto q2 = iterate_next_abc(family_quadratic(2, 2), 6);
    REQUIRE(q2.size() == 6);
    for (std::size_t n = 0; n < 6; ++n) CHECK(q2[n] == conjectured_six_tuple(StreamVariant::Q2, 2, n));
    const auto q3 = iterate_next_abc(family_quadratic(3, 3), 6);
    for (std::size_t n = 0; n < q3.size(); ++n) CHECK(q3[n] == conjectured_six_tuple(StreamVariant::Q3, 3, n));

    for (unsigned m = 1; m <= 4; ++m)
        for (unsigned m0 = 0; m0 <= std::min(m, 3u); ++m0) {
            const HFraction a = hfrac_from_quadratic(family_quadratic(m, m0), 5);
            const HFraction b = hfrac_expand(family_series({m, m0}, 30), 2, 5);
            const std::size_t n = std::min(a.quotients.size(), b.quotients.size());
            CHECK(n >= 3);
            for (std::size_t j = 0; j < n; ++j) CHECK(a.quotients[j] == b.quotients[j]);
            CHECK(a.quotients[0].v == RatFunc(1));
        }

    const HFraction h11 = hfrac_from_quadratic(family_quadratic(1, 1), 8);
    CHECK(h11.quotients[0].v == RatFunc(1));
    for (std::size_t j = 0; j < h11.quotients.size(); ++j) {
        CHECK(h11.quotients[j].k == 0);
        if (j > 0) CHECK(h11.quotients[j].v == T);
    }
}

TEST_CASE("terminating fractions") {
    // (F (1 - q) - 1)(q^2 F - 1) = 0 has the power series root 1/(1 - q)
    const QuadTriple tq{PolyQ(-1), PolyQ{RatFunc(1), RatFunc(-1), RatFunc(1)},
                        PolyQ{RatFunc(0), RatFunc(0), RatFunc(-1), RatFunc(1)}};
    const auto steps = iterate_next_abc(tq, 5);
    REQUIRE(steps.size() == 1);
    CHECK(steps[0].a_star.is_zero());
    const HFraction h = hfrac_from_quadratic(tq, 5);
    CHECK(h.status == HFracStatus::Complete);
    REQUIRE(h.quotients.size() == 1);
    CHECK(h.quotients[0] == PartialQuotient{0, RatFunc(1), PolyQ(-1)});
}
