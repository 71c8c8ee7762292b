#include <doctest.h>

#include "narayana/qseries.hpp"
#include "narayana/sequences.hpp"
#include "narayana/verify.hpp"

using namespace narayana;

TEST_CASE("series arithmetic examples") {
    const SeriesQ a(PolyQ{RatFunc(1), RatFunc(1)}, 5);
    const SeriesQ b(PolyQ{RatFunc(1), RatFunc(-1)}, 5);
    const SeriesQ p = series_arith(a, b, SeriesOp::Mul);
    CHECK(p.order() == 5);
    CHECK(p.to_poly() == PolyQ{RatFunc(1), RatFunc(0), RatFunc(-1)});

    const SeriesQ q(PolyQ::q(), 4);
    CHECK(series_arith(q, q, SeriesOp::Add).to_poly() == PolyQ::q() * RatFunc(2));
}

TEST_CASE("gamma squared from the quadratic") {
    // gamma^2 = (-1 + (1 - q + tq) gamma) / (tq)
    const SeriesQ g = narayana_series(7);
    const SeriesQ sq = g * g;
    const PolyT t = PolyT::t();
    CHECK(sq.coeff(0) == RatFunc(1));
    CHECK(sq.coeff(1) == RatFunc(2));
    CHECK(sq.coeff(2) == RatFunc(PolyT{3, 2}));
    const SeriesQ lin = g * SeriesQ(PolyQ{RatFunc(1), RatFunc(t - PolyT(1))}, 7) - SeriesQ::one(7);
    for (std::size_t i = 0; i + 1 < 7; ++i) CHECK(lin.coeff(i + 1) == sq.coeff(i) * RatFunc(t));
}

TEST_CASE("series inversion") {
    const SeriesQ inv = series_invert(SeriesQ(PolyQ{RatFunc(1), RatFunc(-1)}, 6));
    for (std::size_t i = 0; i < 6; ++i) CHECK(inv.coeff(i) == RatFunc(1));
    CHECK(series_invert(SeriesQ::one(3)) == SeriesQ::one(3));
    CHECK_THROWS_AS(series_invert(SeriesQ(PolyQ::q(), 4)), MathError);

    const PolyQ beta2{RatFunc(1), RatFunc(PolyT{-2, -2}), RatFunc(PolyT{1, 0, 1})};
    const SeriesQ s(beta2, 12);
    CHECK(series_invert(s) * s == SeriesQ::one(12));
}

TEST_CASE("inversion round trip on random units") {
    RandomSource rs(5);
    for (int i = 0; i < 50; ++i) {
        std::vector<RatFunc> c(8);
        c[0] = rs.nonzero_coefficient();
        for (std::size_t j = 1; j < c.size(); ++j) c[j] = rs.coefficient();
        const SeriesQ a(std::move(c), 8);
        CHECK(a * series_invert(a) == SeriesQ::one(8));
    }
}

TEST_CASE("shift") {
    const SeriesQ a(PolyQ{RatFunc(0), RatFunc(0), RatFunc(1), RatFunc(1)}, 6);
    const SeriesQ d = series_shift(a, -2);
    CHECK(d.order() == 4);
    CHECK(d.to_poly() == PolyQ{RatFunc(1), RatFunc(1)});
    CHECK(series_shift(d, 2) == a);
    CHECK(series_shift(SeriesQ::one(3), 3).to_poly() == PolyQ::monomial(RatFunc(1), 3));
    CHECK_THROWS_AS(series_shift(SeriesQ(PolyQ{RatFunc(1), RatFunc(1)}, 4), -1), MathError);

    const SeriesQ g1 = narayana_series(10) - SeriesQ::one(10);
    const SeriesQ f = series_shift(series_pow(g1, 2), -2);
    CHECK(f.coeff(0) == RatFunc(1));
}

TEST_CASE("powers") {
    const SeriesQ a(PolyQ{RatFunc(1), RatFunc(1)}, 6);
    CHECK(series_pow(a, 2).to_poly() == PolyQ{RatFunc(1), RatFunc(2), RatFunc(1)});
    CHECK(series_pow(a, 0) == SeriesQ::one(6));
    const SeriesQ g1 = narayana_series(8) - SeriesQ::one(8);
    const SeriesQ c = series_pow(g1, 3);
    CHECK(c.valuation() == 3);
    CHECK(c.coeff(3) == RatFunc(1));

    RandomSource rs(17);
    for (unsigned m = 1; m <= 6; ++m) {
        const SeriesQ r = rs.series(7, 2);
        SeriesQ acc = SeriesQ::one(7);
        for (unsigned i = 0; i < m; ++i) acc = acc * r;
        CHECK(series_pow(r, m) == acc);
    }
}

TEST_CASE("valuation is additive and truncation is strict") {
    RandomSource rs(23);
    for (int i = 0; i < 30; ++i) {
        const SeriesQ a = rs.series(10, 3);
        const SeriesQ b = rs.series(10, 3);
        const SeriesQ p = a * b;
        CHECK(p.valuation() == a.valuation() + b.valuation());
        CHECK(p.order() == std::min(a.valuation() + b.order(), b.valuation() + a.order()));
    }
    const SeriesQ s(PolyQ{RatFunc(1)}, 3);
    CHECK_THROWS(s.truncate(5));
    CHECK((s + SeriesQ::one(7)).order() == 3);
}

TEST_CASE("series text form") {
    const SeriesQ s(PolyQ{RatFunc(1), RatFunc(PolyT{1, 1})}, 3);
    CHECK(s.to_string() == "1 + (1 + t)*q + O(q^3)");
}
