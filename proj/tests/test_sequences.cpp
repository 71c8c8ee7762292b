#include <doctest.h>

#include "narayana/sequences.hpp"

using namespace narayana;

TEST_CASE("Narayana polynomials") {
    CHECK(narayana_poly(0) == PolyT(1));
    CHECK(narayana_poly(4) == (PolyT{1, 6, 6, 1}));
    CHECK(narayana_poly(5) == (PolyT{1, 10, 20, 10, 1}));
    CHECK(narayana_poly(6).eval(1) == 132);
    for (unsigned n = 0; n <= 12; ++n) CHECK(narayana_poly(n).eval(1) == Rational(catalan_number(n)));
}

TEST_CASE("Narayana series") {
    const SeriesQ g = narayana_series(3);
    CHECK(g.to_poly() == PolyQ{RatFunc(1), RatFunc(1), RatFunc(PolyT{1, 1})});
    CHECK(narayana_series(1).to_poly() == PolyQ(1));
    const SeriesQ big = narayana_series(14);
    for (unsigned n = 0; n < 14; ++n) CHECK(big.coeff(n) == RatFunc(narayana_poly(n)));

    // -1 + (1 - q + tq) gamma - tq gamma^2 vanishes to the full order
    const RatFunc t(PolyT::t());
    const SeriesQ lin = SeriesQ(PolyQ{RatFunc(1), t - RatFunc(1)}, 14) * big;
    const SeriesQ quad = SeriesQ(PolyQ::q() * t, 14) * big * big;
    CHECK((lin - quad - SeriesQ::one(14)).is_zero());
}

TEST_CASE("convolution powers") {
    const auto tau1 = conv_power_seq(1, 8);
    for (unsigned n = 0; n < 8; ++n) CHECK(tau1[n] == narayana_poly(n));

    const auto tau4 = conv_power_seq(4, 8);
    for (unsigned n = 0; n < 8; ++n)
        CHECK(tau4[n].eval(1) == ratio(BigInt(4) * binomial(2 * n + 4, n), 2 * n + 4));
    CHECK(conv_power_seq(6, 1)[0] == PolyT(1));
    CHECK_THROWS(conv_power_seq(0, 3));

    // sum gamma^(2m)_n q^(n+m) = (gamma - 1)^m
    const SeriesQ g1 = narayana_series(12) - SeriesQ::one(12);
    for (unsigned m = 1; m <= 5; ++m) {
        const auto seq = conv_power_seq(2 * m, 12 - m);
        const SeriesQ p = series_pow(g1, m);
        for (unsigned n = 0; n + m < 12; ++n) CHECK(p.coeff(n + m) == RatFunc(seq[n]));
    }
}

TEST_CASE("family entries") {
    CHECK(family_entry({2, 2}, 0) == PolyT(1));
    CHECK(family_entry({3, 0}, 0) == PolyT());
    CHECK(family_entry({2, 2}, 1).eval(1) == 4);
    for (unsigned m = 1; m <= 4; ++m) {
        for (unsigned shift = 0; shift <= std::min(m, 3u); ++shift) {
            const FamilySpec spec{m, shift};
            const SeriesQ f = family_series(spec, 10);
            const auto entries = family_entries(spec, 10);
            for (long i = 0; i < 10; ++i) {
                CHECK(f.coeff(static_cast<std::size_t>(i)) == RatFunc(family_entry(spec, i)));
                CHECK(entries[static_cast<std::size_t>(i)] == family_entry(spec, i));
                const long n = i + static_cast<long>(shift) - static_cast<long>(m);
                if (n >= 0)
                    CHECK(family_entry(spec, i).eval(1) ==
                          ratio(BigInt(2 * m) * binomial(2 * n + 2 * m, n), 2 * n + 2 * m));
            }
        }
    }
    CHECK_THROWS_AS(FamilySpec({1, 2}).validate(), PreconditionError);
    CHECK_THROWS_AS(FamilySpec({5, 4}).validate(), PreconditionError);
}

TEST_CASE("integer helpers") {
    CHECK(fibonacci_number(0) == 0);
    CHECK(fibonacci_number(1) == 1);
    CHECK(fibonacci_number(3) == 2);
    CHECK(fibonacci_number(7) == 13);
    CHECK(catalan_number(0) == 1);
    CHECK(catalan_number(5) == 42);
}
