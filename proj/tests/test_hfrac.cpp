#include <doctest.h>

#include "narayana/closedforms.hpp"
#include "narayana/hankel.hpp"
#include "narayana/hfrac.hpp"
#include "narayana/sequences.hpp"
#include "narayana/verify.hpp"

using namespace narayana;

namespace {

SeriesQ catalan_series(std::size_t order) {
    std::vector<RatFunc> c;
    for (std::size_t i = 0; i < order; ++i) c.emplace_back(Rational(catalan_number(static_cast<unsigned>(i))));
    return SeriesQ(std::move(c), order);
}

}  // namespace

TEST_CASE("expansion examples") {
    const SeriesQ geo = series_invert(SeriesQ(PolyQ{RatFunc(1), RatFunc(-1)}, 10));
    const HFraction h = hfrac_expand(geo, 2, 50);
    REQUIRE(h.quotients.size() == 1);
    CHECK(h.quotients[0].k == 0);
    CHECK(h.quotients[0].v == RatFunc(1));
    CHECK(h.quotients[0].u == PolyQ(-1));
    CHECK(h.status == HFracStatus::Complete);

    const HFraction cube = hfrac_expand(SeriesQ(PolyQ::monomial(RatFunc(1), 3), 12), 2, 50);
    REQUIRE(cube.quotients.size() == 1);
    CHECK(cube.quotients[0].k == 3);
    CHECK(cube.quotients[0].v == RatFunc(1));
    CHECK(cube.quotients[0].u.is_zero());
    CHECK(cube.status == HFracStatus::Complete);

    const HFraction cat = hfrac_expand(catalan_series(20), 2, 50);
    REQUIRE(cat.quotients.size() >= 5);
    for (std::size_t j = 0; j < cat.quotients.size(); ++j) {
        CHECK(cat.quotients[j].k == 0);
        CHECK(cat.quotients[j].v == RatFunc(1));
        CHECK(cat.quotients[j].u == PolyQ(j == 0 ? -1 : -2));
    }
    CHECK(cat.status == HFracStatus::PrecisionExhausted);

    CHECK_THROWS_AS(hfrac_expand(SeriesQ::zero(5), 2, 5), MathError);
    CHECK_THROWS_AS(hfrac_expand(SeriesQ::one(5), 0, 5), PreconditionError);
}

TEST_CASE("status reporting") {
    const SeriesQ g = narayana_series(16);
    CHECK(hfrac_expand(g, 2, 2).status == HFracStatus::MaxTermsReached);
    CHECK(hfrac_expand(g, 2, 2).quotients.size() == 2);
    // too short for a second quotient: 1/(1-q) at order 3 leaves a zero remainder of order 1
    const SeriesQ geo = series_invert(SeriesQ(PolyQ{RatFunc(1), RatFunc(-1)}, 3));
    CHECK(hfrac_expand(geo, 2, 10).status == HFracStatus::PrecisionExhausted);
}

TEST_CASE("evaluation examples") {
    HFraction h;
    h.quotients.push_back({0, RatFunc(1), PolyQ(-1)});
    const SeriesQ geo = hfrac_eval(h, 8);
    for (std::size_t i = 0; i < 8; ++i) CHECK(geo.coeff(i) == RatFunc(1));
    CHECK(hfrac_eval(HFraction{}, 5).is_zero());

    const HFraction e = expected_hfrac({1, 1}, 16);
    const SeriesQ f = family_series({1, 1}, 15);
    CHECK(hfrac_eval(e, 15) == f);
}

TEST_CASE("round trip on random series") {
    RandomSource rs(77);
    for (int i = 0; i < 15; ++i) {
        const SeriesQ f = rs.series(10, 3);
        const HFraction h = hfrac_expand(f, 2, 100);
        REQUIRE(h.consumed_order >= 1);
        CHECK(hfrac_eval(h, h.consumed_order) == f.truncate(h.consumed_order));
    }
}

TEST_CASE("expanding an evaluated fraction recovers it") {
    RandomSource rs(4242);
    for (int trial = 0; trial < 20; ++trial) {
        HFraction h;
        std::size_t order = 3;
        const long terms = rs.integer(1, 4);
        for (long j = 0; j < terms; ++j) {
            const auto k = static_cast<unsigned>(rs.integer(0, 2));
            PolyQ u = rs.poly(k);  // degree <= k + delta - 2
            h.quotients.push_back({k, rs.nonzero_coefficient(), u});
            order += 2 * k + 2;
        }
        const SeriesQ f = hfrac_eval(h, order);
        const HFraction back = hfrac_expand(f, 2, h.quotients.size());
        CHECK(back.quotients == h.quotients);
    }
}

TEST_CASE("invariants are asserted") {
    HFraction bad;
    bad.quotients.push_back({0, RatFunc(), PolyQ()});
    CHECK_THROWS_AS(bad.check_invariants(), MathError);
    HFraction wide;
    wide.quotients.push_back({0, RatFunc(1), PolyQ{RatFunc(1), RatFunc(1)}});
    CHECK_THROWS_AS(wide.check_invariants(), MathError);
}

TEST_CASE("Hankel determinants from the fraction") {
    const HankelReconstruction cat = hankel_from_hfrac(hfrac_expand(catalan_series(20), 2, 50), 8);
    for (std::size_t n = 0; n <= 8; ++n) CHECK(cat.at(n) == RatFunc(1));

    // the series q^2: k_0 = 2, so H_3 = (-1)^3 v_0^3
    const SeriesQ q2(PolyQ::monomial(RatFunc(1), 2), 12);
    const HankelReconstruction r = hankel_from_hfrac(hfrac_expand(q2, 2, 10), 5);
    CHECK(r.at(3) == RatFunc(-1));
    std::vector<RatFunc> seq(11);
    seq[2] = RatFunc(1);
    for (std::size_t n = 0; n <= 5; ++n) CHECK(r.at(n) == det_exact(HankelMatrix(n, seq)));

    const FamilySpec spec{3, 1};
    const auto entries = family_entries(spec, 21);
    const std::vector<RatFunc> rf(entries.begin(), entries.end());
    const HankelReconstruction fam = hankel_from_hfrac(hfrac_expand(family_series(spec, 28), 2, 100), 10);
    for (std::size_t n = 0; n <= 10; ++n) CHECK(fam.at(n) == det_exact(HankelMatrix(n, rf)));

    const HankelReconstruction partial = hankel_from_hfrac(hfrac_expand(family_series(spec, 28), 2, 1), 10);
    CHECK(partial.determined_through < 10);
    CHECK_THROWS_AS(partial.at(10), PreconditionError);

    HFraction d3;
    d3.delta = 3;
    CHECK_THROWS_AS(hankel_from_hfrac(d3, 4), PreconditionError);
}
