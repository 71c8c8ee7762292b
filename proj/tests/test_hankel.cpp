#include <doctest.h>

#include <random>

#include "narayana/hankel.hpp"
#include "narayana/sequences.hpp"
#include "narayana/verify.hpp"

using namespace narayana;

namespace {

// Laplace expansion along the first row; the independent oracle for small sizes.
RatFunc cofactor_det(const SquareMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return RatFunc(1);
    RatFunc acc;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).is_zero()) continue;
        SquareMatrix minor(n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != c) minor(i - 1, jj++) = m(i, j);
        const RatFunc term = m(0, c) * cofactor_det(minor);
        acc = c % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

SquareMatrix random_matrix(RandomSource& rs, std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RatFunc den;
            while (den.is_zero()) den = rs.coefficient();
            m(i, j) = rs.coefficient() / den;
        }
    return m;
}

}  // namespace

TEST_CASE("build_hankel") {
    CHECK(build_hankel([](long i) { return RatFunc(i); }, 0).size() == 0);
    const HankelMatrix h =
        build_hankel([](long i) { return RatFunc(Rational(catalan_number(static_cast<unsigned>(i)))); }, 2);
    CHECK(h(0, 0) == RatFunc(1));
    CHECK(h(0, 1) == RatFunc(1));
    CHECK(h(1, 0) == RatFunc(1));
    CHECK(h(1, 1) == RatFunc(2));

    const FamilySpec spec{2, 2};
    const HankelMatrix f = build_hankel([&](long i) { return RatFunc(family_entry(spec, i)); }, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(f(i, j) == f(j, i));
}

TEST_CASE("det_exact examples") {
    CHECK(det_exact(SquareMatrix(0)) == RatFunc(1));
    CHECK(det_exact(HankelMatrix(2, {RatFunc(2), RatFunc(3), RatFunc(7)})) == RatFunc(5));

    const FamilySpec spec{2, 2};
    const auto seq = family_entries(spec, 5);
    const RatFunc d = det_exact(HankelMatrix(3, {seq.begin(), seq.end()}));
    CHECK(d == RatFunc(PolyT{0, 0, -1, 0, -1}));
}

TEST_CASE("Bareiss agrees with cofactor expansion") {
    RandomSource rs(314);
    for (std::size_t n = 1; n <= 4; ++n)
        for (int k = 0; k < 8; ++k) {
            const SquareMatrix m = random_matrix(rs, n);
            CHECK(det_exact(m) == cofactor_det(m));
        }
    // sizes above the cofactor cutoff on Hankel data
    const auto seq = family_entries({3, 1}, 11);
    for (std::size_t n = 4; n <= 6; ++n) {
        const HankelMatrix h(n, {seq.begin(), seq.end()});
        CHECK(det_exact(h) == cofactor_det(h.dense()));
    }
}

TEST_CASE("row scaling and zero pivots") {
    RandomSource rs(2718);
    for (std::size_t n = 1; n <= 4; ++n) {
        SquareMatrix m = random_matrix(rs, n);
        const RatFunc s = rs.nonzero_coefficient();
        const RatFunc before = det_exact(m);
        for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(n - 1, j) * s;
        CHECK(det_exact(m) == before * s);
    }
    // leading zero forces a row swap: det [[0,1],[1,0]] = -1, and a 5x5 with pivot swaps
    CHECK(det_exact(HankelMatrix(2, {RatFunc(0), RatFunc(1), RatFunc(0)})) == RatFunc(-1));
    std::vector<RatFunc> seq(9);
    seq[4] = RatFunc(1);
    CHECK(det_exact(HankelMatrix(5, seq)) == RatFunc(1));
    seq[4] = RatFunc();
    CHECK(det_exact(HankelMatrix(5, seq)).is_zero());
}

TEST_CASE("hankel_dets matches individual determinants") {
    const auto seq = family_entries({2, 1}, 15);
    const std::vector<RatFunc> rf(seq.begin(), seq.end());
    const auto dets = hankel_dets(rf, 7);
    REQUIRE(dets.size() == 8);
    for (std::size_t n = 0; n <= 7; ++n) CHECK(dets[n] == det_exact(HankelMatrix(n, rf)));
}
