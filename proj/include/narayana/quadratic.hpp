#pragma once

/**
 * @file quadratic.hpp
 * @brief Series F given by A + B F + C F^2 = 0, and the NextABC step that
 * peels one Hankel partial quotient off such a quadratic.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "narayana/exactnum.hpp"
#include "narayana/hfrac.hpp"
#include "narayana/qseries.hpp"

namespace narayana {

/// A + B F + C F^2 = 0, kept with B(0) = 1 and C(0) = 0.
struct QuadTriple {
    PolyQ A;
    PolyQ B;
    PolyQ C;

    friend bool operator==(const QuadTriple&, const QuadTriple&) = default;
    std::string to_string() const;
};

/// One NextABC output (A*, B*, C*; k, a, D).
struct SixTuple {
    PolyQ a_star;
    PolyQ b_star;
    PolyQ c_star;
    unsigned k = 0;
    RatFunc a;
    PolyQ d;

    QuadTriple next() const { return {a_star, b_star, c_star}; }
    friend bool operator==(const SixTuple&, const SixTuple&) = default;
    std::string to_string() const;
};

/// Divide the triple by B(0); throws MathError when B(0) = 0.
QuadTriple quad_normalize(const QuadTriple& tq);

/// The power series solution to the given order.
SeriesQ quad_solve_series(const QuadTriple& tq, std::size_t order);
/// A + B F + C F^2 truncated to F's order.
SeriesQ quad_residual(const QuadTriple& tq, const SeriesQ& f);

QuadTriple quad_scale(const QuadTriple& tq, const PolyQ& u);  // solution U F
QuadTriple quad_shift(const QuadTriple& tq, const PolyQ& u);  // solution F + U
QuadTriple quad_power(const QuadTriple& tq, unsigned n);      // solution F^n, n >= 1

/// (-q^(m-m0), beta(m), -t^m q^(m+m0)), solved by (gamma - 1)^m / q^m0.
QuadTriple family_quadratic(unsigned m, unsigned m0);

/// One NextABC step. With use_shortcuts the two short forms of D are taken
/// when they apply; the result is identical either way.
SixTuple next_abc(const QuadTriple& tq, bool use_shortcuts = true);

/// Chained steps; stops early right after a step whose A* is zero.
std::vector<SixTuple> iterate_next_abc(const QuadTriple& start, std::size_t steps);

/// Quotient j is (k_j, -a_j, (D_j - 1)/q). Complete when the chain terminated.
HFraction hfrac_from_quadratic(const QuadTriple& start, std::size_t steps);

}  // namespace narayana
