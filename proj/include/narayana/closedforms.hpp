#pragma once

/**
 * @file closedforms.hpp
 * @brief Explicit formulas: q-integers, rho/beta/alpha, R and S, Lucas and
 * Fibonacci polynomials, determinant closed forms, expected H-fractions and
 * the conjectured NextABC streams.
 */

#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>

#include "narayana/exactnum.hpp"
#include "narayana/hfrac.hpp"
#include "narayana/qseries.hpp"
#include "narayana/quadratic.hpp"
#include "narayana/sequences.hpp"

namespace narayana {

/// [n]_{t^e} = 1 + t^e + ... + t^{e(n-1)}; zero for n <= 0.
PolyT qint(long n, unsigned e);

/// rho(m; t, d) from its defining sum (1 + t^m at d = m); throws for d > m.
PolyT rho_poly(unsigned m, unsigned d);
/// m/(m-d) sum_i C(m-1-d+i, i) C(m-1-i, d-i) t^i, valid for d < m.
PolyT rho_poly_alt(unsigned m, unsigned d);

/// beta(m; t, q) = sum_{d=0}^{m} rho(d) (-q)^d, m >= 1.
PolyQ beta_poly(unsigned m);
/// alpha(m; t, q) = sum_{d=0}^{m-2} rho(d) (-q)^d, m >= 2.
PolyQ alpha_poly(unsigned m);

/// R(m; t, n) = m[m]_t (sum_{i<=n} C(i+2,2) t^{mi} + sum_{i=n+1}^{2n} C(2n-i+2,2) t^{mi}).
PolyT r_poly(unsigned m, long n);
/// S(m; t, n), the same with weights (i+1)^2 and (2n-i+1)^2.
PolyT s_poly(unsigned m, long n);

namespace detail {
template <class Ring>
Ring ring_const(const Rational& c) {
    if constexpr (std::is_same_v<Ring, PolyT>)
        return PolyT(c);
    else
        return Ring(RatFunc(c));
}

template <class Ring>
Ring ring_pow(const Ring& x, unsigned e) {
    Ring r = ring_const<Ring>(1);
    for (unsigned i = 0; i < e; ++i) r = r * x;
    return r;
}
}  // namespace detail

/// L_n(x, s) = sum_i C(n-i, i) n/(n-i) s^i x^{n-2i}, L_0 = 2.
template <class Ring>
Ring lucas_eval(unsigned n, const Ring& x, const Ring& s) {
    using detail::ring_const;
    using detail::ring_pow;
    if (n == 0) return ring_const<Ring>(2);
    Ring acc = ring_const<Ring>(0);
    for (unsigned i = 0; 2 * i <= n; ++i) {
        const Rational c = ratio(binomial(n - i, i) * n, n - i);
        acc = acc + ring_const<Ring>(c) * ring_pow(s, i) * ring_pow(x, n - 2 * i);
    }
    return acc;
}

/// F_n(x, s) = sum_k C(n-1-k, k) s^k x^{n-1-2k}, F_0 = 0.
template <class Ring>
Ring fib_eval(unsigned n, const Ring& x, const Ring& s) {
    using detail::ring_const;
    using detail::ring_pow;
    Ring acc = ring_const<Ring>(0);
    if (n == 0) return acc;
    for (unsigned k = 0; 2 * k + 1 <= n; ++k)
        acc = acc + ring_const<Ring>(Rational(binomial(n - 1 - k, k))) * ring_pow(s, k) * ring_pow(x, n - 1 - 2 * k);
    return acc;
}

/// P_n = x P_{n-1} + s P_{n-2} from the given P_0, P_1.
template <class Ring>
Ring three_term_eval(unsigned n, const Ring& x, const Ring& s, const Ring& p0, const Ring& p1) {
    if (n == 0) return p0;
    Ring prev = p0;
    Ring cur = p1;
    for (unsigned i = 1; i < n; ++i) {
        Ring nxt = x * cur + s * prev;
        prev = std::move(cur);
        cur = std::move(nxt);
    }
    return cur;
}

template <class Ring>
Ring lucas_rec(unsigned n, const Ring& x, const Ring& s) {
    return three_term_eval(n, x, s, detail::ring_const<Ring>(2), x);
}

template <class Ring>
Ring fib_rec(unsigned n, const Ring& x, const Ring& s) {
    return three_term_eval(n, x, s, detail::ring_const<Ring>(0), detail::ring_const<Ring>(1));
}

enum class FibLucas { Fib, Lucas };

/// Compares the 2^{1-n} (x^2+4s)-sum representation with the recurrence at
/// x = t and ceil(n/2)+2 rational values of s.
bool fib_lucas_closed_check(unsigned n, FibLucas which);

struct DetCase {
    FamilySpec family;
    std::size_t size = 0;
    RatFunc value;
    std::string case_label;
    /// Several branches matched with different values (only possible for m = 1).
    bool ambiguous = false;
};

/// Piecewise determinant of the shifted family. Branches are tried in the
/// written order and "otherwise" (zero) is last.
DetCase main_det(const FamilySpec& family, std::size_t size);

/// Hankel determinants of gamma^(3), gamma^(4), gamma^(6).
RatFunc cigler_det(unsigned variant, std::size_t size);
/// r_n(t) = sum_{i=0}^{2n} C(min(i, 2n-i)+2, 2) t^{3i}.
PolyT cigler_r(long n);

/// Quotients of the H-fraction of the family series as given by the closed formulas.
HFraction expected_hfrac(const FamilySpec& family, std::size_t terms);

enum class StreamVariant { Q2, Q3 };

/// Entry n of the closed-form NextABC stream: (A_{n+1}, B_{n+1}, C_{n+1}; k_n, a_n, D_n).
SixTuple conjectured_six_tuple(StreamVariant variant, unsigned m, std::size_t n);
/// The input triple (A_n, B_n, C_n) of the closed-form stream.
QuadTriple conjectured_triple(StreamVariant variant, unsigned m, std::size_t n);

/// Quadratic for gamma (gamma - 1)^m / q^m0 built from Lucas and Fibonacci
/// polynomials at (-1 + q + tq, -tq^2), normalized to B(0) = 1.
QuadTriple odd_case_triple(unsigned m, unsigned m0);

}  // namespace narayana
