#include "narayana/quadratic.hpp"

#include "narayana/closedforms.hpp"

namespace narayana {

std::string QuadTriple::to_string() const {
    return "A=" + A.to_string() + " B=" + B.to_string() + " C=" + C.to_string();
}

std::string SixTuple::to_string() const {
    return "A*=" + a_star.to_string() + " B*=" + b_star.to_string() + " C*=" + c_star.to_string() +
           " k=" + std::to_string(k) + " a=" + a.to_string() + " D=" + d.to_string();
}

QuadTriple quad_normalize(const QuadTriple& tq) {
    const RatFunc b0 = tq.B.coeff(0);
    if (b0.is_zero()) throw MathError("cannot normalize triple: B(0) = 0");
    if (b0.is_one()) return tq;
    const RatFunc inv = b0.inverse();
    return {tq.A * inv, tq.B * inv, tq.C * inv};
}

SeriesQ quad_solve_series(const QuadTriple& tq, std::size_t order) {
    if (order == 0) throw PreconditionError("quad_solve_series needs order >= 1");
    const RatFunc b0 = tq.B.coeff(0);
    if (b0.is_zero()) throw MathError("inconsistent triple: coefficient 0 cannot be solved since B(0) = 0");
    if (!tq.C.coeff(0).is_zero()) throw PreconditionError("quad_solve_series needs C(0) = 0");
    const RatFunc b0_inv = b0.inverse();

    std::vector<RatFunc> f(order);
    std::vector<RatFunc> sq(order);  // coefficients of F^2
    const long degB = tq.B.degree();
    const long degC = tq.C.degree();
    for (std::size_t n = 0; n < order; ++n) {
        RatFunc acc = tq.A.coeff(n);
        for (std::size_t i = 1; i <= n && static_cast<long>(i) <= degB; ++i) {
            if (!tq.B.coeffs()[i].is_zero() && !f[n - i].is_zero()) acc += tq.B.coeffs()[i] * f[n - i];
        }
        for (std::size_t c = 1; c <= n && static_cast<long>(c) <= degC; ++c) {
            if (!tq.C.coeffs()[c].is_zero() && !sq[n - c].is_zero()) acc += tq.C.coeffs()[c] * sq[n - c];
        }
        f[n] = -acc * b0_inv;
        RatFunc s;
        for (std::size_t i = 0; i <= n; ++i) {
            if (!f[i].is_zero() && !f[n - i].is_zero()) s += f[i] * f[n - i];
        }
        sq[n] = s;
    }
    return SeriesQ(std::move(f), order);
}

SeriesQ quad_residual(const QuadTriple& tq, const SeriesQ& f) {
    const std::size_t o = f.order();
    const SeriesQ r = SeriesQ(tq.A, o) + SeriesQ(tq.B, o) * f + SeriesQ(tq.C, o) * (f * f);
    return r.truncate(o);
}

QuadTriple quad_scale(const QuadTriple& tq, const PolyQ& u) {
    if (u.coeff(0).is_zero()) throw MathError("quad_scale: U(0) = 0 leaves B U without a unit constant term");
    return quad_normalize({tq.A * u * u, tq.B * u, tq.C});
}

QuadTriple quad_shift(const QuadTriple& tq, const PolyQ& u) {
    return quad_normalize({tq.A - tq.B * u + tq.C * u * u, tq.B - tq.C * u * RatFunc(2), tq.C});
}

QuadTriple quad_power(const QuadTriple& tq, unsigned n) {
    if (n == 0) throw PreconditionError("quad_power: n = 0 gives the degenerate relation 1 - 2 + 1 = 0");
    PolyQ mid = lucas_eval<PolyQ>(n, tq.B, -(tq.A * tq.C));
    if (n % 2 == 0) mid = -mid;
    return quad_normalize({tq.A.pow(n), mid, tq.C.pow(n)});
}

QuadTriple family_quadratic(unsigned m, unsigned m0) {
    if (m < 1) throw PreconditionError("family_quadratic needs m >= 1");
    if (m < m0) throw PreconditionError("family_quadratic needs m >= m0");
    return {PolyQ::monomial(RatFunc(-1), m - m0), beta_poly(m),
            PolyQ::monomial(RatFunc(-PolyT::monomial(1, m)), m + m0)};
}

SixTuple next_abc(const QuadTriple& tq, bool use_shortcuts) {
    if (tq.A.is_zero()) throw PreconditionError("NextABC needs A != 0");
    if (tq.C.is_zero()) throw PreconditionError("NextABC needs C != 0");
    if (!tq.B.coeff(0).is_one()) throw PreconditionError("NextABC needs B(0) = 1");
    if (!tq.C.coeff(0).is_zero()) throw PreconditionError("NextABC needs C(0) = 0");

    const auto k = static_cast<std::size_t>(tq.A.valuation());
    const RatFunc a = tq.A.coeff(k);
    const RatFunc a_inv = a.inverse();
    const PolyQ a_low = tq.A.div_q_pow(k);  // A / q^k
    const std::size_t n = k + 2;

    const PolyQ a_unit = a_low * a_inv;
    SeriesQ d_series = use_shortcuts && a_unit == PolyQ(1)
                           ? SeriesQ(tq.B, n)
                           : SeriesQ(tq.B, n) * series_invert(SeriesQ(a_unit, n));
    if (!(use_shortcuts && tq.C.valuation() >= 2)) {
        d_series = d_series - SeriesQ(tq.C.shift_up(k) * a, n) * series_invert(SeriesQ(tq.B, n));
    }
    const PolyQ d = d_series.to_poly();
    if (!d.coeff(0).is_one()) throw MathError("algorithm invariant violated: D(0) != 1");

    const PolyQ numer = -(d * d * tq.A) * a_inv + tq.B * d.shift_up(k) - (tq.C * a).shift_up(2 * k);
    PolyQ a_star;
    try {
        a_star = numer.div_q_pow(2 * k + 2);
    } catch (const MathError&) {
        throw MathError("algorithm invariant violated: q^" + std::to_string(2 * k + 2) +
                        " does not divide the A* numerator");
    }
    SixTuple out;
    out.a_star = std::move(a_star);
    out.b_star = a_low * d * (a_inv * RatFunc(2)) - tq.B;
    out.c_star = -(tq.A.shift_up(2) * a_inv);
    out.k = static_cast<unsigned>(k);
    out.a = a;
    out.d = d;
    return out;
}

std::vector<SixTuple> iterate_next_abc(const QuadTriple& start, std::size_t steps) {
    std::vector<SixTuple> out;
    QuadTriple cur = start;
    for (std::size_t i = 0; i < steps; ++i) {
        out.push_back(next_abc(cur));
        if (out.back().a_star.is_zero()) break;
        cur = out.back().next();
    }
    return out;
}

HFraction hfrac_from_quadratic(const QuadTriple& start, std::size_t steps) {
    const auto tuples = iterate_next_abc(start, steps);
    HFraction h;
    h.delta = 2;
    for (const auto& st : tuples) h.quotients.push_back({st.k, -st.a, (st.d - PolyQ(1)).div_q_pow(1)});
    h.status = !tuples.empty() && tuples.back().a_star.is_zero() ? HFracStatus::Complete
                                                                   : HFracStatus::MaxTermsReached;
    h.check_invariants();
    return h;
}

}  // namespace narayana
