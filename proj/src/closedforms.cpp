#include "narayana/closedforms.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace narayana {

namespace {

PolyT t_pow(long e) {
    if (e < 0) throw MathError("negative power of t: " + std::to_string(e));
    return PolyT::monomial(1, static_cast<std::size_t>(e));
}

long sign_of(long e) { return e % 2 == 0 ? 1 : -1; }

// (-t)^m
RatFunc neg_t_pow(unsigned m) { return RatFunc(t_pow(m) * Rational(sign_of(m))); }

PolyQ qmono(const RatFunc& c, std::size_t e) { return PolyQ::monomial(c, e); }

}  // namespace

PolyT qint(long n, unsigned e) {
    PolyT out;
    for (long i = 0; i < n; ++i) out += t_pow(static_cast<long>(e) * i);
    return out;
}

PolyT rho_poly(unsigned m, unsigned d) {
    if (m < 1) throw PreconditionError("rho needs m >= 1");
    if (d > m) throw PreconditionError("rho(m; t, d) needs d <= m, got d = " + std::to_string(d));
    if (d == m) return PolyT(1) + t_pow(m);
    PolyT out;
    for (unsigned i = 0; i <= d; ++i) {
        const Rational w = ratio(BigInt(m) * (m - d), BigInt(m - i) * (m - d + i));
        out += t_pow(i) * (w * Rational(binomial(m - d + i, i) * binomial(m - i, d - i)));
    }
    return out;
}

PolyT rho_poly_alt(unsigned m, unsigned d) {
    if (d >= m) throw PreconditionError("alternative rho form needs d < m");
    PolyT out;
    for (unsigned i = 0; i <= d; ++i)
        out += t_pow(i) * Rational(binomial(m - 1 - d + i, i) * binomial(m - 1 - i, d - i));
    return out * ratio(m, m - d);
}

PolyQ beta_poly(unsigned m) {
    if (m < 1) throw PreconditionError("beta needs m >= 1");
    PolyQ out;
    for (unsigned d = 0; d <= m; ++d) out += neg_q_pow(d) * RatFunc(rho_poly(m, d));
    return out;
}

PolyQ alpha_poly(unsigned m) {
    if (m < 2) throw PreconditionError("alpha needs m >= 2 (it is the empty sum at m = 1)");
    PolyQ out;
    for (unsigned d = 0; d + 2 <= m; ++d) out += neg_q_pow(d) * RatFunc(rho_poly(m, d));
    return out;
}

namespace {

PolyT weighted_sum(unsigned m, long n, const std::function<BigInt(long)>& w) {
    if (n < 0) return {};
    PolyT inner;
    for (long i = 0; i <= 2 * n; ++i) inner += t_pow(static_cast<long>(m) * i) * Rational(w(i <= n ? i : 2 * n - i));
    return inner * qint(m, 1) * Rational(m);
}

}  // namespace

PolyT r_poly(unsigned m, long n) {
    return weighted_sum(m, n, [](long i) { return binomial(i + 2, 2); });
}

PolyT s_poly(unsigned m, long n) {
    return weighted_sum(m, n, [](long i) { return BigInt((i + 1) * (i + 1)); });
}

bool fib_lucas_closed_check(unsigned n, FibLucas which) {
    const PolyT x = PolyT::t();
    const unsigned samples = (n + 1) / 2 + 2;
    for (unsigned i = 0; i < samples; ++i) {
        const PolyT s(ratio(2 * static_cast<long>(i) - 1, 3));
        const PolyT u = x * x + s * Rational(4);
        PolyT closed;
        if (which == FibLucas::Fib) {
            for (unsigned k = 1; 2 * k <= n + 1; ++k)
                closed += u.pow(k - 1) * x.pow(n - 2 * k + 1) * Rational(binomial(n, 2 * k - 1));
        } else {
            for (unsigned k = 0; 2 * k <= n; ++k) closed += u.pow(k) * x.pow(n - 2 * k) * Rational(binomial(n, 2 * k));
        }
        // 2^{1-n}
        closed *= n == 0 ? Rational(2) : Rational(BigInt(1), BigInt(1) << static_cast<mp_bitcnt_t>(n - 1));
        const PolyT rec = which == FibLucas::Fib ? fib_rec(n, x, s) : lucas_rec(n, x, s);
        if (!(closed == rec)) return false;
    }
    return true;
}

namespace {

struct Branch {
    std::string label;
    long offset;                      // N = m n + offset
    std::function<RatFunc(long)> at;  // value as a function of n
};

}  // namespace

DetCase main_det(const FamilySpec& family, std::size_t size) {
    family.validate();
    const long m = family.m;
    const long big_n = static_cast<long>(size);
    DetCase out{family, size, RatFunc(), "otherwise", false};
    if (family.shift == 0 && size == 0) {
        out.value = RatFunc(1);
        out.case_label = "N=0";
        return out;
    }
    const unsigned um = family.m;
    auto xi1 = [m](long n) { return sign_of(n * (m * (m - 1) / 2)); };
    auto qn = [um](long n) { return qint(n, um); };
    auto val = [](long sign, long texp, const PolyT& p) { return RatFunc(t_pow(texp) * p * Rational(sign)); };

    std::vector<Branch> branches;
    switch (family.shift) {
        case 0:
            branches = {
                {"N=mn", 0, [&](long n) { return val(-xi1(n), m * (n - 1) * (m * n - 2) / 2, qn(n - 1)); }},
                {"N=mn+1", 1, [&](long n) { return val(sign_of(m) * xi1(n), m * m * n * (n - 1) / 2, qn(n)); }},
            };
            break;
        case 1:
            branches = {{"N=mn", 0, [&](long n) { return val(xi1(n), m * m * n * (n - 1) / 2, PolyT(1)); }}};
            break;
        case 2:
            branches = {
                // Signs as obtained from the H-fraction: the printed statement carries an
                // extra (-1)^(mn) in both branches, which the oracle rejects for odd mn.
                {"N=mn", 0, [&](long n) { return val(xi1(n), m * m * n * (n - 1) / 2, qn(n + 1)); }},
                {"N=mn-1", -1,
                 [&](long n) { return val(sign_of(m + 1) * xi1(n), m * (n - 1) * (m * n - 2) / 2, qn(n)); }},
            };
            break;
        default:
            branches = {
                {"N=mn", 0, [&](long n) { return val(xi1(n), m * m * n * (n - 1) / 2, qn(n + 1).pow(2)); }},
                {"N=mn-1", -1,
                 [&](long n) {
                     return val(sign_of(m - 1) * xi1(n), m * (n - 1) * (m * n - 2) / 2, r_poly(um, n - 1));
                 }},
                {"N=mn-2", -2, [&](long n) { return val(-xi1(n), m * (n - 1) * (m * n - 4) / 2, qn(n).pow(2)); }},
            };
            break;
    }
    bool matched = false;
    for (const auto& b : branches) {
        const long rest = big_n - b.offset;
        if (rest < 0 || rest % m != 0) continue;
        const long n = rest / m;
        const RatFunc v = b.at(n);
        if (!matched) {
            matched = true;
            out.value = v;
            out.case_label = b.label + " (n=" + std::to_string(n) + ")";
        } else if (!(v == out.value)) {
            out.ambiguous = true;
        }
    }
    return out;
}

PolyT cigler_r(long n) {
    PolyT out;
    for (long i = 0; i <= 2 * n; ++i) out += t_pow(3 * i) * Rational(binomial(std::min(i, 2 * n - i) + 2, 2));
    return out;
}

RatFunc cigler_det(unsigned variant, std::size_t size) {
    const long big_n = static_cast<long>(size);
    switch (variant) {
        case 3: {
            const long top = big_n * (big_n - 1) / 2;
            PolyT out;
            for (long k = 0; 2 * k <= big_n; ++k)
                out += t_pow(top - k) * Rational(sign_of(k) * binomial(big_n - k, k));
            return out;
        }
        case 4: {
            const long n = big_n / 2;
            const long e = big_n % 2 == 0 ? 2 * n * (n - 1) : 2 * n * n;
            return RatFunc(t_pow(e) * qint(n + 1, 2) * Rational(sign_of(n)));
        }
        case 6: {
            const long n = big_n / 3;
            switch (big_n % 3) {
                case 0: return RatFunc(t_pow(9 * n * (n - 1) / 2) * qint(n + 1, 3).pow(2) * Rational(sign_of(n)));
                case 1: return RatFunc(t_pow(3 * n * (3 * n - 1) / 2) * qint(n + 1, 3).pow(2) * Rational(sign_of(n)));
                default: {
                    const PolyT r = cigler_r(n);
                    const PolyT via_r = exact_div(r_poly(3, n), qint(3, 1) * Rational(3));
                    if (!(r == via_r)) throw MathError("r_n(t) disagrees with R(3; t, n) / (3 [3]_t)");
                    return RatFunc(t_pow(3 * n * (3 * n + 1) / 2) * qint(3, 1) * r * Rational(3 * sign_of(n + 1)));
                }
            }
        }
        default: throw PreconditionError("cigler_det variant must be 3, 4 or 6, got " + std::to_string(variant));
    }
}

namespace {

RatFunc jq(long n, unsigned m) { return RatFunc(qint(n, m)); }

// (P - 1) / q for a polynomial with constant term 1
PolyQ u_of(const PolyQ& one_plus_uq) { return (one_plus_uq - PolyQ(1)).div_q_pow(1); }

PartialQuotient shift2_quotient(unsigned m, std::size_t j, const PolyQ& beta) {
    const auto i = static_cast<long>(j / 2);
    if (j % 2 == 0) {
        const RatFunc v = i == 0 ? RatFunc(1) : -neg_t_pow(m) * jq(i, m) / jq(i + 1, m);
        const PolyQ d = beta - neg_q_pow(m) * RatFunc(PolyT(1) + t_pow(m));
        return {m - 2, v, u_of(d)};
    }
    return {0, RatFunc(sign_of(m + 1)) * jq(i + 2, m) / jq(i + 1, m), PolyQ()};
}

PartialQuotient shift3_quotient(unsigned m, std::size_t j, const PolyQ& alpha) {
    const auto i = static_cast<long>(j / 3);
    const RatFunc j1 = jq(i + 1, m);
    const RatFunc j2 = jq(i + 2, m);
    const RatFunc r = RatFunc(r_poly(m, i));
    switch (j % 3) {
        case 0: {
            // v_0 = 1 since the series starts with +q^(m-3). For i >= 1 the power of -t
            // is m, forced by v_{3i+1} v_{3i+2} v_{3i+3} = t^m.
            const RatFunc v = i == 0 ? RatFunc(1) : -neg_t_pow(m) * RatFunc(r_poly(m, i - 1)) / (j1 * j1);
            return {m - 3, v, u_of(alpha)};
        }
        case 1: return {0, RatFunc(sign_of(m)) * r / (j1 * j1), PolyQ(j1 * j2 / r)};
        default: return {0, -(j1 * j1 * j2 * j2) / (r * r), PolyQ(-(j1 * j2) / r)};
    }
}

}  // namespace

HFraction expected_hfrac(const FamilySpec& family, std::size_t terms) {
    family.validate();
    const unsigned m = family.m;
    HFraction h;
    h.delta = 2;
    h.status = HFracStatus::MaxTermsReached;
    const PolyQ beta = beta_poly(m);
    switch (family.shift) {
        case 0:
            if (m < 2) throw PreconditionError("expected H-fraction of (gamma-1)^m needs m >= 2: k_1 = m-2 is negative");
            for (std::size_t j = 0; j < terms; ++j) {
                if (j == 0) {
                    h.quotients.push_back({m, RatFunc(1), u_of(beta)});
                } else {
                    PartialQuotient pq = shift2_quotient(m, j - 1, beta);
                    if (j == 1) pq.v = RatFunc(t_pow(m));
                    h.quotients.push_back(std::move(pq));
                }
            }
            break;
        case 1:
            for (std::size_t j = 0; j < terms; ++j)
                h.quotients.push_back({m - 1, j == 0 ? RatFunc(1) : RatFunc(t_pow(m)), u_of(beta)});
            break;
        case 2:
            for (std::size_t j = 0; j < terms; ++j) h.quotients.push_back(shift2_quotient(m, j, beta));
            break;
        default: {
            const PolyQ alpha = alpha_poly(m);
            for (std::size_t j = 0; j < terms; ++j) h.quotients.push_back(shift3_quotient(m, j, alpha));
            break;
        }
    }
    h.check_invariants();
    return h;
}

namespace {

struct Q2Stream {
    unsigned m;
    PolyQ beta;

    RatFunc J(long n) const { return jq(n, m); }

    PolyQ A(std::size_t n) const {
        const auto j = static_cast<long>(n / 2);
        if (n == 0) return qmono(RatFunc(-1), m - 2);
        if (n % 2 == 0) return qmono(neg_t_pow(m) * J(j) / J(j + 1), m - 2);
        const RatFunc j1 = J(j + 1), j2 = J(j + 2);
        const RatFunc tail = (RatFunc(1) - j2 * RatFunc(2)) / j1 - RatFunc(t_pow(m * (j + 1))) * j2 / (j1 * j1);
        return beta * (RatFunc(sign_of(m)) * j2 / j1) + qmono(tail, m);
    }
    PolyQ B(std::size_t n) const {
        const auto j = static_cast<long>(n / 2);
        const RatFunc j1 = J(j + 1);
        if (n % 2 == 0) return beta + neg_q_pow(m) * ((RatFunc(1) / j1 - RatFunc(1)) * RatFunc(2));
        return beta - neg_q_pow(m) * ((RatFunc(t_pow(m * (j + 1))) / j1 + RatFunc(1)) * RatFunc(2));
    }
    PolyQ C(std::size_t n) const {
        const auto j = static_cast<long>(n / 2);
        if (n == 0) return qmono(RatFunc(-t_pow(m)), m + 2);
        if (n % 2 == 1) return qmono(RatFunc(-1), m);
        const RatFunc c = RatFunc(1) / J(j + 1) - RatFunc(t_pow(m * j)) / J(j) - RatFunc(2);
        return -beta.shift_up(2) - neg_q_pow(m + 2) * c;
    }
    unsigned k(std::size_t n) const { return n % 2 == 0 ? m - 2 : 0; }
    RatFunc a(std::size_t n) const {
        const auto j = static_cast<long>(n / 2);
        if (n == 0) return RatFunc(-1);
        if (n % 2 == 0) return neg_t_pow(m) * J(j) / J(j + 1);
        return RatFunc(sign_of(m)) * J(j + 2) / J(j + 1);
    }
    PolyQ D(std::size_t n) const {
        if (n % 2 == 1) return PolyQ(1);
        return beta - neg_q_pow(m) * RatFunc(PolyT(1) + t_pow(m));
    }
};

struct Q3Stream {
    unsigned m;
    PolyQ alpha;
    RatFunc mm;  // m [m]_t

    Q3Stream(unsigned m_, PolyQ alpha_) : m(m_), alpha(std::move(alpha_)), mm(RatFunc(qint(m_, 1) * Rational(m_))) {}

    RatFunc J(long n) const { return jq(n, m); }
    RatFunc R(long n) const { return RatFunc(r_poly(m, n)); }
    RatFunc S(long n) const { return RatFunc(s_poly(m, n)); }
    RatFunc tm(long e) const { return RatFunc(t_pow(static_cast<long>(m) * e)); }

    RatFunc u(long j) const { return RatFunc(sign_of(m + 1)) * R(j) / (J(j + 1) * J(j + 1)); }
    RatFunc v(long j) const { return J(j + 1) * J(j + 2) / R(j); }
    PolyQ w1(long j) const { return A(3 * static_cast<std::size_t>(j) + 1) * u(j).inverse(); }
    PolyQ w2(long j) const {
        const RatFunc j1 = J(j + 1);
        return neg_q_pow(m - 1) * (S(j) / (j1 * j1)) + neg_q_pow(m) * ((RatFunc(1) + tm(j + 1)) / j1);
    }
    // w3(j), defined for j >= 1
    RatFunc w3(long j) const {
        if (j < 1) throw PreconditionError("w3(j) references R(j-1) and needs j >= 1");
        return mm * v(j - 1) - (RatFunc(1) + tm(j + 1)) / J(j + 1);
    }
    // w3(j) R(j-1) in product form, which also covers j = 0
    RatFunc w3_times_r(long j) const {
        return mm * J(j) * J(j + 1) - (RatFunc(1) + tm(j + 1)) * R(j - 1) / J(j + 1);
    }

    PolyQ A(std::size_t n) const {
        const auto j = static_cast<long>(n / 3);
        const RatFunc j1sq = J(j + 1) * J(j + 1);
        switch (n % 3) {
            case 0:
                if (n == 0) return qmono(RatFunc(-1), m - 3);
                return qmono(neg_t_pow(m) * R(j - 1) / j1sq, m - 3);
            case 1: {
                const PolyQ first = alpha * PolyQ({u(j), RatFunc(sign_of(m)) * J(j + 2) / J(j + 1)});
                const RatFunc rj = R(j - 1);
                // R(j-1) scales only the constant and linear terms; the q^2 term
                // carries no R factor (checked against NextABC for m = 3..6)
                const PolyQ inner({RatFunc(sign_of(m + 1)) * u(j) * rj, w3_times_r(j), tm(j)});
                return first - inner.shift_up(m - 1) * (tm(1) / j1sq);
            }
            default: {
                const RatFunc vj = v(j);
                return (C(n + 1) * (-vj * vj)).div_q_pow(2);
            }
        }
    }
    PolyQ B(std::size_t n) const {
        const auto j = static_cast<long>(n / 3);
        switch (n % 3) {
            case 0: return alpha + w2(j);
            case 1: return alpha - w2(j);
            default: return w1(j) * PolyQ({RatFunc(1), v(j)}) * RatFunc(2) - alpha + w2(j);
        }
    }
    PolyQ C(std::size_t n) const {
        const auto j = static_cast<long>(n / 3);
        switch (n % 3) {
            case 0: {
                if (n == 0) return qmono(RatFunc(-tm(1)), m + 3);
                const PolyQ shorthand = -(alpha.shift_up(2) * PolyQ({RatFunc(1), v(j - 1)})) -
                                        qmono(u(j), m + 1) + neg_q_pow(m + 2) * w3(j) -
                                        neg_q_pow(m + 3) * (tm(j) / R(j - 1));
                if (!(shorthand == c3j_expanded(j)))
                    throw MathError("C_{3j} shorthand and expanded forms disagree at j = " + std::to_string(j));
                return shorthand;
            }
            case 1: return qmono(RatFunc(-1), m - 1);
            default: return -(w1(j).shift_up(2));
        }
    }
    // C_{3j} written out with rho in its alternative form and no shorthands
    PolyQ c3j_expanded(long j) const {
        PolyQ alt;
        for (unsigned d = 0; d + 2 <= m; ++d) alt += neg_q_pow(d) * RatFunc(rho_poly_alt(m, d));
        const RatFunc j0 = J(j), j1 = J(j + 1), rm = R(j - 1);
        return -(alt.shift_up(2) * PolyQ({RatFunc(1), j0 * j1 / rm})) - neg_q_pow(m + 1) * (R(j) / (j1 * j1)) +
               neg_q_pow(m + 2) * (mm * j0 * j1 / rm - (RatFunc(1) + tm(j + 1)) / j1) -
               neg_q_pow(m + 3) * (tm(j) / rm);
    }
    unsigned k(std::size_t n) const { return n % 3 == 0 ? m - 3 : 0; }
    RatFunc a(std::size_t n) const {
        const auto j = static_cast<long>(n / 3);
        switch (n % 3) {
            case 0:
                if (n == 0) return RatFunc(-1);
                return neg_t_pow(m) * R(j - 1) / (J(j + 1) * J(j + 1));
            case 1: return u(j);
            default: return v(j) * v(j);
        }
    }
    PolyQ D(std::size_t n) const {
        const auto j = static_cast<long>(n / 3);
        switch (n % 3) {
            case 0: return alpha;
            case 1: return PolyQ({RatFunc(1), v(j)});
            default: return PolyQ({RatFunc(1), -v(j)});
        }
    }
};

template <class Stream>
SixTuple tuple_of(const Stream& s, std::size_t n) {
    SixTuple st;
    st.a_star = s.A(n + 1);
    st.b_star = s.B(n + 1);
    st.c_star = s.C(n + 1);
    st.k = s.k(n);
    st.a = s.a(n);
    st.d = s.D(n);
    return st;
}

void check_stream_m(StreamVariant variant, unsigned m) {
    if (variant == StreamVariant::Q2 && m < 2) throw PreconditionError("Q2 stream needs m >= 2");
    if (variant == StreamVariant::Q3 && m < 3) throw PreconditionError("Q3 stream needs m >= 3");
}

}  // namespace

SixTuple conjectured_six_tuple(StreamVariant variant, unsigned m, std::size_t n) {
    check_stream_m(variant, m);
    if (variant == StreamVariant::Q2) return tuple_of(Q2Stream{m, beta_poly(m)}, n);
    return tuple_of(Q3Stream(m, alpha_poly(m)), n);
}

QuadTriple conjectured_triple(StreamVariant variant, unsigned m, std::size_t n) {
    check_stream_m(variant, m);
    if (variant == StreamVariant::Q2) {
        const Q2Stream s{m, beta_poly(m)};
        return {s.A(n), s.B(n), s.C(n)};
    }
    const Q3Stream s(m, alpha_poly(m));
    return {s.A(n), s.B(n), s.C(n)};
}

QuadTriple odd_case_triple(unsigned m, unsigned m0) {
    if (m < m0) throw PreconditionError("odd_case_triple needs m >= m0");
    const PolyT t = PolyT::t();
    const PolyQ x({RatFunc(-1), RatFunc(PolyT(1) + t)});
    const PolyQ s = qmono(RatFunc(-t), 2);
    const PolyQ lead({RatFunc(1), RatFunc(t - PolyT(1))});         // 1 - q + tq
    const PolyQ sq({RatFunc(1), RatFunc(PolyT(1) - t)});           // 1 + q - tq
    const PolyQ disc = sq * sq - qmono(RatFunc(4), 1);              // (1 + q - tq)^2 - 4q
    const PolyQ big_t = lead * lucas_eval(m, x, s) - disc * fib_eval(m, x, s);
    return quad_normalize({qmono(RatFunc(-2), m - m0), big_t * RatFunc(sign_of(m)),
                           qmono(RatFunc(t_pow(m + 1) * Rational(-2)), m + m0 + 1)});
}

}  // namespace narayana
