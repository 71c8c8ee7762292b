#pragma once

/**
 * @file qseries.hpp
 * @brief Polynomials and truncated power series in q over Q(t).
 *
 * A SeriesQ carries exactly `order` coefficients (degrees 0..order-1) and
 * claims nothing beyond them. Operations propagate the truncation order
 * strictly; anything that would need unknown coefficients throws.
 */

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "narayana/exactnum.hpp"

namespace narayana {

/// Polynomial in q with Q(t) coefficients.
class PolyQ {
public:
    PolyQ() = default;
    PolyQ(const RatFunc& c);  // NOLINT(google-explicit-constructor)
    PolyQ(long c) : PolyQ(RatFunc(c)) {}  // NOLINT(google-explicit-constructor)
    explicit PolyQ(std::vector<RatFunc> coeffs);
    PolyQ(std::initializer_list<RatFunc> coeffs);

    static PolyQ monomial(const RatFunc& c, std::size_t degree);
    static PolyQ q() { return monomial(RatFunc(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    /// Lowest degree with a nonzero coefficient; -1 for the zero polynomial.
    long valuation() const;
    const std::vector<RatFunc>& coeffs() const { return coeffs_; }
    RatFunc coeff(std::size_t i) const;

    PolyQ operator-() const;
    PolyQ& operator+=(const PolyQ& o);
    PolyQ& operator-=(const PolyQ& o);
    friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
    friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(const PolyQ& a, const RatFunc& c);
    friend PolyQ operator*(const RatFunc& c, const PolyQ& a) { return a * c; }
    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.coeffs_ == b.coeffs_; }

    PolyQ pow(unsigned e) const;
    /// Multiply by q^e.
    PolyQ shift_up(std::size_t e) const;
    /// Divide by q^e; throws MathError unless q^e divides exactly.
    PolyQ div_q_pow(std::size_t e) const;
    /// Keep degrees < n.
    PolyQ truncate(std::size_t n) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<RatFunc> coeffs_;
};

/// (-q)^e as a polynomial.
PolyQ neg_q_pow(std::size_t e);

/// Truncated power series: coefficients for degrees 0..order-1.
class SeriesQ {
public:
    SeriesQ(std::vector<RatFunc> coeffs, std::size_t order);
    SeriesQ(const PolyQ& p, std::size_t order);

    static SeriesQ one(std::size_t order) { return SeriesQ(PolyQ(1), order); }
    static SeriesQ zero(std::size_t order) { return SeriesQ(PolyQ(), order); }

    std::size_t order() const { return coeffs_.size(); }
    const std::vector<RatFunc>& coeffs() const { return coeffs_; }
    const RatFunc& coeff(std::size_t i) const;
    /// Index of the first nonzero coefficient, or order() when all are zero.
    std::size_t valuation() const;
    bool is_zero() const { return valuation() == order(); }

    SeriesQ truncate(std::size_t order) const;
    /// Coefficients as a polynomial (degrees < order()).
    PolyQ to_poly() const;

    SeriesQ operator-() const;
    friend SeriesQ operator+(const SeriesQ& a, const SeriesQ& b);
    friend SeriesQ operator-(const SeriesQ& a, const SeriesQ& b);
    /// Valuation-aware product: order min(val(a)+ord(b), val(b)+ord(a)).
    friend SeriesQ operator*(const SeriesQ& a, const SeriesQ& b);
    friend SeriesQ operator*(const SeriesQ& a, const RatFunc& c);
    friend bool operator==(const SeriesQ& a, const SeriesQ& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const;

private:
    std::vector<RatFunc> coeffs_;
};

enum class SeriesOp { Add, Sub, Mul };

SeriesQ series_arith(const SeriesQ& a, const SeriesQ& b, SeriesOp op);
/// Multiplicative inverse; throws MathError("not a unit") on zero constant term.
SeriesQ series_invert(const SeriesQ& a);
/// Multiply by q^e; for e < 0 the low -e coefficients must vanish.
SeriesQ series_shift(const SeriesQ& a, long e);
SeriesQ series_pow(const SeriesQ& a, unsigned m);

}  // namespace narayana
