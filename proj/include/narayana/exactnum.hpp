#pragma once

/**
 * @file exactnum.hpp
 * @brief Exact coefficient arithmetic: Q, Q[t] and the field Q(t).
 *
 * Rationals are GMP's mpq_class, always kept canonical (reduced, positive
 * denominator). PolyT stores dense ascending coefficients with no trailing
 * zeros. RatFunc keeps num/den coprime with a monic denominator, so two
 * equal rational functions are structurally equal.
 */

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "narayana/error.hpp"

namespace narayana {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt binomial(long n, long k);  // 0 outside 0 <= k <= n
/// num/den in canonical form; throws MathError on den == 0.
Rational ratio(const BigInt& num, const BigInt& den);
std::string to_string(const Rational& r);

/// Dense univariate polynomial in t over Q.
class PolyT {
public:
    PolyT() = default;
    PolyT(const Rational& c);  // NOLINT(google-explicit-constructor)
    PolyT(long c) : PolyT(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    explicit PolyT(std::vector<Rational> coeffs);
    PolyT(std::initializer_list<long> coeffs);

    static PolyT monomial(const Rational& c, std::size_t degree);
    static PolyT t() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const;
    /// Degree, with the zero polynomial at -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t i) const;
    Rational leading() const;
    Rational eval(const Rational& x) const;

    PolyT monic() const;
    PolyT operator-() const;
    PolyT& operator+=(const PolyT& o);
    PolyT& operator-=(const PolyT& o);
    PolyT& operator*=(const PolyT& o);
    PolyT& operator*=(const Rational& c);

    friend PolyT operator+(PolyT a, const PolyT& b) { return a += b; }
    friend PolyT operator-(PolyT a, const PolyT& b) { return a -= b; }
    friend PolyT operator*(const PolyT& a, const PolyT& b);
    friend PolyT operator*(PolyT a, const Rational& c) { return a *= c; }
    friend bool operator==(const PolyT& a, const PolyT& b) { return a.coeffs_ == b.coeffs_; }

    PolyT pow(unsigned e) const;

    std::string to_string(const char* var = "t") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Quotient and remainder of polynomial division; throws MathError on b == 0.
std::pair<PolyT, PolyT> divmod(const PolyT& a, const PolyT& b);
/// Exact quotient a / b; throws MathError when b does not divide a.
PolyT exact_div(const PolyT& a, const PolyT& b);
/// Monic gcd; throws MathError when both inputs are zero. Computed modulo
/// word-size primes and lifted by CRT.
PolyT polyt_gcd(const PolyT& a, const PolyT& b);
/// Same result by the Euclidean algorithm over Q. Slow on large inputs.
PolyT polyt_gcd_euclid(const PolyT& a, const PolyT& b);

/// Element of Q(t) in canonical form.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(const PolyT& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const PolyT& num, const PolyT& den);

    const PolyT& num() const { return num_; }
    const PolyT& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const;
    RatFunc inverse() const;
    RatFunc pow(long e) const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// `<num>` when the denominator is 1, otherwise `(<num>) / (<den>)`.
    std::string to_string() const;

private:
    struct Canonical {};
    RatFunc(PolyT num, PolyT den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    PolyT num_;
    PolyT den_;
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Dispatching form of the four field operations.
RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, ArithOp op);

}  // namespace narayana
