#include "narayana/exactnum.hpp"

#include <algorithm>
#include <cstdint>

namespace narayana {

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational ratio(const BigInt& num, const BigInt& den) {
    if (den == 0) throw MathError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// ---------------------------------------------------------------- PolyT

PolyT::PolyT(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

PolyT::PolyT(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

PolyT::PolyT(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

PolyT PolyT::monomial(const Rational& c, std::size_t degree) {
    PolyT p;
    if (c == 0) return p;
    p.coeffs_.assign(degree + 1, Rational(0));
    p.coeffs_[degree] = c;
    return p;
}

void PolyT::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool PolyT::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Rational PolyT::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational PolyT::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational PolyT::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

PolyT PolyT::monic() const {
    if (is_zero()) return *this;
    const Rational lc = leading();
    if (lc == 1) return *this;
    PolyT r = *this;
    for (auto& c : r.coeffs_) c /= lc;
    return r;
}

PolyT PolyT::operator-() const {
    PolyT r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

PolyT& PolyT::operator+=(const PolyT& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

PolyT& PolyT::operator-=(const PolyT& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

PolyT operator*(const PolyT& a, const PolyT& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    Rational tmp;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
            out[i + j] += tmp;
        }
    }
    PolyT r;
    r.coeffs_ = std::move(out);
    r.trim();
    return r;
}

PolyT& PolyT::operator*=(const PolyT& o) { return *this = *this * o; }

PolyT& PolyT::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

PolyT PolyT::pow(unsigned e) const {
    PolyT result(1);
    PolyT base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

std::string PolyT::to_string(const char* var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        const Rational& c = coeffs_[d];
        if (c == 0) continue;
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        std::string term;
        if (d == 0) {
            term = narayana::to_string(mag);
        } else {
            std::string power = var;
            if (d > 1) power += "^" + std::to_string(d);
            term = (mag == 1) ? power : narayana::to_string(mag) + "*" + power;
        }
        if (first) {
            out = neg ? "-" + term : term;
            first = false;
        } else {
            out += neg ? " - " : " + ";
            out += term;
        }
    }
    return out;
}

std::pair<PolyT, PolyT> divmod(const PolyT& a, const PolyT& b) {
    if (b.is_zero()) throw MathError("polynomial division by zero");
    if (a.degree() < b.degree()) return {PolyT(), a};
    std::vector<Rational> rem = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<Rational> quot(rem.size() - db, Rational(0));
    const Rational inv_lc = 1 / b.leading();
    Rational tmp;
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i] == 0) continue;
        const Rational f = rem[i] * inv_lc;
        quot[i - db] = f;
        for (std::size_t j = 0; j <= db; ++j) {
            mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), b.coeffs()[j].get_mpq_t());
            rem[i - db + j] -= tmp;
        }
    }
    rem.resize(db);
    return {PolyT(std::move(quot)), PolyT(std::move(rem))};
}

PolyT exact_div(const PolyT& a, const PolyT& b) {
    if (b.is_constant()) {
        if (b.is_zero()) throw MathError("polynomial division by zero");
        return a * Rational(1 / b.coeff(0));
    }
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw MathError("inexact polynomial division");
    return q;
}

PolyT polyt_gcd_euclid(const PolyT& a, const PolyT& b) {
    if (a.is_zero() && b.is_zero()) throw MathError("gcd of two zero polynomials");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return PolyT(1);
    PolyT x = a.monic();
    PolyT y = b.monic();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        PolyT r = divmod(x, y).second.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

namespace {

using ZPoly = std::vector<BigInt>;
using ModPoly = std::vector<std::uint64_t>;

// Primitive integer polynomial with the same roots as p.
ZPoly primitive_part(const PolyT& p) {
    BigInt den = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    ZPoly z;
    z.reserve(p.coeffs().size());
    BigInt content = 0;
    for (const auto& c : p.coeffs()) {
        z.push_back(c.get_num() * (den / c.get_den()));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.back().get_mpz_t());
    }
    if (z.back() < 0) content = -content;
    for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    return z;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

ModPoly reduce(const ZPoly& z, std::uint64_t p) {
    ModPoly r(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) r[i] = mpz_fdiv_ui(z[i].get_mpz_t(), p);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Monic gcd over GF(p).
ModPoly mod_gcd(ModPoly x, ModPoly y, std::uint64_t p) {
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        const std::uint64_t inv = mod_inv(y.back(), p);
        const std::size_t dy = y.size() - 1;
        while (x.size() >= y.size()) {
            const std::uint64_t f = x.back() * inv % p;
            const std::size_t shift = x.size() - y.size();
            for (std::size_t j = 0; j <= dy; ++j) x[shift + j] = (x[shift + j] + (p - f) * y[j]) % p;
            while (!x.empty() && x.back() == 0) x.pop_back();
        }
        std::swap(x, y);
    }
    const std::uint64_t inv = mod_inv(x.back(), p);
    for (auto& c : x) c = c * inv % p;
    return x;
}

bool divides(const PolyT& d, const PolyT& a) { return divmod(a, d).second.is_zero(); }

// Primes just above 2^31, generated on demand.
std::uint64_t gcd_prime(std::size_t i) {
    static std::vector<std::uint64_t> primes;
    static BigInt last = BigInt(1) << 31;
    while (primes.size() <= i) {
        mpz_nextprime(last.get_mpz_t(), last.get_mpz_t());
        primes.push_back(last.get_ui());
    }
    return primes[i];
}

}  // namespace

PolyT polyt_gcd(const PolyT& a, const PolyT& b) {
    if (a.is_zero() && b.is_zero()) throw MathError("gcd of two zero polynomials");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return PolyT(1);
    const ZPoly za = primitive_part(a);
    const ZPoly zb = primitive_part(b);
    BigInt lc_gcd;
    mpz_gcd(lc_gcd.get_mpz_t(), za.back().get_mpz_t(), zb.back().get_mpz_t());
    const BigInt bad = za.back() * zb.back();

    ZPoly h;               // CRT image in [0, modulus)
    BigInt modulus = 1;
    std::size_t degree = std::min(za.size(), zb.size()) + 1;  // above any gcd size
    PolyT last;
    for (std::size_t pi = 0;; ++pi) {
        const std::uint64_t p = gcd_prime(pi);
        if (mpz_divisible_ui_p(bad.get_mpz_t(), p)) continue;
        ModPoly g = mod_gcd(reduce(za, p), reduce(zb, p), p);
        if (g.size() == 1) return PolyT(1);
        if (g.size() > degree) continue;  // unlucky prime
        if (g.size() < degree) {
            degree = g.size();
            h.assign(degree, BigInt(0));
            modulus = 1;
        }
        const std::uint64_t scale = mpz_fdiv_ui(lc_gcd.get_mpz_t(), p);
        for (auto& c : g) c = c * scale % p;
        const std::uint64_t m_inv = mod_inv(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
        for (std::size_t i = 0; i < degree; ++i) {
            const std::uint64_t hi = mpz_fdiv_ui(h[i].get_mpz_t(), p);
            const std::uint64_t delta = (g[i] + p - hi) % p * m_inv % p;
            h[i] += modulus * delta;
        }
        modulus *= p;

        const BigInt half = modulus / 2;
        std::vector<Rational> sym;
        sym.reserve(degree);
        for (const auto& c : h) sym.emplace_back(c > half ? BigInt(c - modulus) : c);
        PolyT cand = PolyT(std::move(sym)).monic();
        if (cand == last && divides(cand, a) && divides(cand, b)) return cand;
        last = std::move(cand);
    }
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(const PolyT& num, const PolyT& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw MathError("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = PolyT(1);
        return;
    }
    if (!den_.is_constant()) {
        PolyT g = polyt_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    const Rational lc = den_.leading();
    if (lc != 1) {
        const Rational inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Canonical{}); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw MathError("division by zero in Q(t)");
    RatFunc r(den_, num_, Canonical{});
    const Rational lc = r.den_.leading();
    if (lc != 1) {
        const Rational inv = 1 / lc;
        r.num_ *= inv;
        r.den_ *= inv;
    }
    return r;
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    // Powers of coprime polynomials stay coprime, and a monic power is monic.
    return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Canonical{});
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_, PolyT(1), RatFunc::Canonical{});
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    // gcd(num, den) divides gcd(a.den, b.den)
    const PolyT g = polyt_gcd(a.den_, b.den_);
    const PolyT ad = exact_div(a.den_, g);
    const PolyT bd = exact_div(b.den_, g);
    PolyT num = a.num_ * bd + b.num_ * ad;
    if (num.is_zero()) return {};
    PolyT den = a.den_ * bd;
    if (!g.is_one()) {
        const PolyT h = polyt_gcd(num, g);
        if (!h.is_one()) {
            num = exact_div(num, h);
            den = exact_div(den, h);
        }
    }
    return RatFunc(std::move(num), std::move(den), RatFunc::Canonical{});
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_, PolyT(1), RatFunc::Canonical{});
    // cross-cancel: gcd(a.num, b.den) and gcd(b.num, a.den)
    PolyT an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    if (!bd.is_one()) {
        const PolyT g = polyt_gcd(an, bd);
        if (!g.is_one()) {
            an = exact_div(an, g);
            bd = exact_div(bd, g);
        }
    }
    if (!ad.is_one()) {
        const PolyT g = polyt_gcd(bn, ad);
        if (!g.is_one()) {
            bn = exact_div(bn, g);
            ad = exact_div(ad, g);
        }
    }
    return RatFunc(an * bn, ad * bd, RatFunc::Canonical{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw MathError("division by zero in Q(t)");
    if (a.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) {
        // Exact polynomial quotient is the common case (Bareiss elimination).
        if (b.num_.is_constant()) return RatFunc(a.num_ * Rational(1 / b.num_.coeff(0)), PolyT(1), RatFunc::Canonical{});
        auto [q, r] = divmod(a.num_, b.num_);
        if (r.is_zero()) return RatFunc(std::move(q), PolyT(1), RatFunc::Canonical{});
        return RatFunc(a.num_, b.num_);
    }
    return a * b.inverse();
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    throw PreconditionError("unknown arithmetic operation");
}

}  // namespace narayana
