#include "narayana/sequences.hpp"

#include <map>
#include <mutex>
#include <string>

namespace narayana {

void FamilySpec::validate() const {
    if (shift > 3) throw PreconditionError("family shift must be in 0..3, got " + std::to_string(shift));
    if (m < 1) throw PreconditionError("family requires m >= 1");
    if (m < shift)
        throw PreconditionError("family (gamma-1)^" + std::to_string(m) + "/q^" + std::to_string(shift) +
                                " has negative valuation");
}

PolyT narayana_poly(unsigned n) {
    if (n == 0) return PolyT(1);
    std::vector<Rational> c(n);
    for (unsigned k = 0; k < n; ++k) {
        c[k] = ratio(binomial(n, k) * binomial(n - 1, k), k + 1);
    }
    return PolyT(std::move(c));
}

namespace {

// Polynomial coefficients gamma_0 .. gamma_{count-1} by the quadratic recursion:
// gamma_n = (1 - t) gamma_{n-1} + t sum_{i+j=n-1} gamma_i gamma_j.
std::vector<PolyT> narayana_coeffs(std::size_t count) {
    static std::mutex mu;
    static std::vector<PolyT> cache{PolyT(1)};
    std::lock_guard lock(mu);
    const PolyT one_minus_t{1, -1};
    const PolyT t = PolyT::t();
    while (cache.size() < count) {
        const std::size_t n = cache.size();
        PolyT conv;
        for (std::size_t i = 0; i < n; ++i) conv += cache[i] * cache[n - 1 - i];
        cache.push_back(one_minus_t * cache[n - 1] + t * conv);
    }
    return {cache.begin(), cache.begin() + static_cast<long>(count)};
}

std::vector<PolyT> to_polys(const SeriesQ& s, std::size_t count) {
    std::vector<PolyT> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(s.coeff(i).num());
    return out;
}

// G(t,q) = (gamma - 1)/q to the given order.
SeriesQ shifted_gamma(std::size_t order) {
    const auto c = narayana_coeffs(order + 1);
    return SeriesQ(std::vector<RatFunc>(c.begin() + 1, c.end()), order);
}

}  // namespace

SeriesQ narayana_series(std::size_t order) {
    if (order == 0) throw PreconditionError("narayana_series needs order >= 1");
    const auto c = narayana_coeffs(order);
    return SeriesQ(std::vector<RatFunc>(c.begin(), c.end()), order);
}

std::vector<PolyT> conv_power_seq(unsigned tau, std::size_t count) {
    if (tau < 1) throw PreconditionError("convolution power tau must be >= 1");
    if (count == 0) return {};
    const unsigned m = tau / 2;
    SeriesQ s = series_pow(shifted_gamma(count), m);
    if (tau % 2 == 1) s = s * narayana_series(count);
    return to_polys(s, count);
}

PolyT family_entry(const FamilySpec& spec, long i) {
    spec.validate();
    const long idx = i + static_cast<long>(spec.shift) - static_cast<long>(spec.m);
    if (idx < 0) return {};
    return conv_power_seq(2 * spec.m, static_cast<std::size_t>(idx) + 1).back();
}

std::vector<PolyT> family_entries(const FamilySpec& spec, std::size_t count) {
    spec.validate();
    const long lead = static_cast<long>(spec.m) - static_cast<long>(spec.shift);
    std::vector<PolyT> out(count);
    const long needed = static_cast<long>(count) - lead;
    if (needed <= 0) return out;
    const auto conv = conv_power_seq(2 * spec.m, static_cast<std::size_t>(needed));
    for (std::size_t i = 0; i < count; ++i) {
        const long idx = static_cast<long>(i) - lead;
        if (idx >= 0) out[i] = conv[static_cast<std::size_t>(idx)];
    }
    return out;
}

SeriesQ family_series(const FamilySpec& spec, std::size_t order) {
    spec.validate();
    // (gamma-1)^m / q^shift = q^(m-shift) G^m
    const std::size_t lead = spec.m - spec.shift;
    if (order <= lead) return SeriesQ::zero(order);
    const SeriesQ g = series_pow(shifted_gamma(order - lead), spec.m);
    return series_shift(g, static_cast<long>(lead));
}

BigInt fibonacci_number(unsigned n) {
    BigInt r;
    mpz_fib_ui(r.get_mpz_t(), n);
    return r;
}

BigInt catalan_number(unsigned n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace narayana
