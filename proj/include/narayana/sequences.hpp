#pragma once

#include <cstddef>
#include <vector>

#include "narayana/exactnum.hpp"
#include "narayana/qseries.hpp"

namespace narayana {

/// One of the shifted families (gamma - 1)^m / q^shift.
struct FamilySpec {
    unsigned m = 1;
    unsigned shift = 0;

    /// Throws PreconditionError unless shift <= 3 and m >= shift.
    void validate() const;
    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// gamma_n(t) = sum_k C(n,k) C(n-1,k) t^k / (k+1), with gamma_0 = 1.
PolyT narayana_poly(unsigned n);

/// gamma(t, q) to the given order, from the quadratic
/// -1 + (1 - q + tq) gamma - tq gamma^2 = 0.
SeriesQ narayana_series(std::size_t order);

/// gamma^(tau)_0 .. gamma^(tau)_{count-1}: G^m for tau = 2m, gamma G^m for tau = 2m+1.
std::vector<PolyT> conv_power_seq(unsigned tau, std::size_t count);

/// gamma^(2m)_{i+shift-m}, zero for negative subscripts.
PolyT family_entry(const FamilySpec& spec, long i);

/// family_entry(spec, 0) .. family_entry(spec, count-1) in one pass.
std::vector<PolyT> family_entries(const FamilySpec& spec, std::size_t count);

/// (gamma - 1)^m / q^shift to the given order.
SeriesQ family_series(const FamilySpec& spec, std::size_t order);

BigInt fibonacci_number(unsigned n);  // F_0 = 0, F_1 = 1
BigInt catalan_number(unsigned n);

}  // namespace narayana
