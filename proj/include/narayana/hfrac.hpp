#pragma once

/**
 * @file hfrac.hpp
 * @brief Super delta-fractions and Hankel continued fractions (delta = 2).
 *
 * A fraction is stored level by level. Level j holds (k_j, v_j, u_{j+1}):
 *
 *   f_j = v_j q^{k_j} / (1 + u_{j+1}(q) q - q^{k_j + delta} f_{j+1})
 *
 * so the top level f_0 is the expanded series and deg(u_{j+1}) <= k_j + delta - 2.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "narayana/exactnum.hpp"
#include "narayana/qseries.hpp"

namespace narayana {

struct PartialQuotient {
    unsigned k = 0;
    RatFunc v;
    PolyQ u;

    friend bool operator==(const PartialQuotient&, const PartialQuotient&) = default;
    /// `k=<int> v=<ratfunc> u=<polyq>`
    std::string to_string() const;
};

enum class HFracStatus { Complete, PrecisionExhausted, MaxTermsReached };

std::string to_string(HFracStatus s);

struct HFraction {
    std::vector<PartialQuotient> quotients;
    unsigned delta = 2;
    HFracStatus status = HFracStatus::MaxTermsReached;
    /// Evaluating the quotients with a zero tail reproduces the source series
    /// through degree consumed_order - 1. Zero when unknown.
    std::size_t consumed_order = 0;

    /// Throws MathError if some v_j is zero or some u exceeds its degree bound.
    void check_invariants() const;
};

HFraction hfrac_expand(const SeriesQ& f, unsigned delta, std::size_t max_terms);
SeriesQ hfrac_eval(const HFraction& h, std::size_t order);

struct HankelValue {
    std::size_t index;
    RatFunc value;
};

struct HankelReconstruction {
    /// Nonvanishing determinants H_{s_j}, ascending in index.
    std::vector<HankelValue> values;
    /// Every index <= determined_through not listed in `values` is a zero determinant.
    std::size_t determined_through = 0;

    /// H_index when determined; throws PreconditionError beyond determined_through.
    RatFunc at(std::size_t index) const;
};

/// H_{s_j} = (-1)^{eps_j} prod_{i<j} v_i^{s_j - s_i}, s_j = k_0 + ... + k_{j-1} + j,
/// eps_j = sum_{i<j} k_i (k_i + 1) / 2; requires delta = 2.
HankelReconstruction hankel_from_hfrac(const HFraction& h, std::size_t max_index);

}  // namespace narayana
