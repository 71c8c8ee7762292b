#pragma once

/**
 * @file verify.hpp
 * @brief Named cross-check suites. Each check compares a closed form or a
 * structural identity against an independently computed value and yields
 * one CheckRecord.
 */

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "narayana/qseries.hpp"
#include "narayana/quadratic.hpp"

namespace narayana {

enum class CheckStatus { Pass, Fail, Error };

std::string to_string(CheckStatus s);

struct CheckRecord {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;
    CheckStatus status = CheckStatus::Error;
    std::string expected;
    std::string actual;
    long long elapsed_us = 0;

    /// `k=v,k=v` in insertion order.
    std::string params_text() const;
    /// suite, params, status, expected, actual, elapsed_us separated by tabs.
    std::string to_tsv() const;
};

/// Unset fields fall back to the suite's defaults.
struct SuiteBounds {
    std::optional<long> m_min;
    std::optional<long> m_max;
    std::optional<long> n_max;
    std::optional<long> j_max;
    std::optional<long> order;
    std::optional<long> shift;
};

/// Suite names accepted by run_suite, in a fixed order.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Throws PreconditionError for an unknown suite name.
std::vector<CheckRecord> run_suite(const std::string& name, const SuiteBounds& bounds = {});

/// Small random data for property checks.
class RandomSource {
public:
    explicit RandomSource(std::uint32_t seed) : rng_(seed) {}

    long integer(long lo, long hi);
    /// c0 + c1 t with small integer coefficients, possibly zero.
    RatFunc coefficient();
    RatFunc nonzero_coefficient();
    PolyQ poly(std::size_t max_degree);
    /// Random series with the given order and valuation below max_valuation, nonzero.
    SeriesQ series(std::size_t order, std::size_t max_valuation);
    /// Random triple with A != 0, B(0) = 1, C(0) = 0 and C != 0.
    QuadTriple triple();

private:
    std::mt19937 rng_;
};

}  // namespace narayana
