#include "narayana/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "narayana/closedforms.hpp"
#include "narayana/hankel.hpp"
#include "narayana/hfrac.hpp"
#include "narayana/sequences.hpp"

namespace narayana {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Error: return "error";
    }
    return "?";
}

std::string CheckRecord::params_text() const {
    std::string out;
    for (const auto& [k, v] : params) {
        if (!out.empty()) out += ',';
        out += k + "=" + v;
    }
    return out;
}

std::string CheckRecord::to_tsv() const {
    return suite + "\t" + params_text() + "\t" + to_string(status) + "\t" + expected + "\t" + actual + "\t" +
           std::to_string(elapsed_us);
}

long RandomSource::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

RatFunc RandomSource::coefficient() {
    const long c0 = integer(-2, 2);
    const long c1 = integer(-2, 2);
    return RatFunc(PolyT{c0, c1});
}

RatFunc RandomSource::nonzero_coefficient() {
    for (;;) {
        RatFunc c = coefficient();
        if (!c.is_zero()) return c;
    }
}

PolyQ RandomSource::poly(std::size_t max_degree) {
    std::vector<RatFunc> c;
    for (std::size_t i = 0; i <= max_degree; ++i) c.push_back(coefficient());
    return PolyQ(std::move(c));
}

SeriesQ RandomSource::series(std::size_t order, std::size_t max_valuation) {
    const auto v = static_cast<std::size_t>(integer(0, static_cast<long>(std::min(max_valuation, order) - 1)));
    std::vector<RatFunc> c(order);
    c[v] = nonzero_coefficient();
    for (std::size_t i = v + 1; i < order; ++i) c[i] = coefficient();
    return SeriesQ(std::move(c), order);
}

QuadTriple RandomSource::triple() {
    PolyQ a;
    while (a.is_zero()) a = poly(2);
    PolyQ c;
    while (c.is_zero()) c = poly(1);
    return {a, PolyQ(1) + poly(1).shift_up(1), c.shift_up(1)};
}

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;
using Records = std::vector<CheckRecord>;
// Fills expected and actual; may append params.
using CheckFn = std::function<void(std::string& expected, std::string& actual, Params& params)>;

void run_check(Records& out, const std::string& suite, Params params, const CheckFn& fn) {
    CheckRecord rec;
    rec.suite = suite;
    const auto start = std::chrono::steady_clock::now();
    try {
        fn(rec.expected, rec.actual, params);
        rec.status = rec.expected == rec.actual ? CheckStatus::Pass : CheckStatus::Fail;
    } catch (const std::exception& e) {
        rec.status = CheckStatus::Error;
        rec.actual = e.what();
    }
    rec.elapsed_us =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
    rec.params = std::move(params);
    out.push_back(std::move(rec));
}

std::string num(long v) { return std::to_string(v); }

std::vector<unsigned> shifts_of(const SuiteBounds& b) {
    if (b.shift) {
        if (*b.shift < 0 || *b.shift > 3) throw PreconditionError("shift must be in 0..3");
        return {static_cast<unsigned>(*b.shift)};
    }
    return {0, 1, 2, 3};
}

// m range for one shift: default low end is the family's requirement, clamped so
// that an explicit low m_max still produces (error) records.
std::pair<long, long> m_range(const SuiteBounds& b, long requirement, long default_hi) {
    const long hi = b.m_max.value_or(default_hi);
    const long lo = b.m_min.value_or(std::min(requirement, hi));
    return {lo, hi};
}

std::vector<RatFunc> as_ratfuncs(const std::vector<PolyT>& p) { return {p.begin(), p.end()}; }

Records suite_main_dets(const SuiteBounds& b) {
    Records out;
    const long n_max = b.n_max.value_or(12);
    for (unsigned shift : shifts_of(b)) {
        const auto [lo, hi] = m_range(b, std::max(1u, shift), 4);
        for (long m = lo; m <= hi; ++m) {
            const FamilySpec spec{static_cast<unsigned>(std::max(0L, m)), shift};
            std::vector<RatFunc> seq;
            for (long n = 0; n <= n_max; ++n) {
                run_check(out, "main-dets", {{"shift", num(shift)}, {"m", num(m)}, {"N", num(n)}},
                          [&](std::string& e, std::string& a, Params& p) {
                              if (m < 1) throw PreconditionError("m must be >= 1");
                              const DetCase dc = main_det(spec, static_cast<std::size_t>(n));
                              p.emplace_back("case", dc.case_label);
                              if (dc.ambiguous) p.emplace_back("ambiguous", "1");
                              e = dc.value.to_string();
                              if (seq.empty()) seq = as_ratfuncs(family_entries(spec, 2 * n_max + 1));
                              a = det_exact(HankelMatrix(static_cast<std::size_t>(n), seq)).to_string();
                          });
            }
        }
    }
    return out;
}

Records suite_cigler(const SuiteBounds& b) {
    Records out;
    for (unsigned variant : {4u, 6u, 3u}) {
        const long n_max = b.n_max.value_or(variant == 3 ? 10 : 12);
        const auto seq = as_ratfuncs(conv_power_seq(variant, static_cast<std::size_t>(2 * n_max + 1)));
        for (long n = 0; n <= n_max; ++n) {
            run_check(out, "cigler", {{"tau", num(variant)}, {"N", num(n)}},
                      [&](std::string& e, std::string& a, Params&) {
                          e = cigler_det(variant, static_cast<std::size_t>(n)).to_string();
                          a = det_exact(HankelMatrix(static_cast<std::size_t>(n), seq)).to_string();
                      });
        }
    }
    return out;
}

Records suite_sumcc(const SuiteBounds& b) {
    Records out;
    const long n_max = b.n_max.value_or(8);
    for (long n = 1; n <= n_max; ++n) {
        run_check(out, "sumcc", {{"n", num(n)}}, [&](std::string& e, std::string& a, Params&) {
            e = fibonacci_number(static_cast<unsigned>(2 * n + 1)).get_str();
            std::vector<RatFunc> seq;
            for (long k = 0; k + 1 < 2 * n; ++k)
                seq.emplace_back(Rational(catalan_number(static_cast<unsigned>(k)) +
                                          catalan_number(static_cast<unsigned>(k + 1))));
            a = det_exact(HankelMatrix(static_cast<std::size_t>(n), seq)).to_string();
        });
    }
    return out;
}

long lemma_requirement(unsigned shift) {
    switch (shift) {
        case 0: return 2;
        case 1: return 1;
        case 2: return 2;
        default: return 3;
    }
}

Records suite_hfrac_lemmas(const SuiteBounds& b) {
    Records out;
    const long s_max = b.n_max.value_or(12);
    const long order = b.order.value_or(2 * 12 + 8);
    for (unsigned shift : shifts_of(b)) {
        const auto [lo, hi] = m_range(b, lemma_requirement(shift), shift == 3 ? 5 : 4);
        for (long m = lo; m <= hi; ++m) {
            const FamilySpec spec{static_cast<unsigned>(std::max(0L, m)), shift};
            HFraction expected;
            HFraction actual;
            try {
                expected = expected_hfrac(spec, static_cast<std::size_t>(s_max + 1));
                actual = hfrac_expand(family_series(spec, static_cast<std::size_t>(order)), 2,
                                      static_cast<std::size_t>(s_max + 2));
            } catch (const std::exception&) {
                // rethrown inside run_check so the failure becomes an error record
                run_check(out, "hfrac-lemmas", {{"shift", num(shift)}, {"m", num(m)}},
                          [&](std::string&, std::string&, Params&) { throw; });
                continue;
            }
            long s = 0;
            for (std::size_t j = 0; j < expected.quotients.size() && s <= s_max; ++j) {
                run_check(out, "hfrac-lemmas",
                          {{"shift", num(shift)}, {"m", num(m)}, {"j", num(static_cast<long>(j))}, {"s", num(s)}},
                          [&](std::string& e, std::string& a, Params&) {
                              e = expected.quotients[j].to_string();
                              a = j < actual.quotients.size() ? actual.quotients[j].to_string()
                                                              : "missing (" + to_string(actual.status) + ")";
                          });
                s += expected.quotients[j].k + 1;
            }
        }
    }
    return out;
}

Records suite_nextabc(const SuiteBounds& b, StreamVariant variant) {
    Records out;
    const bool q2 = variant == StreamVariant::Q2;
    const std::string suite = q2 ? "nextabc-q2" : "nextabc-q3";
    const unsigned m0 = q2 ? 2 : 3;
    const long j_max = b.j_max.value_or(3);
    const long n_max = b.n_max.value_or(q2 ? 2 * j_max + 1 : 3 * j_max + 2);
    const auto [lo, hi] = m_range(b, m0, 5);
    for (long m = lo; m <= hi; ++m) {
        const auto um = static_cast<unsigned>(std::max(0L, m));
        std::vector<SixTuple> tuples;
        std::string iterate_error;
        try {
            tuples = iterate_next_abc(family_quadratic(um, m0), static_cast<std::size_t>(n_max + 1));
        } catch (const std::exception& ex) {
            iterate_error = ex.what();
        }
        run_check(out, suite, {{"m", num(m)}, {"n", "init"}}, [&](std::string& e, std::string& a, Params&) {
            e = conjectured_triple(variant, um, 0).to_string();
            a = family_quadratic(um, m0).to_string();
        });
        for (long n = 0; n <= n_max; ++n) {
            run_check(out, suite, {{"m", num(m)}, {"n", num(n)}}, [&](std::string& e, std::string& a, Params&) {
                e = conjectured_six_tuple(variant, um, static_cast<std::size_t>(n)).to_string();
                if (static_cast<std::size_t>(n) < tuples.size())
                    a = tuples[static_cast<std::size_t>(n)].to_string();
                else
                    a = iterate_error.empty() ? "iteration terminated" : iterate_error;
            });
        }
    }
    return out;
}

Records suite_beta_lucas(const SuiteBounds& b) {
    Records out;
    const long lo = b.m_min.value_or(1);
    const long hi = b.m_max.value_or(10);
    const PolyT t = PolyT::t();
    const PolyQ x({RatFunc(1), RatFunc(PolyT{-1, -1})});
    const PolyQ s = PolyQ::monomial(RatFunc(-t), 2);
    for (long m = lo; m <= hi; ++m) {
        run_check(out, "beta-lucas", {{"m", num(m)}}, [&](std::string& e, std::string& a, Params&) {
            if (m < 1) throw PreconditionError("beta needs m >= 1");
            e = lucas_eval(static_cast<unsigned>(m), x, s).to_string();
            a = beta_poly(static_cast<unsigned>(m)).to_string();
        });
    }
    return out;
}

Records suite_fib_lucas(const SuiteBounds& b) {
    Records out;
    const long n_max = b.n_max.value_or(12);
    for (auto which : {FibLucas::Fib, FibLucas::Lucas}) {
        const std::string name = which == FibLucas::Fib ? "fib" : "lucas";
        for (long n = which == FibLucas::Fib ? 1 : 0; n <= n_max; ++n) {
            run_check(out, "fib-lucas-closed", {{"family", name}, {"n", num(n)}},
                      [&](std::string& e, std::string& a, Params&) {
                          e = "holds";
                          a = fib_lucas_closed_check(static_cast<unsigned>(n), which) ? "holds" : "differs";
                      });
        }
    }
    return out;
}

Records suite_odd_case(const SuiteBounds& b) {
    Records out;
    const long lo = b.m_min.value_or(1);
    const long hi = b.m_max.value_or(4);
    const long order = b.order.value_or(20);
    for (long m = lo; m <= hi; ++m) {
        for (long m0 = 0; m0 <= std::min(m, 3L); ++m0) {
            run_check(out, "odd-case", {{"m", num(m)}, {"m0", num(m0)}}, [&](std::string& e, std::string& a, Params&) {
                const auto o = static_cast<std::size_t>(order + m0);
                const SeriesQ gamma = narayana_series(o);
                const SeriesQ g1 = gamma - SeriesQ::one(o);
                const SeriesQ f = series_shift((gamma * series_pow(g1, static_cast<unsigned>(m))).truncate(o), -m0);
                const SeriesQ r = quad_residual(odd_case_triple(static_cast<unsigned>(m), static_cast<unsigned>(m0)),
                                                f.truncate(static_cast<std::size_t>(order)));
                e = "O(q^" + num(order) + ")";
                a = r.is_zero() ? e : r.to_string();
            });
        }
    }
    return out;
}

void roundtrip_check(Records& out, Params params, const SeriesQ& f) {
    run_check(out, "roundtrip", std::move(params), [&](std::string& e, std::string& a, Params& p) {
        const HFraction h = hfrac_expand(f, 2, 1000);
        p.emplace_back("quotients", num(static_cast<long>(h.quotients.size())));
        p.emplace_back("status", to_string(h.status));
        p.emplace_back("consumed", num(static_cast<long>(h.consumed_order)));
        if (h.consumed_order == 0) {
            e = a = "empty prefix";
            return;
        }
        e = f.truncate(h.consumed_order).to_string();
        a = hfrac_eval(h, h.consumed_order).to_string();
    });
}

Records suite_roundtrip(const SuiteBounds& b) {
    Records out;
    const long order = b.order.value_or(32);
    for (unsigned shift : shifts_of(b)) {
        const auto [lo, hi] = m_range(b, std::max(1u, shift), 4);
        for (long m = lo; m <= hi; ++m) {
            Params params{{"shift", num(shift)}, {"m", num(m)}};
            try {
                const SeriesQ f = family_series({static_cast<unsigned>(std::max(0L, m)), shift},
                                                static_cast<std::size_t>(order));
                roundtrip_check(out, std::move(params), f);
            } catch (const std::exception&) {
                run_check(out, "roundtrip", std::move(params), [&](std::string&, std::string&, Params&) { throw; });
            }
        }
    }
    const long count = b.n_max.value_or(30);
    RandomSource rs(20240611);
    for (long i = 0; i < count; ++i) {
        roundtrip_check(out, {{"random", num(i)}}, rs.series(12, 3));
    }
    return out;
}

Records suite_zero_pattern(const SuiteBounds& b) {
    Records out;
    const long n_max = b.n_max.value_or(10);
    const long order = b.order.value_or(32);
    for (unsigned shift : shifts_of(b)) {
        const auto [lo, hi] = m_range(b, std::max(1u, shift), 4);
        for (long m = lo; m <= hi; ++m) {
            const FamilySpec spec{static_cast<unsigned>(std::max(0L, m)), shift};
            HankelReconstruction rec;
            std::vector<RatFunc> seq;
            std::string setup_error;
            try {
                spec.validate();
                rec = hankel_from_hfrac(hfrac_expand(family_series(spec, static_cast<std::size_t>(order)), 2, 1000),
                                        static_cast<std::size_t>(n_max));
                seq = as_ratfuncs(family_entries(spec, static_cast<std::size_t>(2 * n_max + 1)));
            } catch (const std::exception& ex) {
                setup_error = ex.what();
            }
            for (long n = 0; n <= n_max; ++n) {
                run_check(out, "zero-pattern", {{"shift", num(shift)}, {"m", num(m)}, {"N", num(n)}},
                          [&](std::string& e, std::string& a, Params& p) {
                              if (!setup_error.empty()) throw MathError(setup_error);
                              const auto idx = static_cast<std::size_t>(n);
                              const bool listed = std::any_of(rec.values.begin(), rec.values.end(),
                                                              [&](const HankelValue& hv) { return hv.index == idx; });
                              p.emplace_back("kind", listed ? "s_j" : "zero");
                              e = rec.at(idx).to_string();
                              a = det_exact(HankelMatrix(idx, seq)).to_string();
                          });
            }
        }
    }
    return out;
}

Records suite_rs_relations(const SuiteBounds& b) {
    Records out;
    const long lo = b.m_min.value_or(1);
    const long hi = b.m_max.value_or(6);
    const long j_max = b.j_max.value_or(6);
    for (long m = lo; m <= hi; ++m) {
        const auto um = static_cast<unsigned>(std::max(1L, m));
        const RatFunc mm(qint(um, 1) * Rational(um));
        const RatFunc tm(PolyT::monomial(1, um));
        auto R = [&](long n) { return RatFunc(r_poly(um, n)); };
        auto S = [&](long n) { return RatFunc(s_poly(um, n)); };
        auto J = [&](long n) { return RatFunc(qint(n, um)); };
        for (long j = 0; j <= j_max; ++j) {
            const std::vector<std::pair<std::string, std::function<std::pair<RatFunc, RatFunc>()>>> ids = {
                {"2R-S", [&] { return std::pair{mm, (R(j) * RatFunc(2) - S(j)) / (J(j + 1) * J(j + 1))}; }},
                {"S(j+1)-2tR", [&] { return std::pair{mm, (S(j + 1) - tm * R(j) * RatFunc(2)) / (J(j + 2) * J(j + 2))}; }},
                {"S-2tR(j-1)", [&] { return std::pair{mm, (S(j) - tm * R(j - 1) * RatFunc(2)) / (J(j + 1) * J(j + 1))}; }},
                {"R-tR(j-1)", [&] { return std::pair{mm, (R(j) - tm * R(j - 1)) / (J(j + 1) * J(j + 1))}; }},
                {"S=R+tR(j-1)", [&] { return std::pair{S(j), R(j) + tm * R(j - 1)}; }},
            };
            for (const auto& [name, fn] : ids) {
                run_check(out, "rs-relations", {{"m", num(m)}, {"j", num(j)}, {"identity", name}},
                          [&](std::string& e, std::string& a, Params&) {
                              if (m < 1) throw PreconditionError("m must be >= 1");
                              const auto [lhs, rhs] = fn();
                              e = lhs.to_string();
                              a = rhs.to_string();
                          });
            }
        }
    }
    return out;
}

Records suite_transforms(const SuiteBounds& b) {
    Records out;
    const long count = b.n_max.value_or(100);
    const auto order = static_cast<std::size_t>(b.order.value_or(15));
    RandomSource rs(7919);
    for (long i = 0; i < count; ++i) {
        const QuadTriple tq = rs.triple();
        const long kind = i % 3;
        PolyQ u;
        unsigned n = 1;
        if (kind == 0) {
            u = PolyQ(rs.nonzero_coefficient()) + rs.poly(1).shift_up(1);
        } else if (kind == 1) {
            u = rs.poly(2);
        } else {
            n = static_cast<unsigned>(rs.integer(2, 4));
        }
        const std::string name = kind == 0 ? "scale" : kind == 1 ? "shift" : "power";
        run_check(out, "transforms", {{"case", num(i)}, {"kind", name}}, [&, tq, u, n](std::string& e, std::string& a,
                                                                                     Params&) {
            const SeriesQ f = quad_solve_series(tq, order);
            QuadTriple moved;
            SeriesQ predicted = f;
            if (kind == 0) {
                moved = quad_scale(tq, u);
                predicted = (SeriesQ(u, order) * f).truncate(order);
            } else if (kind == 1) {
                moved = quad_shift(tq, u);
                predicted = f + SeriesQ(u, order);
            } else {
                moved = quad_power(tq, n);
                predicted = series_pow(f, n).truncate(order);
            }
            const SeriesQ resid = quad_residual(moved, predicted);
            e = predicted.to_string();
            a = resid.is_zero() ? quad_solve_series(moved, order).to_string() : "residual " + resid.to_string();
        });
    }
    return out;
}

using SuiteFn = std::function<Records(const SuiteBounds&)>;

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> r = {
        {"main-dets", suite_main_dets},
        {"cigler", suite_cigler},
        {"sumcc", suite_sumcc},
        {"hfrac-lemmas", suite_hfrac_lemmas},
        {"nextabc-q2", [](const SuiteBounds& b) { return suite_nextabc(b, StreamVariant::Q2); }},
        {"nextabc-q3", [](const SuiteBounds& b) { return suite_nextabc(b, StreamVariant::Q3); }},
        {"beta-lucas", suite_beta_lucas},
        {"fib-lucas-closed", suite_fib_lucas},
        {"odd-case", suite_odd_case},
        {"roundtrip", suite_roundtrip},
        {"zero-pattern", suite_zero_pattern},
        {"rs-relations", suite_rs_relations},
        {"transforms", suite_transforms},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "main-dets",  "cigler",           "sumcc",    "hfrac-lemmas", "nextabc-q2",   "nextabc-q3",   "beta-lucas",
        "fib-lucas-closed", "odd-case", "roundtrip", "zero-pattern", "rs-relations", "transforms"};
    return names;
}

bool is_suite(const std::string& name) { return registry().count(name) > 0; }

std::vector<CheckRecord> run_suite(const std::string& name, const SuiteBounds& bounds) {
    const auto it = registry().find(name);
    if (it == registry().end()) throw PreconditionError("unknown suite: " + name);
    return it->second(bounds);
}

}  // namespace narayana
