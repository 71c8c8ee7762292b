#include "narayana/hfrac.hpp"

#include <algorithm>
#include <optional>

namespace narayana {

std::string PartialQuotient::to_string() const {
    return "k=" + std::to_string(k) + " v=" + v.to_string() + " u=" + u.to_string();
}

std::string to_string(HFracStatus s) {
    switch (s) {
        case HFracStatus::Complete: return "Complete";
        case HFracStatus::PrecisionExhausted: return "PrecisionExhausted";
        case HFracStatus::MaxTermsReached: return "MaxTermsReached";
    }
    return "?";
}

void HFraction::check_invariants() const {
    for (std::size_t j = 0; j < quotients.size(); ++j) {
        const auto& pq = quotients[j];
        if (pq.v.is_zero()) throw MathError("partial quotient " + std::to_string(j) + " has v = 0");
        const long bound = static_cast<long>(pq.k) + static_cast<long>(delta) - 2;
        if (pq.u.degree() > bound)
            throw MathError("partial quotient " + std::to_string(j) + " has deg(u) = " +
                            std::to_string(pq.u.degree()) + " > " + std::to_string(bound));
    }
}

HFraction hfrac_expand(const SeriesQ& input, unsigned delta, std::size_t max_terms) {
    if (delta < 1) throw PreconditionError("super fraction needs delta >= 1");
    if (input.is_zero()) throw MathError("cannot expand zero series");

    HFraction h;
    h.delta = delta;
    SeriesQ f = input;
    std::size_t base = 0;  // absolute degree at which the current level's series starts to matter
    for (;;) {
        const std::size_t ord = f.order();
        const std::size_t val = f.valuation();
        if (!h.quotients.empty() && val == ord) {
            h.status = ord >= delta + 1 ? HFracStatus::Complete : HFracStatus::PrecisionExhausted;
            h.consumed_order = base + ord;
            break;
        }
        if (h.quotients.size() >= max_terms) {
            h.status = HFracStatus::MaxTermsReached;
            h.consumed_order = base + val;
            break;
        }
        const std::size_t k = val;
        if (ord < 2 * k + delta) {
            h.status = HFracStatus::PrecisionExhausted;
            h.consumed_order = base + k;
            break;
        }
        const RatFunc lead = f.coeff(k);
        const SeriesQ e = series_invert(series_shift(f, -static_cast<long>(k))) * lead;
        std::vector<RatFunc> u(k + delta - 1);
        for (std::size_t i = 0; i < u.size(); ++i) u[i] = e.coeff(i + 1);
        PartialQuotient pq{static_cast<unsigned>(k), lead, PolyQ(std::move(u))};

        const std::size_t remaining = ord - 2 * k - delta;
        base += 2 * k + delta;
        if (remaining == 0) {
            h.quotients.push_back(std::move(pq));
            h.status = HFracStatus::PrecisionExhausted;
            h.consumed_order = base;
            break;
        }
        const SeriesQ rest = SeriesQ(PolyQ(1) + pq.u.shift_up(1), e.order()) - e;
        f = series_shift(rest, -static_cast<long>(k + delta));
        h.quotients.push_back(std::move(pq));
    }
    h.check_invariants();
    return h;
}

SeriesQ hfrac_eval(const HFraction& h, std::size_t order) {
    if (order == 0) throw PreconditionError("evaluation order must be at least 1");
    // level j only matters to order minus sum_{i<j} (2 k_i + delta)
    std::vector<std::size_t> level_order;
    std::size_t need = order;
    for (const auto& pq : h.quotients) {
        if (need == 0) break;
        level_order.push_back(need);
        const std::size_t used = 2 * pq.k + h.delta;
        need = need > used ? need - used : 0;
    }
    std::optional<SeriesQ> tail;  // empty when it cannot reach the requested order
    if (need > 0) tail = SeriesQ::zero(need);
    for (std::size_t j = level_order.size(); j-- > 0;) {
        const auto& pq = h.quotients[j];
        const std::size_t ord = level_order[j];
        if (ord <= pq.k) {
            tail = SeriesQ::zero(ord);
            continue;
        }
        // 1 + u q - q^(k+delta) tail, to order ord - k
        const std::size_t den_ord = ord - pq.k;
        SeriesQ denom(PolyQ(1) + pq.u.shift_up(1), den_ord);
        if (tail) denom = denom - series_shift(*tail, static_cast<long>(pq.k + h.delta)).truncate(den_ord);
        tail = series_shift(series_invert(denom) * pq.v, static_cast<long>(pq.k)).truncate(ord);
    }
    return tail ? *tail : SeriesQ::zero(order);
}

RatFunc HankelReconstruction::at(std::size_t index) const {
    if (index > determined_through)
        throw PreconditionError("Hankel determinant of size " + std::to_string(index) +
                                " is beyond the reconstructed range " + std::to_string(determined_through));
    for (const auto& hv : values)
        if (hv.index == index) return hv.value;
    return {};
}

HankelReconstruction hankel_from_hfrac(const HFraction& h, std::size_t max_index) {
    if (h.delta != 2) throw PreconditionError("Hankel determinants need an H-fraction (delta = 2)");
    HankelReconstruction out;
    std::size_t s = 0;
    unsigned long eps = 0;
    RatFunc prod(1);      // prod_{i<j} v_i^{s_j - s_i}
    RatFunc v_prefix(1);  // prod_{i<j} v_i
    out.values.push_back({0, RatFunc(1)});
    for (const auto& pq : h.quotients) {
        const std::size_t step = pq.k + 1;
        v_prefix *= pq.v;
        prod *= v_prefix.pow(static_cast<long>(step));
        s += step;
        eps += static_cast<unsigned long>(pq.k) * (pq.k + 1) / 2;
        if (s > max_index) break;
        out.values.push_back({s, eps % 2 ? -prod : prod});
    }
    out.determined_through = h.status == HFracStatus::Complete ? max_index : std::min(max_index, s);
    return out;
}

}  // namespace narayana
