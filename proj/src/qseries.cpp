#include "narayana/qseries.hpp"

#include <algorithm>

namespace narayana {

namespace {

// Appends `coeff * q^d` in canonical text; `first` tracks leading sign handling.
void append_q_term(std::string& out, bool& first, const RatFunc& coeff, std::size_t d) {
    std::string text = coeff.to_string();
    bool neg = false;
    // A single signed term can absorb its sign into the joining operator.
    const bool compound = text.find(' ') != std::string::npos;
    if (!compound && text.front() == '-') {
        neg = true;
        text.erase(0, 1);
    }
    std::string term;
    if (d == 0) {
        term = text;
    } else {
        const std::string power = d == 1 ? "q" : "q^" + std::to_string(d);
        if (!compound && text == "1") {
            term = power;
        } else if (compound) {
            term = "(" + text + ")*" + power;
        } else {
            term = text + "*" + power;
        }
    }
    if (first) {
        out = neg ? "-" + term : term;
        first = false;
    } else {
        out += neg ? " - " : " + ";
        out += term;
    }
}

}  // namespace

// ---------------------------------------------------------------- PolyQ

PolyQ::PolyQ(const RatFunc& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
}

PolyQ::PolyQ(std::vector<RatFunc> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyQ::PolyQ(std::initializer_list<RatFunc> coeffs) : coeffs_(coeffs) { trim(); }

PolyQ PolyQ::monomial(const RatFunc& c, std::size_t degree) {
    PolyQ p;
    if (c.is_zero()) return p;
    p.coeffs_.assign(degree + 1, RatFunc());
    p.coeffs_[degree] = c;
    return p;
}

void PolyQ::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

long PolyQ::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return static_cast<long>(i);
    return -1;
}

RatFunc PolyQ::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : RatFunc(); }

PolyQ PolyQ::operator-() const {
    PolyQ r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<RatFunc> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return PolyQ(std::move(out));
}

PolyQ operator*(const PolyQ& a, const RatFunc& c) {
    if (c.is_zero()) return {};
    PolyQ r = a;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

PolyQ PolyQ::pow(unsigned e) const {
    PolyQ result(1);
    PolyQ base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

PolyQ PolyQ::shift_up(std::size_t e) const {
    if (is_zero() || e == 0) return *this;
    std::vector<RatFunc> out(e);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return PolyQ(std::move(out));
}

PolyQ PolyQ::div_q_pow(std::size_t e) const {
    if (is_zero() || e == 0) return *this;
    for (std::size_t i = 0; i < e; ++i)
        if (!coeff(i).is_zero()) throw MathError("polynomial not divisible by q^" + std::to_string(e));
    return PolyQ(std::vector<RatFunc>(coeffs_.begin() + static_cast<long>(e), coeffs_.end()));
}

PolyQ PolyQ::truncate(std::size_t n) const {
    if (coeffs_.size() <= n) return *this;
    return PolyQ(std::vector<RatFunc>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(n)));
}

std::string PolyQ::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t d = 0; d < coeffs_.size(); ++d)
        if (!coeffs_[d].is_zero()) append_q_term(out, first, coeffs_[d], d);
    return out;
}

PolyQ neg_q_pow(std::size_t e) { return PolyQ::monomial(RatFunc(e % 2 ? -1 : 1), e); }

// ---------------------------------------------------------------- SeriesQ

SeriesQ::SeriesQ(std::vector<RatFunc> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
    if (order == 0) throw PreconditionError("series truncation order must be at least 1");
    coeffs_.resize(order);
}

SeriesQ::SeriesQ(const PolyQ& p, std::size_t order) : SeriesQ(p.truncate(order).coeffs(), order) {}

const RatFunc& SeriesQ::coeff(std::size_t i) const {
    if (i >= coeffs_.size())
        throw MathError("coefficient q^" + std::to_string(i) + " beyond truncation order " +
                        std::to_string(coeffs_.size()));
    return coeffs_[i];
}

std::size_t SeriesQ::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return i;
    return coeffs_.size();
}

SeriesQ SeriesQ::truncate(std::size_t order) const {
    if (order > coeffs_.size())
        throw MathError("cannot raise truncation order from " + std::to_string(coeffs_.size()) + " to " +
                        std::to_string(order));
    return SeriesQ(std::vector<RatFunc>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order)), order);
}

PolyQ SeriesQ::to_poly() const { return PolyQ(coeffs_); }

SeriesQ SeriesQ::operator-() const {
    SeriesQ r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

SeriesQ operator+(const SeriesQ& a, const SeriesQ& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<RatFunc> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a.coeffs_[i] + b.coeffs_[i];
    return SeriesQ(std::move(out), n);
}

SeriesQ operator-(const SeriesQ& a, const SeriesQ& b) { return a + (-b); }

SeriesQ operator*(const SeriesQ& a, const SeriesQ& b) {
    const std::size_t va = a.valuation();
    const std::size_t vb = b.valuation();
    const std::size_t n = std::min(va + b.order(), vb + a.order());
    std::vector<RatFunc> out(n);
    for (std::size_t i = va; i < a.order() && i < n; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = vb; j < b.order() && i + j < n; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return SeriesQ(std::move(out), n);
}

SeriesQ operator*(const SeriesQ& a, const RatFunc& c) {
    SeriesQ r = a;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

std::string SeriesQ::to_string() const {
    std::string out;
    bool first = true;
    for (std::size_t d = 0; d < coeffs_.size(); ++d)
        if (!coeffs_[d].is_zero()) append_q_term(out, first, coeffs_[d], d);
    if (first) out = "0";
    return out + " + O(q^" + std::to_string(coeffs_.size()) + ")";
}

SeriesQ series_arith(const SeriesQ& a, const SeriesQ& b, SeriesOp op) {
    switch (op) {
        case SeriesOp::Add: return a + b;
        case SeriesOp::Sub: return a - b;
        case SeriesOp::Mul: return a * b;
    }
    throw PreconditionError("unknown series operation");
}

SeriesQ series_invert(const SeriesQ& a) {
    const RatFunc& c0 = a.coeff(0);
    if (c0.is_zero()) throw MathError("not a unit");
    const std::size_t n = a.order();
    const RatFunc inv0 = c0.inverse();
    std::vector<RatFunc> out(n);
    out[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        RatFunc acc;
        for (std::size_t i = 1; i <= k; ++i) {
            const RatFunc& ai = a.coeffs()[i];
            if (ai.is_zero() || out[k - i].is_zero()) continue;
            acc += ai * out[k - i];
        }
        out[k] = -(acc * inv0);
    }
    return SeriesQ(std::move(out), n);
}

SeriesQ series_shift(const SeriesQ& a, long e) {
    if (e == 0) return a;
    if (e > 0) {
        std::vector<RatFunc> out(static_cast<std::size_t>(e));
        out.insert(out.end(), a.coeffs().begin(), a.coeffs().end());
        return SeriesQ(std::move(out), a.order() + static_cast<std::size_t>(e));
    }
    const auto k = static_cast<std::size_t>(-e);
    if (k >= a.order())
        throw MathError("shift by q^" + std::to_string(e) + " exhausts truncation order " + std::to_string(a.order()));
    for (std::size_t i = 0; i < k; ++i)
        if (!a.coeffs()[i].is_zero()) throw MathError("not divisible by q^" + std::to_string(k));
    return SeriesQ(std::vector<RatFunc>(a.coeffs().begin() + static_cast<long>(k), a.coeffs().end()), a.order() - k);
}

SeriesQ series_pow(const SeriesQ& a, unsigned m) {
    SeriesQ result = SeriesQ::one(a.order());
    SeriesQ base = a;
    while (m) {
        if (m & 1u) result = result * base;
        m >>= 1u;
        if (m) base = base * base;
    }
    return result;
}

}  // namespace narayana
