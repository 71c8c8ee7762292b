#include "narayana/hankel.hpp"

#include <string>
#include <utility>

namespace narayana {

SquareMatrix::SquareMatrix(std::size_t n, std::vector<RatFunc> row_major) : n_(n), entries_(std::move(row_major)) {
    if (entries_.size() != n * n) throw PreconditionError("matrix entry count does not match size");
}

HankelMatrix::HankelMatrix(std::size_t n, std::vector<RatFunc> sequence) : n_(n), seq_(std::move(sequence)) {
    const std::size_t need = n == 0 ? 0 : 2 * n - 1;
    if (seq_.size() < need)
        throw PreconditionError("Hankel matrix of size " + std::to_string(n) + " needs " + std::to_string(need) +
                                " sequence terms");
    seq_.resize(need);
}

SquareMatrix HankelMatrix::dense() const {
    SquareMatrix d(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) d(i, j) = seq_[i + j];
    return d;
}

HankelMatrix build_hankel(const EntryFn& entry_fn, std::size_t size) {
    std::vector<RatFunc> seq;
    if (size > 0) {
        seq.reserve(2 * size - 1);
        for (std::size_t k = 0; k + 1 < 2 * size; ++k) seq.push_back(entry_fn(static_cast<long>(k)));
    }
    return HankelMatrix(size, std::move(seq));
}

namespace {

RatFunc det_small(const SquareMatrix& m) {
    switch (m.size()) {
        case 0: return RatFunc(1);
        case 1: return m(0, 0);
        case 2: return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        default: {
            RatFunc acc;
            for (std::size_t j = 0; j < 3; ++j) {
                const RatFunc minor = m(1, (j + 1) % 3) * m(2, (j + 2) % 3) - m(1, (j + 2) % 3) * m(2, (j + 1) % 3);
                acc += m(0, j) * minor;
            }
            return acc;
        }
    }
}

}  // namespace

RatFunc det_exact(const SquareMatrix& input) {
    const std::size_t n = input.size();
    if (n <= 3) return det_small(input);
    SquareMatrix a = input;
    bool negate = false;
    RatFunc prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && a(r, k).is_zero()) ++r;
            if (r == n) return RatFunc();
            for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(r, j));
            negate = !negate;
        }
        const RatFunc pivot = a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                RatFunc v = a(i, j) * pivot - a(i, k) * a(k, j);
                a(i, j) = prev.is_one() ? std::move(v) : v / prev;
            }
            a(i, k) = RatFunc();
        }
        prev = pivot;
    }
    const RatFunc& d = a(n - 1, n - 1);
    return negate ? -d : d;
}

RatFunc det_exact(const HankelMatrix& m) { return det_exact(m.dense()); }

std::vector<RatFunc> hankel_dets(const std::vector<RatFunc>& sequence, std::size_t max_size) {
    std::vector<RatFunc> out;
    out.reserve(max_size + 1);
    for (std::size_t n = 0; n <= max_size; ++n) out.push_back(det_exact(HankelMatrix(n, sequence)));
    return out;
}

}  // namespace narayana
