#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "narayana/exactnum.hpp"

namespace narayana {

/// Dense square matrix over Q(t), row-major.
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n) : n_(n), entries_(n * n) {}
    SquareMatrix(std::size_t n, std::vector<RatFunc> row_major);

    std::size_t size() const { return n_; }
    const RatFunc& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    RatFunc& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

private:
    std::size_t n_ = 0;
    std::vector<RatFunc> entries_;
};

/// Matrix whose (i, j) entry depends only on i + j.
class HankelMatrix {
public:
    /// Sequence values s_0 .. s_{2N-2}.
    HankelMatrix(std::size_t n, std::vector<RatFunc> sequence);

    std::size_t size() const { return n_; }
    const RatFunc& operator()(std::size_t i, std::size_t j) const { return seq_[i + j]; }
    SquareMatrix dense() const;

private:
    std::size_t n_;
    std::vector<RatFunc> seq_;
};

using EntryFn = std::function<RatFunc(long)>;

HankelMatrix build_hankel(const EntryFn& entry_fn, std::size_t size);

/// Exact determinant by fraction-free Bareiss elimination with row pivoting;
/// cofactor expansion for size <= 3. The empty matrix has determinant 1.
RatFunc det_exact(const SquareMatrix& m);
RatFunc det_exact(const HankelMatrix& m);

/// Hankel determinants of the leading sizes 0..max_size of one sequence.
std::vector<RatFunc> hankel_dets(const std::vector<RatFunc>& sequence, std::size_t max_size);

}  // namespace narayana
