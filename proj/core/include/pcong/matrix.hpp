#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pcong/valuation.hpp"

namespace pcong {

/// Square matrix of arbitrary-precision integers; dimension 0 is allowed.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    explicit IntegerMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, Integer(0)) {}
    /// Throws precondition_error unless the rows form a square array.
    explicit IntegerMatrix(const std::vector<std::vector<Integer>>& rows);

    static IntegerMatrix identity(std::size_t dim);
    static IntegerMatrix zero(std::size_t dim) { return IntegerMatrix(dim); }
    static IntegerMatrix scalar(std::size_t dim, const Integer& value);
    static IntegerMatrix diagonal(const std::vector<Integer>& entries);
    /// Companion matrix of X^d + a_1 X^(d−1) + … + a_d, given in display order {1, a_1, …, a_d}.
    static IntegerMatrix companion(const std::vector<Integer>& display_coefficients);

    std::size_t dim() const { return dim_; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
    Integer& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }

    Integer trace() const;
    std::vector<std::vector<Integer>> rows() const;

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Integer> a_;
};

}  // namespace pcong
